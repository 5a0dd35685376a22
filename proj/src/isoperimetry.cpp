#include "isoprofile/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "isoprofile/errors.hpp"

namespace isoprofile {
namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

/// Minimal boundary per exact volume, with one witness set each.
struct VolumeTable {
  explicit VolumeTable(std::int64_t cap)
      : best_boundary(static_cast<std::size_t>(cap + 1), kNone), witness(static_cast<std::size_t>(cap + 1)) {}

  template <class Members>
  void offer(std::int64_t volume, std::int64_t boundary, Members&& members) {
    if (boundary < best_boundary[volume]) {
      best_boundary[volume] = boundary;
      witness[volume] = members();
    }
  }

  IsoperimetricProfile finish(std::int64_t cap, std::int64_t reported_cap) {
    std::vector<IsoperimetricProfile::Step> steps;
    for (std::int64_t vol = 1; vol <= cap; ++vol) {
      const std::int64_t b = best_boundary[vol];
      if (b == kNone) continue;
      // b / vol < best.b / best.vol
      if (!steps.empty()) {
        const auto& last = steps.back();
        if (Rational(b, vol) >= last.ratio) continue;
      }
      auto members = witness[vol];
      std::sort(members.begin(), members.end());
      steps.push_back({vol, Rational(b, vol), std::move(members)});
    }
    return IsoperimetricProfile(reported_cap, std::move(steps));
  }

  std::vector<std::int64_t> best_boundary;
  std::vector<std::vector<Vertex>> witness;
};

std::int64_t clamp_cap(const Graph& g, std::int64_t volume_cap) {
  if (volume_cap < 1) throw DomainError("volume cap must be positive");
  return std::min(volume_cap, g.total_volume());
}

class ConnectedEnumerator {
 public:
  ConnectedEnumerator(const Graph& g, std::int64_t cap, std::uint64_t budget, VolumeTable& table)
      : g_(g), cap_(cap), budget_(budget), table_(table),
        in_set_(g.vertex_count(), 0), adjacent_count_(g.vertex_count(), 0) {}

  void run() {
    for (Vertex root = 0; root < static_cast<Vertex>(g_.vertex_count()); ++root) {
      if (g_.degree(root) > cap_) continue;
      root_ = root;
      add(root);
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(root))
        if (u > root) ext.push_back(u);
      extend(std::move(ext));
      remove(root);
    }
  }

 private:
  void add(Vertex w) {
    boundary_ += g_.degree(w) - 2 * adjacent_count_[w];
    volume_ += g_.degree(w);
    in_set_[w] = 1;
    members_.push_back(w);
    for (Vertex u : g_.neighbors(w)) ++adjacent_count_[u];
  }

  void remove(Vertex w) {
    for (Vertex u : g_.neighbors(w)) --adjacent_count_[u];
    members_.pop_back();
    in_set_[w] = 0;
    volume_ -= g_.degree(w);
    boundary_ -= g_.degree(w) - 2 * adjacent_count_[w];
  }

  void extend(std::vector<Vertex> ext) {
    if (++visited_ > budget_)
      throw BudgetError("connected-subset enumeration exceeded budget of " + std::to_string(budget_) + " sets");
    table_.offer(volume_, boundary_, [&] { return members_; });
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      if (volume_ + g_.degree(w) > cap_) continue;
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w))
        if (u > root_ && !in_set_[u] && adjacent_count_[u] == 0) next.push_back(u);
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  const Graph& g_;
  std::int64_t cap_;
  std::uint64_t budget_;
  VolumeTable& table_;
  std::vector<char> in_set_;
  std::vector<int> adjacent_count_;
  std::vector<Vertex> members_;
  Vertex root_ = 0;
  std::int64_t volume_ = 0;
  std::int64_t boundary_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::optional<Rational> IsoperimetricProfile::at(std::int64_t n) const {
  if (n > volume_cap_) throw DomainError("volume " + std::to_string(n) + " beyond tabulated cap");
  std::optional<Rational> out;
  for (const auto& step : steps_) {
    if (step.volume > n) break;
    out = step.ratio;
  }
  return out;
}

IsoperimetricProfile isoperimetric_profile_exhaustive(const Graph& g, std::int64_t volume_cap) {
  const std::size_t n = g.vertex_count();
  if (n > kExhaustiveVertexLimit)
    throw BudgetError("exhaustive isoperimetry limited to " + std::to_string(kExhaustiveVertexLimit) + " vertices");
  const std::int64_t cap = clamp_cap(g, volume_cap);
  VolumeTable table(cap);

  std::vector<int> inside_neighbors(n, 0);
  std::uint32_t mask = 0;
  std::int64_t volume = 0, boundary = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const std::uint32_t bit = std::uint32_t{1} << v;
    const int sign = (mask & bit) ? -1 : 1;
    if (sign > 0) {
      boundary += g.degree(v) - 2 * inside_neighbors[v];
      volume += g.degree(v);
    } else {
      volume -= g.degree(v);
      boundary -= g.degree(v) - 2 * inside_neighbors[v];
    }
    mask ^= bit;
    for (Vertex u : g.neighbors(v)) inside_neighbors[u] += sign;
    if (volume <= cap) {
      table.offer(volume, boundary, [&] {
        std::vector<Vertex> members;
        for (std::size_t u = 0; u < n; ++u)
          if (mask & (std::uint32_t{1} << u)) members.push_back(static_cast<Vertex>(u));
        return members;
      });
    }
  }
  return table.finish(cap, volume_cap);
}

IsoperimetricProfile isoperimetric_profile_connected(const Graph& g, std::int64_t volume_cap,
                                                     std::uint64_t budget) {
  const std::int64_t cap = clamp_cap(g, volume_cap);
  VolumeTable table(cap);
  ConnectedEnumerator(g, cap, budget, table).run();
  return table.finish(cap, volume_cap);
}

IsoperimetricProfile isoperimetric_profile_bruteforce(const Graph& g, std::int64_t volume_cap,
                                                      std::uint64_t budget) {
  if (g.vertex_count() <= kExhaustiveVertexLimit) return isoperimetric_profile_exhaustive(g, volume_cap);
  return isoperimetric_profile_connected(g, volume_cap, budget);
}

}  // namespace isoprofile
