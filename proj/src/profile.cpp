#include "isoprofile/profile.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"
#include "isoprofile/walk.hpp"

namespace isoprofile {

std::string ProfileTable::to_csv() const {
  std::string out = "m,tv,dstar,hstar\n";
  char line[128];
  for (const auto& e : entries_) {
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n", e.m, e.tv, e.dstar, e.hstar);
    out += line;
  }
  return out;
}

ProfileTable compute_profiles(const Graph& g, int n, const ProfileOptions& options) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  const std::size_t size = g.vertex_count();
  const bool hinted = !options.transitive_pairs.empty();

  std::vector<Vertex> sources;
  std::vector<Edge> pairs;
  if (hinted) {
    for (const auto& [u, v] : options.transitive_pairs) {
      if (!g.adjacent(u, v))
        throw DomainError("transitive hint (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
      sources.push_back(u);
      sources.push_back(v);
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    pairs = options.transitive_pairs;
  } else {
    sources.resize(size);
    for (std::size_t v = 0; v < size; ++v) sources[v] = static_cast<Vertex>(v);
    pairs = g.edges();
  }
  if (sources.size() > options.max_dense_sources)
    throw BudgetError("profile needs " + std::to_string(sources.size()) +
                      " simultaneous rows; pass a transitive hint or raise the limit");

  std::vector<std::size_t> slot_of(size, 0);
  for (std::size_t s = 0; s < sources.size(); ++s) slot_of[sources[s]] = s;

  const std::size_t count = sources.size();
  std::vector<double> rows(count * size, 0.0), next(count * size, 0.0);
  for (std::size_t s = 0; s < count; ++s) rows[s * size + sources[s]] = 1.0;

  std::vector<int> dist;
  if (options.displacement) {
    dist.resize(count * size);
    parallel_for(count, [&](std::size_t s) {
      const auto d = bfs_distances(g, sources[s]);
      std::copy(d.begin(), d.end(), dist.begin() + static_cast<std::ptrdiff_t>(s * size));
    });
  }

  auto row = [&](std::vector<double>& buf, std::size_t s) {
    return std::span<double>(buf.data() + s * size, size);
  };

  std::vector<double> ent(count, 0.0), disp(count, 0.0), pair_tv(pairs.size(), 0.0);
  std::vector<ProfileEntry> entries;
  entries.reserve(static_cast<std::size_t>(n) + 1);
  double dstar = 0.0, hstar = 0.0;
  for (int m = 0; m <= n; ++m) {
    if (options.entropy || options.displacement) {
      parallel_for(count, [&](std::size_t s) {
        const auto r = row(rows, s);
        if (options.entropy) ent[s] = entropy(r);
        if (options.displacement)
          disp[s] = expectation(r, std::span<const int>(dist.data() + s * size, size));
      });
    }
    ProfileEntry e;
    e.m = m;
    if (options.tv && !pairs.empty()) {
      parallel_for(pairs.size(), [&](std::size_t i) {
        pair_tv[i] = tv_distance(row(rows, slot_of[pairs[i].first]), row(rows, slot_of[pairs[i].second]));
      });
      e.tv = *std::max_element(pair_tv.begin(), pair_tv.end());
    }
    for (std::size_t s = 0; s < count; ++s) {
      if (options.displacement) dstar = std::max(dstar, disp[s]);
      if (options.entropy) hstar = std::max(hstar, ent[s]);
    }
    e.dstar = dstar;
    e.hstar = hstar;
    entries.push_back(e);

    if (m == n) break;
    parallel_for(count, [&](std::size_t s) { lazy_step_into(g, row(rows, s), row(next, s)); });
    rows.swap(next);
  }
  return ProfileTable(std::move(entries), hinted ? TvScope::HintedPairs : TvScope::AllNeighborPairs);
}

ProfileTable tv_profile(const Graph& g, int n, std::span<const Edge> transitive_pairs) {
  ProfileOptions options;
  options.transitive_pairs.assign(transitive_pairs.begin(), transitive_pairs.end());
  options.displacement = false;
  options.entropy = false;
  return compute_profiles(g, n, options);
}

ProfileTable displacement_profile(const Graph& g, int n) {
  ProfileOptions options;
  options.tv = false;
  options.entropy = false;
  return compute_profiles(g, n, options);
}

ProfileTable entropy_profile(const Graph& g, int n) {
  ProfileOptions options;
  options.tv = false;
  options.displacement = false;
  return compute_profiles(g, n, options);
}

}  // namespace isoprofile
