#include "isoprofile/tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"
#include "isoprofile/rng.hpp"
#include "isoprofile/walk.hpp"

namespace isoprofile {

double MaxDispDistribution::total(int m) const {
  CompensatedSum sum;
  for (double p : mass_[m]) sum.add(p);
  return sum.value();
}

std::vector<double> MaxDispDistribution::vertex_marginal(int m) const {
  const std::size_t k = levels_.size();
  std::vector<double> out(n_, 0.0);
  for (std::size_t v = 0; v < n_; ++v) {
    CompensatedSum sum;
    for (std::size_t l = 0; l < k; ++l) sum.add(mass_[m][v * k + l]);
    out[v] = sum.value();
  }
  return out;
}

double MaxDispDistribution::tail(int m, double r) const {
  const std::size_t k = levels_.size();
  const auto first = static_cast<std::size_t>(std::lower_bound(levels_.begin(), levels_.end(), r) - levels_.begin());
  CompensatedSum sum;
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t l = first; l < k; ++l) sum.add(mass_[m][v * k + l]);
  return sum.value();
}

double MaxDispDistribution::expected_max(int m) const {
  const std::size_t k = levels_.size();
  CompensatedSum sum;
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t l = 0; l < k; ++l) sum.add(mass_[m][v * k + l] * levels_[l]);
  return sum.value();
}

MaxDispDistribution max_disp_dp(const Graph& g, const MetricTable& d, Vertex x, int n, std::size_t state_budget) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  const std::size_t size = g.vertex_count();
  if (d.vertex_count() != size) throw DomainError("metric and graph sizes differ");

  std::vector<double> levels(size);
  for (std::size_t v = 0; v < size; ++v) levels[v] = d(x, static_cast<Vertex>(v));
  levels.push_back(0.0);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const std::size_t k = levels.size();
  if (size * k > state_budget)
    throw BudgetError("max-displacement state space " + std::to_string(size * k) + " exceeds budget " +
                      std::to_string(state_budget));

  std::vector<std::size_t> level_of(size);
  for (std::size_t v = 0; v < size; ++v)
    level_of[v] = static_cast<std::size_t>(
        std::lower_bound(levels.begin(), levels.end(), d(x, static_cast<Vertex>(v))) - levels.begin());

  std::vector<std::vector<double>> mass;
  mass.reserve(static_cast<std::size_t>(n) + 1);
  mass.emplace_back(size * k, 0.0);
  mass[0][static_cast<std::size_t>(x) * k + level_of[x]] = 1.0;
  for (int m = 1; m <= n; ++m) {
    const auto& cur = mass.back();
    std::vector<double> next(size * k, 0.0);
    for (std::size_t v = 0; v < size; ++v) {
      const auto vv = static_cast<Vertex>(v);
      const double share = 0.5 / g.degree(vv);
      for (std::size_t l = 0; l < k; ++l) {
        const double p = cur[v * k + l];
        if (p == 0.0) continue;
        next[v * k + l] += 0.5 * p;
        for (Vertex w : g.neighbors(vv)) next[static_cast<std::size_t>(w) * k + std::max(l, level_of[w])] += share * p;
      }
    }
    mass.push_back(std::move(next));
  }
  return MaxDispDistribution(x, size, std::move(levels), std::move(mass));
}

int tail_degree_bound(const Graph& g) { return std::max(2, g.max_degree()); }

namespace {

std::vector<MaxDispDistribution> dp_all_sources(const Graph& g, const MetricTable& d, int n) {
  std::vector<std::optional<MaxDispDistribution>> slots(g.vertex_count());
  parallel_for(g.vertex_count(), [&](std::size_t x) { slots[x] = max_disp_dp(g, d, static_cast<Vertex>(x), n); });
  std::vector<MaxDispDistribution> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<AuditRecord> audit_lemma_tail(const Graph& g, const MetricTable& d, int n,
                                          std::span<const double> lambdas) {
  if (n < 1) throw DomainError("tail lemma needs n >= 1");
  const auto dps = dp_all_sources(g, d, n);
  double S = 0.0;
  for (const auto& dp : dps) S = std::max(S, dp.expected_max(n));
  const int M = tail_degree_bound(g);

  std::vector<AuditRecord> records;
  for (double lambda : lambdas) {
    if (!(lambda >= 1.0)) throw DomainError("tail lemma needs lambda >= 1");
    const double bound = std::exp(-std::floor(lambda / (M + std::numbers::e)));
    double worst = 0.0;
    Vertex worst_source = 0;
    for (const auto& dp : dps) {
      const double tail = dp.tail(n, lambda * S);
      if (tail > worst) {
        worst = tail;
        worst_source = dp.source();
      }
    }
    AuditRecord r;
    r.statement_id = "lemma-tail";
    r.parameters = {{"metric", d.provenance()}, {"n", n}, {"lambda", lambda}, {"S", S}, {"M", M},
                    {"worst_source", worst_source}};
    r.lhs = worst;
    r.rhs = bound;
    r.pass = worst <= bound;
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<AuditRecord> audit_triangle_lemma(const Graph& g, const MetricTable& d, int n,
                                              std::span<const double> radii) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  const auto dps = dp_all_sources(g, d, n);
  // Marginals at every step, per source.
  std::vector<std::vector<std::vector<double>>> marginals(dps.size());
  for (std::size_t x = 0; x < dps.size(); ++x)
    for (int m = 0; m <= n; ++m) marginals[x].push_back(dps[x].vertex_marginal(m));

  std::vector<AuditRecord> records;
  for (double r : radii) {
    double lhs = 0.0, max_tail = 0.0;
    for (std::size_t x = 0; x < dps.size(); ++x) {
      for (int m = 0; m <= n; ++m) {
        CompensatedSum sum;
        for (std::size_t y = 0; y < g.vertex_count(); ++y)
          if (d(static_cast<Vertex>(x), static_cast<Vertex>(y)) >= r) sum.add(marginals[x][m][y]);
        lhs = std::max(lhs, sum.value());
      }
      max_tail = std::max(max_tail, dps[x].tail(n, 2.0 * r));
    }
    AuditRecord rec;
    rec.statement_id = "triangle-lemma";
    rec.parameters = {{"metric", d.provenance()}, {"n", n}, {"r", r}};
    rec.lhs = lhs;
    rec.rhs = 0.5 * max_tail;
    rec.pass = rec.lhs >= rec.rhs;
    records.push_back(std::move(rec));
  }
  return records;
}

AuditRecord audit_expectation_median(const Graph& g, const MetricTable& d, int n) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  const auto dps = dp_all_sources(g, d, n);
  double numerator = 0.0, denominator = 0.0;
  for (std::size_t x = 0; x < dps.size(); ++x) {
    for (int m = 0; m <= n; ++m) {
      const auto marginal = dps[x].vertex_marginal(m);
      CompensatedSum sum;
      for (std::size_t y = 0; y < marginal.size(); ++y)
        sum.add(marginal[y] * d(static_cast<Vertex>(x), static_cast<Vertex>(y)));
      numerator = std::max(numerator, sum.value());
    }
    denominator = std::max(denominator, dps[x].expected_max(n));
  }
  const double rho = denominator > 0.0 ? numerator / denominator : 1.0;
  const double M = tail_degree_bound(g);
  AuditRecord rec;
  rec.statement_id = "expectation-median";
  rec.parameters = {{"metric", d.provenance()}, {"n", n}, {"rho", rho}};
  rec.lhs = numerator;
  rec.rhs = denominator;
  rec.pass = rho <= 1.0 + 1e-12;
  rec.witness = rho * M * std::log(M);
  return rec;
}

Json UpperTailAudit::to_json() const {
  Json out{{"records", isoprofile::to_json(records)}, {"monotone", monotone}, {"vanishes", vanishes},
           {"pass", pass()}};
  out["fitted_c"] = fitted_c ? Json(*fitted_c) : Json(nullptr);
  return out;
}

UpperTailAudit audit_theorem_upper_tail(const Graph& g, Vertex x, int n, std::span<const double> lambdas,
                                        const ProfileTable& profile) {
  if (n < 1) throw DomainError("upper tail audit needs n >= 1");
  if (profile.horizon() < n) throw DomainError("profile horizon shorter than n");
  const double dstar = profile.at(n).dstar;
  const double info_scale = profile.at(n).hstar + std::log(static_cast<double>(n));
  const auto row = distribution_at(g, x, n);
  const auto dist = bfs_distances(g, x);

  auto displacement_tail = [&](double lambda) {
    CompensatedSum sum;
    for (std::size_t y = 0; y < row.mass.size(); ++y)
      if (row.mass[y] > 0.0 && dist[y] >= lambda * dstar) sum.add(row.mass[y]);
    return sum.value();
  };
  double max_info = 0.0;
  for (double p : row.mass)
    if (p > 0.0) max_info = std::max(max_info, -std::log(p));
  auto information_tail = [&](double lambda) {
    CompensatedSum sum;
    for (double p : row.mass)
      if (p > 0.0 && -std::log(p) >= lambda * info_scale) sum.add(p);
    return sum.value();
  };

  std::vector<double> grid(lambdas.begin(), lambdas.end());
  std::sort(grid.begin(), grid.end());
  UpperTailAudit audit;
  double prev_disp = 1.0, prev_info = 1.0;
  for (double lambda : grid) {
    if (!(lambda >= 1.0)) throw DomainError("upper tail audit needs lambda >= 1");
    const double disp = displacement_tail(lambda);
    const double info = information_tail(lambda);
    audit.monotone = audit.monotone && disp <= prev_disp && info <= prev_info;
    prev_disp = disp;
    prev_info = info;
    for (const auto& [kind, tail] : {std::pair{"displacement", disp}, std::pair{"information", info}}) {
      AuditRecord rec;
      rec.statement_id = std::string("upper-tail-") + kind;
      rec.parameters = {{"x", x}, {"n", n}, {"lambda", lambda}, {"dstar", dstar}, {"hstar", profile.at(n).hstar}};
      rec.lhs = tail;
      rec.rhs = std::numeric_limits<double>::quiet_NaN();
      if (tail > 0.0) {
        const double c = -std::log(tail) / lambda;
        rec.witness = c;
        audit.fitted_c = audit.fitted_c ? std::min(*audit.fitted_c, c) : c;
      }
      audit.records.push_back(std::move(rec));
    }
  }
  // Walks move at most n, and information is bounded on the finite support.
  if (dstar > 0.0) audit.vanishes = audit.vanishes && displacement_tail((n + 1) / dstar) == 0.0;
  if (info_scale > 0.0) audit.vanishes = audit.vanishes && information_tail((max_info + 1.0) / info_scale) == 0.0;
  return audit;
}

McEstimate wilson_interval(std::uint64_t hits, std::uint64_t samples, double z) {
  McEstimate out;
  out.samples = samples;
  out.hits = hits;
  if (samples == 0) return out;
  const double nn = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
  out.estimate = p;
  out.lower = std::max(0.0, centre - half);
  out.upper = std::min(1.0, centre + half);
  return out;
}

McEstimate mc_tail(const Graph& g, const MetricTable& d, Vertex x, int n, double threshold, std::uint64_t samples,
                   std::uint64_t seed) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    Engine eng(derive_seed(seed, c));
    const std::uint64_t begin = c * kChunk, end = std::min(samples, begin + kChunk);
    for (std::uint64_t s = begin; s < end; ++s) {
      Vertex v = x;
      double running = d(x, x);
      for (int m = 0; m < n; ++m) {
        v = lazy_move(g, v, eng);
        running = std::max(running, d(x, v));
      }
      if (running >= threshold) ++hits[c];
    }
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  return wilson_interval(total, samples);
}

}  // namespace isoprofile
