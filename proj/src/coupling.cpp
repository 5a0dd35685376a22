#include "isoprofile/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"
#include "isoprofile/rng.hpp"

namespace isoprofile {

double GoodEventLaw::density(Vertex z) const {
  const auto it = std::lower_bound(support.begin(), support.end(), z);
  if (it == support.end() || *it != z) return 0.0;
  return prob[static_cast<std::size_t>(it - support.begin())];
}

double GoodEventLaw::max_density() const {
  return prob.empty() ? 0.0 : *std::max_element(prob.begin(), prob.end());
}

GoodEventLaw GoodEventLaw::from_dense(Vertex source, std::span<const double> weights) {
  GoodEventLaw law;
  law.source = source;
  CompensatedSum total;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("law weights must be finite and nonnegative");
    total.add(w);
  }
  if (!(total.value() > 0.0)) throw DegeneracyError("law has zero total mass");
  for (std::size_t z = 0; z < weights.size(); ++z)
    if (weights[z] > 0.0) {
      law.support.push_back(static_cast<Vertex>(z));
      law.prob.push_back(weights[z] / total.value());
    }
  return law;
}

GoodEventLaw good_event_law(const DistributionRow& row, std::span<const int> dist_from_source, double lambda,
                            const ProfileEntry& at_n) {
  if (!(lambda >= 1.0)) throw DomainError("good event needs lambda >= 1");
  GoodEventLaw law;
  law.source = row.source;
  law.n = row.step;
  law.lambda = lambda;
  const bool unconditioned = std::isinf(lambda);
  law.log_size_bound = unconditioned ? lambda : lambda * (at_n.hstar + std::log(row.step + 1.0));
  const double radius = lambda * at_n.dstar;
  CompensatedSum good, bad;
  std::vector<double> kept;
  for (std::size_t y = 0; y < row.mass.size(); ++y) {
    const double p = row.mass[y];
    if (p <= 0.0) continue;
    if (unconditioned || (dist_from_source[y] <= radius && -std::log(p) <= law.log_size_bound)) {
      law.support.push_back(static_cast<Vertex>(y));
      kept.push_back(p);
      good.add(p);
    } else {
      bad.add(p);
    }
  }
  if (!(good.value() > 0.0))
    throw DegeneracyError("good event has zero mass at source " + std::to_string(row.source));
  law.bad_mass = bad.value();
  law.prob.resize(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) law.prob[i] = kept[i] / good.value();
  return law;
}

GoodEventLaw good_event_law(const Graph& g, Vertex x, int n, double lambda, const ProfileTable& profile) {
  if (profile.horizon() < n) throw DomainError("profile horizon shorter than n");
  return good_event_law(distribution_at(g, x, n), bfs_distances(g, x), lambda, profile.at(n));
}

std::vector<GoodEventLaw> good_event_laws(const Graph& g, int n, double lambda, const ProfileTable& profile) {
  if (profile.horizon() < n) throw DomainError("profile horizon shorter than n");
  std::vector<GoodEventLaw> laws(g.vertex_count());
  parallel_for(g.vertex_count(), [&](std::size_t x) {
    laws[x] = good_event_law(g, static_cast<Vertex>(x), n, lambda, profile);
  });
  return laws;
}

namespace {

/// Engine over a counter stream, so proposal k is computable on its own.
struct CounterEngine {
  using result_type = std::uint64_t;
  std::uint64_t seed;
  std::uint64_t next = 0;
  result_type operator()() { return counter_bits(seed, next++); }
};

struct Proposal {
  Vertex point;
  double level;  // uniform on [0, 1), scaled by c* at use
};

Proposal proposal(std::uint64_t seed, std::uint64_t k, std::size_t vertex_count) {
  CounterEngine eng{derive_seed(seed, k)};
  const auto point = static_cast<Vertex>(uniform_below(eng, vertex_count));
  return {point, unit_from_bits(eng())};
}

}  // namespace

CouplingSample simultaneous_coupling(std::span<const GoodEventLaw> laws, std::size_t vertex_count,
                                     std::uint64_t seed, std::uint64_t proposal_cap) {
  double envelope = 0.0;
  for (const auto& law : laws) {
    if (!law.support.empty() && static_cast<std::size_t>(law.support.back()) >= vertex_count)
      throw DomainError("law support outside the vertex set");
    envelope = std::max(envelope, law.max_density());
  }
  CouplingSample sample;
  sample.seed = seed;
  sample.accepted.assign(laws.size(), 0);
  sample.endpoint.assign(laws.size(), 0);
  parallel_for(laws.size(), [&](std::size_t x) {
    const auto& law = laws[x];
    if (law.support.empty()) throw DegeneracyError("empty law at vertex " + std::to_string(x));
    for (std::uint64_t k = 0; k < proposal_cap; ++k) {
      const auto [z, level] = proposal(seed, k, vertex_count);
      if (level * envelope < law.density(z)) {
        sample.accepted[x] = k;
        sample.endpoint[x] = z;
        return;
      }
    }
    throw BudgetError("coupling exceeded the proposal cap at vertex " + std::to_string(x));
  });
  std::unordered_map<std::uint64_t, std::size_t> index;
  sample.cell_of.resize(laws.size());
  for (std::size_t x = 0; x < laws.size(); ++x) {
    const auto [it, fresh] = index.try_emplace(sample.accepted[x], sample.cells.size());
    if (fresh) {
      sample.cells.emplace_back();
      sample.cell_endpoint.push_back(sample.endpoint[x]);
    }
    sample.cells[it->second].push_back(static_cast<Vertex>(x));
    sample.cell_of[x] = it->second;
  }
  return sample;
}

double coupling_pairwise_exact(const GoodEventLaw& f, const GoodEventLaw& g) {
  CompensatedSum lo, hi;
  std::size_t i = 0, j = 0;
  while (i < f.support.size() || j < g.support.size()) {
    if (j == g.support.size() || (i < f.support.size() && f.support[i] < g.support[j])) {
      hi.add(f.prob[i++]);
    } else if (i == f.support.size() || g.support[j] < f.support[i]) {
      hi.add(g.prob[j++]);
    } else {
      lo.add(std::min(f.prob[i], g.prob[j]));
      hi.add(std::max(f.prob[i], g.prob[j]));
      ++i;
      ++j;
    }
  }
  return hi.value() == 0.0 ? 0.0 : std::max(0.0, 1.0 - lo.value() / hi.value());
}

namespace {

template <class T, class Row>
TvConditioningReport<T> conditioning_report(const Row& p, const Row& q, const VertexSet& a, const VertexSet& b) {
  if (p.size() != q.size()) throw DomainError("rows have different lengths");
  T pa = 0, qb = 0, pq = 0;
  for (std::size_t z = 0; z < p.size(); ++z) {
    const auto v = static_cast<Vertex>(z);
    if (a.contains(v)) pa += p[z];
    if (b.contains(v)) qb += q[z];
    pq += p[z] > q[z] ? p[z] - q[z] : q[z] - p[z];
  }
  if (!(pa > 0) || !(qb > 0)) throw DomainError("conditioning on a set of zero mass");
  T cond = 0;
  for (std::size_t z = 0; z < p.size(); ++z) {
    const auto v = static_cast<Vertex>(z);
    const T left = a.contains(v) ? T(p[z] / pa) : T(0);
    const T right = b.contains(v) ? T(q[z] / qb) : T(0);
    cond += left > right ? left - right : right - left;
  }
  TvConditioningReport<T> report{cond / 2, pq / 2 + (1 - pa) + (1 - qb)};
  report.pass = report.lhs <= report.rhs;
  return report;
}

}  // namespace

TvConditioningReport<Rational> tv_conditioning_audit(const ExactRow& p, const ExactRow& q, const VertexSet& a,
                                                     const VertexSet& b) {
  return conditioning_report<Rational>(p, q, a, b);
}

TvConditioningReport<double> tv_conditioning_audit(const DistributionRow& p, const DistributionRow& q,
                                                   const VertexSet& a, const VertexSet& b) {
  return conditioning_report<double>(p.mass, q.mass, a, b);
}

Json TvTildeAudit::to_json() const {
  return Json{{"tvtilde", value}, {"tv_n", tv_n},   {"max_bad_mass", max_bad_mass},
              {"bound", bound},   {"pass", pass}};
}

TvTildeAudit tvtilde_exact(const Graph& g, std::span<const GoodEventLaw> laws, double tv_n) {
  if (laws.size() != g.vertex_count()) throw DomainError("need one law per vertex");
  TvTildeAudit audit;
  audit.tv_n = tv_n;
  for (const auto& law : laws) audit.max_bad_mass = std::max(audit.max_bad_mass, law.bad_mass);
  const auto edges = g.edges();
  std::vector<double> split(edges.size());
  parallel_for(edges.size(), [&](std::size_t k) {
    split[k] = coupling_pairwise_exact(laws[edges[k].first], laws[edges[k].second]);
  });
  for (double s : split) audit.value = std::max(audit.value, s);
  audit.bound = 2 * tv_n + 2 * audit.max_bad_mass;
  audit.pass = audit.value <= audit.bound + kTvTildeTolerance;
  return audit;
}

double tvtilde_empirical(const Graph& g, std::span<const GoodEventLaw> laws, int seeds, std::uint64_t root_seed) {
  if (seeds < 1) throw DomainError("need at least one seed");
  const auto edges = g.edges();
  std::vector<std::uint64_t> splits(edges.size(), 0);
  for (int s = 0; s < seeds; ++s) {
    const auto sample = simultaneous_coupling(laws, g.vertex_count(), derive_seed(root_seed, s));
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (sample.cell_of[edges[k].first] != sample.cell_of[edges[k].second]) ++splits[k];
  }
  const auto worst = splits.empty() ? 0 : *std::max_element(splits.begin(), splits.end());
  return static_cast<double>(worst) / seeds;
}

}  // namespace isoprofile
