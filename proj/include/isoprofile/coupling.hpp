#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/rational.hpp"
#include "isoprofile/report.hpp"
#include "isoprofile/walk.hpp"

namespace isoprofile {

/// P^n(x, .) restricted to the good event {d(x,y) <= lambda D*_n and
/// -log P^n(x,y) <= log N} and renormalized, log N = lambda (H*_n + log(n+1)).
/// lambda = +inf means no conditioning.
struct GoodEventLaw {
  Vertex source = 0;
  int n = 0;
  double lambda = std::numeric_limits<double>::infinity();
  std::vector<Vertex> support;  // increasing
  std::vector<double> prob;     // sums to 1
  double bad_mass = 0.0;
  double log_size_bound = std::numeric_limits<double>::infinity();

  double density(Vertex z) const;
  double max_density() const;
  /// Law with the given dense weights, no conditioning recorded.
  static GoodEventLaw from_dense(Vertex source, std::span<const double> weights);
};

GoodEventLaw good_event_law(const DistributionRow& row, std::span<const int> dist_from_source, double lambda,
                            const ProfileEntry& at_n);
GoodEventLaw good_event_law(const Graph& g, Vertex x, int n, double lambda, const ProfileTable& profile);
/// One law per vertex, computed in parallel.
std::vector<GoodEventLaw> good_event_laws(const Graph& g, int n, double lambda, const ProfileTable& profile);

/// One joint draw of every law from shared proposals (Z_k, U_k), Z_k uniform
/// on V and U_k uniform on [0, c*). Vertex x takes the first k with
/// U_k < f_x(Z_k). Two vertices are in the same cell iff they accepted the
/// same proposal; every cell therefore has a single endpoint.
struct CouplingSample {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> accepted;  // proposal index per vertex
  std::vector<Vertex> endpoint;         // Z at that index
  std::vector<std::vector<Vertex>> cells;  // ordered by smallest member
  std::vector<Vertex> cell_endpoint;
  std::vector<std::size_t> cell_of;
};

inline constexpr std::uint64_t kDefaultProposalCap = std::uint64_t{1} << 34;

CouplingSample simultaneous_coupling(std::span<const GoodEventLaw> laws, std::size_t vertex_count,
                                     std::uint64_t seed, std::uint64_t proposal_cap = kDefaultProposalCap);

/// 1 - sum min(f, g) / sum max(f, g) over dense weight vectors.
template <class T>
T disagreement(std::span<const T> f, std::span<const T> g) {
  T lo = 0, hi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    lo += f[i] < g[i] ? f[i] : g[i];
    hi += f[i] < g[i] ? g[i] : f[i];
  }
  return hi == 0 ? T(0) : T(1) - lo / hi;
}

/// Exact disagreement probability P(X_x != X_y) of the coupling above.
double coupling_pairwise_exact(const GoodEventLaw& f, const GoodEventLaw& g);

template <class T>
struct TvConditioningReport {
  T lhs;  // || p|_A - q|_B ||
  T rhs;  // || p - q || + p(A^c) + q(B^c)
  bool pass = false;
};

TvConditioningReport<Rational> tv_conditioning_audit(const ExactRow& p, const ExactRow& q, const VertexSet& a,
                                                     const VertexSet& b);
TvConditioningReport<double> tv_conditioning_audit(const DistributionRow& p, const DistributionRow& q,
                                                   const VertexSet& a, const VertexSet& b);

struct TvTildeAudit {
  double value = 0.0;  // max over edges of the pairwise disagreement
  double tv_n = 0.0;
  double max_bad_mass = 0.0;
  double bound = 0.0;  // 2 TV_n + 2 max bad mass
  bool pass = false;
  Json to_json() const;
};

inline constexpr double kTvTildeTolerance = 1e-12;

TvTildeAudit tvtilde_exact(const Graph& g, std::span<const GoodEventLaw> laws, double tv_n);
/// Largest empirical split frequency over edges across `seeds` couplings.
double tvtilde_empirical(const Graph& g, std::span<const GoodEventLaw> laws, int seeds, std::uint64_t root_seed);

}  // namespace isoprofile
