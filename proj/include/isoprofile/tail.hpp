#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/metric.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/report.hpp"

namespace isoprofile {

/// Exact joint law of (X_m, max_{s<=m} d(x, X_s)) for m = 0..n. The running
/// maximum lives on the finite value set {d(x, v) : v in V}.
class MaxDispDistribution {
 public:
  MaxDispDistribution(Vertex source, std::size_t vertex_count, std::vector<double> levels,
                      std::vector<std::vector<double>> mass)
      : source_(source), n_(vertex_count), levels_(std::move(levels)), mass_(std::move(mass)) {}

  Vertex source() const { return source_; }
  int horizon() const { return static_cast<int>(mass_.size()) - 1; }
  /// Sorted distinct values of d(source, .).
  const std::vector<double>& levels() const { return levels_; }
  double mass(int m, Vertex v, std::size_t level) const { return mass_[m][static_cast<std::size_t>(v) * levels_.size() + level]; }
  double total(int m) const;
  /// Marginal over vertices at step m; equals P^m(source, .).
  std::vector<double> vertex_marginal(int m) const;
  /// P(max_{s<=m} d(source, X_s) >= r).
  double tail(int m, double r) const;
  double expected_max(int m) const;

 private:
  Vertex source_;
  std::size_t n_;
  std::vector<double> levels_;
  std::vector<std::vector<double>> mass_;
};

inline constexpr std::size_t kDefaultDpStateBudget = std::size_t{1} << 22;

/// Throws BudgetError when |V| * #levels exceeds the budget; callers fall
/// back to mc_tail.
MaxDispDistribution max_disp_dp(const Graph& g, const MetricTable& d, Vertex x, int n,
                                std::size_t state_budget = kDefaultDpStateBudget);

/// M used by the explicit tail lemma: the degree bound, at least 2.
int tail_degree_bound(const Graph& g);

/// P_x(max_{m<=n} d >= lambda S) <= exp(-floor(lambda / (M + e))) with
/// S = sup_y E_y max_{m<=n} d(X_0, X_m). One record per lambda, lhs is the
/// worst source. Zero tolerance.
std::vector<AuditRecord> audit_lemma_tail(const Graph& g, const MetricTable& d, int n,
                                          std::span<const double> lambdas);

/// sup_x max_{m<=n} P_x(d(X_0,X_m) >= r) >= (1/2) sup_x P_x(max_{m<=n} d >= 2r).
std::vector<AuditRecord> audit_triangle_lemma(const Graph& g, const MetricTable& d, int n,
                                              std::span<const double> radii);

/// rho = sup_x max_m E_x d(X_0,X_m) / sup_y E_y max_m d(X_0,X_m) <= 1, with
/// rho * M log M reported as witness.
AuditRecord audit_expectation_median(const Graph& g, const MetricTable& d, int n);

struct UpperTailAudit {
  std::vector<AuditRecord> records;   // displacement and information tails per lambda
  std::optional<double> fitted_c;     // min over positive tails of -log(tail) / lambda
  bool monotone = true;               // tails non-increasing in lambda
  bool vanishes = true;               // both tails zero for lambda large enough
  bool pass() const { return monotone && vanishes; }
  Json to_json() const;
};

/// Exact tails P_x(d_G(X_0,X_n) >= lambda D*_n) and
/// P_x(-log P^n(X_0,X_n) >= lambda (H*_n + log n)) from P^n(x, .).
UpperTailAudit audit_theorem_upper_tail(const Graph& g, Vertex x, int n, std::span<const double> lambdas,
                                        const ProfileTable& profile);

struct McEstimate {
  double estimate = 0.0;
  double lower = 0.0;  // 99% Wilson interval
  double upper = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

inline constexpr double kZ99 = 2.5758293035489004;

McEstimate wilson_interval(std::uint64_t hits, std::uint64_t samples, double z = kZ99);

/// Monte Carlo estimate of P_x(max_{m<=n} d(x, X_m) >= threshold). Samples
/// are drawn in fixed-size chunks with per-chunk derived seeds, so the result
/// does not depend on the thread schedule.
McEstimate mc_tail(const Graph& g, const MetricTable& d, Vertex x, int n, double threshold,
                   std::uint64_t samples, std::uint64_t seed);

}  // namespace isoprofile
