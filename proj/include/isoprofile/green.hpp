#pragma once

#include <cstddef>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/report.hpp"
#include "isoprofile/walk.hpp"

namespace isoprofile {

enum class GreenSolver {
  Auto,        // direct elimination up to kDirectGreenLimit vertices, fixed point beyond
  Direct,      // one dense LU of (I - qP)
  FixedPoint,  // per-target iteration h <- q P h, h(v) = 1
};

inline constexpr std::size_t kDirectGreenLimit = 200;

/// Hitting kernel G_t(u, v): probability that the lazy walk from u visits v at
/// some time m <= T, where T is an independent killing time with
/// P(T >= m) = q^m and q = 1 - 1/t.
class GreenKernel {
 public:
  GreenKernel(double t, std::size_t vertex_count, std::vector<double> values)
      : t_(t), n_(vertex_count), values_(std::move(values)) {}

  double t() const { return t_; }
  double survival() const { return 1.0 - 1.0 / t_; }
  std::size_t vertex_count() const { return n_; }
  double value(Vertex u, Vertex v) const { return values_[static_cast<std::size_t>(u) * n_ + v]; }
  /// -log G_t(u, v); +inf when the kernel vanishes.
  double metric(Vertex u, Vertex v) const;
  /// max(metric(u, v), metric(v, u)).
  double symmetric_metric(Vertex u, Vertex v) const;

 private:
  double t_;
  std::size_t n_;
  std::vector<double> values_;
};

/// Requires t >= 1 (t = 1 kills immediately and gives the identity kernel).
GreenKernel green_kernel(const Graph& g, double t, GreenSolver solver = GreenSolver::Auto,
                         double tolerance = 1e-12, int max_iterations = 1'000'000);

inline constexpr double kSupermultiplicativityTolerance = 1e-10;

/// G_t(u, v) >= G_t(u, w) G_t(w, v) over all ordered triples; reports the
/// worst triple as lhs = G_t(u, v), rhs = G_t(u, w) G_t(w, v).
InequalityCheck audit_supermultiplicativity(const GreenKernel& kernel,
                                            double tolerance = kSupermultiplicativityTolerance);

/// -log P^m(x, y) read from a row; +inf when the probability is zero.
double information(const DistributionRow& row, Vertex y);
double information(const Graph& g, Vertex x, Vertex y, int m);

struct InfoGreenAudit {
  InequalityCheck expectation;  // E_x[G_t / P^n] <= t + 1
  InequalityCheck pointwise;    // min over reachable y of G_t / P^n >= (1 - 1/t)^n
  bool pass() const { return expectation.pass && pointwise.pass; }
  Json to_json() const;
};

inline constexpr double kInfoGreenTolerance = 1e-9;

InfoGreenAudit audit_info_green(const GreenKernel& kernel, const DistributionRow& row);
InfoGreenAudit audit_info_green(const Graph& g, Vertex x, int n, double t);

/// P_x(-log P^m(X_0,X_m) >= -log G_n(X_0,X_m) + mu) <= (n + 1) e^{-mu}.
InequalityCheck audit_tail_info_vs_green(const GreenKernel& kernel_n, const DistributionRow& row_m, int n,
                                         double mu);
InequalityCheck audit_tail_info_vs_green(const Graph& g, Vertex x, int m, int n, double mu);

}  // namespace isoprofile
