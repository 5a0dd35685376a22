#include "isoprofile/green.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"

namespace isoprofile {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> solve_direct(const Graph& g, double q) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    const auto uv = static_cast<Vertex>(u);
    a(u, u) -= q * 0.5;
    const double step = q * 0.5 / g.degree(uv);
    for (Vertex w : g.neighbors(uv)) a(u, w) -= step;
  }
  // Killed Green function g = (I - qP)^{-1}; G(u, v) = g(u, v) / g(v, v).
  const Eigen::MatrixXd green = a.partialPivLu().inverse();
  std::vector<double> values(static_cast<std::size_t>(n * n));
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v)
      values[static_cast<std::size_t>(u * n + v)] = u == v ? 1.0 : std::clamp(green(u, v) / green(v, v), 0.0, 1.0);
  return values;
}

std::vector<double> solve_fixed_point(const Graph& g, double q, double tolerance, int max_iterations) {
  const std::size_t n = g.vertex_count();
  std::vector<double> values(n * n, 0.0);
  parallel_for(n, [&](std::size_t target) {
    std::vector<double> h(n, 0.0), next(n, 0.0);
    h[target] = 1.0;
    double residual = kInf;
    int iter = 0;
    for (; iter < max_iterations && residual > tolerance; ++iter) {
      residual = 0.0;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == target) {
          next[u] = 1.0;
          continue;
        }
        const auto uv = static_cast<Vertex>(u);
        double acc = 0.0;
        for (Vertex w : g.neighbors(uv)) acc += h[w];
        next[u] = q * 0.5 * (h[u] + acc / g.degree(uv));
        residual = std::max(residual, std::abs(next[u] - h[u]));
      }
      h.swap(next);
    }
    if (residual > tolerance)
      throw NumericError("green kernel fixed point did not converge for target " + std::to_string(target), residual);
    // Column `target` of the kernel.
    for (std::size_t u = 0; u < n; ++u) values[u * n + target] = h[u];
  });
  return values;
}

}  // namespace

double GreenKernel::metric(Vertex u, Vertex v) const {
  const double g = value(u, v);
  return g > 0.0 ? -std::log(g) : kInf;
}

double GreenKernel::symmetric_metric(Vertex u, Vertex v) const { return std::max(metric(u, v), metric(v, u)); }

GreenKernel green_kernel(const Graph& g, double t, GreenSolver solver, double tolerance, int max_iterations) {
  if (!(t >= 1.0) || !std::isfinite(t)) throw DomainError("green kernel parameter t must be finite and >= 1");
  const double q = 1.0 - 1.0 / t;
  if (solver == GreenSolver::Auto)
    solver = g.vertex_count() <= kDirectGreenLimit ? GreenSolver::Direct : GreenSolver::FixedPoint;
  auto values = solver == GreenSolver::Direct ? solve_direct(g, q) : solve_fixed_point(g, q, tolerance, max_iterations);
  return GreenKernel(t, g.vertex_count(), std::move(values));
}

InequalityCheck audit_supermultiplicativity(const GreenKernel& kernel, double tolerance) {
  const std::size_t n = kernel.vertex_count();
  double worst = kInf, lhs = 1.0, rhs = 1.0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      const double uw = kernel.value(static_cast<Vertex>(u), static_cast<Vertex>(w));
      for (std::size_t v = 0; v < n; ++v) {
        const double direct = kernel.value(static_cast<Vertex>(u), static_cast<Vertex>(v));
        const double via = uw * kernel.value(static_cast<Vertex>(w), static_cast<Vertex>(v));
        if (direct - via < worst) {
          worst = direct - via;
          lhs = direct;
          rhs = via;
        }
      }
    }
  return check_ge("G_t(u,v) >= G_t(u,w) G_t(w,v)", lhs, rhs, tolerance);
}

double information(const DistributionRow& row, Vertex y) {
  const double p = row.mass[y];
  return p > 0.0 ? -std::log(p) : kInf;
}

double information(const Graph& g, Vertex x, Vertex y, int m) { return information(distribution_at(g, x, m), y); }

Json InfoGreenAudit::to_json() const { return Json::array({expectation.to_json(), pointwise.to_json()}); }

InfoGreenAudit audit_info_green(const GreenKernel& kernel, const DistributionRow& row) {
  const Vertex x = row.source;
  CompensatedSum expectation;
  double min_ratio = kInf;
  for (std::size_t y = 0; y < row.mass.size(); ++y) {
    const double p = row.mass[y];
    if (p <= 0.0) continue;
    const double gval = kernel.value(x, static_cast<Vertex>(y));
    // E[G/P^n] restricted to the support reduces to a plain sum of G.
    expectation.add(gval);
    min_ratio = std::min(min_ratio, gval / p);
  }
  const double t = kernel.t();
  InfoGreenAudit audit;
  audit.expectation = check_le("E_x[G_t(X0,Xn)/P^n(X0,Xn)] <= t+1", expectation.value(), t + 1.0,
                               kInfoGreenTolerance);
  audit.pointwise = check_ge("G_t(x,y)/P^n(x,y) >= (1-1/t)^n", min_ratio,
                             std::pow(kernel.survival(), row.step), kInfoGreenTolerance);
  return audit;
}

InfoGreenAudit audit_info_green(const Graph& g, Vertex x, int n, double t) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  return audit_info_green(green_kernel(g, t), distribution_at(g, x, n));
}

InequalityCheck audit_tail_info_vs_green(const GreenKernel& kernel_n, const DistributionRow& row_m, int n,
                                         double mu) {
  if (!(mu > 0.0)) throw DomainError("mu must be positive");
  if (row_m.step < 0 || row_m.step > n) throw DomainError("need 0 <= m <= n");
  const Vertex x = row_m.source;
  CompensatedSum tail;
  for (std::size_t y = 0; y < row_m.mass.size(); ++y) {
    const double p = row_m.mass[y];
    if (p <= 0.0) continue;
    const double green_distance = kernel_n.metric(x, static_cast<Vertex>(y));
    if (std::isinf(green_distance)) continue;
    if (-std::log(p) >= green_distance + mu) tail.add(p);
  }
  return check_le("P_x(-log P^m >= -log G_n + mu) <= (n+1)e^{-mu}", tail.value(), (n + 1) * std::exp(-mu), 1e-12);
}

InequalityCheck audit_tail_info_vs_green(const Graph& g, Vertex x, int m, int n, double mu) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  return audit_tail_info_vs_green(green_kernel(g, static_cast<double>(n)), distribution_at(g, x, m), n, mu);
}

}  // namespace isoprofile
