#include "isoprofile/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"

namespace isoprofile {

FiniteMeasure lazy_step_measure(const Graph& g, Vertex x) {
  std::vector<MeasureAtom> atoms{{x, Rational(1, 2)}};
  const Rational each(1, 2 * g.degree(x));
  for (Vertex w : g.neighbors(x)) atoms.push_back({w, each});
  return FiniteMeasure(std::move(atoms));
}

Rational ricci_edge(const Graph& g, Vertex x, Vertex y) {
  if (!g.adjacent(x, y)) throw DomainError("{" + std::to_string(x) + "," + std::to_string(y) + "} is not an edge");
  return 1 - w1(g, lazy_step_measure(g, x), lazy_step_measure(g, y)).cost;
}

CurvatureReport curvature_report(const Graph& g, std::size_t edge_budget) {
  const auto edges = g.edges();
  if (edges.size() > edge_budget)
    throw BudgetError("curvature report over " + std::to_string(edges.size()) + " edges exceeds budget");
  CurvatureReport report;
  report.edges.resize(edges.size());
  parallel_for(edges.size(), [&](std::size_t k) {
    const auto [u, v] = edges[k];
    auto plan = w1(g, lazy_step_measure(g, u), lazy_step_measure(g, v));
    report.edges[k] = {u, v, 1 - plan.cost, std::move(plan)};
  });
  Rational sum = 0;
  report.min = report.edges.empty() ? Rational(0) : report.edges.front().ricci;
  for (const auto& e : report.edges) {
    sum += e.ricci;
    report.min = std::min(report.min, e.ricci);
    ++report.histogram[e.ricci];
  }
  report.mean = report.edges.empty() ? Rational(0) : sum / static_cast<long long>(report.edges.size());
  report.nonneg = report.min >= 0;
  return report;
}

Json CurvatureReport::to_json(const Graph& g) const {
  Json per_edge = Json::array();
  for (const auto& e : edges)
    per_edge.push_back({{"u", g.label(e.u)},
                        {"v", g.label(e.v)},
                        {"ric_num", numerator(e.ricci).str()},
                        {"ric_den", denominator(e.ricci).str()}});
  Json hist = Json::array();
  for (const auto& [value, count] : histogram) hist.push_back({{"ricci", to_string(value)}, {"count", count}});
  return Json{{"edges", per_edge},
              {"histogram", hist},
              {"summary", {{"min", to_string(min)}, {"mean", to_string(mean)}, {"nonneg", nonneg}}}};
}

bool TvBoundAudit::pass() const {
  return skipped || std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

Json TvBoundAudit::to_json() const {
  Json out{{"skipped", skipped}, {"pass", pass()}};
  if (!notice.empty()) out["notice"] = notice;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& c : checks) worst = std::min(worst, c.margin);
  if (!checks.empty()) out["worst_margin"] = worst;
  Json rows = Json::array();
  for (const auto& c : checks) rows.push_back(c.to_json());
  out["checks"] = rows;
  return out;
}

TvBoundAudit audit_ms_tv_bound(const Graph& g, const ProfileTable& profile, bool nonneg_curvature) {
  TvBoundAudit audit;
  if (!nonneg_curvature) {
    audit.skipped = true;
    audit.notice = "graph has an edge of negative curvature; bound not applicable";
    return audit;
  }
  const double M = g.max_degree();
  for (const auto& e : profile.entries())
    audit.checks.push_back(check_le("TV_" + std::to_string(e.m) + " <= sqrt(20M/(m+1))", e.tv,
                                    std::sqrt(20.0 * M / (e.m + 1)), kTvBoundTolerance));
  return audit;
}

TvBoundAudit audit_ms_tv_bound(const Graph& g, int n) {
  const auto report = curvature_report(g);
  if (!report.nonneg) return audit_ms_tv_bound(g, ProfileTable({}, TvScope::AllNeighborPairs), false);
  return audit_ms_tv_bound(g, tv_profile(g, n), true);
}

Json CurvatureIsoperimetryAudit::to_json() const {
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back({{"volume", p.volume}, {"ratio", p.ratio}, {"source", p.source}});
  Json out{{"calibration", calibration}, {"realized_constant", realized_constant}, {"pass", pass},
           {"skipped", skipped}, {"points", pts}};
  if (!notice.empty()) out["notice"] = notice;
  return out;
}

CurvatureIsoperimetryAudit audit_curvature_isoperimetry(const Graph& g, std::vector<IsoperimetricPoint> points,
                                                        double calibration, bool nonneg_curvature) {
  CurvatureIsoperimetryAudit audit;
  audit.calibration = calibration;
  audit.points = std::move(points);
  if (!nonneg_curvature) {
    audit.skipped = true;
    audit.notice = "graph has an edge of negative curvature; bound not applicable";
    return audit;
  }
  const double M = std::max(2, g.max_degree());
  for (const auto& p : audit.points) {
    if (p.volume < 2) continue;
    const double shape = std::sqrt(M * std::log(M) / std::log(static_cast<double>(p.volume)));
    audit.realized_constant = std::max(audit.realized_constant, p.ratio / shape);
    if (p.ratio > calibration * shape) audit.pass = false;
  }
  return audit;
}

}  // namespace isoprofile
