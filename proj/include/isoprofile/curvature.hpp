#pragma once

#include <map>
#include <string>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/rational.hpp"
#include "isoprofile/report.hpp"
#include "isoprofile/transport.hpp"

namespace isoprofile {

/// One lazy step from x as an exact measure: 1/2 at x, 1/(2 deg x) per neighbor.
FiniteMeasure lazy_step_measure(const Graph& g, Vertex x);

/// Ollivier-Ricci curvature 1 - W1(P(x,.), P(y,.)). Throws DomainError when
/// {x, y} is not an edge.
Rational ricci_edge(const Graph& g, Vertex x, Vertex y);

struct EdgeCurvature {
  Vertex u;
  Vertex v;
  Rational ricci;
  TransportPlan plan;
};

struct CurvatureReport {
  std::vector<EdgeCurvature> edges;
  Rational min;
  Rational mean;
  std::map<Rational, std::size_t> histogram;
  bool nonneg = false;

  /// {"edges": [{u, v, ric_num, ric_den}], "summary": {min, mean, nonneg}}.
  Json to_json(const Graph& g) const;
};

inline constexpr std::size_t kDefaultCurvatureEdgeBudget = 2'000'000;

CurvatureReport curvature_report(const Graph& g, std::size_t edge_budget = kDefaultCurvatureEdgeBudget);

struct TvBoundAudit {
  bool skipped = false;
  std::string notice;
  std::vector<InequalityCheck> checks;  // one per m
  bool pass() const;
  Json to_json() const;
};

inline constexpr double kTvBoundTolerance = 1e-9;

/// TV_m <= sqrt(20 M / (m + 1)) for m <= profile horizon. Skipped unless
/// `nonneg_curvature` holds.
TvBoundAudit audit_ms_tv_bound(const Graph& g, const ProfileTable& profile, bool nonneg_curvature);
TvBoundAudit audit_ms_tv_bound(const Graph& g, int n);

/// A set found by some method, as (volume, boundary-to-volume ratio).
struct IsoperimetricPoint {
  std::int64_t volume;
  double ratio;
  std::string source;
};

struct CurvatureIsoperimetryAudit {
  double calibration = 0.0;
  /// Smallest C with ratio <= C sqrt(M log M / log volume) at every point.
  double realized_constant = 0.0;
  std::vector<IsoperimetricPoint> points;
  bool pass = true;
  bool skipped = false;
  std::string notice;
  Json to_json() const;
};

/// Compares the points against C sqrt(M log M / log n), with M taken as
/// max(max_degree, 2). Points with volume < 2 are ignored.
CurvatureIsoperimetryAudit audit_curvature_isoperimetry(const Graph& g, std::vector<IsoperimetricPoint> points,
                                                        double calibration, bool nonneg_curvature);

}  // namespace isoprofile
