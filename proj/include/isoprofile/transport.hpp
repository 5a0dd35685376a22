#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/rational.hpp"

namespace isoprofile {

struct MeasureAtom {
  Vertex vertex;
  Rational mass;
};

/// Finitely supported probability measure with exact rational masses.
class FiniteMeasure {
 public:
  /// Masses must be positive, vertices distinct, and the total exactly one.
  explicit FiniteMeasure(std::vector<MeasureAtom> atoms);

  static FiniteMeasure dirac(Vertex v);

  const std::vector<MeasureAtom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  Rational mass_at(Vertex v) const;

 private:
  std::vector<MeasureAtom> atoms_;
};

struct PlanEntry {
  Vertex from;
  Vertex to;
  Rational mass;
};

/// Optimal coupling with its cost and the dual potentials that certify it:
/// source_potential(u) + sink_potential(v) <= d(u, v) everywhere, with
/// equality wherever the plan moves mass.
struct TransportPlan {
  std::vector<PlanEntry> entries;
  Rational cost;
  std::vector<std::pair<Vertex, Rational>> source_potential;
  std::vector<std::pair<Vertex, Rational>> sink_potential;
};

/// Exact Wasserstein-1 distance with graph-distance cost.
TransportPlan w1(const Graph& g, const FiniteMeasure& mu, const FiniteMeasure& nu);

/// Checks marginals, nonnegativity, the stated cost, dual feasibility,
/// complementary slackness and a zero duality gap, all exactly.
bool verify_transport_plan(const Graph& g, const FiniteMeasure& mu, const FiniteMeasure& nu,
                           const TransportPlan& plan);

/// Balanced transportation problem with integer supplies and costs.
struct TransportationProblem {
  std::vector<std::int64_t> supply;
  std::vector<std::int64_t> demand;
  std::vector<std::vector<std::int64_t>> cost;  // supply.size() x demand.size()
};

struct TransportationSolution {
  std::vector<std::vector<std::int64_t>> flow;
  std::int64_t cost = 0;
  std::vector<std::int64_t> row_potential;
  std::vector<std::int64_t> col_potential;
  int pivots = 0;
};

/// Transportation simplex: northwest-corner start, tree potentials, Bland's
/// rule for entering and leaving cells. Integer arithmetic throughout.
TransportationSolution solve_transportation(const TransportationProblem& problem);

}  // namespace isoprofile
