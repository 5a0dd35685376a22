#include "isoprofile/transport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "isoprofile/errors.hpp"

namespace isoprofile {

FiniteMeasure::FiniteMeasure(std::vector<MeasureAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("measure needs a nonempty support");
  std::sort(atoms_.begin(), atoms_.end(), [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  Rational total = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].mass <= 0) throw DomainError("measure masses must be positive");
    if (i > 0 && atoms_[i - 1].vertex == atoms_[i].vertex)
      throw DomainError("measure support vertices must be distinct");
    total += atoms_[i].mass;
  }
  if (total != 1) throw DomainError("measure masses sum to " + to_string(total) + ", not 1");
}

FiniteMeasure FiniteMeasure::dirac(Vertex v) { return FiniteMeasure({{v, Rational(1)}}); }

Rational FiniteMeasure::mass_at(Vertex v) const {
  const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), v,
                                   [](const MeasureAtom& a, Vertex x) { return a.vertex < x; });
  return it != atoms_.end() && it->vertex == v ? it->mass : Rational(0);
}

TransportationSolution solve_transportation(const TransportationProblem& problem) {
  const std::size_t m = problem.supply.size(), n = problem.demand.size();
  if (m == 0 || n == 0) throw DomainError("transportation problem needs sources and sinks");
  if (problem.cost.size() != m) throw DomainError("cost matrix row count mismatch");
  for (const auto& row : problem.cost)
    if (row.size() != n) throw DomainError("cost matrix column count mismatch");
  for (auto s : problem.supply)
    if (s < 0) throw DomainError("negative supply");
  for (auto d : problem.demand)
    if (d < 0) throw DomainError("negative demand");
  const auto total_supply = std::accumulate(problem.supply.begin(), problem.supply.end(), std::int64_t{0});
  const auto total_demand = std::accumulate(problem.demand.begin(), problem.demand.end(), std::int64_t{0});
  if (total_supply != total_demand) throw DomainError("supplies and demands do not balance");

  const auto& c = problem.cost;
  std::vector<std::int64_t> flow(m * n, 0);
  std::vector<char> basic(m * n, 0);

  // Northwest corner: a staircase of exactly m + n - 1 basic cells.
  {
    auto s = problem.supply;
    auto d = problem.demand;
    std::size_t i = 0, j = 0;
    while (true) {
      const std::int64_t x = std::min(s[i], d[j]);
      flow[i * n + j] = x;
      basic[i * n + j] = 1;
      s[i] -= x;
      d[j] -= x;
      if (i == m - 1 && j == n - 1) break;
      if (j == n - 1 || (i < m - 1 && s[i] == 0))
        ++i;
      else
        ++j;
    }
  }

  const std::size_t nodes = m + n;
  std::vector<std::int64_t> u(m), v(n);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);  // (node, cell)
  std::vector<std::ptrdiff_t> parent_node(nodes), parent_cell(nodes);
  std::vector<std::size_t> queue;
  queue.reserve(nodes);

  auto rebuild_tree = [&] {
    for (auto& a : adj) a.clear();
    for (std::size_t cell = 0; cell < m * n; ++cell) {
      if (!basic[cell]) continue;
      const std::size_t i = cell / n, j = cell % n;
      adj[i].emplace_back(m + j, cell);
      adj[m + j].emplace_back(i, cell);
    }
  };

  // BFS over the basis tree from `root`, filling parent pointers.
  auto walk_tree = [&](std::size_t root) {
    std::fill(parent_node.begin(), parent_node.end(), -2);
    queue.clear();
    parent_node[root] = -1;
    parent_cell[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t a = queue[head];
      for (const auto& [b, cell] : adj[a]) {
        if (parent_node[b] != -2) continue;
        parent_node[b] = static_cast<std::ptrdiff_t>(a);
        parent_cell[b] = static_cast<std::ptrdiff_t>(cell);
        queue.push_back(b);
      }
    }
    if (queue.size() != nodes) throw Error("transportation basis is not a spanning tree");
  };

  TransportationSolution out;
  constexpr int kMaxPivots = 1'000'000;
  for (;;) {
    rebuild_tree();
    walk_tree(0);
    u[0] = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const std::size_t node = queue[k];
      const auto cell = static_cast<std::size_t>(parent_cell[node]);
      const std::size_t i = cell / n, j = cell % n;
      if (node >= m)
        v[node - m] = c[i][j] - u[i];
      else
        u[node] = c[i][j] - v[j];
    }

    std::ptrdiff_t entering = -1;
    for (std::size_t cell = 0; cell < m * n && entering < 0; ++cell) {
      if (basic[cell]) continue;
      const std::size_t i = cell / n, j = cell % n;
      if (c[i][j] - u[i] - v[j] < 0) entering = static_cast<std::ptrdiff_t>(cell);
    }
    if (entering < 0) break;
    if (++out.pivots > kMaxPivots) throw Error("transportation simplex exceeded pivot limit");

    const std::size_t ei = static_cast<std::size_t>(entering) / n, ej = static_cast<std::size_t>(entering) % n;
    // Tree path from column ej back to row ei; cells alternate -, +, -, ...
    walk_tree(ei);
    std::vector<std::size_t> path;
    for (std::size_t node = m + ej; parent_node[node] >= 0; node = static_cast<std::size_t>(parent_node[node]))
      path.push_back(static_cast<std::size_t>(parent_cell[node]));

    std::int64_t theta = std::numeric_limits<std::int64_t>::max();
    std::size_t leaving = m * n;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const std::size_t cell = path[k];
      if (flow[cell] < theta || (flow[cell] == theta && cell < leaving)) {
        theta = flow[cell];
        leaving = cell;
      }
    }
    flow[static_cast<std::size_t>(entering)] += theta;
    for (std::size_t k = 0; k < path.size(); ++k) flow[path[k]] += (k % 2 == 0) ? -theta : theta;
    basic[leaving] = 0;
    basic[static_cast<std::size_t>(entering)] = 1;
  }

  out.flow.assign(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.flow[i][j] = flow[i * n + j];
      out.cost += flow[i * n + j] * c[i][j];
    }
  out.row_potential = u;
  out.col_potential = v;
  return out;
}

TransportPlan w1(const Graph& g, const FiniteMeasure& mu, const FiniteMeasure& nu) {
  // Scale to integers over the common denominator; the simplex then runs in
  // exact integer arithmetic.
  BigInt common = 1;
  for (const auto* measure : {&mu, &nu})
    for (const auto& atom : measure->atoms()) common = boost::multiprecision::lcm(common, denominator(atom.mass));
  if (common > BigInt(std::numeric_limits<std::int64_t>::max() / 1024))
    throw DomainError("common denominator too large for exact transport: " + common.str());

  auto scaled = [&](const FiniteMeasure& measure) {
    std::vector<std::int64_t> out;
    for (const auto& atom : measure.atoms())
      out.push_back(static_cast<std::int64_t>(numerator(atom.mass) * (common / denominator(atom.mass))));
    return out;
  };

  TransportationProblem problem{scaled(mu), scaled(nu), {}};
  for (const auto& src : mu.atoms()) {
    const auto dist = bfs_distances(g, src.vertex);
    std::vector<std::int64_t> row;
    for (const auto& dst : nu.atoms()) row.push_back(dist[dst.vertex]);
    problem.cost.push_back(std::move(row));
  }
  const auto solution = solve_transportation(problem);

  TransportPlan plan;
  const Rational scale(BigInt(1), common);
  for (std::size_t i = 0; i < mu.support_size(); ++i)
    for (std::size_t j = 0; j < nu.support_size(); ++j)
      if (solution.flow[i][j] > 0)
        plan.entries.push_back({mu.atoms()[i].vertex, nu.atoms()[j].vertex, Rational(solution.flow[i][j]) * scale});
  plan.cost = Rational(solution.cost) * scale;
  for (std::size_t i = 0; i < mu.support_size(); ++i)
    plan.source_potential.emplace_back(mu.atoms()[i].vertex, Rational(solution.row_potential[i]));
  for (std::size_t j = 0; j < nu.support_size(); ++j)
    plan.sink_potential.emplace_back(nu.atoms()[j].vertex, Rational(solution.col_potential[j]));
  return plan;
}

bool verify_transport_plan(const Graph& g, const FiniteMeasure& mu, const FiniteMeasure& nu,
                           const TransportPlan& plan) {
  if (plan.source_potential.size() != mu.support_size() || plan.sink_potential.size() != nu.support_size())
    return false;
  std::vector<Rational> row_mass(mu.support_size()), col_mass(nu.support_size());
  auto index_in = [](const FiniteMeasure& m, Vertex v) -> std::ptrdiff_t {
    for (std::size_t k = 0; k < m.support_size(); ++k)
      if (m.atoms()[k].vertex == v) return static_cast<std::ptrdiff_t>(k);
    return -1;
  };

  std::vector<std::vector<int>> dist;
  for (const auto& atom : mu.atoms()) dist.push_back(bfs_distances(g, atom.vertex));

  Rational cost = 0;
  for (const auto& e : plan.entries) {
    const auto i = index_in(mu, e.from), j = index_in(nu, e.to);
    if (i < 0 || j < 0 || e.mass < 0) return false;
    row_mass[i] += e.mass;
    col_mass[j] += e.mass;
    const int d = dist[i][e.to];
    cost += e.mass * d;
    // Complementary slackness on moved mass.
    if (e.mass > 0 && plan.source_potential[i].second + plan.sink_potential[j].second != d) return false;
  }
  for (std::size_t i = 0; i < mu.support_size(); ++i)
    if (row_mass[i] != mu.atoms()[i].mass) return false;
  for (std::size_t j = 0; j < nu.support_size(); ++j)
    if (col_mass[j] != nu.atoms()[j].mass) return false;
  if (cost != plan.cost) return false;

  Rational dual = 0;
  for (std::size_t i = 0; i < mu.support_size(); ++i) {
    dual += mu.atoms()[i].mass * plan.source_potential[i].second;
    for (std::size_t j = 0; j < nu.support_size(); ++j)
      if (plan.source_potential[i].second + plan.sink_potential[j].second > dist[i][nu.atoms()[j].vertex])
        return false;
  }
  for (std::size_t j = 0; j < nu.support_size(); ++j) dual += nu.atoms()[j].mass * plan.sink_potential[j].second;
  return dual == plan.cost;
}

}  // namespace isoprofile
