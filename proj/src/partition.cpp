#include "isoprofile/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"
#include "isoprofile/rng.hpp"
#include "isoprofile/tail.hpp"

namespace isoprofile {

std::vector<CellStats> cell_stats(const Graph& g, const CouplingSample& sample) {
  std::vector<CellStats> stats(sample.cells.size());
  parallel_for(sample.cells.size(), [&](std::size_t c) {
    auto& s = stats[c];
    s.vertices = sample.cells[c];
    s.endpoint = sample.cell_endpoint[c];
    const auto dist = bfs_distances(g, s.endpoint);
    for (Vertex v : s.vertices) s.radius = std::max(s.radius, dist[v]);
    const VertexSet set(g, s.vertices);
    s.volume = set.volume();
    s.boundary = set.boundary();
    s.ratio = static_cast<double>(s.boundary) / static_cast<double>(s.volume);
  });
  return stats;
}

double mtp_average(const Graph& g, const CouplingSample& sample, const VertexSet& f) {
  if (f.empty()) throw DomainError("mtp average needs a nonempty set F");
  CompensatedSum total;
  for (const auto& cell : sample.cells) {
    std::vector<Vertex> inside;
    for (Vertex v : cell)
      if (f.contains(v)) inside.push_back(v);
    if (!inside.empty()) total.add(static_cast<double>(VertexSet(g, inside).boundary()));
  }
  return total.value() / static_cast<double>(f.volume());
}

MtpEnsemble mtp_ensemble(const Graph& g, std::span<const GoodEventLaw> laws, const VertexSet& f, int seeds,
                         std::uint64_t root_seed) {
  if (seeds < 2) throw DomainError("ensemble needs at least two seeds");
  std::vector<double> values(static_cast<std::size_t>(seeds));
  for (int s = 0; s < seeds; ++s)
    values[s] = mtp_average(g, simultaneous_coupling(laws, g.vertex_count(), derive_seed(root_seed, s)), f);
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  MtpEnsemble out;
  out.seeds = seeds;
  out.mean = sum.value() / seeds;
  CompensatedSum squares;
  for (double v : values) squares.add((v - out.mean) * (v - out.mean));
  out.standard_error = std::sqrt(squares.value() / (seeds - 1) / seeds);
  return out;
}

double certificate_lambda(double calibration, double tv_n) {
  if (!(tv_n > 0.0) || std::isinf(calibration)) return std::numeric_limits<double>::infinity();
  return std::max(1.0, calibration * std::log(1.0 / tv_n));
}

double default_calibration(const Graph& g, int n, const ProfileTable& profile) {
  static constexpr double grid[] = {1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0};
  const auto audit = audit_theorem_upper_tail(g, 0, n, grid, profile);
  if (!audit.fitted_c) return 3.0;
  if (!(*audit.fitted_c > 0.0)) return std::numeric_limits<double>::infinity();
  return 3.0 / *audit.fitted_c;
}

bool Certificate::pass() const {
  return cell.has_value() && samples_within_bounds && cell->ratio <= ratio_bound && diameter <= diam_bound;
}

Json Certificate::to_json(const Graph& g) const {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); };
  Json cell_json = nullptr;
  if (cell) {
    Json labels = Json::array();
    for (Vertex v : cell->vertices) labels.push_back(g.label(v));
    cell_json = {{"vertices", labels},
                 {"diameter", diameter},
                 {"size", cell->vertices.size()},
                 {"volume", cell->volume},
                 {"boundary", cell->boundary},
                 {"ratio", cell->ratio},
                 {"endpoint", g.label(cell->endpoint)}};
  }
  return Json{{"n", n},
              {"lambda", finite_or_null(lambda)},
              {"tv_n", tv_n},
              {"cell", cell_json},
              {"bounds",
               {{"diam_bound", diam_bound},
                {"size_bound", finite_or_null(std::exp(log_size_bound))},
                {"log_size_bound", finite_or_null(log_size_bound)},
                {"ratio_bound", ratio_bound}}},
              {"pass", pass()},
              {"calibration", finite_or_null(calibration)},
              {"dstar", dstar},
              {"hstar", hstar},
              {"root_seed", root_seed},
              {"seed", seed ? Json(*seed) : Json(nullptr)},
              {"seeds_used", seeds_used},
              {"samples_within_bounds", samples_within_bounds},
              {"notes", notes}};
}

Certificate theorem1_certificate(const Graph& g, int n, const CertificateOptions& options) {
  if (n < 1) throw DomainError("certificate needs n >= 1");
  if (options.seeds < 1) throw DomainError("certificate needs at least one seed");
  ProfileOptions profile_options;
  profile_options.transitive_pairs = options.transitive_pairs;
  const auto profile = compute_profiles(g, n, profile_options);

  Certificate cert;
  cert.n = n;
  cert.root_seed = options.root_seed;
  cert.tv_n = profile.at(n).tv;
  cert.dstar = profile.at(n).dstar;
  cert.hstar = profile.at(n).hstar;
  cert.calibration = options.calibration ? *options.calibration : default_calibration(g, n, profile);
  cert.lambda = options.lambda ? *options.lambda : certificate_lambda(cert.calibration, cert.tv_n);
  cert.ratio_bound = 4.0 * cert.tv_n;
  const double radius_bound = std::min(static_cast<double>(n), cert.lambda * cert.dstar);
  cert.diam_bound = 2.0 * radius_bound;
  const double log_ball = n * std::log(tail_degree_bound(g) + 1.0);
  const auto laws = good_event_laws(g, n, cert.lambda, profile);
  cert.log_size_bound = std::min(laws.front().log_size_bound, log_ball);

  for (int s = 0; s < options.seeds; ++s) {
    const std::uint64_t seed = derive_seed(options.root_seed, static_cast<std::uint64_t>(s));
    const auto sample = simultaneous_coupling(laws, g.vertex_count(), seed);
    const auto stats = cell_stats(g, sample);
    cert.seeds_used = s + 1;
    const CellStats* best = nullptr;
    for (const auto& c : stats) {
      if (c.radius > radius_bound || std::log(static_cast<double>(c.vertices.size())) > cert.log_size_bound + 1e-12)
        cert.samples_within_bounds = false;
      if (!best || c.ratio < best->ratio || (c.ratio == best->ratio && c.vertices.size() < best->vertices.size()))
        best = &c;
    }
    if (best && best->ratio <= cert.ratio_bound) {
      cert.cell = *best;
      cert.seed = seed;
      cert.diameter = set_diameter(g, best->vertices);
      break;
    }
  }
  if (cert.ratio_bound >= 1.0) cert.notes.push_back("ratio bound 4 TV_n >= 1 is met by every set; certificate is vacuous");
  if (cert.cell && cert.cell->vertices.size() == g.vertex_count())
    cert.notes.push_back("cell is the whole vertex set");
  if (!cert.cell) cert.notes.push_back("no cell with ratio <= 4 TV_n in any seed");
  return cert;
}

}  // namespace isoprofile
