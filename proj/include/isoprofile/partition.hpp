#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoprofile/coupling.hpp"
#include "isoprofile/graph.hpp"
#include "isoprofile/profile.hpp"
#include "isoprofile/report.hpp"

namespace isoprofile {

struct CellStats {
  std::vector<Vertex> vertices;
  Vertex endpoint = 0;
  int radius = 0;  // max d(endpoint, member)
  std::int64_t volume = 0;
  std::int64_t boundary = 0;
  double ratio = 0.0;  // boundary / volume
};

/// Per-cell size, volume, boundary and radius around the common endpoint.
std::vector<CellStats> cell_stats(const Graph& g, const CouplingSample& sample);

/// (1 / deg F) sum over cells C of |d(C n F)|, i.e. the degree-weighted
/// average over x in F of the boundary ratio of [x] n F.
double mtp_average(const Graph& g, const CouplingSample& sample, const VertexSet& f);

struct MtpEnsemble {
  double mean = 0.0;
  double standard_error = 0.0;
  int seeds = 0;
};

MtpEnsemble mtp_ensemble(const Graph& g, std::span<const GoodEventLaw> laws, const VertexSet& f, int seeds,
                         std::uint64_t root_seed);

/// lambda = max(1, C log(1/TV_n)); +inf when TV_n = 0.
double certificate_lambda(double calibration, double tv_n);

/// 3 / c, where c is the constant fitted by the exact upper-tail audit at
/// vertex 0. Falls back to 3 when every tail on the grid vanishes.
double default_calibration(const Graph& g, int n, const ProfileTable& profile);

struct CertificateOptions {
  std::optional<double> calibration;  // default_calibration when empty
  std::optional<double> lambda;       // overrides the calibrated lambda
  int seeds = 50;
  std::uint64_t root_seed = 1;
  std::vector<Edge> transitive_pairs;
};

struct Certificate {
  int n = 0;
  double lambda = 0.0;
  double calibration = 0.0;
  double tv_n = 0.0;
  double dstar = 0.0;
  double hstar = 0.0;
  std::uint64_t root_seed = 0;
  int seeds_used = 0;
  std::optional<std::uint64_t> seed;  // seed of the sample holding the cell
  std::optional<CellStats> cell;
  int diameter = 0;
  double diam_bound = 0.0;
  double log_size_bound = 0.0;
  double ratio_bound = 0.0;
  /// Every sample kept all members within lambda D*_n (and n) of their
  /// endpoint and every cell within the size bound.
  bool samples_within_bounds = true;
  std::vector<std::string> notes;
  bool pass() const;
  Json to_json(const Graph& g) const;
};

/// Runs the coupling over seeds derived from the root seed until some cell
/// has ratio <= 4 TV_n, checking radius and size bounds on every sample.
Certificate theorem1_certificate(const Graph& g, int n, const CertificateOptions& options = {});

}  // namespace isoprofile
