#pragma once

#include <span>
#include <string>
#include <vector>

#include "isoprofile/graph.hpp"

namespace isoprofile {

/// Which neighbor pairs the TV column was maximized over.
enum class TvScope { AllNeighborPairs, HintedPairs };

struct ProfileEntry {
  int m = 0;
  double tv = 0.0;     // max over neighbor pairs of ||P^m(x,.) - P^m(y,.)||
  double dstar = 0.0;  // sup_x max_{k<=m} E_x d(X_0, X_k)
  double hstar = 0.0;  // sup_x max_{k<=m} H(P^k(x,.))
};

/// TV, D* and H* for m = 0..n.
class ProfileTable {
 public:
  ProfileTable(std::vector<ProfileEntry> entries, TvScope scope)
      : entries_(std::move(entries)), scope_(scope) {}

  int horizon() const { return static_cast<int>(entries_.size()) - 1; }
  const ProfileEntry& at(int m) const { return entries_.at(static_cast<std::size_t>(m)); }
  const std::vector<ProfileEntry>& entries() const { return entries_; }
  TvScope scope() const { return scope_; }

  /// Header "m,tv,dstar,hstar" followed by one row per m, 17 significant digits.
  std::string to_csv() const;

 private:
  std::vector<ProfileEntry> entries_;
  TvScope scope_;
};

struct ProfileOptions {
  /// When non-empty the caller asserts vertex transitivity and that these
  /// pairs cover every edge orbit. TV is maximized over them only, and D*, H*
  /// are evaluated from their endpoints only.
  std::vector<Edge> transitive_pairs;
  bool tv = true;
  bool displacement = true;
  bool entropy = true;
  /// Cap on the number of simultaneously stored rows (each |V| doubles).
  std::size_t max_dense_sources = 8192;
};

ProfileTable compute_profiles(const Graph& g, int n, const ProfileOptions& options = {});

ProfileTable tv_profile(const Graph& g, int n, std::span<const Edge> transitive_pairs = {});
ProfileTable displacement_profile(const Graph& g, int n);
ProfileTable entropy_profile(const Graph& g, int n);

}  // namespace isoprofile
