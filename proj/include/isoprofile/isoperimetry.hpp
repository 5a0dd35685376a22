#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/rational.hpp"

namespace isoprofile {

/// Exact isoperimetric profile Phi(n) = min |∂W| / vol(W) over vol(W) <= n,
/// tabulated up to a volume cap.
class IsoperimetricProfile {
 public:
  struct Step {
    std::int64_t volume;       // smallest volume at which `ratio` is attained
    Rational ratio;
    std::vector<Vertex> witness;
  };

  IsoperimetricProfile(std::int64_t volume_cap, std::vector<Step> steps)
      : volume_cap_(volume_cap), steps_(std::move(steps)) {}

  /// Phi(n); empty when no set has volume <= n. Requires n <= volume_cap().
  std::optional<Rational> at(std::int64_t n) const;
  /// Breakpoints where Phi strictly decreases, by increasing volume.
  const std::vector<Step>& steps() const { return steps_; }
  std::int64_t volume_cap() const { return volume_cap_; }

 private:
  std::int64_t volume_cap_;
  std::vector<Step> steps_;
};

inline constexpr std::size_t kExhaustiveVertexLimit = 22;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// Every subset W (connected or not), Gray-code order. At most 22 vertices.
IsoperimetricProfile isoperimetric_profile_exhaustive(const Graph& g, std::int64_t volume_cap);

/// Connected subsets only, enumerated once each with volume pruning. Throws
/// BudgetError when more than `budget` sets would be visited.
IsoperimetricProfile isoperimetric_profile_connected(const Graph& g, std::int64_t volume_cap,
                                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Exhaustive for small graphs, connected enumeration otherwise.
IsoperimetricProfile isoperimetric_profile_bruteforce(const Graph& g, std::int64_t volume_cap,
                                                      std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace isoprofile
