#pragma once

// Independent brute-force routes used to cross-check the production
// algorithms. Exponential; gated by size bounds.

#include <cstddef>
#include <vector>

#include "arrlab/poset.hpp"

namespace arrlab {

constexpr std::size_t kDefaultOracleBound = 20;
constexpr std::size_t kMaxPartitionOracleSize = 10;

/// ARRANGEMENT_LAB_ORACLE_BOUND when set to a positive integer, otherwise
/// kDefaultOracleBound.
std::size_t oracle_bound_from_env();

/// Sum over subsets S with nonempty intersection of (-1)^|S| t^dim(cap S).
/// Throws OracleTooLarge when a.size() > bound.
CharPoly char_poly_whitney(const Arrangement& a, std::size_t bound = kDefaultOracleBound);

/// Components of the linear matroid on `vectors` as the finest partition
/// whose block ranks sum to the total rank, found by enumerating every set
/// partition. Throws OracleTooLarge above kMaxPartitionOracleSize elements.
std::vector<IndexSet> matroid_components_bruteforce(const std::vector<RatVector>& vectors);

}  // namespace arrlab
