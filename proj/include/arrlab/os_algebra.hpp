#pragma once

#include <cstdint>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/kernels.hpp"

namespace arrlab {

constexpr std::size_t kDefaultCircuitBound = 16;

enum class CircuitKind { DependentCentral, EmptyIntersection };

/// Minimal subset that is either dependent with nonempty intersection or
/// has empty intersection; every proper subset is independent and central.
struct Circuit {
  IndexSet indices;
  CircuitKind kind;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

const char* to_string(CircuitKind kind);

/// All circuits sorted by size, then lexicographically. Throws TooLarge
/// above `bound` hyperplanes.
std::vector<Circuit> circuits(const Arrangement& a, std::size_t bound = kDefaultCircuitBound);

/// Broken circuits (circuit minus its smallest index) of the dependent
/// central circuits.
std::vector<IndexSet> broken_circuits(const std::vector<Circuit>& cs);

struct NbcProfile {
  std::vector<std::uint64_t> counts;  // counts[k] = number of degree-k nbc sets, k = 0..dim
};

/// Counts the central independent subsets containing no broken circuit, by
/// degree. These are the Betti numbers of the complement.
NbcProfile nbc_profile(const Arrangement& a, std::size_t bound = kDefaultCircuitBound,
                       Exec exec = Exec::Parallel);

}  // namespace arrlab
