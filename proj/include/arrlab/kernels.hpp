#pragma once

// Enumeration kernels behind the poset and nbc computations. Each kernel has
// a serial reference version and an OpenMP version that must return
// identical results; tests and the benchmark compare the two.

#include <cstdint>
#include <vector>

#include "arrlab/arrangement.hpp"

namespace arrlab {

struct Flat;

/// Selects the serial reference kernels or the OpenMP kernels.
enum class Exec { Serial, Parallel };

namespace kernels {

/// One BFS step: all flats of rank r+1 reachable from the given rank-r
/// flats, deduplicated and sorted by index set, with canonical witnesses.
std::vector<Flat> expand_level_serial(const Arrangement& a, const std::vector<Flat>& level);
std::vector<Flat> expand_level_omp(const Arrangement& a, const std::vector<Flat>& level);

/// Moebius values for flats in canonical order (rank-sorted).
std::vector<std::int64_t> moebius_serial(const std::vector<Flat>& flats);
std::vector<std::int64_t> moebius_omp(const std::vector<Flat>& flats);

/// nbc counts by degree, given broken circuits as bitmasks over the
/// hyperplane indices. Requires a.size() <= 64.
std::vector<std::uint64_t> nbc_counts_serial(const Arrangement& a, const std::vector<std::uint64_t>& broken);
std::vector<std::uint64_t> nbc_counts_omp(const Arrangement& a, const std::vector<std::uint64_t>& broken);

}  // namespace kernels

}  // namespace arrlab
