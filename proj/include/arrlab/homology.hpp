#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrlab/local_system.hpp"
#include "arrlab/poset.hpp"

namespace arrlab {

enum class Space { FullComplement, GenericSection };

const char* to_string(Space s);

/// Twisted homology dimensions from the vanishing theorem: a single nonzero
/// degree (dim for the complement, dim-1 for a generic section).
struct HomologyReport {
  Space space = Space::FullComplement;
  std::vector<std::uint64_t> dims;  // indexed by degree
  std::size_t rank = 1;
  std::int64_t euler_used = 0;      // Euler characteristic the formula was applied to
};

/// Dimension bookkeeping for surjectivity of the twisted Hurewicz map onto
/// H_{dim-1} of a generic section: the r * b_top boundaries of the top cells
/// split as kernel (top homology of the complement) plus image.
struct HurewiczCertificate {
  std::uint64_t top_cells = 0;   // b_top of the complement
  std::uint64_t generators = 0;  // rank * top_cells
  std::uint64_t kernel_dim = 0;
  std::uint64_t image_dim = 0;
  bool surjective = false;
  std::vector<std::string> warnings;
};

HomologyReport homology_dims(const Arrangement& a, const LocalSystem& l);
HomologyReport section_homology_dims(const Arrangement& a, const LocalSystem& l);
HurewiczCertificate hurewicz_certificate(const Arrangement& a, const LocalSystem& l);

struct EulerPositivity {
  std::int64_t value = 0;  // (-1)^(dim-1) chi(A cap U, 1)
  bool positive = false;
};
EulerPositivity euler_positivity(const Arrangement& a);

struct HomotopyWitness {
  std::int64_t euler_k = 0;  // Euler characteristic of a generic k-dimensional section
  bool nonvanishing = false;
};
HomotopyWitness homotopy_nonvanishing(const Arrangement& a, std::size_t k);

}  // namespace arrlab
