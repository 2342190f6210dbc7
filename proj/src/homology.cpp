#include "arrlab/homology.hpp"

#include <cassert>

namespace arrlab {

const char* to_string(Space s) { return s == Space::FullComplement ? "full_complement" : "generic_section"; }

namespace {

std::int64_t sign_pow(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

void require_essential(const Arrangement& a) {
  if (!is_essential(a)) throw Error(ErrorKind::NotEssential, "arrangement normals do not span the space");
}

void require_section_dim(const Arrangement& a) {
  if (a.dim() < 2) throw Error(ErrorKind::DimensionTooSmall, "generic sections need dimension >= 2");
}

void require_nonresonant(const Arrangement& a, const LocalSystem& l) {
  ResonanceVerdict v = nonresonance_check(a, l);
  if (!v.nonresonant) throw ResonantError(std::move(v));
}

HomologyReport concentrated(Space space, std::size_t degree, std::size_t top, std::size_t rank,
                            std::int64_t euler) {
  const std::int64_t value = sign_pow(degree) * static_cast<std::int64_t>(rank) * euler;
  if (value < 0) throw std::logic_error("negative homology dimension; vanishing formula violated");
  HomologyReport r;
  r.space = space;
  r.dims.assign(top + 1, 0);
  r.dims[degree] = static_cast<std::uint64_t>(value);
  r.rank = rank;
  r.euler_used = euler;
  return r;
}

}  // namespace

HomologyReport homology_dims(const Arrangement& a, const LocalSystem& l) {
  require_essential(a);
  require_nonresonant(a, l);
  const CharPoly chi = char_poly(a);
  return concentrated(Space::FullComplement, a.dim(), a.dim(), l.rank, chi.eval(1));
}

HomologyReport section_homology_dims(const Arrangement& a, const LocalSystem& l) {
  require_essential(a);
  require_section_dim(a);
  require_nonresonant(a, l);
  const CharPoly sec = section_char_poly(a);
  return concentrated(Space::GenericSection, a.dim() - 1, a.dim() - 1, l.rank, sec.eval(1));
}

HurewiczCertificate hurewicz_certificate(const Arrangement& a, const LocalSystem& l) {
  require_essential(a);
  require_section_dim(a);
  require_nonresonant(a, l);

  HurewiczCertificate cert;
  const std::size_t dim = a.dim();
  const CharPoly chi = char_poly(a);
  const std::int64_t b_top = sign_pow(dim) * chi.constant_term();
  assert(b_top >= 0);
  cert.top_cells = static_cast<std::uint64_t>(b_top);
  cert.generators = l.rank * cert.top_cells;
  cert.kernel_dim = concentrated(Space::FullComplement, dim, dim, l.rank, chi.eval(1)).dims[dim];
  cert.image_dim =
      concentrated(Space::GenericSection, dim - 1, dim - 1, l.rank, section_char_poly(chi).eval(1)).dims[dim - 1];

  if (cert.generators != cert.kernel_dim + cert.image_dim)
    throw std::logic_error("dimension count is not exact: " + std::to_string(cert.generators) +
                           " != " + std::to_string(cert.kernel_dim) + " + " + std::to_string(cert.image_dim));
  cert.surjective = true;

  if (dim < 3)
    cert.warnings.push_back("dimension " + std::to_string(dim) +
                            " is below the standing assumption ℓ >= 3 of the surjectivity theorem; "
                            "the dimension identities still hold");
  if (cert.kernel_dim == 0)
    cert.warnings.push_back("Euler characteristic of the complement is 0: all twisted homology of the "
                            "complement vanishes and the top-cell boundaries map isomorphically onto "
                            "the section's homology");
  return cert;
}

EulerPositivity euler_positivity(const Arrangement& a) {
  require_essential(a);
  require_section_dim(a);
  const std::int64_t value = sign_pow(a.dim() - 1) * section_char_poly(a).eval(1);
  return {value, value > 0};
}

HomotopyWitness homotopy_nonvanishing(const Arrangement& a, std::size_t k) {
  require_essential(a);
  if (k < 2 || k + 1 > a.dim())
    throw Error(ErrorKind::KOutOfRange,
                "k = " + std::to_string(k) + " outside [2, " + std::to_string(a.dim()) + " - 1]");
  CharPoly chi = char_poly(a);
  while (chi.degree() > k) chi = section_char_poly(chi);
  const std::int64_t euler = chi.eval(1);
  return {euler, sign_pow(k) * euler > 0};
}

}  // namespace arrlab
