#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/kernels.hpp"

namespace arrlab {

/// A nonempty intersection of hyperplanes. Identity is the closed index
/// set: every hyperplane containing the flat is listed.
struct Flat {
  IndexSet index_set;
  std::size_t dim = 0;
  std::size_t rank = 0;
  AffineSolution witness;
};

/// Intersection poset L(A) ordered by reverse inclusion, i.e. X <= Y iff
/// index_set(X) is a subset of index_set(Y). Flats are stored in canonical
/// order (rank, then lexicographic index set); moebius() is aligned with
/// flats().
class IntersectionPoset {
 public:
  IntersectionPoset() = default;
  IntersectionPoset(std::size_t ambient_dim, std::vector<Flat> flats, std::vector<std::int64_t> moebius);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return flats_.size(); }
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& operator[](std::size_t i) const { return flats_[i]; }
  const std::vector<std::int64_t>& moebius() const { return moebius_; }
  std::int64_t moebius(std::size_t i) const { return moebius_[i]; }

  std::size_t max_rank() const;
  /// Number of flats of each rank 0..ambient_dim.
  std::vector<std::size_t> rank_profile() const;
  std::span<const Flat> flats_of_rank(std::size_t r) const;

  bool leq(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> find(const IndexSet& s) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Flat> flats_;
  std::vector<std::int64_t> moebius_;
  std::vector<std::size_t> rank_begin_;  // rank_begin_[r] = first flat of rank r
};

bool is_subset(const IndexSet& a, const IndexSet& b);

/// Builds L(A) by closure-driven breadth-first search from the whole space.
/// Level expansion and the Moebius recursion run on the selected kernels;
/// both choices produce identical posets.
IntersectionPoset build(const Arrangement& a, Exec exec = Exec::Parallel);

/// Characteristic polynomial, coefficient of t^(degree-k) at position k.
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::int64_t eval(std::int64_t t) const;
  std::int64_t constant_term() const { return coeffs.back(); }
  std::string str() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Difference of polynomials of possibly different degree.
CharPoly operator-(const CharPoly& p, const CharPoly& q);

CharPoly char_poly(const IntersectionPoset& p);
CharPoly char_poly(const Arrangement& a);

/// (chi(t) - chi(0)) / t: the characteristic polynomial of a generic section.
CharPoly section_char_poly(const CharPoly& chi);
CharPoly section_char_poly(const Arrangement& a);

struct BettiEuler {
  std::vector<std::uint64_t> betti;
  std::int64_t euler = 0;
};
BettiEuler betti_and_euler(const CharPoly& chi);
BettiEuler betti_and_euler(const Arrangement& a);

/// Drops the flats of rank ambient_dim.
IntersectionPoset truncate(const IntersectionPoset& p);

/// True iff p and q have the same flats (same index sets with equal ranks)
/// and the same order relation. Indices are matched position by position.
bool isomorphic_by_index(const IntersectionPoset& p, const IntersectionPoset& q);

}  // namespace arrlab
