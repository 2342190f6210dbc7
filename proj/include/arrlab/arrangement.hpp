#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrlab/errors.hpp"
#include "arrlab/linalg.hpp"
#include "arrlab/rational.hpp"

namespace arrlab {

/// Sorted list of hyperplane indices.
using IndexSet = std::vector<std::size_t>;

std::string to_string(const IndexSet& s);

/// The affine hyperplane {x : normal . x = offset}.
struct Hyperplane {
  RatVector normal;
  Rat offset;
  std::string label;
};

/// Ordered, duplicate-free list of affine hyperplanes in Q^dim. The list
/// order is the index order used by every downstream computation.
class Arrangement {
 public:
  Arrangement() = default;
  /// Validates the hyperplanes. Empty labels become "H1", "H2", ...
  /// Throws ZeroNormal, DuplicateHyperplane or MalformedInput.
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  std::vector<std::string> labels(const IndexSet& s) const;

  /// The linear system whose solution set is the intersection of the
  /// hyperplanes in s.
  AffineSolution intersection(const IndexSet& s) const;

  friend bool operator==(const Arrangement& a, const Arrangement& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

/// Scales (normal, offset) so the first nonzero normal entry is 1. Two
/// hyperplanes coincide iff their normalized forms are equal.
std::pair<RatVector, Rat> normalized_equation(const RatVector& normal, const Rat& offset);

Arrangement parse_arrangement(std::string_view json_text);
std::string serialize(const Arrangement& a);

bool is_essential(const Arrangement& a);

struct DeletionRestriction {
  Arrangement deleted;     // A' = A without h, same dimension
  Arrangement restricted;  // A'' = traces of A' on h, intrinsic coordinates of h
  /// For each hyperplane of `restricted`, the indices in the original
  /// arrangement whose traces coincide with it.
  std::vector<IndexSet> parents;
};

DeletionRestriction delete_restrict(const Arrangement& a, std::size_t h);

struct GenericVerdict {
  bool generic = true;
  std::optional<IndexSet> violation;  // first violating flat, canonical order
};

GenericVerdict is_generic(const Arrangement& a, const Hyperplane& u);

constexpr int kDefaultGenericAttempts = 64;

/// Seeded search for a hyperplane generic to a. Integer coefficients are
/// drawn from [-w, w], w doubling after each rejected candidate.
Hyperplane random_generic_hyperplane(const Arrangement& a, std::uint64_t seed,
                                     int max_attempts = kDefaultGenericAttempts);

/// The arrangement {H cap U} in intrinsic coordinates of U. Hyperplane order
/// and labels are those of a. Throws NotGenericError.
Arrangement section(const Arrangement& a, const Hyperplane& u);

class NotGenericError : public Error {
 public:
  explicit NotGenericError(IndexSet flat)
      : Error(ErrorKind::NotGeneric, "hyperplane is not generic at flat " + to_string(flat)),
        flat_(std::move(flat)) {}
  const IndexSet& flat() const { return flat_; }

 private:
  IndexSet flat_;
};

}  // namespace arrlab
