#pragma once

#include <vector>

#include "arrlab/arrangement.hpp"

namespace arrlab {

inline constexpr const char* kInfinityLabel = "H_inf";

/// Projective closure of an affine arrangement, coned to a central
/// arrangement in dimension dim+1. H: a.x = c maps to the vector (a, -c);
/// the hyperplane at infinity is (0,...,0,1) and comes last.
struct ConedArrangement {
  Arrangement base;
  std::vector<RatVector> homogenized_normals;
  std::size_t infinity_index = 0;

  /// The central arrangement of the homogenized normals, labels of base
  /// plus kInfinityLabel.
  Arrangement as_central() const;
};

ConedArrangement cone(const Arrangement& a);

/// Connected components of the linear matroid on the vectors, via the
/// fundamental circuits of a greedy basis. Blocks are sorted and ordered by
/// smallest element. Throws ZeroVector.
std::vector<IndexSet> matroid_components(const std::vector<RatVector>& vectors);

/// A flat of the coned arrangement lying in the hyperplane at infinity.
struct DenseEdge {
  IndexSet flat_indices;  // indices into the coned arrangement, includes infinity
  std::size_t rank = 0;
  bool dense = false;
};

/// Every proper flat of the projective closure contained in H_inf, in
/// canonical flat order, flagged dense when its subarrangement has a
/// connected matroid. H_inf alone is always dense. Throws NotEssential.
std::vector<DenseEdge> dense_edges(const Arrangement& a);

std::vector<std::string> edge_labels(const ConedArrangement& c, const DenseEdge& e);

}  // namespace arrlab
