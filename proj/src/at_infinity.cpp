#include "arrlab/at_infinity.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "arrlab/poset.hpp"

namespace arrlab {

ConedArrangement cone(const Arrangement& a) {
  ConedArrangement c;
  c.base = a;
  for (const auto& h : a.hyperplanes()) {
    RatVector v = h.normal;
    v.push_back(-h.offset);
    c.homogenized_normals.push_back(std::move(v));
  }
  RatVector inf(a.dim() + 1, Rat(0));
  inf.back() = 1;
  c.homogenized_normals.push_back(std::move(inf));
  c.infinity_index = a.size();
  return c;
}

Arrangement ConedArrangement::as_central() const {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < homogenized_normals.size(); ++i)
    hs.push_back({homogenized_normals[i], Rat(0), i == infinity_index ? kInfinityLabel : base[i].label});
  return Arrangement(base.dim() + 1, std::move(hs));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

std::vector<IndexSet> matroid_components(const std::vector<RatVector>& vectors) {
  const std::size_t n = vectors.size();
  if (n == 0) return {};
  const std::size_t dim = vectors.front().size();
  for (std::size_t i = 0; i < n; ++i)
    if (is_zero(vectors[i])) throw Error(ErrorKind::ZeroVector, "vector " + std::to_string(i + 1));

  std::vector<std::size_t> basis;
  std::vector<RatVector> basis_vectors;
  for (std::size_t i = 0; i < n; ++i) {
    basis_vectors.push_back(vectors[i]);
    if (rank(RatMatrix::from_rows(basis_vectors, dim)) == basis_vectors.size())
      basis.push_back(i);
    else
      basis_vectors.pop_back();
  }

  UnionFind uf(n);
  const RatMatrix b = RatMatrix::from_columns(basis_vectors, dim);
  std::size_t next_basis = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (next_basis < basis.size() && basis[next_basis] == i) {
      ++next_basis;
      continue;
    }
    // Coordinates of vectors[i] in the basis; the support plus i is its
    // fundamental circuit.
    AffineSolution coords = solve_affine(b, vectors[i]);
    assert(!coords.empty && coords.directions.empty());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!coords.point[k].is_zero()) uf.unite(i, basis[k]);
  }

  std::vector<IndexSet> blocks;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (slot[r] == n) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

std::vector<DenseEdge> dense_edges(const Arrangement& a) {
  if (!is_essential(a)) throw Error(ErrorKind::NotEssential, "dense edges need an essential arrangement");
  const ConedArrangement c = cone(a);
  const IntersectionPoset p = build(c.as_central());

  std::vector<DenseEdge> edges;
  for (const auto& flat : p.flats()) {
    if (flat.dim == 0) continue;  // the cone point is not a projective subspace
    if (!std::binary_search(flat.index_set.begin(), flat.index_set.end(), c.infinity_index)) continue;
    edges.push_back({flat.index_set, flat.rank, false});
  }

  const auto n = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto& e = edges[static_cast<std::size_t>(i)];
    std::vector<RatVector> sub;
    for (auto k : e.flat_indices) sub.push_back(c.homogenized_normals[k]);
    // Normals are nonzero, so the linear matroid has no loops and
    // essentialization does not change its components.
    e.dense = matroid_components(sub).size() == 1;
  }
  return edges;
}

std::vector<std::string> edge_labels(const ConedArrangement& c, const DenseEdge& e) {
  std::vector<std::string> out;
  for (auto k : e.flat_indices) out.push_back(k == c.infinity_index ? kInfinityLabel : c.base[k].label);
  return out;
}

}  // namespace arrlab
