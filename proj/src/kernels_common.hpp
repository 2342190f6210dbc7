#pragma once

// Helpers shared by the serial and OpenMP kernel translation units.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "arrlab/poset.hpp"

namespace arrlab::kernels::detail {

// Closed index sets of the flats X cap H for every H outside X. Only the
// hyperplane with the smallest index among the new members reports the
// result, which removes same-parent duplicates.
inline std::vector<IndexSet> children(const Arrangement& a, const Flat& x) {
  std::vector<IndexSet> out;
  std::vector<bool> member(a.size(), false);
  for (auto i : x.index_set) member[i] = true;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (member[h]) continue;
    auto meet = intersect(x.witness, a[h].normal, a[h].offset);
    if (!meet || meet->empty) continue;
    IndexSet closed;
    bool first_new = true;
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (member[g] || g == h) {
        closed.push_back(g);
        continue;
      }
      if (contains(a[g].normal, a[g].offset, *meet)) {
        if (g < h) {
          first_new = false;
          break;
        }
        closed.push_back(g);
      }
    }
    if (first_new) out.push_back(std::move(closed));
  }
  return out;
}

inline Flat make_flat(const Arrangement& a, IndexSet s) {
  Flat f;
  f.witness = a.intersection(s);
  f.index_set = std::move(s);
  f.dim = f.witness.dim();
  f.rank = a.dim() - f.dim;
  return f;
}

inline std::vector<IndexSet> merge_sorted_unique(std::vector<std::vector<IndexSet>>& parts) {
  std::vector<IndexSet> all;
  for (auto& p : parts)
    for (auto& s : p) all.push_back(std::move(s));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

inline std::int64_t moebius_at(const std::vector<Flat>& flats, const std::vector<std::int64_t>& mu, std::size_t i) {
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < i && flats[j].rank < flats[i].rank; ++j)
    if (is_subset(flats[j].index_set, flats[i].index_set)) sum += mu[j];
  return -sum;
}

// Depth-first nbc enumeration below a fixed prefix. `mask` holds the
// current independent central set, `last` its largest index.
inline void nbc_dfs(const Arrangement& a, const std::vector<std::uint64_t>& broken, std::uint64_t mask,
                    std::size_t last, const AffineSolution& flat, std::vector<std::uint64_t>& counts) {
  for (std::size_t e = last + 1; e < a.size(); ++e) {
    const std::uint64_t next = mask | (std::uint64_t{1} << e);
    bool has_broken = std::any_of(broken.begin(), broken.end(), [&](std::uint64_t b) {
      return (b >> e & 1) && (b & ~next) == 0;
    });
    if (has_broken) continue;
    if (is_zero(pull_back(a[e].normal, a[e].offset, flat).normal)) continue;  // dependent or disjoint
    auto meet = intersect(flat, a[e].normal, a[e].offset);
    ++counts[static_cast<std::size_t>(std::popcount(next))];
    nbc_dfs(a, broken, next, e, *meet, counts);
  }
}

}  // namespace arrlab::kernels::detail
