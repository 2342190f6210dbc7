#include <omp.h>

#include "arrlab/kernels.hpp"
#include "kernels_common.hpp"

namespace arrlab::kernels {

std::vector<Flat> expand_level_omp(const Arrangement& a, const std::vector<Flat>& level) {
  const auto n = static_cast<std::int64_t>(level.size());
  std::vector<std::vector<IndexSet>> parts(level.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = detail::children(a, level[static_cast<std::size_t>(i)]);

  std::vector<IndexSet> sets = detail::merge_sorted_unique(parts);
  std::vector<Flat> out(sets.size());
  const auto m = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < m; ++i)
    out[static_cast<std::size_t>(i)] = detail::make_flat(a, std::move(sets[static_cast<std::size_t>(i)]));
  return out;
}

// Values at rank k depend only on ranks below k, so each rank level is one
// parallel loop.
std::vector<std::int64_t> moebius_omp(const std::vector<Flat>& flats) {
  std::vector<std::int64_t> mu(flats.size(), 0);
  if (flats.empty()) return mu;
  mu[0] = 1;
  std::size_t begin = 1;
  while (begin < flats.size()) {
    std::size_t end = begin;
    while (end < flats.size() && flats[end].rank == flats[begin].rank) ++end;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = static_cast<std::int64_t>(begin); i < static_cast<std::int64_t>(end); ++i)
      mu[static_cast<std::size_t>(i)] = detail::moebius_at(flats, mu, static_cast<std::size_t>(i));
    begin = end;
  }
  return mu;
}

std::vector<std::uint64_t> nbc_counts_omp(const Arrangement& a, const std::vector<std::uint64_t>& broken) {
  std::vector<std::uint64_t> counts(a.dim() + 1, 0);
  counts[0] = 1;
  const AffineSolution whole = AffineSolution::whole_space(a.dim());
  const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(a.dim() + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto e = static_cast<std::size_t>(i);
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (std::any_of(broken.begin(), broken.end(), [&](std::uint64_t b) { return b == bit; })) continue;
      ++local[1];
      auto meet = intersect(whole, a[e].normal, a[e].offset);
      detail::nbc_dfs(a, broken, bit, e, *meet, local);
    }
#pragma omp critical
    for (std::size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
  }
  return counts;
}

}  // namespace arrlab::kernels
