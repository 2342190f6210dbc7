#include "arrlab/kernels.hpp"
#include "kernels_common.hpp"

namespace arrlab::kernels {

std::vector<Flat> expand_level_serial(const Arrangement& a, const std::vector<Flat>& level) {
  std::vector<std::vector<IndexSet>> parts;
  parts.reserve(level.size());
  for (const auto& x : level) parts.push_back(detail::children(a, x));
  std::vector<Flat> out;
  for (auto& s : detail::merge_sorted_unique(parts)) out.push_back(detail::make_flat(a, std::move(s)));
  return out;
}

std::vector<std::int64_t> moebius_serial(const std::vector<Flat>& flats) {
  std::vector<std::int64_t> mu(flats.size(), 0);
  if (flats.empty()) return mu;
  mu[0] = 1;
  for (std::size_t i = 1; i < flats.size(); ++i) mu[i] = detail::moebius_at(flats, mu, i);
  return mu;
}

std::vector<std::uint64_t> nbc_counts_serial(const Arrangement& a, const std::vector<std::uint64_t>& broken) {
  std::vector<std::uint64_t> counts(a.dim() + 1, 0);
  counts[0] = 1;
  const AffineSolution whole = AffineSolution::whole_space(a.dim());
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (std::any_of(broken.begin(), broken.end(), [&](std::uint64_t b) { return b == (std::uint64_t{1} << e); }))
      continue;
    ++counts[1];
    auto meet = intersect(whole, a[e].normal, a[e].offset);
    detail::nbc_dfs(a, broken, std::uint64_t{1} << e, e, *meet, counts);
  }
  return counts;
}

}  // namespace arrlab::kernels
