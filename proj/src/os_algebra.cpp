#include "arrlab/os_algebra.hpp"

#include <algorithm>
#include <set>

namespace arrlab {

const char* to_string(CircuitKind kind) {
  return kind == CircuitKind::DependentCentral ? "dependent_central" : "empty_intersection";
}

namespace {

void require_bound(const Arrangement& a, std::size_t bound) {
  if (a.size() > bound || a.size() > 64)
    throw Error(ErrorKind::TooLarge, std::to_string(a.size()) + " hyperplanes exceeds the bound " +
                                         std::to_string(std::min<std::size_t>(bound, 64)));
}

struct CircuitSearch {
  const Arrangement& a;
  std::set<IndexSet> independent;  // independent central sets
  std::vector<Circuit> candidates;  // minimal over their prefix only

  void dfs(IndexSet& s, const AffineSolution& flat) {
    independent.insert(s);
    const std::size_t start = s.empty() ? 0 : s.back() + 1;
    for (std::size_t e = start; e < a.size(); ++e) {
      auto meet = intersect(flat, a[e].normal, a[e].offset);
      s.push_back(e);
      if (meet && !meet->empty) {
        dfs(s, *meet);
      } else {
        candidates.push_back({s, meet ? CircuitKind::EmptyIntersection : CircuitKind::DependentCentral});
      }
      s.pop_back();
    }
  }

  // Valid once the search has finished: independent central sets are closed
  // under subsets, so the DFS reaches every one of them through its prefixes.
  bool all_facets_independent(const IndexSet& s) const {
    for (std::size_t skip = 0; skip + 1 < s.size(); ++skip) {
      IndexSet t;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) t.push_back(s[i]);
      if (!independent.contains(t)) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Circuit> circuits(const Arrangement& a, std::size_t bound) {
  require_bound(a, bound);
  CircuitSearch search{a, {}, {}};
  IndexSet s;
  search.dfs(s, AffineSolution::whole_space(a.dim()));
  std::vector<Circuit> out;
  for (auto& c : search.candidates)
    if (search.all_facets_independent(c.indices)) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const Circuit& x, const Circuit& y) {
    return x.indices.size() != y.indices.size() ? x.indices.size() < y.indices.size() : x.indices < y.indices;
  });
  return out;
}

std::vector<IndexSet> broken_circuits(const std::vector<Circuit>& cs) {
  std::vector<IndexSet> out;
  for (const auto& c : cs)
    if (c.kind == CircuitKind::DependentCentral) out.emplace_back(c.indices.begin() + 1, c.indices.end());
  return out;
}

NbcProfile nbc_profile(const Arrangement& a, std::size_t bound, Exec exec) {
  require_bound(a, bound);
  std::vector<std::uint64_t> masks;
  for (const auto& b : broken_circuits(circuits(a, bound))) {
    std::uint64_t m = 0;
    for (auto i : b) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  return {exec == Exec::Serial ? kernels::nbc_counts_serial(a, masks) : kernels::nbc_counts_omp(a, masks)};
}

}  // namespace arrlab
