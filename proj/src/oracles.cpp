#include "arrlab/oracles.hpp"

#include <cstdlib>
#include <functional>
#include <string>

namespace arrlab {

std::size_t oracle_bound_from_env() {
  if (const char* v = std::getenv("ARRANGEMENT_LAB_ORACLE_BOUND")) {
    char* end = nullptr;
    unsigned long n = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return n;
  }
  return kDefaultOracleBound;
}

namespace {

void whitney_dfs(const Arrangement& a, std::size_t next, std::size_t depth, const AffineSolution& flat,
                 CharPoly& chi) {
  for (std::size_t e = next; e < a.size(); ++e) {
    auto meet = intersect(flat, a[e].normal, a[e].offset);
    if (meet && meet->empty) continue;  // every superset is empty as well
    const AffineSolution& x = meet ? *meet : flat;
    const std::size_t size = depth + 1;
    chi.coeffs[a.dim() - x.dim()] += (size % 2 == 0) ? 1 : -1;
    whitney_dfs(a, e + 1, size, x, chi);
  }
}

}  // namespace

CharPoly char_poly_whitney(const Arrangement& a, std::size_t bound) {
  if (a.size() > bound)
    throw Error(ErrorKind::OracleTooLarge,
                std::to_string(a.size()) + " hyperplanes exceeds the oracle bound " + std::to_string(bound));
  CharPoly chi{std::vector<std::int64_t>(a.dim() + 1, 0)};
  chi.coeffs[0] = 1;
  whitney_dfs(a, 0, 0, AffineSolution::whole_space(a.dim()), chi);
  return chi;
}

std::vector<IndexSet> matroid_components_bruteforce(const std::vector<RatVector>& vectors) {
  const std::size_t n = vectors.size();
  if (n > kMaxPartitionOracleSize)
    throw Error(ErrorKind::OracleTooLarge, std::to_string(n) + " vectors exceeds the partition oracle bound");
  if (n == 0) return {};
  const std::size_t dim = vectors.front().size();

  std::vector<std::size_t> rank_of(std::size_t{1} << n, 0);
  for (std::size_t mask = 1; mask < rank_of.size(); ++mask) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) rows.push_back(vectors[i]);
    rank_of[mask] = rank(RatMatrix::from_rows(rows, dim));
  }
  const std::size_t total = rank_of.back();

  // Restricted growth strings enumerate each set partition once.
  std::vector<std::size_t> block(n, 0), best;
  std::size_t best_blocks = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<std::size_t> masks(used, 0);
      for (std::size_t k = 0; k < n; ++k) masks[block[k]] |= std::size_t{1} << k;
      std::size_t sum = 0;
      for (auto m : masks) sum += rank_of[m];
      if (sum == total && used > best_blocks) {
        best_blocks = used;
        best = block;
      }
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);

  std::vector<IndexSet> out(best_blocks);
  for (std::size_t k = 0; k < n; ++k) out[best[k]].push_back(k);
  return out;  // blocks are already ordered by smallest element
}

}  // namespace arrlab
