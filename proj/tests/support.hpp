#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/poset.hpp"

namespace arrlab::testing {

// Hyperplanes as integer rows (a_1, ..., a_l, c) meaning a . x = c.
inline Arrangement arr(std::size_t dim, const std::vector<std::vector<long>>& rows) {
  std::vector<Hyperplane> hs;
  for (const auto& r : rows) {
    Hyperplane h;
    for (std::size_t i = 0; i < dim; ++i) h.normal.emplace_back(r[i]);
    h.offset = Rat(r[dim]);
    hs.push_back(std::move(h));
  }
  return Arrangement(dim, std::move(hs));
}

inline Hyperplane hyp(const std::vector<long>& normal, long offset) {
  Hyperplane h;
  for (auto x : normal) h.normal.emplace_back(x);
  h.offset = Rat(offset);
  return h;
}

inline RatVector vec(const std::vector<long>& xs) {
  RatVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline Arrangement boolean(std::size_t dim) {
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<long> r(dim + 1, 0);
    r[i] = 1;
    rows.push_back(r);
  }
  return arr(dim, rows);
}

inline Arrangement gp4() { return arr(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 1}}); }

inline CharPoly poly(std::vector<std::int64_t> c) { return CharPoly{std::move(c)}; }

// (t-1)^n
inline CharPoly boolean_poly(std::size_t n) {
  std::vector<std::int64_t> c{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i];
    }
    c = next;
  }
  return CharPoly{c};
}

// Random arrangement with integer coefficients in [-coef, coef]; zero
// normals and repeated hyperplanes are redrawn.
inline Arrangement random_arrangement(std::mt19937_64& rng, std::size_t dim, std::size_t n, long coef = 3) {
  std::uniform_int_distribution<long> d(-coef, coef);
  std::set<std::pair<RatVector, Rat>> seen;
  std::vector<Hyperplane> hs;
  while (hs.size() < n) {
    Hyperplane h;
    for (std::size_t i = 0; i < dim; ++i) h.normal.emplace_back(d(rng));
    h.offset = Rat(d(rng));
    if (is_zero(h.normal)) continue;
    if (!seen.insert(normalized_equation(h.normal, h.offset)).second) continue;
    hs.push_back(std::move(h));
  }
  return Arrangement(dim, std::move(hs));
}

inline Arrangement random_essential(std::mt19937_64& rng, std::size_t dim, std::size_t n, long coef = 3) {
  for (;;) {
    Arrangement a = random_arrangement(rng, dim, n, coef);
    if (is_essential(a)) return a;
  }
}

inline std::string data_path(const std::string& name) { return std::string(ARRLAB_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace arrlab::testing
