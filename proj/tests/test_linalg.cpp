#include <doctest.h>

#include <random>

#include "arrlab/errors.hpp"
#include "arrlab/linalg.hpp"
#include "support.hpp"

using namespace arrlab;
using arrlab::testing::vec;

namespace {

// Laplace expansion; exponential, only for tiny matrices.
Rat det_minor(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Rat acc = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Rat term = m(rows[0], cols[j]) * det_minor(m, sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const RatMatrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs)
        if (!det_minor(m, r, c).is_zero()) return k;
  }
  return 0;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> d(-2, 2), den(1, 3);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(d(rng)) / Rat(den(rng));
  return m;
}

}  // namespace

TEST_CASE("Rat parsing and normalization") {
  CHECK(Rat::parse("6/4") == Rat(3) / Rat(2));
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("0/7").str() == "0");
  CHECK(Rat::parse(" 5 ").str() == "5");
}

TEST_CASE("Rat parsing rejects malformed input") {
  for (const char* bad : {"2/0", "", "1/", "/2", "a", "1.5", "1/2/3", "--1", "4/-2"}) {
    CAPTURE(bad);
    try {
      Rat::parse(bad);
      FAIL("expected MalformedInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedInput);
    }
  }
}

TEST_CASE("Rat arithmetic is exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000000, 1000000), den(1, 999983);
  for (int i = 0; i < 500; ++i) {
    Rat a = Rat(d(rng)) / Rat(den(rng)), b = Rat(d(rng)) / Rat(den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix(2, 4)) == 0);
  auto m = RatMatrix::from_rows({vec({1, 0, 0}), vec({1, 0, -1}), vec({0, 0, 1})}, 3);
  CHECK(rank_by_minors(m) == 2);
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(RatMatrix::identity(2)).empty());
  CHECK(nullspace(RatMatrix::from_rows({vec({1, 1, 1})}, 3)).size() == 2);
  // columns (1,0), (0,1), (1,1)
  auto m = RatMatrix::from_columns({vec({1, 0}), vec({0, 1}), vec({1, 1})}, 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == vec({1, 1, -1}));
  CHECK(is_zero(m * ns[0]));
}

TEST_CASE("nullspace vectors are canonical") {
  auto m = RatMatrix::from_rows({vec({2, -4, 6, 0})}, 4);
  for (const auto& v : nullspace(m)) {
    mpz_class g = 0;
    Rat lead;
    for (const auto& x : v) {
      CHECK(x.is_integer());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
      if (lead.is_zero()) lead = x;
    }
    CHECK(g == 1);
    CHECK(lead.sign() > 0);
  }
}

TEST_CASE("solve_affine examples") {
  auto parallel = solve_affine(RatMatrix::from_rows({vec({1}), vec({1})}, 1), vec({0, 1}));
  CHECK(parallel.empty);

  auto plane = solve_affine(RatMatrix::from_rows({vec({1, 0, 0})}, 3), vec({0}));
  REQUIRE_FALSE(plane.empty);
  CHECK(plane.point == vec({0, 0, 0}));
  CHECK(plane.directions.size() == 2);

  auto pt = solve_affine(RatMatrix::from_rows({vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 1})}, 3), vec({0, 0, 1}));
  REQUIRE_FALSE(pt.empty);
  CHECK(pt.point == vec({0, 0, 1}));
  CHECK(pt.directions.empty());
}

TEST_CASE("property: rank-nullity, solutions, and rank invariance") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<long> scale(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = size(rng), c = size(rng);
    RatMatrix m = random_matrix(rng, r, c);
    // Occasionally force a dependent row.
    if (r > 1 && iter % 3 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rat(2) - m(r > 2 ? 1 : 0, j);

    const std::size_t rk = rank(m);
    CHECK(rk == rank_by_minors(m));
    const auto ns = nullspace(m);
    CHECK(rk + ns.size() == c);
    for (const auto& v : ns) CHECK(is_zero(m * v));

    RatVector b(r);
    for (auto& x : b) x = Rat(static_cast<long>(scale(rng)));
    auto sol = solve_affine(m, b);
    if (!sol.empty) {
      CHECK(m * sol.point == b);
      for (const auto& d : sol.directions) CHECK(is_zero(m * d));
      CHECK(sol.dim() == c - rk);
    } else {
      RatMatrix aug(r, c + 1);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
        aug(i, c) = b[i];
      }
      CHECK(rank(aug) == rk + 1);
    }

    // Row permutation and nonzero row scaling preserve rank.
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMatrix pm(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      Rat s = Rat(scale(rng)) * (iter % 2 ? Rat(-1) : Rat(1));
      for (std::size_t j = 0; j < c; ++j) pm(i, j) = m(perm[i], j) * s;
    }
    CHECK(rank(pm) == rk);
  }
}

TEST_CASE("intersect a parametrized subspace with a hyperplane") {
  auto plane = AffineSolution::whole_space(3);
  auto line = intersect(plane, vec({1, 1, 0}), Rat(2));
  REQUIRE(line);
  CHECK(line->dim() == 2);
  auto pt = intersect(*line, vec({1, -1, 0}), Rat(0));
  REQUIRE(pt);
  CHECK(pt->dim() == 1);
  CHECK(dot(vec({1, 1, 0}), pt->point) == Rat(2));
  CHECK(dot(vec({1, -1, 0}), pt->point) == Rat(0));
  CHECK_FALSE(intersect(*pt, vec({1, 1, 0}), Rat(2)));      // contains
  CHECK(intersect(*pt, vec({1, 1, 0}), Rat(5))->empty);     // disjoint
}
