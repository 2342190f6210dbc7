#include "arrlab/linalg.hpp"

#include <cassert>
#include <utility>

namespace arrlab {

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    assert(columns[j].size() == rows);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::operator*(const RatVector& x) const {
  assert(x.size() == cols_);
  RatVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j).value() * x[j].value();
    y[i] = Rat(std::move(acc));
  }
  return y;
}

AffineSolution AffineSolution::whole_space(std::size_t n) {
  AffineSolution s;
  s.empty = false;
  s.point.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rat(0));
    e[i] = 1;
    s.directions.push_back(std::move(e));
  }
  return s;
}

namespace {

using IntRow = std::vector<mpz_class>;

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

// Clears denominators row by row, then runs fraction-free (Bareiss)
// elimination. Every division below is exact.
Echelon bareiss(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<IntRow> a(nr, IntRow(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) {
      const mpq_class& q = m(i, j).value();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }

  Echelon e;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

// Reduced row echelon form over the rationals, built from the integer
// echelon form.
std::vector<RatVector> reduce(const Echelon& e, std::size_t nc) {
  const std::size_t r = e.rows.size();
  std::vector<RatVector> rr(r, RatVector(nc));
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& piv = e.rows[i][e.pivots[i]];
    for (std::size_t j = 0; j < nc; ++j) rr[i][j] = Rat(e.rows[i][j], piv);
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (rr[k][pc].is_zero()) continue;
      Rat f = rr[k][pc];
      for (std::size_t j = pc; j < nc; ++j) rr[k][j] -= f * rr[i][j];
    }
  }
  return rr;
}

std::vector<RatVector> nullspace_from_rref(const std::vector<RatVector>& rr,
                                           const std::vector<std::size_t>& pivots, std::size_t nc) {
  std::vector<bool> is_pivot(nc, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(nc, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rr[i][f];
    basis.push_back(canonical_integer_vector(v));
  }
  return basis;
}

}  // namespace

RatVector canonical_integer_vector(const RatVector& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].value().get_num() * (l / v[i].value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  int lead = 0;
  for (const auto& x : ints)
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(mpz_class(ints[i] / g), mpz_class(1));
  return out;
}

std::size_t rank(const RatMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
  Echelon e = bareiss(m);
  return nullspace_from_rref(reduce(e, m.cols()), e.pivots, m.cols());
}

AffineSolution solve_affine(const RatMatrix& m, const RatVector& b) {
  assert(b.size() == m.rows());
  const std::size_t nc = m.cols();
  RatMatrix aug(m.rows(), nc + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug(i, j) = m(i, j);
    aug(i, nc) = b[i];
  }
  Echelon e = bareiss(aug);
  AffineSolution s;
  if (!e.pivots.empty() && e.pivots.back() == nc) return s;  // 0 = nonzero row

  auto rr = reduce(e, nc + 1);
  s.empty = false;
  s.point.assign(nc, Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.point[e.pivots[i]] = rr[i][nc];
  for (auto& row : rr) row.pop_back();
  s.directions = nullspace_from_rref(rr, e.pivots, nc);
  return s;
}

PulledBack pull_back(const RatVector& normal, const Rat& offset, const AffineSolution& space) {
  PulledBack pb;
  pb.normal.reserve(space.directions.size());
  for (const auto& d : space.directions) pb.normal.push_back(dot(normal, d));
  pb.offset = offset - dot(normal, space.point);
  return pb;
}

bool contains(const RatVector& normal, const Rat& offset, const AffineSolution& space) {
  assert(!space.empty);
  if (dot(normal, space.point) != offset) return false;
  for (const auto& d : space.directions)
    if (!dot(normal, d).is_zero()) return false;
  return true;
}

std::optional<AffineSolution> intersect(const AffineSolution& space, const RatVector& normal,
                                        const Rat& offset) {
  assert(!space.empty);
  PulledBack pb = pull_back(normal, offset, space);
  if (is_zero(pb.normal)) {
    if (pb.offset.is_zero()) return std::nullopt;
    return AffineSolution{};
  }
  AffineSolution local = solve_affine(RatMatrix::from_rows({pb.normal}, pb.normal.size()), {pb.offset});
  const std::size_t n = space.point.size();
  AffineSolution out;
  out.empty = false;
  out.point = space.point;
  for (std::size_t i = 0; i < local.point.size(); ++i)
    if (!local.point[i].is_zero())
      for (std::size_t c = 0; c < n; ++c) out.point[c] += local.point[i] * space.directions[i][c];
  for (const auto& t : local.directions) {
    RatVector d(n, Rat(0));
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!t[i].is_zero())
        for (std::size_t c = 0; c < n; ++c) d[c] += t[i] * space.directions[i][c];
    out.directions.push_back(std::move(d));
  }
  return out;
}

}  // namespace arrlab
