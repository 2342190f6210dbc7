#include "arrlab/poset.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace arrlab {

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntersectionPoset::IntersectionPoset(std::size_t ambient_dim, std::vector<Flat> flats,
                                     std::vector<std::int64_t> moebius)
    : ambient_dim_(ambient_dim), flats_(std::move(flats)), moebius_(std::move(moebius)) {
  assert(flats_.size() == moebius_.size());
  rank_begin_.assign(ambient_dim_ + 2, flats_.size());
  for (std::size_t i = flats_.size(); i-- > 0;) rank_begin_[flats_[i].rank] = i;
  for (std::size_t r = ambient_dim_ + 1; r-- > 0;) rank_begin_[r] = std::min(rank_begin_[r], rank_begin_[r + 1]);
}

std::size_t IntersectionPoset::max_rank() const { return flats_.empty() ? 0 : flats_.back().rank; }

std::vector<std::size_t> IntersectionPoset::rank_profile() const {
  std::vector<std::size_t> out(ambient_dim_ + 1, 0);
  for (const auto& f : flats_) ++out[f.rank];
  return out;
}

std::span<const Flat> IntersectionPoset::flats_of_rank(std::size_t r) const {
  if (r > ambient_dim_) return {};
  return std::span<const Flat>(flats_).subspan(rank_begin_[r], rank_begin_[r + 1] - rank_begin_[r]);
}

bool IntersectionPoset::leq(std::size_t i, std::size_t j) const {
  return is_subset(flats_[i].index_set, flats_[j].index_set);
}

std::optional<std::size_t> IntersectionPoset::find(const IndexSet& s) const {
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].index_set == s) return i;
  return std::nullopt;
}

IntersectionPoset build(const Arrangement& a, Exec exec) {
  Flat whole;
  whole.witness = AffineSolution::whole_space(a.dim());
  whole.dim = a.dim();
  whole.rank = 0;

  std::vector<Flat> all{whole};
  std::vector<Flat> level{std::move(whole)};
  while (!level.empty()) {
    level = exec == Exec::Serial ? kernels::expand_level_serial(a, level) : kernels::expand_level_omp(a, level);
    all.insert(all.end(), level.begin(), level.end());
  }
  auto mu = exec == Exec::Serial ? kernels::moebius_serial(all) : kernels::moebius_omp(all);
  return IntersectionPoset(a.dim(), std::move(all), std::move(mu));
}

std::int64_t CharPoly::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto c : coeffs) acc = acc * t + c;
  return acc;
}

std::string CharPoly::str() const {
  std::ostringstream os;
  const std::size_t d = degree();
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::int64_t c = coeffs[k];
    if (c == 0) continue;
    const std::size_t e = d - k;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || e == 0) os << mag;
    if (e >= 1) os << "t";
    if (e >= 2) os << "^" << e;
  }
  if (first) os << "0";
  return os.str();
}

CharPoly operator-(const CharPoly& p, const CharPoly& q) {
  const std::size_t d = std::max(p.degree(), q.degree());
  CharPoly r{std::vector<std::int64_t>(d + 1, 0)};
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) r.coeffs[d - p.degree() + k] += p.coeffs[k];
  for (std::size_t k = 0; k < q.coeffs.size(); ++k) r.coeffs[d - q.degree() + k] -= q.coeffs[k];
  return r;
}

CharPoly char_poly(const IntersectionPoset& p) {
  CharPoly chi{std::vector<std::int64_t>(p.ambient_dim() + 1, 0)};
  for (std::size_t i = 0; i < p.size(); ++i) chi.coeffs[p[i].rank] += p.moebius(i);
  return chi;
}

CharPoly char_poly(const Arrangement& a) { return char_poly(build(a)); }

CharPoly section_char_poly(const CharPoly& chi) {
  if (chi.degree() < 2) throw Error(ErrorKind::DimensionTooSmall, "generic sections need dimension >= 2");
  CharPoly out = chi;
  out.coeffs.pop_back();
  return out;
}

CharPoly section_char_poly(const Arrangement& a) {
  if (a.dim() < 2) throw Error(ErrorKind::DimensionTooSmall, "generic sections need dimension >= 2");
  return section_char_poly(char_poly(a));
}

BettiEuler betti_and_euler(const CharPoly& chi) {
  BettiEuler out;
  for (std::size_t k = 0; k < chi.coeffs.size(); ++k) {
    std::int64_t b = (k % 2 == 0) ? chi.coeffs[k] : -chi.coeffs[k];
    assert(b >= 0);
    out.betti.push_back(static_cast<std::uint64_t>(b));
  }
  out.euler = chi.eval(1);
  return out;
}

BettiEuler betti_and_euler(const Arrangement& a) { return betti_and_euler(char_poly(a)); }

IntersectionPoset truncate(const IntersectionPoset& p) {
  std::vector<Flat> flats;
  std::vector<std::int64_t> mu;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].rank == p.ambient_dim()) continue;
    flats.push_back(p[i]);
    mu.push_back(p.moebius(i));
  }
  return IntersectionPoset(p.ambient_dim(), std::move(flats), std::move(mu));
}

bool isomorphic_by_index(const IntersectionPoset& p, const IntersectionPoset& q) {
  if (p.size() != q.size()) return false;
  std::set<std::pair<IndexSet, std::size_t>> lhs, rhs;
  for (const auto& f : p.flats()) lhs.emplace(f.index_set, f.rank);
  for (const auto& f : q.flats()) rhs.emplace(f.index_set, f.rank);
  if (lhs != rhs) return false;
  // The bijection is X -> q.find(index_set(X)); check it preserves order.
  std::vector<std::size_t> image(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) image[i] = *q.find(p[i].index_set);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j) != q.leq(image[i], image[j])) return false;
  return true;
}

}  // namespace arrlab
