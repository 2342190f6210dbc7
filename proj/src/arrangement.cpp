#include "arrlab/arrangement.hpp"

#include <map>
#include <random>

#include "arrlab/poset.hpp"

namespace arrlab {

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

std::pair<RatVector, Rat> normalized_equation(const RatVector& normal, const Rat& offset) {
  Rat lead;
  for (const auto& x : normal)
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  RatVector n = normal;
  for (auto& x : n) x /= lead;
  return {std::move(n), offset / lead};
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  std::map<std::pair<RatVector, Rat>, std::size_t> seen;
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    auto& h = hyperplanes_[i];
    if (h.normal.size() != dim_)
      throw Error(ErrorKind::MalformedInput, "hyperplane " + std::to_string(i + 1) + " has normal of length " +
                                                 std::to_string(h.normal.size()) + ", expected " +
                                                 std::to_string(dim_));
    if (is_zero(h.normal)) throw Error(ErrorKind::ZeroNormal, "hyperplane " + std::to_string(i + 1));
    if (h.label.empty()) h.label = "H" + std::to_string(i + 1);
    auto [it, fresh] = seen.emplace(normalized_equation(h.normal, h.offset), i);
    if (!fresh)
      throw Error(ErrorKind::DuplicateHyperplane, "hyperplanes " + std::to_string(it->second + 1) + " and " +
                                                      std::to_string(i + 1) + " coincide");
  }
}

std::vector<std::string> Arrangement::labels(const IndexSet& s) const {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(hyperplanes_[i].label);
  return out;
}

AffineSolution Arrangement::intersection(const IndexSet& s) const {
  if (s.empty()) return AffineSolution::whole_space(dim_);
  RatMatrix m(s.size(), dim_);
  RatVector b(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) {
    const auto& h = hyperplanes_[s[r]];
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = h.normal[c];
    b[r] = h.offset;
  }
  return solve_affine(m, b);
}

bool operator==(const Arrangement& a, const Arrangement& b) {
  if (a.dim_ != b.dim_ || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a[i], &y = b[i];
    if (x.normal != y.normal || x.offset != y.offset || x.label != y.label) return false;
  }
  return true;
}

bool is_essential(const Arrangement& a) {
  if (a.dim() == 0) return true;
  std::vector<RatVector> rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.normal);
  return rank(RatMatrix::from_rows(rows, a.dim())) == a.dim();
}

namespace {

// Rewrites every hyperplane in the coordinates t of x = point + D t.
// Hyperplanes that are parallel to the subspace yield std::nullopt.
std::optional<Hyperplane> trace(const Hyperplane& g, const AffineSolution& space) {
  PulledBack pb = pull_back(g.normal, g.offset, space);
  if (is_zero(pb.normal)) return std::nullopt;
  return Hyperplane{std::move(pb.normal), std::move(pb.offset), g.label};
}

// U must miss a point flat, and cut a positive-dimensional flat in a
// nonempty proper subspace (u restricted to the flat is nonconstant).
bool transversal(const Hyperplane& u, const AffineSolution& flat) {
  if (flat.dim() == 0) return dot(u.normal, flat.point) != u.offset;
  return !is_zero(pull_back(u.normal, u.offset, flat).normal);
}

}  // namespace

DeletionRestriction delete_restrict(const Arrangement& a, std::size_t h) {
  if (h >= a.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "hyperplane index " + std::to_string(h + 1) + " of " + std::to_string(a.size()));

  std::vector<Hyperplane> kept;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != h) kept.push_back(a[i]);

  const AffineSolution target = a.intersection({h});
  std::vector<Hyperplane> traces;
  std::vector<IndexSet> parents;
  std::map<std::pair<RatVector, Rat>, std::size_t> slot;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    auto t = trace(a[i], target);
    if (!t) continue;  // parallel to h and disjoint from it
    auto [it, fresh] = slot.emplace(normalized_equation(t->normal, t->offset), traces.size());
    if (fresh) {
      traces.push_back(std::move(*t));
      parents.push_back({i});
    } else {
      traces[it->second].label += "|" + a[i].label;
      parents[it->second].push_back(i);
    }
  }
  return {Arrangement(a.dim(), std::move(kept)), Arrangement(a.dim() - 1, std::move(traces)), std::move(parents)};
}

GenericVerdict is_generic(const Arrangement& a, const Hyperplane& u) {
  if (u.normal.size() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "hyperplane has dimension " + std::to_string(u.normal.size()) +
                                                  ", arrangement has " + std::to_string(a.dim()));
  if (is_zero(u.normal)) throw Error(ErrorKind::ZeroNormal, "candidate hyperplane");
  IntersectionPoset p = build(a);
  for (const auto& flat : p.flats())
    if (!transversal(u, flat.witness)) return {false, flat.index_set};
  return {true, std::nullopt};
}

Hyperplane random_generic_hyperplane(const Arrangement& a, std::uint64_t seed, int max_attempts) {
  if (a.dim() < 2) throw Error(ErrorKind::DimensionTooSmall, "generic hyperplanes need dimension >= 2");
  IntersectionPoset p = build(a);
  std::mt19937_64 rng(seed);
  std::int64_t window = 4;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::uniform_int_distribution<std::int64_t> coef(-window, window);
    Hyperplane u;
    u.label = "U";
    for (std::size_t i = 0; i < a.dim(); ++i) u.normal.emplace_back(Rat(static_cast<long>(coef(rng))));
    u.offset = Rat(static_cast<long>(coef(rng)));
    if (!is_zero(u.normal)) {
      bool ok = true;
      for (const auto& flat : p.flats())
        if (!(ok = transversal(u, flat.witness))) break;
      if (ok) return u;
    }
    if (window < (std::int64_t{1} << 40)) window *= 2;
  }
  throw Error(ErrorKind::RetryLimitExceeded,
              "no generic hyperplane after " + std::to_string(max_attempts) + " attempts");
}

Arrangement section(const Arrangement& a, const Hyperplane& u) {
  GenericVerdict v = is_generic(a, u);
  if (!v.generic) throw NotGenericError(*v.violation);
  const AffineSolution target = solve_affine(RatMatrix::from_rows({u.normal}, a.dim()), {u.offset});
  std::vector<Hyperplane> traces;
  for (const auto& h : a.hyperplanes()) traces.push_back(*trace(h, target));
  return Arrangement(a.dim() - 1, std::move(traces));
}

}  // namespace arrlab
