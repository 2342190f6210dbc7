#include "arrlab/rational.hpp"

#include <cassert>
#include <cctype>
#include <ostream>

#include "arrlab/errors.hpp"

namespace arrlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::RowCountMismatch: return "RowCountMismatch";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotEssential: return "NotEssential";
    case ErrorKind::Resonant: return "Resonant";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
  }
  return "Unknown";
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::MalformedInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, bool allow_sign, mpz_class& out) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = mpz_class(std::string(s.substr(i)), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  mpz_class num, den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, true, num)
                : parse_integer(text.substr(0, slash), true, num) &&
                      parse_integer(text.substr(slash + 1), false, den);
  if (!ok) throw Error(ErrorKind::MalformedInput, "bad rational \"" + std::string(text) + "\"");
  if (den == 0)
    throw Error(ErrorKind::MalformedInput, "zero denominator in \"" + std::string(text) + "\"");
  return Rat(num, den);
}

std::string Rat::str() const { return q_.get_str(10); }

Rat& Rat::operator/=(const Rat& o) {
  assert(!o.is_zero());
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].value() * b[i].value();
  return Rat(std::move(acc));
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace arrlab
