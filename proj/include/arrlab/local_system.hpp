#pragma once

#include <string_view>
#include <vector>

#include "arrlab/arrangement.hpp"
#include "arrlab/at_infinity.hpp"

namespace arrlab {

/// Rank-r local system with simultaneously diagonalizable monodromy. The
/// loop around hyperplane H acts on channel j by exp(2 pi i weights[H][j]).
struct LocalSystem {
  std::size_t rank = 1;
  std::vector<RatVector> weights;  // one row per hyperplane, `rank` columns

  /// -sum_H weights[H][j], the exponent of the loop around H_inf.
  Rat weight_at_infinity(std::size_t channel) const;
  /// The rank-1 system of a single channel.
  LocalSystem channel(std::size_t j) const;
};

/// Throws MalformedInput or RowCountMismatch.
LocalSystem parse_local_system(std::string_view json_text, const Arrangement& a);
std::string serialize(const LocalSystem& l);

LocalSystem dual(const LocalSystem& l);

struct Violation {
  DenseEdge edge;
  std::size_t channel = 0;  // 0-based
  Rat sum;                  // integral exponent sum, so T_X has eigenvalue 1
};

struct ResonanceVerdict {
  bool nonresonant = true;
  std::vector<Violation> violations;
};

/// Checks every dense edge in H_inf and every channel: the total turn
/// monodromy has eigenvalue 1 iff the exponent sum over the edge's
/// subarrangement is an integer. Throws NotEssential.
ResonanceVerdict nonresonance_check(const Arrangement& a, const LocalSystem& l);

class ResonantError : public Error {
 public:
  explicit ResonantError(ResonanceVerdict verdict);
  const ResonanceVerdict& verdict() const { return verdict_; }

 private:
  ResonanceVerdict verdict_;
};

}  // namespace arrlab
