#pragma once

// Lozenge tilings of the hexagon with 120-degree angles and sides a,b,c,a,b,c.

#include "wlp/exactmath.hpp"
#include "wlp/ideal.hpp"

namespace wlp {

struct HexagonSides {
  int a = 1;
  int b = 1;
  int c = 1;

  /// Throws ParameterError unless a, b, c >= 1.
  void validate() const;
};

/// MacMahon's product H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c)).
BigInt lozenge_count(const HexagonSides& h);

inline constexpr int kDefaultEnumerationBound = 6;

/// Counts tilings by enumeration: tilings are in bijection with plane
/// partitions in an a x b box with parts at most c, and the count propagates
/// row by row over the admissible (weakly decreasing) rows, each row bounded
/// componentwise by the previous one. Throws ParameterError when a side
/// exceeds `bound`.
BigInt lozenge_count_oracle(const HexagonSides& h, int bound = kDefaultEnumerationBound);

/// |det M| equals the tiling count of the (alpha+beta, t-alpha-beta, alpha+beta)
/// hexagon. Requires gamma = 2(alpha+beta) and t > alpha+beta.
bool correspondence_gamma_max(const MaciParams& p);

/// |det M| equals the tiling count of the (2t-alpha, 2t-beta, 2t-gamma)
/// hexagon. Requires t = sigma/3 and gamma < 2(alpha+beta).
bool correspondence_t_min(const MaciParams& p);

namespace detail {
// Product formula with sides allowed to be 0 (count 1).
BigInt lozenge_count_unchecked(int a, int b, int c);
}  // namespace detail

}  // namespace wlp
