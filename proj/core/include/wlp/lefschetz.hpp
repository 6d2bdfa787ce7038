#pragma once

// Weak Lefschetz property for R/I with I = (x^(a+t), y^(b+t), z^(c+t), x^a y^b z^c):
// the binomial matrix M whose determinant modulo char K decides the property,
// closed forms for det M in several families, and the direct check through
// ranks of multiplication by x + y + z.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wlp/exactmath.hpp"
#include "wlp/ideal.hpp"

namespace wlp {

/// Field characteristic: 0 or a prime. Construction rejects anything else.
class Characteristic {
 public:
  constexpr Characteristic() = default;
  explicit Characteristic(std::uint32_t value);

  static Characteristic zero() { return {}; }

  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;

 private:
  std::uint32_t value_ = 0;
};

struct MatrixM {
  IntMatrix entries;
  int top_rows = 0;     // t - sigma/3 rows of C(gamma, .)
  int bottom_rows = 0;  // (2(alpha+beta) - gamma)/3 rows of C(gamma+t, .)

  int size() const { return top_rows + bottom_rows; }
};

/// Builds M. Throws NotApplicable naming the violated hypothesis when
/// alpha >= 1, 3 | sigma, gamma <= 2(alpha+beta), t >= sigma/3 do not all hold.
MatrixM build_matrix_M(const MaciParams& p);

BigInt det_M(const MaciParams& p);

/// alpha = beta = gamma in {1,2,3}, t >= alpha.
BigInt det_closed_diag(const MaciParams& p);

/// 1 <= alpha <= beta, gamma = 2(alpha+beta), t >= alpha+beta.
BigInt det_closed_gamma_max(const MaciParams& p);

/// 1 <= alpha <= beta <= gamma <= 2(alpha+beta), 3 | sigma, t = sigma/3.
BigInt det_closed_t_min(const MaciParams& p);

bool gamma_max_applies(const MaciParams& p);
bool t_min_applies(const MaciParams& p);

/// Every prime >= the returned bound leaves det M nonzero: t+alpha+beta for
/// the gamma-maximal family, sigma for the t-minimal family.
int char_bound(const MaciParams& p);

/// Rank of multiplication by x+y+z from [R/I]_d to [R/I]_(d+1).
struct RankRecord {
  int degree = 0;
  std::int64_t source_dim = 0;  // h(d)
  std::int64_t target_dim = 0;  // h(d+1)
  std::int64_t rank = 0;

  bool maximal() const { return rank == std::min(source_dim, target_dim); }
};

struct RankProfile {
  Characteristic characteristic;
  std::vector<RankRecord> records;  // d = 0 .. e-1
  std::vector<int> deficit_degrees;
};

enum class WlpMethod { Determinant, ClosedForm, DirectRank, KnownCase };

std::string_view to_string(WlpMethod m);

struct WlpVerdict {
  bool holds = false;
  WlpMethod method = WlpMethod::Determinant;
  Characteristic characteristic;
  // Determinant value, full rank profile, or case label, depending on method.
  std::variant<std::monostate, BigInt, RankProfile, CaseLabel> witness;

  /// First deficit degree for a failing direct-rank verdict.
  std::optional<int> first_deficit_degree() const;
  const BigInt* determinant() const { return std::get_if<BigInt>(&witness); }
  const RankProfile* rank_profile() const { return std::get_if<RankProfile>(&witness); }
};

/// Holds iff det M is nonzero modulo the characteristic.
WlpVerdict wlp_by_determinant(const MaciParams& p, Characteristic c);

/// Primes up to the bound at which R/I fails the WLP, read off det M.
struct FailingCharacteristics {
  BigInt determinant;
  std::optional<Factorization> factorization;  // absent when det M = 0

  bool fails_in_every_characteristic() const { return !factorization.has_value(); }
};

FailingCharacteristics failing_characteristics(const MaciParams& p, std::uint64_t bound);

/// Rank of every multiplication map, exact over Q (characteristic 0) or F_p.
RankProfile multiplication_rank_profile(const MaciParams& p, Characteristic c);

/// Holds iff every multiplication map has maximal rank.
WlpVerdict wlp_direct(const MaciParams& p, Characteristic c);

// Rank kernels, exposed for testing.

/// 0/1/small-integer matrix stored row-major.
struct SmallMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Matrix of multiplication by x+y+z from degree d to d+1 in the monomial bases
/// (rows: target monomials, columns: source monomials).
SmallMatrix multiplication_matrix(const MaciParams& p, int degree);

std::int64_t rank_mod_prime(const SmallMatrix& m, std::uint32_t prime);
std::int64_t rank_rational(const SmallMatrix& m);

}  // namespace wlp
