#pragma once

// The family I = (x^(a+t), y^(b+t), z^(c+t), x^a y^b z^c) in K[x,y,z] with
// 0 <= a <= b <= c and t > 0, its graded free resolution, and its Hilbert
// function.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wlp {

/// Parameters (alpha, beta, gamma, t) of a level monomial almost complete
/// intersection. Construction validates 0 <= alpha <= beta <= gamma, t >= 1,
/// and rejects alpha = beta = gamma = 0 (the quotient is the zero ring).
class MaciParams {
 public:
  MaciParams(int alpha, int beta, int gamma, int t);

  /// Returns the violated condition, or nullopt when the tuple is admissible.
  static std::optional<std::string> validate(int alpha, int beta, int gamma, int t);

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  int gamma() const { return gamma_; }
  int t() const { return t_; }
  int sigma() const { return alpha_ + beta_ + gamma_; }

  /// True when two or more of the four generators coincide or divide each other.
  bool degenerate() const;

  std::string str() const;

  friend auto operator<=>(const MaciParams&, const MaciParams&) = default;

 private:
  int alpha_;
  int beta_;
  int gamma_;
  int t_;
};

enum class CaseLabel {
  IA,           // alpha = 0
  IB,           // 3 does not divide sigma
  IC,           // gamma > 2(alpha + beta)
  ID,           // t < sigma / 3
  Exceptional,  // (2,9,13,9) or (3,7,14,9)
  CaseIII,
};

std::string_view to_string(CaseLabel label);

/// First matching label in the order IA, IB, IC, ID, Exceptional, CaseIII.
CaseLabel classify(const MaciParams& p);

/// Conditions under which the binomial determinant criterion applies:
/// alpha >= 1, 3 | sigma, gamma <= 2(alpha+beta), t >= sigma/3.
/// Returns the first violated condition, or nullopt.
std::optional<std::string> matrix_criterion_violation(const MaciParams& p);

struct ResolutionModule {
  int homological_degree = 0;
  std::vector<int> twists;  // R(-twist) summands
};

struct FreeResolution {
  std::vector<ResolutionModule> modules;  // F0 = R, F1, F2, F3
  bool minimal = false;                   // minimal exactly when alpha > 0
};

FreeResolution free_resolution(const MaciParams& p);

struct HilbertFunction {
  std::vector<std::int64_t> values;  // h(0..e)

  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  std::int64_t operator()(int d) const {
    return d < 0 || d >= static_cast<int>(values.size()) ? 0 : values[static_cast<std::size_t>(d)];
  }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Alternating sum of shifted C(d+2, 2) terms read off the free resolution.
HilbertFunction hilbert_from_resolution(const MaciParams& p);

/// Counts standard monomials degree by degree.
HilbertFunction hilbert_oracle(const MaciParams& p);

/// alpha + beta + gamma + 2t - 3. Throws ParameterError when alpha = 0.
int socle_degree(const MaciParams& p);

struct UnimodalityReport {
  bool peaked_strictly_unimodal = false;
  int peak_start = 0;
  int peak_length = 0;
  int socle_degree = 0;
  std::optional<int> first_violation_degree;
};

/// Classifies the difference-sign pattern of h as (+)*(0)*(-)*. Throws
/// ParameterError when h is empty.
UnimodalityReport unimodality(const HilbertFunction& h);

/// True when x^a y^b z^c is not in the ideal.
bool is_standard_monomial(const MaciParams& p, int a, int b, int c);

}  // namespace wlp
