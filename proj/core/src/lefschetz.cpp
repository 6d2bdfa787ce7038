#include "wlp/lefschetz.hpp"

namespace wlp {

Characteristic::Characteristic(std::uint32_t value) : value_(value) {
  if (value != 0 && !is_prime_u64(value)) {
    throw ParameterError("characteristic must be 0 or a prime, got " + std::to_string(value));
  }
}

std::string_view to_string(WlpMethod m) {
  switch (m) {
    case WlpMethod::Determinant: return "determinant";
    case WlpMethod::ClosedForm: return "closed_form";
    case WlpMethod::DirectRank: return "direct_rank";
    case WlpMethod::KnownCase: return "known_case";
  }
  return "?";
}

std::optional<int> WlpVerdict::first_deficit_degree() const {
  const RankProfile* rp = rank_profile();
  if (rp == nullptr || rp->deficit_degrees.empty()) return std::nullopt;
  return rp->deficit_degrees.front();
}

MatrixM build_matrix_M(const MaciParams& p) {
  if (auto why = matrix_criterion_violation(p)) {
    throw NotApplicable("matrix M " + *why + ", got " + p.str());
  }
  const int a = p.alpha(), b = p.beta(), g = p.gamma(), t = p.t();
  const int third = p.sigma() / 3;

  MatrixM m;
  m.top_rows = t - third;
  m.bottom_rows = (2 * (a + b) - g) / 3;
  const int n = m.size();
  m.entries = IntMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));

  // Rows and columns are 1-based in the entry formulas.
  for (int i = 1; i <= m.top_rows; ++i) {
    for (int j = 1; j <= n; ++j) {
      m.entries(i - 1, j - 1) = binomial(static_cast<unsigned>(g), third + i - j);
    }
  }
  for (int k = 1; k <= m.bottom_rows; ++k) {
    for (int j = 1; j <= n; ++j) {
      m.entries(m.top_rows + k - 1, j - 1) = binomial(static_cast<unsigned>(g + t), b + t + 1 - k - j);
    }
  }
  return m;
}

BigInt det_M(const MaciParams& p) { return det_exact(build_matrix_M(p).entries); }

BigInt det_closed_diag(const MaciParams& p) {
  const int a = p.alpha(), t = p.t();
  if (!(a == p.beta() && a == p.gamma() && a >= 1 && a <= 3)) {
    throw NotApplicable("det_closed_diag requires alpha = beta = gamma in {1,2,3}, got " + p.str());
  }
  if (t < a) throw NotApplicable("det_closed_diag requires t >= alpha, got " + p.str());

  const BigInt T = t;
  const bool even = t % 2 == 0;
  switch (a) {
    case 1:
      return even ? BigInt(0) : BigInt(2);
    case 2:
      return even ? BigInt(-T * T * (T + 3)) : BigInt((T + 2) * (T + 2) * (T - 1));
    default: {
      if (even) return 0;
      const BigInt num = (T - 1) * (T - 1) * (T + 1) * (T + 2) * (T + 4) * (T + 4);
      return -exact_div(num, 4);
    }
  }
}

bool gamma_max_applies(const MaciParams& p) {
  const int a = p.alpha(), b = p.beta();
  return a >= 1 && p.gamma() == 2 * (a + b) && p.t() >= a + b;
}

bool t_min_applies(const MaciParams& p) {
  const int a = p.alpha(), b = p.beta(), g = p.gamma();
  return a >= 1 && g <= 2 * (a + b) && p.sigma() % 3 == 0 && 3 * p.t() == p.sigma();
}

BigInt det_closed_gamma_max(const MaciParams& p) {
  if (!gamma_max_applies(p)) {
    throw NotApplicable("det_closed_gamma_max requires alpha >= 1, gamma = 2(alpha+beta), t >= alpha+beta, got " +
                        p.str());
  }
  const unsigned ab = static_cast<unsigned>(p.alpha() + p.beta());
  const unsigned g = static_cast<unsigned>(p.gamma());
  const unsigned t = static_cast<unsigned>(p.t());
  const unsigned delta = t - ab;
  const BigInt h_ab = hyperfactorial(ab);
  const BigInt h_t = hyperfactorial(t);
  const BigInt num = hyperfactorial(delta) * h_ab * h_ab * hyperfactorial(g + delta);
  const BigInt den = hyperfactorial(g) * h_t * h_t;
  return exact_div(num, den);
}

BigInt det_closed_t_min(const MaciParams& p) {
  if (!t_min_applies(p)) {
    throw NotApplicable(
        "det_closed_t_min requires alpha >= 1, gamma <= 2(alpha+beta), 3 | sigma, t = sigma/3, got " + p.str());
  }
  const unsigned a = static_cast<unsigned>(p.alpha());
  const unsigned b = static_cast<unsigned>(p.beta());
  const unsigned g = static_cast<unsigned>(p.gamma());
  const unsigned t = static_cast<unsigned>(p.t());
  const unsigned lambda = (2 * (a + b) - g) / 3;
  const BigInt num = hyperfactorial(2 * t - g) * hyperfactorial(2 * t - b) * hyperfactorial(2 * t - a) *
                     hyperfactorial(a + b + g);
  const BigInt den = hyperfactorial(a + t) * hyperfactorial(b + t) * hyperfactorial(g + t);
  BigInt det = exact_div(num, den);
  // (-1)^C(lambda, 2) from reversing the row order.
  const unsigned flips = lambda == 0 ? 0 : lambda * (lambda - 1) / 2;
  if (flips % 2 == 1) det = -det;
  return det;
}

int char_bound(const MaciParams& p) {
  if (gamma_max_applies(p)) return p.t() + p.alpha() + p.beta();
  if (t_min_applies(p)) return p.sigma();
  throw NotApplicable("char_bound requires the gamma-maximal or t-minimal family, got " + p.str());
}

WlpVerdict wlp_by_determinant(const MaciParams& p, Characteristic c) {
  BigInt det = det_M(p);
  WlpVerdict v;
  v.method = WlpMethod::Determinant;
  v.characteristic = c;
  v.holds = c.is_zero() ? det != 0 : !mpz_divisible_ui_p(det.get_mpz_t(), c.value());
  v.witness = std::move(det);
  return v;
}

FailingCharacteristics failing_characteristics(const MaciParams& p, std::uint64_t bound) {
  FailingCharacteristics out;
  out.determinant = det_M(p);
  if (out.determinant != 0) out.factorization = factor_bounded(out.determinant, bound);
  return out;
}

}  // namespace wlp
