#include "wlp/ideal.hpp"

#include <algorithm>

#include "wlp/exactmath.hpp"

namespace wlp {

std::optional<std::string> MaciParams::validate(int alpha, int beta, int gamma, int t) {
  if (alpha < 0) return "requires alpha >= 0";
  if (!(alpha <= beta && beta <= gamma)) return "requires alpha <= beta <= gamma";
  if (t < 1) return "requires t >= 1";
  if (gamma == 0) return "requires alpha + beta + gamma > 0 (x^0 y^0 z^0 = 1 gives the zero ring)";
  return std::nullopt;
}

MaciParams::MaciParams(int alpha, int beta, int gamma, int t)
    : alpha_(alpha), beta_(beta), gamma_(gamma), t_(t) {
  if (auto err = validate(alpha, beta, gamma, t)) {
    throw ParameterError(*err + ", got " + str());
  }
}

bool MaciParams::degenerate() const { return alpha_ == 0 && beta_ == 0; }

std::string MaciParams::str() const {
  return "(" + std::to_string(alpha_) + "," + std::to_string(beta_) + "," + std::to_string(gamma_) +
         "," + std::to_string(t_) + ")";
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::IA: return "I_A";
    case CaseLabel::IB: return "I_B";
    case CaseLabel::IC: return "I_C";
    case CaseLabel::ID: return "I_D";
    case CaseLabel::Exceptional: return "EXCEPTIONAL";
    case CaseLabel::CaseIII: return "CASE_III";
  }
  return "?";
}

CaseLabel classify(const MaciParams& p) {
  const int a = p.alpha(), b = p.beta(), g = p.gamma(), t = p.t(), s = p.sigma();
  if (a == 0) return CaseLabel::IA;
  if (s % 3 != 0) return CaseLabel::IB;
  if (g > 2 * (a + b)) return CaseLabel::IC;
  if (3 * t < s) return CaseLabel::ID;
  if (p == MaciParams(2, 9, 13, 9) || p == MaciParams(3, 7, 14, 9)) return CaseLabel::Exceptional;
  return CaseLabel::CaseIII;
}

std::optional<std::string> matrix_criterion_violation(const MaciParams& p) {
  const int a = p.alpha(), b = p.beta(), g = p.gamma(), t = p.t(), s = p.sigma();
  if (a < 1) return "requires alpha >= 1";
  if (s % 3 != 0) return "requires alpha + beta + gamma divisible by 3";
  if (g > 2 * (a + b)) return "requires gamma <= 2(alpha + beta)";
  if (3 * t < s) return "requires t >= (alpha + beta + gamma)/3";
  return std::nullopt;
}

FreeResolution free_resolution(const MaciParams& p) {
  const int a = p.alpha(), b = p.beta(), g = p.gamma(), t = p.t(), s = p.sigma();
  FreeResolution res;
  res.minimal = a > 0;
  res.modules = {
      {0, {0}},
      {1, {s, a + t, b + t, g + t}},
      {2, {s + t, s + t, s + t, a + b + 2 * t, a + g + 2 * t, b + g + 2 * t}},
      {3, {s + 2 * t, s + 2 * t, s + 2 * t}},
  };
  return res;
}

namespace {

// dim_K [R]_m for R = K[x,y,z]
std::int64_t monomials_of_degree(int m) {
  return m < 0 ? 0 : static_cast<std::int64_t>(m + 2) * (m + 1) / 2;
}

// Every standard monomial has a < alpha+t, b < beta+t, c < gamma+t.
int degree_ceiling(const MaciParams& p) { return p.sigma() + 3 * p.t() - 3; }

void trim(HilbertFunction& h) {
  while (h.values.size() > 1 && h.values.back() == 0) h.values.pop_back();
}

}  // namespace

HilbertFunction hilbert_from_resolution(const MaciParams& p) {
  const FreeResolution res = free_resolution(p);
  const int top = degree_ceiling(p);
  HilbertFunction h;
  h.values.assign(static_cast<std::size_t>(top + 1), 0);
  for (int d = 0; d <= top; ++d) {
    std::int64_t v = 0;
    for (const auto& mod : res.modules) {
      const std::int64_t sgn = mod.homological_degree % 2 == 0 ? 1 : -1;
      for (int tw : mod.twists) v += sgn * monomials_of_degree(d - tw);
    }
    h.values[static_cast<std::size_t>(d)] = v;
  }
  trim(h);
  return h;
}

bool is_standard_monomial(const MaciParams& p, int a, int b, int c) {
  if (a >= p.alpha() + p.t() || b >= p.beta() + p.t() || c >= p.gamma() + p.t()) return false;
  return !(a >= p.alpha() && b >= p.beta() && c >= p.gamma());
}

HilbertFunction hilbert_oracle(const MaciParams& p) {
  const int top = degree_ceiling(p);
  HilbertFunction h;
  h.values.assign(static_cast<std::size_t>(top + 1), 0);
  for (int d = 0; d <= top; ++d) {
    std::int64_t count = 0;
    for (int a = 0; a <= d; ++a) {
      for (int b = 0; a + b <= d; ++b) {
        if (is_standard_monomial(p, a, b, d - a - b)) ++count;
      }
    }
    h.values[static_cast<std::size_t>(d)] = count;
  }
  trim(h);
  return h;
}

int socle_degree(const MaciParams& p) {
  if (p.alpha() == 0) {
    throw ParameterError("socle_degree: requires alpha >= 1 (resolution not minimal for alpha = 0)");
  }
  return p.sigma() + 2 * p.t() - 3;
}

UnimodalityReport unimodality(const HilbertFunction& h) {
  if (h.values.empty()) throw ParameterError("unimodality: empty Hilbert function");
  enum class Phase { Rising, Plateau, Falling };

  UnimodalityReport rep;
  rep.socle_degree = h.socle_degree();
  Phase phase = Phase::Rising;
  int plateau_end = -1;  // last degree of the plateau, once falling starts
  for (int d = 0; d < rep.socle_degree; ++d) {
    const std::int64_t diff = h(d + 1) - h(d);
    switch (phase) {
      case Phase::Rising:
        if (diff == 0) {
          phase = Phase::Plateau;
          rep.peak_start = d;
        } else if (diff < 0) {
          phase = Phase::Falling;
          rep.peak_start = d;
          plateau_end = d;
        }
        break;
      case Phase::Plateau:
        if (diff > 0) {
          rep.first_violation_degree = d;
        } else if (diff < 0) {
          phase = Phase::Falling;
          plateau_end = d;
        }
        break;
      case Phase::Falling:
        if (diff >= 0) rep.first_violation_degree = d;
        break;
    }
    if (rep.first_violation_degree) break;
  }
  if (rep.first_violation_degree) {
    rep.peak_start = 0;
    rep.peak_length = 0;
    return rep;
  }
  if (phase == Phase::Rising) {
    rep.peak_start = rep.socle_degree;
    plateau_end = rep.socle_degree;
  } else if (phase == Phase::Plateau) {
    plateau_end = rep.socle_degree;
  }
  rep.peak_length = plateau_end - rep.peak_start + 1;
  rep.peaked_strictly_unimodal = true;
  return rep;
}

}  // namespace wlp
