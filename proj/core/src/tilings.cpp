#include "wlp/tilings.hpp"

#include <string>
#include <vector>

#include "wlp/lefschetz.hpp"

namespace wlp {

void HexagonSides::validate() const {
  if (a < 1 || b < 1 || c < 1) {
    throw ParameterError("hexagon sides must be >= 1, got (" + std::to_string(a) + "," + std::to_string(b) +
                         "," + std::to_string(c) + ")");
  }
}

namespace detail {

BigInt lozenge_count_unchecked(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw ParameterError("hexagon sides must be non-negative");
  const auto H = [](int n) { return hyperfactorial(static_cast<unsigned>(n)); };
  return exact_div(H(a) * H(b) * H(c) * H(a + b + c), H(a + b) * H(a + c) * H(b + c));
}

}  // namespace detail

BigInt lozenge_count(const HexagonSides& h) {
  h.validate();
  return detail::lozenge_count_unchecked(h.a, h.b, h.c);
}

namespace {

using Row = std::vector<int>;

// All weakly decreasing rows of the given length with parts in [0, max_part].
void enumerate_rows(int length, int max_part, Row& cur, std::vector<Row>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const int cap = cur.empty() ? max_part : cur.back();
  for (int v = 0; v <= cap; ++v) {
    cur.push_back(v);
    enumerate_rows(length, max_part, cur, out);
    cur.pop_back();
  }
}

bool dominated_by(const Row& lower, const Row& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) return false;
  }
  return true;
}

}  // namespace

BigInt lozenge_count_oracle(const HexagonSides& h, int bound) {
  h.validate();
  if (h.a > bound || h.b > bound || h.c > bound) {
    throw ParameterError("enumeration bound " + std::to_string(bound) +
                         " exceeded; use lozenge_count (product formula) for larger hexagons");
  }
  std::vector<Row> rows;
  Row scratch;
  enumerate_rows(h.b, h.c, scratch, rows);

  // successors[i]: rows that may follow row i
  std::vector<std::vector<std::size_t>> successors(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (dominated_by(rows[j], rows[i])) successors[i].push_back(j);
    }
  }

  std::vector<BigInt> ways(rows.size(), BigInt(1));  // one row placed
  for (int r = 1; r < h.a; ++r) {
    std::vector<BigInt> next(rows.size(), BigInt(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (ways[i] == 0) continue;
      for (std::size_t j : successors[i]) next[j] += ways[i];
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

bool correspondence_gamma_max(const MaciParams& p) {
  if (!gamma_max_applies(p) || p.t() == p.alpha() + p.beta()) {
    throw NotApplicable("correspondence_gamma_max requires alpha >= 1, gamma = 2(alpha+beta), t > alpha+beta, got " +
                        p.str());
  }
  const int ab = p.alpha() + p.beta();
  return abs(det_M(p)) == lozenge_count({ab, p.t() - ab, ab});
}

bool correspondence_t_min(const MaciParams& p) {
  if (!t_min_applies(p) || p.gamma() == 2 * (p.alpha() + p.beta())) {
    throw NotApplicable("correspondence_t_min requires alpha >= 1, 3 | sigma, t = sigma/3, gamma < 2(alpha+beta), got " +
                        p.str());
  }
  const int t = p.t();
  return abs(det_M(p)) == lozenge_count({2 * t - p.alpha(), 2 * t - p.beta(), 2 * t - p.gamma()});
}

}  // namespace wlp
