#include "wlp/exactmath.hpp"

#include <utility>

namespace wlp {

std::string to_string(const BigInt& value) { return value.get_str(10); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ParameterError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

BigInt hyperfactorial(unsigned n) {
  BigInt result = 1;
  BigInt fact = 1;  // i!
  for (unsigned i = 1; i < n; ++i) {
    fact *= i;
    result *= fact;
  }
  return result;
}

BigInt binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::logic_error("exact_div: division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("exact_div: inexact quotient " + to_string(num) + " / " + to_string(den));
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.square()) {
    throw ParameterError("det_exact: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a(i,j) <- (a(i,j) a(k,k) - a(i,k) a(k,j)) / prev, exact by Sylvester's identity
        tmp = a(i, j) * a(k, k);
        tmp -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

IntMatrix toeplitz_binomial_matrix(unsigned T, unsigned B, unsigned n) {
  IntMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      m(i, j) = binomial(T, static_cast<long>(B) + static_cast<long>(i) - static_cast<long>(j));
    }
  }
  return m;
}

BigInt toeplitz_binomial_det(unsigned T, unsigned B, unsigned n) {
  if (B > T) {
    throw ParameterError("toeplitz_binomial_det: requires T >= B (T=" + std::to_string(T) +
                         ", B=" + std::to_string(B) + ")");
  }
  BigInt num = hyperfactorial(n) * hyperfactorial(B) * hyperfactorial(T - B) * hyperfactorial(T + n);
  BigInt den = hyperfactorial(B + n) * hyperfactorial(T - B + n) * hyperfactorial(T);
  return exact_div(num, den);
}

}  // namespace wlp
