#pragma once

// Exact integer arithmetic used throughout the library: hyperfactorials,
// binomial coefficients, dense integer matrices with a fraction-free
// determinant, and bounded trial-division factoring.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wlp {

using BigInt = mpz_class;

/// Raised when an operation's inputs violate its documented preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a criterion or closed form does not apply to the given inputs.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::string to_string(const BigInt& value);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const BigInt> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// H(n) = 0! * 1! * ... * (n-1)!, with H(0) = 1.
BigInt hyperfactorial(unsigned n);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

/// Exact determinant by Bareiss fraction-free elimination. The 0x0 matrix has
/// determinant 1. Throws ParameterError for non-square input.
BigInt det_exact(const IntMatrix& m);

/// Determinant of the n x n matrix with entry (i, j) = C(T, B + i - j),
/// evaluated through the hyperfactorial product
///   H(n) H(B) H(T-B) H(T+n) / (H(B+n) H(T-B+n) H(T)).
/// Requires T >= B >= 0.
BigInt toeplitz_binomial_det(unsigned T, unsigned B, unsigned n);

/// Same matrix as toeplitz_binomial_det, built explicitly.
IntMatrix toeplitz_binomial_matrix(unsigned T, unsigned B, unsigned n);

/// Exact quotient; throws std::logic_error if the division leaves a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

enum class CofactorStatus {
  Unit,       // cofactor is 1
  Prime,      // certified prime (deterministic test in 64-bit range, or below bound^2)
  Composite,  // certified composite
  Unknown,    // too large to decide deterministically
};

std::string_view to_string(CofactorStatus s);

/// sign * cofactor * prod(prime^exponent) equals the factored value.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> prime_powers;  // strictly increasing primes
  BigInt cofactor = 1;                   // no prime factor <= bound
  CofactorStatus cofactor_status = CofactorStatus::Unit;

  BigInt reconstruct() const;
};

/// Trial-divides |value| by every prime <= bound. Throws ParameterError when
/// value is zero or bound is zero.
Factorization factor_bounded(const BigInt& value, std::uint64_t bound);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

}  // namespace wlp
