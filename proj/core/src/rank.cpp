#include <utility>

#include "wlp/lefschetz.hpp"

namespace wlp {

namespace {

// Largest prime below 2^32; products of two residues fit in 64 bits.
constexpr std::uint32_t kScreeningPrime = 4294967291U;

struct DegreeBasis {
  int degree = 0;
  std::vector<int> index;  // (a, b) -> basis position or -1; c = degree - a - b
  std::int64_t size = 0;

  int at(int a, int b) const {
    if (a < 0 || b < 0 || a + b > degree) return -1;
    return index[static_cast<std::size_t>(a * (degree + 1) + b)];
  }
};

DegreeBasis standard_basis(const MaciParams& p, int d) {
  DegreeBasis basis;
  basis.degree = d;
  basis.index.assign(static_cast<std::size_t>((d + 1) * (d + 1)), -1);
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; a + b <= d; ++b) {
      if (is_standard_monomial(p, a, b, d - a - b)) {
        basis.index[static_cast<std::size_t>(a * (d + 1) + b)] = static_cast<int>(basis.size++);
      }
    }
  }
  return basis;
}

}  // namespace

SmallMatrix multiplication_matrix(const MaciParams& p, int degree) {
  const DegreeBasis src = standard_basis(p, degree);
  const DegreeBasis dst = standard_basis(p, degree + 1);
  SmallMatrix m;
  m.rows = static_cast<std::size_t>(dst.size);
  m.cols = static_cast<std::size_t>(src.size);
  m.data.assign(m.rows * m.cols, 0);
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      const int col = src.at(a, b);
      if (col < 0) continue;
      // multiply by x, y, z in turn; images inside I vanish in R/I
      for (int row : {dst.at(a + 1, b), dst.at(a, b + 1), dst.at(a, b)}) {
        if (row >= 0) m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = 1;
      }
    }
  }
  return m;
}

std::int64_t rank_mod_prime(const SmallMatrix& m, std::uint32_t prime) {
  if (prime < 2) throw ParameterError("rank_mod_prime: modulus must be prime");
  const std::uint64_t p = prime;
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::uint64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t r = m.data[i] % static_cast<std::int64_t>(p);
    a[i] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const std::uint64_t scale = inv(a[rank * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * scale % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = (a[i * cols + j] + (p - f) * a[rank * cols + j]) % p;
      }
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

std::int64_t rank_rational(const SmallMatrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  const std::int64_t full = static_cast<std::int64_t>(std::min(rows, cols));
  // rank over F_p never exceeds rank over Q, so a full rank mod p is conclusive.
  if (rank_mod_prime(m, kScreeningPrime) == full) return full;

  // Fraction-free (Bareiss) row echelon form; every division is exact.
  std::vector<BigInt> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(m.data[i]);
  BigInt prev = 1;
  BigInt tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const BigInt& piv = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = piv * a[i * cols + j];
        tmp -= a[i * cols + c] * a[rank * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

RankProfile multiplication_rank_profile(const MaciParams& p, Characteristic c) {
  const HilbertFunction h = hilbert_oracle(p);
  RankProfile profile;
  profile.characteristic = c;
  for (int d = 0; d < h.socle_degree(); ++d) {
    const SmallMatrix m = multiplication_matrix(p, d);
    RankRecord rec;
    rec.degree = d;
    rec.source_dim = h(d);
    rec.target_dim = h(d + 1);
    rec.rank = c.is_zero() ? rank_rational(m) : rank_mod_prime(m, c.value());
    if (!rec.maximal()) profile.deficit_degrees.push_back(d);
    profile.records.push_back(rec);
  }
  return profile;
}

WlpVerdict wlp_direct(const MaciParams& p, Characteristic c) {
  WlpVerdict v;
  v.method = WlpMethod::DirectRank;
  v.characteristic = c;
  RankProfile profile = multiplication_rank_profile(p, c);
  v.holds = profile.deficit_degrees.empty();
  v.witness = std::move(profile);
  return v;
}

}  // namespace wlp
