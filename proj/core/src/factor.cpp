#include "wlp/exactmath.hpp"

namespace wlp {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool fits_u64(const BigInt& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

u64 to_u64(const BigInt& v) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::string_view to_string(CofactorStatus s) {
  switch (s) {
    case CofactorStatus::Unit: return "unit";
    case CofactorStatus::Prime: return "prime";
    case CofactorStatus::Composite: return "composite";
    case CofactorStatus::Unknown: return "unknown";
  }
  return "unknown";
}

BigInt Factorization::reconstruct() const {
  BigInt v = cofactor;
  for (const auto& pp : prime_powers) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    v *= power;
  }
  return sign < 0 ? BigInt(-v) : v;
}

Factorization factor_bounded(const BigInt& value, u64 bound) {
  if (value == 0) throw ParameterError("factor_bounded: cannot factor zero");
  if (bound == 0) throw ParameterError("factor_bounded: bound must be positive");

  Factorization f;
  f.sign = value < 0 ? -1 : 1;
  BigInt rest = abs(value);

  auto extract = [&](u64 p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) f.prime_powers.push_back({BigInt(static_cast<unsigned long>(p)), e});
  };

  // Trial divisors: 2, then odd numbers. Composite divisors never divide
  // because their prime factors were removed earlier.
  bool exhausted = false;  // every prime factor of rest exceeds sqrt(rest)
  for (u64 d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
    if (rest == 1) break;
    BigInt dd = BigInt(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    if (dd > rest) {
      exhausted = true;
      break;
    }
    extract(d);
  }

  if (rest == 1) {
    f.cofactor_status = CofactorStatus::Unit;
  } else if (exhausted) {
    // rest has no divisor <= sqrt(rest), hence is prime.
    if (rest <= BigInt(static_cast<unsigned long>(bound))) {
      f.prime_powers.push_back({rest, 1});
      rest = 1;
      f.cofactor_status = CofactorStatus::Unit;
    } else {
      f.cofactor_status = CofactorStatus::Prime;
    }
  } else if (fits_u64(rest)) {
    f.cofactor_status = is_prime_u64(to_u64(rest)) ? CofactorStatus::Prime : CofactorStatus::Composite;
  } else {
    f.cofactor_status = CofactorStatus::Unknown;
  }
  f.cofactor = rest;
  return f;
}

}  // namespace wlp
