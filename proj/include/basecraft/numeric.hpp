#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace basecraft {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt pow_big(const BigInt &b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline std::uint64_t to_u64(const BigInt &v) {
  std::uint64_t r = 0;
  if (v <= 0)
    return 0;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    return UINT64_MAX;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

inline std::string str(const BigInt &v) { return v.get_str(); }
inline std::string str(const Rational &v) { return v.get_str(); }

} // namespace basecraft
