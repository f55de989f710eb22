#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace carmichael {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Arbitrary-precision integer used wherever a product of primes may
/// leave the 64-bit range (assembled Carmichael numbers, prefix products).
using BigInt = mpz_class;

inline BigInt to_big(u64 v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::optional<u64> try_u64(const BigInt& v) {
  if (!fits_u64(v)) return std::nullopt;
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

/// Throws OverflowError when `v` is negative or wider than 64 bits.
u64 to_u64(const BigInt& v);

/// Remainder of a nonnegative BigInt modulo a 64-bit modulus.
inline u64 mod_u64(const BigInt& v, u64 m) {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
}

/// Parses a nonnegative decimal integer; throws PreconditionError on junk.
BigInt parse_big(std::string_view text);

/// Parses a nonnegative decimal that must fit 64 bits.
u64 parse_u64(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(u128 v);

}  // namespace carmichael
