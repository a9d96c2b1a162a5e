#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hecke {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Prime field F_p with single-word arithmetic; p is expected to fit in 62
// bits so products stay inside __int128 comfortably.
struct Fp {
  uint64_t p;

  using Elem = uint64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, p); }
  Elem inv(Elem a) const { return powmod_u64(a, p - 2, p); }
  Elem pow(Elem a, long e) const {
    if (e >= 0) return powmod_u64(a, static_cast<uint64_t>(e), p);
    return powmod_u64(inv(a), static_cast<uint64_t>(-e), p);
  }
  template <class Z>
  Elem from_mpz(const Z& z) const {
    // works for mpz_class via explicit reduction
    auto m = z % p;
    long v = m.get_si();
    if (v < 0) v += static_cast<long>(p);
    return static_cast<uint64_t>(v);
  }
  Elem from_int(long v) const {
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return static_cast<uint64_t>(m);
  }
};

// Draws distinct 62-bit primes from a seeded generator.
inline std::vector<uint64_t> random_62bit_primes(int count, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<uint64_t> primes;
  std::uniform_int_distribution<uint64_t> dist(1ull << 61, (1ull << 62) - 1);
  while (static_cast<int>(primes.size()) < count) {
    uint64_t cand = dist(rng) | 1;
    if (!is_prime_u64(cand)) continue;
    bool dup = false;
    for (uint64_t q : primes) dup = dup || q == cand;
    if (!dup) primes.push_back(cand);
  }
  return primes;
}

}  // namespace hecke
