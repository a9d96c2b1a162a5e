#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hecke {

// Coefficient ring R_k = Z[a_{k-1},...,a_1,a_0,a_0^{-1}].  Only a_0 is
// invertible; exponents of a_j (j >= 1) are never negative.
//
// Monomial exponents are stored densely: slot 0 is a_0 (may be negative),
// slots 1..k-1 are a_1..a_{k-1}.  Unused slots stay zero so ExpVec can be
// compared without knowing k.
struct ExpVec {
  std::array<int16_t, 5> e{};

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec& a, const ExpVec& b) {
    return a.e <=> b.e;
  }
};

struct ExpVecHash {
  size_t operator()(const ExpVec& v) const {
    size_t h = 0xcbf29ce484222325ull;
    for (int16_t x : v.e) {
      h ^= static_cast<size_t>(static_cast<uint16_t>(x));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Sparse Laurent polynomial over Z in a_0..a_{k-1}, terms sorted by
// lexicographic exponent order, no zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() : k_(0) {}
  explicit LaurentPoly(int k) : k_(k) {}

  static LaurentPoly zero(int k) { return LaurentPoly(k); }
  static LaurentPoly constant(int k, mpz_class c);
  static LaurentPoly one(int k) { return constant(k, 1); }
  static LaurentPoly monomial(int k, const ExpVec& e, mpz_class c);
  // a_j, 0 <= j < k
  static LaurentPoly variable(int k, int j);
  // a_0^t, t may be negative
  static LaurentPoly a0_pow(int k, int t);

  int k() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<ExpVec, mpz_class>>& terms() const { return terms_; }

  // True iff the polynomial is +-a_0^t, i.e. a unit of R_k.
  bool is_unit() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  // Inverse of a unit monomial; aborts if !is_unit().
  LaurentPoly unit_inverse() const;

  // Ring map a_0 -> a_0^{-1}, a_j -> -a_0^{-1} a_{k-j} (1 <= j <= k-1).
  LaurentPoly phi() const;

  // Canonical text form, e.g. "-1*a0^-1*a1 + 2*a2"; "0" for zero.
  std::string to_string() const;
  // Parses the canonical text form.  Throws std::invalid_argument on error.
  static LaurentPoly parse(int k, const std::string& text);

  // Homomorphic evaluation; F must provide *, +, -, and inversion via
  // f.inv(x).  images[0] must be invertible.
  template <class F, class Elem>
  Elem eval(const F& f, const std::vector<Elem>& images) const {
    Elem acc = f.zero();
    Elem inv0 = f.inv(images[0]);
    for (const auto& [ev, c] : terms_) {
      Elem t = f.from_mpz(c);
      for (int j = 0; j < k_; ++j) {
        int16_t e = ev.e[j];
        const Elem& base = e >= 0 ? images[j] : inv0;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) t = f.mul(t, base);
      }
      acc = f.add(acc, t);
    }
    return acc;
  }

 private:
  void normalize();

  int k_;
  std::vector<std::pair<ExpVec, mpz_class>> terms_;
};

}  // namespace hecke
