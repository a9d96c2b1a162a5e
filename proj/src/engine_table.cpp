#include <cassert>
#include <map>
#include <mutex>

#include "hecke/engine.hpp"

namespace hecke {

// s^e = a_{k-1} s^{e-1} + ... + a_1 s^{e-k+1} + a_0 s^{e-k}; rewrites a high
// exponent through strictly lower ones.
std::vector<std::pair<LaurentPoly, int>> expand_exponent_up(int k, int e) {
  std::vector<std::pair<LaurentPoly, int>> out;
  for (int j = 0; j < k; ++j)
    out.push_back({LaurentPoly::variable(k, j), e - k + j});
  return out;
}

// s^e = a_0^{-1} s^{e+k} - a_0^{-1} a_{k-1} s^{e+k-1} - ... - a_0^{-1} a_1 s^{e+1}
std::vector<std::pair<LaurentPoly, int>> expand_exponent_down(int k, int e) {
  std::vector<std::pair<LaurentPoly, int>> out;
  LaurentPoly inv0 = LaurentPoly::a0_pow(k, -1);
  out.push_back({inv0, e + k});
  for (int j = 1; j < k; ++j)
    out.push_back({-(inv0 * LaurentPoly::variable(k, j)), e + j});
  return out;
}

int rank_of(int k) {
  switch (k) {
    case 2: return 6;
    case 3: return 24;
    case 4: return 96;
    default: return 600;
  }
}

namespace {

BraidWord W(std::initializer_list<std::pair<int, int>> syls) {
  std::vector<Syllable> v;
  for (auto [g, e] : syls)
    if (e != 0) v.push_back({static_cast<int8_t>(g), e});
  return BraidWord(std::move(v));
}

// Mid-word patterns (a,b,c) of the 3-syllable canonical summands.
const std::vector<std::array<int, 3>>& mids3(int k) {
  static const std::vector<std::array<int, 3>> none;
  static const std::vector<std::array<int, 3>> m3 = {{1, -1, 1}};
  static const std::vector<std::array<int, 3>> m4 = {{1, -1, 1}, {-1, 1, -1}};
  static const std::vector<std::array<int, 3>> m5 = {
      {-1, 2, -1}, {1, -2, 1}, {2, 2, 2},   {-2, -2, -2}, {1, -2, 2},
      {-1, 2, -2}, {-1, 1, -1}, {1, -1, 1}, {-2, -2, 2},  {2, 2, -2},
      {2, -2, 2},  {-2, 2, -2}, {-2, 1, -1}, {-1, 1, -2}};
  switch (k) {
    case 3: return m3;
    case 4: return m4;
    case 5: return m5;
    default: return none;
  }
}

const std::vector<std::array<int, 5>>& mids5(int k) {
  static const std::vector<std::array<int, 5>> none;
  static const std::vector<std::array<int, 5>> m5 = {
      {-2, 2, -1, 1, -1}, {2, -2, 1, -1, 1}, {1, -2, 2, -2, 2}, {-1, 2, -2, 2, -2}};
  return k == 5 ? m5 : none;
}

}  // namespace

RuleTable::RuleTable(int k) : k_(k) {
  names_ = {
      "fuse",          "Eq1-power-up",  "Eq2-power-down", "braid",
      "Lem2.1-conj",   "GBR",           "omega-token",    "mid-unfold",
      "z-shift-s2",    "z-shift-s2inv", "zinv-shift-s2",  "zinv-shift-s2inv",
      "omega-range",   "s2inv-via-Eq1", "triple-P3.2",    "triple-P4.2",
      "triple-L4.1",
  };
}

bool RuleTable::is_mid(int a, int b, int c) const {
  for (const auto& m : mids3(k_))
    if (m[0] == a && m[1] == b && m[2] == c) return true;
  return false;
}

bool RuleTable::is_mid5(const std::array<int, 5>& p) const {
  for (const auto& m : mids5(k_))
    if (m == p) return true;
  return false;
}

SymLin RuleTable::substitute(const BraidWord& prefix, const SymLin& inner,
                             const BraidWord& suffix, const LaurentPoly& scale,
                             int zshift) const {
  SymLin out;
  out.reserve(inner.size());
  for (const auto& t : inner) {
    out.push_back({scale * t.coeff,
                   Mono{t.mono.zpow + zshift,
                        prefix.concat(t.mono.word).concat(suffix)}});
  }
  return out;
}

// Expands syllable `syl` of w through the characteristic relation; `up`
// selects the direction.
SymLin RuleTable::expand_at(const BraidWord& w, size_t syl, bool up) const {
  const auto& s = w[syl];
  BraidWord prefix = w.subword(0, syl);
  BraidWord suffix = w.subword(syl + 1, w.size());
  auto terms = up ? expand_exponent_up(k_, s.exp) : expand_exponent_down(k_, s.exp);
  SymLin out;
  for (auto& [c, e] : terms) {
    out.push_back({std::move(c),
                   Mono{0, prefix.concat(BraidWord::gen(s.gen, e)).concat(suffix)}});
  }
  return out;
}

SymLin RuleTable::normalize_word(const BraidWord& w) const {
  // expands until all syllable exponents lie in the window; coefficients
  // multiply out along the way
  SymLin work = {{LaurentPoly::one(k_), Mono{0, w}}};
  int lo = window_lo(k_), hi = window_hi(k_);
  bool changed = true;
  while (changed) {
    changed = false;
    SymLin next;
    for (auto& t : work) {
      size_t bad = t.mono.word.size();
      for (size_t i = 0; i < t.mono.word.size(); ++i) {
        int e = t.mono.word[i].exp;
        if (e < lo || e > hi) {
          bad = i;
          break;
        }
      }
      if (bad == t.mono.word.size()) {
        next.push_back(std::move(t));
        continue;
      }
      changed = true;
      bool up = t.mono.word[bad].exp > hi;
      for (auto& s : expand_at(t.mono.word, bad, up))
        next.push_back({t.coeff * s.coeff, Mono{t.mono.zpow + s.mono.zpow, s.mono.word}});
    }
    work = std::move(next);
  }
  return work;
}

SymLin RuleTable::mirror(const SymLin& lin) const {
  SymLin out;
  out.reserve(lin.size());
  for (const auto& t : lin)
    out.push_back({t.coeff.phi(), Mono{-t.mono.zpow, t.mono.word.phi()}});
  return out;
}

const SymLin* RuleTable::triple(int a, int b, int c) const {
  if (is_mid(a, b, c)) return nullptr;
  Key kk = key(a, b, c);
  {
    auto it = cache_.find(kk);
    if (it != cache_.end()) return &it->second;
  }
  SymLin lin = const_cast<RuleTable*>(this)->resolve(a, b, c);
  auto [it, ok] = cache_.emplace(kk, std::move(lin));
  (void)ok;
  return &it->second;
}

SymLin RuleTable::resolve(int a, int b, int c) {
  Key kk = key(a, b, c);
  if (building_[kk])
    throw ReductionStuck("rule table cycle at triple (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
  building_[kk] = true;
  SymLin r = resolve_uncached(a, b, c);
  building_[kk] = false;
  return r;
}

// Resolution of the bare triple s2^a s1^b s2^c.  Every branch is an identity
// of H_k; the engine keeps rewriting whatever non-canonical words we emit.
SymLin RuleTable::resolve_uncached(int a, int b, int c) {
  const int lo = window_lo(k_), hi = window_hi(k_);
  auto one = LaurentPoly::one(k_);
  auto word1 = [&](const BraidWord& w) -> SymLin { return {{one, Mono{0, w}}}; };

  // degenerate inputs: not really triples
  if (b == 0) return normalize_word(W({{2, a + c}}));
  if (a == 0 || c == 0) return normalize_word(W({{2, a}, {1, b}, {2, c}}));

  // out-of-window exponents: expand that syllable and fall back to the engine
  if (a < lo || a > hi) return expand_at(W({{2, a}, {1, b}, {2, c}}), 0, a > hi);
  if (b < lo || b > hi) return expand_at(W({{2, a}, {1, b}, {2, c}}), 1, b > hi);
  if (c < lo || c > hi) return expand_at(W({{2, a}, {1, b}, {2, c}}), 2, c > hi);

  // omega tokens: s2 s1^2 s2 = z s1^{-2}, s2^-1 s1^-2 s2^-1 = z^-1 s1^2
  if (k_ >= 4 && a == 1 && b == 2 && c == 1) return {{one, Mono{1, W({{1, -2}})}}};
  if (k_ >= 4 && a == -1 && b == -2 && c == -1) return {{one, Mono{-1, W({{1, 2}})}}};

  // braid relation at the edges
  if (a == 1 && b == 1 && c == 1) return word1(W({{1, 1}, {2, 1}, {1, 1}}));
  if (a == -1 && b == -1 && c == -1) return word1(W({{1, -1}, {2, -1}, {1, -1}}));
  if (a > 0 && b == 1 && c == 1)
    return word1(W({{2, a - 1}, {1, 1}, {2, 1}, {1, 1}}));
  if (a < 0 && b == -1 && c == -1)
    return word1(W({{2, a + 1}, {1, -1}, {2, -1}, {1, -1}}));
  if (a == 1 && b == 1 && c > 0)
    return word1(W({{1, 1}, {2, 1}, {1, 1}, {2, c - 1}}));
  if (a == -1 && b == -1 && c < 0)
    return word1(W({{1, -1}, {2, -1}, {1, -1}, {2, c + 1}}));

  // Lemma 2.1: s2 s1^b s2^-1 = s1^-1 s2^b s1 and its three variants
  if (a == 1 && c < 0) return word1(W({{1, -1}, {2, b}, {1, 1}, {2, c + 1}}));
  if (a == -1 && c > 0) return word1(W({{1, 1}, {2, b}, {1, -1}, {2, c - 1}}));
  if (c == -1 && a > 0) return word1(W({{2, a - 1}, {1, -1}, {2, b}, {1, 1}}));
  if (c == 1 && a < 0) return word1(W({{2, a + 1}, {1, 1}, {2, b}, {1, -1}}));

  // remaining a < 0 cases mirror to a > 0 under the automorphism
  if (a < 0) return mirror(resolve(-a, -b, -c));

  // scripted section 3/4 routes, a > 0 from here on
  if (a == 1 && b == -1 && c == 2)  // s2 s1^-1 s2^2 = s1^-1 s2^-1 s1 s2^3
    return word1(W({{1, -1}, {2, -1}, {1, 1}, {2, 3}}));
  if (a == 1 && b == 2 && c == 2)  // s2 s1^2 s2^2 = s1^-1 s2 s1^3 s2 s1
    return word1(W({{1, -1}, {2, 1}, {1, 3}, {2, 1}, {1, 1}}));
  if (a == 2 && b == -1 && c == 1)  // expand the leading power
    return expand_at(W({{2, 2}, {1, -1}, {2, 1}}), 0, true);
  if (a == 2 && b == 2 && c == 1)  // s2^2 s1^2 s2 = s1 s2 s1^3 s2 s1^-1
    return word1(W({{1, 1}, {2, 1}, {1, 3}, {2, 1}, {1, -1}}));
  if (a == 2 && b == -2 && c == 1)  // s2^2 s1^-2 s2 = s1 s2 s1^3 s2^-3 s1^-1
    return word1(W({{1, 1}, {2, 1}, {1, 3}, {2, -3}, {1, -1}}));
  if (a == 2 && b == 1 && c == 2)  // s2^2 s1 s2^2 = s1 omega
    return {{one, Mono{1, W({{1, -1}})}}};
  if (a == 2 && b == -1 && c == 2)  // s2^2 s1^-1 s2^2 = s1^-1 s2^-1 s1^2 s2^3
    return word1(W({{1, -1}, {2, -1}, {1, 2}, {2, 3}}));
  if (a == 2 && b == 1 && c == -2)  // s2^2 s1 s2^-2 = (s2 s1^-2 s2) s1
    return word1(W({{2, 1}, {1, -2}, {2, 1}, {1, 1}}));
  if (a == 2 && b == -1 && c == -2)  // s2^2 s1^-1 s2^-2 = s1^-1 s2^-1 s1^2 s2^-1
    return word1(W({{1, -1}, {2, -1}, {1, 2}, {2, -1}}));
  if (a == 2 && b == -2 && c == -2)  // s2^2 s1^-2 s2^-2 = s1^-1 s2^-2 s1^-2 s2^2 s1
    return word1(W({{1, -1}, {2, -2}, {1, -2}, {2, 2}, {1, 1}}));
  if (a == 2 && b == 2 && c == 2 && k_ == 4)  // transient for k=4: s2 omega s2
    return {{one, Mono{1, W({{2, 1}, {1, -2}, {2, 1}}})}};

  throw ReductionStuck("no rule for triple (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + ") at k=" +
                       std::to_string(k_));
}

const RuleTable& rule_table(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RuleTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[k];
  if (!slot) slot = std::make_unique<RuleTable>(k);
  return *slot;
}

// ---------------------------------------------------------------------------
// Canonical basis enumeration, in the paper's summand order.

namespace {

void push_word(Basis& basis, const BraidWord& w, int zpow, const std::string& tag,
               int left_exp) {
  BasisWordInfo info;
  info.internal = Mono{zpow, w};
  info.word = zpow == 0 ? w : BraidWord::gen(1, w.empty() ? 0 : w[0].exp)
                                  .concat(omega_word(zpow));
  if (zpow != 0) {
    // expanded form: s1^b omega^m where b = e + 2m
    int e = w.empty() ? 0 : w[0].exp;
    info.word = BraidWord::gen(1, e + 2 * zpow).concat(omega_word(zpow));
  }
  info.summand = tag;
  info.left_exp = left_exp;
  int idx = static_cast<int>(basis.words.size());
  basis.words.push_back(info);
  basis.index.emplace(info.internal, idx);
}

}  // namespace

Basis enumerate_basis(int k) {
  Basis basis;
  basis.k = k;
  const int lo = window_lo(k), hi = window_hi(k);

  auto left_exps = [&]() {
    std::vector<int> v;
    for (int b = lo; b <= hi; ++b) v.push_back(b);
    return v;
  }();
  // u_2 exponent order follows the paper's expansion of u_1 u_2 u_1
  std::vector<int> u2_exps;
  for (int mag = 1; mag <= hi || mag <= -lo; ++mag) {
    if (mag <= hi) u2_exps.push_back(mag);
    if (mag <= -lo) u2_exps.push_back(-mag);
  }

  // 1 (the empty word lands at index 0)
  for (int b : left_exps) push_word(basis, W({{1, b}}), 0, "u1", b);
  // u1 u2 u1
  for (int a : u2_exps)
    for (int c : left_exps)
      for (int b : left_exps)
        push_word(basis, W({{1, b}, {2, a}, {1, c}}), 0, "u1u2u1", b);

  auto push_mid = [&](const std::array<int, 3>& m, const std::string& tag,
                      bool right_u1) {
    for (int c : right_u1 ? left_exps : std::vector<int>{0})
      for (int b : left_exps)
        push_word(basis, W({{1, b}, {2, m[0]}, {1, m[1]}, {2, m[2]}, {1, c}}), 0, tag, b);
  };
  auto push_omega = [&](int m) {
    for (int b : left_exps)
      push_word(basis, W({{1, b - 2 * m}}), m, "omega^" + std::to_string(m), b);
  };

  if (k == 3) {
    push_mid({1, -1, 1}, "u1s2s1^-1s2", false);
  } else if (k == 4) {
    push_mid({1, -1, 1}, "u1s2s1^-1s2u1", true);
    push_mid({-1, 1, -1}, "u1s2^-1s1s2^-1u1", true);
    push_omega(1);
    push_omega(-1);
    push_omega(-2);
  } else if (k == 5) {
    push_omega(1);
    push_omega(-1);
    for (const auto& m : mids3(5)) {
      std::string tag = "U1:s2^" + std::to_string(m[0]) + "s1^" + std::to_string(m[1]) +
                        "s2^" + std::to_string(m[2]);
      push_mid(m, tag, true);
    }
    push_omega(2);
    push_omega(-2);
    for (const auto& m : mids5(5)) {
      std::string tag = "U2:5syl";
      for (int c : left_exps)
        for (int b : left_exps)
          push_word(basis,
                    W({{1, b}, {2, m[0]}, {1, m[1]}, {2, m[2]}, {1, m[3]}, {2, m[4]}, {1, c}}),
                    0, tag, b);
    }
    push_omega(3);
    push_omega(-3);
    push_omega(4);
    push_omega(-4);
    push_omega(-5);
  }

  assert(static_cast<int>(basis.words.size()) == rank_of(k));
  assert(basis.words[0].internal.word.empty() && basis.words[0].internal.zpow == 0);
  return basis;
}

}  // namespace hecke
