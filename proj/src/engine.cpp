#include "hecke/engine.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

namespace {

std::string mono_str(const Mono& m) {
  std::ostringstream os;
  if (m.zpow != 0) os << "z^" << m.zpow << " * ";
  os << m.word.to_string();
  return os.str();
}

bool pure_s1(const BraidWord& w) {
  return w.empty() || (w.size() == 1 && w[0].gen == 1);
}

BraidWord make_w(std::initializer_list<std::pair<int, int>> syls) {
  std::vector<Syllable> v;
  for (auto [g, e] : syls)
    if (e != 0) v.push_back({static_cast<int8_t>(g), e});
  return BraidWord(std::move(v));
}

}  // namespace

template <class Ring>
void Engine<Ring>::axpy(Vec& acc, const C& c, const Vec& v) const {
  if (ring_.is_zero(c)) return;
  for (const auto& [idx, cv] : v) {
    C prod = ring_.mul(c, cv);
    if (ring_.is_zero(prod)) continue;
    bool found = false;
    for (auto& [i, a] : acc) {
      if (i == idx) {
        a = ring_.add(a, prod);
        found = true;
        break;
      }
    }
    if (!found) acc.push_back({idx, std::move(prod)});
  }
}

template <class Ring>
auto Engine<Ring>::scale(const C& c, const Vec& v) -> Vec {
  Vec out;
  axpy(out, c, v);
  return out;
}

template <class Ring>
bool Engine<Ring>::is_basis(const Mono& q, int* idx) const {
  int i = basis_.find(q);
  if (i < 0) return false;
  if (idx) *idx = i;
  return true;
}

// Rewrites q into window-normal monomials; coefficients accumulate into out.
template <class Ring>
void Engine<Ring>::normalize_into(const LaurentPoly& /*tpl*/, const C& scale,
                                  const Mono& q,
                                  std::vector<std::pair<C, Mono>>& out) {
  const int lo = window_lo(k_), hi = window_hi(k_);
  std::vector<std::pair<C, Mono>> work = {{scale, q}};
  while (!work.empty()) {
    auto [c, m] = std::move(work.back());
    work.pop_back();
    if (ring_.is_zero(c)) continue;
    const BraidWord& w = m.word;
    if (pure_s1(w)) {
      // the basis coordinate of s1^e z^m is e + 2m
      int e = w.empty() ? 0 : w[0].exp;
      int t = e + 2 * m.zpow;
      if (t < lo || t > hi) {
        auto terms = t > hi ? expand_exponent_up(k_, t) : expand_exponent_down(k_, t);
        for (auto& [tc, tt] : terms)
          work.push_back({ring_.mul(c, ring_.eval_tpl(tc)),
                          Mono{m.zpow, BraidWord::gen(1, tt - 2 * m.zpow)}});
        continue;
      }
      out.push_back({std::move(c), m});
      continue;
    }
    size_t bad = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i].exp < lo || w[i].exp > hi) {
        bad = i;
        break;
      }
    }
    if (bad == w.size()) {
      out.push_back({std::move(c), m});
      continue;
    }
    bool up = w[bad].exp > hi;
    auto terms = up ? expand_exponent_up(k_, w[bad].exp)
                    : expand_exponent_down(k_, w[bad].exp);
    BraidWord prefix = w.subword(0, bad);
    BraidWord suffix = w.subword(bad + 1, w.size());
    for (auto& [tc, tt] : terms) {
      work.push_back({ring_.mul(c, ring_.eval_tpl(tc)),
                      Mono{m.zpow, prefix.concat(BraidWord::gen(w[bad].gen, tt))
                                       .concat(suffix)}});
    }
  }
}

// One rewrite step for a normalized non-basis monomial.
template <class Ring>
std::vector<std::pair<typename Ring::C, Mono>> Engine<Ring>::step(
    const Mono& q, std::string* rule_name) {
  const BraidWord& w = q.word;
  std::vector<std::pair<C, Mono>> out;
  auto emit = [&](const C& c, Mono m) { out.push_back({c, std::move(m)}); };

  // z-boundary: shift one full twist into the word at its first s2 syllable.
  if (q.zpow != 0 && !pure_s1(w)) {
    size_t i = 0;
    while (w[i].gen != 2) ++i;
    BraidWord prefix = w.subword(0, i);
    BraidWord rest = w.subword(i + 1, w.size());
    int a = w[i].exp;
    BraidWord mid;
    int dz;
    if (q.zpow > 0 && a > 0) {
      mid = make_w({{2, 2}, {1, 2}, {2, 1}, {1, 2}});  // z s2 = s2^2 s1^2 s2 s1^2
      mid = mid.concat(BraidWord::gen(2, a - 1));
      dz = -1;
      *rule_name = "z-shift-s2";
    } else if (q.zpow > 0 && a < 0) {
      mid = make_w({{1, 2}, {2, 1}, {1, 2}});  // z s2^-1 = s1^2 s2 s1^2
      mid = mid.concat(BraidWord::gen(2, a + 1));
      dz = -1;
      *rule_name = "z-shift-s2inv";
    } else if (q.zpow < 0 && a > 0) {
      mid = make_w({{1, -2}, {2, -1}, {1, -2}});  // z^-1 s2 = s1^-2 s2^-1 s1^-2
      mid = mid.concat(BraidWord::gen(2, a - 1));
      dz = 1;
      *rule_name = "zinv-shift-s2";
    } else {
      mid = make_w({{2, -2}, {1, -2}, {2, -1}, {1, -2}});  // z^-1 s2^-1
      mid = mid.concat(BraidWord::gen(2, a + 1));
      dz = 1;
      *rule_name = "zinv-shift-s2inv";
    }
    emit(ring_.one(), Mono{q.zpow + dz, prefix.concat(mid).concat(rest)});
    return out;
  }

  // pure s1 word whose omega power is outside the basis range
  if (q.zpow != 0 && pure_s1(w)) {
    int dz = q.zpow > 0 ? -1 : 1;
    *rule_name = "omega-range";
    emit(ring_.one(), Mono{q.zpow + dz, z_word(-dz).inverse().concat(w)});
    return out;
  }

  // leftmost reducible triple
  for (size_t p = 0; p + 2 < w.size(); ++p) {
    if (w[p].gen != 2 || w[p + 2].gen != 2) continue;
    const SymLin* lin = table_->triple(w[p].exp, w[p + 1].exp, w[p + 2].exp);
    if (!lin) continue;  // canonical mid; scan further right
    BraidWord prefix = w.subword(0, p);
    BraidWord suffix = w.subword(p + 3, w.size());
    for (const auto& t : *lin) {
      emit(ring_.eval_tpl(t.coeff),
           Mono{q.zpow + t.mono.zpow, prefix.concat(t.mono.word).concat(suffix)});
    }
    *rule_name = "triple";
    return out;
  }

  // all triples canonical but the word is not basis: unfold at the second
  // s2 syllable (Lemma 2.1 applied inside the word)
  int seen = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen != 2) continue;
    ++seen;
    if (seen != 2) continue;
    if (i + 1 >= w.size()) break;
    int a2 = w[i].exp, b2 = w[i + 1].exp;
    BraidWord prefix = w.subword(0, i);
    BraidWord suffix = w.subword(i + 2, w.size());
    BraidWord mid = a2 > 0 ? make_w({{2, a2 - 1}, {1, -1}, {2, b2}, {1, 1}, {2, 1}})
                           : make_w({{2, a2 + 1}, {1, 1}, {2, b2}, {1, -1}, {2, -1}});
    *rule_name = "mid-unfold";
    emit(ring_.one(), Mono{q.zpow, prefix.concat(mid).concat(suffix)});
    return out;
  }

  throw ReductionStuck("no applicable rule for " + mono_str(q));
}

template <class Ring>
auto Engine<Ring>::reduce_mono(const Mono& q) -> Vec {
  std::vector<std::pair<C, Mono>> parts;
  normalize_into(LaurentPoly(), ring_.one(), q, parts);
  Vec acc;
  for (auto& [c, m] : parts) {
    int idx;
    if (is_basis(m, &idx)) {
      axpy(acc, c, Vec{{idx, ring_.one()}});
    } else {
      axpy(acc, c, reduce_mono_inner(m));
    }
  }
  return acc;
}

template <class Ring>
auto Engine<Ring>::reduce_mono_inner(const Mono& q) -> Vec {
  auto it = memo_.find(q);
  if (it != memo_.end()) return it->second;
  if (in_progress_[q]++)
    throw ReductionStuck("reduction cycle at " + mono_str(q));
  if (++steps_ > budget_)
    throw ReductionStuck("step budget exhausted at " + mono_str(q));

  std::string rule;
  auto parts = step(q, &rule);
  if (trace_)
    trace_->push_back({rule, mono_str(q), 1, parts.size()});
  Vec acc;
  for (auto& [c, m] : parts) {
    std::vector<std::pair<C, Mono>> norm;
    normalize_into(LaurentPoly(), c, m, norm);
    for (auto& [cc, mm] : norm) {
      int idx;
      if (is_basis(mm, &idx)) {
        axpy(acc, cc, Vec{{idx, ring_.one()}});
      } else {
        axpy(acc, cc, reduce_mono_inner(mm));
      }
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  in_progress_[q] = 0;
  memo_[q] = acc;
  return acc;
}

template <class Ring>
auto Engine<Ring>::column(int gen, int j) -> const Vec& {
  if (have_col_[gen][j]) return columns_[gen][j];
  const Mono& base = basis_.words[j].internal;
  Vec result;
  switch (gen) {
    case G_S1:
      result = reduce_mono(Mono{base.zpow, BraidWord::gen(1, 1).concat(base.word)});
      break;
    case G_S1_INV:
      result = reduce_mono(Mono{base.zpow, BraidWord::gen(1, -1).concat(base.word)});
      break;
    case G_S2:
      result = reduce_mono(Mono{base.zpow, BraidWord::gen(2, 1).concat(base.word)});
      break;
    case G_S2_INV: {
      // s2^-1 = a0^-1 s2^{k-1} - a0^-1 a_{k-1} s2^{k-2} - ... - a0^-1 a_1
      Vec v{{j, ring_.one()}};
      std::vector<Vec> powers{v};
      for (int t = 1; t <= k_ - 1; ++t) {
        powers.push_back(apply_gen(G_S2, powers.back()));
      }
      C inv0 = ring_.eval_tpl(LaurentPoly::a0_pow(k_, -1));
      result = scale(inv0, powers[k_ - 1]);
      for (int t = 1; t <= k_ - 1; ++t) {
        C c = ring_.neg(
            ring_.mul(inv0, ring_.eval_tpl(LaurentPoly::variable(k_, t))));
        axpy(result, c, powers[t - 1]);
      }
      break;
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  columns_[gen][j] = std::move(result);
  have_col_[gen][j] = 1;
  return columns_[gen][j];
}

template <class Ring>
auto Engine<Ring>::apply_gen(int gen, const Vec& v) -> Vec {
  Vec out;
  for (const auto& [j, c] : v) axpy(out, c, column(gen, j));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <class Ring>
auto Engine<Ring>::apply_word(const BraidWord& w, const Vec& v) -> Vec {
  Vec cur = v;
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    int gen = it->gen == 1 ? (it->exp > 0 ? G_S1 : G_S1_INV)
                           : (it->exp > 0 ? G_S2 : G_S2_INV);
    for (int t = 0; t < std::abs(it->exp); ++t) cur = apply_gen(gen, cur);
  }
  return cur;
}

template <class Ring>
auto Engine<Ring>::phi_of_basis(int j) -> const Vec& {
  if (phi_basis_.empty()) {
    phi_basis_.resize(basis_.words.size());
    have_phi_.assign(basis_.words.size(), 0);
  }
  if (!have_phi_[j]) {
    const Mono& base = basis_.words[j].internal;
    phi_basis_[j] = reduce_mono(Mono{-base.zpow, base.word.phi()});
    have_phi_[j] = 1;
  }
  return phi_basis_[j];
}

template class Engine<SymbolicCoeffs>;
template class Engine<ModpCoeffs>;

void AlgebraElement::add_term(const BraidWord& w, LaurentPoly c) {
  for (auto& [tw, tc] : terms) {
    if (tw == w) {
      tc += c;
      return;
    }
  }
  terms.push_back({w, std::move(c)});
}

AlgebraElement AlgebraElement::phi() const {
  AlgebraElement out;
  out.k = k;
  for (const auto& [w, c] : terms) out.terms.push_back({w.phi(), c.phi()});
  return out;
}

std::vector<std::pair<int, LaurentPoly>> reduce_element(SymbolicEngine& eng,
                                                        const AlgebraElement& e) {
  SymbolicEngine::Vec acc;
  for (const auto& [w, c] : e.terms) {
    if (c.is_zero()) continue;
    eng.axpy(acc, c, eng.reduce_word(w));
  }
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, LaurentPoly>> out;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) out.push_back({i, std::move(c)});
  return out;
}

}  // namespace hecke
