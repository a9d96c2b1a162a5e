#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hecke/modp.hpp"
#include "hecke/ring.hpp"
#include "hecke/word.hpp"

namespace hecke {

// Canonical exponent windows for the normal form of u_1/u_2 syllables.
inline int window_lo(int k) { return k == 2 ? 0 : (k == 3 ? -1 : (k == 4 ? -1 : -2)); }
inline int window_hi(int k) { return k == 2 ? 1 : (k == 3 ? 1 : 2); }

// omega powers that are part of the canonical basis.
inline bool omega_power_in_basis(int k, int m) {
  if (k <= 3) return m == 0;
  if (k == 4) return m == 0 || m == 1 || m == -1 || m == -2;
  return (m >= -5 && m <= 4);
}

// Internal monomial z^zpow * w, where z = s1^2 omega is the central full
// twist.  Keeping the z-power out of the word lets omega-power bookkeeping
// ride along reductions for free.
struct Mono {
  int zpow = 0;
  BraidWord word;

  bool operator==(const Mono& o) const = default;
};

struct MonoHash {
  size_t operator()(const Mono& m) const {
    return m.word.hash() * 1315423911u + static_cast<size_t>(m.zpow + 64);
  }
};

struct ReductionStuck : std::runtime_error {
  explicit ReductionStuck(const std::string& what) : std::runtime_error(what) {}
};

// A linear combination with symbolic template coefficients.  Rewrite rules
// are mode independent: their coefficients live in R_k and get evaluated
// into the active coefficient ring when applied.
struct SymTerm {
  LaurentPoly coeff;
  Mono mono;
};
using SymLin = std::vector<SymTerm>;

// One rewrite event, enough to replay the reduction.
struct TraceStep {
  std::string rule;
  std::string at;  // textual form of the rewritten monomial
  size_t before_terms;
  size_t after_terms;
};
using ReductionTrace = std::vector<TraceStep>;

// Expansion of s^e into canonical-window powers using the degree-k relation
// shifted by monomials: "up" rewrites via lower exponents (eq. of degree k),
// "down" via higher ones (its a_0^{-1} inverse form).
std::vector<std::pair<LaurentPoly, int>> expand_exponent_up(int k, int e);
std::vector<std::pair<LaurentPoly, int>> expand_exponent_down(int k, int e);

// Basis word classes, in the paper's summand order (provenance).
struct BasisWordInfo {
  BraidWord word;       // expanded word (omega powers written out)
  Mono internal;        // engine normal form
  std::string summand;  // provenance tag
  int left_exp;         // exponent b of the left u_1 monomial s_1^b
};

struct Basis {
  int k;
  std::vector<BasisWordInfo> words;
  std::unordered_map<Mono, int, MonoHash> index;

  int find(const Mono& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
};

Basis enumerate_basis(int k);
int rank_of(int k);  // 6, 24, 96, 600

// The shared, mode-independent rewrite rule registry for a given k: the
// triple-resolution table (relations (1)-(2), Lemma 2.1, the generalized
// braid relations and the section 3/4 lemma library) plus the z-boundary
// identities.
class RuleTable {
 public:
  explicit RuleTable(int k);

  int k() const { return k_; }

  // Resolution of the bare triple word s2^a s1^b s2^c (window exponents,
  // a,b,c nonzero).  Returns std::nullopt for triples that are canonical
  // (basis mid-words); otherwise a combination equal to it in H_k.
  const SymLin* triple(int a, int b, int c) const;

  bool is_mid(int a, int b, int c) const;        // 3-syllable basis pattern
  bool is_mid5(const std::array<int, 5>& p) const;  // 5-syllable basis pattern (k=5)

  // Named rule list for reporting / soundness tests.
  const std::vector<std::string>& rule_names() const { return names_; }

 private:
  using Key = uint32_t;
  static Key key(int a, int b, int c) {
    return static_cast<Key>((a + 8) | ((b + 8) << 8) | ((c + 8) << 16));
  }
  SymLin resolve(int a, int b, int c);
  SymLin resolve_uncached(int a, int b, int c);
  SymLin mirror(const SymLin& lin) const;  // image under the automorphism
  SymLin substitute(const BraidWord& prefix, const SymLin& inner, const BraidWord& suffix,
                    const LaurentPoly& scale, int zshift) const;
  SymLin expand_at(const BraidWord& w, size_t syl, bool up) const;  // one syllable
  SymLin normalize_word(const BraidWord& w) const;  // window-normalize every syllable

  int k_;
  mutable std::unordered_map<Key, SymLin> cache_;
  mutable std::unordered_map<Key, bool> building_;
  std::vector<std::string> names_;
};

const RuleTable& rule_table(int k);  // per-k singleton

// ---------------------------------------------------------------------------
// Coefficient rings for the engine.

struct SymbolicCoeffs {
  int k;
  using C = LaurentPoly;
  static constexpr bool symbolic = true;

  C zero() const { return LaurentPoly::zero(k); }
  C one() const { return LaurentPoly::one(k); }
  bool is_zero(const C& c) const { return c.is_zero(); }
  C add(const C& a, const C& b) const { return a + b; }
  C mul(const C& a, const C& b) const { return a * b; }
  C neg(const C& a) const { return -a; }
  C eval_tpl(const LaurentPoly& t) const { return t; }
  bool equal(const C& a, const C& b) const { return a == b; }
};

struct ModpCoeffs {
  int k;
  Fp f;
  std::array<uint64_t, 5> point;  // images of a_0..a_{k-1}, point[0] != 0
  using C = uint64_t;
  static constexpr bool symbolic = false;

  C zero() const { return 0; }
  C one() const { return 1; }
  bool is_zero(C c) const { return c == 0; }
  C add(C a, C b) const { return f.add(a, b); }
  C mul(C a, C b) const { return f.mul(a, b); }
  C neg(C a) const { return f.neg(a); }
  C eval_tpl(const LaurentPoly& t) const {
    std::vector<uint64_t> imgs(point.begin(), point.begin() + k);
    return t.eval(f, imgs);
  }
  bool equal(C a, C b) const { return a == b; }

  // The evaluation point twisted by the coefficient automorphism, used by
  // the mirrored sibling engine.
  ModpCoeffs twisted() const {
    ModpCoeffs t = *this;
    uint64_t inv0 = f.inv(point[0]);
    t.point[0] = inv0;
    for (int j = 1; j < k; ++j) t.point[j] = f.neg(f.mul(inv0, point[k - j]));
    return t;
  }
};

// ---------------------------------------------------------------------------

enum GenCode { G_S1 = 0, G_S1_INV = 1, G_S2 = 2, G_S2_INV = 3 };
inline const char* gen_name(int g) {
  static const char* names[4] = {"s1", "s1inv", "s2", "s2inv"};
  return names[g];
}

template <class Ring>
class Engine {
 public:
  using C = typename Ring::C;
  using Vec = std::vector<std::pair<int, C>>;  // sparse basis coordinates

  Engine(int k, Ring ring, long budget = 1000000)
      : k_(k), ring_(std::move(ring)), budget_(budget), basis_(enumerate_basis(k)),
        table_(&rule_table(k)) {
    columns_[0].resize(basis_.words.size());
    columns_[1].resize(basis_.words.size());
    columns_[2].resize(basis_.words.size());
    columns_[3].resize(basis_.words.size());
    have_col_[0].resize(basis_.words.size(), 0);
    have_col_[1].resize(basis_.words.size(), 0);
    have_col_[2].resize(basis_.words.size(), 0);
    have_col_[3].resize(basis_.words.size(), 0);
  }

  int k() const { return k_; }
  const Basis& basis() const { return basis_; }
  const Ring& ring() const { return ring_; }

  // For mod-p engines: the sibling evaluated at the twisted point, used for
  // the mirrored reduction path.  Symbolic engines mirror through themselves.
  void set_mirror(Engine* m) { mirror_ = m; }
  Engine* mirror() { return mirror_ ? mirror_ : this; }

  Vec reduce_mono(const Mono& q);
  Vec reduce_word(const BraidWord& w) { return reduce_mono(Mono{0, w}); }

  // Column of the left regular action of the generator on basis word j.
  const Vec& column(int gen, int j);

  Vec apply_gen(int gen, const Vec& v);
  Vec apply_word(const BraidWord& w, const Vec& v);  // left multiply by w

  // Reduction of the product g * basis[j] for tests/reports.
  Vec left_mult_reduce(int gen, int j) { return column(gen, j); }

  // Image of a basis element under the algebra automorphism (word part);
  // coefficient part is the caller's business (symbolic: LaurentPoly::phi).
  const Vec& phi_of_basis(int j);

  void set_trace(ReductionTrace* t) { trace_ = t; }
  long steps_used() const { return steps_; }
  void reset_budget(long b) {
    budget_ = b;
    steps_ = 0;
  }

  // linear algebra helpers on Vec
  void axpy(Vec& acc, const C& c, const Vec& v) const;
  Vec scale(const C& c, const Vec& v) const;

 private:
  Vec reduce_mono_inner(const Mono& q);
  // Normalizes one monomial into a combination of window-normal monomials.
  void normalize_into(const LaurentPoly& tpl_scale, const C& scale, const Mono& q,
                      std::vector<std::pair<C, Mono>>& out);
  // One rewrite step for a normalized, non-basis monomial.
  std::vector<std::pair<C, Mono>> step(const Mono& q, std::string* rule_name);

  bool is_basis(const Mono& q, int* idx) const;

  int k_;
  Ring ring_;
  long budget_;
  long steps_ = 0;
  Basis basis_;
  const RuleTable* table_;
  Engine* mirror_ = nullptr;
  ReductionTrace* trace_ = nullptr;

  std::unordered_map<Mono, Vec, MonoHash> memo_;
  std::unordered_map<Mono, int, MonoHash> in_progress_;
  std::array<std::vector<Vec>, 4> columns_;
  std::array<std::vector<char>, 4> have_col_;
  std::vector<Vec> phi_basis_;
  std::vector<char> have_phi_;
};

using SymbolicEngine = Engine<SymbolicCoeffs>;
using ModpEngine = Engine<ModpCoeffs>;

// Element-level API (the spec's AlgebraElement): finitely supported map
// word -> coefficient, symbolic flavor.
struct AlgebraElement {
  int k = 0;
  std::vector<std::pair<BraidWord, LaurentPoly>> terms;

  static AlgebraElement from_word(int k, const BraidWord& w) {
    return AlgebraElement{k, {{w, LaurentPoly::one(k)}}};
  }
  void add_term(const BraidWord& w, LaurentPoly c);
  AlgebraElement phi() const;  // word-wise + coefficient-wise automorphism
};

// Reduce an element to canonical-basis support.  Output is indexed by basis.
std::vector<std::pair<int, LaurentPoly>> reduce_element(SymbolicEngine& eng,
                                                        const AlgebraElement& e);

}  // namespace hecke
