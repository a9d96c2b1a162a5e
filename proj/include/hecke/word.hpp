#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// One syllable s_g^e of a word in B_3.  g is 1 or 2, e nonzero.
struct Syllable {
  int8_t gen;
  int32_t exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Free-group normal form: adjacent syllables carry distinct generators and
// no syllable has exponent zero.  The braid relation is *not* applied here;
// the rewrite engine owns all B_3/H_k relations.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Syllable> syl) : syl_(std::move(syl)) { fuse(); }

  static BraidWord identity() { return BraidWord(); }
  static BraidWord gen(int g, int e = 1) {
    BraidWord w;
    if (e != 0) w.syl_.push_back({static_cast<int8_t>(g), e});
    return w;
  }

  bool empty() const { return syl_.empty(); }
  size_t size() const { return syl_.size(); }
  const std::vector<Syllable>& syllables() const { return syl_; }
  const Syllable& operator[](size_t i) const { return syl_[i]; }

  // Number of s_2 syllables; the engine's primary length measure.
  int s2_count() const {
    int n = 0;
    for (const auto& s : syl_) n += s.gen == 2;
    return n;
  }

  BraidWord concat(const BraidWord& o) const;
  BraidWord inverse() const;
  // Exponent negation in place: the word-level action of the automorphism.
  BraidWord phi() const;

  BraidWord subword(size_t from, size_t to) const;  // [from, to)

  bool operator==(const BraidWord& o) const = default;

  // Grammar: whitespace-separated tokens `s1` / `s2`, each optionally
  // followed by `^<int>`.  "s1^0" contributes nothing.
  static BraidWord parse(const std::string& text);
  std::string to_string() const;  // "" -> "1"

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& s : syl_) {
      h ^= static_cast<size_t>(s.gen) + 0x9e3779b9u + (h << 6) + (h >> 2);
      h ^= static_cast<size_t>(static_cast<uint32_t>(s.exp)) + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  void fuse();
  std::vector<Syllable> syl_;
};

struct BraidWordHash {
  size_t operator()(const BraidWord& w) const { return w.hash(); }
};

// Named words from the algebra: omega = s2 s1^2 s2, z = s1^2 omega (the
// full twist, central in B_3), z0 = (s1 s2)^3 = z.
BraidWord omega_word(int power = 1);
BraidWord z_word(int power = 1);

}  // namespace hecke
