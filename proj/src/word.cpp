#include "hecke/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hecke {

void BraidWord::fuse() {
  std::vector<Syllable> out;
  out.reserve(syl_.size());
  for (const auto& s : syl_) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) {
        out.pop_back();
        // cascading fusion: the neighbours may now touch
        while (out.size() >= 1 && !out.empty()) break;
      }
      continue;
    }
    out.push_back(s);
  }
  // a single pass above can leave a new adjacency after a cancellation;
  // iterate until stable
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Syllable> next;
    next.reserve(out.size());
    for (const auto& s : out) {
      if (s.exp == 0) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().gen == s.gen) {
        next.back().exp += s.exp;
        changed = true;
        if (next.back().exp == 0) next.pop_back();
        continue;
      }
      next.push_back(s);
    }
    out = std::move(next);
  }
  syl_ = std::move(out);
}

BraidWord BraidWord::concat(const BraidWord& o) const {
  std::vector<Syllable> v = syl_;
  v.insert(v.end(), o.syl_.begin(), o.syl_.end());
  return BraidWord(std::move(v));
}

BraidWord BraidWord::inverse() const {
  std::vector<Syllable> v;
  v.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) v.push_back({it->gen, -it->exp});
  return BraidWord(std::move(v));
}

BraidWord BraidWord::phi() const {
  std::vector<Syllable> v = syl_;
  for (auto& s : v) s.exp = -s.exp;
  return BraidWord(std::move(v));
}

BraidWord BraidWord::subword(size_t from, size_t to) const {
  std::vector<Syllable> v(syl_.begin() + from, syl_.begin() + to);
  return BraidWord(std::move(v));
}

BraidWord BraidWord::parse(const std::string& text) {
  std::vector<Syllable> v;
  size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("word parse error at position " + std::to_string(i) +
                                ": " + msg);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 's') fail("expected 's1' or 's2'");
    ++i;
    if (i >= text.size() || (text[i] != '1' && text[i] != '2')) fail("expected generator index 1 or 2");
    int g = text[i] - '0';
    ++i;
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail("expected exponent");
      e = std::stol(text.substr(start, i - start));
    }
    if (e != 0) v.push_back({static_cast<int8_t>(g), static_cast<int32_t>(e)});
  }
  return BraidWord(std::move(v));
}

std::string BraidWord::to_string() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << ' ';
    first = false;
    os << 's' << int(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

BraidWord omega_word(int power) {
  BraidWord w;
  BraidWord om = BraidWord::parse("s2 s1^2 s2");
  BraidWord omi = om.inverse();
  for (int i = 0; i < (power >= 0 ? power : -power); ++i)
    w = w.concat(power >= 0 ? om : omi);
  return w;
}

BraidWord z_word(int power) {
  return BraidWord::gen(1, 2 * power).concat(omega_word(power));
}

}  // namespace hecke
