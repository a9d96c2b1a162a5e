#include "hecke/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hecke {

LaurentPoly LaurentPoly::constant(int k, mpz_class c) {
  LaurentPoly p(k);
  if (c != 0) p.terms_.push_back({ExpVec{}, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::monomial(int k, const ExpVec& e, mpz_class c) {
  LaurentPoly p(k);
  if (c != 0) p.terms_.push_back({e, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::variable(int k, int j) {
  ExpVec e;
  e.e[j] = 1;
  return monomial(k, e, 1);
}

LaurentPoly LaurentPoly::a0_pow(int k, int t) {
  ExpVec e;
  e.e[0] = static_cast<int16_t>(t);
  return monomial(k, e, 1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == ExpVec{} && terms_[0].second == 1;
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = terms_[0];
  if (c != 1 && c != -1) return false;
  for (int j = 1; j < 5; ++j)
    if (e.e[j] != 0) return false;
  return true;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) std::abort();
  ExpVec e;
  e.e[0] = static_cast<int16_t>(-terms_[0].first.e[0]);
  return monomial(k_, e, terms_[0].second);
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t out = 0;
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i + 1;
    mpz_class acc = terms_[i].second;
    while (j < terms_.size() && terms_[j].first == terms_[i].first) {
      acc += terms_[j].second;
      ++j;
    }
    if (acc != 0) {
      terms_[out].first = terms_[i].first;
      terms_[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r(k_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  // merge of two sorted term lists
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(k_);
  if (terms_.empty() || o.terms_.empty()) return r;
  std::map<ExpVec, mpz_class> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e;
      for (int t = 0; t < 5; ++t) e.e[t] = static_cast<int16_t>(ea.e[t] + eb.e[t]);
      acc[e] += ca * cb;
    }
  }
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::phi() const {
  LaurentPoly r(k_);
  for (const auto& [e, c] : terms_) {
    int hi = 0;  // total degree in a_1..a_{k-1}, each maps to -a_0^{-1} a_{k-j}
    ExpVec img;
    for (int j = 1; j < k_; ++j) {
      hi += e.e[j];
      img.e[k_ - j] += e.e[j];
    }
    img.e[0] = static_cast<int16_t>(-e.e[0] - hi);
    mpz_class cc = (hi % 2 != 0) ? mpz_class(-c) : c;
    r.terms_.push_back({img, std::move(cc)});
  }
  r.normalize();
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    mpz_class ac = first ? c : mpz_class(abs(c));
    first = false;
    std::string coeff = ac.get_str();
    bool any_var = false;
    for (int j = 0; j < k_; ++j) any_var = any_var || e.e[j] != 0;
    os << coeff;
    for (int j = 0; j < k_; ++j) {
      if (e.e[j] == 0) continue;
      os << "*a" << j;
      if (e.e[j] != 1) os << "^" << e.e[j];
    }
    (void)any_var;
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t i = 0;
  int k;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(i) + ": " + msg);
  }
  mpz_class parse_int() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return mpz_class(s.substr(start, i - start));
  }
  // term := [int] {"*" "a" digit ["^" int]}...  (also bare "a0" etc.)
  LaurentPoly parse_term(int sign) {
    skip_ws();
    mpz_class coeff = 1;
    ExpVec e;
    bool saw_any = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
      coeff = parse_int();
      saw_any = true;
    }
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      } else if (saw_any && (i >= s.size() || s[i] != 'a')) {
        break;
      }
      skip_ws();
      if (i >= s.size() || s[i] != 'a') {
        if (!saw_any) fail("expected coefficient or variable");
        break;
      }
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected variable index");
      int j = s[i] - '0';
      ++i;
      if (j >= k) fail("variable index out of range for ring");
      int exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = static_cast<int>(parse_int().get_si());
      }
      if (j != 0 && exp < 0) fail("negative exponent on non-invertible variable");
      e.e[j] = static_cast<int16_t>(e.e[j] + exp);
      saw_any = true;
    }
    if (!saw_any) fail("empty term");
    return LaurentPoly::monomial(k, e, sign * coeff);
  }
  LaurentPoly parse_poly() {
    LaurentPoly acc(k);
    skip_ws();
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    acc += parse_term(sign);
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] == '+') sign = 1;
      else if (s[i] == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++i;
      acc += parse_term(sign);
    }
    return acc;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(int k, const std::string& text) {
  if (text == "0") return zero(k);
  PolyParser p{text, 0, k};
  return p.parse_poly();
}

}  // namespace hecke
