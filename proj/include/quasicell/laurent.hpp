#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasicell {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in v, the coefficient ring for everything in
// this library.  Terms are kept sorted by exponent; zero coefficients are
// never stored, so the zero polynomial has no terms.  Values are immutable
// in spirit: every operation returns a fresh normalized polynomial.
class LaurentPoly {
public:
  using Term = std::pair<int, Int>;  // (exponent, nonzero coefficient)

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Int(c)) {}
  LaurentPoly(Int c) {
    if (c != 0) terms_.emplace_back(0, std::move(c));
  }

  static LaurentPoly monomial(Int c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exp, std::move(c));
    return p;
  }
  // v^exp
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.back().first;
  }
  int valuation() const {
    if (terms_.empty()) throw std::logic_error("valuation of zero polynomial");
    return terms_.front().first;
  }

  Int coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
  }

  const std::vector<Term>& terms() const { return terms_; }

  // v -> v^{-1} on every term
  LaurentPoly bar() const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      out.terms_.emplace_back(-it->first, it->second);
    return out;
  }

  // sum of the terms with strictly negative exponent
  LaurentPoly negative_part() const {
    LaurentPoly out;
    for (const auto& t : terms_) {
      if (t.first >= 0) break;
      out.terms_.push_back(t);
    }
    return out;
  }

  // true when the polynomial lies in v^bound * Z[v^{-1}] (zero counts)
  bool degree_at_most(int bound) const {
    return terms_.empty() || degree() <= bound;
  }
  // true when every exponent is >= bound (zero counts)
  bool valuation_at_least(int bound) const {
    return terms_.empty() || valuation() >= bound;
  }
  // true when all exponents are congruent to r mod 2
  bool exponents_congruent(int r) const {
    for (const auto& t : terms_)
      if (((t.first - r) % 2 + 2) % 2 != 0) return false;
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly out(*this);
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return merge(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return merge(o, true); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int lo = a.valuation() + b.valuation();
    const int hi = a.degree() + b.degree();
    std::vector<Int> buf(static_cast<size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) buf[static_cast<size_t>(ea + eb - lo)] += ca * cb;
    LaurentPoly out;
    for (size_t k = 0; k < buf.size(); ++k)
      if (buf[k] != 0) out.terms_.emplace_back(lo + static_cast<int>(k), std::move(buf[k]));
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& scale(const Int& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }
  // multiply by c * v^exp
  LaurentPoly& shift_scale(const Int& c, int exp) {
    scale(c);
    for (auto& t : terms_) t.first += exp;
    return *this;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Canonical text form, terms in decreasing exponent: "v^2-2+v^-2".
  // Exponent 0 prints as a bare integer, exponent 1 as "v".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Int mag = c < 0 ? Int(-c) : c;
      if (c < 0)
        out += '-';
      else if (!out.empty())
        out += '+';
      if (e == 0) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str();
        out += 'v';
        if (e != 1) out += '^' + std::to_string(e);
      }
    }
    return out;
  }

  // Inverse of str(); returns nullopt on malformed input.
  static std::optional<LaurentPoly> parse(std::string_view s) {
    LaurentPoly out;
    size_t i = 0;
    if (s.empty()) return std::nullopt;
    if (s == "0") return out;
    while (i < s.size()) {
      Int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
        if (i >= s.size()) return std::nullopt;
      } else if (i != 0) {
        return std::nullopt;
      }
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      Int mag = digits.empty() ? Int(1) : Int(digits);
      int exp = 0;
      if (i < s.size() && s[i] == 'v') {
        ++i;
        exp = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::string es;
          if (i < s.size() && s[i] == '-') es += s[i++];
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) es += s[i++];
          exp = std::stoi(es);
        }
      } else if (digits.empty()) {
        return std::nullopt;
      }
      out += monomial(sign * mag, exp);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
  }

private:
  LaurentPoly& merge(const LaurentPoly& o, bool subtract) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, subtract ? Int(-o.terms_[j].second) : o.terms_[j].second);
        ++j;
      } else {
        Int c = subtract ? Int(terms_[i].second - o.terms_[j].second)
                         : Int(terms_[i].second + o.terms_[j].second);
        if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term> terms_;
};

}  // namespace quasicell
