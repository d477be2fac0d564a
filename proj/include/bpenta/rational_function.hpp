#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bpenta/error.hpp"
#include "bpenta/polynomial.hpp"
#include "bpenta/rational.hpp"

namespace bpenta {

/// Quotient num/den of polynomials in the placeholder symbol x, kept in
/// canonical form: gcd(num, den) = 1 and den monic. Zero is 0/1. Because the
/// form is canonical, equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(BigRational(1)) {}
  RationalFunction(const BigRational& c) : num_(c), den_(BigRational(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(BigRational(c)) {}             // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    canonicalize();
  }

  static RationalFunction symbol() { return RationalFunction(Polynomial::x(), Polynomial(BigRational(1))); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Identically zero, not merely zero at x = 0.
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Value when the function is a constant; only meaningful if is_constant().
  BigRational constant_value() const { return num_.coefficient(0); }

  /// num(t)/den(t); throws PoleAtZero when den(t) = 0.
  BigRational eval(const BigRational& t) const {
    const BigRational d = den_.eval(t);
    if (d.is_zero()) {
      throw Error(ErrorKind::PoleAtZero, "rational function " + to_string() + " has a pole at x = " + t.to_string());
    }
    return num_.eval(t) / d;
  }

  BigRational eval_at_zero() const { return eval(BigRational(0)); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by identically zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Display form with integer coefficients: both parts are scaled by a
  /// common rational so the coefficients are coprime integers, e.g.
  /// "-11/(9x-11)", "(22x-22)/(9x-11)", "24/7", "-3".
  std::string to_string() const;

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(BigRational(1));
      return;
    }
    if (!den_.is_constant()) {
      const Polynomial g = poly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    const BigRational lead = den_.leading();
    if (lead != BigRational(1)) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  Polynomial num_;
  Polynomial den_;
};

namespace detail {

/// Integer coefficients rendered compactly: "9x-11", "x^2+1", "-2x".
inline std::string compact_integer_poly(const std::vector<mpz_class>& c) {
  std::string out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const mpz_class mag = abs(c[k]);
    if (c[k] < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k > 0) out += "x";
    if (k > 1) out += "^" + std::to_string(k);
    first = false;
  }
  return out.empty() ? "0" : out;
}

inline bool is_single_term(const std::vector<mpz_class>& c) {
  std::size_t terms = 0;
  for (const auto& v : c) terms += (v != 0);
  return terms <= 1;
}

}  // namespace detail

inline std::string RationalFunction::to_string() const {
  mpz_class scale = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coefficients()) {
      const mpz_class d = c.denominator();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }
  }
  const auto integerize = [&](const Polynomial& p) {
    std::vector<mpz_class> out;
    for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (scale / c.denominator()));
    return out;
  };
  std::vector<mpz_class> n = integerize(num_);
  std::vector<mpz_class> d = integerize(den_);
  mpz_class content = 0;
  for (const auto* v : {&n, &d}) {
    for (const auto& c : *v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  if (content > 1) {
    for (auto* v : {&n, &d}) {
      for (auto& c : *v) c /= content;
    }
  }
  if (n.empty()) return "0";
  const bool den_is_one = d.size() == 1 && d[0] == 1;
  if (den_is_one) return detail::compact_integer_poly(n);

  std::string num_text = detail::compact_integer_poly(n);
  if (!detail::is_single_term(n)) num_text = "(" + num_text + ")";
  std::string den_text = detail::compact_integer_poly(d);
  // "4/x" is unambiguous, "4/9x" is not.
  if (!detail::is_single_term(d) || (d.size() > 1 && abs(d.back()) != 1)) den_text = "(" + den_text + ")";
  return num_text + "/" + den_text;
}

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  RationalFunction expr() {
    RationalFunction value = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        value /= unary();
      } else if (pos_ < text_.size() && (text_[pos_] == '(' || text_[pos_] == 'x' ||
                                         std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        value *= power();
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    RationalFunction out(1);
    for (unsigned long k = 0; k < e; ++k) out *= base;
    return out;
  }

  RationalFunction primary() {
    skip_space();
    if (accept('(')) {
      RationalFunction inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('x')) return RationalFunction::symbol();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail("expected number, 'x' or '('");
    return RationalFunction(BigRational::parse(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an arithmetic expression in x: numbers, x, + - * / ^, parentheses
/// and implicit multiplication ("22(x-1)/(9x-11)"). Used for display
/// round-trips and tests; system files never contain x.
inline RationalFunction parse_rational_function(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

}  // namespace bpenta
