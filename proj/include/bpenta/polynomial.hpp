#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bpenta/error.hpp"
#include "bpenta/rational.hpp"

namespace bpenta {

/// Univariate polynomial over BigRational in the placeholder symbol x.
/// Coefficients are stored in ascending degree with no trailing zeros; the
/// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients) : c_(std::move(coefficients)) { trim(); }
  explicit Polynomial(const BigRational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static Polynomial x() { return Polynomial({BigRational(0), BigRational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<BigRational>& coefficients() const { return c_; }
  BigRational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }
  BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

  BigRational eval(const BigRational& t) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(Polynomial a, const BigRational& s) {
    if (s.is_zero()) return {};
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend Polynomial operator/(Polynomial a, const BigRational& s) {
    if (s.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial divided by zero scalar");
    for (auto& c : a.c_) c /= s;
    return a;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder) with deg(rem) < deg(divisor).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (dividend.degree() < divisor.degree()) return {Polynomial(), dividend};
    std::vector<BigRational> rem = dividend.c_;
    std::vector<BigRational> quot(dividend.c_.size() - divisor.c_.size() + 1);
    const BigRational& lead = divisor.c_.back();
    const std::size_t dd = divisor.c_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
      const BigRational& top = rem[k + dd];
      if (top.is_zero()) continue;
      BigRational q = top / lead;
      for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
      quot[k] = std::move(q);
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Plain "c0 + c1*x + ..." rendering with rational coefficients, highest
  /// degree first, e.g. "x^2 - 11/9*x + 1".
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

/// Monic greatest common divisor over Q (Euclid). gcd(p, 0) is monic(p).
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    // Keeping the remainder monic bounds coefficient growth in the sequence.
    b = r.monic();
  }
  return a.monic();
}

namespace detail {

inline void append_term(std::string& out, const BigRational& coefficient, std::size_t power, bool first) {
  BigRational mag = coefficient.abs();
  if (first) {
    if (coefficient.sign() < 0) out += "-";
  } else {
    out += coefficient.sign() < 0 ? " - " : " + ";
  }
  const bool unit = mag == BigRational(1);
  if (power == 0) {
    out += mag.to_string();
    return;
  }
  if (!unit) out += mag.to_string() + "*";
  out += "x";
  if (power > 1) out += "^" + std::to_string(power);
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    detail::append_term(out, c_[k], k, first);
    first = false;
  }
  return out;
}

}  // namespace bpenta
