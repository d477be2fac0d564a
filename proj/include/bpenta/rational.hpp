#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "bpenta/error.hpp"

namespace bpenta {

/// Arbitrary-precision rational number in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class; it exists so that
/// gmpxx expression templates never leak into generic solver code.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const mpz_class& integer) : v_(integer) {}

  BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Accepts `[+-]digits`, `[+-]digits.digits` (converted exactly) and
  /// `[+-]digits/digits`.
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return v_.get_str(); }

  BigRational abs() const {
    BigRational r;
    r.v_ = ::abs(v_);
    return r;
  }

  BigRational& operator+=(const BigRational& o) {
    v_ += o.v_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    v_ -= o.v_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    v_ *= o.v_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline BigRational BigRational::parse(std::string_view text) {
  const auto fail = [&] { return Error(ErrorKind::Parse, "invalid number literal '" + std::string(text) + "'"); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) throw fail();
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in literal '" + std::string(text) + "'");
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw fail();
    }
    num.set_str(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!detail::all_digits(body)) throw fail();
    num.set_str(std::string(body), 10);
  }
  if (negative) num = -num;
  return BigRational(num, den);
}

}  // namespace bpenta
