#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bpenta/scalar.hpp"

namespace bpenta {

/// double that counts every arithmetic operation performed on it. The
/// counter is per thread; reset it before the region being measured.
class CountingScalar {
 public:
  CountingScalar() = default;
  CountingScalar(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  double value() const { return v_; }

  static std::uint64_t& counter() {
    thread_local std::uint64_t ops = 0;
    return ops;
  }
  static void reset() { counter() = 0; }
  static std::uint64_t count() { return counter(); }

  friend CountingScalar operator+(CountingScalar a, CountingScalar b) { return tick(a.v_ + b.v_); }
  friend CountingScalar operator-(CountingScalar a, CountingScalar b) { return tick(a.v_ - b.v_); }
  friend CountingScalar operator*(CountingScalar a, CountingScalar b) { return tick(a.v_ * b.v_); }
  friend CountingScalar operator/(CountingScalar a, CountingScalar b) { return tick(a.v_ / b.v_); }
  friend CountingScalar operator-(CountingScalar a) { return tick(-a.v_); }
  friend bool operator==(CountingScalar a, CountingScalar b) { return a.v_ == b.v_; }

 private:
  static CountingScalar tick(double v) {
    ++counter();
    return CountingScalar(v);
  }

  double v_ = 0.0;
};

template <>
struct ScalarTraits<CountingScalar> {
  static constexpr SolveMode mode = SolveMode::Float;
  static CountingScalar zero() { return 0.0; }
  static CountingScalar one() { return 1.0; }
  static bool is_zero(const CountingScalar& v) { return v.value() == 0.0; }
  static CountingScalar from_literal(std::string_view text) { return BigRational::parse(text).to_double(); }
  static CountingScalar from_rational(const BigRational& r) { return r.to_double(); }
  static std::string to_string(const CountingScalar& v) { return ScalarTraits<double>::to_string(v.value()); }
};

}  // namespace bpenta
