#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <system_error>

#include "bpenta/error.hpp"
#include "bpenta/rational.hpp"
#include "bpenta/rational_function.hpp"

namespace bpenta {

enum class SolveMode { Float, Exact, Symbolic };

inline const char* to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Float: return "float";
    case SolveMode::Exact: return "exact";
    case SolveMode::Symbolic: return "symbolic";
  }
  return "unknown";
}

/// Field contract used by the banded algorithms. Specializations provide
/// zero/one, an exact zero test, literal parsing, display and the solve mode
/// the scalar kind stands for. `double` satisfies the field axioms only up to
/// rounding.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr SolveMode mode = SolveMode::Float;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double v) { return v == 0.0; }
  static double from_literal(std::string_view text) { return BigRational::parse(text).to_double(); }
  static double from_rational(const BigRational& r) { return r.to_double(); }

  /// Shortest decimal that round-trips.
  static std::string to_string(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }
};

template <>
struct ScalarTraits<BigRational> {
  static constexpr SolveMode mode = SolveMode::Exact;
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static bool is_zero(const BigRational& v) { return v.is_zero(); }
  static BigRational from_literal(std::string_view text) { return BigRational::parse(text); }
  static BigRational from_rational(const BigRational& r) { return r; }
  static std::string to_string(const BigRational& v) { return v.to_string(); }
};

template <>
struct ScalarTraits<RationalFunction> {
  static constexpr SolveMode mode = SolveMode::Symbolic;
  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(1); }
  static bool is_zero(const RationalFunction& v) { return v.is_zero(); }
  static RationalFunction from_literal(std::string_view text) { return RationalFunction(BigRational::parse(text)); }
  static RationalFunction from_rational(const BigRational& r) { return RationalFunction(r); }
  static std::string to_string(const RationalFunction& v) { return v.to_string(); }
};

template <class T>
concept ScalarField = requires(const T a, const T b, std::string_view text) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { ScalarTraits<T>::zero() } -> std::convertible_to<T>;
  { ScalarTraits<T>::one() } -> std::convertible_to<T>;
  { ScalarTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<T>::from_literal(text) } -> std::convertible_to<T>;
  { ScalarTraits<T>::to_string(a) } -> std::convertible_to<std::string>;
};

template <ScalarField T>
T from_literal(std::string_view text) {
  return ScalarTraits<T>::from_literal(text);
}

template <ScalarField T>
bool is_zero(const T& v) {
  return ScalarTraits<T>::is_zero(v);
}

template <ScalarField T>
std::string format_scalar(const T& v) {
  return ScalarTraits<T>::to_string(v);
}

}  // namespace bpenta
