#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bpenta/dense.hpp"
#include "bpenta/error.hpp"
#include "bpenta/scalar.hpp"

namespace bpenta {

inline constexpr std::size_t kMinSystemSize = 5;

/// Backward pentadiagonal system A X = Y: five bands running along the
/// anti-diagonal plus the right-hand side, 5n-6 stored coefficients.
///
/// Storage is 0-based. Correspondence with the conventional 1-based symbols
/// (row r of A holds a~_r, a_r, d_r, b_r, b~_r from left to right, with d_r
/// on the anti-diagonal at column n-r+1):
///
///   member     length   element k is
///   a_tilde    n-2      a~_{k+1}    (a~_1 .. a~_{n-2})
///   a          n-1      a_{k+1}     (a_1  .. a_{n-1})
///   d          n        d_{k+1}     (d_1  .. d_n)
///   b          n-1      b_{k+2}     (b_2  .. b_n)
///   b_tilde    n-2      b~_{k+3}    (b~_3 .. b~_n)
///   y          n        y_{k+1}
template <ScalarField T>
class BackwardPentaSystem {
 public:
  using value_type = T;

  BackwardPentaSystem(std::vector<T> a_tilde, std::vector<T> a, std::vector<T> d, std::vector<T> b,
                      std::vector<T> b_tilde, std::vector<T> y)
      : a_tilde_(std::move(a_tilde)),
        a_(std::move(a)),
        d_(std::move(d)),
        b_(std::move(b)),
        b_tilde_(std::move(b_tilde)),
        y_(std::move(y)) {
    const std::size_t n = d_.size();
    if (n < kMinSystemSize) {
      throw Error(ErrorKind::SizeTooSmall, "system size " + std::to_string(n) + " is below the minimum of 5");
    }
    check_length("a_tilde", a_tilde_.size(), n - 2);
    check_length("a", a_.size(), n - 1);
    check_length("b", b_.size(), n - 1);
    check_length("b_tilde", b_tilde_.size(), n - 2);
    check_length("y", y_.size(), n);
  }

  std::size_t size() const { return d_.size(); }

  const std::vector<T>& a_tilde() const { return a_tilde_; }
  const std::vector<T>& a() const { return a_; }
  const std::vector<T>& d() const { return d_; }
  const std::vector<T>& b() const { return b_; }
  const std::vector<T>& b_tilde() const { return b_tilde_; }
  const std::vector<T>& y() const { return y_; }

  /// Same coefficients with a different right-hand side.
  BackwardPentaSystem with_rhs(std::vector<T> y) const {
    return BackwardPentaSystem(a_tilde_, a_, d_, b_, b_tilde_, std::move(y));
  }

  friend bool operator==(const BackwardPentaSystem&, const BackwardPentaSystem&) = default;

 private:
  static void check_length(const char* name, std::size_t actual, std::size_t expected) {
    if (actual != expected) {
      throw Error(ErrorKind::LengthMismatch, std::string("vector ") + name + " has length " + std::to_string(actual) +
                                                 ", expected " + std::to_string(expected));
    }
  }

  std::vector<T> a_tilde_;
  std::vector<T> a_;
  std::vector<T> d_;
  std::vector<T> b_;
  std::vector<T> b_tilde_;
  std::vector<T> y_;
};

template <ScalarField T>
BackwardPentaSystem<T> new_system(std::vector<T> a_tilde, std::vector<T> a, std::vector<T> d, std::vector<T> b,
                                  std::vector<T> b_tilde, std::vector<T> y) {
  return BackwardPentaSystem<T>(std::move(a_tilde), std::move(a), std::move(d), std::move(b), std::move(b_tilde),
                                std::move(y));
}

/// Ordinary pentadiagonal system A1 X = Y1 obtained by reversing the row
/// order of a backward system. Bands are indexed by A1 row (0-based):
///
///   diag[i]    A1(i, i)       = d_{n-i}
///   upper1[i]  A1(i, i+1)     = b_{n-i}
///   upper2[i]  A1(i, i+2)     = b~_{n-i}
///   lower1[i]  A1(i+1, i)     = a_{n-i-1}
///   lower2[i]  A1(i+2, i)     = a~_{n-i-2}
///   rhs[i]     Y1_i           = y_{n-i}
template <ScalarField T>
struct PentaSystem {
  std::vector<T> lower2;
  std::vector<T> lower1;
  std::vector<T> diag;
  std::vector<T> upper1;
  std::vector<T> upper2;
  std::vector<T> rhs;

  std::size_t size() const { return diag.size(); }

  friend bool operator==(const PentaSystem&, const PentaSystem&) = default;
};

namespace detail {

template <class T>
std::vector<T> reversed(const std::vector<T>& v) {
  return {v.rbegin(), v.rend()};
}

}  // namespace detail

/// Row reversal turns every band of A into the matching band of A1 read
/// backwards, so the transform is a reversal of each stored vector.
template <ScalarField T>
PentaSystem<T> reverse_rows(const BackwardPentaSystem<T>& s) {
  return PentaSystem<T>{
      .lower2 = detail::reversed(s.a_tilde()),
      .lower1 = detail::reversed(s.a()),
      .diag = detail::reversed(s.d()),
      .upper1 = detail::reversed(s.b()),
      .upper2 = detail::reversed(s.b_tilde()),
      .rhs = detail::reversed(s.y()),
  };
}

template <ScalarField T>
DenseMatrix<T> densify(const BackwardPentaSystem<T>& s) {
  const std::size_t n = s.size();
  DenseMatrix<T> m(n);
  // Row r (0-based) carries d at column n-1-r.
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t c = n - 1 - r;
    m(r, c) = s.d()[r];
    if (r + 1 < n) m(r, c - 1) = s.a()[r];
    if (r + 2 < n) m(r, c - 2) = s.a_tilde()[r];
    if (r >= 1) m(r, c + 1) = s.b()[r - 1];
    if (r >= 2) m(r, c + 2) = s.b_tilde()[r - 2];
  }
  return m;
}

template <ScalarField T>
DenseMatrix<T> densify(const PentaSystem<T>& s) {
  const std::size_t n = s.size();
  DenseMatrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = s.diag[i];
    if (i + 1 < n) {
      m(i, i + 1) = s.upper1[i];
      m(i + 1, i) = s.lower1[i];
    }
    if (i + 2 < n) {
      m(i, i + 2) = s.upper2[i];
      m(i + 2, i) = s.lower2[i];
    }
  }
  return m;
}

/// Claerbout's pentadiagonal form of the 2-D Laplacian: d = -4, every other
/// band 1.
template <ScalarField T>
BackwardPentaSystem<T> laplacian_system(std::size_t n, std::vector<T> y) {
  if (n < kMinSystemSize) {
    throw Error(ErrorKind::SizeTooSmall, "system size " + std::to_string(n) + " is below the minimum of 5");
  }
  const T one = ScalarTraits<T>::one();
  const T minus_four = -(one + one + one + one);
  return BackwardPentaSystem<T>(std::vector<T>(n - 2, one), std::vector<T>(n - 1, one), std::vector<T>(n, minus_four),
                                std::vector<T>(n - 1, one), std::vector<T>(n - 2, one), std::move(y));
}

/// Applies `f` to every stored scalar, e.g. to lift an exact system into
/// floating point or into the rational-function field.
template <ScalarField U, ScalarField T, class F>
BackwardPentaSystem<U> convert_system(const BackwardPentaSystem<T>& s, F f) {
  const auto map = [&](const std::vector<T>& v) {
    std::vector<U> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(f(e));
    return out;
  };
  return BackwardPentaSystem<U>(map(s.a_tilde()), map(s.a()), map(s.d()), map(s.b()), map(s.b_tilde()), map(s.y()));
}

template <ScalarField U>
BackwardPentaSystem<U> convert_system(const BackwardPentaSystem<BigRational>& s) {
  return convert_system<U>(s, [](const BigRational& r) { return ScalarTraits<U>::from_rational(r); });
}

}  // namespace bpenta
