#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bpenta/scalar.hpp"

namespace bpenta {

/// Square row-major matrix. Used for densified banded systems and by the
/// dense verification path.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, ScalarTraits<T>::zero()) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one();
    return m;
  }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Same matrix with the row order reversed.
  DenseMatrix reversed_rows() const {
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(n_ - 1 - i, j);
    }
    return out;
  }

  std::size_t count_nonzeros() const {
    std::size_t nz = 0;
    for (const auto& v : data_) nz += !ScalarTraits<T>::is_zero(v);
    return nz;
  }

  std::vector<T> multiply(std::span<const T> v) const {
    if (v.size() != n_) throw std::invalid_argument("DenseMatrix::multiply: size mismatch");
    std::vector<T> out(n_, ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!ScalarTraits<T>::is_zero((*this)(i, j))) out[i] = out[i] + (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("DenseMatrix product: size mismatch");
    DenseMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (ScalarTraits<T>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace bpenta
