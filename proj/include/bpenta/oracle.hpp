#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bpenta/dense.hpp"
#include "bpenta/error.hpp"
#include "bpenta/rational.hpp"
#include "bpenta/system.hpp"

namespace bpenta::oracle {

using Matrix = DenseMatrix<BigRational>;

/// Exact Gaussian elimination with row pivoting (first nonzero entry in the
/// column). Independent of the banded recurrences. Throws Singular when a
/// column has no usable pivot.
inline std::vector<BigRational> dense_solve(Matrix m, std::vector<BigRational> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "rhs has length " + std::to_string(rhs.size()) + ", expected " +
                                               std::to_string(n));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Singular, "matrix is singular (no pivot in column " + std::to_string(col + 1) + ")");
    m.swap_rows(pivot, col);
    std::swap(rhs[pivot], rhs[col]);

    const BigRational inv = BigRational(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const BigRational factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= factor * m(col, c);
      }
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<BigRational> x(n);
  for (std::size_t r = n; r-- > 0;) {
    BigRational acc = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) {
      if (!m(r, c).is_zero()) acc -= m(r, c) * x[c];
    }
    x[r] = acc / m(r, r);
  }
  return x;
}

/// Determinant by elimination, tracking the sign of row swaps. Singular
/// matrices give 0.
inline BigRational dense_det(Matrix m) {
  const std::size_t n = m.size();
  BigRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return BigRational(0);
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    const BigRational inv = BigRational(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const BigRational factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= factor * m(col, c);
      }
    }
  }
  return det;
}

/// splitmix64 (Steele, Lea, Flood). Fixed so that generated corpora are
/// reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Integer in [-m, m] as -m + next() mod (2m + 1).
  long in_range(long m) {
    const auto span = static_cast<std::uint64_t>(2 * m + 1);
    return -m + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

enum class Band { ATilde, A, D, B, BTilde };

/// One stored coefficient, addressed by band and its conventional 1-based
/// index (d_n is {Band::D, n}).
struct BandPosition {
  Band band;
  /// 1-based index; 0 means "n" (the last entry of the band, resolved
  /// against the system size at use).
  std::size_t index = 0;
  /// Offset subtracted from n when `index` is 0, so "n-1" is {0, 1}.
  std::size_t from_end = 0;

  friend bool operator==(const BandPosition&, const BandPosition&) = default;
};

/// Parses "d_n", "a_3", "btilde_n-1", "atilde_1". Band names: atilde, a, d,
/// b, btilde.
inline BandPosition parse_band_position(std::string_view text) {
  const auto fail = [&] { return Error(ErrorKind::Parse, "invalid band position '" + std::string(text) + "'"); };
  const auto us = text.find('_');
  if (us == std::string_view::npos) throw fail();
  const auto name = text.substr(0, us);
  auto idx = text.substr(us + 1);
  BandPosition pos{};
  if (name == "atilde") {
    pos.band = Band::ATilde;
  } else if (name == "a") {
    pos.band = Band::A;
  } else if (name == "d") {
    pos.band = Band::D;
  } else if (name == "b") {
    pos.band = Band::B;
  } else if (name == "btilde") {
    pos.band = Band::BTilde;
  } else {
    throw fail();
  }
  if (idx.empty()) throw fail();
  if (idx.front() == 'n') {
    idx.remove_prefix(1);
    if (!idx.empty()) {
      if (idx.front() != '-' || !detail::all_digits(idx.substr(1))) throw fail();
      pos.from_end = std::stoul(std::string(idx.substr(1)));
    }
    return pos;
  }
  if (!detail::all_digits(idx)) throw fail();
  pos.index = std::stoul(std::string(idx));
  if (pos.index == 0) throw fail();
  return pos;
}

inline std::string to_string(const BandPosition& pos) {
  std::string name;
  switch (pos.band) {
    case Band::ATilde: name = "atilde"; break;
    case Band::A: name = "a"; break;
    case Band::D: name = "d"; break;
    case Band::B: name = "b"; break;
    case Band::BTilde: name = "btilde"; break;
  }
  if (pos.index != 0) return name + "_" + std::to_string(pos.index);
  return name + "_n" + (pos.from_end ? "-" + std::to_string(pos.from_end) : "");
}

/// Storage slot for a position in a system of size n: (band vector, 0-based
/// offset). Throws LengthMismatch when the position is outside the band.
inline std::size_t storage_offset(const BandPosition& pos, std::size_t n) {
  if (pos.index == 0 && pos.from_end >= n) {
    throw Error(ErrorKind::LengthMismatch, "band position " + to_string(pos) + " is out of range");
  }
  const std::size_t index = pos.index != 0 ? pos.index : n - pos.from_end;
  // First conventional index of each band: a~, a, d start at 1; b at 2; b~ at 3.
  std::size_t first = 1;
  std::size_t last = n;
  switch (pos.band) {
    case Band::ATilde: last = n - 2; break;
    case Band::A: last = n - 1; break;
    case Band::D: break;
    case Band::B: first = 2; break;
    case Band::BTilde: first = 3; break;
  }
  if (index < first || index > last) {
    throw Error(ErrorKind::LengthMismatch, "band position " + to_string(pos) + " is out of range for n = " +
                                               std::to_string(n));
  }
  return index - first;
}

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t n = kMinSystemSize;
  /// Entries are drawn uniformly from [-range, range].
  long range = 9;
  /// Coefficients set to 0 after drawing.
  std::vector<BandPosition> force_zero;
  /// When set, draw X from [-range, range] and use Y = A X instead of a
  /// random Y, so a known integer solution exists.
  bool planted_solution = false;
};

/// Deterministic random system. Draw order from a single splitmix64 stream
/// seeded with `seed`: a~ (n-2), a (n-1), d (n), b (n-1), b~ (n-2), then
/// either y (n) or the planted X (n). Forced zeros are applied before Y is
/// formed from a planted X.
inline BackwardPentaSystem<BigRational> generate(const GeneratorConfig& config) {
  if (config.n < kMinSystemSize) {
    throw Error(ErrorKind::SizeTooSmall, "system size " + std::to_string(config.n) + " is below the minimum of 5");
  }
  if (config.range < 1) throw Error(ErrorKind::Parse, "entry range must be at least 1");
  const std::size_t n = config.n;
  SplitMix64 rng(config.seed);
  const auto draw = [&](std::size_t count) {
    std::vector<BigRational> v;
    v.reserve(count);
    for (std::size_t k = 0; k < count; ++k) v.emplace_back(rng.in_range(config.range));
    return v;
  };
  std::vector<BigRational> a_tilde = draw(n - 2);
  std::vector<BigRational> a = draw(n - 1);
  std::vector<BigRational> d = draw(n);
  std::vector<BigRational> b = draw(n - 1);
  std::vector<BigRational> b_tilde = draw(n - 2);
  std::vector<BigRational> tail = draw(n);

  for (const auto& pos : config.force_zero) {
    const std::size_t off = storage_offset(pos, n);
    switch (pos.band) {
      case Band::ATilde: a_tilde[off] = 0; break;
      case Band::A: a[off] = 0; break;
      case Band::D: d[off] = 0; break;
      case Band::B: b[off] = 0; break;
      case Band::BTilde: b_tilde[off] = 0; break;
    }
  }

  BackwardPentaSystem<BigRational> sys(std::move(a_tilde), std::move(a), std::move(d), std::move(b),
                                       std::move(b_tilde), tail);
  if (!config.planted_solution) return sys;
  return sys.with_rhs(densify(sys).multiply(tail));
}

}  // namespace bpenta::oracle
