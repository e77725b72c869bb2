#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symfrac/coeff.hpp"
#include "symfrac/error.hpp"

namespace symfrac {

/// Dense row-major matrix of exact values. Entries need not be default
/// constructible, so every constructor takes a fill value.
template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

/// Laplace expansion along rows with minors memoized by column subset:
/// 2^d minors, each a signed sum of entry * smaller minor. Division free.
template <typename P>
P determinant_cofactor(const Matrix<P>& m) {
  const std::size_t d = m.rows();
  if (d != m.cols()) throw Error(ErrorKind::MixedContext, "determinant of a non-square matrix");
  if (d == 0) throw Error(ErrorKind::MixedContext, "determinant of an empty matrix");
  if (d > 20) throw Error(ErrorKind::RangeError, "cofactor expansion limited to 20x20");
  // minors[S] = det(rows d-|S|.., columns S)
  std::unordered_map<std::uint32_t, P> minors;
  minors.emplace(0u, m(0, 0).one_like());
  for (std::size_t size = 1; size <= d; ++size) {
    std::size_t row = d - size;
    std::unordered_map<std::uint32_t, P> next;
    for (const auto& [mask, _] : minors) {
      for (std::size_t j = 0; j < d; ++j) {
        if (mask & (1u << j)) continue;
        std::uint32_t bigger = mask | (1u << j);
        if (next.count(bigger)) continue;
        // expand det(rows row.., cols bigger) along its first row
        P acc = m(0, 0).zero_like();
        std::size_t pos = 0;
        for (std::size_t c = 0; c < d; ++c) {
          if (!(bigger & (1u << c))) continue;
          const P& entry = m(row, c);
          if (!entry.is_zero()) {
            const P& minor = minors.at(bigger & ~(1u << c));
            if (!minor.is_zero()) {
              if (pos % 2 == 0) acc += entry * minor;
              else acc -= entry * minor;
            }
          }
          ++pos;
        }
        next.emplace(bigger, std::move(acc));
      }
    }
    minors = std::move(next);
  }
  return minors.at((1u << d) - 1u);
}

/// Fraction-free (Bareiss) elimination; every division is exact in an
/// integral domain. Row swaps on zero pivots flip the sign.
template <typename P>
P determinant_bareiss(Matrix<P> m) {
  const std::size_t d = m.rows();
  if (d != m.cols()) throw Error(ErrorKind::MixedContext, "determinant of a non-square matrix");
  if (d == 0) throw Error(ErrorKind::MixedContext, "determinant of an empty matrix");
  P prev = m(0, 0).one_like();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < d && m(swap, k).is_zero()) ++swap;
      if (swap == d) return m(0, 0).zero_like();
      m.swap_rows(k, swap);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        P t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = t.exact_divide(prev);
      }
    }
    prev = m(k, k);
  }
  P det = m(d - 1, d - 1);
  return negate ? -det : det;
}

/// Memoized cofactor expansion for d <= 8 (at most 256 minors), Bareiss above.
/// On multivariate polynomial entries the exact divisions of Bareiss cost far
/// more than the extra products of the expansion at these sizes.
template <typename P>
P determinant(const Matrix<P>& m) {
  return m.rows() <= 8 ? determinant_cofactor(m) : determinant_bareiss(m);
}

/// Result of reducing a matrix over a field to reduced row echelon form.
struct Echelon {
  Matrix<Coeff> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan over a field (Q or F_r).
Echelon row_reduce(Matrix<Coeff> m);

/// Solves A x = b over a field. Returns a particular solution (free variables
/// set to zero) or nullopt when inconsistent; `rank` receives rank(A).
std::optional<std::vector<Coeff>> solve_linear(const Matrix<Coeff>& a, const std::vector<Coeff>& b,
                                               std::size_t* rank = nullptr);

}  // namespace symfrac
