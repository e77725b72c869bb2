#include "symfrac/matrix.hpp"

namespace symfrac {

Echelon row_reduce(Matrix<Coeff> m) {
  if (m.rows() > 0 && !m(0, 0).ring().is_field())
    throw Error(ErrorKind::UnsupportedRing, "row reduction needs a field");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    Coeff inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Coeff f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::optional<std::vector<Coeff>> solve_linear(const Matrix<Coeff>& a, const std::vector<Coeff>& b,
                                               std::size_t* rank) {
  if (b.size() != a.rows()) throw Error(ErrorKind::MixedContext, "right-hand side has the wrong length");
  const RingSpec ring = b.empty() ? a(0, 0).ring() : b.front().ring();
  Matrix<Coeff> aug(a.rows(), a.cols() + 1, Coeff(ring));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  std::size_t r = 0;
  for (auto c : e.pivot_columns)
    if (c < a.cols()) ++r;
  if (rank) *rank = r;
  if (r < e.pivot_columns.size()) return std::nullopt;  // pivot in the augmented column
  std::vector<Coeff> x(a.cols(), Coeff(ring));
  for (std::size_t i = 0; i < r; ++i) x[e.pivot_columns[i]] = e.reduced(i, a.cols());
  return x;
}

}  // namespace symfrac
