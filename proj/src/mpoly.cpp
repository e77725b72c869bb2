#include "symfrac/mpoly.hpp"

#include <functional>

#include "symfrac/format.hpp"

namespace symfrac {

MPoly::MPoly(std::size_t nvars, Poly poly) : n_(nvars), poly_(std::move(poly)) {
  if (poly_.slots() > n_)
    throw Error(ErrorKind::MixedContext, "monomial uses a variable beyond x" + std::to_string(n_));
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i, const RingSpec& ring) {
  if (i < 1 || i > nvars) throw Error(ErrorKind::RangeError, "variable index out of range");
  return MPoly(nvars, Poly::monomial(Monomial::variable(i - 1), Coeff(ring, 1)));
}

MPoly MPoly::monomial(std::size_t nvars, const std::vector<unsigned>& exps, const Coeff& c) {
  if (exps.size() != nvars) throw Error(ErrorKind::MixedContext, "exponent vector has the wrong length");
  return MPoly(nvars, Poly::monomial(Monomial(exps), c));
}

unsigned MPoly::degree() const { return is_zero() ? 0 : poly_.leading().mono.degree(); }

void MPoly::check_context(const MPoly& b) const {
  if (n_ != b.n_ || !(ring() == b.ring()))
    throw Error(ErrorKind::MixedContext, "polynomials live in different rings");
}

MPoly& MPoly::operator+=(const MPoly& b) {
  check_context(b);
  poly_ += b.poly_;
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& b) {
  check_context(b);
  poly_ -= b.poly_;
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& b) {
  check_context(b);
  poly_ *= b.poly_;
  return *this;
}

MPoly MPoly::exact_divide(const MPoly& divisor) const {
  check_context(divisor);
  return MPoly(n_, poly_.exact_divide(divisor.poly_));
}

MPoly MPoly::swap_variables(std::size_t i, std::size_t j) const {
  std::vector<Term> out;
  out.reserve(size());
  for (const auto& t : terms()) {
    auto e = t.mono.exponents(n_);
    std::swap(e[i - 1], e[j - 1]);
    out.push_back({Monomial(e), t.coeff});
  }
  return MPoly(n_, Poly::from_terms(ring(), std::move(out)));
}

bool MPoly::is_symmetric() const {
  for (std::size_t i = 1; i < n_; ++i)
    if (swap_variables(i, i + 1) != *this) return false;
  return true;
}

MPoly MPoly::embed(std::size_t nvars) const {
  if (nvars < poly_.slots()) throw Error(ErrorKind::MixedContext, "cannot embed into fewer variables");
  return MPoly(nvars, poly_);
}

Coeff MPoly::evaluate(const std::vector<Coeff>& point) const {
  if (point.size() != n_) throw Error(ErrorKind::MixedContext, "point has the wrong dimension");
  Coeff acc(ring());
  for (const auto& t : terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < t.mono.slots(); ++i)
      if (t.mono[i] > 0) v *= point[i].pow(t.mono[i]);
    acc += v;
  }
  return acc;
}

std::string MPoly::to_string() const {
  return format_poly(poly_, [](const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.slots(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  });
}

MPoly elementary(unsigned k, std::size_t nvars, const RingSpec& ring) {
  if (k == 0) return MPoly::constant(nvars, Coeff(ring, 1));
  std::vector<MPoly::Term> terms;
  if (k <= nvars) {
    std::vector<unsigned> exps(nvars, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned left) {
      if (left == 0) {
        terms.push_back({Monomial(exps), Coeff(ring, 1)});
        return;
      }
      for (std::size_t i = start; i + left <= nvars; ++i) {
        exps[i] = 1;
        rec(i + 1, left - 1);
        exps[i] = 0;
      }
    };
    rec(0, k);
  }
  return MPoly(nvars, MPoly::Poly::from_terms(ring, std::move(terms)));
}

MPoly power_sum(unsigned k, std::size_t nvars, const RingSpec& ring) {
  return power_sum_prefix(k, nvars, nvars, ring);
}

MPoly power_sum_prefix(unsigned k, std::size_t m, std::size_t nvars, const RingSpec& ring) {
  if (m > nvars) throw Error(ErrorKind::RangeError, "prefix longer than the variable count");
  if (k == 0) return MPoly::constant(nvars, Coeff(ring, static_cast<long long>(m)));
  std::vector<MPoly::Term> terms;
  for (std::size_t i = 0; i < m; ++i) terms.push_back({Monomial::variable(i, k), Coeff(ring, 1)});
  return MPoly(nvars, MPoly::Poly::from_terms(ring, std::move(terms)));
}

MPoly complete_homogeneous(unsigned k, std::size_t nvars, const RingSpec& ring) {
  std::vector<MPoly::Term> terms;
  std::vector<unsigned> exps(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      exps[i] = left;
      terms.push_back({Monomial(exps), Coeff(ring, 1)});
      exps[i] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
    exps[i] = 0;
  };
  rec(0, k);
  return MPoly(nvars, MPoly::Poly::from_terms(ring, std::move(terms)));
}

MPoly drop_variable(const MPoly& f, std::size_t k) {
  if (k < 1 || k > f.nvars()) throw Error(ErrorKind::RangeError, "variable index out of range");
  std::vector<MPoly::Term> kept;
  for (const auto& t : f.terms())
    if (t.mono[k - 1] == 0) kept.push_back(t);
  return MPoly(f.nvars(), MPoly::Poly::from_terms(f.ring(), std::move(kept)));
}

Matrix<MPoly> power_sum_hankel(std::size_t d, std::size_t nvars, const RingSpec& ring, unsigned start) {
  Matrix<MPoly> m(d, d, MPoly(nvars, ring));
  std::vector<MPoly> sums;
  for (std::size_t s = 0; s + 1 < 2 * d; ++s) sums.push_back(power_sum(start + static_cast<unsigned>(s), nvars, ring));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = sums[i + j];
  return m;
}

MPoly vandermonde_squared(std::size_t nvars, const RingSpec& ring) {
  MPoly acc = MPoly::constant(nvars, Coeff(ring, 1));
  for (std::size_t i = 1; i <= nvars; ++i)
    for (std::size_t j = i + 1; j <= nvars; ++j) {
      MPoly diff = MPoly::variable(nvars, i, ring) - MPoly::variable(nvars, j, ring);
      acc *= diff * diff;
    }
  return acc;
}

MPoly rename_variables(const MPoly& f, const std::vector<std::size_t>& targets, std::size_t nvars) {
  if (targets.size() != f.nvars()) throw Error(ErrorKind::RangeError, "need one target per variable");
  std::vector<MPoly::Term> out;
  for (const auto& t : f.terms()) {
    std::vector<unsigned> exps(nvars, 0);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (targets[i] < 1 || targets[i] > nvars) throw Error(ErrorKind::RangeError, "target variable out of range");
      exps[targets[i] - 1] += t.mono[i];
    }
    out.push_back({Monomial(exps), t.coeff});
  }
  return MPoly(nvars, MPoly::Poly::from_terms(f.ring(), std::move(out)));
}

MPoly hankel_subset_sum(std::size_t d, std::size_t nvars, const RingSpec& ring) {
  MPoly acc(nvars, ring);
  if (d == 0 || d > nvars) return acc;
  MPoly base = determinant(power_sum_hankel(d, d, ring));
  std::vector<std::size_t> subset(d);
  for (std::size_t i = 0; i < d; ++i) subset[i] = i + 1;
  while (true) {
    acc += rename_variables(base, subset, nvars);
    std::size_t i = d;
    while (i > 0 && subset[i - 1] == nvars - d + i) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }
  return acc;
}

MPoly determinant(const Matrix<MPoly>& m) { return symfrac::determinant<MPoly>(m); }

}  // namespace symfrac
