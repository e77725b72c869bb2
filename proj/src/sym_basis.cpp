#include "symfrac/sym_basis.hpp"

#include <map>

#include "symfrac/expr.hpp"
#include "symfrac/format.hpp"

namespace symfrac {

namespace {

std::string symbol_text(const Monomial& m, const char* sep, bool latex) {
  std::string s;
  for (std::size_t i = m.slots(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += sep;
    std::string idx = std::to_string(i + 1);
    if (latex) {
      s += "e_" + (idx.size() > 1 ? "{" + idx + "}" : idx);
      if (m[i] > 1) s += "^{" + std::to_string(m[i]) + "}";
    } else {
      s += "e" + idx;
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

Coeff signed_int(const RingSpec& ring, bool negative, long long magnitude) {
  return Coeff(ring, negative ? -magnitude : magnitude);
}

}  // namespace

EExpansion::EExpansion(std::size_t nvars, Poly poly) : n_(nvars), poly_(std::move(poly)) { truncate(); }

void EExpansion::truncate() {
  if (poly_.slots() <= n_) return;
  std::vector<Poly::Term> kept;
  for (const auto& t : poly_.terms())
    if (t.mono.slots() <= n_) kept.push_back(t);
  poly_ = Poly::from_terms(poly_.ring(), std::move(kept));
}

EExpansion EExpansion::generator(unsigned i, std::size_t nvars, const RingSpec& ring) {
  if (i == 0) return constant(nvars, Coeff(ring, 1));
  if (i > nvars) return EExpansion(nvars, ring);
  return EExpansion(nvars, Poly::monomial(Monomial::variable(i - 1), Coeff(ring, 1)));
}

EExpansion EExpansion::from_terms(std::size_t nvars, const RingSpec& ring,
                                  const std::vector<std::pair<Partition, Coeff>>& terms) {
  std::vector<Poly::Term> raw;
  raw.reserve(terms.size());
  for (const auto& [lambda, c] : terms) raw.push_back({lambda.to_monomial(), c});
  return EExpansion(nvars, Poly::from_terms(ring, std::move(raw)));
}

std::vector<std::pair<Partition, Coeff>> EExpansion::entries() const {
  std::vector<std::pair<Partition, Coeff>> out;
  out.reserve(size());
  for (const auto& t : poly_.terms()) out.emplace_back(Partition::from_monomial(t.mono), t.coeff);
  return out;
}

bool EExpansion::is_homogeneous() const {
  for (const auto& t : poly_.terms())
    if (t.mono.weight() != degree()) return false;
  return true;
}

unsigned EExpansion::degree() const { return is_zero() ? 0 : poly_.leading().mono.weight(); }

std::vector<EExpansion> EExpansion::homogeneous_components() const {
  std::map<unsigned, std::vector<Poly::Term>> parts;
  for (const auto& t : poly_.terms()) parts[t.mono.weight()].push_back(t);
  std::vector<EExpansion> out;
  for (auto& [w, terms] : parts) out.emplace_back(n_, Poly::from_terms(ring(), std::move(terms)));
  return out;
}

void EExpansion::check_context(const EExpansion& b) const {
  if (n_ != b.n_ || !(ring() == b.ring()))
    throw Error(ErrorKind::MixedContext, "e-expansions live in different rings");
}

EExpansion& EExpansion::operator+=(const EExpansion& b) {
  check_context(b);
  poly_ += b.poly_;
  return *this;
}

EExpansion& EExpansion::operator-=(const EExpansion& b) {
  check_context(b);
  poly_ -= b.poly_;
  return *this;
}

EExpansion& EExpansion::operator*=(const EExpansion& b) {
  check_context(b);
  poly_ *= b.poly_;
  return *this;
}

EExpansion EExpansion::pow(unsigned k) const { return EExpansion(n_, poly_.pow(k)); }

EExpansion EExpansion::exact_divide(const EExpansion& divisor) const {
  check_context(divisor);
  return EExpansion(n_, poly_.exact_divide(divisor.poly_));
}

std::string EExpansion::to_string() const {
  return format_terms(display_order(poly_), [](const Monomial& m) { return symbol_text(m, "*", false); });
}

std::string EExpansion::to_latex() const {
  return format_terms(display_order(poly_), [](const Monomial& m) { return symbol_text(m, " ", true); }, " ");
}

EExpansion decompose(const MPoly& f) {
  if (!f.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric: " + f.to_string());
  const std::size_t n = f.nvars();
  std::vector<MPoly> elem;
  for (unsigned i = 0; i <= n; ++i) elem.push_back(elementary(i, n, f.ring()));

  std::vector<EExpansion::Poly::Term> out;
  MPoly rem = f;
  while (!rem.is_zero()) {
    const auto& lead = rem.terms().front();
    auto a = lead.mono.exponents(n);
    a.push_back(0);
    Monomial mu;
    MPoly product = elem[0];
    for (std::size_t i = 0; i < n; ++i) {
      unsigned mult = a[i] - a[i + 1];  // leading exponents of a symmetric polynomial are non-increasing
      if (mult == 0) continue;
      mu.set(i, mult);
      product *= elem[i + 1].pow(mult);
    }
    Coeff c = lead.coeff;
    out.push_back({mu, c});
    rem -= product.scale(c);
  }
  return EExpansion(n, EExpansion::Poly::from_terms(f.ring(), std::move(out)));
}

MPoly expand(const EExpansion& g) {
  const std::size_t n = g.nvars();
  std::vector<MPoly> elem;
  for (unsigned i = 1; i <= n; ++i) elem.push_back(elementary(i, n, g.ring()));
  return substitute<PartitionOrder, MPoly>(
      g.poly(), [&](std::uint32_t sym) -> const MPoly& { return elem[sym]; },
      [&](const Coeff& c) { return MPoly::constant(n, c); });
}

std::vector<EExpansion> p_to_e_table(unsigned m, std::size_t nvars, const RingSpec& ring) {
  std::vector<EExpansion> p;
  p.reserve(m);
  for (unsigned j = 1; j <= m; ++j) {
    EExpansion acc = EExpansion::generator(j, nvars, ring).scale(signed_int(ring, (j - 1) % 2 == 1, j));
    for (unsigned i = 1; i < j; ++i) {
      EExpansion t = EExpansion::generator(j - i, nvars, ring) * p[i - 1];
      if ((j - 1 - i) % 2 == 0) acc += t;
      else acc -= t;
    }
    p.push_back(std::move(acc));
  }
  return p;
}

EExpansion p_to_e_recursive(unsigned m, std::size_t nvars, const RingSpec& ring) {
  if (m == 0) return EExpansion::constant(nvars, Coeff(ring, static_cast<long long>(nvars)));
  return p_to_e_table(m, nvars, ring).back();
}

EExpansion p_to_e_closed(unsigned m, std::size_t nvars, const RingSpec& ring) {
  if (m == 0) return EExpansion::constant(nvars, Coeff(ring, static_cast<long long>(nvars)));
  std::vector<EExpansion::Poly::Term> terms;
  for (const Partition& lambda : partitions_of(m, static_cast<unsigned>(std::min<std::size_t>(nvars, m)))) {
    const auto& parts = lambda.parts();
    mpz_class num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), parts.size() - 1);
    num *= m;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), j - i);
      den *= f;
      i = j;
    }
    mpz_class c = num / den;
    if ((m + parts.size()) % 2 == 1) c = -c;
    terms.push_back({lambda.to_monomial(), Coeff(ring, c)});
  }
  return EExpansion(nvars, EExpansion::Poly::from_terms(ring, std::move(terms)));
}

EExpansion h_to_e(unsigned k, std::size_t nvars, const RingSpec& ring) {
  std::vector<EExpansion> h{EExpansion::constant(nvars, Coeff(ring, 1))};
  for (unsigned j = 1; j <= k; ++j) {
    EExpansion acc(nvars, ring);
    for (unsigned i = 1; i <= j; ++i) {
      EExpansion t = EExpansion::generator(i, nvars, ring) * h[j - i];
      if (i % 2 == 1) acc += t;
      else acc -= t;
    }
    h.push_back(std::move(acc));
  }
  return h[k];
}

EExpansion newton_e_from_p_invertible(unsigned k, std::size_t nvars, const RingSpec& ring,
                                      const std::vector<EExpansion>& lower_e) {
  if (k == 0) return EExpansion::constant(nvars, Coeff(ring, 1));
  if (!is_invertible_int(k, ring))
    throw Error(ErrorKind::NonInvertible, std::to_string(k) + " is not invertible in " + ring.to_string());
  auto p = p_to_e_table(k, nvars, ring);
  auto lower = [&](unsigned i) {
    return lower_e.empty() ? EExpansion::generator(i, nvars, ring) : lower_e.at(i);
  };
  EExpansion acc(nvars, ring);
  for (unsigned i = 1; i <= k; ++i) {
    EExpansion t = lower(k - i) * p[i - 1];
    if (i % 2 == 1) acc += t;
    else acc -= t;
  }
  return acc.scale(Coeff(ring, static_cast<long long>(k)).inverse());
}

Coeff newton_e_value(unsigned k, const std::vector<Coeff>& lower_e, const std::vector<Coeff>& p) {
  const RingSpec& ring = p.at(0).ring();
  if (k == 0) return Coeff(ring, 1);
  if (!is_invertible_int(k, ring))
    throw Error(ErrorKind::NonInvertible, std::to_string(k) + " is not invertible in " + ring.to_string());
  Coeff acc(ring);
  for (unsigned i = 1; i <= k; ++i) {
    Coeff t = lower_e.at(k - i) * p.at(i - 1);
    if (i % 2 == 1) acc += t;
    else acc -= t;
  }
  return acc * Coeff(ring, static_cast<long long>(k)).inverse();
}

EExpansion newton_determinant_form(unsigned k, std::size_t nvars, const RingSpec& ring) {
  if (k == 0) return EExpansion::constant(nvars, Coeff(ring, 1));
  for (unsigned i = 2; i <= k; ++i)
    if (!is_invertible_int(i, ring))
      throw Error(ErrorKind::NonInvertible, std::to_string(k) + "! is not invertible in " + ring.to_string());
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  EExpansion det = determinant_cofactor(newton_matrix(k, p_to_e_table(k, nvars, ring)));
  return det.scale(Coeff(ring, fact).inverse());
}

EExpansion parse_symmetric(const std::string& text, std::size_t nvars, const RingSpec& ring) {
  EExpansion out(nvars, ring);
  for (const auto& term : parse_products(text, ring, "eph")) {
    EExpansion prod = EExpansion::constant(nvars, term.coeff);
    for (const auto& f : term.factors) {
      EExpansion base(nvars, ring);
      if (f.symbol == 'e') base = EExpansion::generator(f.index, nvars, ring);
      else if (f.symbol == 'p') base = p_to_e_recursive(f.index, nvars, ring);
      else base = f.index == 0 ? EExpansion::constant(nvars, Coeff(ring, 1)) : h_to_e(f.index, nvars, ring);
      prod *= base.pow(f.exponent);
    }
    out += prod;
  }
  return out;
}

}  // namespace symfrac
