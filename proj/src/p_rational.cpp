#include "symfrac/p_rational.hpp"

#include <set>

#include "symfrac/expr.hpp"
#include "symfrac/format.hpp"

namespace symfrac {

namespace {

std::string symbol_name(std::size_t slot, const PRenderOptions& opts) {
  bool mixed = opts.mixed_offset != 0 && slot >= opts.mixed_offset;
  std::size_t index = mixed ? slot - opts.mixed_offset + 1 : slot + 1;
  std::string letter(1, mixed ? 'E' : opts.letter);
  std::string idx = std::to_string(index);
  if (opts.latex) return letter + "_" + (idx.size() > 1 ? "{" + idx + "}" : idx);
  return letter + idx;
}

std::string monomial_text(const Monomial& m, const PRenderOptions& opts) {
  std::string p_part, rest;
  const char* sep = opts.latex ? " " : "*";
  bool compact = opts.shorthand;
  std::size_t p_limit = opts.mixed_offset ? std::min(opts.mixed_offset, m.slots()) : m.slots();
  if (compact && p_limit > 9) compact = false;
  if (compact) {
    std::string digits;
    for (std::size_t i = 0; i < p_limit; ++i) digits.append(m[i], static_cast<char>('1' + i));
    if (!digits.empty()) p_part = std::string(1, opts.letter) + (digits.size() > 1 || opts.latex ? "_{" + digits + "}" : digits);
  }
  auto append = [&](std::string& s, std::size_t slot) {
    if (m[slot] == 0) return;
    if (!s.empty()) s += sep;
    s += symbol_name(slot, opts);
    if (m[slot] > 1) s += opts.latex ? "^{" + std::to_string(m[slot]) + "}" : "^" + std::to_string(m[slot]);
  };
  if (!compact)
    for (std::size_t i = 0; i < p_limit; ++i) append(p_part, i);
  for (std::size_t i = p_limit; i < m.slots(); ++i) append(rest, i);
  if (p_part.empty()) return rest;
  if (rest.empty()) return p_part;
  return p_part + sep + rest;
}

PPoly divide_content(const PPoly& p, const mpz_class& content) {
  return p.exact_divide(PPoly::constant(Coeff(p.ring(), content)));
}

mpz_class content_of(const PPoly& p, mpz_class acc) {
  for (const auto& t : p.terms()) {
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), t.coeff.integer().get_mpz_t());
    if (acc == 1) break;
  }
  return acc;
}

// Dense univariate polynomial, index = exponent.
using Dense = std::vector<Coeff>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense dense_remainder(Dense a, const Dense& b) {
  Coeff lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Coeff factor = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Univariate gcd of two polynomials in the single symbol `slot`, computed over
// the fraction field and returned primitive (over Z) or monic (over a field).
PPoly univariate_gcd(const PPoly& a, const PPoly& b, std::size_t slot) {
  const RingSpec ring = a.ring();
  const bool integers = ring.kind() == RingSpec::Kind::Integers;
  const RingSpec field = integers ? RingSpec::rationals() : ring;
  auto to_dense = [&](const PPoly& p) {
    Dense d;
    for (const auto& t : p.terms()) {
      unsigned e = t.mono[slot];
      if (d.size() <= e) d.resize(e + 1, Coeff(field));
      d[e] = integers ? Coeff(field, mpq_class(t.coeff.integer())) : t.coeff;
    }
    return d;
  };
  Dense g = dense_gcd(to_dense(a), to_dense(b));
  Coeff lead_inv = g.back().inverse();
  for (auto& c : g) c *= lead_inv;
  std::vector<PPoly::Term> terms;
  if (integers) {
    mpz_class lcm = 1;
    for (const auto& c : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.to_rational().get_den_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> ints;
    for (const auto& c : g) {
      mpq_class v = c.to_rational() * lcm;
      ints.push_back(v.get_num());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
    }
    for (std::size_t e = 0; e < ints.size(); ++e)
      if (ints[e] != 0) terms.push_back({Monomial::variable(slot, static_cast<unsigned>(e)), Coeff(ring, mpz_class(ints[e] / content))});
  } else {
    for (std::size_t e = 0; e < g.size(); ++e)
      if (!g[e].is_zero()) terms.push_back({Monomial::variable(slot, static_cast<unsigned>(e)), g[e]});
  }
  return PPoly::from_terms(ring, std::move(terms));
}

std::set<std::size_t> symbols_used(const PPoly& p) {
  std::set<std::size_t> out;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.mono.slots(); ++i)
      if (t.mono[i] > 0) out.insert(i);
  return out;
}

}  // namespace

PPoly p_symbol(unsigned i, const RingSpec& ring) {
  if (i == 0) throw Error(ErrorKind::RangeError, "power-sum symbols start at P1");
  return PPoly::monomial(Monomial::variable(i - 1), Coeff(ring, 1));
}

PPoly p_monomial(const Partition& lambda, const Coeff& c) { return PPoly::monomial(lambda.to_monomial(), c); }

std::string render(const PPoly& p, const PRenderOptions& opts) {
  return format_terms(display_order(p), [&](const Monomial& m) { return monomial_text(m, opts); }, opts.latex ? " " : "*");
}

PPoly parse_ppoly(const std::string& text, const RingSpec& ring) {
  std::vector<PPoly::Term> terms;
  for (const auto& term : parse_products(text, ring, "p")) {
    Monomial m;
    for (const auto& f : term.factors) {
      if (f.index == 0) throw Error(ErrorKind::ParseError, "p0 is not a formal symbol in '" + text + "'");
      m = m * Monomial::variable(f.index - 1, f.exponent);
    }
    terms.push_back({m, term.coeff});
  }
  return PPoly::from_terms(ring, std::move(terms));
}

PPoly substitute_symbols(const PPoly& p, const std::function<PPoly(unsigned)>& image) {
  return substitute<PartitionOrder, PPoly>(
      p, [&](std::uint32_t slot) { return image(slot + 1); }, [](const Coeff& c) { return PPoly::constant(c); });
}

PPoly frobenius_reduce(const PPoly& p) {
  const std::uint64_t r = p.ring().characteristic();
  if (r == 0) return p;
  std::function<PPoly(unsigned)> image = [&](unsigned i) -> PPoly {
    if (i % r != 0) return p_symbol(i, p.ring());
    return image(static_cast<unsigned>(i / r)).pow(static_cast<unsigned>(r));
  };
  return substitute_symbols(p, image);
}

PRat::PRat(PPoly num) : num_(std::move(num)), den_(num_.one_like()) {}

PRat::PRat(PPoly num, PPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void PRat::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZeroFraction, "fraction with zero denominator");
  if (!(num_.ring() == den_.ring()))
    throw Error(ErrorKind::MixedRings, num_.ring().to_string() + " vs " + den_.ring().to_string());
  if (num_.is_zero()) {
    den_ = num_.one_like();
    return;
  }
  Monomial g = gcd(num_.monomial_gcd(), den_.monomial_gcd());
  if (!g.is_one()) {
    PPoly mono = PPoly::monomial(g, Coeff(ring(), 1));
    num_ = num_.exact_divide(mono);
    den_ = den_.exact_divide(mono);
  }
  if (!den_.is_constant()) {
    PPoly q(ring());
    if (num_.try_divide(den_, q)) {
      num_ = std::move(q);
      den_ = num_.one_like();
    }
  }
  if (ring().kind() == RingSpec::Kind::Integers) {
    mpz_class content = content_of(den_, content_of(num_, 0));
    if (content != 1) {
      num_ = divide_content(num_, content);
      den_ = divide_content(den_, content);
    }
    if (den_.leading().coeff.display_sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  } else if (!den_.leading().coeff.is_one()) {
    Coeff inv = den_.leading().coeff.inverse();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

PRat PRat::operator-() const { return PRat(-num_, den_, Raw{}); }

PRat operator+(const PRat& a, const PRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return PRat(a.num_ + b.num_, a.den_);
  PPoly q(a.ring());
  if (b.den_.try_divide(a.den_, q)) return PRat(a.num_ * q + b.num_, b.den_);
  if (a.den_.try_divide(b.den_, q)) return PRat(a.num_ + b.num_ * q, a.den_);
  return PRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PRat operator*(const PRat& a, const PRat& b) {
  if (a.is_zero() || b.is_zero()) return a.zero_like();
  PPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  PPoly q(a.ring());
  if (!bd.is_constant() && an.try_divide(bd, q)) {
    an = std::move(q);
    bd = bd.one_like();
  }
  if (!ad.is_constant() && bn.try_divide(ad, q)) {
    bn = std::move(q);
    ad = ad.one_like();
  }
  return PRat(an * bn, ad * bd);
}

PRat operator/(const PRat& a, const PRat& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroFraction, "division by a zero fraction");
  return a * PRat(b.den_, b.num_);
}

std::string PRat::render(const PRenderOptions& opts) const {
  std::string n = symfrac::render(num_, opts);
  if (den_.is_constant() && den_.leading().coeff.is_one()) return n;
  std::string d = symfrac::render(den_, opts);
  if (opts.latex) return "\\frac{" + n + "}{" + d + "}";
  auto wrap = [](const std::string& s, const PPoly& p) { return p.size() > 1 ? "(" + s + ")" : s; };
  return wrap(n, num_) + "/" + wrap(d, den_);
}

PRat cancel_common(const PRat& a) {
  if (a.is_zero() || a.den().is_constant()) return a;
  auto sn = symbols_used(a.num()), sd = symbols_used(a.den());
  sn.insert(sd.begin(), sd.end());
  if (sn.size() != 1) return a;
  PPoly g = univariate_gcd(a.num(), a.den(), *sn.begin());
  if (g.is_constant()) return a;
  return PRat(a.num().exact_divide(g), a.den().exact_divide(g));
}

MPoly subst_x(const PPoly& p, std::size_t nvars) {
  std::vector<MPoly> sums;
  for (std::size_t i = 1; i <= p.slots(); ++i) sums.push_back(power_sum(static_cast<unsigned>(i), nvars, p.ring()));
  return substitute<PartitionOrder, MPoly>(
      p, [&](std::uint32_t slot) -> const MPoly& { return sums[slot]; },
      [&](const Coeff& c) { return MPoly::constant(nvars, c); });
}

std::pair<MPoly, MPoly> subst_x(const PRat& a, std::size_t nvars) {
  MPoly den = subst_x(a.den(), nvars);
  if (den.is_zero())
    throw Error(ErrorKind::DenominatorVanishes, "denominator " + render(a.den()) + " vanishes in " +
                                                    std::to_string(nvars) + " variables");
  return {subst_x(a.num(), nvars), den};
}

EExpansion subst_e(const PPoly& p, std::size_t nvars) {
  auto table = p_to_e_table(static_cast<unsigned>(p.slots()), nvars, p.ring());
  EExpansion acc = substitute<PartitionOrder, EExpansion>(
      p, [&](std::uint32_t slot) -> const EExpansion& { return table[slot]; },
      [&](const Coeff& c) { return EExpansion::constant(nvars, c); });
  return acc;
}

std::pair<EExpansion, EExpansion> subst_e(const PRat& a, std::size_t nvars) {
  EExpansion den = subst_e(a.den(), nvars);
  if (den.is_zero())
    throw Error(ErrorKind::DenominatorVanishes, "denominator " + render(a.den()) + " vanishes in " +
                                                    std::to_string(nvars) + " variables");
  return {subst_e(a.num(), nvars), den};
}

FractionFreeForm fraction_free_reduce(Matrix<PPoly> m) {
  const std::size_t d = m.rows();
  if (m.cols() < d) throw Error(ErrorKind::MixedContext, "system has fewer columns than rows");
  if (d == 0) throw Error(ErrorKind::MixedContext, "empty system");
  PPoly prev = m(0, 0).one_like();
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t p = k;
    while (p < d && m(p, k).is_zero()) ++p;
    if (p == d) throw Error(ErrorKind::SingularBlock, "no non-zero pivot in column " + std::to_string(k + 1));
    m.swap_rows(k, p);
    const PPoly pivot = m(k, k);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == k) continue;
      const PPoly factor = m(i, k);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == k) continue;
        PPoly t = pivot * m(i, j);
        if (!factor.is_zero() && !m(k, j).is_zero()) t -= factor * m(k, j);
        m(i, j) = t.exact_divide(prev);
      }
      m(i, k) = prev.zero_like();
    }
    prev = pivot;
  }
  return {std::move(m), std::move(prev)};
}

Matrix<PRat> solve_reduce(const Matrix<PRat>& m) {
  const std::size_t d = m.rows();
  if (d == 0 || m.cols() < d) throw Error(ErrorKind::MixedContext, "solve_reduce needs a d x (d+c) matrix");
  const RingSpec ring = m(0, 0).ring();
  Matrix<PPoly> poly(d, m.cols(), PPoly(ring));
  for (std::size_t i = 0; i < d; ++i) {
    PPoly mult = PPoly::constant(Coeff(ring, 1));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      PPoly q(ring);
      if (!mult.try_divide(m(i, j).den(), q)) mult *= m(i, j).den();
    }
    for (std::size_t j = 0; j < m.cols(); ++j) poly(i, j) = m(i, j).num() * mult.exact_divide(m(i, j).den());
  }
  FractionFreeForm ff = fraction_free_reduce(std::move(poly));
  Matrix<PRat> out(d, m.cols(), PRat(PPoly(ring)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = j < d ? PRat(PPoly::constant(Coeff(ring, i == j ? 1 : 0)))
                        : PRat(ff.reduced(i, j), ff.pivot);
  return out;
}

}  // namespace symfrac
