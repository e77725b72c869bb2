#include "symfrac/trace_charpoly.hpp"

#include "symfrac/format.hpp"
#include "symfrac/mpoly.hpp"

namespace symfrac {

namespace {

struct XTerm {
  unsigned mono;
  Coeff coeff;
};

std::string render_x(const CharPoly& ch, const std::string& var, bool latex) {
  std::vector<XTerm> terms;
  for (std::size_t i = ch.coeffs.size(); i-- > 0;)
    if (!ch.coeffs[i].is_zero()) terms.push_back({static_cast<unsigned>(i), ch.coeffs[i]});
  return format_terms(
      terms,
      [&](unsigned e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return var;
        return var + "^" + (latex ? "{" + std::to_string(e) + "}" : std::to_string(e));
      },
      latex ? " " : "*");
}

Coeff eval_ppoly(const PPoly& p, const std::function<Coeff(unsigned)>& value) {
  Coeff acc(p.ring());
  for (const auto& t : p.terms()) {
    Coeff term = t.coeff;
    for (std::size_t s = 0; s < t.mono.slots(); ++s)
      if (t.mono[s] != 0) term *= value(static_cast<unsigned>(s + 1)).pow(t.mono[s]);
    acc += term;
  }
  return acc;
}

// Lower e values and traces as constants for the mixed display of a formula.
struct MixedValues {
  const TraceSequence& t;
  const std::vector<Coeff>& e;
  std::size_t offset;

  bool is_trace(unsigned index) const { return index <= offset; }
  Coeff operator()(unsigned index) const { return is_trace(index) ? t.trace(index) : e.at(index - offset); }
};

// Cancellation rule for a zero Hankel determinant.
std::optional<Coeff> cancellation_candidate(const EFormula& f, const MixedValues& v, std::string& note) {
  const RingSpec& ring = f.ring;
  auto partial = [&](unsigned index) {
    if (v.is_trace(index) && v(index).is_zero()) return p_symbol(index, ring);
    return PPoly::constant(v(index));
  };
  PPoly num = substitute_symbols(f.mixed.num(), partial);
  PPoly den = substitute_symbols(f.mixed.den(), partial);
  if (den.is_zero()) {
    note = "denominator vanishes before cancellation";
    return std::nullopt;
  }
  PRat reduced = cancel_common(PRat(num, den));
  auto zero = [&](unsigned) { return Coeff(ring); };
  Coeff d = eval_ppoly(reduced.den(), zero);
  if (d.is_zero()) {
    note = "pole not removed by cancellation: " + reduced.render();
    return std::nullopt;
  }
  return eval_ppoly(reduced.num(), zero) / d;
}

}  // namespace

TraceSequence::TraceSequence(RingSpec r, std::size_t dim, std::vector<Coeff> values)
    : ring(std::move(r)), n(dim), traces(std::move(values)) {
  if (!ring.is_field()) throw Error(ErrorKind::InvalidRing, "traces must lie in a field, got " + ring.to_string());
  if (n == 0) throw Error(ErrorKind::RangeError, "dimension must be positive");
  for (const auto& c : traces)
    if (!(c.ring() == ring)) throw Error(ErrorKind::RangeError, "trace from " + c.ring().to_string());
}

std::size_t trace_horizon(const RingSpec& ring, std::size_t n) {
  const std::uint64_t r = ring.characteristic();
  if (r == 0 || r > n) return n;
  return 2 * n + 1 - static_cast<std::size_t>(r);
}

std::vector<std::size_t> frobenius_violations(const TraceSequence& t) {
  std::vector<std::size_t> out;
  const std::uint64_t r = t.ring.characteristic();
  if (r == 0) return out;
  for (std::size_t k = 1; k * r <= t.size(); ++k)
    if (t.trace(k * r) != t.trace(k).pow(r)) out.push_back(k);
  return out;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Newton: return "newton";
    case Provenance::Hankel: return "hankel";
    case Provenance::RemovablePole: return "removable-pole";
    case Provenance::Indeterminate: return "indeterminate";
  }
  return "?";
}

Coeff CharPoly::e(std::size_t k) const {
  const std::size_t n = degree();
  if (k > n) throw Error(ErrorKind::RangeError, "e_" + std::to_string(k) + " beyond degree");
  Coeff c = coeffs[n - k];
  return k % 2 == 0 ? c : -c;
}

std::string CharPoly::to_string(const std::string& var) const { return render_x(*this, var, false); }
std::string CharPoly::to_latex(const std::string& var) const { return render_x(*this, var, true); }

CharPoly charpoly_from_e(const RingSpec& ring, const std::vector<Coeff>& e) {
  const std::size_t n = e.size() - 1;
  CharPoly ch{ring, std::vector<Coeff>(n + 1, Coeff(ring)), {}, {}};
  for (std::size_t k = 0; k <= n; ++k) ch.coeffs[n - k] = k % 2 == 0 ? e[k] : -e[k];
  return ch;
}

Coeff determinant_condition(const TraceSequence& t, unsigned k) {
  const std::uint64_t r = t.ring.characteristic();
  if (k < 2 || k > t.n || r == 0 || k % r != 0)
    throw Error(ErrorKind::InvalidRange, "determinant condition needs r | k and 1 < k <= n");
  const std::size_t d = t.n - k + 1;
  if (t.size() < 2 * d - 1) throw Error(ErrorKind::InsufficientTraces, "need " + std::to_string(2 * d - 1) + " traces");
  Matrix<Coeff> m(d, d, Coeff(t.ring));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = t.trace(i + j + 1);
  return determinant(m);
}

std::optional<Coeff> forced_e(const TraceSequence& t, unsigned k) {
  const std::size_t n = t.n, m = t.size();
  if (k < 1 || k > n) throw Error(ErrorKind::RangeError, "k outside 1..n");
  const RingSpec& ring = t.ring;
  // Row N-1: p_N + sum_{i<N} (-1)^i e_i p_{N-i} + [N <= n] (-1)^N N e_N = 0.
  Matrix<Coeff> a(m, n, Coeff(ring));
  std::vector<Coeff> b;
  for (std::size_t N = 1; N <= m; ++N) {
    for (std::size_t i = 1; i < N && i <= n; ++i) {
      Coeff c = t.trace(N - i);
      a(N - 1, i - 1) = i % 2 == 0 ? c : -c;
    }
    if (N <= n) {
      Coeff c(ring, static_cast<long long>(N));
      a(N - 1, N - 1) = N % 2 == 0 ? c : -c;
    }
    b.push_back(-t.trace(N));
  }
  auto sol = solve_linear(a, b);
  if (!sol) throw Error(ErrorKind::Indeterminate, "no monic polynomial of degree " + std::to_string(n) + " has these power sums");
  Echelon ech = row_reduce(a);
  const std::size_t col = k - 1;
  auto it = std::find(ech.pivot_columns.begin(), ech.pivot_columns.end(), col);
  if (it == ech.pivot_columns.end()) return std::nullopt;
  const std::size_t row = static_cast<std::size_t>(it - ech.pivot_columns.begin());
  for (std::size_t j = 0; j < n; ++j) {
    bool pivot = std::find(ech.pivot_columns.begin(), ech.pivot_columns.end(), j) != ech.pivot_columns.end();
    if (!pivot && !ech.reduced(row, j).is_zero()) return std::nullopt;
  }
  return (*sol)[col];
}

std::vector<EStep> trace_steps(const TraceSequence& t, const CharpolyOptions& opts) {
  const std::size_t n = t.n, need = trace_horizon(t.ring, n);
  if (t.size() < need)
    throw Error(ErrorKind::InsufficientTraces, "need " + std::to_string(need) + " traces for n = " + std::to_string(n) +
                                                   " over " + t.ring.to_string() + ", got " + std::to_string(t.size()));
  std::vector<Coeff> e{Coeff(t.ring, 1)};
  std::vector<EStep> steps;
  for (unsigned k = 1; k <= n; ++k) {
    if (is_invertible_int(k, t.ring)) {
      e.push_back(newton_e_value(k, e, t.traces));
      steps.push_back({k, e.back(), Provenance::Newton, ""});
      continue;
    }
    EFormula f = express_e(k, n, t.ring);
    MixedValues v{t, e, f.mixed_offset};
    Coeff den = eval_ppoly(f.mixed.den(), v);
    if (!determinant_condition(t, k).is_zero() && !den.is_zero()) {
      e.push_back(eval_ppoly(f.mixed.num(), v) / den);
      steps.push_back({k, e.back(), Provenance::Hankel, ""});
      continue;
    }
    std::string note;
    std::optional<Coeff> value = cancellation_candidate(f, v, note);
    if (opts.pole_policy == PolePolicy::Certified) {
      std::optional<Coeff> forced = forced_e(t, k);
      if (forced && value && *forced != *value)
        note = "cancellation gave " + value->to_string() + ", traces force " + forced->to_string();
      else if (forced && !value)
        note += "; value forced by the Newton identities";
      else if (!forced && value)
        note = "cancellation gave " + value->to_string() + " but the traces do not determine e_" + std::to_string(k);
      value = forced;
    }
    if (!value) {
      steps.push_back({k, std::nullopt, Provenance::Indeterminate, note});
      break;
    }
    e.push_back(*value);
    steps.push_back({k, *value, Provenance::RemovablePole, note});
  }
  return steps;
}

CharPoly charpoly_from_traces(const TraceSequence& t, const CharpolyOptions& opts) {
  auto steps = trace_steps(t, opts);
  std::vector<Coeff> e{Coeff(t.ring, 1)};
  std::vector<Provenance> prov;
  std::vector<std::string> warnings;
  for (std::size_t k : frobenius_violations(t))
    warnings.push_back("Tr(T^" + std::to_string(k * t.ring.characteristic()) + ") != Tr(T^" + std::to_string(k) +
                       ")^" + std::to_string(t.ring.characteristic()) + ": not the traces of an operator");
  for (const auto& s : steps) {
    if (!s.value) throw Error(ErrorKind::Indeterminate, "e_" + std::to_string(s.k) + ": " + s.note);
    e.push_back(*s.value);
    prov.push_back(s.provenance);
    if (!s.note.empty()) warnings.push_back("e_" + std::to_string(s.k) + ": " + s.note);
  }
  CharPoly ch = charpoly_from_e(t.ring, e);
  ch.provenance = std::move(prov);
  ch.warnings = std::move(warnings);
  return ch;
}

TraceSequence simulate_traces(const Matrix<Coeff>& m, std::size_t count) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(ErrorKind::RangeError, "matrix must be square and non-empty");
  const RingSpec& ring = m(0, 0).ring();
  count = std::max(count, trace_horizon(ring, n));
  Matrix<Coeff> power = m;
  std::vector<Coeff> traces;
  for (std::size_t d = 1; d <= count; ++d) {
    Coeff tr(ring);
    for (std::size_t i = 0; i < n; ++i) tr += power(i, i);
    traces.push_back(tr);
    Matrix<Coeff> next(n, n, Coeff(ring));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (power(i, l).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) next(i, j) += power(i, l) * m(l, j);
      }
    power = std::move(next);
  }
  return TraceSequence(ring, n, std::move(traces));
}

CharPoly direct_charpoly(const Matrix<Coeff>& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(ErrorKind::RangeError, "matrix must be square and non-empty");
  const RingSpec& ring = m(0, 0).ring();
  Matrix<MPoly> xm(n, n, MPoly::constant(1, Coeff(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      xm(i, j) = MPoly::constant(1, -m(i, j));
      if (i == j) xm(i, j) += MPoly::variable(1, 1, ring);
    }
  MPoly det = determinant_cofactor(xm);
  CharPoly ch{ring, {}, {}, {}};
  for (unsigned i = 0; i <= n; ++i) ch.coeffs.push_back(det.coefficient({i}));
  return ch;
}

Matrix<Coeff> companion_matrix(const CharPoly& ch) {
  const std::size_t n = ch.degree();
  Matrix<Coeff> m(n, n, Coeff(ch.ring));
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = Coeff(ch.ring, 1);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -ch.coeffs[i];
  return m;
}

}  // namespace symfrac
