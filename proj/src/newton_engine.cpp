#include "symfrac/newton_engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace symfrac {

namespace {

void check_range(unsigned k, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::RangeError, "need at least one variable");
  if (k < 1 || k > n)
    throw Error(ErrorKind::RangeError, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
}

PPoly sign_symbol(unsigned index, bool negative, const RingSpec& ring) {
  PPoly p = p_symbol(index, ring);
  return negative ? -p : p;
}

// build_system without the invertibility gate.
Matrix<PPoly> newton_system(std::size_t n, unsigned k, const RingSpec& ring) {
  const std::size_t d = n - k + 1;
  Matrix<PPoly> m(d, n + 1, PPoly(ring));
  for (std::size_t t = 1; t <= d; ++t)
    for (std::size_t j = 1; j <= n + 1; ++j)
      m(t - 1, j - 1) = sign_symbol(static_cast<unsigned>(t + j - 1), (t + j) % 2 == 1, ring);
  return m;
}

struct CacheKey {
  std::size_t n;
  std::string ring;
  bool hankel_for_all;
  auto operator<=>(const CacheKey&) const = default;
};

std::mutex cache_mutex;
std::map<CacheKey, std::vector<EFormula>> cache;

EFormula next_formula(const std::vector<EFormula>& lower, std::size_t n, const RingSpec& ring,
                      const ExpressOptions& opts) {
  const unsigned k = static_cast<unsigned>(lower.size()) + 1;
  const std::size_t offset = 2 * n + 2;
  const PPoly one = PPoly::constant(Coeff(ring, 1));
  auto value_of = [&](unsigned i) { return i == 0 ? PRat(one) : lower[i - 1].value; };
  auto mixed_of = [&](unsigned i) {
    if (i == 0) return one;
    if (i == 1) return p_symbol(1, ring);
    return PPoly::monomial(Monomial::variable(offset + i - 1), Coeff(ring, 1));
  };

  if (k == 1) {
    PRat p1(p_symbol(1, ring));
    return EFormula{1, n, ring, p1, Route::Newton, std::nullopt, p1, offset};
  }

  if (is_invertible_int(k, ring) && !opts.hankel_for_all) {
    PRat value(PPoly{ring});
    PPoly mixed(ring);
    for (unsigned i = 1; i <= k; ++i) {
      PPoly term = p_symbol(i, ring);
      if (i % 2 == 0) term = -term;
      value += value_of(k - i) * PRat(term);
      mixed += mixed_of(k - i) * term;
    }
    Coeff kinv = Coeff(ring, static_cast<long long>(k)).inverse();
    return EFormula{k, n, ring, value.scale(kinv), Route::Newton, std::nullopt, PRat(mixed.scale(kinv)), offset};
  }

  HankelRelation rel = hankel_relation(n, k, ring);
  PRat acc(PPoly{ring});
  PPoly mixed(ring);
  for (unsigned i = 0; i < k; ++i) {
    if (rel.lower[i].is_zero()) continue;
    acc += value_of(i) * PRat(rel.lower[i]);
    mixed += rel.lower[i] * mixed_of(i);
  }
  PRat pivot(rel.pivot);
  return EFormula{k,           n, ring, -acc / pivot, Route::Hankel, HankelSpec{static_cast<unsigned>(n - k + 1), n, 1},
                  PRat(-mixed, rel.pivot), offset};
}

std::vector<EFormula> formulas_up_to(unsigned k, std::size_t n, const RingSpec& ring, const ExpressOptions& opts) {
  CacheKey key{n, ring.to_string(), opts.hankel_for_all};
  std::vector<EFormula> chain;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) chain = it->second;
  }
  if (chain.size() >= k) {
    chain.resize(k, chain.front());
    return chain;
  }
  while (chain.size() < k) chain.push_back(next_formula(chain, n, ring, opts));
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[key];
    if (slot.size() < chain.size()) slot = chain;
  }
  return chain;
}

}  // namespace

std::string HankelSpec::to_string() const {
  std::string s = "P_{" + std::to_string(d) + "," + std::to_string(n) + "}";
  if (start != 1) s += "[" + std::to_string(start) + "]";
  return s;
}

Matrix<PPoly> hankel_matrix(const HankelSpec& h, const RingSpec& ring) {
  if (h.d < 1 || h.start < 1) throw Error(ErrorKind::RangeError, "Hankel matrix needs d >= 1 and start >= 1");
  Matrix<PPoly> m(h.d, h.d, PPoly(ring));
  for (unsigned i = 0; i < h.d; ++i)
    for (unsigned j = 0; j < h.d; ++j) m(i, j) = p_symbol(h.start + i + j, ring);
  return m;
}

Matrix<PPoly> build_system(std::size_t n, unsigned k, const RingSpec& ring) {
  if (k < 1 || k > n)
    throw Error(ErrorKind::InvalidRange, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (is_invertible_int(k, ring))
    throw Error(ErrorKind::InvalidRange, std::to_string(k) + " is invertible in " + ring.to_string() +
                                             "; use Newton's identity");
  return newton_system(n, k, ring);
}

HankelRelation hankel_relation(std::size_t n, unsigned k, const RingSpec& ring) {
  check_range(k, n);
  const std::size_t d = n - k + 1;
  FractionFreeForm ff = fraction_free_reduce(newton_system(n, k, ring));
  HankelRelation rel{k, n, ff.pivot, {}};
  for (unsigned i = 0; i < k; ++i) rel.lower.push_back(ff.reduced(d - 1, n - i));
  return rel;
}

const char* to_string(Route route) { return route == Route::Newton ? "newton" : "hankel"; }

std::string EFormula::render_mixed(PRenderOptions opts) const {
  opts.mixed_offset = mixed_offset;
  return mixed.render(opts);
}

EFormula express_e(unsigned k, std::size_t n, const RingSpec& ring, const ExpressOptions& opts) {
  check_range(k, n);
  return formulas_up_to(k, n, ring, opts).back();
}

std::vector<EFormula> express_all(std::size_t n, const RingSpec& ring, const ExpressOptions& opts) {
  check_range(1, n);
  return formulas_up_to(static_cast<unsigned>(n), n, ring, opts);
}

bool denominator_test(unsigned k, std::size_t n, const std::vector<Coeff>& values) {
  check_range(k, n);
  if (values.size() != n) throw Error(ErrorKind::RangeError, "expected " + std::to_string(n) + " values");
  const RingSpec& ring = values.front().ring();
  const std::size_t d = n - k + 1;
  std::vector<Coeff> p;
  for (std::size_t i = 1; i < 2 * d; ++i) {
    Coeff s(ring);
    for (const auto& v : values) s += v.pow(i);
    p.push_back(s);
  }
  Matrix<Coeff> m(d, d, Coeff(ring));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = p[i + j];
  return !determinant(m).is_zero();
}

Verification check_fraction(const PRat& value, unsigned k, std::size_t n, VerifyBasis basis) {
  try {
    if (basis == VerifyBasis::EBasis) {
      auto [num, den] = subst_e(value, n);
      if (num == EExpansion::generator(k, n, value.ring()) * den) return {true, ""};
      return {false, "numerator is not e_" + std::to_string(k) + " times the denominator in the e-basis"};
    }
    auto [num, den] = subst_x(value, n);
    MPoly::Poly q(value.ring());
    if (!num.poly().try_divide(den.poly(), q)) return {false, "denominator does not divide the numerator"};
    if (MPoly(n, q) == elementary(k, n, value.ring())) return {true, ""};
    return {false, "quotient differs from e_" + std::to_string(k)};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

Verification check_formula(const EFormula& f, VerifyBasis basis) { return check_fraction(f.value, f.k, f.n, basis); }

PRat newton_determinant_formula(unsigned k, const RingSpec& ring) {
  if (k == 0) return PRat(PPoly::constant(Coeff(ring, 1)));
  for (unsigned i = 2; i <= k; ++i)
    if (!is_invertible_int(i, ring))
      throw Error(ErrorKind::NonInvertible, std::to_string(k) + "! is not invertible in " + ring.to_string());
  std::vector<PPoly> p;
  for (unsigned i = 1; i <= k; ++i) p.push_back(p_symbol(i, ring));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  PPoly det = determinant_cofactor(newton_matrix(k, p));
  return PRat(det.scale(Coeff(ring, fact).inverse()));
}

unsigned max_symbol(const PRat& a) { return static_cast<unsigned>(std::max(a.num().slots(), a.den().slots())); }

std::vector<SweepRow> verify_sweep(const std::vector<RingSpec>& rings, std::size_t max_n, unsigned threads) {
  struct Task {
    RingSpec ring;
    std::size_t n;
    unsigned k;
  };
  std::vector<Task> tasks;
  for (const auto& ring : rings) {
    std::size_t min_n = ring.kind() == RingSpec::Kind::Rationals ? 1 : ring.r0();
    for (std::size_t n = min_n; n <= max_n; ++n)
      for (unsigned k = 1; k <= n; ++k) tasks.push_back({ring, n, k});
  }
  std::vector<std::optional<SweepRow>> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      auto start = std::chrono::steady_clock::now();
      EFormula f = express_e(t.k, t.n, t.ring);
      Verification v = check_formula(f);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows[i] = SweepRow{t.k, t.n, t.ring, v.ok, f.denominator_id(), f.route, secs, v.diagnostic};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  // Largest n first keeps long chains from landing at the end of the queue.
  std::stable_sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) { return a.n > b.n; });
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::vector<SweepRow> out;
  for (auto& r : rows) out.push_back(*r);
  std::sort(out.begin(), out.end(), [&](const SweepRow& a, const SweepRow& b) {
    auto ring_pos = [&](const RingSpec& r) { return std::find(rings.begin(), rings.end(), r) - rings.begin(); };
    return std::tuple(ring_pos(a.ring), a.n, a.k) < std::tuple(ring_pos(b.ring), b.n, b.k);
  });
  return out;
}

}  // namespace symfrac
