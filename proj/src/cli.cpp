#include "symfrac/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "symfrac/json_io.hpp"

namespace symfrac::cli {

namespace {

enum class Format { Text, Latex, Json };

struct Common {
  Format format = Format::Text;
  std::string output;
  bool shorthand = false;
};

struct Emitted {
  std::string text;
  int code = Ok;
};

void add_common(CLI::App* sub, Common& c) {
  std::map<std::string, Format> formats{{"text", Format::Text}, {"latex", Format::Latex}, {"json", Format::Json}};
  sub->add_option("--format", c.format, "text, latex or json")->transform(CLI::CheckedTransformer(formats));
  sub->add_option("-o,--output", c.output, "write the result to this file");
  sub->add_flag("--shorthand", c.shorthand, "write products of power sums as p_{1334}");
}

// "0,-1,2/3" -> coefficients; errors name the item and its column.
std::vector<Coeff> parse_list(const std::string& text, const RingSpec& ring, const char* what) {
  std::vector<Coeff> out;
  std::size_t start = 0;
  for (std::size_t item = 1;; ++item) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t lead = piece.find_first_not_of(' ');
    std::size_t trail = piece.find_last_not_of(' ');
    std::string trimmed = lead == std::string::npos ? "" : piece.substr(lead, trail - lead + 1);
    try {
      if (trimmed.empty()) throw Error(ErrorKind::ParseError, "empty entry");
      out.push_back(Coeff::parse(ring, trimmed));
    } catch (const Error& e) {
      std::string detail = e.what();
      detail = detail.substr(detail.find(": ") + 2);
      throw Error(ErrorKind::ParseError, std::string(what) + " " + std::to_string(item) + " at column " +
                                             std::to_string(start + 1) + " ('" + trimmed + "'): " + detail);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::set<unsigned> parse_indices(const std::string& text) {
  std::set<unsigned> out;
  std::size_t start = 0;
  for (std::size_t item = 1;; ++item) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos || std::stoul(piece) == 0)
      throw Error(ErrorKind::ParseError, "generator " + std::to_string(item) + " at column " + std::to_string(start + 1) +
                                             " ('" + piece + "') is not a positive integer");
    out.insert(static_cast<unsigned>(std::stoul(piece)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("matrix: ") + e.what());
  }
}

std::string join(const std::vector<Coeff>& xs) {
  std::string s;
  for (const auto& x : xs) s += std::string(s.empty() ? "" : ",") + (x.display_sign() < 0 ? "-" : "") + x.display_magnitude();
  return s;
}

PRenderOptions render_options(const Common& c) {
  PRenderOptions o;
  o.latex = c.format == Format::Latex;
  o.shorthand = c.shorthand;
  return o;
}

// express ---------------------------------------------------------------

struct ExpressArgs {
  std::string ring;
  std::size_t n = 0;
  unsigned k = 0;
  bool hankel_all = false;
  bool mixed = false;
};

Emitted express(const ExpressArgs& a, const Common& c) {
  RingSpec ring = RingSpec::parse(a.ring);
  ExpressOptions opts{a.hankel_all};
  std::vector<EFormula> formulas;
  if (a.k == 0) formulas = express_all(a.n, ring, opts);
  else formulas.push_back(express_e(a.k, a.n, ring, opts));
  Emitted e;
  json arr = json::array();
  std::ostringstream os;
  PRenderOptions ro = render_options(c);
  for (const auto& f : formulas) {
    Verification v = check_formula(f);
    if (!v.ok) e.code = Negative;
    switch (c.format) {
      case Format::Json: arr.push_back(to_json(f, v.ok)); break;
      case Format::Latex:
        os << "e_{" << f.k << "}^{(" << f.n << ")} = " << f.render(ro) << "\n";
        if (a.mixed) os << "% stepwise: e_{" << f.k << "} = " << f.render_mixed(ro) << "\n";
        os << "% " << to_string(f.route) << ", denominator " << f.denominator_id() << ", "
           << (v.ok ? "verified" : "NOT verified: " + v.diagnostic) << "\n";
        break;
      case Format::Text:
        os << "e" << f.k << " over " << ring.to_string() << ", n = " << f.n << ": " << f.render(ro) << "\n";
        if (a.mixed) os << "  stepwise: " << f.render_mixed(ro) << "\n";
        os << "  route " << to_string(f.route) << ", denominator " << f.denominator_id() << ", "
           << (v.ok ? "verified" : "NOT verified: " + v.diagnostic) << "\n";
        break;
    }
  }
  e.text = c.format == Format::Json ? (a.k == 0 ? arr : arr[0]).dump(2) + "\n" : os.str();
  return e;
}

// verify-sweep ----------------------------------------------------------

Emitted verify_sweep_cmd(const std::string& rings_text, std::size_t max_n, unsigned threads, const Common& c) {
  std::vector<RingSpec> rings;
  std::stringstream ss(rings_text);
  for (std::string item; std::getline(ss, item, ',');) rings.push_back(RingSpec::parse(item));
  auto rows = verify_sweep(rings, max_n, threads);
  std::size_t ok = 0;
  for (const auto& r : rows) ok += r.verified;
  Emitted e;
  e.code = ok == rows.size() ? Ok : Negative;
  std::ostringstream os;
  if (c.format == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"k", r.k},
                     {"n", r.n},
                     {"ring", r.ring.to_string()},
                     {"verified", r.verified},
                     {"denominator", r.denominator_id},
                     {"route", to_string(r.route)},
                     {"seconds", r.seconds},
                     {"diagnostic", r.diagnostic}});
    os << json{{"rows", arr}, {"verified", ok}, {"total", rows.size()}}.dump(2) << "\n";
  } else if (c.format == Format::Latex) {
    os << "\\begin{tabular}{rrlllr}\n$k$ & $n$ & ring & verified & denominator & seconds \\\\\n\\hline\n";
    for (const auto& r : rows)
      os << r.k << " & " << r.n << " & " << r.ring.to_string() << " & " << (r.verified ? "yes" : "no") << " & $"
         << r.denominator_id << "$ & " << std::fixed << std::setprecision(4) << r.seconds << " \\\\\n";
    os << "\\end{tabular}\n";
  } else {
    os << std::left << std::setw(4) << "k" << std::setw(4) << "n" << std::setw(6) << "ring" << std::setw(10)
       << "verified" << std::setw(12) << "denominator" << std::setw(8) << "route" << "seconds\n";
    for (const auto& r : rows)
      os << std::left << std::setw(4) << r.k << std::setw(4) << r.n << std::setw(6) << r.ring.to_string()
         << std::setw(10) << (r.verified ? "yes" : "NO") << std::setw(12) << r.denominator_id << std::setw(8)
         << to_string(r.route) << std::fixed << std::setprecision(4) << r.seconds << "\n";
    os << ok << "/" << rows.size() << " verified\n";
  }
  e.text = os.str();
  return e;
}

// hankel-det ------------------------------------------------------------

Emitted hankel_det(std::size_t d, std::size_t n, const std::string& ring_text, const Common& c) {
  RingSpec ring = RingSpec::parse(ring_text);
  if (d == 0 || n == 0) throw Error(ErrorKind::RangeError, "d and n must be positive");
  MPoly det = determinant(power_sum_hankel(d, n, ring));
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("sum over " + std::to_string(d) + "-subsets", det == hankel_subset_sum(d, n, ring));
  if (d == n) checks.emplace_back("e_n * prod (x_i - x_j)^2", det == elementary(static_cast<unsigned>(n), n, ring) *
                                                                        vandermonde_squared(n, ring));
  if (d > n) checks.emplace_back("vanishes for d > n", det.is_zero());
  if (d <= n) {
    std::vector<unsigned> exps;
    for (std::size_t i = 1; i <= d; ++i) exps.push_back(static_cast<unsigned>(2 * i - 1));
    checks.emplace_back("coefficient 1 at x1*x2^3*...*x_d^(2d-1)", det.coefficient(exps).is_one());
  }
  Emitted e;
  for (const auto& [name, ok] : checks)
    if (!ok) e.code = Negative;
  std::ostringstream os;
  if (c.format == Format::Json) {
    json jc = json::object();
    for (const auto& [name, ok] : checks) jc[name] = ok;
    os << json{{"d", d}, {"n", n}, {"ring", ring.to_string()}, {"det", to_json(det)}, {"checks", jc}}.dump(2) << "\n";
  } else {
    os << "det P_{" << d << "," << n << "} over " << ring.to_string() << " = " << det.to_string() << "\n";
    for (const auto& [name, ok] : checks) os << "  " << name << ": " << (ok ? "holds" : "FAILS") << "\n";
  }
  e.text = os.str();
  return e;
}

// charpoly and traces-of ------------------------------------------------

struct CharpolyArgs {
  std::string ring;
  std::size_t n = 0;
  std::string traces;
  std::string matrix;
  PolePolicy policy = PolePolicy::Certified;
};

Emitted charpoly_cmd(const CharpolyArgs& a, const Common& c) {
  RingSpec ring = RingSpec::parse(a.ring);
  if (a.traces.empty() == a.matrix.empty()) throw Error(ErrorKind::ParseError, "give exactly one of --traces and --matrix");
  std::optional<TraceSequence> t;
  if (!a.matrix.empty()) {
    t = simulate_traces(matrix_from_json(read_json_arg(a.matrix), ring));
  } else {
    if (a.n == 0) throw Error(ErrorKind::ParseError, "--n is required with --traces");
    t = TraceSequence(ring, a.n, parse_list(a.traces, ring, "trace"));
  }
  CharpolyOptions opts{a.policy};
  auto steps = trace_steps(*t, opts);
  Emitted e;
  std::ostringstream os;
  bool complete = steps.size() == t->n && steps.back().value;
  if (!complete) {
    e.code = Negative;
    const EStep& bad = steps.back();
    if (c.format == Format::Json) {
      json js = json::array();
      for (const auto& s : steps)
        js.push_back({{"k", s.k},
                      {"value", s.value ? json(s.value->to_string()) : json(nullptr)},
                      {"provenance", to_string(s.provenance)},
                      {"note", s.note}});
      os << json{{"indeterminate", bad.k}, {"steps", js}}.dump(2) << "\n";
    } else {
      for (const auto& s : steps)
        if (s.value) os << "e" << s.k << " = " << join({*s.value}) << " (" << to_string(s.provenance) << ")\n";
      os << "indeterminate: e" << bad.k << " is not determined by the traces (" << bad.note << ")\n";
    }
    e.text = os.str();
    return e;
  }
  CharPoly ch = charpoly_from_traces(*t, opts);
  if (c.format == Format::Json) {
    os << to_json(ch).dump(2) << "\n";
  } else {
    os << (c.format == Format::Latex ? ch.to_latex() : ch.to_string()) << "\n";
    for (std::size_t k = 1; k <= ch.degree(); ++k)
      os << "  e" << k << " = " << join({ch.e(k)}) << " (" << to_string(ch.provenance[k - 1]) << ")\n";
    for (const auto& w : ch.warnings) os << "  warning: " << w << "\n";
  }
  e.text = os.str();
  return e;
}

Emitted traces_of(const std::string& ring_text, const std::string& matrix, std::size_t count, const Common& c) {
  RingSpec ring = RingSpec::parse(ring_text);
  Matrix<Coeff> m = matrix_from_json(read_json_arg(matrix), ring);
  TraceSequence t = simulate_traces(m, count);
  CharPoly direct = direct_charpoly(m);
  std::ostringstream os;
  if (c.format == Format::Json) {
    json tr = json::array();
    for (const auto& x : t.traces) tr.push_back(x.to_string());
    os << json{{"ring", ring.to_string()}, {"n", t.n}, {"traces", tr}, {"charpoly", to_json(direct)}}.dump(2) << "\n";
  } else {
    os << "traces: " << join(t.traces) << "\n";
    os << "det(XI - T) = " << (c.format == Format::Latex ? direct.to_latex() : direct.to_string()) << "\n";
  }
  return {os.str(), Ok};
}

// membership and witness ------------------------------------------------

struct MembershipArgs {
  std::string ring;
  std::size_t n = 0;
  std::string target;
  std::string generators;
  unsigned degree_bound = 0;
  bool verbose = false;
};

Emitted membership_cmd(const MembershipArgs& a, const Common& c) {
  RingSpec ring = RingSpec::parse(a.ring);
  if (a.n == 0) throw Error(ErrorKind::RangeError, "n must be positive");
  MembershipQuery q{ring, a.n, parse_symmetric(a.target, a.n, ring), std::nullopt, a.degree_bound};
  if (!a.generators.empty()) q.generator_indices = parse_indices(a.generators);
  MembershipAnswer ans = membership(q);
  Emitted e;
  e.code = ans.member ? Ok : Negative;
  std::ostringstream os;
  if (c.format == Format::Json) {
    json j = to_json(ans);
    j["target"] = to_json(q.target);
    os << j.dump(2) << "\n";
  } else {
    PPoly cert(ring);
    for (const auto& [lambda, coeff] : ans.certificate) cert += p_monomial(lambda, coeff);
    if (ans.member) os << "member: " << q.target.to_string() << " = " << render(cert, render_options(c)) << "\n";
    else os << "NOT a member: " << q.target.to_string() << "\n";
    if (a.verbose) {
      os << "  spanned dimension " << ans.spanning_dimension << " of " << ans.slice_dimension << "\n";
      for (unsigned d : ans.failing_degrees) os << "  degree " << d << " component lies outside the span\n";
    }
  }
  e.text = os.str();
  return e;
}

Emitted witness_cmd(const std::string& ring_text, unsigned k, std::size_t n, const Common& c) {
  RingSpec ring = RingSpec::parse(ring_text);
  auto [a, b] = witness_split(k, ring);
  const std::size_t r = static_cast<std::size_t>(ring.characteristic());
  if (n == 0) n = std::max<std::size_t>(k, r);
  Coeff w = witness_coefficient(k, ring, n);
  Coeff claimed(ring, a % 2 == 1 ? 1 : -1);
  std::vector<unsigned> parts(a, static_cast<unsigned>(r));
  parts.push_back(b);
  EExpansion mono = EExpansion::from_terms(n, ring, {{Partition(parts), Coeff(ring, 1)}});
  bool gap = chain_gap_check(k, ring, n);
  std::ostringstream os;
  if (c.format == Format::Json) {
    os << json{{"ring", ring.to_string()}, {"k", k}, {"n", n}, {"a", a}, {"b", b}, {"monomial", mono.to_string()},
               {"coefficient", w.to_string()}, {"sign_rule", claimed.to_string()}, {"matches_sign_rule", w == claimed},
               {"chain_gap", gap}}
              .dump(2)
       << "\n";
  } else {
    os << "coefficient of " << mono.to_string() << " in p" << k << " over " << ring.to_string() << ": "
       << join({w}) << "\n";
    os << "  (-1)^(a+1) with a = " << a << ": " << join({claimed}) << (w == claimed ? " (matches)" : " (differs)") << "\n";
    os << "  p" << k << " outside K[p1..p" << k - 1 << "]: " << (gap ? "yes" : "no") << "\n";
  }
  return {os.str(), Ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary symmetric polynomials from power sums in any characteristic", "symfrac"};
  app.require_subcommand(1);
  Common common;

  ExpressArgs ex;
  auto* express_cmd = app.add_subcommand("express", "e_k as a fraction of power-sum symbols");
  express_cmd->add_option("--ring", ex.ring, "Z, Q or F<prime>")->required();
  express_cmd->add_option("--n", ex.n, "number of variables")->required()->check(CLI::PositiveNumber);
  express_cmd->add_option("--k", ex.k, "index; omit for every k")->check(CLI::PositiveNumber);
  express_cmd->add_flag("--hankel-all", ex.hankel_all, "use the Hankel system for invertible k too");
  express_cmd->add_flag("--mixed", ex.mixed, "also print the step with lower e_i kept as E_i");
  add_common(express_cmd, common);

  std::string rings = "Z,F2,F3,F5";
  std::size_t max_n = 5;
  unsigned threads = 0;
  auto* sweep_cmd = app.add_subcommand("verify-sweep", "verify every formula on a grid");
  sweep_cmd->add_option("--rings", rings, "comma-separated rings");
  sweep_cmd->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  add_common(sweep_cmd, common);

  std::size_t hd = 0, hn = 0;
  std::string hring = "Z";
  auto* hankel_cmd = app.add_subcommand("hankel-det", "det P_{d,n} in x1..xn with identity checks");
  hankel_cmd->add_option("--d", hd, "block size")->required()->check(CLI::PositiveNumber);
  hankel_cmd->add_option("--n", hn, "number of variables")->required()->check(CLI::PositiveNumber);
  hankel_cmd->add_option("--ring", hring, "Z, Q or F<prime>");
  add_common(hankel_cmd, common);

  CharpolyArgs cp;
  std::map<std::string, PolePolicy> policies{{"certified", PolePolicy::Certified},
                                             {"cancellation", PolePolicy::CancellationOnly}};
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial from traces");
  charpoly->add_option("--ring", cp.ring, "Q or F<prime>")->required();
  charpoly->add_option("--n", cp.n, "dimension");
  charpoly->add_option("--traces", cp.traces, "Tr(T), Tr(T^2), ... comma-separated");
  charpoly->add_option("--matrix", cp.matrix, "JSON 2-D array, or @file");
  charpoly->add_option("--pole-policy", cp.policy, "certified or cancellation")
      ->transform(CLI::CheckedTransformer(policies));
  add_common(charpoly, common);

  std::string tring, tmatrix;
  std::size_t tcount = 0;
  auto* traces_cmd = app.add_subcommand("traces-of", "traces and characteristic polynomial of a matrix");
  traces_cmd->add_option("--ring", tring, "Q or F<prime>")->required();
  traces_cmd->add_option("--matrix", tmatrix, "JSON 2-D array, or @file")->required();
  traces_cmd->add_option("--count", tcount, "number of traces (default: the horizon)");
  add_common(traces_cmd, common);

  MembershipArgs mem;
  auto* member_cmd = app.add_subcommand("membership", "is a symmetric polynomial in K[p_i]?");
  member_cmd->add_option("--ring", mem.ring, "Q or F<prime>")->required();
  member_cmd->add_option("--n", mem.n, "number of variables")->required();
  member_cmd->add_option("--target", mem.target, "e.g. \"e1*e2 + p3\"")->required();
  member_cmd->add_option("--generators", mem.generators, "allowed power-sum indices, e.g. 1,3");
  member_cmd->add_option("--degree-bound", mem.degree_bound, "largest degree examined");
  member_cmd->add_flag("--verbose", mem.verbose, "print slice dimensions");
  add_common(member_cmd, common);

  std::string wring;
  unsigned wk = 0;
  std::size_t wn = 0;
  auto* witness = app.add_subcommand("witness", "coefficient of e_r^a e_b in p_k");
  witness->add_option("--ring", wring, "F<prime>")->required();
  witness->add_option("--k", wk, "index not divisible by r")->required()->check(CLI::PositiveNumber);
  witness->add_option("--n", wn, "number of variables (default max(k, r))");
  add_common(witness, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    Emitted result;
    if (*express_cmd) result = express(ex, common);
    else if (*sweep_cmd) result = verify_sweep_cmd(rings, max_n, threads, common);
    else if (*hankel_cmd) result = hankel_det(hd, hn, hring, common);
    else if (*charpoly) result = charpoly_cmd(cp, common);
    else if (*traces_cmd) result = traces_of(tring, tmatrix, tcount, common);
    else if (*member_cmd) result = membership_cmd(mem, common);
    else result = witness_cmd(wring, wk, wn, common);

    if (common.output.empty()) {
      out << result.text;
    } else {
      std::ofstream file(common.output);
      if (!file) {
        err << "error: cannot write " << common.output << "\n";
        return Usage;
      }
      file << result.text;
    }
    return result.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
}

}  // namespace symfrac::cli
