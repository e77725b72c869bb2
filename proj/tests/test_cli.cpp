#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "symfrac/cli.hpp"
#include "symfrac/json_io.hpp"

using namespace symfrac;

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("express") {
  auto r = call({"express", "--ring", "F2", "--n", "2", "--k", "2", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\frac{p_1 p_2 + p_3}{p_1}") != std::string::npos);
  CHECK(r.out.find("verified") != std::string::npos);

  auto j = call({"express", "--ring", "Z", "--n", "2", "--k", "2", "--format", "json"});
  REQUIRE(j.code == 0);
  auto f = eformula_from_json(json::parse(j.out));
  CHECK(f.value == express_e(2, 2, RingSpec::integers()).value);
  CHECK(json::parse(j.out)["verified"] == true);

  auto q = call({"express", "--ring", "Q", "--n", "3", "--k", "3"});
  CHECK(q.out.find("1/6*p1^3 - 1/2*p1*p2 + 1/3*p3") != std::string::npos);
  CHECK(q.out.find("denominator unit") != std::string::npos);

  auto all = call({"express", "--ring", "F3", "--n", "3", "--format", "json"});
  CHECK(json::parse(all.out).size() == 3);

  auto shorthand = call({"express", "--ring", "Z", "--n", "4", "--k", "2", "--shorthand"});
  CHECK(shorthand.out.find("p_{1334}") != std::string::npos);
  auto mixed = call({"express", "--ring", "F3", "--n", "3", "--k", "3", "--mixed"});
  CHECK(mixed.out.find("(p2*E2 - p1*p3 + p4)/p1") != std::string::npos);
}

TEST_CASE("charpoly") {
  auto pinned = call({"charpoly", "--ring", "F3", "--n", "3", "--traces", "0,-1,0,-1", "--pole-policy", "cancellation"});
  CHECK(pinned.code == 0);
  CHECK(pinned.out.rfind("X^3 - X\n", 0) == 0);
  CHECK(pinned.out.find("e3 = 0 (removable-pole)") != std::string::npos);

  auto certified = call({"charpoly", "--ring", "F3", "--n", "3", "--traces", "0,-1,0,-1"});
  CHECK(certified.code == 2);
  CHECK(certified.out.find("indeterminate: e3") != std::string::npos);

  auto j = call({"charpoly", "--ring", "F5", "--n", "2", "--traces", "2,2", "--format", "json"});
  REQUIRE(j.code == 0);
  auto doc = json::parse(j.out);
  CHECK(doc["text"] == "X^2 - 2*X + 1");
  CHECK(doc["provenance"]["e2"] == "newton");
  CHECK(charpoly_from_json(doc).to_string() == "X^2 - 2*X + 1");

  auto m = call({"charpoly", "--ring", "F2", "--matrix", "[[0,1],[1,1]]"});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("X^2 + X + 1\n", 0) == 0);

  auto bad = call({"charpoly", "--ring", "F3", "--n", "3", "--traces", "0,x,0,1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("trace 2 at column 3") != std::string::npos);
  CHECK(call({"charpoly", "--ring", "F3", "--n", "3", "--traces", "0,1"}).code == 1);
  CHECK(call({"charpoly", "--ring", "F3", "--n", "3"}).code == 1);
}

TEST_CASE("traces-of") {
  auto r = call({"traces-of", "--ring", "F3", "--matrix", "[[0,0,0],[1,0,1],[0,1,0]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "traces: 0,-1,0,-1\ndet(XI - T) = X^3 - X\n");
  CHECK(call({"traces-of", "--ring", "F3", "--matrix", "[[0,0],[1]]"}).code == 1);
}

TEST_CASE("membership and witness") {
  auto no = call({"membership", "--ring", "F2", "--n", "2", "--target", "e2", "--verbose"});
  CHECK(no.code == 2);
  CHECK(no.out.find("NOT a member") != std::string::npos);
  CHECK(no.out.find("spanned dimension 1 of 2") != std::string::npos);
  auto yes = call({"membership", "--ring", "F3", "--n", "3", "--target", "e2", "--format", "json"});
  CHECK(yes.code == 0);
  CHECK(json::parse(yes.out)["member"] == true);
  auto gens = call({"membership", "--ring", "F2", "--n", "2", "--target", "p3", "--generators", "1"});
  CHECK(gens.code == 2);
  CHECK(call({"membership", "--ring", "F2", "--n", "2", "--target", "e2", "--generators", "1,,3"}).code == 1);

  auto w = call({"witness", "--ring", "F2", "--k", "5"});
  CHECK(w.code == 0);
  CHECK(w.out.find("coefficient of e2^2*e1 in p5 over F2: 1") != std::string::npos);
  auto w3 = call({"witness", "--ring", "F3", "--k", "7", "--format", "json"});
  CHECK(json::parse(w3.out)["coefficient"] == "1");
  CHECK(call({"witness", "--ring", "F3", "--k", "6"}).code == 1);
}

TEST_CASE("hankel-det and sweep") {
  auto h = call({"hankel-det", "--d", "2", "--n", "2", "--ring", "Z"});
  CHECK(h.code == 0);
  CHECK(h.out.find("x1^3*x2 - 2*x1^2*x2^2 + x1*x2^3") != std::string::npos);
  CHECK(h.out.find("FAILS") == std::string::npos);
  auto z = call({"hankel-det", "--d", "3", "--n", "2", "--format", "json"});
  CHECK(json::parse(z.out)["checks"]["vanishes for d > n"] == true);

  auto s = call({"verify-sweep", "--rings", "Z,F2,F3,F5", "--max-n", "4", "--format", "json"});
  CHECK(s.code == 0);
  auto doc = json::parse(s.out);
  CHECK(doc["verified"] == doc["total"]);
}

TEST_CASE("usage errors and output files") {
  CHECK(call({}).code == 1);
  CHECK(call({"express", "--ring", "F4", "--n", "2"}).code == 1);
  CHECK(call({"express", "--ring", "Z", "--n", "2", "--k", "3"}).code == 1);
  CHECK(call({"express", "--ring", "Z", "--n", "2", "--format", "yaml"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"--help"}).code == 0);

  std::string path = "cli_test_output.txt";
  auto r = call({"witness", "--ring", "F2", "--k", "3", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("in p3 over F2: 1") != std::string::npos);
  std::remove(path.c_str());
}
