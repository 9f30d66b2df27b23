#include <doctest.h>

#include <random>
#include <sstream>

#include "c2ka/error.hpp"
#include "c2ka/gcl.hpp"
#include "support.hpp"

using namespace c2ka;
using namespace c2ka::gcl;

namespace {

VarSet vars(std::initializer_list<const char*> names) {
  VarSet out;
  for (const char* n : names) out.insert(parse_variable(n));
  return out;
}

const std::set<std::string> kStimuli{"crane1", "crane2", "compl1", "compl2", "oper1", "oper2"};

const char* kAllo =
    "receive y; if (y >= crane1) -> berth[1] := POSITION(numCranes[1]); alloCranes[1] := ALLOCATE(berth[1]) "
    "[] (y >= crane2) -> berth[2] := POSITION(numCranes[2]); alloCranes[2] := ALLOCATE(berth[2]) fi";
const char* kFree =
    "receive y; if (y >= compl1) -> berth[1] := null; alloCranes[1] := null "
    "[] (y >= compl2) -> berth[2] := null; alloCranes[2] := null fi";

}  // namespace

TEST_CASE("parse a single assignment") {
  auto p = parse_program("dockPos[1] := berthPos[1]");
  REQUIRE(p.body.size() == 1);
  const auto& s = p.body[0];
  CHECK(s.kind == Statement::Kind::Assign);
  CHECK(s.target == Variable{"dockPos", 1});
  CHECK(s.value.kind == Expression::Kind::Var);
  CHECK(s.value.text == "berthPos");
  CHECK(s.value.index == 1);
}

TEST_CASE("parse receive and alternative") {
  auto p = parse_program(kAllo, kStimuli);
  REQUIRE(p.body.size() == 2);
  CHECK(p.body[0].kind == Statement::Kind::Receive);
  CHECK(p.body[0].binder == "y");
  REQUIRE(p.body[1].kind == Statement::Kind::IfFi);
  REQUIRE(p.body[1].branches.size() == 2);
  const auto& guard = p.body[1].branches[0].guard;
  CHECK(guard.kind == Expression::Kind::Binary);
  CHECK(guard.text == ">=");
  CHECK(guard.args[1].kind == Expression::Kind::Stimulus);
  CHECK(p.body[1].branches[0].body.size() == 2);
}

TEST_CASE("empty program") {
  CHECK(parse_program("").body.empty());
  CHECK(def_vars(parse_program("")).empty());
}

TEST_CASE("def_vars") {
  CHECK(def_vars(parse_program("dockPos[1] := null; serviceT[1] := 0")) == vars({"dockPos[1]", "serviceT[1]"}));
  CHECK(def_vars(parse_program(kFree, kStimuli)) == vars({"berth[1]", "alloCranes[1]", "berth[2]", "alloCranes[2]"}));
  CHECK(def_vars(parse_program("receive y")).empty());
  CHECK(def_vars(parse_program("receive y; y := 3")).empty());
  CHECK(def_vars(parse_program("MAX := 3")).empty());
}

TEST_CASE("ref_vars") {
  CHECK(ref_vars(parse_program("serviceT[1] := departT[1] - arriveT[1] - waitT[1]")) ==
        vars({"departT[1]", "arriveT[1]", "waitT[1]"}));
  CHECK(ref_vars(parse_program(kAllo, kStimuli)) == vars({"numCranes[1]", "berth[1]", "numCranes[2]", "berth[2]"}));
  CHECK(ref_vars(parse_program("x := SHIP_LENGTH")).empty());
  CHECK(ref_vars(parse_program("if (i = 1) -> x := 1 [] (i = 2) -> skip fi")) == vars({"i"}));
  CHECK(ref_vars(parse_program("z := F(G(a), b[2]) * (c + 1)")) == vars({"a", "b[2]", "c"}));
}

TEST_CASE("stimulus names are literals only inside guards") {
  auto p = parse_program("if (y >= crane1) -> crane1 := crane2 fi", kStimuli);
  CHECK(ref_vars(p) == vars({"y", "crane2"}));
  CHECK(def_vars(p) == vars({"crane1"}));
}

TEST_CASE("constant rule") {
  CHECK(is_constant_name("SHIP_LENGTH"));
  CHECK(is_constant_name("CRANE_EFF"));
  CHECK(is_constant_name("X1"));
  CHECK_FALSE(is_constant_name("numCranes"));
  CHECK_FALSE(is_constant_name("_1"));
  CHECK_FALSE(is_constant_name("i"));
}

TEST_CASE("syntax errors carry a location") {
  CHECK_THROWS_AS(parse_program("x := "), SyntaxError);
  CHECK_THROWS_AS(parse_program("x = 1"), SyntaxError);
  CHECK_THROWS_AS(parse_program("if (x) -> skip"), SyntaxError);
  CHECK_THROWS_AS(parse_program("x[i] := 1"), SyntaxError);
  CHECK_THROWS_AS(parse_program("do (x > 1) -> x := x - 1 od"), UnknownConstruct);
  try {
    parse_program("a := 1;\nb := ;");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("concatenation is a union of def and ref") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 5);
  auto random_program = [&] {
    std::ostringstream out;
    int n = d(rng);
    for (int i = 0; i < n; ++i) {
      out << (i ? "; " : "") << "v" << d(rng) << " := F(v" << d(rng) << ", K" << d(rng) << ") + v" << d(rng);
    }
    return out.str();
  };
  for (int i = 0; i < 300; ++i) {
    auto a = random_program();
    auto b = random_program();
    auto joined = a.empty() ? b : b.empty() ? a : a + "; " + b;
    auto pa = parse_program(a), pb = parse_program(b), pj = parse_program(joined);
    auto d1 = def_vars(pa), r1 = ref_vars(pa);
    d1.merge(def_vars(pb));
    r1.merge(ref_vars(pb));
    CHECK(def_vars(pj) == d1);
    CHECK(ref_vars(pj) == r1);
  }
}

TEST_CASE("render then parse gives the same tree") {
  const char* corpus[] = {
      kAllo,
      kFree,
      "serviceT[2] := departT[2] - arriveT[2] - waitT[2]",
      "a := b - (c - d); e := (f + g) * h / i",
      "a := x = (y = z)",
      "if (i = 1) -> manifest[1] := SHIP_MANIFEST; length[1] := SHIP_LENGTH [] (i = 2) -> skip fi",
      "numCranes[1] := numContainers[1] / (CRANE_EFF * serviceT[1])",
      "m1 := true; i := 1; q := false; r := 2.5",
  };
  for (const char* text : corpus) {
    auto p = parse_program(text, kStimuli);
    CHECK(parse_program(render(p), kStimuli) == p);
  }
}
