#include <doctest.h>

#include <map>
#include <random>

#include "c2ka/error.hpp"
#include "c2ka/terms.hpp"
#include "support.hpp"

using namespace c2ka;

namespace {

struct Tables : StimulusResponse {
  std::map<std::pair<std::string, std::string>, std::string> next, out;

  std::string next_behaviour(const std::string& b, const std::string& s) const override {
    auto it = next.find({b, s});
    return it == next.end() ? b : it->second;
  }
  std::optional<std::string> next_stimulus(const std::string& b, const std::string& s) const override {
    auto it = out.find({b, s});
    if (it == out.end()) return std::nullopt;
    return it->second;
  }
};

BehaviourTerm T(const char* text) { return parse_behaviour_term(text); }
BehaviourTerm N(const char* text) { return normalize(T(text)); }
StimulusTerm S(const char* text) { return parse_stimulus_term(text); }

const std::vector<std::string> kAtoms{"a", "b", "c", "d"};
const std::vector<std::string> kStimuli{"s", "t", "u"};

BehaviourTerm random_term(std::mt19937& rng, int depth, bool supported_only, bool allow_units) {
  std::uniform_int_distribution<int> d(0, 99);
  int roll = d(rng);
  if (depth == 0 || roll < 30) {
    if (allow_units && roll < 4) return BehaviourTerm::zero();
    if (allow_units && roll < 8) return BehaviourTerm::one();
    return BehaviourTerm::atom(kAtoms[d(rng) % kAtoms.size()]);
  }
  int width = 2 + d(rng) % 2;
  std::vector<BehaviourTerm> kids;
  for (int i = 0; i < width; ++i) kids.push_back(random_term(rng, depth - 1, supported_only, allow_units));
  int op = d(rng) % (supported_only ? 2 : 5);
  switch (op) {
    case 0: return BehaviourTerm::choice(std::move(kids));
    case 1: return BehaviourTerm::seq(std::move(kids));
    case 2: return BehaviourTerm::par(std::move(kids));
    case 3: return BehaviourTerm::iter_seq(kids.front());
    default: return BehaviourTerm::iter_par(kids.front());
  }
}

Tables random_tables(std::mt19937& rng) {
  Tables t;
  std::uniform_int_distribution<int> d(0, 99);
  for (const auto& a : kAtoms) {
    for (const auto& s : kStimuli) {
      if (d(rng) < 40) t.next[{a, s}] = kAtoms[d(rng) % kAtoms.size()];
      if (d(rng) < 40) t.out[{a, s}] = kStimuli[d(rng) % kStimuli.size()];
    }
  }
  return t;
}

Tables port_captain() {
  Tables t;
  t.next = {{{"man1", "deprt1"}, "clear1"}, {{"man2", "deprt2"}, "clear2"}, {{"init", "deprt1"}, "depart"},
            {{"init", "deprt2"}, "depart"}, {{"clear1", "arrive"}, "man1"},  {{"clear2", "arrive"}, "man2"},
            {{"depart", "mnge1"}, "init"},  {{"depart", "mnge2"}, "init"}};
  t.out = {{{"man1", "deprt1"}, "deprt1"}, {{"man2", "deprt2"}, "deprt2"}, {{"clear1", "arrive"}, "mnge1"},
           {{"clear2", "arrive"}, "mnge2"}, {{"depart", "mnge1"}, "mnge1"}, {{"depart", "mnge2"}, "mnge2"}};
  return t;
}

}  // namespace

TEST_CASE("normalize: idempotent choice, unit and zero") {
  CHECK(N("a + a + b") == N("a + b"));
  CHECK(to_string(N("a + a + b")) == "a + b");
  CHECK(N("a;1;b") == BehaviourTerm::seq({BehaviourTerm::atom("a"), BehaviourTerm::atom("b")}));
  CHECK(N("a;0") == BehaviourTerm::zero());
  CHECK(N("a * 0") == BehaviourTerm::zero());
  CHECK(N("b + a") == N("a + b"));
  CHECK(N("a + 0") == N("a"));
  CHECK(N("(a;b);c") == N("a;(b;c)"));
  CHECK(N("1^;") == BehaviourTerm::one());
}

TEST_CASE("normalize factors sequences with a shared last element") {
  CHECK(N("man1;init + man2;init") == N("(man1 + man2);init"));
  CHECK(to_string(N("man1;init + man2;init")) == "(man1 + man2);init");
  CHECK(N("a;c + b;d") == BehaviourTerm::choice({N("a;c"), N("b;d")}));
}

TEST_CASE("atoms_of") {
  CHECK(atoms_of(T("(man1+man2);init + (clear1+clear2);depart")) ==
        AtomSet{"man1", "man2", "init", "clear1", "clear2", "depart"});
  CHECK(atoms_of(BehaviourTerm::one()).empty());
  CHECK(atoms_of(T("a + a;b")) == AtomSet{"a", "b"});
  CHECK(atomic_sub_behaviours(T("srvT + posn + leave")) == AtomSet{"srvT", "posn", "leave"});
  CHECK(atomic_sub_behaviours(BehaviourTerm::zero()).empty());
  CHECK(atomic_sub_behaviours(T("read;cargo")) == AtomSet{"read", "cargo"});
}

TEST_CASE("is_sub_stimulus") {
  CHECK(is_sub_stimulus(S("mnge1"), S("mnge1 + mnge2")));
  CHECK(is_sub_stimulus(S("mnge1"), S("mnge1")));
  CHECK_FALSE(is_sub_stimulus(S("mnge1"), S("mnge2")));
  CHECK(is_sub_stimulus(S("0"), S("mnge2")));
}

TEST_CASE("stimulus normalization") {
  CHECK(normalize(S("b + a + a")) == normalize(S("a + b")));
  CHECK(normalize(S("a.1.b")) == normalize(S("a.b")));
  CHECK(normalize(S("a.0")) == StimulusTerm::deactivation());
  CHECK(normalize(S("a + 0")) == S("a"));
}

TEST_CASE("step_behaviour on the port captain") {
  auto pc = port_captain();
  auto term = N("(man1+man2);init + (clear1+clear2);depart");
  CHECK(step_behaviour(pc, term, S("mnge1")) == term);
  CHECK(step_behaviour(pc, term, S("mnge2")) == term);
  CHECK(step_behaviour(pc, term, S("arrive")) == N("(man1+man2);init"));
  CHECK(step_behaviour(pc, term, S("0")) == BehaviourTerm::zero());
  CHECK(step_behaviour(pc, term, S("1")) == term);
  CHECK(step_behaviour(pc, term, S("served")) == term);
  CHECK(step_behaviour(pc, term, S("deprt1")) == N("(clear1+clear2);depart + man2;init"));
  // composite stimuli
  CHECK(step_behaviour(pc, term, S("arrive + mnge1")) == N("(man1+man2);init + (clear1+clear2);depart"));
  CHECK(step_behaviour(pc, N("clear1"), S("deprt1 . arrive")) == N("clear1"));
}

TEST_CASE("step_behaviour rejects concurrency and iteration") {
  Tables t;
  CHECK_THROWS_AS(step_behaviour(t, T("a * b"), S("s")), UnsupportedTerm);
  CHECK_THROWS_AS(step_behaviour(t, T("a^;"), S("s")), UnsupportedTerm);
  CHECK_THROWS_AS(step_behaviour(t, T("a + (b;c^*)"), S("s")), UnsupportedTerm);
}

TEST_CASE("term syntax") {
  CHECK(T("a + b * c ; d") ==
        BehaviourTerm::choice({BehaviourTerm::atom("a"),
                               BehaviourTerm::par({BehaviourTerm::atom("b"),
                                                   BehaviourTerm::seq({BehaviourTerm::atom("c"),
                                                                       BehaviourTerm::atom("d")})})}));
  CHECK(T("a^;") == BehaviourTerm::iter_seq(BehaviourTerm::atom("a")));
  CHECK(T("(a+b)^*") == BehaviourTerm::iter_par(T("a+b")));
  CHECK_THROWS_AS(T("a + "), SyntaxError);
  CHECK_THROWS_AS(T("(a"), SyntaxError);
  CHECK_THROWS_AS(T("a ^ b"), SyntaxError);
  CHECK_THROWS_AS(S("a ++ b"), SyntaxError);
  try {
    T("a +\n  ;");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto t = random_term(rng, 4, false, true);
    CHECK(parse_behaviour_term(to_string(t)) == t);
  }
}

TEST_CASE("property: normalize is idempotent") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto n = normalize(random_term(rng, 4, false, true));
    CHECK(normalize(n) == n);
  }
}

TEST_CASE("property: normalization keeps the atoms of zero-free terms") {
  std::mt19937 rng(13);
  for (int i = 0; i < 1000; ++i) {
    auto t = random_term(rng, 4, false, false);
    CHECK(atoms_of(normalize(t)) == atoms_of(t));
  }
}

TEST_CASE("property: semimodule laws of step_behaviour") {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto tables = random_tables(rng);
    auto t1 = random_term(rng, 3, true, true);
    auto t2 = random_term(rng, 3, true, true);
    auto s = StimulusTerm::atom(kStimuli[i % kStimuli.size()]);
    CHECK(step_behaviour(tables, t1, StimulusTerm::neutral()) == normalize(t1));
    if (normalize(t1) != BehaviourTerm::zero()) {
      CHECK(step_behaviour(tables, t1, StimulusTerm::deactivation()) == BehaviourTerm::zero());
    }
    auto lhs = step_behaviour(tables, BehaviourTerm::choice({t1, t2}), s);
    auto rhs = normalize(BehaviourTerm::choice({step_behaviour(tables, t1, s), step_behaviour(tables, t2, s)}));
    CHECK(lhs == rhs);
    // (t o s) o s2 = t o (s2 . s)
    auto s2 = StimulusTerm::atom(kStimuli[(i + 1) % kStimuli.size()]);
    CHECK(step_behaviour(tables, step_behaviour(tables, t1, s), s2) ==
          step_behaviour(tables, t1, StimulusTerm::odot({s2, s})));
  }
}
