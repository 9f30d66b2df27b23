// Acceptance checks against the port-terminal model. Prints one PASS/FAIL line
// per criterion and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "c2ka/exploit.hpp"
#include "c2ka/report.hpp"
#include "c2ka/semimodule.hpp"
#include "c2ka/specfile.hpp"
#include "../unit/support.hpp"

using namespace c2ka;
using test_support::data_path;
using test_support::slurp;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << "\n";
  if (!ok) ++failures;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  return s;
}

struct GoldenRow {
  std::string id;
  Interaction path;
  std::vector<std::string> attack;
  std::string decimal;
};

std::vector<GoldenRow> golden() {
  std::vector<GoldenRow> rows;
  std::istringstream in(slurp(data_path("tests/data/sv1_sv2_implicit.csv")));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    GoldenRow r{cells[0], parse_interaction(cells[1]), {}, cells[3]};
    if (!cells[2].empty()) r.attack = split(cells[2], ';');
    rows.push_back(std::move(r));
  }
  return rows;
}

bool criterion1(const SystemModel& m, const std::vector<GoldenRow>& rows) {
  auto start = std::chrono::steady_clock::now();
  AttackAnalyzer a(m);
  int matched = 0;
  std::string bad;
  for (const auto& row : rows) {
    auto attack = a.attack_scenarios(row.path).members();
    auto e = exploitability(a, row.path);
    if (attack == row.attack && e.decimal3 == row.decimal) {
      ++matched;
    } else {
      bad += " " + row.id;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << matched << "/" << rows.size() << " rows match set and decimal exactly" << (bad.empty() ? "" : "; mismatched:")
    << bad << " (" << secs << " s)";
  bool ok = rows.size() == 19 && matched == 19 && secs < 10;
  verdict(1, ok, d.str());
  return ok;
}

bool criterion2(const SystemModel& m) {
  AttackAnalyzer a(m);
  auto e = exploitability(a, parse_interaction("SV1 -S-> SM2 -S-> PC -E-> SV2"));
  bool ok = e.steps.size() == 2 && e.value == Fraction(2, 9) && e.decimal3 == "0.222";
  if (ok) {
    const auto& pc = e.steps[1];
    const auto& sm2 = e.steps[0];
    ok = pc.agent == "PC" && pc.factor == Fraction(2, 3) &&
         pc.influencing == std::vector<std::string>{"arrive", "deprt1", "deprt2"} && sm2.agent == "SM2" &&
         sm2.factor == Fraction(1, 3) && sm2.influencing == std::vector<std::string>{"berth", "compl2", "mnge2"};
  }
  std::ostringstream d;
  d << "SV1 -S-> SM2 -S-> PC -E-> SV2:";
  for (const auto& s : e.steps) d << " " << s.agent << " " << to_string(s.factor);
  d << ", E = " << to_string(e.value) << " = " << e.decimal3;
  verdict(2, ok, d.str());
  return ok;
}

bool criterion3(const SystemModel& m) {
  auto infl = infl_agent(m, "SM1");
  auto ref = ref_agent(m, "SM1");
  bool ok = infl == StimulusSet{"berth", "compl1", "mnge1"} &&
            gcl::to_string(ref) == "{arriveT[1], berthPos[1], departT[1], waitT[1]}";
  std::string s = "{";
  for (const auto& x : infl) s += (s.size() > 1 ? ", " : "") + x;
  verdict(3, ok, "infl(SM1) = " + s + "}, ref(SM1) = " + gcl::to_string(ref));
  return ok;
}

bool criterion4(const SystemModel& m, const std::vector<GoldenRow>& rows) {
  AttackAnalyzer a(m);
  ReportOptions opts;
  opts.filter.from = "SV1";
  opts.filter.to = "SV2";
  opts.implicit_only = true;
  auto r = build_report(a, opts);
  std::set<Interaction> got, want;
  for (const auto& row : r.rows) got.insert(row.path);
  for (const auto& row : rows) want.insert(row.path);
  bool ok = got == want;
  std::ostringstream d;
  d << r.implicit << " implicit of " << r.total << " SV1->SV2 interactions, "
    << (ok ? "exactly the 19 expected paths" : "differs from the expected 19 paths")
    << " (convention: simple paths, no length cap, intended = contiguous subpaths)";
  verdict(4, ok, d.str());
  return ok;
}

void criterion5(const SystemModel& m, bool earlier_ok) {
  AttackAnalyzer a(m);
  IntendedSet intended(m.intended());
  auto all = enumerate_interactions(a.graph());
  std::size_t implicit = 0;
  for (const auto& p : all) implicit += classify(p, intended) == Classification::Implicit;
  std::ostringstream d;
  d << "total=" << all.size() << " (target 4596), implicit=" << implicit << " (target 3902)";
  bool exact = all.size() == 4596 && implicit == 3902;
  if (exact) {
    verdict(5, true, d.str());
  } else {
    // soft criterion: a documented deviation is accepted when 1-4 pass
    d << "; soft target, deviation documented in README";
    verdict(5, earlier_ok && all.size() == 4596, d.str());
  }
}

void criterion6() {
  std::mt19937 rng(6);
  const int cases = 500;
  std::size_t fixed_point = 0, empty_suffix = 0, shortcut = 0, oracle = 0, bounds = 0, paths = 0, atoms = 0;
  for (int i = 0; i < cases; ++i) {
    auto m = load_model(test_support::random_spec(rng));
    for (const auto& name : m.agent_names()) {
      for (const auto& at : m.agent(name).atoms()) {
        ++atoms;
        if (is_fixed_point(m, name, at) && !infl_atom(m, name, at).empty()) ++fixed_point;
      }
    }
    AttackAnalyzer fast(m);
    AttackAnalyzer naive(m, {false, false});
    for (const auto& p : enumerate_interactions(fast.graph())) {
      ++paths;
      auto r = fast.attack_scenarios(p);
      auto n = naive.attack_scenarios(p);
      auto o = attack_scenarios_oracle(m, p);
      if (r.stimuli != n.stimuli || r.variables != n.variables) ++shortcut;
      if (r.stimuli != o.stimuli || r.variables != o.variables) ++oracle;
      auto e = exploitability(fast, p);
      if (e.value > Fraction(1, 1)) ++bounds;
      if (p.length() == 1) {
        if (e.value != Fraction(1, 1)) ++bounds;
        continue;
      }
      if (fast.attack_scenarios(p.suffix()).kind == AttackKind::Empty && r.kind != AttackKind::Empty) ++empty_suffix;
      if (e.value > exploitability(fast, p.suffix()).value) ++bounds;
      if (r.kind == AttackKind::Empty && e.value != Fraction(0, 1)) ++bounds;
    }
  }
  std::ostringstream d;
  d << cases << " random models, " << atoms << " atoms, " << paths << " interactions; failures: fixed_point=" << fixed_point
    << " empty_suffix=" << empty_suffix << " short-circuit=" << shortcut << " oracle=" << oracle << " exploitability=" << bounds;
  verdict(6, fixed_point + empty_suffix + shortcut + oracle + bounds == 0, d.str());
}

void criterion7(const SystemModel& m) {
  auto spec = parse_spec(slurp(data_path("data/port_terminal.c2ka")));
  std::set<std::string> stimuli(m.stimuli().begin(), m.stimuli().end());
  std::size_t programs = 0, roundtrip_failures = 0;
  for (const auto& name : m.agent_names()) {
    const auto& agent = m.agent(name);
    for (const auto& atom : agent.atoms()) {
      const auto& p = agent.program(atom);
      ++programs;
      if (gcl::parse_program(gcl::render(p), stimuli) != p) ++roundtrip_failures;
    }
  }
  std::size_t rows = 0, mismatches = 0;
  std::string bad;
  std::istringstream in(slurp(data_path("tests/data/defref_expected.txt")));
  std::string line;
  auto parse_set = [](const std::string& text) {
    gcl::VarSet out;
    std::istringstream words(text);
    std::string w;
    while (words >> w) out.insert(gcl::parse_variable(w));
    return out;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line, '|');
    std::istringstream head(cells[0]);
    std::string agent, atom;
    head >> agent >> atom;
    ++rows;
    const auto& a = m.agent(agent);
    if (a.def(atom) != parse_set(trim(cells[1])) || a.ref(atom) != parse_set(trim(cells[2]))) {
      ++mismatches;
      bad += " " + agent + "." + atom;
    }
  }
  std::size_t expected_rows = 0;
  for (const auto& name : m.agent_names()) expected_rows += m.agent(name).atoms().size();
  std::ostringstream d;
  d << programs << " agent programs round-trip (" << roundtrip_failures << " failures), " << spec.programs.size()
    << " program texts; def/ref table " << rows - mismatches << "/" << rows << " rows match" << bad;
  verdict(7, roundtrip_failures == 0 && mismatches == 0 && rows == expected_rows && rows > 0, d.str());
}

}  // namespace

int main() {
  try {
    auto model = load_model_file(data_path("data/port_terminal.c2ka"));
    auto rows = golden();
    bool ok1 = criterion1(model, rows);
    bool ok2 = criterion2(model);
    bool ok3 = criterion3(model);
    bool ok4 = criterion4(model, rows);
    criterion5(model, ok1 && ok2 && ok3 && ok4);
    criterion6();
    criterion7(model);
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance run aborted: " << e.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
