#include "c2ka/attack.hpp"

#include <algorithm>
#include <variant>

#include "c2ka/error.hpp"

namespace c2ka {

const char* to_string(AttackKind k) {
  switch (k) {
    case AttackKind::Stimuli: return "stimuli";
    case AttackKind::Variables: return "variables";
    default: return "empty";
  }
}

std::vector<std::string> AttackResult::members() const {
  std::vector<std::string> out(stimuli.begin(), stimuli.end());
  for (const auto& v : variables) out.push_back(gcl::to_string(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

AttackResult make_result(const Interaction& p, StimulusSet stimuli, gcl::VarSet variables) {
  AttackResult r;
  r.interaction = p;
  r.stimuli = std::move(stimuli);
  r.variables = std::move(variables);
  if (!r.stimuli.empty()) {
    r.kind = AttackKind::Stimuli;
  } else if (!r.variables.empty()) {
    r.kind = AttackKind::Variables;
  } else {
    r.trivial_only = p.edges.front() == EdgeType::Stimuli;
  }
  return r;
}

template <typename Set>
bool meets(const Set& a, const Set& b) {
  return std::any_of(a.begin(), a.end(), [&](const auto& x) { return b.contains(x); });
}

}  // namespace

AttackAnalyzer::AttackAnalyzer(const SystemModel& model, Options options)
    : AttackAnalyzer(model, build_graph(model), options) {}

AttackAnalyzer::AttackAnalyzer(const SystemModel& model, CommGraph graph, Options options)
    : model_(model), graph_(std::move(graph)), options_(options) {}

const StimulusSet& AttackAnalyzer::infl(const std::string& agent) {
  auto it = infl_.find(agent);
  if (it == infl_.end()) it = infl_.emplace(agent, infl_agent(model_, agent)).first;
  return it->second;
}

const gcl::VarSet& AttackAnalyzer::ref(const std::string& agent) {
  auto it = ref_.find(agent);
  if (it == ref_.end()) it = ref_.emplace(agent, ref_agent(model_, agent)).first;
  return it->second;
}

const StimulusSet& AttackAnalyzer::infl_atom(const std::string& agent, const std::string& atom) {
  auto key = std::make_pair(agent, atom);
  auto it = infl_atom_.find(key);
  if (it == infl_atom_.end()) it = infl_atom_.emplace(key, c2ka::infl_atom(model_, agent, atom)).first;
  return it->second;
}

StimulusSet AttackAnalyzer::attack_stimuli(const Interaction& p) {
  graph_.require_backed(p);
  return evaluate(p).first;
}

gcl::VarSet AttackAnalyzer::attack_variables(const Interaction& p) {
  graph_.require_backed(p);
  return evaluate(p).second;
}

AttackResult AttackAnalyzer::attack_scenarios(const Interaction& p) {
  graph_.require_backed(p);
  auto sets = evaluate(p);
  return make_result(p, std::move(sets.first), std::move(sets.second));
}

AttackAnalyzer::Sets AttackAnalyzer::evaluate(const Interaction& p) {
  if (!options_.memoize) return compute(p);
  if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  auto sets = compute(p);
  memo_.emplace(p, sets);
  return sets;
}

AttackAnalyzer::Sets AttackAnalyzer::compute(const Interaction& p) {
  Sets out;
  bool stimuli_first = p.edges.front() == EdgeType::Stimuli;
  if (p.length() == 1) {
    if (stimuli_first) {
      out.first = infl(p.sink());
    } else {
      out.second = ref(p.sink());
    }
    return out;
  }

  auto [suffix_stimuli, suffix_vars] = evaluate(p.suffix());
  if (options_.short_circuit && suffix_stimuli.empty() && suffix_vars.empty()) return out;

  const std::string& neighbour = p.agents[1];
  const AgentModel& b = model_.agent(neighbour);
  for (const auto& a : b.atoms()) {
    if (stimuli_first) {
      for (const auto& s : infl_atom(neighbour, a)) {
        auto lambda = b.next_stimulus(a, s);
        if (meets(b.def(b.next_behaviour(a, s)), suffix_vars) || (lambda && suffix_stimuli.contains(*lambda))) {
          out.first.insert(s);
        }
      }
    } else {
      bool sustains = meets(b.def(a), suffix_vars);
      for (const auto& s : model_.stimuli()) {
        if (sustains) break;
        auto lambda = b.next_stimulus(a, s);
        sustains = lambda && suffix_stimuli.contains(*lambda);
      }
      if (sustains) out.second.insert(b.ref(a).begin(), b.ref(a).end());
    }
  }
  return out;
}

// ---- witness-chain search ---------------------------------------------------

namespace {

using Action = std::variant<std::string, gcl::Variable>;

class ChainSearch {
 public:
  ChainSearch(const SystemModel& model, const Interaction& p) : model_(model), p_(p) {}

  // True when `x`, arriving at agents[i] over edges[i-1], can be carried on to the sink.
  bool reaches_sink(std::size_t i, const Action& x) const {
    const AgentModel& agent = model_.agent(p_.agents[i]);
    bool by_stimulus = p_.edges[i - 1] == EdgeType::Stimuli;
    if (i + 1 == p_.agents.size()) {
      if (by_stimulus) return infl_agent(model_, agent.name()).contains(std::get<std::string>(x));
      return ref_agent(model_, agent.name()).contains(std::get<gcl::Variable>(x));
    }
    bool next_by_stimulus = p_.edges[i] == EdgeType::Stimuli;
    for (const auto& a : agent.atoms()) {
      if (by_stimulus) {
        const auto& s = std::get<std::string>(x);
        if (agent.next_behaviour(a, s) == a) continue;
        if (next_by_stimulus) {
          auto t = agent.next_stimulus(a, s);
          if (t && reaches_sink(i + 1, *t)) return true;
        } else {
          for (const auto& v : agent.def(agent.next_behaviour(a, s))) {
            if (reaches_sink(i + 1, v)) return true;
          }
        }
      } else {
        if (!agent.ref(a).contains(std::get<gcl::Variable>(x))) continue;
        if (next_by_stimulus) {
          for (const auto& s : model_.stimuli()) {
            auto t = agent.next_stimulus(a, s);
            if (t && reaches_sink(i + 1, *t)) return true;
          }
        } else {
          for (const auto& v : agent.def(a)) {
            if (reaches_sink(i + 1, v)) return true;
          }
        }
      }
    }
    return false;
  }

 private:
  const SystemModel& model_;
  const Interaction& p_;
};

}  // namespace

AttackResult attack_scenarios_oracle(const SystemModel& model, const Interaction& p) {
  ChainSearch search(model, p);
  StimulusSet stimuli;
  gcl::VarSet variables;
  if (p.edges.front() == EdgeType::Stimuli) {
    for (const auto& s : model.stimuli()) {
      if (search.reaches_sink(1, s)) stimuli.insert(s);
    }
  } else {
    const AgentModel& first = model.agent(p.agents[1]);
    gcl::VarSet candidates;
    for (const auto& a : first.reachable_atoms()) candidates.insert(first.ref(a).begin(), first.ref(a).end());
    for (const auto& v : candidates) {
      if (search.reaches_sink(1, v)) variables.insert(v);
    }
  }
  return make_result(p, std::move(stimuli), std::move(variables));
}

}  // namespace c2ka
