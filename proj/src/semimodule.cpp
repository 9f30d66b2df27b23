#include "c2ka/semimodule.hpp"

namespace c2ka {

StimulusSet infl_atom(const SystemModel& model, const std::string& agent, const std::string& atom) {
  const auto& a = model.agent(agent);
  StimulusSet out;
  for (const auto& s : model.stimuli()) {
    if (a.next_behaviour(atom, s) != atom) out.insert(s);
  }
  return out;
}

StimulusSet infl_agent(const SystemModel& model, const std::string& agent) {
  const auto& a = model.agent(agent);
  StimulusSet out;
  for (const auto& s : model.stimuli()) {
    if (step_behaviour(a, a.term(), StimulusTerm::atom(s)) != a.term()) out.insert(s);
  }
  return out;
}

gcl::VarSet ref_agent(const SystemModel& model, const std::string& agent) {
  const auto& a = model.agent(agent);
  gcl::VarSet out;
  for (const auto& atom : a.atoms()) out.insert(a.ref(atom).begin(), a.ref(atom).end());
  return out;
}

gcl::VarSet def_agent(const SystemModel& model, const std::string& agent) {
  const auto& a = model.agent(agent);
  gcl::VarSet out;
  for (const auto& atom : a.atoms()) out.insert(a.def(atom).begin(), a.def(atom).end());
  return out;
}

StimulusSet emitted_stimuli(const SystemModel& model, const std::string& agent) {
  const auto& a = model.agent(agent);
  StimulusSet out;
  for (const auto& atom : a.atoms()) {
    for (const auto& s : model.stimuli()) {
      if (auto t = a.next_stimulus(atom, s)) out.insert(*t);
    }
  }
  return out;
}

bool is_fixed_point(const SystemModel& model, const std::string& agent, const std::string& atom) {
  const auto& a = model.agent(agent);
  for (const auto& s : model.stimuli()) {
    if (a.next_behaviour(atom, s) != atom) return false;
  }
  return true;
}

InfluenceSets influence(const SystemModel& model, const std::string& agent) {
  return {agent, infl_agent(model, agent), ref_agent(model, agent)};
}

}  // namespace c2ka
