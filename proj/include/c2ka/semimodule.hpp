#pragma once

// Influencing stimuli, influencing variables and emitted stimuli.

#include <string>

#include "c2ka/gcl.hpp"
#include "c2ka/specfile.hpp"
#include "c2ka/terms.hpp"

namespace c2ka {

using StimulusSet = std::set<std::string>;

/// {s | a o s != a} for an atom of the given agent.
StimulusSet infl_atom(const SystemModel& model, const std::string& agent, const std::string& atom);

/// Atomic stimuli whose action changes the agent's whole behaviour term.
/// Throws UnsupportedTerm for terms with concurrent composition or iteration.
StimulusSet infl_agent(const SystemModel& model, const std::string& agent);

gcl::VarSet ref_agent(const SystemModel& model, const std::string& agent);
gcl::VarSet def_agent(const SystemModel& model, const std::string& agent);

/// Non-neutral outputs lambda(a, s) over the atoms of the agent's term.
StimulusSet emitted_stimuli(const SystemModel& model, const std::string& agent);

/// a o s = a for every declared atomic stimulus.
bool is_fixed_point(const SystemModel& model, const std::string& agent, const std::string& atom);

struct InfluenceSets {
  std::string agent;
  StimulusSet influencing_stimuli;
  gcl::VarSet influencing_variables;
};

InfluenceSets influence(const SystemModel& model, const std::string& agent);

}  // namespace c2ka
