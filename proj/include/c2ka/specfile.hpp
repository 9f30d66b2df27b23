#pragma once

// Plain-text system specifications and their compilation into a SystemModel.
//
//   system NAME
//   stimuli s1, s2, ...
//   behaviours b1, b2, ...
//   agents A, B, ...
//   agent A index=1 { behaviour = TERM }
//   next { a @ s -> a2 / t   b @ s -> b2 }     # applies to every agent
//   next A { a @ s -> a3 }                     # entries for agent A only
//   program a { GCL }                          # `[i]` is replaced by the agent index
//   intended { A -S-> B -E-> C   B -S-> A }
//
// Commas in lists are optional and `#` starts a comment.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2ka/gcl.hpp"
#include "c2ka/interaction.hpp"
#include "c2ka/terms.hpp"

namespace c2ka {

struct Diagnostic {
  enum class Severity { Error, Warning };

  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::size_t line = 0;  // 0 when there is no useful location
};

std::string to_string(const Diagnostic& d);

struct SystemSpec {
  struct Agent {
    std::string name;
    std::optional<int> index;
    std::string term;
    std::size_t line = 0;
  };
  struct Next {
    std::string agent;  // empty: every agent
    std::string behaviour;
    std::string stimulus;
    std::string next;
    std::optional<std::string> output;  // nullopt: neutral
    std::size_t line = 0;
  };
  struct ProgramText {
    std::string behaviour;
    std::string text;
    std::size_t line = 0;  // line of the first character of text
    std::size_t column = 0;
  };
  struct Path {
    std::string text;
    std::size_t line = 0;
  };

  std::string name;
  std::vector<std::pair<std::string, std::size_t>> stimuli;
  std::vector<std::pair<std::string, std::size_t>> behaviours;
  std::vector<std::pair<std::string, std::size_t>> agent_list;
  std::vector<Agent> agents;
  std::vector<Next> next_entries;
  std::vector<ProgramText> programs;
  std::vector<Path> intended;
};

/// Throws SyntaxError with the location of the first structural problem.
SystemSpec parse_spec(std::string_view text);

/// One agent of a compiled model: its normalized term and its view of the
/// next-behaviour and next-stimulus maps, totalized with identity and neutral.
class AgentModel : public StimulusResponse {
 public:
  const std::string& name() const { return name_; }
  std::optional<int> index() const { return index_; }
  const BehaviourTerm& term() const { return term_; }
  /// Atoms occurring in the term.
  const AtomSet& atoms() const { return atoms_; }
  /// Term atoms plus every atom reachable from them through next_behaviour.
  const AtomSet& reachable_atoms() const { return reachable_; }

  std::string next_behaviour(const std::string& behaviour, const std::string& stimulus) const override;
  std::optional<std::string> next_stimulus(const std::string& behaviour, const std::string& stimulus) const override;

  /// Empty program when the atom has none.
  const gcl::Program& program(const std::string& atom) const;
  const gcl::VarSet& def(const std::string& atom) const;
  const gcl::VarSet& ref(const std::string& atom) const;

  /// Explicit table entries, keyed by (behaviour, stimulus).
  const std::map<std::pair<std::string, std::string>, std::string>& next_table() const { return next_; }
  const std::map<std::pair<std::string, std::string>, std::string>& output_table() const { return out_; }

 private:
  friend class ModelBuilder;

  std::string name_;
  std::optional<int> index_;
  BehaviourTerm term_;
  AtomSet atoms_;
  AtomSet reachable_;
  std::map<std::pair<std::string, std::string>, std::string> next_;
  std::map<std::pair<std::string, std::string>, std::string> out_;
  std::map<std::string, gcl::Program> programs_;
  std::map<std::string, gcl::VarSet> def_;
  std::map<std::string, gcl::VarSet> ref_;
};

class SystemModel {
 public:
  const std::string& name() const { return name_; }
  /// Declaration order.
  const std::vector<std::string>& stimuli() const { return stimuli_; }
  const std::vector<std::string>& behaviours() const { return behaviours_; }
  /// Sorted by name.
  std::vector<std::string> agent_names() const;
  bool has_agent(const std::string& name) const { return agents_.contains(name); }
  /// Throws Error for an unknown agent.
  const AgentModel& agent(const std::string& name) const;
  const std::map<std::string, AgentModel>& agents() const { return agents_; }
  const std::vector<Interaction>& intended() const { return intended_; }

 private:
  friend class ModelBuilder;

  std::string name_;
  std::vector<std::string> stimuli_;
  std::vector<std::string> behaviours_;
  std::map<std::string, AgentModel> agents_;
  std::vector<Interaction> intended_;
};

struct CompileResult {
  std::optional<SystemModel> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Errors in the diagnostics block the model; warnings do not.
CompileResult compile(const SystemSpec& spec);

/// Warnings: AssumptionViolated (a o s = a but lambda(a,s) is not neutral),
/// UnreachableAtom, UnusedStimulus.
std::vector<Diagnostic> lint(const SystemModel& model);

/// parse_spec followed by compile. Throws SyntaxError, or Error listing the
/// compile errors.
SystemModel load_model(std::string_view text);
SystemModel load_model_file(const std::string& path);

}  // namespace c2ka
