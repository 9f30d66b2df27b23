#pragma once

// Attack stimuli and attack variables of interactions.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "c2ka/gcl.hpp"
#include "c2ka/interaction.hpp"
#include "c2ka/semimodule.hpp"
#include "c2ka/specfile.hpp"
#include "c2ka/topology.hpp"

namespace c2ka {

enum class AttackKind { Stimuli, Variables, Empty };

const char* to_string(AttackKind k);

struct AttackResult {
  Interaction interaction;
  AttackKind kind = AttackKind::Empty;
  StimulusSet stimuli;
  gcl::VarSet variables;
  /// Empty set on a stimulus-first path: only the deactivation stimulus reaches the sink.
  bool trivial_only = false;

  /// Rendered members, sorted.
  std::vector<std::string> members() const;
};

/// Evaluates attack sets against one model. Caches per-agent influence sets
/// and, when enabled, suffix results. Not safe for concurrent use; give each
/// thread its own analyzer.
class AttackAnalyzer {
 public:
  struct Options {
    bool memoize = true;
    /// Skip the atom scan when both suffix sets are empty.
    bool short_circuit = true;
  };

  explicit AttackAnalyzer(const SystemModel& model) : AttackAnalyzer(model, Options{}) {}
  AttackAnalyzer(const SystemModel& model, Options options);
  AttackAnalyzer(const SystemModel& model, CommGraph graph, Options options);

  const SystemModel& model() const { return model_; }
  const CommGraph& graph() const { return graph_; }

  /// Both throw EdgeMismatch when p is not backed by the graph.
  StimulusSet attack_stimuli(const Interaction& p);
  gcl::VarSet attack_variables(const Interaction& p);
  AttackResult attack_scenarios(const Interaction& p);

  const StimulusSet& infl(const std::string& agent);
  const gcl::VarSet& ref(const std::string& agent);
  const StimulusSet& infl_atom(const std::string& agent, const std::string& atom);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Sets = std::pair<StimulusSet, gcl::VarSet>;

  Sets evaluate(const Interaction& p);
  Sets compute(const Interaction& p);

  const SystemModel& model_;
  CommGraph graph_;
  Options options_;
  std::map<Interaction, Sets> memo_;
  std::map<std::string, StimulusSet> infl_;
  std::map<std::string, gcl::VarSet> ref_;
  std::map<std::pair<std::string, std::string>, StimulusSet> infl_atom_;
};

/// Independent evaluation by explicit search over witness chains, one
/// (atom, action) pair per intermediate agent, with no caching. Meant for
/// cross-checking on small models.
AttackResult attack_scenarios_oracle(const SystemModel& model, const Interaction& p);

}  // namespace c2ka
