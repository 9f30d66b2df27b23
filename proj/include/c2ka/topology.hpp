#pragma once

// Communication graph, interaction enumeration and intended/implicit classification.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "c2ka/interaction.hpp"
#include "c2ka/specfile.hpp"

namespace c2ka {

struct CommGraph {
  std::vector<std::string> agents;  // sorted
  std::set<std::pair<std::string, std::string>> s_edges;
  std::set<std::pair<std::string, std::string>> e_edges;

  bool has_edge(const std::string& from, const std::string& to, EdgeType type) const;
  /// Throws EdgeMismatch naming the first edge of p the graph lacks.
  void require_backed(const Interaction& p) const;
};

/// A -S-> B iff emitted(A) meets infl(B); A -E-> B iff def(A) meets ref(B).
CommGraph build_graph(const SystemModel& model);

/// `A -S-> B` lines, stimulus edges first, each group sorted.
std::string render_graph(const CommGraph& graph);

struct EnumerationFilter {
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::size_t> max_len;  // edges
};

/// All simple typed paths matching the filter, sorted by agent sequence, then edge types.
std::vector<Interaction> enumerate_interactions(const CommGraph& graph, const EnumerationFilter& filter = {});

enum class Classification { Intended, Implicit };

const char* to_string(Classification c);

/// Every contiguous segment of the declared intended paths.
class IntendedSet {
 public:
  IntendedSet() = default;
  explicit IntendedSet(const std::vector<Interaction>& declared);

  bool covers(const Interaction& p) const { return segments_.contains(p); }
  std::size_t segment_count() const { return segments_.size(); }

 private:
  std::set<Interaction> segments_;
};

/// Intended iff p is a contiguous subpath of some declared intended interaction.
Classification classify(const Interaction& p, const IntendedSet& intended);
Classification classify(const Interaction& p, const std::vector<Interaction>& intended);

}  // namespace c2ka
