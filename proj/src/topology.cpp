#include "c2ka/topology.hpp"

#include <algorithm>
#include <map>

#include "c2ka/error.hpp"
#include "c2ka/semimodule.hpp"

namespace c2ka {

namespace {

template <typename Set>
bool intersects(const Set& a, const Set& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace

bool CommGraph::has_edge(const std::string& from, const std::string& to, EdgeType type) const {
  const auto& edges = type == EdgeType::Stimuli ? s_edges : e_edges;
  return edges.contains({from, to});
}

void CommGraph::require_backed(const Interaction& p) const {
  if (p.agents.size() != p.edges.size() + 1 || p.edges.empty()) {
    throw EdgeMismatch("malformed interaction");
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!has_edge(p.agents[i], p.agents[i + 1], p.edges[i])) {
      throw EdgeMismatch("no edge " + p.agents[i] + " -" + edge_letter(p.edges[i]) + "-> " + p.agents[i + 1] +
                         " in the communication graph");
    }
  }
}

CommGraph build_graph(const SystemModel& model) {
  CommGraph g;
  g.agents = model.agent_names();
  std::map<std::string, StimulusSet> emitted, infl;
  std::map<std::string, gcl::VarSet> defs, refs;
  for (const auto& a : g.agents) {
    emitted[a] = emitted_stimuli(model, a);
    infl[a] = infl_agent(model, a);
    defs[a] = def_agent(model, a);
    refs[a] = ref_agent(model, a);
  }
  for (const auto& a : g.agents) {
    for (const auto& b : g.agents) {
      if (a == b) continue;
      if (intersects(emitted[a], infl[b])) g.s_edges.emplace(a, b);
      if (intersects(defs[a], refs[b])) g.e_edges.emplace(a, b);
    }
  }
  return g;
}

std::string render_graph(const CommGraph& graph) {
  std::string out;
  for (const auto& [a, b] : graph.s_edges) out += a + " -S-> " + b + "\n";
  for (const auto& [a, b] : graph.e_edges) out += a + " -E-> " + b + "\n";
  return out;
}

namespace {

struct Walker {
  const CommGraph& graph;
  const EnumerationFilter& filter;
  std::map<std::string, std::vector<std::pair<std::string, EdgeType>>> out_edges;
  std::vector<Interaction> found;
  Interaction path;
  std::set<std::string> on_path;

  void extend() {
    if (filter.max_len && path.edges.size() >= *filter.max_len) return;
    for (const auto& [next, type] : out_edges[path.agents.back()]) {
      if (on_path.contains(next)) continue;
      path.agents.push_back(next);
      path.edges.push_back(type);
      on_path.insert(next);
      if (!filter.to || *filter.to == next) found.push_back(path);
      if (!filter.to || *filter.to != next) extend();
      on_path.erase(next);
      path.agents.pop_back();
      path.edges.pop_back();
    }
  }
};

}  // namespace

std::vector<Interaction> enumerate_interactions(const CommGraph& graph, const EnumerationFilter& filter) {
  Walker w{graph, filter, {}, {}, {}, {}};
  for (const auto& [a, b] : graph.s_edges) w.out_edges[a].emplace_back(b, EdgeType::Stimuli);
  for (const auto& [a, b] : graph.e_edges) w.out_edges[a].emplace_back(b, EdgeType::Environment);
  for (const auto& source : graph.agents) {
    if (filter.from && *filter.from != source) continue;
    w.path = Interaction{{source}, {}};
    w.on_path = {source};
    w.extend();
  }
  std::sort(w.found.begin(), w.found.end());
  return std::move(w.found);
}

const char* to_string(Classification c) { return c == Classification::Intended ? "intended" : "implicit"; }

IntendedSet::IntendedSet(const std::vector<Interaction>& declared) {
  for (const auto& p : declared) {
    for (std::size_t first = 0; first < p.edges.size(); ++first) {
      for (std::size_t n = 1; first + n <= p.edges.size(); ++n) segments_.insert(p.segment(first, n));
    }
  }
}

Classification classify(const Interaction& p, const IntendedSet& intended) {
  return intended.covers(p) ? Classification::Intended : Classification::Implicit;
}

Classification classify(const Interaction& p, const std::vector<Interaction>& intended) {
  return classify(p, IntendedSet(intended));
}

}  // namespace c2ka
