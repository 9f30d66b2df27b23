#include "c2ka/interaction.hpp"

#include <set>

#include "c2ka/error.hpp"
#include "text_cursor.hpp"

namespace c2ka {

char edge_letter(EdgeType t) { return t == EdgeType::Stimuli ? 'S' : 'E'; }

Interaction Interaction::suffix() const { return segment(1, edges.size() - 1); }

Interaction Interaction::segment(std::size_t first, std::size_t edge_count) const {
  Interaction out;
  out.agents.assign(agents.begin() + first, agents.begin() + first + edge_count + 1);
  out.edges.assign(edges.begin() + first, edges.begin() + first + edge_count);
  return out;
}

bool Interaction::is_simple() const {
  std::set<std::string> seen(agents.begin(), agents.end());
  return seen.size() == agents.size();
}

Interaction parse_interaction(std::string_view literal) {
  detail::TextCursor in(literal);
  Interaction p;
  auto agent = [&] {
    in.skip_space();
    if (!detail::is_ident_start(in.peek())) in.fail("expected an agent name");
    p.agents.push_back(in.read_identifier());
  };
  agent();
  for (;;) {
    in.skip_space();
    if (in.eof()) break;
    if (in.accept("-S->")) {
      p.edges.push_back(EdgeType::Stimuli);
    } else if (in.accept("-E->")) {
      p.edges.push_back(EdgeType::Environment);
    } else {
      in.fail("expected '-S->' or '-E->'");
    }
    agent();
  }
  if (p.edges.empty()) throw SyntaxError("an interaction needs at least one edge", 0, 0);
  for (std::size_t i = 0; i + 1 < p.agents.size(); ++i) {
    if (p.agents[i] == p.agents[i + 1]) {
      throw SyntaxError("adjacent agents must differ: " + p.agents[i], 0, 0);
    }
  }
  return p;
}

std::string to_string(const Interaction& p) {
  std::string out = p.agents.front();
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    out += " -";
    out += edge_letter(p.edges[i]);
    out += "-> ";
    out += p.agents[i + 1];
  }
  return out;
}

}  // namespace c2ka
