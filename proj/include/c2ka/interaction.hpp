#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace c2ka {

enum class EdgeType : std::uint8_t { Stimuli, Environment };

/// 'S' or 'E'.
char edge_letter(EdgeType t);

/// A typed path A_n -> ... -> A_0. agents.size() == edges.size() + 1.
struct Interaction {
  std::vector<std::string> agents;
  std::vector<EdgeType> edges;

  const std::string& source() const { return agents.front(); }
  const std::string& sink() const { return agents.back(); }
  /// Number of edges.
  std::size_t length() const { return edges.size(); }

  /// The interaction without its source agent and first edge. Requires length() > 1.
  Interaction suffix() const;
  /// Contiguous piece starting at agent `first` with `edge_count` edges.
  Interaction segment(std::size_t first, std::size_t edge_count) const;
  bool is_simple() const;

  auto operator<=>(const Interaction&) const = default;
};

/// `A -S-> B -E-> C`. Whitespace around arrows is optional.
Interaction parse_interaction(std::string_view literal);
std::string to_string(const Interaction& p);

}  // namespace c2ka
