#pragma once

// Behaviour terms (concurrent Kleene algebra) and stimulus terms (stimulus
// structure), their canonical forms, and the action of stimuli on behaviours.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace c2ka {

enum class SymbolKind : std::uint8_t { Behaviour, Stimulus };

struct AtomicSymbol {
  std::string name;
  SymbolKind kind = SymbolKind::Behaviour;

  auto operator<=>(const AtomicSymbol&) const = default;
};

using AtomSet = std::set<std::string>;

class BehaviourTerm {
 public:
  // Enumerator order is the canonical order between node kinds.
  enum class Kind : std::uint8_t { Zero, One, Atom, Choice, Seq, Par, IterSeq, IterPar };

  BehaviourTerm() = default;  // Zero

  static BehaviourTerm zero() { return BehaviourTerm(Kind::Zero, {}, {}); }
  static BehaviourTerm one() { return BehaviourTerm(Kind::One, {}, {}); }
  static BehaviourTerm atom(std::string name) { return BehaviourTerm(Kind::Atom, std::move(name), {}); }
  static BehaviourTerm choice(std::vector<BehaviourTerm> terms) {
    return BehaviourTerm(Kind::Choice, {}, std::move(terms));
  }
  static BehaviourTerm seq(std::vector<BehaviourTerm> terms) { return BehaviourTerm(Kind::Seq, {}, std::move(terms)); }
  static BehaviourTerm par(std::vector<BehaviourTerm> terms) { return BehaviourTerm(Kind::Par, {}, std::move(terms)); }
  static BehaviourTerm iter_seq(BehaviourTerm body) { return BehaviourTerm(Kind::IterSeq, {}, {std::move(body)}); }
  static BehaviourTerm iter_par(BehaviourTerm body) { return BehaviourTerm(Kind::IterPar, {}, {std::move(body)}); }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  /// Atom name; empty for every other kind.
  const std::string& name() const { return name_; }
  std::span<const BehaviourTerm> children() const { return children_; }

  friend bool operator==(const BehaviourTerm& a, const BehaviourTerm& b);
  friend std::strong_ordering operator<=>(const BehaviourTerm& a, const BehaviourTerm& b);

 private:
  BehaviourTerm(Kind kind, std::string name, std::vector<BehaviourTerm> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_ = Kind::Zero;
  std::string name_;
  std::vector<BehaviourTerm> children_;
};

class StimulusTerm {
 public:
  // Deactivation is the zero of the stimulus semiring, Neutral its unit.
  enum class Kind : std::uint8_t { Deactivation, Neutral, Atom, OPlus, ODot };

  StimulusTerm() = default;  // Neutral

  static StimulusTerm deactivation() { return StimulusTerm(Kind::Deactivation, {}, {}); }
  static StimulusTerm neutral() { return StimulusTerm(Kind::Neutral, {}, {}); }
  static StimulusTerm atom(std::string name) { return StimulusTerm(Kind::Atom, std::move(name), {}); }
  static StimulusTerm oplus(std::vector<StimulusTerm> terms) {
    return StimulusTerm(Kind::OPlus, {}, std::move(terms));
  }
  static StimulusTerm odot(std::vector<StimulusTerm> terms) { return StimulusTerm(Kind::ODot, {}, std::move(terms)); }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const std::string& name() const { return name_; }
  std::span<const StimulusTerm> children() const { return children_; }

  friend bool operator==(const StimulusTerm& a, const StimulusTerm& b);
  friend std::strong_ordering operator<=>(const StimulusTerm& a, const StimulusTerm& b);

 private:
  StimulusTerm(Kind kind, std::string name, std::vector<StimulusTerm> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_ = Kind::Neutral;
  std::string name_;
  std::vector<StimulusTerm> children_;
};

/// Next-behaviour and next-stimulus maps over atoms, as seen by one agent.
/// Both maps are total: unspecified pairs give the atom back and the neutral stimulus.
class StimulusResponse {
 public:
  virtual ~StimulusResponse() = default;
  virtual std::string next_behaviour(const std::string& behaviour, const std::string& stimulus) const = 0;
  /// std::nullopt stands for the neutral stimulus.
  virtual std::optional<std::string> next_stimulus(const std::string& behaviour,
                                                   const std::string& stimulus) const = 0;
};

/// Canonical form: choice is flattened, sorted and deduplicated, sequences and
/// concurrent compositions are flattened with units removed, zero annihilates
/// ; and *, and choices of sequences sharing their last element are factored
/// ((a;c) + (b;c) becomes (a+b);c). Idempotent.
BehaviourTerm normalize(const BehaviourTerm& term);
StimulusTerm normalize(const StimulusTerm& term);

/// Every atomic behaviour occurring in the term.
AtomSet atoms_of(const BehaviourTerm& term);

/// Candidate atomic sub-behaviours of an agent: the atoms occurring in its term.
AtomSet atomic_sub_behaviours(const BehaviourTerm& agent_term);

/// s <= t in the stimulus order, i.e. s (+) t == t after normalization.
bool is_sub_stimulus(const StimulusTerm& s, const StimulusTerm& t);

/// Applies a stimulus to a behaviour term built from atoms, + and ;.
/// Choice distributes, sequences follow the cascade law
/// (a;b) o s = (a o s);(b o lambda(a,s)), the neutral stimulus leaves the
/// term unchanged and deactivation yields 0. The result is normalized.
/// Throws UnsupportedTerm for concurrent composition or iteration.
BehaviourTerm step_behaviour(const StimulusResponse& tables, const BehaviourTerm& term, const StimulusTerm& stimulus);

/// Text syntax: `+` choice, `*` concurrent composition, `;` sequence, postfix
/// `^;` and `^*` for the two iterations, `0` and `1`, parentheses, identifiers.
/// Binding strength from weakest: `+`, `*`, `;`, postfix. Throws SyntaxError.
BehaviourTerm parse_behaviour_term(std::string_view text);

/// Text syntax: `+` for choice, `.` for sequential composition, `0` for
/// deactivation, `1` for the neutral stimulus.
StimulusTerm parse_stimulus_term(std::string_view text);

std::string to_string(const BehaviourTerm& term);
std::string to_string(const StimulusTerm& term);

}  // namespace c2ka
