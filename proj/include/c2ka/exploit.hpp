#pragma once

// Exploitability of interactions as exact fractions.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "c2ka/attack.hpp"

namespace c2ka {

/// Nonnegative fraction in lowest terms.
class Fraction {
 public:
  Fraction() = default;
  /// Throws ZeroDenominator when den is 0.
  Fraction(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

std::string to_string(const Fraction& f);  // "2/9"

/// Round half up to exactly three decimals: 2/9 -> "0.222", 1/6 -> "0.167".
std::string render_decimal3(const Fraction& f);

/// One peeled edge: the neighbour's influencing set X and the attack set of the
/// interaction starting at that edge.
struct ExploitStep {
  Interaction interaction;
  std::string agent;
  EdgeType edge = EdgeType::Stimuli;
  std::vector<std::string> influencing;
  std::vector<std::string> attack;
  Fraction factor;
};

struct Exploitability {
  Fraction value;
  std::string decimal3;
  /// Source side first. Empty for a single-edge interaction.
  std::vector<ExploitStep> steps;

  std::uint64_t numerator() const { return value.num(); }
  std::uint64_t denominator() const { return value.den(); }
};

/// E(p) = E(suffix) * |X(B) meet attack(p)| / |X(B)| with B the neighbour of the
/// source and X = infl for a stimulus edge, ref for an environment edge; 1 for a single edge.
/// Throws EdgeMismatch, or ZeroDenominator when X(B) is empty.
Exploitability exploitability(AttackAnalyzer& analyzer, const Interaction& p);

}  // namespace c2ka
