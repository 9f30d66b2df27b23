#include "c2ka/exploit.hpp"

#include <algorithm>
#include <numeric>

#include "c2ka/error.hpp"

namespace c2ka {

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ZeroDenominator("fraction with zero denominator");
  auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  auto g1 = std::gcd(a.num_, b.den_);
  auto g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Fraction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string to_string(const Fraction& f) { return std::to_string(f.num()) + "/" + std::to_string(f.den()); }

std::string render_decimal3(const Fraction& f) {
  std::uint64_t scaled = (f.num() * 2000 + f.den()) / (2 * f.den());
  std::uint64_t whole = scaled / 1000;
  std::uint64_t frac = scaled % 1000;
  std::string digits = std::to_string(frac);
  return std::to_string(whole) + "." + std::string(3 - digits.size(), '0') + digits;
}

Exploitability exploitability(AttackAnalyzer& analyzer, const Interaction& p) {
  analyzer.graph().require_backed(p);
  Exploitability e;
  Interaction cur = p;
  while (cur.length() > 1) {
    ExploitStep step;
    step.interaction = cur;
    step.agent = cur.agents[1];
    step.edge = cur.edges.front();
    step.attack = analyzer.attack_scenarios(cur).members();
    if (step.edge == EdgeType::Stimuli) {
      const auto& x = analyzer.infl(step.agent);
      step.influencing.assign(x.begin(), x.end());
    } else {
      for (const auto& v : analyzer.ref(step.agent)) step.influencing.push_back(gcl::to_string(v));
      std::sort(step.influencing.begin(), step.influencing.end());
    }
    if (step.influencing.empty()) {
      throw ZeroDenominator("agent '" + step.agent + "' has no influencing " +
                            (step.edge == EdgeType::Stimuli ? "stimuli" : "variables") + " in " + to_string(cur));
    }
    std::uint64_t hits = std::count_if(step.attack.begin(), step.attack.end(), [&](const std::string& m) {
      return std::binary_search(step.influencing.begin(), step.influencing.end(), m);
    });
    step.factor = Fraction(hits, step.influencing.size());
    e.value = e.value * step.factor;
    e.steps.push_back(std::move(step));
    cur = cur.suffix();
  }
  e.decimal3 = render_decimal3(e.value);
  return e;
}

}  // namespace c2ka
