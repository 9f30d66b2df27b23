#include "c2ka/terms.hpp"

#include <algorithm>
#include <map>

#include "c2ka/error.hpp"
#include "text_cursor.hpp"

namespace c2ka {

namespace {

template <typename T>
std::strong_ordering compare_nodes(const T& a, const T& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  auto ac = a.children();
  auto bc = b.children();
  return std::lexicographical_compare_three_way(ac.begin(), ac.end(), bc.begin(), bc.end());
}

using BK = BehaviourTerm::Kind;
using SK = StimulusTerm::Kind;

template <typename T, typename K>
void flatten_into(std::vector<T>& out, const T& t, K kind) {
  if (t.kind() == kind) {
    for (const auto& c : t.children()) out.push_back(c);
  } else {
    out.push_back(t);
  }
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

BehaviourTerm seq_of(std::vector<BehaviourTerm> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  return BehaviourTerm::seq(std::move(parts));
}

BehaviourTerm normalize_choice(std::span<const BehaviourTerm> children);

BehaviourTerm normalize_seq_like(BK kind, std::span<const BehaviourTerm> children) {
  std::vector<BehaviourTerm> parts;
  for (const auto& c : children) flatten_into(parts, normalize(c), kind);
  if (std::any_of(parts.begin(), parts.end(), [](const auto& t) { return t.is(BK::Zero); })) {
    return BehaviourTerm::zero();
  }
  std::erase_if(parts, [](const auto& t) { return t.is(BK::One); });
  if (parts.empty()) return BehaviourTerm::one();
  if (parts.size() == 1) return std::move(parts.front());
  if (kind == BK::Par) {
    std::sort(parts.begin(), parts.end());
    return BehaviourTerm::par(std::move(parts));
  }
  return BehaviourTerm::seq(std::move(parts));
}

// Right distributivity run backwards: summands that are sequences ending in
// the same element are merged into one sequence with a choice prefix.
std::vector<BehaviourTerm> factor_common_tails(std::vector<BehaviourTerm> summands) {
  std::map<BehaviourTerm, std::vector<BehaviourTerm>> prefixes_by_tail;
  std::vector<BehaviourTerm> out;
  for (auto& s : summands) {
    if (s.is(BK::Seq)) {
      auto c = s.children();
      prefixes_by_tail[c.back()].push_back(seq_of({c.begin(), c.end() - 1}));
    } else {
      out.push_back(std::move(s));
    }
  }
  for (auto& [tail, prefixes] : prefixes_by_tail) {
    if (prefixes.size() == 1) {
      out.push_back(normalize_seq_like(BK::Seq, std::vector{prefixes.front(), tail}));
    } else {
      auto head = normalize_choice(prefixes);
      out.push_back(normalize_seq_like(BK::Seq, std::vector{head, tail}));
    }
  }
  return out;
}

BehaviourTerm normalize_choice(std::span<const BehaviourTerm> children) {
  std::vector<BehaviourTerm> parts;
  for (const auto& c : children) flatten_into(parts, normalize(c), BK::Choice);
  std::erase_if(parts, [](const auto& t) { return t.is(BK::Zero); });
  sort_unique(parts);
  parts = factor_common_tails(std::move(parts));
  sort_unique(parts);
  if (parts.empty()) return BehaviourTerm::zero();
  if (parts.size() == 1) return std::move(parts.front());
  return BehaviourTerm::choice(std::move(parts));
}

void collect_atoms(const BehaviourTerm& t, AtomSet& out) {
  if (t.is(BK::Atom)) out.insert(t.name());
  for (const auto& c : t.children()) collect_atoms(c, out);
}

void require_supported(const BehaviourTerm& t) {
  switch (t.kind()) {
    case BK::Par:
      throw UnsupportedTerm("stimulus action on concurrent composition is not supported: " + to_string(t));
    case BK::IterSeq:
    case BK::IterPar:
      throw UnsupportedTerm("stimulus action on iteration is not supported: " + to_string(t));
    default:
      for (const auto& c : t.children()) require_supported(c);
  }
}

// `term` is normalized and `stimulus` is an atom name.
BehaviourTerm step_atomic(const StimulusResponse& tables, const BehaviourTerm& term, const std::string& stimulus) {
  switch (term.kind()) {
    case BK::Zero:
    case BK::One:
      return term;
    case BK::Atom:
      return BehaviourTerm::atom(tables.next_behaviour(term.name(), stimulus));
    case BK::Choice: {
      std::vector<BehaviourTerm> parts;
      for (const auto& c : term.children()) parts.push_back(step_atomic(tables, c, stimulus));
      return normalize(BehaviourTerm::choice(std::move(parts)));
    }
    case BK::Seq: {
      auto c = term.children();
      const BehaviourTerm& head = c.front();
      std::vector<BehaviourTerm> rest(c.begin() + 1, c.end());
      if (head.is(BK::Choice)) {
        std::vector<BehaviourTerm> parts;
        for (const auto& alt : head.children()) {
          std::vector<BehaviourTerm> branch{alt};
          branch.insert(branch.end(), rest.begin(), rest.end());
          parts.push_back(step_atomic(tables, normalize(BehaviourTerm::seq(std::move(branch))), stimulus));
        }
        return normalize(BehaviourTerm::choice(std::move(parts)));
      }
      if (!head.is(BK::Atom)) throw UnsupportedTerm("unexpected sequence head in " + to_string(term));
      auto next_head = BehaviourTerm::atom(tables.next_behaviour(head.name(), stimulus));
      auto tail = seq_of(std::move(rest));
      auto out = tables.next_stimulus(head.name(), stimulus);
      auto next_tail = out ? step_atomic(tables, tail, *out) : tail;
      return normalize(BehaviourTerm::seq({std::move(next_head), std::move(next_tail)}));
    }
    default:
      throw UnsupportedTerm("stimulus action is not supported on " + to_string(term));
  }
}

// ---- text syntax ----------------------------------------------------------

class BehaviourParser {
 public:
  explicit BehaviourParser(std::string_view text) : in_(text) {}

  BehaviourTerm parse() {
    auto t = choice();
    in_.skip_space();
    if (!in_.eof()) in_.fail(std::string("unexpected '") + in_.peek() + "' in behaviour term");
    return t;
  }

 private:
  bool accept(char c) {
    in_.skip_space();
    if (in_.peek() != c) return false;
    in_.get();
    return true;
  }

  BehaviourTerm choice() {
    std::vector<BehaviourTerm> parts{par()};
    while (accept('+')) parts.push_back(par());
    return parts.size() == 1 ? std::move(parts.front()) : BehaviourTerm::choice(std::move(parts));
  }

  BehaviourTerm par() {
    std::vector<BehaviourTerm> parts{seq()};
    while (accept('*')) parts.push_back(seq());
    return parts.size() == 1 ? std::move(parts.front()) : BehaviourTerm::par(std::move(parts));
  }

  BehaviourTerm seq() {
    std::vector<BehaviourTerm> parts{postfix()};
    while (accept(';')) parts.push_back(postfix());
    return parts.size() == 1 ? std::move(parts.front()) : BehaviourTerm::seq(std::move(parts));
  }

  BehaviourTerm postfix() {
    auto t = primary();
    while (accept('^')) {
      if (in_.accept(";")) {
        t = BehaviourTerm::iter_seq(std::move(t));
      } else if (in_.accept("*")) {
        t = BehaviourTerm::iter_par(std::move(t));
      } else {
        in_.fail("expected ';' or '*' after '^'");
      }
    }
    return t;
  }

  BehaviourTerm primary() {
    in_.skip_space();
    if (accept('(')) {
      auto t = choice();
      if (!accept(')')) in_.fail("expected ')'");
      return t;
    }
    char c = in_.peek();
    if (c == '0' || c == '1') {
      in_.get();
      if (detail::is_ident_char(in_.peek())) in_.fail("identifiers cannot start with a digit");
      return c == '0' ? BehaviourTerm::zero() : BehaviourTerm::one();
    }
    if (!detail::is_ident_start(c)) {
      in_.fail(in_.eof() ? std::string("unexpected end of behaviour term")
                         : std::string("unexpected '") + c + "' in behaviour term");
    }
    return BehaviourTerm::atom(in_.read_identifier());
  }

  detail::TextCursor in_;
};

class StimulusParser {
 public:
  explicit StimulusParser(std::string_view text) : in_(text) {}

  StimulusTerm parse() {
    auto t = oplus();
    in_.skip_space();
    if (!in_.eof()) in_.fail(std::string("unexpected '") + in_.peek() + "' in stimulus term");
    return t;
  }

 private:
  bool accept(char c) {
    in_.skip_space();
    if (in_.peek() != c) return false;
    in_.get();
    return true;
  }

  StimulusTerm oplus() {
    std::vector<StimulusTerm> parts{odot()};
    while (accept('+')) parts.push_back(odot());
    return parts.size() == 1 ? std::move(parts.front()) : StimulusTerm::oplus(std::move(parts));
  }

  StimulusTerm odot() {
    std::vector<StimulusTerm> parts{primary()};
    while (accept('.')) parts.push_back(primary());
    return parts.size() == 1 ? std::move(parts.front()) : StimulusTerm::odot(std::move(parts));
  }

  StimulusTerm primary() {
    in_.skip_space();
    if (accept('(')) {
      auto t = oplus();
      if (!accept(')')) in_.fail("expected ')'");
      return t;
    }
    char c = in_.peek();
    if (c == '0' || c == '1') {
      in_.get();
      return c == '0' ? StimulusTerm::deactivation() : StimulusTerm::neutral();
    }
    if (!detail::is_ident_start(c)) in_.fail("expected a stimulus");
    return StimulusTerm::atom(in_.read_identifier());
  }

  detail::TextCursor in_;
};

int precedence(BK k) {
  switch (k) {
    case BK::Choice: return 1;
    case BK::Par: return 2;
    case BK::Seq: return 3;
    case BK::IterSeq:
    case BK::IterPar: return 4;
    default: return 5;
  }
}

void render(const BehaviourTerm& t, std::string& out) {
  auto child = [&](const BehaviourTerm& c, bool wrap) {
    if (wrap) out += '(';
    render(c, out);
    if (wrap) out += ')';
  };
  switch (t.kind()) {
    case BK::Zero: out += '0'; return;
    case BK::One: out += '1'; return;
    case BK::Atom: out += t.name(); return;
    case BK::IterSeq:
    case BK::IterPar:
      child(t.children().front(), precedence(t.children().front().kind()) < 4);
      out += t.is(BK::IterSeq) ? "^;" : "^*";
      return;
    default: break;
  }
  if (t.children().empty()) {
    out += t.is(BK::Choice) ? "0" : "1";
    return;
  }
  const char* sep = t.is(BK::Choice) ? " + " : t.is(BK::Par) ? " * " : ";";
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += sep;
    first = false;
    child(c, precedence(c.kind()) <= precedence(t.kind()));
  }
}

void render(const StimulusTerm& t, std::string& out) {
  switch (t.kind()) {
    case SK::Deactivation: out += '0'; return;
    case SK::Neutral: out += '1'; return;
    case SK::Atom: out += t.name(); return;
    default: break;
  }
  const char* sep = t.is(SK::OPlus) ? " + " : ".";
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += sep;
    first = false;
    bool wrap = c.is(SK::OPlus) || (t.is(SK::ODot) && c.is(SK::ODot));
    if (wrap) out += '(';
    render(c, out);
    if (wrap) out += ')';
  }
}

}  // namespace

bool operator==(const BehaviourTerm& a, const BehaviourTerm& b) { return compare_nodes(a, b) == 0; }
std::strong_ordering operator<=>(const BehaviourTerm& a, const BehaviourTerm& b) { return compare_nodes(a, b); }
bool operator==(const StimulusTerm& a, const StimulusTerm& b) { return compare_nodes(a, b) == 0; }
std::strong_ordering operator<=>(const StimulusTerm& a, const StimulusTerm& b) { return compare_nodes(a, b); }

BehaviourTerm normalize(const BehaviourTerm& term) {
  switch (term.kind()) {
    case BK::Zero:
    case BK::One:
    case BK::Atom:
      return term;
    case BK::Choice:
      return normalize_choice(term.children());
    case BK::Seq:
    case BK::Par:
      return normalize_seq_like(term.kind(), term.children());
    case BK::IterSeq:
    case BK::IterPar: {
      auto body = normalize(term.children().front());
      if (body.is(BK::Zero) || body.is(BK::One)) return BehaviourTerm::one();
      return term.is(BK::IterSeq) ? BehaviourTerm::iter_seq(std::move(body)) : BehaviourTerm::iter_par(std::move(body));
    }
  }
  return term;
}

StimulusTerm normalize(const StimulusTerm& term) {
  switch (term.kind()) {
    case SK::Deactivation:
    case SK::Neutral:
    case SK::Atom:
      return term;
    case SK::OPlus: {
      std::vector<StimulusTerm> parts;
      for (const auto& c : term.children()) flatten_into(parts, normalize(c), SK::OPlus);
      std::erase_if(parts, [](const auto& t) { return t.is(SK::Deactivation); });
      sort_unique(parts);
      if (parts.empty()) return StimulusTerm::deactivation();
      if (parts.size() == 1) return std::move(parts.front());
      return StimulusTerm::oplus(std::move(parts));
    }
    case SK::ODot: {
      std::vector<StimulusTerm> parts;
      for (const auto& c : term.children()) flatten_into(parts, normalize(c), SK::ODot);
      if (std::any_of(parts.begin(), parts.end(), [](const auto& t) { return t.is(SK::Deactivation); })) {
        return StimulusTerm::deactivation();
      }
      std::erase_if(parts, [](const auto& t) { return t.is(SK::Neutral); });
      if (parts.empty()) return StimulusTerm::neutral();
      if (parts.size() == 1) return std::move(parts.front());
      return StimulusTerm::odot(std::move(parts));
    }
  }
  return term;
}

AtomSet atoms_of(const BehaviourTerm& term) {
  AtomSet out;
  collect_atoms(term, out);
  return out;
}

AtomSet atomic_sub_behaviours(const BehaviourTerm& agent_term) { return atoms_of(agent_term); }

bool is_sub_stimulus(const StimulusTerm& s, const StimulusTerm& t) {
  return normalize(StimulusTerm::oplus({s, t})) == normalize(t);
}

BehaviourTerm step_behaviour(const StimulusResponse& tables, const BehaviourTerm& term, const StimulusTerm& stimulus) {
  require_supported(term);
  auto s = normalize(stimulus);
  switch (s.kind()) {
    case SK::Neutral:
      return normalize(term);
    case SK::Deactivation:
      return BehaviourTerm::zero();
    case SK::Atom:
      return step_atomic(tables, normalize(term), s.name());
    case SK::OPlus: {
      std::vector<BehaviourTerm> parts;
      for (const auto& c : s.children()) parts.push_back(step_behaviour(tables, term, c));
      return normalize(BehaviourTerm::choice(std::move(parts)));
    }
    case SK::ODot: {
      // a o (s (.) t) = (a o t) o s
      auto result = normalize(term);
      auto parts = s.children();
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) result = step_behaviour(tables, result, *it);
      return result;
    }
  }
  return normalize(term);
}

BehaviourTerm parse_behaviour_term(std::string_view text) { return BehaviourParser(text).parse(); }
StimulusTerm parse_stimulus_term(std::string_view text) { return StimulusParser(text).parse(); }

std::string to_string(const BehaviourTerm& term) {
  std::string out;
  render(term, out);
  return out;
}

std::string to_string(const StimulusTerm& term) {
  std::string out;
  render(term, out);
  return out;
}

}  // namespace c2ka
