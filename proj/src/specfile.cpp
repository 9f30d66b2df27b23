#include "c2ka/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "c2ka/error.hpp"
#include "text_cursor.hpp"

namespace c2ka {

std::string to_string(const Diagnostic& d) {
  std::string out = d.severity == Diagnostic::Severity::Error ? "error" : "warning";
  if (d.line) out += " (line " + std::to_string(d.line) + ")";
  return out + ": " + d.code + ": " + d.message;
}

namespace {

const std::set<std::string> kSections{"system", "stimuli", "behaviours", "behaviors", "agents",
                                      "agent",  "next",    "program",    "intended"};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : in_(text) {}

  SystemSpec parse() {
    for (;;) {
      space();
      if (in_.eof()) break;
      std::string kw = word("a section keyword");
      if (kw == "system") {
        spec_.name = word("a system name");
      } else if (kw == "stimuli") {
        list(spec_.stimuli);
      } else if (kw == "behaviours" || kw == "behaviors") {
        list(spec_.behaviours);
      } else if (kw == "agents") {
        list(spec_.agent_list);
      } else if (kw == "agent") {
        agent();
      } else if (kw == "next") {
        next_block();
      } else if (kw == "program") {
        program();
      } else if (kw == "intended") {
        intended();
      } else {
        fail_at(kw, "unknown section '" + kw + "'");
      }
    }
    return std::move(spec_);
  }

 private:
  void space() { in_.skip_space(true); }

  [[noreturn]] void fail_at(const std::string& token, const std::string& message) {
    throw SyntaxError(message, in_.line(), in_.column() - token.size());
  }

  std::string word(const char* what) {
    space();
    if (!detail::is_ident_start(in_.peek())) {
      in_.fail(in_.eof() ? std::string("expected ") + what + " before end of input"
                         : std::string("expected ") + what);
    }
    return in_.read_identifier();
  }

  void expect(std::string_view s) {
    space();
    if (!in_.accept(s)) in_.fail("expected '" + std::string(s) + "'");
  }

  bool accept(std::string_view s) {
    space();
    return in_.accept(s);
  }

  void list(std::vector<std::pair<std::string, std::size_t>>& out) {
    for (;;) {
      if (accept(",")) continue;
      space();
      if (!detail::is_ident_start(in_.peek())) return;
      auto saved = in_;
      std::size_t line = in_.line();
      std::string name = in_.read_identifier();
      if (kSections.contains(name)) {
        in_ = saved;
        return;
      }
      out.emplace_back(std::move(name), line);
    }
  }

  // Raw text up to the closing brace of the current block.
  std::string raw_block(std::size_t& line, std::size_t& column) {
    space();
    line = in_.line();
    column = in_.column();
    std::string text;
    while (!in_.eof() && in_.peek() != '}') {
      if (in_.peek() == '#') {
        while (!in_.eof() && in_.peek() != '\n') in_.get();
        continue;
      }
      text.push_back(in_.get());
    }
    if (in_.eof()) in_.fail("missing '}'");
    in_.get();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
  }

  void agent() {
    SystemSpec::Agent a;
    a.line = in_.line();
    a.name = word("an agent name");
    bool bracket = accept("[");
    space();
    if (in_.starts_with("index")) {
      word("'index'");
      expect("=");
      space();
      if (!std::isdigit(static_cast<unsigned char>(in_.peek()))) in_.fail("expected an integer index");
      int n = 0;
      while (std::isdigit(static_cast<unsigned char>(in_.peek()))) n = n * 10 + (in_.get() - '0');
      a.index = n;
    }
    if (bracket) expect("]");
    expect("{");
    std::string key = word("'behaviour'");
    if (key != "behaviour" && key != "behavior") fail_at(key, "expected 'behaviour'");
    expect("=");
    std::size_t line = 0, column = 0;
    a.term = raw_block(line, column);
    spec_.agents.push_back(std::move(a));
  }

  void next_block() {
    std::string scope;
    space();
    if (in_.peek() != '{') scope = word("an agent name or '{'");
    expect("{");
    for (;;) {
      if (accept("}")) return;
      SystemSpec::Next e;
      e.agent = scope;
      space();
      e.line = in_.line();
      e.behaviour = word("a behaviour");
      expect("@");
      e.stimulus = word("a stimulus");
      expect("->");
      e.next = word("a behaviour");
      if (accept("/")) e.output = word("a stimulus");
      spec_.next_entries.push_back(std::move(e));
    }
  }

  void program() {
    SystemSpec::ProgramText p;
    p.behaviour = word("a behaviour");
    expect("{");
    p.text = raw_block(p.line, p.column);
    spec_.programs.push_back(std::move(p));
  }

  void intended() {
    expect("{");
    for (;;) {
      if (accept("}")) return;
      SystemSpec::Path path;
      space();
      path.line = in_.line();
      path.text = word("an agent name");
      bool edge = false;
      for (;;) {
        space();
        if (in_.starts_with("-S->") || in_.starts_with("-E->")) {
          path.text += std::string(" ") + std::string(in_.text().substr(in_.pos(), 4)) + " ";
          in_.accept(in_.starts_with("-S->") ? "-S->" : "-E->");
          path.text += word("an agent name");
          edge = true;
        } else {
          break;
        }
      }
      if (!edge) in_.fail("intended path without an edge");
      spec_.intended.push_back(std::move(path));
    }
  }

  detail::TextCursor in_;
  SystemSpec spec_;
};

}  // namespace

SystemSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

// ---- compiled model --------------------------------------------------------

std::string AgentModel::next_behaviour(const std::string& behaviour, const std::string& stimulus) const {
  auto it = next_.find({behaviour, stimulus});
  return it == next_.end() ? behaviour : it->second;
}

std::optional<std::string> AgentModel::next_stimulus(const std::string& behaviour, const std::string& stimulus) const {
  auto it = out_.find({behaviour, stimulus});
  if (it == out_.end()) return std::nullopt;
  return it->second;
}

namespace {
const gcl::Program kEmptyProgram;
const gcl::VarSet kEmptyVars;
}  // namespace

const gcl::Program& AgentModel::program(const std::string& atom) const {
  auto it = programs_.find(atom);
  return it == programs_.end() ? kEmptyProgram : it->second;
}

const gcl::VarSet& AgentModel::def(const std::string& atom) const {
  auto it = def_.find(atom);
  return it == def_.end() ? kEmptyVars : it->second;
}

const gcl::VarSet& AgentModel::ref(const std::string& atom) const {
  auto it = ref_.find(atom);
  return it == ref_.end() ? kEmptyVars : it->second;
}

std::vector<std::string> SystemModel::agent_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : agents_) out.push_back(name);
  return out;
}

const AgentModel& SystemModel::agent(const std::string& name) const {
  auto it = agents_.find(name);
  if (it == agents_.end()) throw Error("unknown agent '" + name + "'");
  return it->second;
}

class ModelBuilder {
 public:
  explicit ModelBuilder(const SystemSpec& spec) : spec_(spec) {}

  CompileResult run() {
    model_.name_ = spec_.name;
    declare_symbols();
    build_agents();
    build_tables();
    build_programs();
    build_intended();
    CompileResult result;
    result.diagnostics = std::move(diags_);
    bool failed = std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                              [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::Error; });
    if (!failed) result.model = std::move(model_);
    return result;
  }

 private:
  void error(std::string code, std::string message, std::size_t line) {
    diags_.push_back({Diagnostic::Severity::Error, std::move(code), std::move(message), line});
  }

  void declare(const std::vector<std::pair<std::string, std::size_t>>& names, std::set<std::string>& into,
               std::vector<std::string>* ordered, const char* kind) {
    for (const auto& [name, line] : names) {
      if (!into.insert(name).second) {
        error("DuplicateSymbol", std::string(kind) + " '" + name + "' declared twice", line);
      } else if (ordered) {
        ordered->push_back(name);
      }
    }
  }

  void declare_symbols() {
    declare(spec_.stimuli, stimuli_, &model_.stimuli_, "stimulus");
    declare(spec_.behaviours, behaviours_, &model_.behaviours_, "behaviour");
    declare(spec_.agent_list, listed_agents_, nullptr, "agent");
    for (const auto& name : listed_agents_) {
      if (stimuli_.contains(name) || behaviours_.contains(name)) {
        error("AmbiguousSymbol", "agent name '" + name + "' is also declared as a stimulus or behaviour", 0);
      }
    }
  }

  void build_agents() {
    for (const auto& decl : spec_.agents) {
      if (model_.agents_.contains(decl.name)) {
        error("DuplicateSymbol", "agent '" + decl.name + "' defined twice", decl.line);
        continue;
      }
      if (!spec_.agent_list.empty() && !listed_agents_.contains(decl.name)) {
        error("UnknownSymbol", "agent '" + decl.name + "' is not listed under 'agents'", decl.line);
      }
      AgentModel a;
      a.name_ = decl.name;
      a.index_ = decl.index;
      try {
        a.term_ = normalize(parse_behaviour_term(decl.term));
      } catch (const SyntaxError& e) {
        error("SyntaxError", "behaviour of agent '" + decl.name + "': " + e.message(), decl.line);
        continue;
      }
      a.atoms_ = atoms_of(a.term_);
      for (const auto& atom : a.atoms_) {
        if (!behaviours_.contains(atom)) {
          error("UnknownSymbol", "agent '" + decl.name + "' uses undeclared behaviour '" + atom + "'", decl.line);
        }
      }
      model_.agents_.emplace(decl.name, std::move(a));
    }
    for (const auto& [name, line] : spec_.agent_list) {
      if (!model_.agents_.contains(name)) error("MissingAgent", "agent '" + name + "' has no definition", line);
    }
  }

  void build_tables() {
    std::map<std::pair<std::string, std::string>, std::size_t> first_line;
    for (const auto& e : spec_.next_entries) {
      bool ok = true;
      auto check = [&](const std::string& name, const std::set<std::string>& known, const char* kind) {
        if (!known.contains(name)) {
          error("UnknownSymbol", std::string("undeclared ") + kind + " '" + name + "' in next entry", e.line);
          ok = false;
        }
      };
      check(e.behaviour, behaviours_, "behaviour");
      check(e.stimulus, stimuli_, "stimulus");
      check(e.next, behaviours_, "behaviour");
      if (e.output) check(*e.output, stimuli_, "stimulus");
      if (!e.agent.empty() && !model_.agents_.contains(e.agent)) {
        error("UnknownSymbol", "next block for undefined agent '" + e.agent + "'", e.line);
        ok = false;
      }
      if (!ok) continue;
      for (auto& [name, agent] : model_.agents_) {
        if (!e.agent.empty() && e.agent != name) continue;
        insert_entry(agent, e);
      }
    }
    for (auto& [name, agent] : model_.agents_) {
      AtomSet& reach = agent.reachable_;
      std::vector<std::string> work(agent.atoms_.begin(), agent.atoms_.end());
      while (!work.empty()) {
        std::string a = work.back();
        work.pop_back();
        if (!reach.insert(a).second) continue;
        for (const auto& [key, next] : agent.next_) {
          if (key.first == a) work.push_back(next);
        }
      }
    }
  }

  void insert_entry(AgentModel& agent, const SystemSpec::Next& e) {
    auto key = std::make_pair(e.behaviour, e.stimulus);
    auto value = std::make_pair(e.next, e.output);
    auto [it, fresh] = entries_[agent.name_].emplace(key, value);
    if (!fresh) {
      if (it->second != value) {
        error("ConflictingNext",
              "conflicting entries for (" + e.behaviour + ", " + e.stimulus + ") in agent '" + agent.name_ + "'",
              e.line);
      }
      return;
    }
    if (e.next != e.behaviour) agent.next_[key] = e.next;
    if (e.output) agent.out_[key] = *e.output;
  }

  void build_programs() {
    std::map<std::string, const SystemSpec::ProgramText*> texts;
    for (const auto& p : spec_.programs) {
      if (!behaviours_.contains(p.behaviour)) {
        error("UnknownSymbol", "program for undeclared behaviour '" + p.behaviour + "'", p.line);
        continue;
      }
      if (!texts.emplace(p.behaviour, &p).second) {
        error("DuplicateSymbol", "second program for behaviour '" + p.behaviour + "'", p.line);
      }
    }
    static const std::regex placeholder(R"(\[\s*i\s*\])");
    std::map<std::string, std::string> syntax_reported;
    for (auto& [name, agent] : model_.agents_) {
      for (const auto& atom : agent.reachable_) {
        auto it = texts.find(atom);
        if (it == texts.end()) continue;
        const auto& p = *it->second;
        std::string text = p.text;
        if (std::regex_search(text, placeholder)) {
          if (!agent.index_) {
            error("UnboundIndex",
                  "program of '" + atom + "' uses [i] but agent '" + name + "' declares no index", p.line);
            continue;
          }
          text = std::regex_replace(text, placeholder, "[" + std::to_string(*agent.index_) + "]");
        }
        try {
          auto prog = gcl::parse_program(text, stimuli_);
          agent.def_[atom] = gcl::def_vars(prog);
          agent.ref_[atom] = gcl::ref_vars(prog);
          agent.programs_[atom] = std::move(prog);
        } catch (const SyntaxError& e) {
          if (syntax_reported.emplace(atom, e.message()).second) {
            std::size_t line = p.line + (e.line() ? e.line() - 1 : 0);
            error(dynamic_cast<const UnknownConstruct*>(&e) ? "UnknownConstruct" : "SyntaxError",
                  "program of '" + atom + "': " + e.message(), line);
          }
        }
      }
    }
  }

  void build_intended() {
    for (const auto& path : spec_.intended) {
      try {
        auto p = parse_interaction(path.text);
        bool ok = true;
        for (const auto& a : p.agents) {
          if (!model_.agents_.contains(a)) {
            error("UnknownSymbol", "intended path names undefined agent '" + a + "'", path.line);
            ok = false;
          }
        }
        if (ok) model_.intended_.push_back(std::move(p));
      } catch (const SyntaxError& e) {
        error("SyntaxError", "intended path: " + e.message(), path.line);
      }
    }
  }

  const SystemSpec& spec_;
  SystemModel model_;
  std::set<std::string> stimuli_, behaviours_, listed_agents_;
  std::map<std::string, std::map<std::pair<std::string, std::string>,
                                  std::pair<std::string, std::optional<std::string>>>>
      entries_;
  std::vector<Diagnostic> diags_;
};

CompileResult compile(const SystemSpec& spec) { return ModelBuilder(spec).run(); }

std::vector<Diagnostic> lint(const SystemModel& model) {
  std::vector<Diagnostic> out;
  auto warn = [&](std::string code, std::string message) {
    out.push_back({Diagnostic::Severity::Warning, std::move(code), std::move(message), 0});
  };
  std::set<std::string> used_behaviours, used_stimuli;
  for (const auto& [name, agent] : model.agents()) {
    for (const auto& a : agent.reachable_atoms()) {
      used_behaviours.insert(a);
      for (const auto& s : model.stimuli()) {
        auto next = agent.next_behaviour(a, s);
        auto outp = agent.next_stimulus(a, s);
        if (next != a) used_stimuli.insert(s);
        if (outp) used_stimuli.insert(*outp);
        if (next == a && outp) {
          warn("AssumptionViolated", "agent '" + name + "': " + a + " is unchanged by " + s + " but emits " + *outp);
        }
      }
    }
  }
  for (const auto& b : model.behaviours()) {
    if (!used_behaviours.contains(b)) warn("UnreachableAtom", "behaviour '" + b + "' is not reachable from any agent");
  }
  for (const auto& s : model.stimuli()) {
    if (!used_stimuli.contains(s)) warn("UnusedStimulus", "stimulus '" + s + "' is never emitted and never influences");
  }
  return out;
}

SystemModel load_model(std::string_view text) {
  auto result = compile(parse_spec(text));
  if (!result.ok()) {
    std::string message = "specification does not compile";
    for (const auto& d : result.diagnostics) {
      if (d.severity == Diagnostic::Severity::Error) message += "\n  " + to_string(d);
    }
    throw Error(message);
  }
  return std::move(*result.model);
}

SystemModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

}  // namespace c2ka
