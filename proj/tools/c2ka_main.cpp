// c2ka: command-line front end for the interaction analysis.
//
//   c2ka validate SPEC
//   c2ka report SPEC [--from A] [--to B] [--max-len N] [--implicit-only]
//                    [--format text|json|csv] [--sort path|exploitability]
//   c2ka analyze SPEC --path "A -S-> B -E-> C"
//   c2ka graph SPEC
//
// Exit status: 0 success, 1 analysis or validation failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "c2ka/error.hpp"
#include "c2ka/exploit.hpp"
#include "c2ka/report.hpp"
#include "c2ka/specfile.hpp"
#include "c2ka/topology.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

c2ka::SystemModel load(const std::string& path) { return c2ka::load_model(read_file(path)); }

int cmd_validate(const std::string& path) {
  auto text = read_file(path);
  c2ka::CompileResult result;
  try {
    result = c2ka::compile(c2ka::parse_spec(text));
  } catch (const c2ka::SyntaxError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 1;
  }
  for (const auto& d : result.diagnostics) std::cerr << path << ": " << c2ka::to_string(d) << "\n";
  if (!result.ok()) return 1;
  for (const auto& d : c2ka::lint(*result.model)) std::cerr << path << ": " << c2ka::to_string(d) << "\n";
  const auto& m = *result.model;
  std::cout << m.name() << ": " << m.agents().size() << " agents, " << m.stimuli().size() << " stimuli, "
            << m.behaviours().size() << " behaviours, " << m.intended().size() << " intended paths\n";
  return 0;
}

void require_agent(const c2ka::SystemModel& m, const std::string& name, const char* flag) {
  if (!m.has_agent(name)) throw UsageError(std::string(flag) + ": unknown agent '" + name + "'");
}

struct ReportArgs {
  std::string from, to, format = "text", sort = "path";
  std::size_t max_len = 0;
  bool implicit_only = false;
};

int cmd_report(const std::string& path, const ReportArgs& args) {
  auto model = load(path);
  c2ka::ReportOptions opts;
  if (!args.from.empty()) {
    require_agent(model, args.from, "--from");
    opts.filter.from = args.from;
  }
  if (!args.to.empty()) {
    require_agent(model, args.to, "--to");
    opts.filter.to = args.to;
  }
  if (args.max_len) opts.filter.max_len = args.max_len;
  opts.implicit_only = args.implicit_only;
  opts.sort = args.sort == "exploitability" ? c2ka::ReportSort::Exploitability : c2ka::ReportSort::Path;
  c2ka::AttackAnalyzer analyzer(model);
  auto report = c2ka::build_report(analyzer, opts);
  if (args.format == "json") {
    std::cout << c2ka::render_json(report);
  } else if (args.format == "csv") {
    std::cout << c2ka::render_csv(report);
  } else {
    std::cout << c2ka::render_text(report);
  }
  return 0;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

int cmd_analyze(const std::string& path, const std::string& literal) {
  auto model = load(path);
  c2ka::Interaction p;
  try {
    p = c2ka::parse_interaction(literal);
  } catch (const c2ka::SyntaxError& e) {
    throw UsageError(std::string("--path: ") + e.what());
  }
  for (const auto& a : p.agents) require_agent(model, a, "--path");
  c2ka::AttackAnalyzer analyzer(model);
  auto attack = analyzer.attack_scenarios(p);
  auto e = c2ka::exploitability(analyzer, p);
  std::cout << "interaction     " << c2ka::to_string(p) << "\n"
            << "classification  " << c2ka::to_string(c2ka::classify(p, model.intended())) << "\n"
            << "attack          " << c2ka::to_string(attack.kind) << " " << join(attack.members());
  if (attack.trivial_only) std::cout << " (deactivation only)";
  std::cout << "\n";
  for (std::size_t i = 0; i < e.steps.size(); ++i) {
    const auto& s = e.steps[i];
    std::cout << "step " << i + 1 << "          " << s.agent << " via " << c2ka::edge_letter(s.edge) << ": "
              << (s.edge == c2ka::EdgeType::Stimuli ? "infl" : "ref") << "(" << s.agent << ") = " << join(s.influencing)
              << ", attack = " << join(s.attack) << ", factor " << c2ka::to_string(s.factor) << "\n";
  }
  std::cout << "exploitability  " << c2ka::to_string(e.value) << " = " << e.decimal3 << "\n";
  return 0;
}

int cmd_graph(const std::string& path) {
  auto model = load(path);
  std::cout << c2ka::render_graph(c2ka::build_graph(model));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicit interaction and exploitability analysis for C2KA system specifications"};
  app.require_subcommand(1);

  std::string spec;
  auto* validate = app.add_subcommand("validate", "Check that a specification compiles; print lint warnings");
  validate->add_option("spec", spec, "Specification file")->required();

  ReportArgs rargs;
  auto* report = app.add_subcommand("report", "Analyse every interaction");
  report->add_option("spec", spec, "Specification file")->required();
  report->add_option("--from", rargs.from, "Source agent");
  report->add_option("--to", rargs.to, "Sink agent");
  report->add_option("--max-len", rargs.max_len, "Maximum number of edges")->check(CLI::PositiveNumber);
  report->add_flag("--implicit-only", rargs.implicit_only, "Only rows for implicit interactions");
  report->add_option("--format", rargs.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  report->add_option("--sort", rargs.sort, "Row order")->check(CLI::IsMember({"path", "exploitability"}));

  std::string literal;
  auto* analyze = app.add_subcommand("analyze", "Attack set and exploitability of one interaction");
  analyze->add_option("spec", spec, "Specification file")->required();
  analyze->add_option("--path", literal, "Interaction, e.g. \"A -S-> B -E-> C\"")->required();

  auto* graph = app.add_subcommand("graph", "Print the communication graph edges");
  graph->add_option("spec", spec, "Specification file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(spec);
    if (*report) return cmd_report(spec, rargs);
    if (*analyze) return cmd_analyze(spec, literal);
    if (*graph) return cmd_graph(spec);
  } catch (const UsageError& e) {
    std::cerr << "c2ka: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "c2ka: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
