#include "c2ka/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "c2ka/error.hpp"

namespace c2ka {

using ojson = nlohmann::ordered_json;

Report build_report(AttackAnalyzer& analyzer, const ReportOptions& options) {
  Report r;
  r.system = analyzer.model().name();
  r.max_len = options.filter.max_len;
  IntendedSet intended(analyzer.model().intended());
  for (const auto& p : enumerate_interactions(analyzer.graph(), options.filter)) {
    ++r.total;
    auto cls = classify(p, intended);
    if (cls == Classification::Implicit) ++r.implicit;
    if (options.implicit_only && cls != Classification::Implicit) continue;
    ReportRow row;
    row.path = p;
    row.classification = cls;
    auto attack = analyzer.attack_scenarios(p);
    row.attack_kind = attack.kind;
    row.attack = attack.members();
    row.trivial_only = attack.trivial_only;
    auto e = exploitability(analyzer, p);
    row.exploitability = e.value;
    row.decimal3 = e.decimal3;
    r.rows.push_back(std::move(row));
  }
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < r.rows.size(); ++i) keyed.emplace_back(to_string(r.rows[i].path), i);
  std::sort(keyed.begin(), keyed.end());
  if (options.sort == ReportSort::Exploitability) {
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      return r.rows[a.second].exploitability > r.rows[b.second].exploitability;
    });
  }
  std::vector<ReportRow> sorted;
  for (const auto& [_, i] : keyed) {
    sorted.push_back(std::move(r.rows[i]));
    sorted.back().id = sorted.size();
  }
  r.rows = std::move(sorted);
  return r;
}

namespace {

std::string braced(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::string attack_cell(const ReportRow& row) {
  std::string out = braced(row.attack);
  if (row.trivial_only) out += " (deactivation only)";
  return out;
}

std::string convention(const Report& r) {
  return "simple paths, max_len " + (r.max_len ? std::to_string(*r.max_len) : std::string("none")) +
         ", intended = contiguous subpaths of declared paths";
}

}  // namespace

std::string render_text(const Report& r) {
  std::vector<std::vector<std::string>> cells{{"id", "interaction", "class", "attack", "E"}};
  for (const auto& row : r.rows) {
    cells.push_back({"p" + std::to_string(row.id), to_string(row.path), to_string(row.classification),
                     attack_cell(row), row.decimal3});
  }
  std::vector<std::size_t> width(5, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out = "system " + r.system + "\nconvention: " + convention(r) + "\n";
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out += text + "\n";
  }
  out += "total=" + std::to_string(r.total) + " implicit=" + std::to_string(r.implicit) + "\n";
  return out;
}

std::string render_csv(const Report& r) {
  std::string out = "id,interaction,attack_scenarios,exploitability\n";
  for (const auto& row : r.rows) {
    std::string attack;
    for (std::size_t i = 0; i < row.attack.size(); ++i) attack += (i ? ";" : "") + row.attack[i];
    out += "p" + std::to_string(row.id) + "," + to_string(row.path) + "," + attack + "," + row.decimal3 + "\n";
  }
  return out;
}

std::string render_json(const Report& r) {
  ojson doc;
  doc["system"] = r.system;
  doc["generated_with_convention"] = {
      {"simple_paths", true},
      {"max_len", r.max_len ? ojson(*r.max_len) : ojson(nullptr)},
      {"intended_coverage", "contiguous_subpath"},
  };
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson path = ojson::array();
    for (std::size_t i = 0; i < row.path.agents.size(); ++i) {
      ojson step = {{"agent", row.path.agents[i]}};
      step["edge"] = i < row.path.edges.size() ? ojson(std::string(1, edge_letter(row.path.edges[i]))) : ojson(nullptr);
      path.push_back(step);
    }
    rows.push_back({
        {"id", row.id},
        {"path", path},
        {"classification", to_string(row.classification)},
        {"attack_kind", to_string(row.attack_kind)},
        {"attack", row.attack},
        {"exploitability", {{"num", row.exploitability.num()}, {"den", row.exploitability.den()},
                            {"decimal", row.decimal3}}},
        {"trivial_only", row.trivial_only},
    });
  }
  doc["rows"] = rows;
  doc["summary"] = {{"total", r.total}, {"implicit", r.implicit}};
  return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& json) {
  try {
    auto doc = ojson::parse(json);
    Report r;
    r.system = doc.at("system").get<std::string>();
    const auto& conv = doc.at("generated_with_convention");
    if (!conv.at("max_len").is_null()) r.max_len = conv.at("max_len").get<std::size_t>();
    for (const auto& j : doc.at("rows")) {
      ReportRow row;
      row.id = j.at("id").get<std::size_t>();
      for (const auto& step : j.at("path")) {
        row.path.agents.push_back(step.at("agent").get<std::string>());
        if (!step.at("edge").is_null()) {
          row.path.edges.push_back(step.at("edge").get<std::string>() == "S" ? EdgeType::Stimuli
                                                                           : EdgeType::Environment);
        }
      }
      auto cls = j.at("classification").get<std::string>();
      row.classification = cls == "intended" ? Classification::Intended : Classification::Implicit;
      auto kind = j.at("attack_kind").get<std::string>();
      row.attack_kind = kind == "stimuli"     ? AttackKind::Stimuli
                        : kind == "variables" ? AttackKind::Variables
                                              : AttackKind::Empty;
      row.attack = j.at("attack").get<std::vector<std::string>>();
      const auto& e = j.at("exploitability");
      row.exploitability = Fraction(e.at("num").get<std::uint64_t>(), e.at("den").get<std::uint64_t>());
      row.decimal3 = e.at("decimal").get<std::string>();
      row.trivial_only = j.at("trivial_only").get<bool>();
      r.rows.push_back(std::move(row));
    }
    r.total = doc.at("summary").at("total").get<std::size_t>();
    r.implicit = doc.at("summary").at("implicit").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace c2ka
