#pragma once

// Whole-system reports: one row per enumerated interaction.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "c2ka/attack.hpp"
#include "c2ka/exploit.hpp"
#include "c2ka/topology.hpp"

namespace c2ka {

struct ReportRow {
  std::size_t id = 0;
  Interaction path;
  Classification classification = Classification::Implicit;
  AttackKind attack_kind = AttackKind::Empty;
  std::vector<std::string> attack;
  Fraction exploitability;
  std::string decimal3;
  bool trivial_only = false;
};

struct Report {
  std::string system;
  std::optional<std::size_t> max_len;
  std::vector<ReportRow> rows;
  std::size_t total = 0;     // enumerated interactions passing the path filter
  std::size_t implicit = 0;  // of those, the implicit ones
};

enum class ReportSort { Path, Exploitability };

struct ReportOptions {
  EnumerationFilter filter;
  bool implicit_only = false;
  ReportSort sort = ReportSort::Path;
};

Report build_report(AttackAnalyzer& analyzer, const ReportOptions& options = {});

std::string render_text(const Report& r);
/// Columns: id, interaction, attack_scenarios (semicolon-joined), exploitability.
std::string render_csv(const Report& r);
std::string render_json(const Report& r);
/// Inverse of render_json. Throws Error on malformed input.
Report report_from_json(const std::string& json);

}  // namespace c2ka
