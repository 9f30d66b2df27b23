#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "c2ka/specfile.hpp"

namespace test_support {

inline std::string data_path(const std::string& name) { return std::string(C2KA_SOURCE_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const c2ka::SystemModel& port_model() {
  static const c2ka::SystemModel model = c2ka::load_model_file(data_path("data/port_terminal.c2ka"));
  return model;
}

/// Spec text for a small random system: up to 4 agents, up to 3 atoms per
/// agent, up to 4 stimuli, random sparse tables and straight-line programs
/// over a shared pool of variables.
inline std::string random_spec(std::mt19937& rng, bool sequential_terms = true) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int n_agents = pick(2, 4);
  int n_stimuli = pick(1, 4);
  const int n_vars = 4;
  std::ostringstream out;
  out << "system R\nstimuli";
  for (int s = 0; s < n_stimuli; ++s) out << " s" << s;
  std::vector<std::vector<std::string>> atoms(n_agents);
  out << "\nbehaviours";
  for (int a = 0; a < n_agents; ++a) {
    int n_atoms = pick(1, 3);
    for (int k = 0; k < n_atoms; ++k) {
      atoms[a].push_back("b" + std::to_string(a) + "_" + std::to_string(k));
      out << " " << atoms[a].back();
    }
  }
  out << "\n";
  for (int a = 0; a < n_agents; ++a) {
    // Terms are choices of atoms and short sequences.
    std::string term;
    auto& as = atoms[a];
    std::vector<std::string> summands;
    std::size_t i = 0;
    while (i < as.size()) {
      if (sequential_terms && i + 1 < as.size() && pick(0, 1)) {
        summands.push_back(as[i] + ";" + as[i + 1]);
        i += 2;
      } else {
        summands.push_back(as[i]);
        ++i;
      }
    }
    for (std::size_t k = 0; k < summands.size(); ++k) term += (k ? " + " : "") + summands[k];
    out << "agent A" << a << " { behaviour = " << term << " }\n";
  }
  for (int a = 0; a < n_agents; ++a) {
    out << "next A" << a << " {\n";
    for (const auto& b : atoms[a]) {
      for (int s = 0; s < n_stimuli; ++s) {
        if (pick(0, 2) != 0) continue;
        std::string next = atoms[a][pick(0, static_cast<int>(atoms[a].size()) - 1)];
        out << "  " << b << " @ s" << s << " -> " << next;
        if (pick(0, 2) != 0) out << " / s" << pick(0, n_stimuli - 1);
        out << "\n";
      }
    }
    out << "}\n";
  }
  for (int a = 0; a < n_agents; ++a) {
    for (const auto& b : atoms[a]) {
      out << "program " << b << " {";
      int n_stmts = pick(0, 2);
      for (int k = 0; k < n_stmts; ++k) {
        out << (k ? "; " : " ") << "x" << pick(0, n_vars - 1) << " := F(";
        int n_args = pick(0, 2);
        for (int j = 0; j < n_args; ++j) out << (j ? ", " : "") << "x" << pick(0, n_vars - 1);
        out << ")";
      }
      out << " }\n";
    }
  }
  return out.str();
}

}  // namespace test_support
