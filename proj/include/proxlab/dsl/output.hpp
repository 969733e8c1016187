#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "proxlab/report.hpp"

namespace proxlab::dsl {

enum class ExitCode : int { Holds = 0, Counterexample = 1, ConfigError = 2, Inconclusive = 3 };

inline ExitCode exit_code(const std::vector<LawReport>& reports) {
  bool failed = false, open = false;
  for (const auto& r : reports) {
    failed = failed || r.status == Status::Counterexample;
    open = open || r.status == Status::Inconclusive || r.status == Status::Refused;
  }
  if (failed) return ExitCode::Counterexample;
  return open ? ExitCode::Inconclusive : ExitCode::Holds;
}

inline nlohmann::ordered_json to_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["subjects"] = r.subjects;
  j["status"] = std::string(status_name(r.status));
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) ws.push_back({{"kind", w.kind}, {"rendering", w.rendering}});
  j["witnesses"] = std::move(ws);
  j["cases_checked"] = r.cases_checked;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline nlohmann::ordered_json to_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json out;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  out["reports"] = std::move(arr);
  nlohmann::ordered_json summary;
  for (const auto s : {Status::HoldsExhaustive, Status::HoldsOnFamily, Status::Counterexample, Status::Inconclusive, Status::Refused}) {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.status == s ? 1 : 0;
    summary[std::string(status_name(s))] = n;
  }
  summary["exit_code"] = static_cast<int>(exit_code(reports));
  out["summary"] = std::move(summary);
  return out;
}

inline std::string render_json(const std::vector<LawReport>& reports) { return to_json(reports).dump(2) + "\n"; }

inline std::string render_text(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.law << " [";
    for (std::size_t i = 0; i < r.subjects.size(); ++i) os << (i ? ", " : "") << r.subjects[i];
    os << "]: " << status_name(r.status) << " (" << r.cases_checked << " cases";
    if (r.elapsed_ms > 0) os << ", " << r.elapsed_ms << " ms";
    os << ")\n";
    for (const auto& w : r.witnesses) os << "    " << w.kind << ": " << w.rendering << "\n";
  }
  os << "exit " << static_cast<int>(exit_code(reports)) << "\n";
  return os.str();
}

}  // namespace proxlab::dsl
