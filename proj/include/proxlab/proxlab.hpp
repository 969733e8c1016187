#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "proxlab/dsl/interpreter.hpp"
#include "proxlab/dsl/output.hpp"
#include "proxlab/dsl/parser.hpp"
#include "proxlab/duality.hpp"
#include "proxlab/laws.hpp"
#include "proxlab/sigma_baire.hpp"
#include "proxlab/stone.hpp"

namespace proxlab {

struct ScriptResult {
  std::vector<LawReport> reports;
  dsl::ExitCode exit = dsl::ExitCode::Holds;
  std::string error;  // parse or elaboration error, exit 2
};

/// Parses, elaborates and runs a DSL script.
inline ScriptResult run_script(std::string_view source, const dsl::Options& opts = {}) {
  ScriptResult out;
  try {
    const auto program = dsl::parse(source);
    dsl::Interpreter in(opts);
    const auto plan = in.elaborate(program);
    out.reports = in.run(plan);
    out.exit = dsl::exit_code(out.reports);
  } catch (const dsl::DslError& e) {
    out.exit = dsl::ExitCode::ConfigError;
    out.error = e.render();
  }
  return out;
}

}  // namespace proxlab
