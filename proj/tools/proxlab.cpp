#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "proxlab/proxlab.hpp"

int main(int argc, char** argv) {
  CLI::App app{"proxlab: check proximity and set-algebra laws from a script"};
  std::string script;
  std::string format = "json";
  std::string out_path;
  std::size_t jobs = 1;
  proxlab::dsl::Options opts;
  std::size_t samples = 0;

  app.add_option("script", script, "DSL script (.prox)")->required();
  app.add_option("--seed", opts.seed, "seed for sampled strategies");
  app.add_option("--depth", opts.depth, "chain and probe depth")->check(CLI::PositiveNumber);
  auto* samples_opt = app.add_option("--samples", samples, "sample sets on infinite universes")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker count (reports are identical for any value)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--first-counterexample", opts.first_counterexample, "stop each law at its first counterexample");
  app.add_flag("--timing", opts.timing, "record elapsed_ms (breaks byte stability)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (*samples_opt) opts.samples = samples;

  std::ifstream in(script, std::ios::binary);
  if (!in) {
    std::cerr << "proxlab: cannot read " << script << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  const auto result = proxlab::run_script(buf.str(), opts);
  if (!result.error.empty()) {
    std::cerr << script << ": " << result.error << "\n";
    return static_cast<int>(result.exit);
  }
  const auto text = format == "json" ? proxlab::dsl::render_json(result.reports) : proxlab::dsl::render_text(result.reports);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "proxlab: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return static_cast<int>(result.exit);
}
