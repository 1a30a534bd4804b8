// Command line front end. Reads a JSON job document, runs the engine, and
// writes the report to stdout or to --out. The exit code mirrors the report
// status so shell pipelines can branch on it:
//   0 ok, 2 parse or validation error, 3 budget exhausted,
//   4 hypothesis failure, 5 closed-form mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarcalc/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polarcalc: local polar invariants of one-parameter germs"};

  std::string job_path;
  std::string out_path;
  std::string order;
  std::optional<std::uint64_t> max_pairs;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> radical_bound;

  app.add_option("--job", job_path, "Path to the job JSON document ('-' for stdin)")
      ->required();
  app.add_option("--order", order, "Monomial order: 'local' or 'local-reversed'")
      ->check(CLI::IsMember({"local", "local-reversed"}));
  app.add_option("--max-pairs", max_pairs, "Cap on critical pairs per basis computation");
  app.add_option("--max-degree", max_degree, "Cap on term degree during reduction");
  app.add_option("--radical-bound", radical_bound,
                 "Cap on saturation steps and radical membership powers");
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  std::string job_text;
  if (job_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    job_text = buffer.str();
  } else {
    std::ifstream in(job_path, std::ios::binary);
    if (!in) {
      std::cerr << "polarcalc: cannot open job file '" << job_path << "'\n";
      return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    job_text = buffer.str();
  }

  polarcalc::JobOverrides overrides;
  if (!order.empty()) overrides.order = order;
  overrides.max_pairs = max_pairs;
  overrides.max_degree = max_degree;
  overrides.radical_bound = radical_bound;

  polarcalc::JobOutcome outcome = polarcalc::run_job_text(job_text, overrides);

  if (out_path.empty()) {
    std::cout << outcome.report_json;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "polarcalc: cannot write report to '" << out_path << "'\n";
      return 2;
    }
    out << outcome.report_json;
  }
  return outcome.exit_code;
}
