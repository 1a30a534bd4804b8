#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polarcalc/errors.hpp"

namespace polarcalc {

// Budget overrides supplied on the command line; absent fields fall back to
// the job file, then to EngineOptions defaults.
struct JobOverrides {
  std::optional<std::string> order;  // "local" or "local-reversed"
  std::optional<std::uint64_t> max_pairs;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> radical_bound;
};

struct JobOutcome {
  std::string report_json;  // canonical serialized report (or error document)
  int exit_code = 0;        // 0 ok, 2 parse/validation, 3 budget,
                            // 4 hypothesis, 5 closed-form mismatch
};

// Parses a JSON job document, dispatches to the engine, and serializes the
// report. Never throws: every failure mode becomes a report document with
// the matching status and exit code. Serialization is canonical (sorted
// keys, normalized rationals), so identical jobs yield identical bytes.
JobOutcome run_job_text(const std::string& job_json,
                        const JobOverrides& overrides = {});

}  // namespace polarcalc
