#include "polarcalc/job.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarcalc/cohomology.hpp"
#include "polarcalc/errors.hpp"
#include "polarcalc/parse.hpp"
#include "polarcalc/polar.hpp"

namespace polarcalc {
namespace {

using nlohmann::json;

constexpr const char* kSchemaName = "polarcalc-report/1";
constexpr const char* kEngineName = "polarcalc";
constexpr const char* kEngineVersion = "0.1.0";

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

const json& require_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key) {
  const json& value = require_field(obj, key);
  if (!value.is_string()) fail(std::string("field '") + key + "' must be a string");
  return value.get<std::string>();
}

std::uint64_t require_uint(const json& value, const char* what) {
  if (!value.is_number_unsigned()) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

int require_int(const json& value, const char* what) {
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    fail(std::string(what) + " must be an integer");
  }
  auto wide = value.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    fail(std::string(what) + " is out of range");
  }
  return static_cast<int>(wide);
}

RingPtr ring_from_json(const json& spec) {
  if (!spec.is_object()) fail("'ring' must be an object");
  const json& vars = require_field(spec, "variables");
  if (!vars.is_array() || vars.empty()) fail("'ring.variables' must be a nonempty array of names");
  std::vector<std::string> names;
  for (const json& v : vars) {
    if (!v.is_string()) fail("ring variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::optional<std::size_t> parameter;
  if (spec.contains("parameter")) {
    const json& p = spec["parameter"];
    if (!p.is_string()) fail("'ring.parameter' must be a variable name");
    auto it = std::find(names.begin(), names.end(), p.get<std::string>());
    if (it == names.end()) fail("ring parameter '" + p.get<std::string>() + "' is not a declared variable");
    parameter = static_cast<std::size_t>(it - names.begin());
  }
  return Ring::make(names, parameter);
}

RankVector ranks_from_json(const json& value, const char* what) {
  if (!value.is_array()) fail(std::string(what) + " must be an array of [degree, rank] pairs");
  RankVector ranks;
  for (const json& entry : value) {
    if (!entry.is_array() || entry.size() != 2) {
      fail(std::string(what) + " entries must be [degree, rank] pairs");
    }
    int degree = require_int(entry[0], "rank degree");
    std::uint64_t rank = require_uint(entry[1], "rank value");
    if (ranks.at(degree) != 0) fail(std::string(what) + " repeats a degree");
    ranks.set(degree, rank);
  }
  return ranks;
}

json ranks_to_json(const RankVector& ranks) {
  json out = json::array();
  for (const auto& [degree, rank] : ranks.entries()) {
    out.push_back(json::array({degree, rank}));
  }
  return out;
}

json length_to_json(const LengthValue& value) {
  if (value.finite()) return json(*value.value);
  return json("infinite");
}

json dim_to_json(const std::optional<int>& dim) {
  if (dim) return json(*dim);
  return json("empty");
}

json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
  json out = json::array();
  for (const Diagnostic& d : diagnostics) {
    json entry;
    entry["check"] = d.name;
    entry["outcome"] = d.outcome;
    entry["detail"] = d.detail;
    out.push_back(entry);
  }
  return out;
}

json generators_to_json(const std::vector<Polynomial>& generators) {
  json out = json::array();
  for (const Polynomial& g : generators) out.push_back(g.str());
  return out;
}

json basis_to_json(const Ideal& ideal, const EngineOptions& opts) {
  MonomialOrder order = default_local_order(*ideal.ring(), opts);
  return generators_to_json(ideal.basis(order, opts)->generators);
}

struct ParsedJob {
  std::string task;
  RingPtr ring;                 // null for the self-contained family task
  std::optional<Polynomial> f;  // likewise absent for family
  json params = json::object();
  EngineOptions opts;
  std::string order_name = "local";
};

ParsedJob parse_job(const json& job, const JobOverrides& overrides) {
  if (!job.is_object()) fail("job document must be a JSON object");
  ParsedJob parsed;

  parsed.task = require_string(job, "task");
  static const std::set<std::string> known_tasks = {"milnor",     "polar",  "ipa",
                                                    "additivity", "family", "link"};
  if (known_tasks.find(parsed.task) == known_tasks.end()) {
    fail("unknown task '" + parsed.task + "'");
  }

  if (job.contains("params")) {
    if (!job["params"].is_object()) fail("'params' must be an object");
    parsed.params = job["params"];
  }

  EngineOptions opts;
  if (job.contains("budgets")) {
    const json& budgets = job["budgets"];
    if (!budgets.is_object()) fail("'budgets' must be an object");
    for (const auto& [key, value] : budgets.items()) {
      std::uint64_t amount = require_uint(value, ("budget '" + key + "'").c_str());
      if (amount == 0) fail("budget '" + key + "' must be positive");
      if (key == "max_pairs") {
        opts.max_pairs = amount;
      } else if (key == "max_degree") {
        if (amount > 100000) fail("budget 'max_degree' is unreasonably large");
        opts.max_degree = static_cast<std::uint32_t>(amount);
      } else if (key == "radical_bound") {
        if (amount > 100000) fail("budget 'radical_bound' is unreasonably large");
        opts.radical_bound = static_cast<std::uint32_t>(amount);
      } else {
        fail("unknown budget '" + key + "'");
      }
    }
  }
  if (overrides.max_pairs) {
    if (*overrides.max_pairs == 0) fail("budget 'max_pairs' must be positive");
    opts.max_pairs = *overrides.max_pairs;
  }
  if (overrides.max_degree) {
    if (*overrides.max_degree == 0) fail("budget 'max_degree' must be positive");
    opts.max_degree = *overrides.max_degree;
  }
  if (overrides.radical_bound) {
    if (*overrides.radical_bound == 0) fail("budget 'radical_bound' must be positive");
    opts.radical_bound = *overrides.radical_bound;
  }

  std::string order_name = "local";
  if (job.contains("order")) {
    const json& o = job["order"];
    if (!o.is_string()) fail("'order' must be a string");
    order_name = o.get<std::string>();
  }
  if (overrides.order) order_name = *overrides.order;
  if (order_name == "local") {
    opts.local_order = LocalOrderChoice::natural;
  } else if (order_name == "local-reversed") {
    opts.local_order = LocalOrderChoice::reversed;
  } else {
    fail("unsupported order '" + order_name + "' (expected 'local' or 'local-reversed')");
  }
  parsed.order_name = order_name;
  parsed.opts = opts;

  if (parsed.task != "family") {
    parsed.ring = ring_from_json(require_field(job, "ring"));
    std::string source = require_string(job, "f");
    parsed.f = parse_polynomial(source, parsed.ring);
  }

  return parsed;
}

GermInput germ_from(const ParsedJob& parsed) {
  if (!parsed.ring->parameter_index()) {
    fail("task '" + parsed.task + "' needs a ring with a marked deformation parameter");
  }
  return GermInput::make(*parsed.f);
}

json run_milnor(const ParsedJob& parsed) {
  std::vector<std::size_t> vars;
  std::vector<std::string> names;
  if (parsed.params.contains("vars")) {
    const json& list = parsed.params["vars"];
    if (!list.is_array() || list.empty()) fail("'params.vars' must be a nonempty array of names");
    for (const json& v : list) {
      if (!v.is_string()) fail("'params.vars' entries must be variable names");
      names.push_back(v.get<std::string>());
      std::optional<std::size_t> index = parsed.ring->index_of(names.back());
      if (!index) fail("'params.vars' names an undeclared variable '" + names.back() + "'");
      vars.push_back(*index);
    }
  } else {
    for (std::size_t i = 0; i < parsed.ring->arity(); ++i) {
      if (parsed.ring->parameter_index() && *parsed.ring->parameter_index() == i) continue;
      vars.push_back(i);
      names.push_back(parsed.ring->variable(i));
    }
    if (vars.empty()) fail("ring has no non-parameter variables");
  }
  LengthValue mu = milnor_number(*parsed.f, vars, parsed.opts);
  json results;
  results["mu"] = length_to_json(mu);
  results["vars"] = json(names);
  return results;
}

json run_polar_task(const ParsedJob& parsed) {
  GermInput germ = germ_from(parsed);
  PolarReport report = polar_report(germ, parsed.opts);
  json results;
  results["j_rel"] = generators_to_json(report.j_rel.generators());
  results["polar_standard_basis"] = basis_to_json(report.polar, parsed.opts);
  results["gamma"] = length_to_json(report.gamma);
  results["tau"] = length_to_json(report.tau);
  results["ipa"] = to_string(report.ipa);
  results["null_ipa"] = report.null_ipa;
  results["saturation_steps"] = report.saturation_steps;
  results["diagnostics"] = diagnostics_to_json(report.diagnostics);
  return results;
}

json run_ipa_task(const ParsedJob& parsed) {
  GermInput germ = germ_from(parsed);
  PolarReport report = polar_report(germ, parsed.opts);
  json results;
  results["verdict"] = to_string(report.ipa);
  results["null_ipa"] = report.null_ipa;
  results["gamma"] = length_to_json(report.gamma);
  results["tau"] = length_to_json(report.tau);
  results["diagnostics"] = diagnostics_to_json(report.diagnostics);
  if (report.ipa != IpaVerdict::no) {
    SliceReport slice = critical_slice_report(germ, parsed.opts);
    json slice_json;
    slice_json["dim_critical"] = dim_to_json(slice.dim_critical);
    slice_json["dim_slice_critical"] = dim_to_json(slice.dim_slice_critical);
    slice_json["checks"] = diagnostics_to_json(slice.checks);
    results["slice"] = slice_json;
  }
  return results;
}

json run_additivity(const ParsedJob& parsed) {
  GermInput germ = germ_from(parsed);
  if (!parsed.params.contains("special_mu_sum")) {
    fail("task 'additivity' needs params.special_mu_sum");
  }
  std::uint64_t claimed = require_uint(parsed.params["special_mu_sum"], "params.special_mu_sum");
  AdditivityResult result = mu_additivity_check(germ, claimed, parsed.opts);
  json results;
  results["pass"] = result.pass;
  results["mu_special_fibre"] = length_to_json(result.mu_special_fibre);
  results["gamma"] = length_to_json(result.gamma);
  results["special_mu_sum"] = result.special_mu_sum;
  results["detail"] = result.detail;
  return results;
}

json run_family(const ParsedJob& parsed, bool& mismatch) {
  auto small_uint = [&](const char* key) -> unsigned {
    if (!parsed.params.contains(key)) {
      fail(std::string("task 'family' needs params.") + key);
    }
    std::uint64_t value = require_uint(parsed.params[key], key);
    if (value > 1000) fail(std::string("params.") + key + " is out of range");
    return static_cast<unsigned>(value);
  };
  unsigned a = small_uint("a");
  unsigned b = small_uint("b");
  unsigned m = small_uint("m");
  FamilyReport report = family_report(a, b, m, parsed.opts);
  json results;
  results["a"] = report.a;
  results["b"] = report.b;
  results["m"] = report.m;
  if (report.polar) {
    results["polar_standard_basis"] = basis_to_json(*report.polar, parsed.opts);
  }
  results["gamma"] = report.gamma;
  results["tau"] = report.tau;
  results["mu_generic"] = report.mu_generic;
  results["mu_special"] = report.mu_special;
  results["hyper_rank"] = report.hyper_rank;
  results["betti_top"] = report.betti_top;
  results["ipa"] = to_string(report.ipa);
  results["null_ipa"] = report.null_ipa;
  results["checks"] = diagnostics_to_json(report.checks);
  mismatch = std::any_of(report.checks.begin(), report.checks.end(),
                         [](const Diagnostic& d) { return d.outcome == "fail"; });
  return results;
}

json run_link(const ParsedJob& parsed) {
  GermInput germ = germ_from(parsed);
  RankVector attach = le_attach_rank(germ, parsed.opts);
  RankVector complex_link = complex_link_rank(germ, parsed.opts);
  json results;
  results["n"] = germ.n();
  results["attach"] = ranks_to_json(attach);
  results["complex_link"] = ranks_to_json(complex_link);

  std::optional<RankVector> hyper;
  if (parsed.params.contains("disk")) {
    const json& disk = parsed.params["disk"];
    if (!disk.is_object()) fail("'params.disk' must be an object");
    DiskComplexSpec spec;
    spec.generic_stalk = ranks_from_json(require_field(disk, "generic"), "disk.generic");
    const json& special = require_field(disk, "special");
    if (!special.is_array()) fail("'disk.special' must be an array of rank vectors");
    for (const json& point : special) {
      spec.special_points.push_back(ranks_from_json(point, "disk.special entry"));
    }
    if (disk.contains("concentration")) {
      spec.concentration_degree = require_int(disk["concentration"], "disk.concentration");
    }
    results["disk_euler"] = disk_complex_euler(spec);
    hyper = disk_complex_rank(spec);
    results["hyper"] = ranks_to_json(*hyper);
  } else if (parsed.params.contains("hyper")) {
    hyper = ranks_from_json(parsed.params["hyper"], "params.hyper");
    results["hyper"] = ranks_to_json(*hyper);
  }
  if (hyper) {
    results["betti"] = ranks_to_json(ipa_betti_assembly(germ, *hyper, parsed.opts));
  }
  return results;
}

json make_envelope(const json& job_echo, const std::string& status) {
  json doc;
  doc["schema"] = kSchemaName;
  doc["status"] = status;
  json engine;
  engine["name"] = kEngineName;
  engine["version"] = kEngineVersion;
  doc["engine"] = engine;
  doc["job"] = job_echo;
  return doc;
}

void add_engine_detail(json& doc, const ParsedJob& parsed) {
  doc["engine"]["order"] = parsed.order_name;
  json budgets;
  budgets["max_pairs"] = parsed.opts.max_pairs;
  budgets["max_degree"] = parsed.opts.max_degree;
  budgets["radical_bound"] = parsed.opts.radical_bound;
  doc["engine"]["budgets"] = budgets;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

JobOutcome error_outcome(const json& job_echo, const std::string& status,
                         const std::string& kind, const std::string& message, int code,
                         const json& extra = json::object()) {
  json doc = make_envelope(job_echo, status);
  json error;
  error["type"] = kind;
  error["message"] = message;
  for (const auto& [key, value] : extra.items()) error[key] = value;
  doc["error"] = error;
  return JobOutcome{render(doc), code};
}

}  // namespace

JobOutcome run_job_text(const std::string& job_json, const JobOverrides& overrides) {
  json job;
  try {
    job = json::parse(job_json);
  } catch (const json::parse_error& e) {
    return error_outcome(nullptr, "error", "json", e.what(), 2);
  }

  ParsedJob parsed;
  try {
    parsed = parse_job(job, overrides);
  } catch (const ParseError& e) {
    json extra;
    extra["position"] = e.position();
    return error_outcome(job, "error", "parse", e.what(), 2, extra);
  } catch (const ValidationError& e) {
    return error_outcome(job, "error", "validation", e.what(), 2);
  }

  try {
    bool mismatch = false;
    json results;
    if (parsed.task == "milnor") {
      results = run_milnor(parsed);
    } else if (parsed.task == "polar") {
      results = run_polar_task(parsed);
    } else if (parsed.task == "ipa") {
      results = run_ipa_task(parsed);
    } else if (parsed.task == "additivity") {
      results = run_additivity(parsed);
    } else if (parsed.task == "family") {
      results = run_family(parsed, mismatch);
    } else {
      results = run_link(parsed);
    }
    json doc = make_envelope(job, mismatch ? "mismatch" : "ok");
    add_engine_detail(doc, parsed);
    doc["results"] = results;
    return JobOutcome{render(doc), mismatch ? 5 : 0};
  } catch (const BudgetError& e) {
    json doc = make_envelope(job, "budget-exceeded");
    add_engine_detail(doc, parsed);
    json error;
    error["type"] = "budget";
    error["which"] = e.which();
    error["message"] = e.what();
    doc["error"] = error;
    return JobOutcome{render(doc), 3};
  } catch (const HypothesisError& e) {
    json doc = make_envelope(job, "hypothesis-failure");
    add_engine_detail(doc, parsed);
    json error;
    error["type"] = "hypothesis";
    error["check"] = e.check();
    error["message"] = e.what();
    doc["error"] = error;
    return JobOutcome{render(doc), 4};
  } catch (const ValidationError& e) {
    return error_outcome(job, "error", "validation", e.what(), 2);
  } catch (const std::exception& e) {
    json doc = make_envelope(job, "error");
    json error;
    error["type"] = "internal";
    error["message"] = e.what();
    doc["error"] = error;
    return JobOutcome{render(doc), 1};
  }
}

}  // namespace polarcalc
