#include <doctest.h>

#include <json.hpp>

#include "polarcalc/job.hpp"

using namespace polarcalc;
using nlohmann::json;

namespace {

json report_of(const std::string& job_text, int expected_exit,
               const JobOverrides& overrides = {}) {
  JobOutcome outcome = run_job_text(job_text, overrides);
  INFO(outcome.report_json);
  CHECK(outcome.exit_code == expected_exit);
  return json::parse(outcome.report_json);
}

const char* kCuspPolarJob = R"({
  "task": "polar",
  "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
  "f": "y^2 - x^3 + t*x"
})";

}  // namespace

TEST_CASE("polar job: envelope and results") {
  json doc = report_of(kCuspPolarJob, 0);
  CHECK(doc["schema"] == "polarcalc-report/1");
  CHECK(doc["status"] == "ok");
  CHECK(doc["engine"]["name"] == "polarcalc");
  CHECK(doc["engine"]["version"].is_string());
  CHECK(doc["engine"]["order"] == "local");
  CHECK(doc["engine"]["budgets"]["max_pairs"] == 50000);
  CHECK(doc["engine"]["budgets"]["max_degree"] == 80);
  CHECK(doc["engine"]["budgets"]["radical_bound"] == 20);
  CHECK(doc["job"] == json::parse(kCuspPolarJob));

  const json& results = doc["results"];
  CHECK(results["gamma"] == 2);
  CHECK(results["tau"] == 3);
  CHECK(results["ipa"] == "yes");
  CHECK(results["null_ipa"] == false);
  CHECK(results["saturation_steps"] == 1);
  CHECK(results["polar_standard_basis"] == json::array({"-3*x^2 + t", "y"}));
  CHECK(results["j_rel"].is_array());
  CHECK_FALSE(results["diagnostics"].empty());
}

TEST_CASE("reports are byte deterministic") {
  JobOutcome first = run_job_text(kCuspPolarJob);
  JobOutcome second = run_job_text(kCuspPolarJob);
  CHECK(first.report_json == second.report_json);
  CHECK(first.report_json.back() == '\n');
}

TEST_CASE("command line overrides beat job settings") {
  std::string job = R"({
    "task": "polar",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x",
    "order": "local",
    "budgets": {"max_degree": 40}
  })";
  JobOverrides overrides;
  overrides.order = "local-reversed";
  overrides.max_degree = 60;
  json doc = report_of(job, 0, overrides);
  CHECK(doc["engine"]["order"] == "local-reversed");
  CHECK(doc["engine"]["budgets"]["max_degree"] == 60);
  // the invariants themselves do not feel the order change
  CHECK(doc["results"]["gamma"] == 2);
  CHECK(doc["results"]["tau"] == 3);
}

TEST_CASE("milnor task defaults to the non-parameter variables") {
  std::string job = R"({
    "task": "milnor",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "x^3 + y^4"
  })";
  json doc = report_of(job, 0);
  CHECK(doc["results"]["mu"] == 6);
  CHECK(doc["results"]["vars"] == json::array({"x", "y"}));

  std::string infinite = R"({
    "task": "milnor",
    "ring": {"variables": ["x", "y"]},
    "f": "x^2*y^2"
  })";
  CHECK(report_of(infinite, 0)["results"]["mu"] == "infinite");

  std::string chosen = R"({
    "task": "milnor",
    "ring": {"variables": ["x", "y", "z"]},
    "f": "x^2 + y^3",
    "params": {"vars": ["x", "y"]}
  })";
  CHECK(report_of(chosen, 0)["results"]["mu"] == 2);
}

TEST_CASE("ipa task includes the slice report only on non-no verdicts") {
  std::string yes = R"({
    "task": "ipa",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x"
  })";
  json doc = report_of(yes, 0);
  CHECK(doc["results"]["verdict"] == "yes");
  REQUIRE(doc["results"].contains("slice"));
  CHECK(doc["results"]["slice"]["dim_critical"] == 0);

  std::string no = R"({
    "task": "ipa",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - t*x^2"
  })";
  json rejected = report_of(no, 0);
  CHECK(rejected["results"]["verdict"] == "no");
  CHECK(rejected["results"]["gamma"] == "infinite");
  CHECK_FALSE(rejected["results"].contains("slice"));
}

TEST_CASE("additivity task") {
  std::string job = R"({
    "task": "additivity",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x",
    "params": {"special_mu_sum": 0}
  })";
  json doc = report_of(job, 0);
  CHECK(doc["results"]["pass"] == true);
  CHECK(doc["results"]["mu_special_fibre"] == 2);
  CHECK(doc["results"]["gamma"] == 2);

  std::string missing = R"({
    "task": "additivity",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x"
  })";
  json error = report_of(missing, 2);
  CHECK(error["error"]["type"] == "validation");
}

TEST_CASE("family task") {
  std::string job = R"({
    "task": "family",
    "params": {"a": 2, "b": 3, "m": 2}
  })";
  json doc = report_of(job, 0);
  CHECK(doc["status"] == "ok");
  CHECK(doc["results"]["gamma"] == 1);
  CHECK(doc["results"]["tau"] == 3);
  CHECK(doc["results"]["betti_top"] == 4);
  CHECK(doc["results"]["null_ipa"] == false);

  std::string invalid = R"({
    "task": "family",
    "params": {"a": 3, "b": 3, "m": 2}
  })";
  CHECK(report_of(invalid, 2)["error"]["type"] == "validation");
}

TEST_CASE("link task assembles betti numbers from disk data") {
  std::string job = R"({
    "task": "link",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x",
    "params": {
      "disk": {
        "generic": [[1, 1]],
        "special": [[[2, 1]], [[2, 1]]],
        "concentration": 2
      }
    }
  })";
  json doc = report_of(job, 0);
  CHECK(doc["results"]["n"] == 2);
  CHECK(doc["results"]["attach"] == json::parse("[[2, 3]]"));
  CHECK(doc["results"]["complex_link"] == json::parse("[[1, 2]]"));
  CHECK(doc["results"]["disk_euler"] == 3);
  CHECK(doc["results"]["hyper"] == json::parse("[[2, 3]]"));
  CHECK(doc["results"]["betti"] == json::parse("[[1, 2], [2, 3]]"));

  std::string direct = R"({
    "task": "link",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x",
    "params": {"hyper": [[2, 3]]}
  })";
  json direct_doc = report_of(direct, 0);
  CHECK_FALSE(direct_doc["results"].contains("disk_euler"));
  CHECK(direct_doc["results"]["betti"] == json::parse("[[1, 2], [2, 3]]"));

  std::string bare = R"({
    "task": "link",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x"
  })";
  json bare_doc = report_of(bare, 0);
  CHECK_FALSE(bare_doc["results"].contains("hyper"));
  CHECK_FALSE(bare_doc["results"].contains("betti"));
}

TEST_CASE("malformed input is a validation or parse error, exit 2") {
  json bad_json = report_of("{not json", 2);
  CHECK(bad_json["status"] == "error");
  CHECK(bad_json["error"]["type"] == "json");
  CHECK(bad_json["job"].is_null());

  std::string bad_poly = R"({
    "task": "polar",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 +* x"
  })";
  json parse_doc = report_of(bad_poly, 2);
  CHECK(parse_doc["error"]["type"] == "parse");
  CHECK(parse_doc["error"]["position"] == 5);
  CHECK(parse_doc["job"]["task"] == "polar");

  std::string unknown_task = R"({"task": "shave"})";
  CHECK(report_of(unknown_task, 2)["error"]["type"] == "validation");

  std::string unknown_budget = R"({
    "task": "family",
    "params": {"a": 2, "b": 3, "m": 1},
    "budgets": {"max_patience": 5}
  })";
  CHECK(report_of(unknown_budget, 2)["error"]["type"] == "validation");

  std::string bad_order = R"({
    "task": "family",
    "params": {"a": 2, "b": 3, "m": 1},
    "order": "global"
  })";
  CHECK(report_of(bad_order, 2)["error"]["type"] == "validation");

  std::string undeclared = R"({
    "task": "polar",
    "ring": {"variables": ["t", "x"], "parameter": "t"},
    "f": "t*x + z"
  })";
  json undeclared_doc = report_of(undeclared, 2);
  CHECK(undeclared_doc["error"]["type"] == "parse");

  std::string no_parameter = R"({
    "task": "polar",
    "ring": {"variables": ["x", "y"]},
    "f": "x^2 + y^2"
  })";
  CHECK(report_of(no_parameter, 2)["error"]["type"] == "validation");

  std::string repeated_degree = R"({
    "task": "link",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x",
    "params": {"hyper": [[2, 1], [2, 2]]}
  })";
  CHECK(report_of(repeated_degree, 2)["error"]["type"] == "validation");
}

TEST_CASE("budget exhaustion is exit 3 with the exhausted budget named") {
  std::string job = R"({
    "task": "polar",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - x^3 + t*x",
    "budgets": {"max_pairs": 1}
  })";
  json doc = report_of(job, 3);
  CHECK(doc["status"] == "budget-exceeded");
  CHECK(doc["error"]["type"] == "budget");
  CHECK(doc["error"]["which"] == "max_pairs");
  CHECK(doc["engine"]["budgets"]["max_pairs"] == 1);
}

TEST_CASE("failed hypotheses are exit 4 with the check named") {
  std::string link_on_no = R"({
    "task": "link",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "y^2 - t*x^2"
  })";
  json doc = report_of(link_on_no, 4);
  CHECK(doc["status"] == "hypothesis-failure");
  CHECK(doc["error"]["type"] == "hypothesis");
  CHECK(doc["error"]["check"] == "ipa_required");

  std::string nonvanishing = R"({
    "task": "polar",
    "ring": {"variables": ["t", "x", "y"], "parameter": "t"},
    "f": "1 + y^2 - x^3 + t*x"
  })";
  CHECK(report_of(nonvanishing, 4)["error"]["check"] == "germ_vanishes");
}
