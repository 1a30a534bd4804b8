#include <doctest.h>

#include "polarcalc/parse.hpp"
#include "polarcalc/polar.hpp"

using namespace polarcalc;

namespace {

RingPtr germ_ring() { return Ring::make({"t", "x", "y"}, 0); }

GermInput germ(const char* text) {
  return GermInput::make(parse_polynomial(text, germ_ring()));
}

const Diagnostic* find_check(const std::vector<Diagnostic>& list,
                             const std::string& name) {
  for (const Diagnostic& d : list)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

TEST_CASE("germ input validation") {
  RingPtr no_param = Ring::make({"t", "x", "y"});
  CHECK_THROWS_AS(GermInput::make(parse_polynomial("x^2", no_param)),
                  ValidationError);
  CHECK_THROWS_AS(germ("1 + x^2"), HypothesisError);

  GermInput g = germ("y^2 - x^3 + t*x");
  CHECK(g.parameter() == 0);
  CHECK(g.n() == 2);
  CHECK(g.special_fibre().ring()->arity() == 2);
  CHECK(g.special_fibre() ==
        parse_polynomial("y^2 - x^3", g.slice_ring()));
}

TEST_CASE("relative jacobian ideals") {
  EngineOptions opts;
  GermInput g = germ("y^2 - x^3 + t*x");
  Ideal j_rel = jacobian_relative(g, opts);
  REQUIRE(j_rel.generators().size() == 2);
  CHECK(j_rel.generators()[0] == parse_polynomial("-3*x^2 + t", germ_ring()));
  CHECK(j_rel.generators()[1] == parse_polynomial("2*y", germ_ring()));
  Ideal j_full = jacobian_full(g, opts);
  CHECK(j_full.generators().size() == 3);
}

TEST_CASE("deformed cusp: the reference worked example") {
  EngineOptions opts;
  GermInput g = germ("y^2 - x^3 + t*x");

  PolarReport report = polar_report(g, opts);
  CHECK(report.gamma == LengthValue{2});
  CHECK(report.tau == LengthValue{3});
  CHECK(report.ipa == IpaVerdict::yes);
  CHECK_FALSE(report.null_ipa);
  CHECK(report.saturation_steps == 1);

  // the one-shot operations agree with the aggregate report
  CHECK(gamma_number(g, opts) == LengthValue{2});
  CHECK(tau_number(g, opts) == LengthValue{3});
  CHECK(is_ipa(g, opts).verdict == IpaVerdict::yes);
  CHECK_FALSE(is_null_ipa(g, opts));

  // tau again, through the parametrization of the polar curve: on
  // t = 3 x^2, y = 0 the germ pulls back to 2 x^3, of order 3
  RingPtr line = Ring::make({"x"});
  std::vector<Polynomial> curve = {
      parse_polynomial("3*x^2", line),  // t
      Polynomial::variable(line, 0),    // x
      Polynomial::zero(line),           // y
  };
  Polynomial pullback = g.f.substitute(curve, line);
  CHECK(pullback == parse_polynomial("2*x^3", line));

  for (const Diagnostic& d : polar_consistency_check(g, opts))
    CHECK(d.outcome != "fail");
}

TEST_CASE("cusp with a node escaping to a special point") {
  EngineOptions opts;
  GermInput g = germ("y^2 + x^2*(x - t)");
  PolarReport report = polar_report(g, opts);
  CHECK(report.gamma == LengthValue{1});
  CHECK(report.tau == LengthValue{3});
  CHECK(report.ipa == IpaVerdict::yes_with_caveat);
  CHECK_FALSE(report.null_ipa);
}

TEST_CASE("a non isolated polar intersection is rejected") {
  EngineOptions opts;
  GermInput g = germ("y^2 - t*x^2");
  PolarReport report = polar_report(g, opts);
  CHECK(report.ipa == IpaVerdict::no);
  // the defining intersection numbers are genuinely infinite here
  CHECK_FALSE(report.gamma.finite());
  CHECK_FALSE(report.tau.finite());
  CHECK_FALSE(report.null_ipa);

  const Diagnostic* slice = find_check(report.diagnostics,
                                       "polar_slice_zero_dimensional");
  REQUIRE(slice != nullptr);
  CHECK(slice->outcome == "fail");
  // the diagnostic names the offending one-dimensional locus
  CHECK(slice->detail.find("(t, y)") != std::string::npos);

  // downstream questions that presuppose isolation refuse to answer
  CHECK_THROWS_AS(critical_slice_report(g, opts), HypothesisError);
  CHECK_THROWS_AS(is_null_ipa(g, opts), HypothesisError);
}

TEST_CASE("null polar activity: the moving smooth point") {
  EngineOptions opts;
  GermInput g = germ("x^2 + (y - t)^2");
  PolarReport report = polar_report(g, opts);
  CHECK(report.null_ipa);
  CHECK(report.ipa != IpaVerdict::no);
  CHECK(report.gamma == LengthValue{0});
  CHECK(report.tau == LengthValue{0});
  CHECK(report.saturation_steps == 2);
  CHECK(is_null_ipa(g, opts));
}

TEST_CASE("empty visible polar set can still fail the dimension drop") {
  EngineOptions opts;
  GermInput g = germ("y^2 + t^2*x^2");
  PolarReport report = polar_report(g, opts);
  CHECK(report.ipa == IpaVerdict::no);
  const Diagnostic* drop =
      find_check(report.diagnostics, "critical_slice_dimension_drop");
  REQUIRE(drop != nullptr);
  CHECK(drop->outcome == "fail");
}

TEST_CASE("parameter independent germs are rigorously isolated") {
  EngineOptions opts;
  for (const char* text : {"x^2 + y^2", "y^2 - x^3", "x^3 + y^4"}) {
    GermInput g = germ(text);
    PolarReport report = polar_report(g, opts);
    CHECK(report.ipa == IpaVerdict::yes);
    CHECK(report.null_ipa);
    CHECK(report.gamma == LengthValue{0});
    CHECK(report.tau == LengthValue{0});
    CHECK(report.saturation_steps == 0);
  }
}

TEST_CASE("slice report on an isolated deformation") {
  EngineOptions opts;
  GermInput g = germ("y^2 - x^3 + t*x");
  SliceReport slice = critical_slice_report(g, opts);
  CHECK(slice.dim_critical == 0);
  CHECK(slice.dim_slice_critical == 0);
  for (const Diagnostic& d : slice.checks) CHECK(d.outcome != "fail");
}

TEST_CASE("consistency checks hold on the corpus") {
  EngineOptions opts;
  for (const char* text :
       {"y^2 - x^3 + t*x", "y^2 + x^2*(x - t)", "x^2 + (y - t)^2",
        "y^2 - t*x^2", "y^2 + t^2*x^2", "x^3 + y^4"}) {
    GermInput g = germ(text);
    std::vector<Diagnostic> checks = polar_consistency_check(g, opts);
    const Diagnostic* fin = find_check(checks, "finiteness_equivalence");
    REQUIRE(fin != nullptr);
    CHECK(fin->outcome == "pass");
    const Diagnostic* iso = find_check(checks, "no_isolated_polar_points");
    REQUIRE(iso != nullptr);
    CHECK(iso->outcome == "pass");
  }
}

TEST_CASE("gamma and tau do not depend on the local order") {
  EngineOptions natural;
  EngineOptions reversed;
  reversed.local_order = LocalOrderChoice::reversed;
  for (const char* text :
       {"y^2 - x^3 + t*x", "y^2 + x^2*(x - t)", "x^2 + (y - t)^2",
        "y^2 - t*x^2", "x^3 + y^4"}) {
    GermInput g = germ(text);
    CHECK(gamma_number(g, natural) == gamma_number(g, reversed));
    CHECK(tau_number(g, natural) == tau_number(g, reversed));
    CHECK(is_ipa(g, natural).verdict == is_ipa(g, reversed).verdict);
  }
}

TEST_CASE("three variable germ with parameter") {
  EngineOptions opts;
  RingPtr ring = Ring::make({"t", "x", "y", "z"}, 0);
  GermInput g = GermInput::make(
      parse_polynomial("x^2 + y^2 + z^2 + t*z", ring));
  PolarReport report = polar_report(g, opts);
  // the polar curve is x = y = 0, t = -2z; it meets the hyperplane t = 0
  // transversally and f pulls back to -z^2 along it
  CHECK(report.ipa == IpaVerdict::yes);
  CHECK_FALSE(report.null_ipa);
  CHECK(report.gamma == LengthValue{1});
  CHECK(report.tau == LengthValue{2});
}
