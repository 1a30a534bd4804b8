#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polarcalc/polar.hpp"

namespace polarcalc {

// Finitely supported map degree -> rank.
class RankVector {
 public:
  RankVector() = default;

  static RankVector concentrated(int degree, std::uint64_t rank);

  void set(int degree, std::uint64_t rank);
  std::uint64_t at(int degree) const;  // 0 when absent
  const std::map<int, std::uint64_t>& entries() const { return ranks_; }
  bool is_zero() const { return ranks_.empty(); }

  // Alternating sum over degrees.
  long long euler() const;

  bool operator==(const RankVector&) const = default;
  std::string str() const;

 private:
  std::map<int, std::uint64_t> ranks_;  // nonzero entries only
};

// Stalk-rank data for a locally constant complex on a punctured disk with
// finitely many special points.
struct DiskComplexSpec {
  RankVector generic_stalk;
  std::vector<RankVector> special_points;
  std::optional<int> concentration_degree;
};

// Length of the Jacobian quotient of g in the subring spanned by the listed
// variables (indices into g's ring). g must involve only those variables;
// callers first substitute fixed values for any others.
LengthValue milnor_number(const Polynomial& g,
                          const std::vector<std::size_t>& vars,
                          const EngineOptions& opts);

// Milnor number of an isolated hypersurface germ in all its variables.
LengthValue milnor_number(const Polynomial& g, const EngineOptions& opts);

// Relative cohomology ranks of the pair (deformed fibre, special fibre):
// concentrated in degree n with value tau. Requires a non-"no" IPA verdict.
RankVector le_attach_rank(const GermInput& f, const EngineOptions& opts);

// Reduced cohomology ranks of the complex link of the hypersurface of f:
// concentrated in degree n-1 with value gamma. Same hypothesis.
RankVector complex_link_rank(const GermInput& f, const EngineOptions& opts);

struct AdditivityResult {
  bool pass = false;
  LengthValue mu_special_fibre;
  LengthValue gamma;
  std::uint64_t special_mu_sum = 0;
  std::string detail;
};

// Checks mu(f0) = gamma + (sum of Milnor numbers at special points of the
// slice). The special sum is supplied by the caller; locating those points
// is outside the engine's scope. Requires the slice singularity isolated.
AdditivityResult mu_additivity_check(const GermInput& f,
                                     std::uint64_t special_mu_sum,
                                     const EngineOptions& opts);

// Euler characteristic of the disk complex by additivity over the
// stratification {disk minus special points, special points}.
long long disk_complex_euler(const DiskComplexSpec& spec);

// The rank vector concentrated in the asserted degree whose alternating sum
// equals the Euler characteristic. Throws HypothesisError when no degree is
// asserted or the sign of the Euler characteristic is incompatible with it.
RankVector disk_complex_rank(const DiskComplexSpec& spec);

// Reduced cohomology of the special fibre's Milnor fibre from the supplied
// hypercohomology ranks: copy all degrees, add gamma in degree n-1.
RankVector ipa_betti_assembly(const GermInput& f, const RankVector& hyper,
                              const EngineOptions& opts);

// Full pipeline for the two-parameter unfolding family
//   f = y^2 - x^b - s^m*x^a + t*x^a  over (t, x, y, s).
// Every stage is compared with its closed form; each comparison lands in
// `checks` as a named pass/fail diagnostic for the caller to act on.
struct FamilyReport {
  unsigned a = 0, b = 0, m = 0;
  std::optional<Ideal> polar;
  std::uint64_t gamma = 0;         // (m-1)(b-a)
  std::uint64_t tau = 0;           // (m-1)b
  std::uint64_t mu_generic = 0;    // a-1
  std::uint64_t mu_special = 0;    // b-1
  std::uint64_t hyper_rank = 0;    // (m-1)a+1, degree 2
  std::uint64_t betti_top = 0;     // (m-1)b+1, degree 2
  IpaVerdict ipa = IpaVerdict::yes_with_caveat;
  bool null_ipa = false;
  std::vector<Diagnostic> checks;
};

FamilyReport family_report(unsigned a, unsigned b, unsigned m,
                           const EngineOptions& opts);

}  // namespace polarcalc
