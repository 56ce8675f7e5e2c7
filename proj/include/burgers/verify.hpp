#ifndef BURGERS_VERIFY_HPP
#define BURGERS_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace burgers::verify {

struct CheckResult {
  std::string id;
  // routes the result to an acceptance criterion: exponents, flux,
  // convergence, thm1_1d, thm1_2d, interp, semigroup, scaling, conservation
  std::string group;
  bool pass = false;
  std::string detail;
};

// Exact rational identities: compound-limit punchline for d = 1..10 and
// gamma = q*gamma0, q = 1/10..9/10; interpolation and invariance checks;
// Serre exponents at d = 1.
std::vector<CheckResult> verify_exponents();

// Closed-form EO/Godunov fluxes against brute-force oracles (quadrature of
// the EO definition; grid-search extremum for Godunov) on a 41x41 state grid
// in [-2,2]^2 for k = 1,2,3, tolerance 1e-8.
std::vector<CheckResult> verify_flux();

// 1-D entropy convergence on the transonic rarefaction and Theorem-1
// sharpness on the unit-mass triangle (slope and N-wave constant).
std::vector<CheckResult> verify_oned();

// Theorem-1 boundedness at d = 2 on tensor-triangle data.
std::vector<CheckResult> verify_twod();

// Exact semigroup property in forced-identical-step mode.
std::vector<CheckResult> verify_semigroup();

// Scaling-group invariance of the Theorem-1 ratio at finite resolution.
std::vector<CheckResult> verify_scaling();

// Dispatch by suite name; throws std::invalid_argument for unknown names.
std::vector<CheckResult> verify_suite(std::string_view name);
const std::vector<std::string>& suite_names();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace burgers::verify

#endif  // BURGERS_VERIFY_HPP
