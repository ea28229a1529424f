#pragma once

// Equilibrium stability of x_{n+1} = f(x_n, x_{n-1}) with
// f(x, y) = gamma / (x (y + alpha) + beta).
//
// At the equilibrium mu the linearization is z_{n+1} = p z_n + q z_{n-1} with
//   p = (beta mu - gamma) / gamma,   q = -mu^3 / gamma.
// The certified label comes from the Clark bound |p| + |q| < 1. The roots of
// lambda^2 - p lambda - q give the definitive local verdict, reported
// alongside. |p - mu^3/gamma| is reported for information only.

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tribo/cubic.hpp"
#include "tribo/equation.hpp"
#include "tribo/rational.hpp"
#include "tribo/recurrence.hpp"

namespace tribo {

struct Linearization {
  double mu;
  double p;
  double q;
};

Linearization linearization(const EquationParams& eq);

/// Analytic partial derivatives (df/dx, df/dy) at (x, y).
std::pair<double, double> partial_derivatives(const EquationParams& eq, double x, double y);

enum class StabilityClass { LocallyAsymptoticallyStable, Inconclusive };
enum class LocalVerdict { Stable, Unstable, Nonhyperbolic };

struct StabilityOptions {
  double hyperbolic_tol = 1e-10;  // |modulus - 1| below this counts as on the circle
};

struct StabilityReport {
  double mu = 0.0;
  double p = 0.0;
  double q = 0.0;
  double clark_sum = 0.0;
  double paper_rouche_value = 0.0;
  StabilityClass classification = StabilityClass::Inconclusive;
  std::array<std::complex<double>, 2> lambda{};
  std::array<double, 2> lambda_moduli{};
  LocalVerdict local_verdict = LocalVerdict::Nonhyperbolic;
  CubicRoots equilibrium;
};

StabilityReport classify_stability(const EquationParams& eq, const StabilityOptions& options = {});

/// mu * phi with phi the real root of the characteristic cubic under
/// (r,s,t) = (beta/gamma, alpha/gamma, 1/gamma).
double mu_phi(const EquationParams& eq);

struct ConvergenceReport {
  double mu = 0.0;
  double phi = 0.0;
  double mu_phi = 0.0;
  bool mu_phi_is_one = false;
  std::optional<long> first_within_tol;
  bool monotone_after = false;
  double final_gap = 0.0;
  long n_max = 0;
};

/// Iterates exactly and measures |x_n - mu| in double precision. Throws
/// SingularOrbit if a denominator vanishes within n_max.
ConvergenceReport global_convergence_check(const EquationParams& eq, const Rational& x_m1,
                                           const Rational& x_0, double tol, long n_max,
                                           double mu_phi_tol = 1e-10);

struct RatioLimitReport {
  double phi = 0.0;
  std::vector<std::pair<long, double>> ratios;  // (n, V_{n+1}/V_n) at checkpoints
  double gap = 0.0;                             // |V_{n_max+1}/V_{n_max} - phi|
  long n_max = 0;
};

/// Throws NoDominantRealRoot when phi is not strictly dominant in modulus,
/// DomainError when V_{n_max} = 0.
RatioLimitReport ratio_limit_check(const RecurrenceParams& params, long n_max);

std::string_view name_of(StabilityClass c);
std::string_view name_of(LocalVerdict v);

}  // namespace tribo
