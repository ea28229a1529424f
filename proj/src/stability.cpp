#include "tribo/stability.hpp"

#include <algorithm>
#include <cmath>

#include "tribo/errors.hpp"
#include "tribo/orbit.hpp"

namespace tribo {

Linearization linearization(const EquationParams& eq) {
  const double mu = equilibrium_roots(eq).real_root;
  const double beta = to_double(eq.beta());
  const double gamma = to_double(eq.gamma());
  return {mu, (beta * mu - gamma) / gamma, -(mu * mu * mu) / gamma};
}

std::pair<double, double> partial_derivatives(const EquationParams& eq, double x, double y) {
  const double alpha = to_double(eq.alpha());
  const double beta = to_double(eq.beta());
  const double gamma = to_double(eq.gamma());
  const double d = x * (y + alpha) + beta;
  return {-gamma * (y + alpha) / (d * d), -gamma * x / (d * d)};
}

StabilityReport classify_stability(const EquationParams& eq, const StabilityOptions& options) {
  StabilityReport report;
  report.equilibrium = equilibrium_roots(eq);
  const double mu = report.equilibrium.real_root;
  const double beta = to_double(eq.beta());
  const double gamma = to_double(eq.gamma());

  report.mu = mu;
  report.p = (beta * mu - gamma) / gamma;
  report.q = -(mu * mu * mu) / gamma;
  report.clark_sum = std::abs(report.p) + std::abs(report.q);
  report.paper_rouche_value = std::abs(report.p - mu * mu * mu / gamma);
  report.classification = report.clark_sum < 1.0 ? StabilityClass::LocallyAsymptoticallyStable
                                                  : StabilityClass::Inconclusive;

  // lambda^2 - p lambda - q = 0
  const std::complex<double> root_disc = std::sqrt(std::complex<double>(report.p * report.p + 4.0 * report.q, 0.0));
  report.lambda = {(report.p + root_disc) / 2.0, (report.p - root_disc) / 2.0};
  report.lambda_moduli = {std::abs(report.lambda[0]), std::abs(report.lambda[1])};

  const bool outside = std::any_of(report.lambda_moduli.begin(), report.lambda_moduli.end(),
                                   [&](double m) { return m > 1.0 + options.hyperbolic_tol; });
  const bool on_circle = std::any_of(report.lambda_moduli.begin(), report.lambda_moduli.end(),
                                     [&](double m) { return std::abs(m - 1.0) <= options.hyperbolic_tol; });
  if (outside) {
    report.local_verdict = LocalVerdict::Unstable;
  } else if (on_circle) {
    report.local_verdict = LocalVerdict::Nonhyperbolic;
  } else {
    report.local_verdict = LocalVerdict::Stable;
  }
  return report;
}

double mu_phi(const EquationParams& eq) {
  const double mu = equilibrium_roots(eq).real_root;
  const double phi = characteristic_roots(params_to_recurrence(eq)).real_root;
  return mu * phi;
}

ConvergenceReport global_convergence_check(const EquationParams& eq, const Rational& x_m1,
                                           const Rational& x_0, double tol, long n_max,
                                           double mu_phi_tol) {
  ConvergenceReport report;
  report.n_max = n_max;
  report.mu = equilibrium_roots(eq).real_root;
  report.phi = characteristic_roots(params_to_recurrence(eq)).real_root;
  report.mu_phi = report.mu * report.phi;
  report.mu_phi_is_one = std::abs(report.mu_phi - 1.0) < mu_phi_tol;

  const Orbit orbit = iterate(eq, x_m1, x_0, n_max);
  if (orbit.singular_at) throw SingularOrbit(*orbit.singular_at);

  // Gaps this small are at the resolution of double and carry no ordering.
  const double noise = 64.0 * 2.220446049250313e-16 * std::max(1.0, std::abs(report.mu));
  double previous_gap = std::abs(to_double(x_0) - report.mu);
  report.final_gap = previous_gap;
  report.monotone_after = true;
  for (long n = 1; n <= n_max; ++n) {
    const double gap = std::abs(to_double(orbit.x(n)) - report.mu);
    if (report.first_within_tol && gap > previous_gap && gap > noise) {
      report.monotone_after = false;
    }
    if (!report.first_within_tol && gap < tol) report.first_within_tol = n;
    previous_gap = gap;
    report.final_gap = gap;
  }
  if (!report.first_within_tol) report.monotone_after = false;
  return report;
}

RatioLimitReport ratio_limit_check(const RecurrenceParams& params, long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const CubicRoots roots = characteristic_roots(params);
  if (!roots.strictly_dominant_real) {
    throw NoDominantRealRoot("the real characteristic root is not strictly dominant in modulus");
  }

  RatioLimitReport report;
  report.phi = roots.real_root;
  report.n_max = n_max;
  const SequenceWindow v = v_window(params, 0, n_max + 1);
  for (long n = 1; n <= n_max; ++n) {
    if ((n % 10 != 0 && n != n_max) || is_zero(v[n])) continue;
    report.ratios.emplace_back(n, to_double(Rational(v[n + 1] / v[n])));
  }
  if (is_zero(v[n_max])) throw DomainError("V_n_max is zero; the ratio is undefined");
  report.gap = std::abs(to_double(Rational(v[n_max + 1] / v[n_max])) - report.phi);
  return report;
}

std::string_view name_of(StabilityClass c) {
  return c == StabilityClass::LocallyAsymptoticallyStable ? "LocallyAsymptoticallyStable"
                                                          : "Inconclusive";
}

std::string_view name_of(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::Stable: return "stable";
    case LocalVerdict::Unstable: return "unstable";
    case LocalVerdict::Nonhyperbolic: return "nonhyperbolic";
  }
  return "unknown";
}

}  // namespace tribo
