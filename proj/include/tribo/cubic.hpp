#pragma once

// Roots of the two monic cubics attached to the equation:
//
//   characteristic:  x^3 - r x^2 - s x - t = 0
//   equilibrium:     x^3 + alpha x^2 + beta x - gamma = 0
//
// Roots come from the Cardano form r/3 + A + B, r/3 + wA + w^2 B,
// r/3 + w^2 A + w B (w = exp(2 pi i / 3)) evaluated in complex arithmetic,
// then Newton-polished.
//
// Sign convention: Delta below is
//
//   Delta = r^3 t/27 - r^2 s^2/108 + r s t/6 - s^3/27 + t^2/4,
//
// i.e. (q/2)^2 + (p/3)^3 for the depressed cubic, which equals minus the
// classical discriminant divided by 108. Delta > 0 means one real root and a
// complex-conjugate pair; Delta < 0 means three distinct real roots.

#include <array>
#include <complex>

#include "tribo/equation.hpp"
#include "tribo/recurrence.hpp"

namespace tribo {

struct CubicOptions {
  double imag_tol = 1e-8;
  double dominance_tol = 1e-10;
  double residual_tol = 1e-9;
  int max_newton_steps = 60;
};

struct CubicRoots {
  /// phi for the characteristic cubic, mu for the equilibrium cubic.
  double real_root = 0.0;
  /// chi, psi (or sigma, phi). When Delta > 0 the first has positive
  /// imaginary part and the second is its exact conjugate.
  std::array<std::complex<double>, 2> other_roots{};
  double delta = 0.0;
  /// Delta <= 0: all three roots are real (counted with multiplicity).
  bool all_real = false;
  bool strictly_dominant_real = false;

  std::array<std::complex<double>, 3> all() const {
    return {std::complex<double>(real_root, 0.0), other_roots[0], other_roots[1]};
  }
};

Rational discriminant_exact(const RecurrenceParams& params);
double discriminant(const RecurrenceParams& params);

/// The equilibrium cubic's own Delta,
///   -alpha^3 gamma/27 - alpha^2 beta^2/108 + alpha beta gamma/6 + beta^3/27 + gamma^2/4.
/// Same quantity as discriminant_exact at (r,s,t) = (-alpha, -beta, gamma).
Rational equilibrium_discriminant_exact(const EquationParams& eq);

/// real_root is the unique real root when Delta > 0, otherwise the real
/// root of largest modulus (ties broken toward the positive one).
CubicRoots characteristic_roots(const RecurrenceParams& params, const CubicOptions& options = {});

/// real_root is mu: the positive real root when one exists (always the case
/// for nonnegative alpha, beta and gamma > 0), otherwise the largest real
/// root. The remaining two roots are reported as they are; with Delta < 0
/// they are real equilibria as well.
CubicRoots equilibrium_roots(const EquationParams& eq, const CubicOptions& options = {});

/// |phi+chi+psi - r|, |phi chi + phi psi + chi psi + s|, |phi chi psi - t|.
std::array<double, 3> root_identity_residuals(const CubicRoots& roots,
                                              const RecurrenceParams& params);

/// |z^3 - r z^2 - s z - t|.
double characteristic_residual(const RecurrenceParams& params, std::complex<double> z);

/// |z^3 + alpha z^2 + beta z - gamma|.
double equilibrium_residual(const EquationParams& eq, std::complex<double> z);

}  // namespace tribo
