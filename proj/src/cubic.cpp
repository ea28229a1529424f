#include "tribo/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tribo {

namespace {

using Complex = std::complex<double>;

const Complex kOmega(-0.5, std::sqrt(3.0) / 2.0);  // exp(2 pi i / 3)

// Coefficients of x^3 - r x^2 - s x - t.
struct MonicCubic {
  double r;
  double s;
  double t;

  Complex value(Complex z) const { return ((z - r) * z - s) * z - t; }
  Complex derivative(Complex z) const { return (3.0 * z - 2.0 * r) * z - s; }
};

Complex polish(const MonicCubic& cubic, Complex z, int max_steps) {
  double residual = std::abs(cubic.value(z));
  for (int i = 0; i < max_steps && residual > 0.0; ++i) {
    const Complex d = cubic.derivative(z);
    if (std::abs(d) < std::numeric_limits<double>::min()) break;
    const Complex next = z - cubic.value(z) / d;
    const double next_residual = std::abs(cubic.value(next));
    if (!(next_residual < residual)) break;
    z = next;
    residual = next_residual;
  }
  return z;
}

double polish_real(const MonicCubic& cubic, double x, int max_steps) {
  return polish(cubic, Complex(x, 0.0), max_steps).real();
}

// Cardano roots in the labeling phi = r/3 + A + B, chi = r/3 + wA + w^2 B,
// psi = r/3 + w^2 A + w B. B is tied to A through A B = r^2/9 + s/3 so the
// three expressions are roots for every branch of the principal cube root.
std::array<Complex, 3> cardano(double r, double s, double t, double delta) {
  const double shift = r / 3.0;
  const double base = r * r * r / 27.0 + r * s / 6.0 + t / 2.0;
  const double ab = r * r / 9.0 + s / 3.0;
  const Complex root_delta = std::sqrt(Complex(delta, 0.0));

  const Complex plus = base + root_delta;
  const Complex minus = base - root_delta;
  // Cube-root the larger-magnitude radicand to avoid cancellation.
  Complex a = std::pow(std::abs(plus) >= std::abs(minus) ? plus : minus, 1.0 / 3.0);
  Complex b;
  if (std::abs(a) > 0.0) {
    b = ab / a;
  } else {
    a = 0.0;
    b = 0.0;
  }
  if (std::abs(plus) < std::abs(minus)) std::swap(a, b);

  const Complex w = kOmega;
  const Complex w2 = kOmega * kOmega;
  return {shift + a + b, shift + w * a + w2 * b, shift + w2 * a + w * b};
}

// Polishes Cardano roots. Exactly one real root when delta > 0, three
// otherwise.
std::array<Complex, 3> solve(const MonicCubic& cubic, double delta, int delta_sign,
                             int max_steps) {
  auto roots = cardano(cubic.r, cubic.s, cubic.t, delta);

  if (delta_sign > 0) {
    std::size_t real_index = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(roots[i].imag()) < std::abs(roots[real_index].imag())) real_index = i;
    }
    std::swap(roots[0], roots[real_index]);
    roots[0] = Complex(polish_real(cubic, roots[0].real(), max_steps), 0.0);
    Complex pair = polish(cubic, roots[1].imag() >= 0 ? roots[1] : roots[2], max_steps);
    if (pair.imag() < 0) pair = std::conj(pair);
    roots[1] = pair;
    roots[2] = std::conj(pair);
  } else {
    for (auto& z : roots) z = Complex(polish_real(cubic, z.real(), max_steps), 0.0);
  }
  return roots;
}

CubicRoots package(const std::array<Complex, 3>& roots, std::size_t chosen, double delta,
                   int delta_sign, double dominance_tol) {
  CubicRoots out;
  out.real_root = roots[chosen].real();
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != chosen) out.other_roots[k++] = roots[i];
  }
  out.delta = delta;
  out.all_real = delta_sign <= 0;
  const double lead = std::abs(out.real_root);
  out.strictly_dominant_real = lead > std::abs(out.other_roots[0]) + dominance_tol &&
                               lead > std::abs(out.other_roots[1]) + dominance_tol;
  return out;
}

Rational depressed_delta(const Rational& r, const Rational& s, const Rational& t) {
  return r * r * r * t / 27 - r * r * s * s / 108 + r * s * t / 6 - s * s * s / 27 + t * t / 4;
}

}  // namespace

Rational discriminant_exact(const RecurrenceParams& params) {
  return depressed_delta(params.r, params.s, params.t);
}

double discriminant(const RecurrenceParams& params) {
  return to_double(discriminant_exact(params));
}

Rational equilibrium_discriminant_exact(const EquationParams& eq) {
  const Rational& a = eq.alpha();
  const Rational& b = eq.beta();
  const Rational& g = eq.gamma();
  return -a * a * a * g / 27 - a * a * b * b / 108 + a * b * g / 6 + b * b * b / 27 + g * g / 4;
}

CubicRoots characteristic_roots(const RecurrenceParams& params, const CubicOptions& options) {
  const Rational delta_q = discriminant_exact(params);
  const double delta = to_double(delta_q);
  const MonicCubic cubic{to_double(params.r), to_double(params.s), to_double(params.t)};
  const auto roots = solve(cubic, delta, sgn(delta_q), options.max_newton_steps);

  std::size_t chosen = 0;
  if (sgn(delta_q) <= 0) {
    for (std::size_t i = 1; i < 3; ++i) {
      const double mi = std::abs(roots[i].real());
      const double mc = std::abs(roots[chosen].real());
      if (mi > mc || (mi == mc && roots[i].real() > roots[chosen].real())) chosen = i;
    }
  }
  return package(roots, chosen, delta, sgn(delta_q), options.dominance_tol);
}

CubicRoots equilibrium_roots(const EquationParams& eq, const CubicOptions& options) {
  // x^3 + alpha x^2 + beta x - gamma is the characteristic cubic at (-alpha, -beta, gamma).
  const Rational delta_q = equilibrium_discriminant_exact(eq);
  const double delta = to_double(delta_q);
  const MonicCubic cubic{-to_double(eq.alpha()), -to_double(eq.beta()), to_double(eq.gamma())};
  const auto roots = solve(cubic, delta, sgn(delta_q), options.max_newton_steps);

  std::size_t chosen = 0;
  if (sgn(delta_q) <= 0) {
    bool have_positive = roots[0].real() > 0.0;
    for (std::size_t i = 1; i < 3; ++i) {
      const double x = roots[i].real();
      const bool positive = x > 0.0;
      if (positive && !have_positive) {
        chosen = i;
        have_positive = true;
      } else if (positive == have_positive && x > roots[chosen].real()) {
        chosen = i;
      }
    }
  }
  return package(roots, chosen, delta, sgn(delta_q), options.dominance_tol);
}

std::array<double, 3> root_identity_residuals(const CubicRoots& roots,
                                              const RecurrenceParams& params) {
  const auto z = roots.all();
  const Complex sum = z[0] + z[1] + z[2];
  const Complex pairs = z[0] * z[1] + z[0] * z[2] + z[1] * z[2];
  const Complex product = z[0] * z[1] * z[2];
  return {std::abs(sum - to_double(params.r)), std::abs(pairs + to_double(params.s)),
          std::abs(product - to_double(params.t))};
}

double characteristic_residual(const RecurrenceParams& params, std::complex<double> z) {
  const MonicCubic cubic{to_double(params.r), to_double(params.s), to_double(params.t)};
  return std::abs(cubic.value(z));
}

double equilibrium_residual(const EquationParams& eq, std::complex<double> z) {
  const MonicCubic cubic{-to_double(eq.alpha()), -to_double(eq.beta()), to_double(eq.gamma())};
  return std::abs(cubic.value(z));
}

}  // namespace tribo
