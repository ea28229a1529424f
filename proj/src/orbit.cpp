#include "tribo/orbit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tribo/errors.hpp"

namespace tribo {

EquationParams::EquationParams(Rational alpha, Rational beta, Rational gamma, Admissibility mode)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (is_zero(gamma_)) throw DomainError("gamma must be nonzero");
  const bool negative = sgn(alpha_) < 0 || sgn(beta_) < 0 || sgn(gamma_) < 0;
  if (negative && mode == Admissibility::Strict) {
    throw DomainError("alpha, beta and gamma must be nonnegative (use permissive mode to explore)");
  }
  outside_standard_domain_ = negative;
}

RecurrenceParams params_to_recurrence(const EquationParams& eq) {
  return {eq.beta() / eq.gamma(), eq.alpha() / eq.gamma(), 1 / eq.gamma()};
}

EquationParams recurrence_to_equation(const RecurrenceParams& params, Admissibility mode) {
  if (is_zero(params.t)) throw DomainError("t = 0 has no matching equation (gamma = 1/t)");
  return EquationParams(params.s / params.t, params.r / params.t, 1 / params.t, mode);
}

const Rational& Orbit::x(long n) const {
  if (n == -1) return x_m1;
  if (n == 0) return x_0;
  if (n < -1 || n > last_index()) {
    throw std::out_of_range("orbit index " + std::to_string(n) + " is not available");
  }
  return values[static_cast<std::size_t>(n - 1)];
}

Orbit iterate(const EquationParams& eq, const Rational& x_m1, const Rational& x_0, long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  Orbit orbit{x_m1, x_0, {}, std::nullopt};
  orbit.values.reserve(static_cast<std::size_t>(n_max));

  Rational prev = x_m1;
  Rational cur = x_0;
  for (long k = 1; k <= n_max; ++k) {
    Rational denom = cur * (prev + eq.alpha()) + eq.beta();
    if (is_zero(denom)) {
      orbit.singular_at = k;
      break;
    }
    Rational next = eq.gamma() / denom;
    orbit.values.push_back(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return orbit;
}

ClosedForm::ClosedForm(const EquationParams& eq, Rational x_m1, Rational x_0, long n_max)
    : params_(params_to_recurrence(eq)),
      v_(v_window(params_, -1, std::max(n_max, 0L) + 2)),
      x_m1_(std::move(x_m1)),
      x_0_(std::move(x_0)),
      product_(x_m1_ * x_0_),
      n_max_(n_max) {}

Rational ClosedForm::denominator(long n) const {
  if (n < -1 || n > n_max_) throw std::out_of_range("denominator index outside evaluator range");
  return params_.t * v_[n] * product_ + (v_[n + 2] - params_.r * v_[n + 1]) * x_0_ + v_[n + 1];
}

Rational ClosedForm::numerator(long n) const {
  if (n < 0 || n > n_max_) throw std::out_of_range("numerator index outside evaluator range");
  return params_.t * v_[n - 1] * product_ + (v_[n + 1] - params_.r * v_[n]) * x_0_ + v_[n];
}

Rational ClosedForm::value(long n) const {
  Rational d = denominator(n);
  if (is_zero(d)) throw SingularDenominator(n);
  return numerator(n) / d;
}

Rational closed_form(const EquationParams& eq, const Rational& x_m1, const Rational& x_0, long n) {
  if (n < 0) throw std::invalid_argument("closed_form needs n >= 0");
  return ClosedForm(eq, x_m1, x_0, n).value(n);
}

long OrbitComparison::agree_count() const noexcept {
  long count = 0;
  for (const auto& v : indices) count += v.equal ? 1 : 0;
  return count;
}

OrbitComparison compare_orbit(const EquationParams& eq, const Rational& x_m1, const Rational& x_0,
                              long n_max) {
  OrbitComparison report;
  report.n_max = n_max;
  const Orbit orbit = iterate(eq, x_m1, x_0, n_max);
  report.iterate_singular_at = orbit.singular_at;

  const ClosedForm closed(eq, x_m1, x_0, n_max);
  for (long n = 1; n <= n_max; ++n) {
    if (is_zero(closed.denominator(n))) {
      report.closed_singular_at = n;
      break;
    }
  }

  long stop = n_max;
  if (orbit.singular_at) stop = std::min(stop, *orbit.singular_at - 1);
  if (report.closed_singular_at) stop = std::min(stop, *report.closed_singular_at - 1);
  for (long n = 1; n <= stop; ++n) {
    Rational c = closed.value(n);
    const Rational& it = orbit.x(n);
    const bool equal = (c == it);
    report.indices.push_back({n, it, std::move(c), equal});
  }
  return report;
}

Rational special_case_closed_form(NamedSequence kind, const Rational& x_m1, const Rational& x_0,
                                  long n) {
  if (n < 0) throw std::invalid_argument("special_case_closed_form needs n >= 0");
  const SpecialSequence seq = make_special(kind);
  // Every case formula touches X_{n-4} .. X_{n+3} at most.
  const long lo = n - 4 - seq.shift;
  const auto a = coefficient_window(seq.params, lo, n + 3 - seq.shift);
  auto X = [&](long m) -> const Rational& {
    return a.at(static_cast<std::size_t>(m - seq.shift - lo)).a;
  };

  const Rational xx = x_m1 * x_0;
  Rational num;
  Rational den;
  switch (kind) {
    case NamedSequence::Tribonacci:
      num = X(n - 1) * xx + (X(n + 1) - X(n)) * x_0 + X(n);
      den = X(n) * xx + (X(n) + X(n - 1)) * x_0 + X(n + 1);
      break;
    case NamedSequence::Padovan:
      num = X(n - 4) * xx + X(n - 2) * x_0 + X(n - 3);
      den = X(n - 3) * xx + X(n - 1) * x_0 + X(n - 2);
      break;
    case NamedSequence::PadovanPerrin:
      num = X(n) * xx + X(n + 2) * x_0 + X(n + 1);
      den = X(n + 1) * xx + X(n + 3) * x_0 + X(n + 2);
      break;
    case NamedSequence::Narayana:
      num = X(n - 1) * xx + X(n - 2) * x_0 + X(n);
      den = X(n) * xx + X(n - 1) * x_0 + X(n + 1);
      break;
    case NamedSequence::JacobsthalThird:
      num = 2 * X(n - 1) * xx + (X(n + 1) - X(n)) * x_0 + X(n);
      den = 2 * X(n) * xx + (X(n + 2) - X(n + 1)) * x_0 + X(n + 1);
      break;
  }
  if (is_zero(den)) throw SingularDenominator(n);
  return num / den;
}

WSubstitutionReport w_substitution_check(const EquationParams& eq, const Rational& w_m2,
                                         const Rational& w_m1, const Rational& w_0, long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  const RecurrenceParams params = params_to_recurrence(eq);

  WSubstitutionReport report;
  report.n_max = n_max;
  report.w = {w_m2, w_m1, w_0};
  for (long n = 1; n <= n_max; ++n) {
    const Rational& w1 = report.w_at(n - 1);
    const Rational& w2 = report.w_at(n - 2);
    const Rational& w3 = report.w_at(n - 3);
    report.w.push_back(params.r * w1 + params.s * w2 + params.t * w3);
  }
  for (long n = -2; n <= n_max; ++n) {
    if (is_zero(report.w_at(n))) report.zero_indices.push_back(n);
  }

  // a_{-1} .. a_{n_max+1}
  const auto coeff = coefficient_window(params, -1, n_max + 1);
  auto a = [&](long k) -> const Rational& { return coeff[static_cast<std::size_t>(k + 1)].a; };
  for (long n = 0; n <= n_max; ++n) {
    const Rational combined =
        a(n) * w_0 + (a(n + 1) - params.r * a(n)) * w_m1 + params.t * a(n - 1) * w_m2;
    ++report.representation_checked;
    if (combined != report.w_at(n)) report.representation_holds = false;
  }

  // x_k = w_{k-1}/w_k for k >= -1; the step n -> n+1 uses x_{n-1}, x_n, x_{n+1}.
  for (long n = 0; n + 1 <= n_max; ++n) {
    if (is_zero(report.w_at(n - 1)) || is_zero(report.w_at(n)) || is_zero(report.w_at(n + 1))) {
      continue;
    }
    const Rational x_prev = report.w_at(n - 2) / report.w_at(n - 1);
    const Rational x_cur = report.w_at(n - 1) / report.w_at(n);
    const Rational x_next = report.w_at(n) / report.w_at(n + 1);
    ++report.equation_checked;
    if (x_next * (x_cur * (x_prev + eq.alpha()) + eq.beta()) != eq.gamma()) {
      report.equation_holds = false;
    }
  }
  return report;
}

}  // namespace tribo
