#include "tribo/forbidden.hpp"

#include <stdexcept>

#include "tribo/orbit.hpp"

namespace tribo {

namespace {

void require_horizon(long horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
}

}  // namespace

std::vector<long> formula_hits(const EquationParams& eq, const Rational& x_m1,
                               const Rational& x_0, long horizon) {
  require_horizon(horizon);
  const ClosedForm closed(eq, x_m1, x_0, horizon);
  std::vector<long> hits;
  for (long n = -1; n <= horizon; ++n) {
    if (is_zero(closed.denominator(n))) hits.push_back(n);
  }
  return hits;
}

std::optional<ForbiddenHit> is_forbidden_formula(const EquationParams& eq, const Rational& x_m1,
                                                 const Rational& x_0, long horizon) {
  require_horizon(horizon);
  const ClosedForm closed(eq, x_m1, x_0, horizon);
  for (long n = -1; n <= horizon; ++n) {
    Rational d = closed.denominator(n);
    if (is_zero(d)) return ForbiddenHit{n, std::move(d), WitnessKind::FormulaBased};
  }
  return std::nullopt;
}

std::optional<long> is_singular_orbit(const EquationParams& eq, const Rational& x_m1,
                                      const Rational& x_0, long horizon) {
  require_horizon(horizon);
  return iterate(eq, x_m1, x_0, horizon).singular_at;
}

std::optional<ForbiddenHit> operational_hit(const EquationParams& eq, const Rational& x_m1,
                                            const Rational& x_0, long horizon) {
  require_horizon(horizon);
  const Orbit orbit = iterate(eq, x_m1, x_0, horizon);
  if (!orbit.singular_at) return std::nullopt;
  const long k = *orbit.singular_at;
  Rational d = orbit.x(k - 1) * (orbit.x(k - 2) + eq.alpha()) + eq.beta();
  return ForbiddenHit{k, std::move(d), WitnessKind::Operational};
}

ForbiddenComparison compare_forbidden(const EquationParams& eq, const Rational& x_m1,
                                      const Rational& x_0, long horizon) {
  ForbiddenComparison out;
  out.horizon = horizon;
  out.formula = is_forbidden_formula(eq, x_m1, x_0, horizon);
  out.operational = operational_hit(eq, x_m1, x_0, horizon);

  if (!out.formula && !out.operational) {
    out.agreement = ForbiddenAgreement::Agree;
    out.note = "no hit within horizon " + std::to_string(horizon);
  } else if (out.formula && out.operational && out.formula->index == out.operational->index) {
    out.agreement = ForbiddenAgreement::Agree;
    out.note = "both detectors hit at n=" + std::to_string(out.formula->index);
  } else if (out.formula && out.formula->index == -1) {
    // D_{-1} = x_0; the orbit does not need x_0 != 0.
    out.agreement = ForbiddenAgreement::FormulaOnlyAtXZero;
    out.note = "formula member n=-1 excludes x_0 = 0; orbit ";
    out.note += out.operational ? "is singular at n=" + std::to_string(out.operational->index)
                                : "is regular within horizon";
  } else {
    out.agreement = ForbiddenAgreement::Disagree;
    out.note = "detectors disagree";
  }
  return out;
}

std::string_view name_of(WitnessKind kind) {
  return kind == WitnessKind::FormulaBased ? "FormulaBased" : "Operational";
}

std::string_view name_of(ForbiddenAgreement agreement) {
  switch (agreement) {
    case ForbiddenAgreement::Agree: return "agree";
    case ForbiddenAgreement::FormulaOnlyAtXZero: return "formula-only-x0-zero";
    case ForbiddenAgreement::Disagree: return "disagree";
  }
  return "unknown";
}

}  // namespace tribo
