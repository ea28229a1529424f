#pragma once

// Two views of the initial pairs that break the equation.
//
// FormulaBased: the closed-form denominators
//   D_n = t V_n x_{-1} x_0 + (V_{n+2} - r V_{n+1}) x_0 + V_{n+1},  n >= -1.
// Operational: an orbit step whose denominator x_{k-1}(x_{k-2} + alpha) + beta
// is zero.
//
// The formula set is an infinite union, so membership is only decided up to a
// horizon; "no hit" always means "no hit within the horizon". The two views
// differ on x_0 = 0: D_{-1} = x_0 excludes it, while the orbit itself is well
// defined there (x_1 = gamma/beta).

#include <optional>
#include <string>
#include <vector>

#include "tribo/equation.hpp"
#include "tribo/rational.hpp"

namespace tribo {

inline constexpr long kDefaultHorizon = 500;

enum class WitnessKind { FormulaBased, Operational };

struct ForbiddenHit {
  long index;
  Rational denominator_value;  // always zero
  WitnessKind witness_kind;
};

/// First n in [-1, horizon] with D_n = 0.
std::optional<ForbiddenHit> is_forbidden_formula(const EquationParams& eq, const Rational& x_m1,
                                                 const Rational& x_0,
                                                 long horizon = kDefaultHorizon);

/// Every n in [-1, horizon] with D_n = 0.
std::vector<long> formula_hits(const EquationParams& eq, const Rational& x_m1,
                               const Rational& x_0, long horizon = kDefaultHorizon);

/// Step k <= horizon at which the orbit hits a zero denominator.
std::optional<long> is_singular_orbit(const EquationParams& eq, const Rational& x_m1,
                                      const Rational& x_0, long horizon = kDefaultHorizon);

/// Operational witness in ForbiddenHit form (index = singular step).
std::optional<ForbiddenHit> operational_hit(const EquationParams& eq, const Rational& x_m1,
                                            const Rational& x_0, long horizon = kDefaultHorizon);

enum class ForbiddenAgreement {
  Agree,                // both silent, or both hit at the same index
  FormulaOnlyAtXZero,   // D_{-1} = x_0 = 0 with no matching orbit singularity
  Disagree,             // anything else
};

struct ForbiddenComparison {
  long horizon = 0;
  std::optional<ForbiddenHit> formula;
  std::optional<ForbiddenHit> operational;
  ForbiddenAgreement agreement = ForbiddenAgreement::Agree;
  std::string note;
};

ForbiddenComparison compare_forbidden(const EquationParams& eq, const Rational& x_m1,
                                      const Rational& x_0, long horizon = kDefaultHorizon);

std::string_view name_of(WitnessKind kind);
std::string_view name_of(ForbiddenAgreement agreement);

}  // namespace tribo
