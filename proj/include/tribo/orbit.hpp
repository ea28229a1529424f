#pragma once

// Exact orbits of x_{n+1} = gamma / (x_n (x_{n-1} + alpha) + beta) and the
// closed form
//
//         t V_{n-1} x_{-1} x_0 + (V_{n+1} - r V_n) x_0 + V_n
//   x_n = --------------------------------------------------------,
//         t V_n x_{-1} x_0 + (V_{n+2} - r V_{n+1}) x_0 + V_{n+1}
//
// with (r, s, t) = (beta/gamma, alpha/gamma, 1/gamma).

#include <optional>
#include <vector>

#include "tribo/equation.hpp"
#include "tribo/rational.hpp"
#include "tribo/recurrence.hpp"

namespace tribo {

/// (r, s, t) = (beta/gamma, alpha/gamma, 1/gamma). t is never zero.
RecurrenceParams params_to_recurrence(const EquationParams& eq);

/// Inverse map: (alpha, beta, gamma) = (s/t, r/t, 1/t). Throws DomainError
/// when t = 0.
EquationParams recurrence_to_equation(const RecurrenceParams& params,
                                      Admissibility mode = Admissibility::Strict);

/// A trajectory x_{-1}, x_0, x_1, ..., x_N.
///
/// singular_at = k means the denominator x_{k-1}(x_{k-2} + alpha) + beta
/// vanished, so x_k is undefined; values then holds x_1 .. x_{k-1}.
struct Orbit {
  Rational x_m1;
  Rational x_0;
  std::vector<Rational> values;  // x_1 .. x_N
  std::optional<long> singular_at;

  /// Highest index with a defined value (0 when values is empty).
  long last_index() const noexcept { return static_cast<long>(values.size()); }
  /// x_n for -1 <= n <= last_index().
  const Rational& x(long n) const;
};

Orbit iterate(const EquationParams& eq, const Rational& x_m1, const Rational& x_0, long n_max);

/// Closed-form evaluator for one initial pair, valid for indices up to n_max.
/// The generalized Tribonacci window V_{-1} .. V_{n_max+2} is computed once.
class ClosedForm {
 public:
  ClosedForm(const EquationParams& eq, Rational x_m1, Rational x_0, long n_max);

  /// t V_n x_{-1} x_0 + (V_{n+2} - r V_{n+1}) x_0 + V_{n+1}, for -1 <= n <= n_max.
  Rational denominator(long n) const;
  /// t V_{n-1} x_{-1} x_0 + (V_{n+1} - r V_n) x_0 + V_n, for 0 <= n <= n_max.
  Rational numerator(long n) const;
  /// x_n. Throws SingularDenominator when the denominator is zero.
  Rational value(long n) const;

  const RecurrenceParams& recurrence() const noexcept { return params_; }

 private:
  RecurrenceParams params_;
  SequenceWindow v_;
  Rational x_m1_;
  Rational x_0_;
  Rational product_;
  long n_max_;
};

/// x_n from the closed form. For n = 0 this is x_0.
Rational closed_form(const EquationParams& eq, const Rational& x_m1, const Rational& x_0, long n);

struct IndexVerdict {
  long n;
  Rational iterated;
  Rational closed;
  bool equal;
};

struct OrbitComparison {
  long n_max = 0;
  std::vector<IndexVerdict> indices;  // n = 1 .. (first singularity - 1) or n_max
  std::optional<long> iterate_singular_at;
  std::optional<long> closed_singular_at;  // first n >= 1 with a zero denominator

  long agree_count() const noexcept;
  long compared() const noexcept { return static_cast<long>(indices.size()); }
  bool singularity_agrees() const noexcept { return iterate_singular_at == closed_singular_at; }
  bool all_agree() const noexcept { return agree_count() == compared() && singularity_agrees(); }
};

OrbitComparison compare_orbit(const EquationParams& eq, const Rational& x_m1, const Rational& x_0,
                              long n_max);

/// The named-sequence form of the closed solution for the five special
/// coefficient triples, e.g. for Tribonacci
///   (T_{n-1} x_{-1} x_0 + (T_{n+1} - T_n) x_0 + T_n) /
///   (T_n x_{-1} x_0 + (T_n + T_{n-1}) x_0 + T_{n+1}).
/// Throws SingularDenominator when the denominator is zero.
Rational special_case_closed_form(NamedSequence kind, const Rational& x_m1, const Rational& x_0,
                                  long n);

/// Result of checking x_n = w_{n-1}/w_n against the linear recurrence
/// w_{n+1} = r w_n + s w_{n-1} + t w_{n-2}.
struct WSubstitutionReport {
  long n_max = 0;
  std::vector<Rational> w;  // w_{-2} .. w_{n_max}
  /// w_n = a_n w_0 + (a_{n+1} - r a_n) w_{-1} + t a_{n-1} w_{-2}, 0 <= n <= n_max.
  bool representation_holds = true;
  long representation_checked = 0;
  /// x_{n+1}(x_n(x_{n-1} + alpha) + beta) = gamma wherever the three
  /// x-values are defined.
  bool equation_holds = true;
  long equation_checked = 0;
  std::vector<long> zero_indices;  // n with w_n = 0

  const Rational& w_at(long n) const { return w.at(static_cast<std::size_t>(n + 2)); }
};

WSubstitutionReport w_substitution_check(const EquationParams& eq, const Rational& w_m2,
                                         const Rational& w_m1, const Rational& w_0, long n_max);

}  // namespace tribo
