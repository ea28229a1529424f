#pragma once

// Generalized Tribonacci numbers V_n, defined by
//
//   V_{n+3} = r V_{n+2} + s V_{n+1} + t V_n,   V_0 = 0, V_1 = 1, V_2 = r,
//
// and extended to negative indices through
//
//   V_{-n} = -(s/t) V_{-(n-1)} - (r/t) V_{-(n-2)} + (1/t) V_{-(n-3)}   (t != 0).
//
// Two exact routes are provided: the V recurrence itself, and the coupled
// coefficient system (a_k, b_k, c_k) that arises when the third-order
// recurrence is unrolled k times. The two agree through a_n = V_{n+1}.
// Binet evaluation is the floating-point route.

#include <array>
#include <complex>
#include <string_view>
#include <vector>

#include "tribo/rational.hpp"

namespace tribo {

struct RecurrenceParams {
  Rational r;
  Rational s;
  Rational t;

  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

/// Contiguous window V_lo .. V_hi of a sequence. Out-of-window access throws.
class SequenceWindow {
 public:
  SequenceWindow(long lo, std::vector<Rational> values) : lo_(lo), values_(std::move(values)) {}

  long lo() const noexcept { return lo_; }
  long hi() const noexcept { return lo_ + static_cast<long>(values_.size()) - 1; }
  bool contains(long n) const noexcept { return n >= lo_ && n <= hi(); }
  const Rational& at(long n) const;
  const Rational& operator[](long n) const { return at(n); }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  long lo_;
  std::vector<Rational> values_;
};

/// V_n for n >= 0 by forward iteration.
Rational v_forward(const RecurrenceParams& params, long n);

/// V_{-n} for n >= 1. Throws DomainError when t = 0.
Rational v_backward(const RecurrenceParams& params, long n);

/// V_n for any integer n (backward extension for n < 0).
Rational v_exact(const RecurrenceParams& params, long n);

/// V_lo .. V_hi in one pass. Requires t != 0 when lo < 0.
SequenceWindow v_window(const RecurrenceParams& params, long lo, long hi);

struct BinetOptions {
  double imag_tol = 1e-8;       // scaled by max(1, |Re|)
  double dominance_tol = 1e-10;  // minimum pairwise root separation
};

/// Binet evaluation of V_n in complex double precision. For n < 0 the
/// negative-subscript form with (rho^2 - r rho - s)/t weights is used.
/// Throws RepeatedRoots when two roots are closer than dominance_tol, and
/// DomainError when the result is not real to within imag_tol (or t = 0 and
/// n < 0).
double v_binet(const RecurrenceParams& params, long n, const BinetOptions& options = {});

/// One row of the unrolled coefficient system
///   a_k = r a_{k-1} + b_{k-1},  b_k = s a_{k-1} + c_{k-1},  c_k = t a_{k-1}.
struct CoefficientTriple {
  Rational a;
  Rational b;
  Rational c;

  friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
};

/// Triples for k = lo .. hi, seeded from the table
///   (a,b,c)_0 = (1,0,0), (a,b,c)_{-1} = (0,1,0), (a,b,c)_{-2} = (0,0,1).
/// Indices below -2 are reached by inverting the system and need t != 0.
std::vector<CoefficientTriple> coefficient_window(const RecurrenceParams& params, long lo,
                                                  long hi);

/// Runs the coefficient system backward from (a,b,c)_1 = (r,s,t) down to
/// index `lo` (lo <= 0). Requires t != 0; used to check the seed table.
std::vector<CoefficientTriple> coefficients_from_first(const RecurrenceParams& params, long lo);

/// a_n of the coefficient system. Throws DomainError for n < -2 with t = 0.
Rational a_sequence(const RecurrenceParams& params, long n);

// ---------------------------------------------------------------------------
// Named sequences.
//
// Each named sequence X is tied to the internal a-sequence by a fixed index
// shift: a_n = X_{n + shift}. Padovan and PadovanPerrin share the
// coefficients (0,1,1) and the same a-table; only the shift differs
// (a_{n+2} = P_n versus a_n = S_{n+2}). Both aliases are kept as declared.

enum class NamedSequence { Tribonacci, Padovan, PadovanPerrin, Narayana, JacobsthalThird };

inline constexpr std::array<NamedSequence, 5> kAllNamedSequences = {
    NamedSequence::Tribonacci, NamedSequence::Padovan, NamedSequence::PadovanPerrin,
    NamedSequence::Narayana, NamedSequence::JacobsthalThird};

struct SpecialSequence {
  NamedSequence kind;
  RecurrenceParams params;
  long shift;  // a_n = X_{n + shift}
};

SpecialSequence make_special(NamedSequence kind);

/// X_m for the named sequence, i.e. a_{m - shift}.
Rational named_term(const SpecialSequence& seq, long m);

std::string_view name_of(NamedSequence kind);

/// Accepts "tribonacci", "padovan", "padovan-perrin", "narayana",
/// "jacobsthal3" (and a few spelling variants). Throws std::invalid_argument.
NamedSequence parse_named_sequence(std::string_view name);

}  // namespace tribo
