#pragma once

// Parameters of x_{n+1} = gamma / (x_n (x_{n-1} + alpha) + beta).

#include "tribo/rational.hpp"

namespace tribo {

enum class Admissibility {
  Strict,      // alpha, beta, gamma >= 0 and gamma != 0
  Permissive,  // any rationals with gamma != 0; out-of-range values are flagged
};

class EquationParams {
 public:
  /// Throws DomainError when gamma = 0, or (Strict) when any parameter is
  /// negative.
  EquationParams(Rational alpha, Rational beta, Rational gamma,
                 Admissibility mode = Admissibility::Strict);

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }
  const Rational& gamma() const noexcept { return gamma_; }

  /// True when constructed permissively with a negative parameter.
  bool outside_standard_domain() const noexcept { return outside_standard_domain_; }

  friend bool operator==(const EquationParams& a, const EquationParams& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.gamma_ == b.gamma_;
  }

 private:
  Rational alpha_;
  Rational beta_;
  Rational gamma_;
  bool outside_standard_domain_ = false;
};

}  // namespace tribo
