#include "tribo/recurrence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tribo/cubic.hpp"
#include "tribo/errors.hpp"

namespace tribo {

namespace {

void require_backward(const RecurrenceParams& params) {
  if (is_zero(params.t)) {
    throw DomainError("negative indices need t != 0 (the backward extension divides by t)");
  }
}

using Complex = std::complex<double>;

Complex ipow(Complex base, long exponent) {
  if (exponent < 0) {
    base = 1.0 / base;
    exponent = -exponent;
  }
  Complex result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

const Rational& SequenceWindow::at(long n) const {
  if (!contains(n)) {
    throw std::out_of_range("index " + std::to_string(n) + " outside window [" +
                            std::to_string(lo_) + ", " + std::to_string(hi()) + "]");
  }
  return values_[static_cast<std::size_t>(n - lo_)];
}

SequenceWindow v_window(const RecurrenceParams& params, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty index window");
  if (lo < 0) require_backward(params);

  const long start = std::min(lo, 0L);
  const long stop = std::max(hi, 2L);
  std::vector<Rational> v(static_cast<std::size_t>(stop - start + 1));
  auto slot = [&](long n) -> Rational& { return v[static_cast<std::size_t>(n - start)]; };

  slot(0) = 0;
  slot(1) = 1;
  slot(2) = params.r;
  for (long n = 3; n <= stop; ++n) {
    slot(n) = params.r * slot(n - 1) + params.s * slot(n - 2) + params.t * slot(n - 3);
  }
  if (start < 0) {
    const Rational inv_t = 1 / params.t;
    const Rational s_over_t = params.s * inv_t;
    const Rational r_over_t = params.r * inv_t;
    for (long n = 1; n <= -start; ++n) {
      slot(-n) = -s_over_t * slot(-(n - 1)) - r_over_t * slot(-(n - 2)) + inv_t * slot(-(n - 3));
    }
  }

  std::vector<Rational> out(v.begin() + (lo - start), v.begin() + (hi - start) + 1);
  return SequenceWindow(lo, std::move(out));
}

Rational v_forward(const RecurrenceParams& params, long n) {
  if (n < 0) throw std::invalid_argument("v_forward needs n >= 0");
  return v_window(params, 0, n).at(n);
}

Rational v_backward(const RecurrenceParams& params, long n) {
  if (n < 1) throw std::invalid_argument("v_backward needs n >= 1");
  require_backward(params);
  return v_window(params, -n, 0).at(-n);
}

Rational v_exact(const RecurrenceParams& params, long n) {
  return n >= 0 ? v_forward(params, n) : v_backward(params, -n);
}

double v_binet(const RecurrenceParams& params, long n, const BinetOptions& options) {
  if (n < 0) require_backward(params);

  CubicOptions cubic_options;
  cubic_options.imag_tol = options.imag_tol;
  cubic_options.dominance_tol = options.dominance_tol;
  const CubicRoots roots = characteristic_roots(params, cubic_options);
  const auto rho = roots.all();

  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(rho[i] - rho[j]) <= options.dominance_tol) {
        throw RepeatedRoots("characteristic roots are not distinct; Binet form is undefined");
      }
    }
  }

  const double r = to_double(params.r);
  const double s = to_double(params.s);
  const double t = to_double(params.t);

  Complex sum(0.0, 0.0);
  for (int i = 0; i < 3; ++i) {
    const Complex denom = (rho[i] - rho[(i + 1) % 3]) * (rho[i] - rho[(i + 2) % 3]);
    if (n >= 0) {
      sum += ipow(rho[i], n + 1) / denom;
    } else {
      const long m = -n;
      const Complex weight = (rho[i] * rho[i] - r * rho[i] - s) / t;
      sum += weight * ipow(rho[i], 2 - m) / denom;
    }
  }

  if (std::abs(sum.imag()) >= options.imag_tol * std::max(1.0, std::abs(sum.real()))) {
    throw DomainError("Binet sum has a non-negligible imaginary part at n=" + std::to_string(n));
  }
  return sum.real();
}

std::vector<CoefficientTriple> coefficient_window(const RecurrenceParams& params, long lo,
                                                  long hi) {
  if (lo > hi) throw std::invalid_argument("empty index window");
  if (lo < -2) require_backward(params);

  const long start = std::min(lo, -2L);
  const long stop = std::max(hi, 0L);
  std::vector<CoefficientTriple> rows(static_cast<std::size_t>(stop - start + 1));
  auto slot = [&](long k) -> CoefficientTriple& {
    return rows[static_cast<std::size_t>(k - start)];
  };

  slot(0) = {1, 0, 0};
  slot(-1) = {0, 1, 0};
  slot(-2) = {0, 0, 1};
  for (long k = 1; k <= stop; ++k) {
    const CoefficientTriple& prev = slot(k - 1);
    slot(k) = {params.r * prev.a + prev.b, params.s * prev.a + prev.c, params.t * prev.a};
  }
  for (long k = -3; k >= start; --k) {
    // Invert the system: a_k = c_{k+1}/t, b_k = a_{k+1} - r a_k, c_k = b_{k+1} - s a_k.
    const CoefficientTriple& next = slot(k + 1);
    CoefficientTriple& cur = slot(k);
    cur.a = next.c / params.t;
    cur.b = next.a - params.r * cur.a;
    cur.c = next.b - params.s * cur.a;
  }

  return {rows.begin() + (lo - start), rows.begin() + (hi - start) + 1};
}

std::vector<CoefficientTriple> coefficients_from_first(const RecurrenceParams& params, long lo) {
  if (lo > 0) throw std::invalid_argument("coefficients_from_first needs lo <= 0");
  require_backward(params);
  std::vector<CoefficientTriple> rows;
  CoefficientTriple next{params.r, params.s, params.t};
  for (long k = 0; k >= lo; --k) {
    CoefficientTriple cur;
    cur.a = next.c / params.t;
    cur.b = next.a - params.r * cur.a;
    cur.c = next.b - params.s * cur.a;
    rows.push_back(cur);
    next = cur;
  }
  std::reverse(rows.begin(), rows.end());
  return rows;
}

Rational a_sequence(const RecurrenceParams& params, long n) {
  return coefficient_window(params, n, n).front().a;
}

SpecialSequence make_special(NamedSequence kind) {
  switch (kind) {
    case NamedSequence::Tribonacci:
      return {kind, {1, 1, 1}, 1};  // a_n = T_{n+1}
    case NamedSequence::Padovan:
      return {kind, {0, 1, 1}, -2};  // a_{n+2} = P_n
    case NamedSequence::PadovanPerrin:
      return {kind, {0, 1, 1}, 2};  // a_n = S_{n+2}
    case NamedSequence::Narayana:
      return {kind, {1, 0, 1}, 1};  // a_n = N_{n+1}
    case NamedSequence::JacobsthalThird:
      return {kind, {1, 1, 2}, 1};  // a_n = J_{n+1}
  }
  throw std::invalid_argument("unknown named sequence");
}

Rational named_term(const SpecialSequence& seq, long m) {
  return a_sequence(seq.params, m - seq.shift);
}

std::string_view name_of(NamedSequence kind) {
  switch (kind) {
    case NamedSequence::Tribonacci: return "tribonacci";
    case NamedSequence::Padovan: return "padovan";
    case NamedSequence::PadovanPerrin: return "padovan-perrin";
    case NamedSequence::Narayana: return "narayana";
    case NamedSequence::JacobsthalThird: return "jacobsthal3";
  }
  return "unknown";
}

NamedSequence parse_named_sequence(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "tribonacci") return NamedSequence::Tribonacci;
  if (key == "padovan") return NamedSequence::Padovan;
  if (key == "padovanperrin" || key == "perrin") return NamedSequence::PadovanPerrin;
  if (key == "narayana") return NamedSequence::Narayana;
  if (key == "jacobsthal3" || key == "jacobsthalthird" || key == "jacobsthal") {
    return NamedSequence::JacobsthalThird;
  }
  throw std::invalid_argument("unknown sequence kind '" + std::string(name) + "'");
}

}  // namespace tribo
