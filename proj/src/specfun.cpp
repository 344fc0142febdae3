#include "atomwall/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "atomwall/constants.hpp"
#include "atomwall/errors.hpp"

namespace atomwall::specfun {

namespace {

constexpr double pi = constants::pi;
constexpr double gamma_e = constants::euler_gamma;
constexpr double eps = std::numeric_limits<double>::epsilon();

}  // namespace

void EvalPolicy::validate() const {
  if (!(small_x_crossover > 0.0)) throw DomainError("small_x_crossover must be positive");
  if (!(target_rel_err > 0.0 && target_rel_err < 1e-6))
    throw DomainError("target_rel_err must lie in (0, 1e-6)");
}

namespace detail {

double si_series(double x) {
  // Si(x) = sum (-1)^n x^(2n+1) / ((2n+1) (2n+1)!)
  const double x2 = x * x;
  double term = x;  // (-1)^n x^(2n+1) / (2n+1)!
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
    const double add = term / (2.0 * n + 1.0);
    sum += add;
    if (std::abs(add) < 0.25 * eps * std::abs(sum)) break;
  }
  return sum;
}

double ci_series_remainder(double x) {
  // Ci(x) - gamma - ln x = sum_{n>=1} (-1)^n x^(2n) / (2n (2n)!)
  const double x2 = x * x;
  double term = 1.0;  // (-1)^n x^(2n) / (2n)!
  double sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    term *= -x2 / ((2.0 * n - 1.0) * (2.0 * n));
    const double add = term / (2.0 * n);
    sum += add;
    if (std::abs(add) < 0.25 * eps * std::abs(sum)) break;
  }
  return sum;
}

AuxPair aux_continued_fraction(double x) {
  // Modified Lentz on exp(ix) E1(ix) = 1/(1+ix - 1/(3+ix - 4/(5+ix - ...))).
  constexpr double tiny = 1e-300;
  std::complex<double> b(1.0, x);
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -double(i - 1) * double(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 2.0 * eps) break;
  }
  return {-h.imag(), h.real()};
}

double H0_asymptotic(double x) {
  // H0(x) ~ sum_m c_m / x^(2m+1),  c_m = (-1)^(m+1) 2 (2m)! (2m+3)(m+1).
  const double inv_x2 = 1.0 / (x * x);
  double term = -6.0 / x;
  double sum = term;
  double prev_abs = std::abs(term);
  for (int m = 0; m < 200; ++m) {
    const double ratio = -(2.0 * m + 1.0) * (2.0 * m + 2.0) * (2.0 * m + 5.0) * (m + 2.0) /
                         ((2.0 * m + 3.0) * (m + 1.0));
    const double next = term * ratio * inv_x2;
    if (std::abs(next) >= prev_abs) break;  // past the smallest term
    sum += next;
    term = next;
    prev_abs = std::abs(next);
    if (prev_abs < 0.25 * eps * std::abs(sum)) break;
  }
  return sum;
}

double H0_composed(double x, const EvalPolicy& policy) {
  return (x * x - 2.0) * aux_F(x, policy) + 2.0 * x * aux_Gcal(x, policy) - x;
}

double H0fr_small(double x) {
  // H0 - H0rr = x + sum_{k>=1} x^(2k+1) (a_k + b_k L),  L = gamma + ln x.
  // Odd powers only; the even-power and rr terms cancel exactly.
  static constexpr double a[] = {
      -1.0 / 9.0,
      17.0 / 100.0,
      -187.0 / 14112.0,
      461.0 / 1166400.0,
      -8651.0 / 1366041600.0,
      98473.0 / 1545433344000.0,
      -87869.0 / 199168865280000.0,
      20279821.0 / 9079099445864448000.0,
      -47015341.0 / 5443689799236648960000.0,
  };
  static constexpr double b[] = {
      1.0 / 3.0,
      -1.0 / 10.0,
      1.0 / 168.0,
      -1.0 / 6480.0,
      1.0 / 443520.0,
      -1.0 / 47174400.0,
      1.0 / 7185024000.0,
      -1.0 / 1482030950400.0,
      1.0 / 397533007872000.0,
  };
  const double L = gamma_e + std::log(x);
  const double x2 = x * x;
  // Horner in x^2 from the highest order down.
  double acc = 0.0;
  for (int k = 8; k >= 0; --k) acc = acc * x2 + (a[k] + b[k] * L);
  return x + x * x2 * acc;
}

}  // namespace detail

double si(double x, const EvalPolicy& policy) {
  if (!(x >= 0.0)) throw DomainError("si(x) requires x >= 0");
  if (x == 0.0) return -pi / 2.0;
  if (std::isinf(x)) return 0.0;
  if (x <= policy.small_x_crossover) return detail::si_series(x) - pi / 2.0;
  const auto [f, g] = detail::aux_continued_fraction(x);
  return -f * std::cos(x) - g * std::sin(x);
}

double Ci(double x, const EvalPolicy& policy) {
  if (!(x > 0.0)) throw DomainError("Ci(x) requires x > 0");
  if (std::isinf(x)) return 0.0;
  if (x <= policy.small_x_crossover) return gamma_e + std::log(x) + detail::ci_series_remainder(x);
  const auto [f, g] = detail::aux_continued_fraction(x);
  return f * std::sin(x) - g * std::cos(x);
}

double aux_F(double x, const EvalPolicy& policy) {
  if (!(x >= 0.0)) throw DomainError("aux_F(x) requires x >= 0");
  if (x == 0.0) return pi / 2.0;
  if (x <= policy.small_x_crossover) return Ci(x, policy) * std::sin(x) - si(x, policy) * std::cos(x);
  return detail::aux_continued_fraction(x).f;
}

double aux_Gcal(double x, const EvalPolicy& policy) {
  if (!(x > 0.0)) throw DomainError("aux_Gcal(x) diverges at x <= 0");
  if (x <= policy.small_x_crossover) return Ci(x, policy) * std::cos(x) + si(x, policy) * std::sin(x);
  return -detail::aux_continued_fraction(x).g;
}

double geom_G(double x) {
  if (!(x >= 0.0)) throw DomainError("geom_G(x) requires x >= 0");
  if (x < detail::geom_G_series_crossover) {
    // G(x) = sum (-1)^n x^(2n) (2n+1)(2n+2) / (2n+3)!
    const double x2 = x * x;
    double p = 1.0 / 6.0;  // (-1)^n x^(2n) / (2n+3)!
    double sum = 2.0 * p;
    for (int n = 1; n < 60; ++n) {
      p *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
      const double add = p * (2.0 * n + 1.0) * (2.0 * n + 2.0);
      sum += add;
      if (std::abs(add) < 0.25 * eps * std::abs(sum)) break;
    }
    return sum;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  return s / x + 2.0 * c / (x * x) - 2.0 * s / (x * x * x);
}

double H0rr(double x) {
  if (!(x >= 0.0)) throw DomainError("H0rr(x) requires x >= 0");
  const double c = std::cos(x);
  return -pi * (c + x * std::sin(x) - 0.5 * x * x * c);
}

double H0(double x, const EvalPolicy& policy) {
  if (!(x > 0.0)) throw DomainError("H0(x) requires x > 0");
  if (x <= detail::H0fr_small_crossover) return H0rr(x) + detail::H0fr_small(x);
  if (x >= detail::H0_asymptotic_crossover) return detail::H0_asymptotic(x);
  return detail::H0_composed(x, policy);
}

double H0fr(double x, const EvalPolicy& policy) {
  if (!(x > 0.0)) throw DomainError("H0fr(x) requires x > 0");
  if (x <= detail::H0fr_small_crossover) return detail::H0fr_small(x);
  return H0(x, policy) - H0rr(x);
}

}  // namespace atomwall::specfun
