#pragma once

// Adaptive quadrature for the frequency integrals of the atom-wall problem:
// semi-infinite domains, a simple pole on the real axis taken in the
// principal-value sense, oscillatory integrands, and exponential or Bose
// damping.
//
// The panel rule is 21-point Gauss-Kronrod with the usual embedded 10-point
// Gauss error estimate. Panels are refined globally (largest error first).
// A principal value is computed by symmetric pole subtraction: over a window
// [p - d, p + d] the integral of g(k)/(k - p) is rewritten as
//   integral_0^d [g(p + t) - g(p - t)] / t dt,
// which is regular, and the rest of the domain is integrated directly.

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <type_traits>
#include <variant>
#include <vector>

namespace atomwall::quad {

struct NoRegulator {};
// Multiplies the integrand by exp(-eps k).
struct ExponentialRegulator {
  double eps;
};
// Multiplies the integrand by 1 / (exp(lambda_T k) - 1).
struct BoseRegulator {
  double lambda_T;
};
using Regulator = std::variant<NoRegulator, ExponentialRegulator, BoseRegulator>;

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  // Simple pole of the integrand, strictly inside (lower, upper).
  std::optional<double> pole;
  // Half-width of the symmetric subtraction window. Defaults to
  // min(pole - lower, upper - pole, pole / 2).
  std::optional<double> pole_halfwidth;
  Regulator regulator = NoRegulator{};
  // Phase rate of an oscillatory integrand; the domain is pre-split into
  // panels of length pi / oscillation. Zero means not oscillatory.
  double oscillation = 0.0;
  // Bisections allowed beyond the initial panels.
  int max_subdivisions = 20000;
  // Optional analytic bound on |integral from K to infinity| for the cutoff K
  // chosen under an exponential or Bose regulator.
  std::function<double(double)> tail_bound;

  // Throws DomainError for inconsistent settings.
  void validate() const;
  double halfwidth() const;
};

template <class T>
struct IntegralResult {
  T value{};
  double err_estimate = 0.0;
  int subdivisions_used = 0;
  bool converged = false;
};

using Complex = std::complex<double>;

template <class F>
using value_of_t = std::invoke_result_t<const F&, double>;

namespace detail {

template <class T>
IntegralResult<T> integrate_impl(const std::function<T(double)>& f, const QuadratureSpec& spec);

template <class T>
IntegralResult<T> pv_impl(const std::function<T(double)>& numerator, const QuadratureSpec& spec);

// Weight applied by a regulator at k.
double regulator_weight(const Regulator& r, double k);

// Upper cutoff used for a regulated semi-infinite domain starting at `from`.
double regulated_cutoff(const Regulator& r, double from);

}  // namespace detail

// Integral of f over [spec.lower, spec.upper] times the regulator weight.
// A semi-infinite domain is truncated (regulated), mapped to a finite
// interval (plain decaying integrand) or summed over half-periods with Wynn
// epsilon acceleration (plain oscillatory integrand).
template <class F>
IntegralResult<value_of_t<F>> adaptive_semi_infinite(const F& f, const QuadratureSpec& spec) {
  using T = value_of_t<F>;
  return detail::integrate_impl<T>(std::function<T(double)>(f), spec);
}

// Principal value of integral numerator(k) w(k) / (k - spec.pole) dk, w being
// the regulator weight. Without a pole this is adaptive_semi_infinite.
// Budget exhaustion is reported through converged = false, never thrown.
template <class F>
IntegralResult<value_of_t<F>> pv_integrate(const F& numerator, const QuadratureSpec& spec) {
  using T = value_of_t<F>;
  return detail::pv_impl<T>(std::function<T(double)>(numerator), spec);
}

// Superscript of the A^(+/-) integrals: A^(+) goes with the non-resonant
// minus-resonant combination 1/(k+k0) - 1/(k-k0), A^(-) with the sum.
enum class ApmSign { plus, minus };

using AnalyticFn = std::function<Complex(Complex)>;

// A^(s)(k0, f) = integral_0^inf f(k) e^{i k lambda} [1/(k+k0) -/+ 1/(k-k0)] dk
// evaluated directly on the real axis as a principal value.
IntegralResult<Complex> apm_direct(const AnalyticFn& f, double lambda, double k0, ApmSign sign,
                                   const QuadratureSpec& spec = {});

// Same quantity through the contour identity
//   A^(+/-) = -/+ i pi f(k0) e^{i k0 lambda}
//             + integral_0^inf [f(k) e^{ik lambda} -/+ f(-k) e^{-ik lambda}] / (k + k0) dk,
// valid for f analytic with |f(k)| e^{-lambda |Im k|} -> 0. The remaining
// integral has no pole. Throws QuadratureError if it fails to converge,
// which is how a violated decay condition shows up.
IntegralResult<Complex> apm_identity(const AnalyticFn& f, double lambda, double k0, ApmSign sign,
                                     const QuadratureSpec& spec = {});

// eps -> 0 limit of a regulated integral by Richardson extrapolation over
// eps0, eps0/2, ..., eps0/2^(levels-1), assuming an expansion in integer
// powers of eps. Meant for oracle paths.
template <class T>
IntegralResult<T> regulated_limit(const std::function<IntegralResult<T>(double)>& at_eps,
                                  double eps0, int levels = 6);

extern template IntegralResult<double> regulated_limit<double>(
    const std::function<IntegralResult<double>(double)>&, double, int);
extern template IntegralResult<Complex> regulated_limit<Complex>(
    const std::function<IntegralResult<Complex>(double)>&, double, int);

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// estimate and a heuristic error from the last few estimates.
template <class T>
struct Extrapolated {
  T value{};
  double error = std::numeric_limits<double>::infinity();
};

template <class T>
Extrapolated<T> wynn_epsilon(const std::vector<T>& partial_sums);

}  // namespace atomwall::quad
