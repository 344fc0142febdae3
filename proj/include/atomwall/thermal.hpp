#pragma once

// Thermal corrections at normalized temperature theta = 2 kB T / (hbar omega0).
// With L = k0 lambda_T = 2 / theta and u = k / k0 the Bose-weighted
// field-fluctuation term is
//
//   v_T = (2/pi) PV integral_0^inf u^3 G(x0 u) / ((1 - u^2)(e^{L u} - 1)) du
//
// using the two-level polarizability alpha0 / (1 - u^2), whose static value
// is alpha0. The ground state gets vg + v_T and the excited state ve - v_T.
//
// The closed form obtained from the high-temperature expansion is
//   v_closed = -theta/x0^3 - 2 v0rr / (e^L - 1)      (ground state)
// and the Boltzmann-weighted average over both levels collapses to
//   v_average = -theta tanh(1/theta) / x0^3.
//
// theta = 0 belongs to the vacuum module; everything here requires theta > 0
// unless stated otherwise.

#include <vector>

#include "atomwall/core_types.hpp"
#include "atomwall/quadrature.hpp"

namespace atomwall::thermal {

// 1 / (e^xi - 1) without overflow for large xi. Throws DomainError for xi <= 0.
double bose_occupation(double xi);

struct ThermalResult {
  double v_T = 0.0;
  double v_ground = 0.0;
  double v_excited = 0.0;
  double v_average = 0.0;
  double p_ground = 1.0;
};

enum class ThermalMethod { closed_form, quadrature };

// Bose-weighted principal-value integral above. Targets rel 1e-8 or abs
// 1e-14 max(1, |vg|); the pole at u = 1 is removed by symmetric subtraction
// over a window of half-width min(1/2, theta/2) and the domain is cut at
// max(50/L, 1 + 40/L) with an analytic tail bound.
quad::IntegralResult<double> v_T_integral(double x0, double theta);
// Same, throwing QuadratureError when the target is not reached.
double v_T_quadrature(double x0, double theta);

// z << lambda_T form: 2 pi^3 / (45 L^4) - (2 pi)^5 / 315 (x0/2)^2 / L^6.
double v_T_smallz(double x0, double theta);

// Large-distance ground-state limit -theta / x0^3.
double lifshitz(double x0, double theta);

// Split of v_T used in the high-temperature derivation:
//   d1 = -theta/x0^3 - theta v0rr
//   d2 = -v0fr
//   d3 = v0rr (theta - coth(1/theta))
// so that v0rr + v0fr + d1 + d2 + d3 = v_closed.
struct DeltaTerms {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};
DeltaTerms delta_T_terms(double x0, double theta);

double v_closed(double x0, double theta);

// Ground-state occupation 1 / (1 + e^{-2/theta}); p_ground(0) = 1.
double p_ground(double theta);

double v_average(double x0, double theta);
// tanh(1/theta) v_closed + 2 v0rr / (e^{2/theta} + 1); equal to v_average.
double v_average_assembled(double x0, double theta);
// v_closed - 2 e^{-2/theta} [v0fr + (v_closed - vg)], for theta << 1.
double v_average_lowT(double x0, double theta);
// e^{-2/theta}: weight of the excited-state admixture at low temperature.
double low_temperature_weight(double theta);

ThermalResult thermal_potentials(double x0, double theta,
                                 ThermalMethod method = ThermalMethod::closed_form);

// rr / vacuum fr / thermal split for one state, using the closed form.
PotentialBreakdown breakdown(double x0, double theta, AtomState state);

// Even-index Bernoulli numbers B_2, B_4, ..., B_2N.
class BernoulliTable {
 public:
  explicit BernoulliTable(int n = 10);
  int size() const noexcept { return static_cast<int>(b_.size()); }
  // B_{2n}, 1 <= n <= size().
  double b2n(int n) const;

 private:
  std::vector<double> b_;
};

// -2 sum_{n=1}^{terms} B_2n xi^(2n-1) / (2n)!, the series of 2/xi - coth(xi/2).
// Converges for xi < 2 pi.
double bernoulli_partial_sum(double xi, int terms);

// coth(y) - 1/y, accurate for small y.
double coth_minus_inverse(double y);

namespace detail {
// Pole-subtracted integrand [g(1 + t) - g(1 - t)] / t of the v_T integral.
double pv_window_integrand(double x0, double theta, double t);
}  // namespace detail

}  // namespace atomwall::thermal
