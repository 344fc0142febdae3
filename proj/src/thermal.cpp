#include "atomwall/thermal.hpp"

#include <algorithm>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>

#include "atomwall/constants.hpp"
#include "atomwall/errors.hpp"
#include "atomwall/specfun.hpp"
#include "atomwall/vacuum.hpp"

namespace atomwall::thermal {

namespace {

constexpr double pi = constants::pi;

void require(double x0, double theta) {
  if (!(x0 > 0.0)) throw DomainError("x0 must be positive");
  if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("theta must be positive");
}

// 1 / (e^xi + 1)
double fermi(double xi) {
  const double e = std::exp(-xi);
  return e / (1.0 + e);
}

// Numerator of the v_T integrand over (u - 1), without the Bose weight.
double numerator(double x0, double u) {
  return -(2.0 / pi) * u * u * u * specfun::geom_G(x0 * u) / (1.0 + u);
}

double weighted(double x0, double L, double u) {
  if (u <= 0.0) return 0.0;
  return numerator(x0, u) * bose_occupation(L * u);
}

}  // namespace

double bose_occupation(double xi) {
  if (!(xi > 0.0)) throw DomainError("Bose occupation needs k lambda_T > 0");
  if (xi > 1.0) {
    const double e = std::exp(-xi);
    return e / (1.0 - e);
  }
  return 1.0 / std::expm1(xi);
}

quad::IntegralResult<double> v_T_integral(double x0, double theta) {
  require(x0, theta);
  const double L = 2.0 / theta;
  quad::QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  spec.abs_tol = 1e-14 * std::max(1.0, std::abs(vacuum::vg(x0)));
  spec.pole = 1.0;
  spec.pole_halfwidth = std::min(0.5, 0.5 * theta);
  spec.regulator = quad::BoseRegulator{L};
  spec.oscillation = x0;
  spec.max_subdivisions = 50000;
  // |G| <= 1 and u^3 / (u^2 - 1) <= u K^2 / (K^2 - 1) beyond K.
  spec.tail_bound = [L](double K) {
    const double e = std::exp(-L * K);
    return (2.0 / pi) * K * K / (K * K - 1.0) * e * (K / L + 1.0 / (L * L)) / (1.0 - e);
  };
  return quad::pv_integrate([x0](double u) { return numerator(x0, u); }, spec);
}

double v_T_quadrature(double x0, double theta) {
  const auto r = v_T_integral(x0, theta);
  if (!r.converged)
    throw QuadratureError("thermal integral did not reach its tolerance", r.value, r.err_estimate);
  return r.value;
}

double v_T_smallz(double x0, double theta) {
  require(x0, theta);
  const double L = 2.0 / theta;
  const double L2 = L * L;
  const double half = 0.5 * x0;
  return 2.0 * pi * pi * pi / (45.0 * L2 * L2) -
         std::pow(2.0 * pi, 5) / 315.0 * half * half / (L2 * L2 * L2);
}

double lifshitz(double x0, double theta) {
  require(x0, theta);
  return -theta / (x0 * x0 * x0);
}

double coth_minus_inverse(double y) {
  if (!(y > 0.0)) throw DomainError("coth(y) - 1/y needs y > 0");
  if (y < 0.5) {
    // sum_{n>=1} 2^2n B_2n y^(2n-1) / (2n)!
    const double y2 = y * y;
    double pw = y;
    double sum = 0.0;
    for (int n = 1; n <= 12; ++n) {
      sum += std::ldexp(boost::math::bernoulli_b2n<double>(n), 2 * n) * pw /
             boost::math::factorial<double>(2 * n);
      pw *= y2;
    }
    return sum;
  }
  return 1.0 / std::tanh(y) - 1.0 / y;
}

DeltaTerms delta_T_terms(double x0, double theta) {
  require(x0, theta);
  const double rr = vacuum::v0rr(x0);
  DeltaTerms d;
  d.d1 = -theta / (x0 * x0 * x0) - theta * rr;
  d.d2 = -vacuum::v0fr(x0);
  d.d3 = -rr * coth_minus_inverse(1.0 / theta);
  return d;
}

double v_closed(double x0, double theta) {
  require(x0, theta);
  return -theta / (x0 * x0 * x0) - 2.0 * vacuum::v0rr(x0) * bose_occupation(2.0 / theta);
}

double p_ground(double theta) {
  if (theta == 0.0) return 1.0;
  if (!(theta > 0.0)) throw DomainError("theta must be non-negative");
  return 1.0 / (1.0 + std::exp(-2.0 / theta));
}

double v_average(double x0, double theta) {
  require(x0, theta);
  return -theta * std::tanh(1.0 / theta) / (x0 * x0 * x0);
}

double v_average_assembled(double x0, double theta) {
  require(x0, theta);
  return std::tanh(1.0 / theta) * v_closed(x0, theta) + 2.0 * vacuum::v0rr(x0) * fermi(2.0 / theta);
}

double low_temperature_weight(double theta) {
  if (!(theta > 0.0)) throw DomainError("theta must be positive");
  return std::exp(-2.0 / theta);
}

double v_average_lowT(double x0, double theta) {
  require(x0, theta);
  const double v = v_closed(x0, theta);
  const double v_T = v - vacuum::vg(x0);
  return v - 2.0 * low_temperature_weight(theta) * (vacuum::v0fr(x0) + v_T);
}

ThermalResult thermal_potentials(double x0, double theta, ThermalMethod method) {
  require(x0, theta);
  const auto vac = vacuum::vacuum_potentials(x0);
  ThermalResult r;
  r.v_T = (method == ThermalMethod::quadrature) ? v_T_quadrature(x0, theta) : v_closed(x0, theta) - vac.vg;
  r.v_ground = vac.vg + r.v_T;
  r.v_excited = vac.ve - r.v_T;
  r.p_ground = p_ground(theta);
  r.v_average = r.p_ground * r.v_ground + (1.0 - r.p_ground) * r.v_excited;
  return r;
}

PotentialBreakdown breakdown(double x0, double theta, AtomState state) {
  PotentialBreakdown b;
  b.v_rr = vacuum::v0rr(x0);
  b.v_fr_vac = vacuum::v0fr(x0);
  b.state = state;
  if (theta > 0.0) {
    b.v_thermal = v_closed(x0, theta) - vacuum::vg(x0);
    b.p_ground = p_ground(theta);
  } else if (theta < 0.0) {
    throw DomainError("theta must be non-negative");
  }
  return b;
}

BernoulliTable::BernoulliTable(int n) {
  if (n < 1) throw DomainError("Bernoulli table needs at least one entry");
  b_.resize(n);
  boost::math::bernoulli_b2n<double>(1, n, b_.begin());
}

double BernoulliTable::b2n(int n) const {
  if (n < 1 || n > size()) throw DomainError("Bernoulli index out of range");
  return b_[n - 1];
}

double bernoulli_partial_sum(double xi, int terms) {
  if (!(xi > 0.0)) throw DomainError("xi must be positive");
  const BernoulliTable table(std::max(terms, 10));
  double sum = 0.0;
  double pw = xi;  // xi^(2n-1)
  for (int n = 1; n <= terms; ++n) {
    sum += table.b2n(n) * pw / boost::math::factorial<double>(2 * n);
    pw *= xi * xi;
  }
  return -2.0 * sum;
}

namespace detail {

double pv_window_integrand(double x0, double theta, double t) {
  require(x0, theta);
  if (!(t > 0.0 && t < 1.0)) throw DomainError("window offset must lie in (0, 1)");
  const double L = 2.0 / theta;
  return (weighted(x0, L, 1.0 + t) - weighted(x0, L, 1.0 - t)) / t;
}

}  // namespace detail

}  // namespace atomwall::thermal
