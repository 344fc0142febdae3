#include "atomwall/vacuum.hpp"

#include <cmath>
#include <functional>

#include "atomwall/constants.hpp"
#include "atomwall/errors.hpp"

namespace atomwall::vacuum {

namespace {

constexpr double pi = constants::pi;

void require_positive(double x0) {
  if (!(x0 > 0.0)) throw DomainError("x0 must be positive");
}

double cube(double x) { return x * x * x; }

// Golden-section search for the minimum of f on [a, b].
Extremum golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace

double v0rr(double x0) {
  require_positive(x0);
  return specfun::H0rr(x0) / (pi * cube(x0));
}

double v0fr(double x0, const specfun::EvalPolicy& policy) {
  require_positive(x0);
  return specfun::H0fr(x0, policy) / (pi * cube(x0));
}

double vg(double x0, const specfun::EvalPolicy& policy) {
  require_positive(x0);
  return specfun::H0(x0, policy) / (pi * cube(x0));
}

double ve(double x0, const specfun::EvalPolicy& policy) {
  return 2.0 * v0rr(x0) - vg(x0, policy);
}

VacuumResult vacuum_potentials(double x0, const specfun::EvalPolicy& policy) {
  VacuumResult r;
  r.v0rr = v0rr(x0);
  r.vg = vg(x0, policy);
  r.v0fr = v0fr(x0, policy);
  r.ve = 2.0 * r.v0rr - r.vg;
  r.gamma_ratio = spontaneous_rate_ratio(x0);
  return r;
}

double asymptotic_lvdw(double x0) {
  require_positive(x0);
  return -1.0 / cube(x0);
}

double asymptotic_cp(double x0) {
  require_positive(x0);
  return -6.0 / (pi * x0 * cube(x0));
}

double asymptotic_resonant(double x0) {
  require_positive(x0);
  return 6.0 / (pi * x0 * cube(x0)) + std::cos(x0) / x0;
}

double spontaneous_rate_ratio(double x0) {
  require_positive(x0);
  return 1.0 - specfun::geom_G(x0);
}

Extremum excited_maximum(int n, double x_tol) {
  if (n < 1) throw DomainError("extremum index must be >= 1");
  const double c = 2.0 * pi * n;
  auto neg = [](double x) { return -ve(x); };
  Extremum e = golden_min(neg, c - pi / 2.0, c + pi / 2.0, x_tol);
  e.value = -e.value;
  return e;
}

Extremum excited_minimum(int n, double x_tol) {
  if (n < 1) throw DomainError("extremum index must be >= 1");
  const double c = 2.0 * pi * (n - 0.5);
  return golden_min([](double x) { return ve(x); }, c - pi / 2.0, c + pi / 2.0, x_tol);
}

}  // namespace atomwall::vacuum
