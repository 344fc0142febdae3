#pragma once

// Zero-temperature atom-wall potentials, normalized to hbar c alpha0 k0^4,
// as functions of x0 = 2 k0 z.
//
//   v0rr = H0rr(x0) / (pi x0^3)          radiation reaction, state independent
//   v0fr = [H0 - H0rr](x0) / (pi x0^3)   vacuum field fluctuations
//   vg   = v0rr + v0fr                   ground state
//   ve   = v0rr - v0fr = 2 v0rr - vg     excited state

#include "atomwall/specfun.hpp"

namespace atomwall::vacuum {

struct VacuumResult {
  double v0rr = 0.0;
  double v0fr = 0.0;
  double vg = 0.0;
  double ve = 0.0;
  // Spontaneous emission rate in units of the free-space rate 2 c alpha0 k0^4.
  double gamma_ratio = 1.0;
};

// All of these throw DomainError for x0 <= 0.
double v0rr(double x0);
double v0fr(double x0, const specfun::EvalPolicy& policy = {});
double vg(double x0, const specfun::EvalPolicy& policy = {});
double ve(double x0, const specfun::EvalPolicy& policy = {});
VacuumResult vacuum_potentials(double x0, const specfun::EvalPolicy& policy = {});

// Limiting forms.
double asymptotic_lvdw(double x0);       // -1/x0^3, short distance
double asymptotic_cp(double x0);         // -6/(pi x0^4), retarded ground state
double asymptotic_resonant(double x0);   // 6/(pi x0^4) + cos(x0)/x0, excited state

// Gamma(z) / Gamma_free = 1 - G(x0).
double spontaneous_rate_ratio(double x0);

// Rate of change of the ground-state energy due to emission; identically zero.
constexpr double ground_energy_rate() noexcept { return 0.0; }

struct Extremum {
  double x0;
  double value;
};

// Local maximum / minimum of ve near x0 = 2 pi n and x0 = 2 pi (n - 1/2),
// found by golden-section search over a window of half-width pi/2 around
// the guess. n >= 1.
Extremum excited_maximum(int n, double x_tol = 1e-9);
Extremum excited_minimum(int n, double x_tol = 1e-9);

}  // namespace atomwall::vacuum
