#pragma once

// Special functions behind the closed-form atom-wall potentials.
//
//   si(x)  = -pi/2 + integral_0^x sin t / t dt
//   Ci(x)  = gamma + ln x + integral_0^x (cos t - 1) / t dt
//   F(x)   = Ci(x) sin x - si(x) cos x            (aux_F)
//   Gc(x)  = F'(x) = Ci(x) cos x + si(x) sin x    (aux_Gcal)
//   G(x)   = sin x / x + 2 cos x / x^2 - 2 sin x / x^3   (geom_G)
//   H0rr(x)= -pi (cos x + x sin x - x^2 cos x / 2)
//   H0(x)  = (x^2 - 2) F(x) + 2 x Gc(x) - x
//
// Two different functions conventionally go by "G": the mirror-image
// geometric factor (geom_G) and the derivative of the auxiliary function F
// (aux_Gcal). They are unrelated; keep the names apart.

namespace atomwall::specfun {

struct EvalPolicy {
  // si/Ci switch from the power series to the continued fraction here.
  double small_x_crossover = 4.0;
  double target_rel_err = 1e-12;

  // Throws DomainError on out-of-range settings.
  void validate() const;
};

double si(double x, const EvalPolicy& policy = {});
double Ci(double x, const EvalPolicy& policy = {});

double aux_F(double x, const EvalPolicy& policy = {});
double aux_Gcal(double x, const EvalPolicy& policy = {});

double geom_G(double x);

double H0rr(double x);
double H0(double x, const EvalPolicy& policy = {});

// H0 - H0rr: the vacuum field-fluctuation kernel. Computed from a dedicated
// small-x expansion near zero where the two kernels nearly cancel.
double H0fr(double x, const EvalPolicy& policy = {});

namespace detail {

// Branches exposed for crossover and oracle tests.
struct AuxPair {
  double f;  // F(x)
  double g;  // -Gc(x)
};

// Power series for Si(x) and Ci(x) - gamma - ln x.
double si_series(double x);
double ci_series_remainder(double x);
// Continued fraction for exp(ix) E1(ix) = g - i f; accurate for x >= ~2.
AuxPair aux_continued_fraction(double x);

// Asymptotic expansion of H0 in odd inverse powers of x; valid for large x.
double H0_asymptotic(double x);
// H0 by direct composition of F and Gc.
double H0_composed(double x, const EvalPolicy& policy = {});
// Small-x expansion of H0 - H0rr.
double H0fr_small(double x);

inline constexpr double H0_asymptotic_crossover = 40.0;
inline constexpr double H0fr_small_crossover = 0.5;
inline constexpr double geom_G_series_crossover = 2.0;

}  // namespace detail

}  // namespace atomwall::specfun
