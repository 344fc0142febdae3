#include "atomwall/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "atomwall/constants.hpp"
#include "atomwall/errors.hpp"

namespace atomwall::quad {

namespace {

constexpr double pi = constants::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int max_initial_panels = 400000;
constexpr int max_cycles = 4000;
// Floor on a panel error estimate, in units of eps * integral of |f|.
constexpr double roundoff_factor = 5.0;

// 21-point Kronrod nodes/weights and the embedded 10-point Gauss weights.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478480, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double err;
  double resabs;
  int segment;
};

template <class T>
struct Segment {
  std::function<T(double)> fn;
  double a;
  double b;
  double oscillation;  // pre-split rate; 0 = single initial panel
};

template <class T>
Panel<T> gk21(const std::function<T(double)>& f, double a, double b, int segment) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T resk = wgk[10] * fc;
  T resg{};
  double resabs = wgk[10] * std::abs(fc);
  std::array<T, 10> f1{};
  std::array<T, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * xgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    resk += wgk[j] * (f1[j] + f2[j]);
    resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * (f1[j] + f2[j]);
  }
  const T reskh = 0.5 * resk;
  double resasc = wgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j)
    resasc += wgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

  const double ah = std::abs(half);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (roundoff_factor * eps)) err = std::max(roundoff_factor * eps * resabs, err);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
  return {a, b, resk * half, err, resabs, segment};
}

// Kahan summation; component-wise correct for complex values.
template <class T>
struct CompensatedSum {
  T sum{};
  T c{};
  void add(const T& y) {
    const T t1 = y - c;
    const T t2 = sum + t1;
    c = (t2 - sum) - t1;
    sum = t2;
  }
};

template <class T>
IntegralResult<T> adapt(const std::vector<Segment<T>>& segs, double abs_tol, double rel_tol,
                        int max_sub) {
  auto by_err = [](const Panel<T>& x, const Panel<T>& y) { return x.err < y.err; };
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, decltype(by_err)> heap(by_err);
  std::vector<Panel<T>> frozen;

  T total{};
  double total_err = 0.0;
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    const auto& seg = segs[s];
    if (!(seg.b > seg.a)) continue;
    int n = 1;
    if (seg.oscillation > 0.0) {
      const double cycles = std::ceil((seg.b - seg.a) * seg.oscillation / pi);
      n = static_cast<int>(std::clamp(cycles, 1.0, double(max_initial_panels)));
    }
    const double h = (seg.b - seg.a) / n;
    for (int i = 0; i < n; ++i) {
      const double a = seg.a + i * h;
      const double b = (i + 1 == n) ? seg.b : seg.a + (i + 1) * h;
      Panel<T> p = gk21(seg.fn, a, b, s);
      total += p.value;
      total_err += p.err;
      heap.push(p);
    }
  }

  int used = 0;
  while (!heap.empty() && used < max_sub) {
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    Panel<T> p = heap.top();
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    const bool at_roundoff = p.err <= roundoff_factor * eps * p.resabs * (1.0 + 1e-9);
    // panels this narrow only approach an endpoint singularity
    const bool too_narrow = p.b - p.a <= 64.0 * eps * std::max({std::abs(p.a), std::abs(p.b), 1e-250});
    if (!(mid > p.a && mid < p.b) || at_roundoff || too_narrow) {
      frozen.push_back(p);
      continue;
    }
    const auto& fn = segs[p.segment].fn;
    Panel<T> left = gk21(fn, p.a, mid, p.segment);
    Panel<T> right = gk21(fn, mid, p.b, p.segment);
    if (!std::isfinite(left.err + right.err)) {
      frozen.push_back(p);
      continue;
    }
    total += left.value + right.value - p.value;
    total_err += left.err + right.err - p.err;
    heap.push(left);
    heap.push(right);
    ++used;
  }

  CompensatedSum<T> val;
  double err = 0.0;
  for (const auto& p : frozen) {
    val.add(p.value);
    err += p.err;
  }
  while (!heap.empty()) {
    val.add(heap.top().value);
    err += heap.top().err;
    heap.pop();
  }
  IntegralResult<T> out;
  out.value = val.sum;
  out.err_estimate = err;
  out.subdivisions_used = used;
  out.converged = std::isfinite(err) && err <= std::max(abs_tol, rel_tol * std::abs(val.sum));
  return out;
}

double decay_rate(const Regulator& r) {
  if (const auto* e = std::get_if<ExponentialRegulator>(&r)) return e->eps;
  if (const auto* b = std::get_if<BoseRegulator>(&r)) return b->lambda_T;
  return 0.0;
}

// Crude envelope of the integral beyond K for regulated integrands without an
// analytic bound: sample |integrand| over a couple of decay lengths/periods.
template <class T>
double sampled_tail(const std::function<T(double)>& fn, double K, double rate, double omega) {
  double span = 2.0 / rate;
  if (omega > 0.0) span = std::max(span, 2.0 * pi / omega);
  double m = 0.0;
  constexpr int samples = 64;
  for (int i = 0; i <= samples; ++i) m = std::max(m, std::abs(fn(K + span * i / samples)));
  return 2.0 * m / rate;
}

template <class T>
IntegralResult<T> run(const std::function<T(double)>& numerator, const QuadratureSpec& spec) {
  spec.validate();
  const Regulator reg = spec.regulator;
  auto g = [numerator, reg](double k) -> T { return numerator(k) * detail::regulator_weight(reg, k); };

  std::vector<Segment<T>> finite;
  double start = spec.lower;
  std::function<T(double)> outer;  // integrand on [start, upper)

  if (spec.pole) {
    const double p = *spec.pole;
    const double d = spec.halfwidth();
    if (p - d > spec.lower)
      finite.push_back({[g, p](double k) { return g(k) / (k - p); }, spec.lower, p - d, spec.oscillation});
    finite.push_back({[g, p](double t) { return (g(p + t) - g(p - t)) / t; }, 0.0, d, spec.oscillation});
    start = p + d;
    outer = [g, p](double k) { return g(k) / (k - p); };
  } else {
    outer = g;
  }

  if (std::isfinite(spec.upper)) {
    finite.push_back({outer, start, spec.upper, spec.oscillation});
    return adapt(finite, spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
  }

  const double rate = decay_rate(reg);
  if (rate > 0.0) {
    const double K = detail::regulated_cutoff(reg, spec.pole.value_or(spec.lower));
    finite.push_back({outer, start, std::max(K, start), spec.oscillation});
    auto res = adapt(finite, spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
    const double Kc = std::max(K, start);
    const double tail = spec.tail_bound ? spec.tail_bound(Kc) : sampled_tail(outer, Kc, rate, spec.oscillation);
    res.err_estimate += tail;
    res.converged = res.converged && res.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
    return res;
  }

  if (spec.oscillation == 0.0) {
    // k = start + t / (1 - t), t in (0, 1).
    finite.push_back({[outer, start](double t) {
                        const double u = 1.0 - t;
                        return outer(start + t / u) / (u * u);
                      },
                      0.0, 1.0, 0.0});
    return adapt(finite, spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
  }

  // Plain oscillatory tail: half-period partial sums, Wynn epsilon.
  IntegralResult<T> head{};
  head.converged = true;
  if (!finite.empty()) head = adapt(finite, 0.1 * spec.abs_tol, spec.rel_tol, spec.max_subdivisions);
  const double h = pi / spec.oscillation;
  std::vector<T> sums;
  T running = head.value;
  double cycle_err = 0.0;
  int used = head.subdivisions_used;
  Extrapolated<T> best{};
  double best_cycle_err = 0.0;
  int best_at = 0;
  const int cycle_budget = std::min(max_cycles, std::max(16, spec.max_subdivisions));
  for (int j = 0; j < cycle_budget; ++j) {
    std::vector<Segment<T>> one{{outer, start + j * h, start + (j + 1) * h, 0.0}};
    auto c = adapt(one, 1e-3 * spec.abs_tol, 1e-13, 200);
    used += c.subdivisions_used;
    cycle_err += c.err_estimate;
    running += c.value;
    sums.push_back(running);
    if (sums.size() < 8) continue;
    const std::size_t window = std::min<std::size_t>(sums.size(), 40);
    std::vector<T> tail_sums(sums.end() - window, sums.end());
    const auto ext = wynn_epsilon(tail_sums);
    // Keep the best extrapolation seen; for growing integrands later
    // windows only lose digits.
    if (ext.error + cycle_err < best.error + best_cycle_err) {
      best = ext;
      best_cycle_err = cycle_err;
      best_at = j;
    }
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(best.value));
    if (best.error + best_cycle_err + head.err_estimate <= tol && j - best_at >= 4) break;
    if (j - best_at > 80) break;
  }
  IntegralResult<T> out;
  out.value = best.value;
  out.err_estimate = best.error + best_cycle_err + head.err_estimate;
  out.subdivisions_used = used;
  out.converged = head.converged && std::isfinite(out.err_estimate) &&
                  out.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
  return out;
}

template <class T>
T wynn_best(const T* s, std::size_t m) {
  std::vector<T> prev(m, T{});
  std::vector<T> cur(s, s + m);
  T best = s[m - 1];
  for (std::size_t k = 0; cur.size() >= 2; ++k) {
    std::vector<T> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const T d = cur[i + 1] - cur[i];
      if (std::abs(d) <= 1e-300) return (k % 2 == 0) ? cur[i + 1] : best;
      next[i] = prev[i + 1] + T(1.0) / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 1) best = cur.back();
  }
  return best;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("tolerances must be positive");
  if (!std::isfinite(lower)) throw DomainError("lower limit must be finite");
  if (!(upper > lower)) throw DomainError("upper limit must exceed lower limit");
  if (max_subdivisions < 0) throw DomainError("max_subdivisions must be non-negative");
  if (!(oscillation >= 0.0) || !std::isfinite(oscillation)) throw DomainError("oscillation must be >= 0");
  if (const auto* e = std::get_if<ExponentialRegulator>(&regulator); e && !(e->eps > 0.0))
    throw DomainError("exponential regulator needs eps > 0");
  if (const auto* b = std::get_if<BoseRegulator>(&regulator); b && !(b->lambda_T > 0.0))
    throw DomainError("Bose regulator needs lambda_T > 0");
  if (pole) {
    if (!(*pole > lower && *pole < upper)) throw DomainError("pole must lie strictly inside the domain");
    const double d = halfwidth();
    if (!(d > 0.0) || *pole - d < lower || *pole + d > upper)
      throw DomainError("pole window must be positive and inside the domain");
  }
}

double QuadratureSpec::halfwidth() const {
  if (!pole) return 0.0;
  if (pole_halfwidth) return *pole_halfwidth;
  double d = std::min(*pole - lower, 0.5 * std::abs(*pole));
  if (std::isfinite(upper)) d = std::min(d, upper - *pole);
  return d;
}

namespace detail {

double regulator_weight(const Regulator& r, double k) {
  if (const auto* e = std::get_if<ExponentialRegulator>(&r)) return std::exp(-e->eps * k);
  if (const auto* b = std::get_if<BoseRegulator>(&r)) {
    const double xi = b->lambda_T * k;
    if (xi > 1.0) {
      const double w = std::exp(-xi);
      return w / (1.0 - w);
    }
    return 1.0 / std::expm1(xi);
  }
  return 1.0;
}

double regulated_cutoff(const Regulator& r, double from) {
  const double rate = decay_rate(r);
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(50.0 / rate, from + 40.0 / rate);
}

template <class T>
IntegralResult<T> integrate_impl(const std::function<T(double)>& f, const QuadratureSpec& spec) {
  QuadratureSpec s = spec;
  s.pole.reset();
  return run<T>(f, s);
}

template <class T>
IntegralResult<T> pv_impl(const std::function<T(double)>& numerator, const QuadratureSpec& spec) {
  if (!spec.pole) return integrate_impl<T>(numerator, spec);
  return run<T>(numerator, spec);
}

template IntegralResult<double> integrate_impl<double>(const std::function<double(double)>&,
                                                       const QuadratureSpec&);
template IntegralResult<Complex> integrate_impl<Complex>(const std::function<Complex(double)>&,
                                                         const QuadratureSpec&);
template IntegralResult<double> pv_impl<double>(const std::function<double(double)>&,
                                                const QuadratureSpec&);
template IntegralResult<Complex> pv_impl<Complex>(const std::function<Complex(double)>&,
                                                  const QuadratureSpec&);

}  // namespace detail

IntegralResult<Complex> apm_direct(const AnalyticFn& f, double lambda, double k0, ApmSign sign,
                                   const QuadratureSpec& spec) {
  if (!(lambda > 0.0) || !(k0 > 0.0)) throw DomainError("A^(+/-) needs lambda > 0 and k0 > 0");
  // f e^{ik lambda} [1/(k+k0) -/+ 1/(k-k0)] = N(k) / (k - k0)
  const double s = (sign == ApmSign::plus) ? -1.0 : 1.0;
  auto numerator = [f, lambda, k0, s](double k) {
    const Complex phase = std::exp(Complex(0.0, k * lambda));
    return f(Complex(k, 0.0)) * phase * ((k - k0) / (k + k0) + s);
  };
  QuadratureSpec q = spec;
  q.lower = 0.0;
  q.upper = std::numeric_limits<double>::infinity();
  q.pole = k0;
  if (q.oscillation == 0.0) q.oscillation = lambda;
  return pv_integrate(numerator, q);
}

IntegralResult<Complex> apm_identity(const AnalyticFn& f, double lambda, double k0, ApmSign sign,
                                     const QuadratureSpec& spec) {
  if (!(lambda > 0.0) || !(k0 > 0.0)) throw DomainError("A^(+/-) needs lambda > 0 and k0 > 0");
  const double s = (sign == ApmSign::plus) ? -1.0 : 1.0;
  auto bracket = [f, lambda, k0, s](double k) {
    const Complex e_plus = std::exp(Complex(0.0, k * lambda));
    const Complex e_minus = std::conj(e_plus);
    return (f(Complex(k, 0.0)) * e_plus + s * f(Complex(-k, 0.0)) * e_minus) / (k + k0);
  };
  // The regulator weight multiplies the residue term as it does the
  // integrand on the direct path.
  const Complex residue_term = Complex(0.0, s * pi) * f(Complex(k0, 0.0)) *
                               std::exp(Complex(0.0, k0 * lambda)) *
                               detail::regulator_weight(spec.regulator, k0);
  QuadratureSpec q = spec;
  q.lower = 0.0;
  q.upper = std::numeric_limits<double>::infinity();
  q.pole.reset();
  if (q.oscillation == 0.0) q.oscillation = lambda;
  // Tolerances refer to the full value, not only the remaining integral.
  q.abs_tol = std::max(spec.abs_tol, 0.5 * spec.rel_tol * std::abs(residue_term));
  auto rest = adaptive_semi_infinite(bracket, q);
  if (!std::isfinite(std::abs(rest.value)) ||
      !(rest.err_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(rest.value + residue_term))))
    throw QuadratureError("A^(+/-) contour identity: remaining integral did not converge",
                          rest.value.real(), rest.err_estimate);
  rest.value += residue_term;
  rest.converged = true;
  return rest;
}

template <class T>
IntegralResult<T> regulated_limit(const std::function<IntegralResult<T>(double)>& at_eps, double eps0,
                                  int levels) {
  if (!(eps0 > 0.0) || levels < 1) throw DomainError("regulated_limit needs eps0 > 0 and levels >= 1");
  std::vector<std::vector<T>> R(levels);
  std::vector<std::vector<double>> E(levels);
  bool all_converged = true;
  int used = 0;
  for (int j = 0; j < levels; ++j) {
    const auto r = at_eps(eps0 / std::ldexp(1.0, j));
    all_converged = all_converged && r.converged;
    used += r.subdivisions_used;
    R[j].push_back(r.value);
    E[j].push_back(r.err_estimate);
    for (int m = 1; m <= j; ++m) {
      const double f = std::ldexp(1.0, m) - 1.0;
      R[j].push_back(R[j][m - 1] + (R[j][m - 1] - R[j - 1][m - 1]) / f);
      E[j].push_back(E[j][m - 1] * (1.0 + 1.0 / f) + E[j - 1][m - 1] / f);
    }
  }
  IntegralResult<T> out;
  const int last = levels - 1;
  out.value = R[last][last];
  const double extrap = (last > 0) ? std::abs(R[last][last] - R[last][last - 1]) : std::abs(R[0][0]);
  out.err_estimate = extrap + E[last][last];
  out.subdivisions_used = used;
  out.converged = all_converged;
  return out;
}

template IntegralResult<double> regulated_limit<double>(
    const std::function<IntegralResult<double>(double)>&, double, int);
template IntegralResult<Complex> regulated_limit<Complex>(
    const std::function<IntegralResult<Complex>(double)>&, double, int);

template <class T>
Extrapolated<T> wynn_epsilon(const std::vector<T>& s) {
  const std::size_t n = s.size();
  if (n == 0) return {};
  if (n < 3) return {s.back(), n == 2 ? std::abs(s[1] - s[0]) : std::numeric_limits<double>::infinity()};
  const T e0 = wynn_best(s.data(), n);
  const T e1 = wynn_best(s.data(), n - 1);
  const T e2 = wynn_best(s.data(), n - 2);
  return {e0, std::abs(e0 - e1) + std::abs(e0 - e2)};
}

template Extrapolated<double> wynn_epsilon<double>(const std::vector<double>&);
template Extrapolated<Complex> wynn_epsilon<Complex>(const std::vector<Complex>&);

}  // namespace atomwall::quad
