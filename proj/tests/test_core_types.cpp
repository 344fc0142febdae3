#include <doctest.h>

#include <cmath>
#include <random>

#include "atomwall/constants.hpp"
#include "atomwall/core_types.hpp"
#include "atomwall/errors.hpp"

using namespace atomwall;
namespace cst = atomwall::constants;

TEST_CASE("atom construction") {
  const auto a = AtomSpec::from_wavelength(0.6e-6, 24e-30);
  CHECK(a.k0() == doctest::Approx(2 * cst::pi / 0.6e-6).epsilon(1e-15));
  CHECK(a.omega0() == doctest::Approx(cst::c * a.k0()).epsilon(1e-15));
  CHECK(a.lambda0() * a.k0() == doctest::Approx(2 * cst::pi).epsilon(1e-15));
  CHECK_THROWS_AS(AtomSpec::from_wavelength(0.0, 1e-30), DomainError);
  CHECK_THROWS_AS(AtomSpec::from_wavelength(1e-6, -1.0), DomainError);
}

TEST_CASE("reduced point") {
  const ReducedPoint p(3.0, 0.25);
  REQUIRE(p.eta().has_value());
  CHECK(*p.eta() * p.x0() * p.theta() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_FALSE(ReducedPoint(1.0).eta().has_value());
  CHECK(ReducedPoint(1.0).is_vacuum());
  CHECK_THROWS_AS(ReducedPoint(0.0), DomainError);
  CHECK_THROWS_AS(ReducedPoint(1.0, -0.1), DomainError);
}

TEST_CASE("room temperature thermal length") {
  // 7.63 um corresponds to T = 300 K; 293 K gives 7.82 um, 2.4% away.
  CHECK(thermal_length(300.0) == doctest::Approx(7.63e-6).epsilon(0.02));
  CHECK(thermal_length(293.0) == doctest::Approx(1.054571817e-34 * 299792458.0 / (1.380649e-23 * 293.0)));
  CHECK_THROWS_AS(thermal_length(0.0), DomainError);
}

TEST_CASE("from_physical") {
  SUBCASE("z = lambda0 / (4 pi) gives x0 = 1") {
    for (double l0 : {0.3, 0.6, 1.2, 10.0}) {
      const auto [atom, pt] = from_physical(l0, 10.0, l0 / (4 * cst::pi), 0.0);
      CHECK(pt.x0() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(pt.theta() == 0.0);
    }
  }
  SUBCASE("k0 lambda_T = 5 gives theta = 0.4") {
    const double l0 = 0.6;
    const double k0 = 2 * cst::pi / (l0 * 1e-6);
    const double T = cst::hbar * cst::c * k0 / (5.0 * cst::k_B);
    const auto [atom, pt] = from_physical(l0, 24.0, 1.0, T);
    CHECK(pt.theta() == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(atom.k0() * thermal_length(T) == doctest::Approx(5.0).epsilon(1e-14));
  }
  SUBCASE("x0 = 4 pi z / lambda0") {
    const auto [atom, pt] = from_physical(0.8, 30.0, 2.5, 0.0);
    CHECK(pt.x0() == doctest::Approx(4 * cst::pi * 2.5 / 0.8).epsilon(1e-14));
  }
  SUBCASE("bad inputs") {
    CHECK_THROWS_AS(from_physical(-1.0, 1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(from_physical(1.0, 0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(from_physical(1.0, 1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(from_physical(1.0, 1.0, 1.0, -5.0), DomainError);
  }
}

TEST_CASE("round trip of distance") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double l0 = std::pow(10.0, u(rng));
    const double z = std::pow(10.0, u(rng));
    const auto [atom, pt] = from_physical(l0, 10.0, z, 0.0);
    CHECK(atom.distance(pt.x0()) / cst::micrometre == doctest::Approx(z).epsilon(1e-12));
  }
}

TEST_CASE("denormalize") {
  const auto a = AtomSpec::from_wavelength(0.6e-6, 24e-30);
  CHECK(denormalize(0.0, a) == 0.0);

  SUBCASE("alpha0 k0^3 = 1 gives hbar omega0") {
    const double l0 = 0.6e-6;
    const double k0 = 2 * cst::pi / l0;
    const auto s = AtomSpec::from_wavelength(l0, 1.0 / (k0 * k0 * k0));
    CHECK(denormalize(1.0, s) == doctest::Approx(cst::hbar * s.omega0()).epsilon(1e-14));
  }

  SUBCASE("-1/x0^3 is the short-distance potential") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      const auto s = AtomSpec::from_wavelength(std::pow(10.0, u(rng)) * 1e-6, std::pow(10.0, u(rng)) * 1e-29);
      const double x0 = std::pow(10.0, 2 * u(rng));
      const double z = s.distance(x0);
      const double expect = -cst::hbar * s.omega0() * s.alpha0() / (8 * z * z * z);
      CHECK(denormalize(-1.0 / (x0 * x0 * x0), s) == doctest::Approx(expect).epsilon(1e-12));
    }
    const double z = a.distance(2.0);
    CHECK(denormalize(-0.125, a) ==
          doctest::Approx(-cst::hbar * a.omega0() * a.alpha0() / (8 * z * z * z)).epsilon(1e-12));
  }

  CHECK(joules_to_ev(cst::electron_volt) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a.gamma_free() == doctest::Approx(2 * cst::c * a.alpha0() * std::pow(a.k0(), 4)).epsilon(1e-14));
}

TEST_CASE("potential breakdown") {
  PotentialBreakdown b{-0.7, 0.2, 0.05};
  CHECK(b.ground_total() + b.excited_total() == doctest::Approx(2 * b.v_rr).epsilon(1e-16));
  CHECK(b.total() == doctest::Approx(-0.45));
  b.state = AtomState::excited;
  CHECK(b.total() == doctest::Approx(-0.95));
  b.state = AtomState::thermal_average;
  b.p_ground = 0.75;
  CHECK(b.total() == doctest::Approx(0.75 * -0.45 + 0.25 * -0.95));
}

TEST_CASE("sweep table") {
  SweepTable t({"x0", "v"});
  t.add_row({1.0, 2.0});
  CHECK_THROWS_AS(t.add_row({1.0, 3.0}), ConfigError);
  CHECK_THROWS_AS(t.add_row({0.5, 3.0}), ConfigError);
  CHECK_THROWS_AS(t.add_row({2.0}), ConfigError);
  t.add_row({2.0, 3.0});
  CHECK(t.row_count() == 2);
  CHECK(t.column_index("v") == 1);
  CHECK_THROWS_AS(t.column_index("w"), std::out_of_range);
  CHECK_THROWS_AS(SweepTable(std::vector<std::string>{}), ConfigError);
}

TEST_CASE("grid spec") {
  const GridSpec g{1e-2, 1e2, 200, true};
  const auto v = g.values();
  REQUIRE(v.size() == 200);
  CHECK(v.front() == 1e-2);
  CHECK(v.back() == 1e2);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
  const auto lin = GridSpec{0.0, 1.0, 5, false}.values();
  CHECK(lin[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS((GridSpec{1.0, 1.0, 5, false}.validate()), ConfigError);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 5, true}.validate()), ConfigError);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 1, false}.validate()), ConfigError);
}
