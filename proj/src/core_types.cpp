#include "atomwall/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "atomwall/constants.hpp"
#include "atomwall/errors.hpp"

namespace atomwall {

namespace cst = constants;

AtomSpec AtomSpec::from_wavelength(double lambda0_m, double alpha0_m3) {
  if (!(lambda0_m > 0.0) || !std::isfinite(lambda0_m))
    throw DomainError("transition wavelength must be positive");
  if (!(alpha0_m3 > 0.0) || !std::isfinite(alpha0_m3))
    throw DomainError("static polarizability must be positive");
  return AtomSpec(2.0 * cst::pi / lambda0_m, alpha0_m3);
}

AtomSpec::AtomSpec(double k0, double alpha0)
    : k0_(k0), omega0_(cst::c * k0), alpha0_(alpha0), lambda0_(2.0 * cst::pi / k0) {}

double AtomSpec::energy_unit() const noexcept {
  const double k2 = k0_ * k0_;
  return cst::hbar_c * alpha0_ * k2 * k2;
}

double AtomSpec::gamma_free() const noexcept {
  const double k2 = k0_ * k0_;
  return 2.0 * cst::c * alpha0_ * k2 * k2;
}

double AtomSpec::reduced_distance(double z_m) const {
  if (!(z_m > 0.0)) throw DomainError("atom-wall distance must be positive");
  return 2.0 * k0_ * z_m;
}

double AtomSpec::reduced_temperature(double T_K) const {
  if (!(T_K >= 0.0)) throw DomainError("temperature must be non-negative");
  return 2.0 * cst::k_B * T_K / (cst::hbar * omega0_);
}

ReducedPoint::ReducedPoint(double x0, double theta) : x0_(x0), theta_(theta) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw DomainError("x0 must be positive");
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw DomainError("theta must be non-negative");
}

std::optional<double> ReducedPoint::eta() const noexcept {
  if (theta_ == 0.0) return std::nullopt;
  return 2.0 / (x0_ * theta_);
}

double PotentialBreakdown::total() const noexcept {
  switch (state) {
    case AtomState::ground:
      return ground_total();
    case AtomState::excited:
      return excited_total();
    case AtomState::thermal_average:
      break;
  }
  return p_ground * ground_total() + (1.0 - p_ground) * excited_total();
}

double thermal_length(double T_K) {
  if (!(T_K > 0.0)) throw DomainError("thermal length needs T > 0");
  return cst::hbar_c / (cst::k_B * T_K);
}

std::pair<AtomSpec, ReducedPoint> from_physical(double lambda0_um, double alpha0_A3,
                                                double z_um, double T_K) {
  const AtomSpec atom = AtomSpec::from_wavelength(lambda0_um * cst::micrometre,
                                                  alpha0_A3 * cst::cubic_angstrom);
  const double x0 = atom.reduced_distance(z_um * cst::micrometre);
  return {atom, ReducedPoint(x0, atom.reduced_temperature(T_K))};
}

double denormalize(double v_norm, const AtomSpec& atom) noexcept {
  return v_norm * atom.energy_unit();
}

double joules_to_ev(double joules) noexcept { return joules / cst::electron_volt; }

SweepTable::SweepTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw ConfigError("a table needs at least one column");
}

void SweepTable::add_comment(std::string line) { comments_.push_back(std::move(line)); }

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw ConfigError("row width does not match the column count");
  if (!rows_.empty() && !(row.front() > rows_.back().front()))
    throw ConfigError("table rows must be strictly increasing in the first column");
  rows_.push_back(std::move(row));
}

std::size_t SweepTable::column_index(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw std::out_of_range("no column named " + name);
  return static_cast<std::size_t>(it - columns_.begin());
}

void GridSpec::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
    throw ConfigError("grid needs min < max");
  if (points < 2) throw ConfigError("grid needs at least 2 points");
  if (log && !(min > 0.0)) throw ConfigError("log grid needs min > 0");
}

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  const double n = points - 1;
  for (int i = 0; i < points; ++i) {
    const double t = i / n;
    out[i] = log ? min * std::pow(max / min, t) : min + t * (max - min);
  }
  // Pin the endpoints exactly; pow can drift by an ulp.
  out.front() = min;
  out.back() = max;
  return out;
}

}  // namespace atomwall
