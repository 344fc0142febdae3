#pragma once

// Shared value types and the physical <-> dimensionless boundary.
//
// All internal computation uses two dimensionless numbers:
//   x0    = 2 k0 z                  (reduced atom-wall distance)
//   theta = 2 kB T / (hbar omega0)  (normalized temperature; 0 = vacuum)
// and potentials are expressed in units of hbar c alpha0 k0^4. Physical
// units appear only in AtomSpec, from_physical() and denormalize().

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atomwall {

// Two-level atom with isotropic static polarizability (Gaussian units, so the
// polarizability is a volume). Stored in SI: metres, rad/s, m^3.
class AtomSpec {
 public:
  // Throws DomainError unless lambda0 > 0 and alpha0 > 0.
  static AtomSpec from_wavelength(double lambda0_m, double alpha0_m3);

  double k0() const noexcept { return k0_; }
  double omega0() const noexcept { return omega0_; }
  double alpha0() const noexcept { return alpha0_; }
  double lambda0() const noexcept { return lambda0_; }

  // hbar c alpha0 k0^4 in joules: the energy unit of every normalized potential.
  double energy_unit() const noexcept;
  // Free-space spontaneous emission rate 2 c alpha0 k0^4, in 1/s.
  double gamma_free() const noexcept;

  // x0 for a physical distance and back.
  double reduced_distance(double z_m) const;
  double distance(double x0) const noexcept { return x0 / (2.0 * k0_); }
  // theta for a physical temperature (T = 0 gives theta = 0).
  double reduced_temperature(double T_K) const;

 private:
  AtomSpec(double k0, double alpha0);

  double k0_;
  double omega0_;
  double alpha0_;
  double lambda0_;
};

// Dimensionless evaluation point. eta = lambda_T / 2z exists only for theta > 0
// and satisfies eta * x0 * theta = 2.
class ReducedPoint {
 public:
  // Throws DomainError unless x0 > 0 and theta >= 0.
  ReducedPoint(double x0, double theta = 0.0);

  double x0() const noexcept { return x0_; }
  double theta() const noexcept { return theta_; }
  std::optional<double> eta() const noexcept;
  bool is_vacuum() const noexcept { return theta_ == 0.0; }

 private:
  double x0_;
  double theta_;
};

enum class AtomState { ground, excited, thermal_average };

// Normalized potential split into radiation-reaction, vacuum field-fluctuation
// and thermal field-fluctuation parts. The rr part is state independent; the
// fr parts enter with opposite signs for ground and excited states.
struct PotentialBreakdown {
  double v_rr = 0.0;
  double v_fr_vac = 0.0;
  double v_thermal = 0.0;
  AtomState state = AtomState::ground;
  // Ground-state occupation; only read for thermal_average.
  double p_ground = 1.0;

  double ground_total() const noexcept { return v_rr + v_fr_vac + v_thermal; }
  double excited_total() const noexcept { return v_rr - v_fr_vac - v_thermal; }
  double total() const noexcept;
};

// Thermal length hbar c / (kB T) in metres. Throws DomainError for T <= 0.
double thermal_length(double T_K);

// Physical inputs in lab units: lambda0 [um], alpha0 [A^3], z [um], T [K].
// T = 0 is allowed and yields theta = 0.
std::pair<AtomSpec, ReducedPoint> from_physical(double lambda0_um, double alpha0_A3,
                                                double z_um, double T_K);

// Normalized potential -> joules.
double denormalize(double v_norm, const AtomSpec& atom) noexcept;
double joules_to_ev(double joules) noexcept;

// Ordered table of sweep rows. Column 0 is the abscissa (x0 or theta); rows
// must arrive strictly increasing in it.
class SweepTable {
 public:
  SweepTable() = default;
  explicit SweepTable(std::vector<std::string> columns);

  void add_comment(std::string line);
  // Throws ConfigError on a width mismatch or a non-increasing abscissa.
  void add_row(std::vector<double> row);

  const std::vector<std::string>& comments() const noexcept { return comments_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_count() const noexcept { return columns_.size(); }
  // Throws std::out_of_range for an unknown name.
  std::size_t column_index(const std::string& name) const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

struct GridSpec {
  double min = 1e-2;
  double max = 1e2;
  int points = 200;
  bool log = true;

  // Throws ConfigError unless min < max, points >= 2 and (log => min > 0).
  void validate() const;
  std::vector<double> values() const;
};

}  // namespace atomwall
