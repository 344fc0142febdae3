#pragma once

// Physical and mathematical constants. CODATA 2018 exact/recommended values,
// SI units. Formulas only ever see these through the dimensionless reduction
// in core_types; nothing downstream hard-codes rounded numbers.

#include <numbers>

namespace atomwall::constants {

inline constexpr double pi = std::numbers::pi;

// Euler-Mascheroni, 30 digits.
inline constexpr long double euler_gamma_ld = 0.577215664901532860606512090082L;
inline constexpr double euler_gamma = static_cast<double>(euler_gamma_ld);

inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c = 299792458.0;               // m / s
inline constexpr double k_B = 1.380649e-23;            // J / K
inline constexpr double electron_volt = 1.602176634e-19;  // J

inline constexpr double hbar_c = hbar * c;             // J m

// Boundary conversions.
inline constexpr double micrometre = 1e-6;             // m
inline constexpr double cubic_angstrom = 1e-30;        // m^3 (Gaussian polarizability volume)

}  // namespace atomwall::constants
