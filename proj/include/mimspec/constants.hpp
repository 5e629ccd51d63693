#pragma once

namespace mimspec::constants {

inline constexpr double pi     = 3.141592653589793238;
inline constexpr double two_pi = 2.0 * pi;

// Physical constants (SI), CODATA 2018. Exact by definition where applicable,
// otherwise truncated to 12 significant digits.
inline constexpr double speed_of_light = 299792458.0;        // m/s, exact
inline constexpr double planck_h       = 6.62607015e-34;     // J s, exact
inline constexpr double hbar           = 1.05457181765e-34;  // J s, h / 2pi
inline constexpr double boltzmann      = 1.380649e-23;       // J/K, exact

} // namespace mimspec::constants
