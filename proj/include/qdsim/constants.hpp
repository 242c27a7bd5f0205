#ifndef QDSIM_CONSTANTS_HPP
#define QDSIM_CONSTANTS_HPP

namespace qdsim::constants {

// CODATA 2018, SI
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double light_speed = 2.99792458e8;    // m/s
inline constexpr double boltzmann = 1.380649e-23;      // J/K
inline constexpr double pi = 3.14159265358979323846;

// Coulomb constant 1/(4 pi eps0), N m^2 / C^2
inline constexpr double coulomb = 1.0 / (4.0 * pi * vacuum_permittivity);

inline constexpr double nm = 1e-9;              // meters per nanometer
inline constexpr double electron_volt = elementary_charge;  // J per eV

}  // namespace qdsim::constants

#endif
