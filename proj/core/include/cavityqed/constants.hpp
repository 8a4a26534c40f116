#pragma once

#include <numbers>

namespace cavityqed {

// SI values, CODATA 2018. alpha_fs and a0 are evaluated from the five base
// constants so that both identities hold to double precision.
struct Constants {
    double hbar;     // J s
    double e_charge; // C
    double m_e;      // kg
    double eps0;     // F/m
    double c_light;  // m/s
    double alpha_fs;
    double a0;       // m
};

inline constexpr Constants kCodata2018{
    1.054571817e-34,
    1.602176634e-19,
    9.1093837015e-31,
    8.8541878128e-12,
    299792458.0,
    7.2973525737492617e-3,
    5.2917721025761124e-11,
};

inline constexpr double kPi = std::numbers::pi;

// Relative deviations of the two self-consistency identities.
double alpha_identity_residual(const Constants& c = kCodata2018);
double bohr_identity_residual(const Constants& c = kCodata2018);

} // namespace cavityqed
