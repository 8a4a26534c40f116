#pragma once

#include <optional>
#include <string_view>

#include "cavityqed/constants.hpp"

namespace cavityqed {

enum class UnitsMode { SI, Ratio };

// Cavity geometry and electron content. In Ratio mode only `ratio`
// (omega_p / omega) is meaningful and every derived quantity is expressed in
// units of the bare mode frequency.
struct SystemConfig {
    double n_electrons = 1e8;
    double area = 1e-8;          // m^2
    double lz = 1e-6;            // m
    int nz = 1;
    std::optional<double> omega; // rad/s, defaults to c pi nz / lz
    UnitsMode units = UnitsMode::SI;
    double ratio = 0.0;

    void validate() const;

    double mode_frequency() const;
    double volume() const;
    double n_2d() const;
    double kappa_z() const;
};

double plasma_frequency(double n_2d, double lz);
double plasma_frequency(const SystemConfig& cfg);
double dressed_frequency(double omega, double omega_p);
double collective_coupling(double omega, double omega_p);
double single_particle_coupling(const SystemConfig& cfg);
double fermi_wavevector(double n_2d);

class DerivedScales {
public:
    static DerivedScales from(const SystemConfig& cfg);

    UnitsMode units() const noexcept { return units_; }

    // Dimensionless, available in both modes.
    double gamma() const noexcept { return gamma_; }
    double ratio() const noexcept { return omega_p_ / omega_; }
    double omega_tilde_over_omega() const noexcept { return omega_tilde_ / omega_; }

    // SI only; UnitModeError otherwise.
    double omega() const;
    double omega_p() const;
    double omega_tilde() const;
    double g_single() const;
    double n_2d() const;
    double n_e() const;
    double k_fermi() const;
    double volume() const;
    double lz() const;
    double n_electrons() const;

private:
    void require_si(std::string_view what) const;

    UnitsMode units_ = UnitsMode::SI;
    double omega_ = 1.0;
    double omega_p_ = 0.0;
    double omega_tilde_ = 1.0;
    double gamma_ = 0.0;
    double g_single_ = 0.0;
    double n_2d_ = 0.0;
    double n_e_ = 0.0;
    double k_fermi_ = 0.0;
    double volume_ = 0.0;
    double lz_ = 0.0;
    double n_electrons_ = 0.0;
};

enum class Phase { Stable, Critical, Unstable };

Phase classify_phase(double gamma, double tol = 1e-12);
std::string_view to_string(Phase p);

} // namespace cavityqed
