#pragma once

#include <span>

#include "cavityqed/response.hpp"
#include "cavityqed/singlemode.hpp"
#include "cavityqed/system.hpp"

namespace cavityqed {

// Continuum theory on top of an SI system. The upper cutoff is carried as
// the dimensionless lambda0 with Lambda = omega_tilde^2(kappa_z) lambda0 in
// rad^2/s^2 (lambda_freq2). Three-dimensional single-particle formulas use a
// momentum cutoff in 1/m instead (lambda_mom).
class EftConfig {
public:
    static EftConfig make(const SystemConfig& base, double lambda0);

    EftConfig with_lambda0(double lambda0) const { return make(base_, lambda0); }

    const SystemConfig& base() const noexcept { return base_; }
    const DerivedScales& scales() const noexcept { return scales_; }
    double lambda0() const noexcept { return lambda0_; }
    double kappa_z() const noexcept { return kappa_z_; }
    double omega_tilde_kz() const noexcept { return omega_tilde_kz_; }
    double alpha_dim() const noexcept { return alpha_dim_; }
    double n_electrons() const noexcept { return base_.n_electrons; }
    double lambda_freq2() const noexcept { return omega_tilde_kz_ * omega_tilde_kz_ * lambda0_; }
    double pole_lambda0() const;
    // Soft check: 1 <= lambda0 <= exp(1/(N alpha)).
    bool in_stability_window() const;

private:
    SystemConfig base_;
    DerivedScales scales_;
    double lambda0_ = 1.0;
    double kappa_z_ = 0.0;
    double omega_tilde_kz_ = 0.0;
    double alpha_dim_ = 0.0;
};

double effective_coupling(const EftConfig& cfg);
double landau_pole(const EftConfig& cfg);
double landau_pole_lambda0(const EftConfig& cfg);

struct PhotonExcitation {
    double kappa = 0.0; // in-plane wavevector, 1/m
    long count = 0;
};

// Electronic part with the running coupling, the zero-point energy of the
// mode continuum (area times casimir_energy_density) and any excited photons.
double effective_energy(double kinetic_sum, Vec2 K, std::span<const PhotonExcitation> photons,
                        const EftConfig& cfg);
double continuum_mode_frequency(double kappa, const EftConfig& cfg);

double renormalized_mass(const EftConfig& cfg);
double chemical_potential(double k_fermi, const EftConfig& cfg);
double quasiparticle_energy(double k, double k_fermi, double v_fermi, const EftConfig& cfg);

struct JelliumResult {
    double rs = 0.0;
    double tau = 0.0;   // Ry
    double eps_x = 0.0; // Ry
    double rs_min = 0.0;
};

// Energies in Rydberg units e^2/(2 a0). mass_ratio = m_e / m_e(Lambda).
JelliumResult jellium(double rs, double mass_ratio);
JelliumResult jellium(double rs, const EftConfig& cfg);
double rydberg_energy();

double casimir_energy_density(const EftConfig& cfg);
double casimir_pressure(const EftConfig& cfg);

double coupling_1d(double cutoff_momentum, double omega, double omega_p);

double coupling_3d(double lambda_mom);
double mass_3d(double lambda_mom);
double mass_3d_first_order(double lambda_mom);
double pole_3d();

struct AppendixIntegrals {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

// Integrals over u = Omega^2 from omega_lo^2 to omega_hi^2; eta > 0.
AppendixIntegrals appendix_integrals(double w, double eta, double omega_lo, double omega_hi);
AppendixIntegrals appendix_integrals(double w, double eta, const EftConfig& cfg);

// Closed logarithm/arctangent forms; eta = 0 gives the broadening-free limit.
ResponseValue eft_chi_aa(BroadenedFrequency f, double omega_lo, double omega_hi, double lz);
ResponseValue eft_chi_aa(BroadenedFrequency f, const EftConfig& cfg);
// Assembled from the four integrals (eta > 0).
ResponseValue eft_chi_aa_from_integrals(BroadenedFrequency f, const EftConfig& cfg);
// Height 1/(4 c^2 eps0 Lz) of the absorption window.
double eft_box_height(double lz);

struct EftSummary {
    double lambda0, lambda_freq2, kappa_z, omega_tilde_kz, alpha_dim, n_alpha;
    double coupling, pole_lambda0, pole_lambda_freq2;
    bool in_window;
    double mass_ratio;        // m_e(Lambda)/m_e, infinite at or past the pole
    double casimir_energy_density, casimir_pressure;
    double rs_min;
    double omega_p, omega_tilde, gamma;
};

EftSummary summarize(const EftConfig& cfg);

} // namespace cavityqed
