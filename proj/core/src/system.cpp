#include "cavityqed/system.hpp"

#include <cmath>
#include <string>

#include "cavityqed/errors.hpp"
#include "cavityqed/version.hpp"

namespace cavityqed {

namespace {
constexpr const Constants& K = kCodata2018;
}

std::string_view version() { return CAVITYQED_VERSION_STRING; }

double alpha_identity_residual(const Constants& c) {
    const double alpha = c.e_charge * c.e_charge / (4.0 * kPi * c.hbar * c.c_light * c.eps0);
    return std::abs(alpha - c.alpha_fs) / alpha;
}

double bohr_identity_residual(const Constants& c) {
    const double a0 = 4.0 * kPi * c.eps0 * c.hbar * c.hbar / (c.m_e * c.e_charge * c.e_charge);
    return std::abs(a0 - c.a0) / a0;
}

void SystemConfig::validate() const {
    if (units == UnitsMode::Ratio) {
        if (!(ratio >= 0.0) || !std::isfinite(ratio)) throw DomainError("ratio must be finite and >= 0");
        return;
    }
    if (!(n_electrons >= 1.0)) throw DomainError("n_electrons must be >= 1");
    if (!(area > 0.0)) throw DomainError("area must be > 0");
    if (!(lz > 0.0)) throw DomainError("lz must be > 0");
    if (nz < 1) throw DomainError("nz must be a positive integer");
    if (omega && !(*omega > 0.0)) throw DomainError("omega must be > 0");
}

double SystemConfig::mode_frequency() const {
    if (units == UnitsMode::Ratio) throw UnitModeError("mode_frequency is dimensionful; config is in Ratio mode");
    return omega ? *omega : K.c_light * kPi * nz / lz;
}

double SystemConfig::volume() const {
    if (units == UnitsMode::Ratio) throw UnitModeError("volume is dimensionful; config is in Ratio mode");
    return area * lz;
}

double SystemConfig::n_2d() const {
    if (units == UnitsMode::Ratio) throw UnitModeError("n_2d is dimensionful; config is in Ratio mode");
    return n_electrons / area;
}

double SystemConfig::kappa_z() const {
    if (units == UnitsMode::Ratio) throw UnitModeError("kappa_z is dimensionful; config is in Ratio mode");
    return kPi * nz / lz;
}

double plasma_frequency(double n_2d, double lz) {
    if (n_2d < 0.0) throw DomainError("negative density");
    if (!(lz > 0.0)) throw DomainError("lz must be > 0");
    return std::sqrt(K.e_charge * K.e_charge * n_2d / (K.m_e * K.eps0 * lz));
}

double plasma_frequency(const SystemConfig& cfg) {
    if (cfg.units == UnitsMode::Ratio) throw UnitModeError("plasma_frequency requires SI mode");
    cfg.validate();
    return plasma_frequency(cfg.n_2d(), cfg.lz);
}

double dressed_frequency(double omega, double omega_p) {
    if (omega < 0.0 || omega_p < 0.0) throw DomainError("dressed_frequency: negative input");
    return std::sqrt(omega * omega + omega_p * omega_p);
}

double collective_coupling(double omega, double omega_p) {
    if (omega < 0.0 || omega_p < 0.0) throw DomainError("collective_coupling: negative input");
    const double wp2 = omega_p * omega_p;
    const double wt2 = omega * omega + wp2;
    if (wt2 == 0.0) throw DomainError("collective_coupling: omega and omega_p both zero");
    return wp2 / wt2;
}

double single_particle_coupling(const SystemConfig& cfg) {
    if (cfg.units == UnitsMode::Ratio) throw UnitModeError("single_particle_coupling requires SI mode");
    cfg.validate();
    const double wt = dressed_frequency(cfg.mode_frequency(), plasma_frequency(cfg));
    return K.e_charge * K.hbar / K.m_e * std::sqrt(K.hbar / (2.0 * K.eps0 * cfg.volume() * wt));
}

double fermi_wavevector(double n_2d) {
    if (!(n_2d > 0.0)) throw DomainError("fermi_wavevector: density must be > 0");
    return std::sqrt(2.0 * kPi * n_2d);
}

DerivedScales DerivedScales::from(const SystemConfig& cfg) {
    cfg.validate();
    DerivedScales s;
    s.units_ = cfg.units;
    if (cfg.units == UnitsMode::Ratio) {
        s.omega_ = 1.0;
        s.omega_p_ = cfg.ratio;
        s.omega_tilde_ = dressed_frequency(1.0, cfg.ratio);
        s.gamma_ = collective_coupling(1.0, cfg.ratio);
        return s;
    }
    s.omega_ = cfg.mode_frequency();
    s.n_2d_ = cfg.n_2d();
    s.omega_p_ = plasma_frequency(s.n_2d_, cfg.lz);
    s.omega_tilde_ = dressed_frequency(s.omega_, s.omega_p_);
    s.gamma_ = collective_coupling(s.omega_, s.omega_p_);
    s.g_single_ = single_particle_coupling(cfg);
    s.n_e_ = s.n_2d_ / cfg.lz;
    s.k_fermi_ = fermi_wavevector(s.n_2d_);
    s.volume_ = cfg.volume();
    s.lz_ = cfg.lz;
    s.n_electrons_ = cfg.n_electrons;
    return s;
}

void DerivedScales::require_si(std::string_view what) const {
    if (units_ == UnitsMode::Ratio)
        throw UnitModeError(std::string(what) + " is dimensionful; scales were derived in Ratio mode");
}

double DerivedScales::omega() const { require_si("omega"); return omega_; }
double DerivedScales::omega_p() const { require_si("omega_p"); return omega_p_; }
double DerivedScales::omega_tilde() const { require_si("omega_tilde"); return omega_tilde_; }
double DerivedScales::g_single() const { require_si("g_single"); return g_single_; }
double DerivedScales::n_2d() const { require_si("n_2d"); return n_2d_; }
double DerivedScales::n_e() const { require_si("n_e"); return n_e_; }
double DerivedScales::k_fermi() const { require_si("k_fermi"); return k_fermi_; }
double DerivedScales::volume() const { require_si("volume"); return volume_; }
double DerivedScales::lz() const { require_si("lz"); return lz_; }
double DerivedScales::n_electrons() const { require_si("n_electrons"); return n_electrons_; }

Phase classify_phase(double gamma, double tol) {
    if (gamma < 1.0 - tol) return Phase::Stable;
    if (gamma > 1.0 + tol) return Phase::Unstable;
    return Phase::Critical;
}

std::string_view to_string(Phase p) {
    switch (p) {
    case Phase::Stable: return "stable";
    case Phase::Critical: return "critical";
    case Phase::Unstable: return "unstable";
    }
    return "?";
}

} // namespace cavityqed
