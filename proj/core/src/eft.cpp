#include "cavityqed/eft.hpp"

#include <cmath>
#include <limits>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {

constexpr const Constants& K = kCodata2018;
constexpr double kC2 = K.c_light * K.c_light;

// Lambda0^{3/2} - 1 without cancellation near Lambda0 = 1.
double excess_three_halves(double lambda0) { return std::expm1(1.5 * std::log(lambda0)); }

double coupling_3d_slope() {
    return 4.0 * K.alpha_fs / (3.0 * kPi) * K.hbar / (K.m_e * K.c_light);
}

} // namespace

EftConfig EftConfig::make(const SystemConfig& base, double lambda0) {
    if (base.units == UnitsMode::Ratio) throw UnitModeError("the effective field theory requires SI mode");
    if (!(lambda0 >= 1.0) || !std::isfinite(lambda0)) throw DomainError("lambda0 must be finite and >= 1");
    EftConfig c;
    c.base_ = base;
    c.scales_ = DerivedScales::from(base);
    c.lambda0_ = lambda0;
    c.kappa_z_ = base.kappa_z();
    const double wp = c.scales_.omega_p();
    c.omega_tilde_kz_ = std::sqrt(kC2 * c.kappa_z_ * c.kappa_z_ + wp * wp);
    c.alpha_dim_ = K.e_charge * K.e_charge / (4.0 * kPi * kC2 * K.eps0 * K.m_e * base.lz);
    return c;
}

double EftConfig::pole_lambda0() const { return std::exp(1.0 / (n_electrons() * alpha_dim_)); }

bool EftConfig::in_stability_window() const { return lambda0_ >= 1.0 && lambda0_ <= pole_lambda0(); }

double effective_coupling(const EftConfig& cfg) {
    return cfg.n_electrons() * cfg.alpha_dim() * std::log(cfg.lambda0());
}

double landau_pole(const EftConfig& cfg) {
    return cfg.omega_tilde_kz() * cfg.omega_tilde_kz() * cfg.pole_lambda0();
}

double landau_pole_lambda0(const EftConfig& cfg) { return cfg.pole_lambda0(); }

double continuum_mode_frequency(double kappa, const EftConfig& cfg) {
    const double wz = cfg.omega_tilde_kz();
    return std::sqrt(kC2 * kappa * kappa + wz * wz);
}

double effective_energy(double kinetic_sum, Vec2 Kv, std::span<const PhotonExcitation> photons,
                        const EftConfig& cfg) {
    const double pref = K.hbar * K.hbar / (2.0 * K.m_e);
    const double K2 = Kv[0] * Kv[0] + Kv[1] * Kv[1];
    double e = pref * (kinetic_sum - effective_coupling(cfg) * K2 / cfg.n_electrons());
    e += cfg.base().area * casimir_energy_density(cfg);
    const double top = std::sqrt(cfg.lambda_freq2());
    for (const auto& p : photons) {
        if (p.count < 0) throw DomainError("photon count must be >= 0");
        const double w = continuum_mode_frequency(p.kappa, cfg);
        if (w > top * (1.0 + 1e-12)) throw DomainError("photon mode lies above the cutoff");
        e += static_cast<double>(p.count) * K.hbar * w;
    }
    return e;
}

double renormalized_mass(const EftConfig& cfg) {
    const double x = cfg.alpha_dim() * std::log(cfg.lambda0());
    if (x >= 1.0) throw PoleError("renormalized mass diverges: alpha ln(lambda0) >= 1");
    return K.m_e / (1.0 - x);
}

double chemical_potential(double k_fermi, const EftConfig& cfg) {
    return K.hbar * K.hbar * k_fermi * k_fermi / (2.0 * renormalized_mass(cfg));
}

double quasiparticle_energy(double k, double k_fermi, double v_fermi, const EftConfig& cfg) {
    return chemical_potential(k_fermi, cfg) + K.hbar * v_fermi * (k - k_fermi);
}

JelliumResult jellium(double rs, double mass_ratio) {
    if (!(rs > 0.0)) throw DomainError("rs must be > 0");
    if (!(mass_ratio > 0.0)) throw DomainError("mass ratio must be > 0");
    JelliumResult r;
    r.rs = rs;
    r.tau = mass_ratio / (rs * rs);
    r.eps_x = -8.0 * std::numbers::sqrt2 / (3.0 * kPi) / rs;
    r.rs_min = 3.0 * kPi / (4.0 * std::numbers::sqrt2) * mass_ratio;
    return r;
}

JelliumResult jellium(double rs, const EftConfig& cfg) {
    return jellium(rs, K.m_e / renormalized_mass(cfg));
}

double rydberg_energy() {
    return K.e_charge * K.e_charge / (8.0 * kPi * K.eps0 * K.a0);
}

double casimir_energy_density(const EftConfig& cfg) {
    const double wz = cfg.omega_tilde_kz();
    return K.hbar * excess_three_halves(cfg.lambda0()) * wz * wz * wz / (6.0 * kPi * kC2);
}

double casimir_pressure(const EftConfig& cfg) {
    const double lz = cfg.base().lz;
    const double nz = cfg.base().nz;
    const double geometric = 2.0 * kPi * kPi * nz * nz * kC2 / (lz * lz * lz);
    const double plasma = K.e_charge * K.e_charge * cfg.scales().n_2d() / (K.m_e * K.eps0 * lz * lz);
    return K.hbar * excess_three_halves(cfg.lambda0()) / (4.0 * kPi * kC2) * (geometric + plasma) *
           cfg.omega_tilde_kz();
}

double coupling_1d(double cutoff_momentum, double omega, double omega_p) {
    if (cutoff_momentum < 0.0 || !(omega > 0.0) || omega_p < 0.0)
        throw DomainError("coupling_1d: inputs must be positive");
    if (omega_p == 0.0) return 0.0;
    return omega_p / (2.0 * omega) * std::atan(K.c_light * cutoff_momentum / omega_p);
}

double coupling_3d(double lambda_mom) {
    if (lambda_mom < 0.0) throw DomainError("cutoff must be >= 0");
    return coupling_3d_slope() * lambda_mom;
}

double mass_3d(double lambda_mom) {
    const double g = coupling_3d(lambda_mom);
    if (g >= 1.0) throw PoleError("3D coupling reached 1");
    return K.m_e / (1.0 - g);
}

double mass_3d_first_order(double lambda_mom) {
    if (lambda_mom < 0.0) throw DomainError("cutoff must be >= 0");
    return K.m_e + 4.0 * K.alpha_fs / (3.0 * kPi) * K.hbar * lambda_mom / K.c_light;
}

double pole_3d() { return 1.0 / coupling_3d_slope(); }

AppendixIntegrals appendix_integrals(double w, double eta, double lo, double hi) {
    if (!(eta > 0.0)) throw DomainError("appendix integrals require eta > 0");
    if (!(lo > 0.0 && hi > lo)) throw DomainError("appendix integrals require 0 < lower < upper");
    const double at_m = std::atan((hi - w) / eta) - std::atan((lo - w) / eta);
    const double at_p = std::atan((hi + w) / eta) - std::atan((lo + w) / eta);
    const double ln_m = std::log(((w - hi) * (w - hi) + eta * eta) / ((w - lo) * (w - lo) + eta * eta));
    const double ln_p = std::log(((w + hi) * (w + hi) + eta * eta) / ((w + lo) * (w + lo) + eta * eta));
    const double pc = kPi / kC2;
    AppendixIntegrals r;
    r.A = 2.0 * pc / eta * at_m;
    r.B = pc * (2.0 * w / eta * at_m + ln_m);
    r.C = 2.0 * pc / eta * at_p;
    r.D = pc * (ln_p - 2.0 * w / eta * at_p);
    return r;
}

AppendixIntegrals appendix_integrals(double w, double eta, const EftConfig& cfg) {
    return appendix_integrals(w, eta, cfg.omega_tilde_kz(), std::sqrt(cfg.lambda_freq2()));
}

double eft_box_height(double lz) { return 1.0 / (4.0 * kC2 * K.eps0 * lz); }

ResponseValue eft_chi_aa(BroadenedFrequency f, double lo, double hi, double lz) {
    if (f.eta < 0.0) throw DomainError("eta must be >= 0");
    if (!(lo > 0.0 && hi > lo)) throw DomainError("need 0 < lower cutoff < upper cutoff");
    const double w = f.w, eta = f.eta;
    const double pre_re = 1.0 / (8.0 * kPi * kC2 * K.eps0 * lz);
    ResponseValue v;
    v.kind = ResponseKind::AA;
    if (eta == 0.0) {
        if (std::abs(w) == lo || std::abs(w) == hi)
            throw PoleError("broadening-free Re chi_AA diverges at the window edges");
        v.re = 2.0 * pre_re *
               (std::log(std::abs(w - lo)) - std::log(std::abs(w - hi)) + std::log(std::abs(w + lo)) -
                std::log(std::abs(w + hi)));
        const double h = eft_box_height(lz);
        const double aw = std::abs(w);
        double mag = 0.0;
        if (aw > lo && aw < hi) mag = h;
        else if (aw == lo || aw == hi) mag = 0.5 * h;
        v.im = w > 0.0 ? -mag : (w < 0.0 ? mag : 0.0);
        return v;
    }
    const double e2 = eta * eta;
    v.re = pre_re * (std::log(((w - lo) * (w - lo) + e2) / ((w - hi) * (w - hi) + e2)) +
                     std::log(((w + lo) * (w + lo) + e2) / ((w + hi) * (w + hi) + e2)));
    v.im = 2.0 * pre_re *
           (std::atan((hi + w) / eta) - std::atan((lo + w) / eta) + std::atan((lo - w) / eta) -
            std::atan((hi - w) / eta));
    return v;
}

ResponseValue eft_chi_aa(BroadenedFrequency f, const EftConfig& cfg) {
    return eft_chi_aa(f, cfg.omega_tilde_kz(), std::sqrt(cfg.lambda_freq2()), cfg.base().lz);
}

ResponseValue eft_chi_aa_from_integrals(BroadenedFrequency f, const EftConfig& cfg) {
    const auto I = appendix_integrals(f.w, f.eta, cfg);
    const double pre = 1.0 / (8.0 * kPi * kPi * K.eps0 * cfg.base().lz);
    return {pre * (f.w * I.A - I.B - f.w * I.C - I.D), pre * f.eta * (I.C - I.A), ResponseKind::AA};
}

EftSummary summarize(const EftConfig& cfg) {
    EftSummary s{};
    s.lambda0 = cfg.lambda0();
    s.lambda_freq2 = cfg.lambda_freq2();
    s.kappa_z = cfg.kappa_z();
    s.omega_tilde_kz = cfg.omega_tilde_kz();
    s.alpha_dim = cfg.alpha_dim();
    s.n_alpha = cfg.n_electrons() * cfg.alpha_dim();
    s.coupling = effective_coupling(cfg);
    s.pole_lambda0 = cfg.pole_lambda0();
    s.pole_lambda_freq2 = landau_pole(cfg);
    s.in_window = cfg.in_stability_window();
    const double x = cfg.alpha_dim() * std::log(cfg.lambda0());
    s.mass_ratio = x < 1.0 ? 1.0 / (1.0 - x) : std::numeric_limits<double>::infinity();
    s.casimir_energy_density = casimir_energy_density(cfg);
    s.casimir_pressure = casimir_pressure(cfg);
    s.rs_min = x < 1.0 ? jellium(1.0, 1.0 - x).rs_min : std::numeric_limits<double>::quiet_NaN();
    s.omega_p = cfg.scales().omega_p();
    s.omega_tilde = cfg.scales().omega_tilde();
    s.gamma = cfg.scales().gamma();
    return s;
}

} // namespace cavityqed
