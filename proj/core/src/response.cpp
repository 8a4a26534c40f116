#include "cavityqed/response.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {

constexpr const Constants& K = kCodata2018;

void require_eta(double eta) {
    if (!(eta > 0.0)) throw DomainError("broadening eta must be > 0");
}

// Denominators (w -/+ omega_tilde)^2 + eta^2.
struct Poles {
    double dm, dp, Dm, Dp;
    Poles(double w, double wt, double eta)
        : dm(w - wt), dp(w + wt), Dm(dm * dm + eta * eta), Dp(dp * dp + eta * eta) {}
};

ResponseValue scaled(const ResponseValue& v, double factor, ResponseKind kind) {
    return {factor * v.re, factor * v.im, kind};
}

} // namespace

double chi_aa_time(double tau, double omega_tilde, double volume) {
    if (!(volume > 0.0)) throw DomainError("volume must be > 0");
    if (tau < 0.0) return 0.0;
    return -std::sin(omega_tilde * tau) / (K.eps0 * omega_tilde * volume);
}

double chi_ea_time(double tau, double omega_tilde, double volume) {
    if (!(volume > 0.0)) throw DomainError("volume must be > 0");
    if (tau < 0.0) return 0.0;
    return std::cos(omega_tilde * tau) / (K.eps0 * volume);
}

ResponseValue chi_aa_freq(BroadenedFrequency f, double omega_tilde, double volume) {
    require_eta(f.eta);
    if (!(volume > 0.0)) throw DomainError("volume must be > 0");
    const Poles p(f.w, omega_tilde, f.eta);
    const double pre = 1.0 / (2.0 * K.eps0 * omega_tilde * volume);
    return {pre * (p.dm / p.Dm - p.dp / p.Dp), pre * f.eta * (1.0 / p.Dp - 1.0 / p.Dm), ResponseKind::AA};
}

ResponseValue chi_ea_freq(BroadenedFrequency f, double omega_tilde, double volume) {
    require_eta(f.eta);
    if (!(volume > 0.0)) throw DomainError("volume must be > 0");
    const Poles p(f.w, omega_tilde, f.eta);
    const double pre = 1.0 / (2.0 * K.eps0 * volume);
    return {pre * f.eta * (1.0 / p.Dp + 1.0 / p.Dm), pre * (p.dp / p.Dp + p.dm / p.Dm), ResponseKind::EA};
}

double current_prefactor(double n_electrons) {
    return K.e_charge * K.e_charge * n_electrons / K.m_e;
}

ResponseValue chi_jj_freq(BroadenedFrequency f, double omega_tilde, double volume, double n_electrons) {
    const double c = current_prefactor(n_electrons);
    return scaled(chi_aa_freq(f, omega_tilde, volume), c * c, ResponseKind::JJ);
}

ResponseValue chi_jj_freq(BroadenedFrequency f, const DerivedScales& s) {
    return chi_jj_freq(f, s.omega_tilde(), s.volume(), s.n_electrons());
}

ResponseValue chi_mixed_freq(BroadenedFrequency f, double omega_tilde, double volume,
                             double n_electrons, Mixed which) {
    return scaled(chi_aa_freq(f, omega_tilde, volume), -current_prefactor(n_electrons),
                  which == Mixed::JA ? ResponseKind::JA : ResponseKind::AJ);
}

ResponseValue chi_mixed_freq(BroadenedFrequency f, const DerivedScales& s, Mixed which) {
    return chi_mixed_freq(f, s.omega_tilde(), s.volume(), s.n_electrons(), which);
}

std::array<std::array<double, 2>, 2> response_prefactors(double n_electrons) {
    const double c = current_prefactor(n_electrons);
    return {{{c * c, -c}, {-c, 1.0}}};
}

ResponseTable response_table(BroadenedFrequency f, const DerivedScales& s) {
    const auto aa = chi_aa_freq(f, s.omega_tilde(), s.volume()).value();
    const auto pf = response_prefactors(s.n_electrons());
    ResponseTable t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t[i][j] = pf[i][j] * aa;
    return t;
}

double absorption_rate(double w, double eta, double j_ext_magnitude, double omega_tilde, double volume) {
    const auto chi = chi_aa_freq({w, eta}, omega_tilde, volume);
    return -w * chi.im * j_ext_magnitude * j_ext_magnitude;
}

ResponseValue optical_conductivity(BroadenedFrequency f, double omega_p, double omega_tilde) {
    require_eta(f.eta);
    const double w = f.w, eta = f.eta, wt = omega_tilde;
    const double wp2 = omega_p * omega_p;
    const double z2 = w * w + eta * eta;
    const Poles p(w, wt, eta);
    const double drude = K.eps0 * wp2 / z2;
    const double coupled = K.eps0 * wp2 * wp2 / (2.0 * wt * z2);
    const double re = eta * drude - eta * coupled * ((2.0 * w + wt) / p.Dp - (2.0 * w - wt) / p.Dm);
    const double a = w * w - eta * eta;
    const double im = w * drude - coupled * ((a + w * wt) / p.Dp - (a - w * wt) / p.Dm);
    return {re, im, ResponseKind::Sigma};
}

ResponseValue optical_conductivity(BroadenedFrequency f, const DerivedScales& s) {
    return optical_conductivity(f, s.omega_p(), s.omega_tilde());
}

std::complex<double> optical_conductivity_kubo(BroadenedFrequency f, const DerivedScales& s) {
    require_eta(f.eta);
    const std::complex<double> z(f.w, f.eta);
    const double free = K.e_charge * K.e_charge * s.n_e() / K.m_e;
    const auto jj = chi_jj_freq(f, s).value();
    return std::complex<double>(0.0, 1.0) / z * (free + jj / s.volume());
}

double sigma0(double omega_p, double eta) {
    require_eta(eta);
    return K.eps0 * omega_p * omega_p / eta;
}

double dc_conductivity(double gamma, double sigma_0) {
    if (gamma < 0.0) throw DomainError("gamma must be >= 0");
    if (!(sigma_0 > 0.0)) throw DomainError("sigma0 must be > 0");
    if (gamma >= 1.0) throw InstabilityError("DC conductivity is not defined for gamma >= 1");
    return sigma_0 * (1.0 - gamma);
}

double drude_effective_mass(double gamma) {
    if (gamma < 0.0) throw DomainError("gamma must be >= 0");
    if (gamma >= 1.0) throw InstabilityError("Drude mass diverges for gamma >= 1");
    return K.m_e / (1.0 - gamma);
}

double dc_limit_numeric(double omega_p, double omega_tilde, double eta) {
    require_eta(eta);
    double w = eta;
    double prev = optical_conductivity({w, eta}, omega_p, omega_tilde).re;
    for (int k = 0; k < 60; ++k) {
        w *= 0.5;
        const double cur = optical_conductivity({w, eta}, omega_p, omega_tilde).re;
        if (std::abs(cur - prev) <= 1e-15 * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

void write_spectrum_csv(std::ostream& os, std::span<const double> w,
                        std::span<const ResponseValue> values, int digits) {
    if (w.size() != values.size()) throw DomainError("write_spectrum_csv: size mismatch");
    os << "w,re,im\n";
    char buf[128];
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.*g,%.*g,%.*g\n", digits, w[i], digits, values[i].re, digits, values[i].im);
        os << buf;
    }
}

std::string_view to_string(ResponseKind k) {
    switch (k) {
    case ResponseKind::AA: return "aa";
    case ResponseKind::EA: return "ea";
    case ResponseKind::JJ: return "jj";
    case ResponseKind::JA: return "ja";
    case ResponseKind::AJ: return "aj";
    case ResponseKind::Sigma: return "sigma";
    }
    return "?";
}

} // namespace cavityqed
