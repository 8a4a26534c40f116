#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "cavityqed/system.hpp"

namespace cavityqed {

struct BroadenedFrequency {
    double w = 0.0;   // rad/s, may be negative
    double eta = 0.0; // rad/s
};

enum class ResponseKind { AA, EA, JJ, JA, AJ, Sigma };

struct ResponseValue {
    double re = 0.0;
    double im = 0.0;
    ResponseKind kind = ResponseKind::AA;

    std::complex<double> value() const { return {re, im}; }
};

double chi_aa_time(double tau, double omega_tilde, double volume);
double chi_ea_time(double tau, double omega_tilde, double volume);

ResponseValue chi_aa_freq(BroadenedFrequency f, double omega_tilde, double volume);
ResponseValue chi_ea_freq(BroadenedFrequency f, double omega_tilde, double volume);

// Prefactor e^2 N / m_e linking the current sector to the field sector.
double current_prefactor(double n_electrons);

ResponseValue chi_jj_freq(BroadenedFrequency f, const DerivedScales& s);
ResponseValue chi_jj_freq(BroadenedFrequency f, double omega_tilde, double volume, double n_electrons);

enum class Mixed { JA, AJ };
ResponseValue chi_mixed_freq(BroadenedFrequency f, const DerivedScales& s, Mixed which);
ResponseValue chi_mixed_freq(BroadenedFrequency f, double omega_tilde, double volume,
                             double n_electrons, Mixed which);

using ResponseTable = std::array<std::array<std::complex<double>, 2>, 2>;

// [[JJ, JA], [AJ, AA]] and its rank-1 matrix of prefactors.
ResponseTable response_table(BroadenedFrequency f, const DerivedScales& s);
std::array<std::array<double, 2>, 2> response_prefactors(double n_electrons);

double absorption_rate(double w, double eta, double j_ext_magnitude, double omega_tilde, double volume);

// Optical conductivity from the closed real/imaginary forms.
ResponseValue optical_conductivity(BroadenedFrequency f, double omega_p, double omega_tilde);
ResponseValue optical_conductivity(BroadenedFrequency f, const DerivedScales& s);
// Same quantity assembled from the Kubo form (i/(w+i eta)) (e^2 n_e/m + chi_JJ/V).
std::complex<double> optical_conductivity_kubo(BroadenedFrequency f, const DerivedScales& s);

// Uncoupled DC conductivity eps0 omega_p^2 / eta; depends on the broadening.
double sigma0(double omega_p, double eta);
double dc_conductivity(double gamma, double sigma_0);
double drude_effective_mass(double gamma);
// Re sigma(w -> 0) at fixed eta, from the closed form evaluated on w = eta 2^-k.
double dc_limit_numeric(double omega_p, double omega_tilde, double eta);

// Rows w,re,im with header.
void write_spectrum_csv(std::ostream& os, std::span<const double> w,
                        std::span<const ResponseValue> values, int digits = 17);

std::string_view to_string(ResponseKind k);

} // namespace cavityqed
