#include "cavityqed/singlemode.hpp"

#include <cmath>

#include "cavityqed/errors.hpp"

namespace cavityqed {

namespace {
constexpr const Constants& K = kCodata2018;

double kinetic_prefactor() { return K.hbar * K.hbar / (2.0 * K.m_e); }
double dot(Vec2 a, Vec2 b) { return a[0] * b[0] + a[1] * b[1]; }
} // namespace

SpectrumIndex SpectrumIndex::from_momenta(long n1, long n2, std::span<const Vec2> momenta) {
    SpectrumIndex idx{n1, n2, {0.0, 0.0}, 0.0};
    for (const auto& k : momenta) {
        idx.K[0] += k[0];
        idx.K[1] += k[1];
        idx.kinetic_sum += dot(k, k);
    }
    return idx;
}

double eigenenergy(const SpectrumIndex& idx, double omega_tilde, double gamma, double n_electrons) {
    if (idx.n1 < 0 || idx.n2 < 0) throw DomainError("photon quantum numbers must be >= 0");
    if (!(n_electrons >= 1.0)) throw DomainError("n_electrons must be >= 1");
    const double photons = K.hbar * omega_tilde * (static_cast<double>(idx.n1 + idx.n2) + 1.0);
    const double pref = kinetic_prefactor();
    return photons - gamma / n_electrons * pref * dot(idx.K, idx.K) + pref * idx.kinetic_sum;
}

double eigenenergy(const SpectrumIndex& idx, const DerivedScales& scales) {
    return eigenenergy(idx, scales.omega_tilde(), scales.gamma(), scales.n_electrons());
}

double gamma_no_a2(double omega, double omega_p) {
    if (!(omega > 0.0)) throw DomainError("no-A^2 spectrum requires omega > 0");
    return omega_p * omega_p / (omega * omega);
}

double eigenenergy_no_a2(const SpectrumIndex& idx, double omega, double omega_p, double n_electrons) {
    return eigenenergy(idx, omega, gamma_no_a2(omega, omega_p), n_electrons);
}

double ground_photon_occupation(double omega, double omega_p) {
    if (!(omega > 0.0)) throw DomainError("photon occupation diverges at omega = 0");
    const double wt = dressed_frequency(omega, omega_p);
    const double d = wt - omega;
    return d * d / (2.0 * omega * wt);
}

double energy_density(const DistributionMoments& m, Vec2 q, double gamma) {
    if (!(m.n_2d > 0.0)) throw DomainError("energy_density: n_2d must be > 0");
    if (gamma < 0.0) throw DomainError("energy_density: gamma must be >= 0");
    const Vec2 p{m.K_D[0] + q[0] * m.n_2d, m.K_D[1] + q[1] * m.n_2d};
    const double bracket = m.t_D + 2.0 * dot(q, m.K_D) + dot(q, q) * m.n_2d - gamma / m.n_2d * dot(p, p);
    return kinetic_prefactor() * bracket;
}

Vec2 optimal_origin(const DistributionMoments& m) {
    if (!(m.n_2d > 0.0)) throw DomainError("optimal_origin: n_2d must be > 0");
    return {-m.K_D[0] / m.n_2d, -m.K_D[1] / m.n_2d};
}

std::vector<double> instability_witness(double gamma, const DistributionMoments& m,
                                        std::span<const double> qx_sequence) {
    if (!(gamma > 1.0)) throw PreconditionError("instability_witness requires gamma > 1");
    for (std::size_t i = 1; i < qx_sequence.size(); ++i)
        if (!(qx_sequence[i] > qx_sequence[i - 1]))
            throw PreconditionError("instability_witness: q_x sequence must be strictly increasing");
    std::vector<double> out;
    out.reserve(qx_sequence.size());
    for (double qx : qx_sequence) out.push_back(energy_density(m, {qx, 0.0}, gamma));
    return out;
}

double fermi_disk_energy_density(double k_fermi) {
    const double k2 = k_fermi * k_fermi;
    return K.hbar * K.hbar * k2 * k2 / (8.0 * kPi * K.m_e);
}

} // namespace cavityqed
