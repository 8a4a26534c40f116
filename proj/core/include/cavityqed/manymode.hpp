#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cavityqed {

using Vec3 = std::array<double, 3>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Mode {
    Vec3 kappa{0.0, 0.0, 0.0};
    int lambda = 0;
    double omega = 0.0;
    Vec3 eps{1.0, 0.0, 0.0};
};

class ModeSet {
public:
    // Polarizations must be unit vectors transverse to kappa unless
    // allow_longitudinal is set.
    explicit ModeSet(std::vector<Mode> modes, bool allow_longitudinal = false);

    // kappa_z = n omega/c for n = 1..M, every polarization along x.
    static ModeSet ladder_1d(int M, double omega_fundamental);
    // Two orthogonal in-plane polarizations of a single cavity mode.
    static ModeSet two_polarizations(double omega);
    static ModeSet single(double omega);

    std::size_t size() const noexcept { return modes_.size(); }
    const Mode& operator[](std::size_t i) const { return modes_[i]; }
    std::span<const Mode> modes() const noexcept { return modes_; }

private:
    std::vector<Mode> modes_;
};

Matrix build_w(const ModeSet& modes, double omega_p);

enum class EigenBackend { Jacobi, Eigen };

struct JacobiOptions {
    double rel_tol = 1e-12;
    int max_sweeps = 30;
};

struct NormalModes {
    Vector Omega;               // ascending; NaN for negative eigenvalues
    Vector Omega2;              // eigenvalues of W
    Matrix U;                   // columns are eigenvectors
    std::vector<Vec3> eps_tilde;
    int sweeps = 0;
};

// Cyclic Jacobi by default. Eigenvectors are sign-fixed so that the entry of
// largest magnitude is positive. eps_tilde is left empty.
NormalModes diagonalize_w(const Matrix& W, EigenBackend backend = EigenBackend::Jacobi,
                          JacobiOptions opts = {});

std::vector<Vec3> rotated_polarizations(const ModeSet& modes, const Matrix& U);

NormalModes normal_modes(const ModeSet& modes, double omega_p,
                         EigenBackend backend = EigenBackend::Jacobi);

double manymode_spectrum(std::span<const long> n_gamma, Vec3 K, double kinetic_sum,
                         const NormalModes& normal, double omega_p, double n_electrons);

// Ground-state photon number of each bare mode.
std::vector<double> manymode_photon_occupation(const ModeSet& modes, const NormalModes& normal);

double exact_coupling_1d(int M, double omega_fundamental, double omega_p,
                         EigenBackend backend = EigenBackend::Jacobi);

struct LowestModeRow {
    double ratio;
    double rel_diff_percent;        // |omega_tilde - Omega_l| / Omega_l
    double rel_diff_cutoff_percent; // same difference over omega_tilde
    double omega_tilde;
    double omega_lowest;
};

// Frequencies in units of the fundamental.
std::vector<LowestModeRow> lowest_mode_scan(std::span<const double> ratios, int M);

void write_lowest_scan_csv(std::ostream& os, std::span<const LowestModeRow> rows, int digits = 17);
void write_coupling_run_csv(std::ostream& os, std::span<const int> m_values,
                            std::span<const double> g_ex, int digits = 17);

} // namespace cavityqed
