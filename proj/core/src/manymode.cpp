#include "cavityqed/manymode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "cavityqed/constants.hpp"
#include "cavityqed/errors.hpp"
#include "jacobi.hpp"

namespace cavityqed {

namespace {

constexpr const Constants& K = kCodata2018;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

void sort_and_fix_signs(Vector& values, Matrix& vectors) {
    const Eigen::Index n = values.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values(a) < values(b); });

    Vector v(n);
    Matrix U(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        v(k) = values(order[static_cast<std::size_t>(k)]);
        U.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
        Eigen::Index imax = 0;
        U.col(k).cwiseAbs().maxCoeff(&imax);
        if (U(imax, k) < 0.0) U.col(k) = -U.col(k);
    }
    values = std::move(v);
    vectors = std::move(U);
}

} // namespace

ModeSet::ModeSet(std::vector<Mode> modes, bool allow_longitudinal) : modes_(std::move(modes)) {
    if (modes_.empty()) throw DomainError("mode set must contain at least one mode");
    for (const auto& m : modes_) {
        if (!(m.omega > 0.0)) throw DomainError("mode frequency must be > 0");
        if (std::abs(dot(m.eps, m.eps) - 1.0) > 1e-12) throw DomainError("polarization must be a unit vector");
        const double kk = std::sqrt(dot(m.kappa, m.kappa));
        if (!allow_longitudinal && std::abs(dot(m.eps, m.kappa)) > 1e-12 * kk)
            throw DomainError("polarization must be transverse to kappa");
    }
}

ModeSet ModeSet::ladder_1d(int M, double omega_fundamental) {
    if (M < 1) throw DomainError("mode count must be >= 1");
    if (!(omega_fundamental > 0.0)) throw DomainError("fundamental frequency must be > 0");
    std::vector<Mode> modes;
    modes.reserve(static_cast<std::size_t>(M));
    const double k1 = omega_fundamental / K.c_light;
    for (int n = 1; n <= M; ++n)
        modes.push_back({{0.0, 0.0, n * k1}, 0, n * omega_fundamental, {1.0, 0.0, 0.0}});
    return ModeSet(std::move(modes));
}

ModeSet ModeSet::two_polarizations(double omega) {
    const Vec3 kappa{0.0, 0.0, omega / K.c_light};
    return ModeSet({{kappa, 0, omega, {1.0, 0.0, 0.0}}, {kappa, 1, omega, {0.0, 1.0, 0.0}}});
}

ModeSet ModeSet::single(double omega) {
    return ModeSet({{{0.0, 0.0, omega / K.c_light}, 0, omega, {1.0, 0.0, 0.0}}});
}

Matrix build_w(const ModeSet& modes, double omega_p) {
    if (omega_p < 0.0) throw DomainError("omega_p must be >= 0");
    const auto M = static_cast<Eigen::Index>(modes.size());
    const double wp2 = omega_p * omega_p;
    Matrix W(M, M);
    for (Eigen::Index a = 0; a < M; ++a) {
        const Mode& ma = modes[static_cast<std::size_t>(a)];
        W(a, a) = ma.omega * ma.omega + wp2;
        for (Eigen::Index b = a + 1; b < M; ++b) {
            const double v = wp2 * dot(ma.eps, modes[static_cast<std::size_t>(b)].eps);
            W(a, b) = v;
            W(b, a) = v;
        }
    }
    return W;
}

NormalModes diagonalize_w(const Matrix& W, EigenBackend backend, JacobiOptions opts) {
    if (W.rows() == 0 || W.rows() != W.cols()) throw DomainError("W must be a non-empty square matrix");
    const double scale = std::max(1.0, W.cwiseAbs().maxCoeff());
    if ((W - W.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("W is not symmetric");

    Vector values;
    Matrix vectors;
    NormalModes nm;
    if (backend == EigenBackend::Jacobi) {
        auto r = detail::cyclic_jacobi(W, opts.rel_tol, opts.max_sweeps);
        values = std::move(r.values);
        vectors = std::move(r.vectors);
        nm.sweeps = r.sweeps;
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> es(W);
        if (es.info() != Eigen::Success) throw ConvergenceError("Eigen self-adjoint solver failed", 0);
        values = es.eigenvalues();
        vectors = es.eigenvectors();
    }
    sort_and_fix_signs(values, vectors);
    nm.Omega2 = values;
    nm.Omega = values.unaryExpr([](double x) { return x >= 0.0 ? std::sqrt(x) : std::nan(""); });
    nm.U = std::move(vectors);
    return nm;
}

std::vector<Vec3> rotated_polarizations(const ModeSet& modes, const Matrix& U) {
    const auto M = static_cast<Eigen::Index>(modes.size());
    if (U.rows() != M || U.cols() != M) throw DomainError("rotated_polarizations: dimension mismatch");
    std::vector<Vec3> out(modes.size(), Vec3{0.0, 0.0, 0.0});
    for (Eigen::Index g = 0; g < M; ++g)
        for (Eigen::Index a = 0; a < M; ++a) {
            const Vec3& e = modes[static_cast<std::size_t>(a)].eps;
            for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(g)][i] += e[i] * U(a, g);
        }
    return out;
}

NormalModes normal_modes(const ModeSet& modes, double omega_p, EigenBackend backend) {
    NormalModes nm = diagonalize_w(build_w(modes, omega_p), backend);
    nm.eps_tilde = rotated_polarizations(modes, nm.U);
    return nm;
}

double manymode_spectrum(std::span<const long> n_gamma, Vec3 Kv, double kinetic_sum,
                         const NormalModes& normal, double omega_p, double n_electrons) {
    const auto M = static_cast<std::size_t>(normal.Omega.size());
    if (n_gamma.size() != M || normal.eps_tilde.size() != M)
        throw DomainError("manymode_spectrum: quantum numbers and modes differ in length");
    if (!(n_electrons >= 1.0)) throw DomainError("n_electrons must be >= 1");
    double coupling = 0.0;
    double photons = 0.0;
    for (std::size_t g = 0; g < M; ++g) {
        const auto gi = static_cast<Eigen::Index>(g);
        if (!(normal.Omega(gi) > 0.0)) throw DegenerateModeError("normal mode with zero frequency");
        if (n_gamma[g] < 0) throw DomainError("photon quantum numbers must be >= 0");
        const double p = dot(normal.eps_tilde[g], Kv);
        coupling += p * p / normal.Omega2(gi);
        photons += K.hbar * normal.Omega(gi) * (static_cast<double>(n_gamma[g]) + 0.5);
    }
    const double pref = K.hbar * K.hbar / (2.0 * K.m_e);
    return pref * (kinetic_sum - omega_p * omega_p / n_electrons * coupling) + photons;
}

std::vector<double> manymode_photon_occupation(const ModeSet& modes, const NormalModes& normal) {
    const auto M = static_cast<Eigen::Index>(modes.size());
    if (normal.U.rows() != M) throw DomainError("manymode_photon_occupation: dimension mismatch");
    std::vector<double> out(modes.size(), 0.0);
    for (Eigen::Index a = 0; a < M; ++a) {
        const double wa = modes[static_cast<std::size_t>(a)].omega;
        double s = 0.0;
        for (Eigen::Index g = 0; g < M; ++g) {
            const double Om = normal.Omega(g);
            if (!(Om > 0.0)) throw DegenerateModeError("normal mode with zero frequency");
            const double d = Om - wa;
            s += normal.U(a, g) * normal.U(a, g) * d * d / (4.0 * wa * Om);
        }
        out[static_cast<std::size_t>(a)] = s;
    }
    return out;
}

double exact_coupling_1d(int M, double omega_fundamental, double omega_p, EigenBackend backend) {
    const auto modes = ModeSet::ladder_1d(M, omega_fundamental);
    const auto nm = normal_modes(modes, omega_p, backend);
    double g = 0.0;
    for (Eigen::Index k = 0; k < nm.Omega.size(); ++k) {
        const double ex = nm.eps_tilde[static_cast<std::size_t>(k)][0];
        g += ex * ex / nm.Omega2(k);
    }
    return omega_p * omega_p * g;
}

std::vector<LowestModeRow> lowest_mode_scan(std::span<const double> ratios, int M) {
    std::vector<LowestModeRow> rows;
    rows.reserve(ratios.size());
    for (double r : ratios) {
        if (r < 0.0) throw DomainError("ratio must be >= 0");
        const auto nm = diagonalize_w(build_w(ModeSet::ladder_1d(M, 1.0), r));
        const double lowest = nm.Omega(0);
        const double wt = std::sqrt(1.0 + r * r);
        const double d = std::abs(wt - lowest);
        rows.push_back({r, 100.0 * d / lowest, 100.0 * d / wt, wt, lowest});
    }
    return rows;
}

void write_lowest_scan_csv(std::ostream& os, std::span<const LowestModeRow> rows, int digits) {
    os << "ratio,rel_diff_percent,rel_diff_cutoff_percent,omega_tilde,omega_lowest\n";
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.*g,%.*g,%.*g,%.*g,%.*g\n", digits, r.ratio, digits, r.rel_diff_percent,
                      digits, r.rel_diff_cutoff_percent, digits, r.omega_tilde, digits, r.omega_lowest);
        os << buf;
    }
}

void write_coupling_run_csv(std::ostream& os, std::span<const int> m_values, std::span<const double> g_ex,
                            int digits) {
    if (m_values.size() != g_ex.size()) throw DomainError("write_coupling_run_csv: size mismatch");
    os << "M,g_ex\n";
    char buf[96];
    for (std::size_t i = 0; i < g_ex.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%d,%.*g\n", m_values[i], digits, g_ex[i]);
        os << buf;
    }
}

} // namespace cavityqed
