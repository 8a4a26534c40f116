#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include <cavityqed/errors.hpp>
#include <cavityqed/singlemode.hpp>

using namespace cavityqed;

namespace {

constexpr const Constants& K = kCodata2018;
const double kPref = K.hbar * K.hbar / (2.0 * K.m_e);

DistributionMoments disk_moments(double kF) {
    return {kF * kF * kF * kF / (4.0 * kPi), {0.0, 0.0}, kF * kF / (2.0 * kPi)};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Eigenenergy, DecoupledLimit) {
    SpectrumIndex idx{0, 0, {0.0, 0.0}, 5e16};
    const double wt = 2e14;
    EXPECT_NEAR(rel(eigenenergy(idx, wt, 0.0, 10.0), K.hbar * wt + kPref * 5e16), 0.0, 1e-15);
}

TEST(Eigenenergy, ZeroMomentumGivesPhotonLadder) {
    SpectrumIndex idx{2, 3, {0.0, 0.0}, 1e16};
    const double wt = 3e14;
    EXPECT_NEAR(rel(eigenenergy(idx, wt, 0.4, 100.0), K.hbar * wt * 6.0 + kPref * 1e16), 0.0, 1e-15);
}

TEST(Eigenenergy, SingleElectron) {
    const double k = 1.7e8, wt = 1e14, gamma = 0.3;
    const std::vector<Vec2> ks{{k, 0.0}};
    const auto idx = SpectrumIndex::from_momenta(0, 0, ks);
    EXPECT_NEAR(rel(eigenenergy(idx, wt, gamma, 1.0), K.hbar * wt + kPref * k * k * (1.0 - gamma)), 0.0, 1e-15);
}

TEST(Eigenenergy, FreeGasCrossCheckAgainstMomentumSum) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd(0.0, 1e8);
    std::vector<Vec2> ks(50);
    double direct = 0.0;
    for (auto& k : ks) {
        k = {nd(rng), nd(rng)};
        direct += kPref * (k[0] * k[0] + k[1] * k[1]);
    }
    const auto idx = SpectrumIndex::from_momenta(1, 0, ks);
    const double wt = 5e13;
    EXPECT_NEAR(rel(eigenenergy(idx, wt, 0.0, 50.0), direct + 2.0 * K.hbar * wt), 0.0, 1e-14);
    EXPECT_GE(idx.kinetic_sum, (idx.K[0] * idx.K[0] + idx.K[1] * idx.K[1]) / 50.0);
}

TEST(NoA2, EffectiveCoupling) {
    EXPECT_LT(gamma_no_a2(2.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(gamma_no_a2(2.0, 2.0), 1.0);
    EXPECT_DOUBLE_EQ(gamma_no_a2(1.5, 3.0), 4.0);
    EXPECT_THROW(gamma_no_a2(0.0, 1.0), DomainError);
}

TEST(NoA2, SpectrumUnboundedBelow) {
    const double w = 1e14;
    double prev = INFINITY;
    for (double k : {1e7, 1e8, 1e9, 1e10}) {
        const std::vector<Vec2> ks{{k, 0.0}};
        const double e = eigenenergy_no_a2(SpectrumIndex::from_momenta(0, 0, ks), w, 2.0 * w, 1.0);
        EXPECT_LT(e, prev);
        prev = e;
    }
    EXPECT_LT(prev, 0.0);
}

TEST(PhotonOccupation, Examples) {
    EXPECT_EQ(ground_photon_occupation(1.0, 0.0), 0.0);
    EXPECT_NEAR(ground_photon_occupation(1.0, std::sqrt(3.0)), 0.25, 1e-15);
    EXPECT_THROW(ground_photon_occupation(0.0, 1.0), DomainError);
    double prev = -1.0;
    for (double wp = 0.0; wp < 5.0; wp += 0.1) {
        const double n = ground_photon_occupation(1.0, wp);
        EXPECT_GT(n, prev);
        prev = n;
    }
}

TEST(PhotonOccupation, SquareRootDensityLaw) {
    // omega_p^2 is proportional to n_e; fit log N_ph against log n_e at large density.
    std::vector<double> x, y;
    for (double ln = 8.0; ln <= 12.0; ln += 0.25) {
        const double ne = std::pow(10.0, ln);
        x.push_back(std::log(ne));
        y.push_back(std::log(ground_photon_occupation(1.0, std::sqrt(ne))));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    EXPECT_NEAR(sxy / sxx, 0.5, 0.01);
}

TEST(DiskOverlap, FullPartialEmpty) {
    const double r = 1.0;
    EXPECT_NEAR(disk_rectangle_overlap({0, 0}, r, -2, 2, -2, 2), kPi, 1e-14);
    EXPECT_NEAR(disk_rectangle_overlap({0, 0}, r, 0, 2, 0, 2), kPi / 4.0, 1e-14);
    EXPECT_NEAR(disk_rectangle_overlap({0, 0}, r, -0.1, 0.1, -0.1, 0.1), 0.04, 1e-15);
    EXPECT_EQ(disk_rectangle_overlap({0, 0}, r, 1.0, 2.0, 1.0, 2.0), 0.0);
    // Strip |y| < 0.5 through the disk: 2 * (y sqrt(1-y^2) + asin y) at y = 0.5.
    const double strip = 2.0 * (0.5 * std::sqrt(0.75) + std::asin(0.5));
    EXPECT_NEAR(disk_rectangle_overlap({0, 0}, r, -3, 3, -0.5, 0.5), strip, 1e-14);
    EXPECT_NEAR(disk_rectangle_overlap({0.3, -0.2}, r, -3, 3, -0.7, 0.3), strip, 1e-14);
}

TEST(Moments, FermiDiskAnalytic) {
    const double kF = 2.0;
    const auto m = distribution_moments(OccupancyGrid::fermi_disk(kF, {0.0, 0.0}, 400));
    const auto exact = disk_moments(kF);
    EXPECT_NEAR(m.n_2d / exact.n_2d, 1.0, 1e-13);
    EXPECT_NEAR(m.t_D / exact.t_D, 1.0, 1e-4);
    EXPECT_NEAR(m.K_D[0], 0.0, 1e-12);
    EXPECT_NEAR(m.K_D[1], 0.0, 1e-12);
}

TEST(Moments, ShiftedDisk) {
    const double kF = 1.0;
    const Vec2 q{0.3, -0.45};
    const auto m = distribution_moments(OccupancyGrid::fermi_disk(kF, q, 400));
    const auto e = disk_moments(kF);
    EXPECT_NEAR(m.K_D[0], q[0] * e.n_2d, 1e-12);
    EXPECT_NEAR(m.K_D[1], q[1] * e.n_2d, 1e-12);
    // t_D of the shifted disk is t_D(0) + |q|^2 n_2d.
    EXPECT_NEAR(m.t_D / (e.t_D + (q[0] * q[0] + q[1] * q[1]) * e.n_2d), 1.0, 1e-4);
    const Vec2 q0 = optimal_origin(m);
    EXPECT_NEAR(q0[0], -q[0], 1e-12);
    EXPECT_NEAR(q0[1], -q[1], 1e-12);
}

TEST(Moments, SecondOrderConvergence) {
    const double kF = 1.0;
    const double exact = disk_moments(kF).t_D;
    double prev_err = 0.0;
    for (std::size_t n : {50u, 100u, 200u, 400u}) {
        const double err = std::abs(distribution_moments(OccupancyGrid::fermi_disk(kF, {0.0, 0.0}, n)).t_D - exact);
        if (prev_err > 0.0) EXPECT_NEAR(std::log2(prev_err / err), 2.0, 0.2);
        prev_err = err;
    }
}

TEST(Moments, EmptyAndZeroGrids) {
    EXPECT_THROW(distribution_moments(OccupancyGrid({0, 0}, {1, 1}, 0, 0, {})), DomainError);
    const auto m = distribution_moments(OccupancyGrid({0, 0}, {1, 1}, 2, 2, {0, 0, 0, 0}));
    EXPECT_EQ(m.n_2d, 0.0);
    EXPECT_EQ(m.t_D, 0.0);
    EXPECT_THROW(energy_density(m, {0, 0}, 0.5), DomainError);
}

TEST(OccupancyGrid, ClampsValues) {
    OccupancyGrid g({0, 0}, {1, 1}, 2, 1, {-1.0, 3.0});
    EXPECT_EQ(g.value(0, 0), 0.0);
    EXPECT_EQ(g.value(1, 0), 2.0);
}

TEST(OccupancyGrid, CsvRoundTrip) {
    const auto g = OccupancyGrid::fermi_disk(1.3, {0.1, 0.0}, 24);
    std::stringstream ss;
    g.write_csv(ss);
    EXPECT_EQ(ss.str().substr(0, 8), "kx,ky,f\n");
    const auto h = OccupancyGrid::read_csv(ss);
    ASSERT_EQ(h.nx(), g.nx());
    ASSERT_EQ(h.ny(), g.ny());
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) EXPECT_EQ(h.value(i, j), g.value(i, j));
    const auto a = distribution_moments(g), b = distribution_moments(h);
    EXPECT_NEAR(rel(b.t_D, a.t_D), 0.0, 1e-13);
}

TEST(OccupancyGrid, CsvRejectsBadInput) {
    std::stringstream bad("x,y,z\n1,2,3\n");
    EXPECT_THROW(OccupancyGrid::read_csv(bad), DomainError);
    std::stringstream holes("kx,ky,f\n0,0,1\n1,0,1\n0,1,1\n");
    EXPECT_THROW(OccupancyGrid::read_csv(holes), DomainError);
}

TEST(EnergyDensity, OptimalOriginIsGammaIndependent) {
    const auto m = distribution_moments(OccupancyGrid::fermi_disk(1e8, {2e7, -1e7}, 120));
    const Vec2 q0 = optimal_origin(m);
    const double ref = energy_density(m, q0, 0.0);
    EXPECT_NEAR(rel(ref, kPref * (m.t_D - (m.K_D[0] * m.K_D[0] + m.K_D[1] * m.K_D[1]) / m.n_2d)), 0.0, 1e-12);
    for (double g : {0.3, 0.7, 0.999}) EXPECT_NEAR(rel(energy_density(m, q0, g), ref), 0.0, 1e-12);
}

TEST(EnergyDensity, OptimalOriginMinimizesForStableCoupling) {
    const auto m = distribution_moments(OccupancyGrid::fermi_disk(1.0, {0.2, 0.1}, 80));
    const Vec2 q0 = optimal_origin(m);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double g : {0.0, 0.5, 0.9}) {
        const double e0 = energy_density(m, q0, g);
        for (int i = 0; i < 100; ++i) EXPECT_GE(energy_density(m, {u(rng), u(rng)}, g), e0);
    }
}

TEST(EnergyDensity, CriticalCouplingIsFlat) {
    const auto m = distribution_moments(OccupancyGrid::fermi_disk(1.0, {0.4, 0.0}, 60));
    const double a = energy_density(m, {0.37, -1.2}, 1.0);
    const double b = energy_density(m, {-5.1, 2.9}, 1.0);
    EXPECT_NEAR(rel(a, b), 0.0, 1e-10);
}

TEST(EnergyDensity, SpinDegenerateFermiDisk) {
    const double kF = 1.5e8;
    EXPECT_NEAR(rel(energy_density(disk_moments(kF), {0, 0}, 0.4), fermi_disk_energy_density(kF)), 0.0, 1e-14);
}

TEST(EnergyDensity, DiskBeatsAnnulusAndShiftedDisk) {
    // Same density: annulus between r1 and r2 with r2^2 - r1^2 = kF^2.
    const double kF = 1.0;
    const double r1 = 0.5, r2 = std::sqrt(kF * kF + r1 * r1);
    const auto disk = distribution_moments(OccupancyGrid::fermi_disk(kF, {0, 0}, 300));
    const auto ann = distribution_moments(OccupancyGrid::annulus(r1, r2, {0, 0}, 300));
    EXPECT_NEAR(rel(ann.n_2d, disk.n_2d), 0.0, 1e-12);
    for (double g : {0.0, 0.5, 0.9}) {
        const double ed = energy_density(disk, optimal_origin(disk), g);
        EXPECT_LT(ed, energy_density(ann, optimal_origin(ann), g));
        EXPECT_LT(ed, energy_density(disk, {0.3, 0.0}, g));
    }
}

TEST(InstabilityWitness, DecreasesBeyondCritical) {
    const double kF = 1e8;
    const auto m = disk_moments(kF);
    const std::vector<double> qs{kF, 10 * kF, 100 * kF};
    for (double g : {1.01, 1.5, 3.0}) {
        const auto e = instability_witness(g, m, qs);
        EXPECT_GT(e[0], e[1]);
        EXPECT_GT(e[1], e[2]);
    }
    EXPECT_THROW(instability_witness(1.0, m, qs), PreconditionError);
    EXPECT_THROW(instability_witness(0.5, m, qs), PreconditionError);
    const std::vector<double> bad{2.0, 1.0};
    EXPECT_THROW(instability_witness(1.5, m, bad), PreconditionError);
}

TEST(InstabilityWitness, ShiftedDistributionEventuallyDecreases) {
    const auto m = distribution_moments(OccupancyGrid::fermi_disk(1.0, {0.8, 0.0}, 80));
    const double g = 1.5;
    const double scale = std::abs(m.K_D[0]) / m.n_2d * g / (g - 1.0);
    std::vector<double> qs;
    for (int i = 1; i <= 8; ++i) qs.push_back(scale * std::pow(2.0, i));
    const auto e = instability_witness(g, m, qs);
    for (std::size_t i = 1; i < e.size(); ++i) EXPECT_LT(e[i], e[i - 1]);
}
