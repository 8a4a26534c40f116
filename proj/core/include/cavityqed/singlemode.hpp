#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cavityqed/system.hpp"

namespace cavityqed {

using Vec2 = std::array<double, 2>;

// Quantum numbers of a hybrid eigenstate: photon occupations of the two
// in-plane polarizations plus the aggregates of the electron momenta.
struct SpectrumIndex {
    long n1 = 0;
    long n2 = 0;
    Vec2 K{0.0, 0.0};         // 1/m
    double kinetic_sum = 0.0; // sum_j k_j^2, 1/m^2

    static SpectrumIndex from_momenta(long n1, long n2, std::span<const Vec2> momenta);
};

double eigenenergy(const SpectrumIndex& idx, const DerivedScales& scales);
double eigenenergy(const SpectrumIndex& idx, double omega_tilde, double gamma, double n_electrons);

// Spectrum with the diamagnetic term dropped: omega_tilde -> omega and
// gamma -> omega_p^2 / omega^2, which is unbounded.
double eigenenergy_no_a2(const SpectrumIndex& idx, double omega, double omega_p, double n_electrons);
double gamma_no_a2(double omega, double omega_p);

// Virtual photons in the ground state, summed over both polarizations.
double ground_photon_occupation(double omega, double omega_p);

struct DistributionMoments {
    double t_D = 0.0;   // 1/m^4
    Vec2 K_D{0.0, 0.0}; // 1/m^3
    double n_2d = 0.0;  // 1/m^2
};

// Uniform cell grid over k-space. Each value is the spin-summed occupancy
// of the cell, averaged over its area and clamped to [0, 2].
class OccupancyGrid {
public:
    OccupancyGrid(Vec2 origin, Vec2 spacing, std::size_t nx, std::size_t ny, std::vector<double> f);

    // Filled disk (f = 2 inside) of radius k_fermi around `center`, sampled
    // with exact cell-area fractions.
    static OccupancyGrid fermi_disk(double k_fermi, Vec2 center, Vec2 origin, Vec2 spacing,
                                    std::size_t nx, std::size_t ny);
    // Square window of half-width 1.25 k_fermi around `center`, n x n cells.
    static OccupancyGrid fermi_disk(double k_fermi, Vec2 center, std::size_t n);
    static OccupancyGrid annulus(double k_inner, double k_outer, Vec2 center, std::size_t n);

    Vec2 origin() const noexcept { return origin_; }
    Vec2 spacing() const noexcept { return spacing_; }
    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    bool empty() const noexcept { return f_.empty(); }
    double value(std::size_t i, std::size_t j) const { return f_[j * nx_ + i]; }
    Vec2 cell_center(std::size_t i, std::size_t j) const;

    // CSV with header kx,ky,f; one row per cell center.
    void write_csv(std::ostream& os) const;
    static OccupancyGrid read_csv(std::istream& is);

private:
    Vec2 origin_;
    Vec2 spacing_;
    std::size_t nx_;
    std::size_t ny_;
    std::vector<double> f_;
};

// Area of the disk |k - center| < r inside the rectangle [x0,x1] x [y0,y1].
double disk_rectangle_overlap(Vec2 center, double r, double x0, double x1, double y0, double y1);

DistributionMoments distribution_moments(const OccupancyGrid& grid);

// Energy per area in J/m^2, including the hbar^2/(2 m_e) prefactor.
double energy_density(const DistributionMoments& m, Vec2 q, double gamma);
Vec2 optimal_origin(const DistributionMoments& m);

// Energy density along q = (q_x, 0) for gamma > 1.
std::vector<double> instability_witness(double gamma, const DistributionMoments& m,
                                        std::span<const double> qx_sequence);

// Spin-degenerate Fermi disk: hbar^2 k_F^4 / (8 pi m_e).
double fermi_disk_energy_density(double k_fermi);

} // namespace cavityqed
