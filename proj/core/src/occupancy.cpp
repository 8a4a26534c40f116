#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cavityqed/errors.hpp"
#include "cavityqed/singlemode.hpp"

namespace cavityqed {

namespace {

// Antiderivative of sqrt(r^2 - x^2).
double circle_primitive(double x, double r) {
    x = std::clamp(x, -r, r);
    const double y = std::sqrt(std::max(0.0, (r - x) * (r + x)));
    return 0.5 * (x * y + r * r * std::atan2(x, y));
}

} // namespace

double disk_rectangle_overlap(Vec2 center, double r, double x0, double x1, double y0, double y1) {
    x0 -= center[0];
    x1 -= center[0];
    y0 -= center[1];
    y1 -= center[1];
    if (r <= 0.0 || x1 <= x0 || y1 <= y0) return 0.0;

    const double cx = std::clamp(0.0, x0, x1);
    const double cy = std::clamp(0.0, y0, y1);
    if (cx * cx + cy * cy >= r * r) return 0.0;
    const double fx = std::max(x0 * x0, x1 * x1);
    const double fy = std::max(y0 * y0, y1 * y1);
    if (fx + fy <= r * r) return (x1 - x0) * (y1 - y0);

    const double a = std::max(x0, -r);
    const double b = std::min(x1, r);
    if (b <= a) return 0.0;

    double cuts[6];
    int nc = 0;
    cuts[nc++] = a;
    cuts[nc++] = b;
    for (double yb : {y0, y1}) {
        if (std::abs(yb) < r) {
            const double xb = std::sqrt((r - yb) * (r + yb));
            for (double x : {-xb, xb})
                if (x > a && x < b) cuts[nc++] = x;
        }
    }
    std::sort(cuts, cuts + nc);

    double area = 0.0;
    for (int i = 0; i + 1 < nc; ++i) {
        const double xa = cuts[i];
        const double xb = cuts[i + 1];
        if (xb <= xa) continue;
        const double xm = 0.5 * (xa + xb);
        const double s = std::sqrt(std::max(0.0, (r - xm) * (r + xm)));
        if (std::min(y1, s) <= std::max(y0, -s)) continue;
        const double arc = circle_primitive(xb, r) - circle_primitive(xa, r);
        const double upper = y1 < s ? y1 * (xb - xa) : arc;
        const double lower = y0 > -s ? y0 * (xb - xa) : -arc;
        area += upper - lower;
    }
    return area;
}

OccupancyGrid::OccupancyGrid(Vec2 origin, Vec2 spacing, std::size_t nx, std::size_t ny, std::vector<double> f)
    : origin_(origin), spacing_(spacing), nx_(nx), ny_(ny), f_(std::move(f)) {
    if (f_.size() != nx_ * ny_) throw DomainError("occupancy grid: value count does not match nx*ny");
    if (!f_.empty() && !(spacing_[0] > 0.0 && spacing_[1] > 0.0))
        throw DomainError("occupancy grid: spacing must be > 0");
    for (double& v : f_) v = std::clamp(v, 0.0, 2.0);
}

Vec2 OccupancyGrid::cell_center(std::size_t i, std::size_t j) const {
    return {origin_[0] + (static_cast<double>(i) + 0.5) * spacing_[0],
            origin_[1] + (static_cast<double>(j) + 0.5) * spacing_[1]};
}

OccupancyGrid OccupancyGrid::fermi_disk(double k_fermi, Vec2 center, Vec2 origin, Vec2 spacing,
                                        std::size_t nx, std::size_t ny) {
    if (!(k_fermi > 0.0)) throw DomainError("fermi_disk: k_fermi must be > 0");
    std::vector<double> f(nx * ny);
    const double cell = spacing[0] * spacing[1];
    for (std::size_t j = 0; j < ny; ++j) {
        const double y0 = origin[1] + static_cast<double>(j) * spacing[1];
        for (std::size_t i = 0; i < nx; ++i) {
            const double x0 = origin[0] + static_cast<double>(i) * spacing[0];
            f[j * nx + i] = 2.0 * disk_rectangle_overlap(center, k_fermi, x0, x0 + spacing[0], y0, y0 + spacing[1]) / cell;
        }
    }
    return OccupancyGrid(origin, spacing, nx, ny, std::move(f));
}

OccupancyGrid OccupancyGrid::fermi_disk(double k_fermi, Vec2 center, std::size_t n) {
    const double half = 1.25 * k_fermi;
    const double h = 2.0 * half / static_cast<double>(n);
    return fermi_disk(k_fermi, center, {center[0] - half, center[1] - half}, {h, h}, n, n);
}

OccupancyGrid OccupancyGrid::annulus(double k_inner, double k_outer, Vec2 center, std::size_t n) {
    if (!(k_outer > k_inner && k_inner >= 0.0)) throw DomainError("annulus: need 0 <= k_inner < k_outer");
    const double half = 1.25 * k_outer;
    const double h = 2.0 * half / static_cast<double>(n);
    const Vec2 origin{center[0] - half, center[1] - half};
    std::vector<double> f(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double y0 = origin[1] + static_cast<double>(j) * h;
        for (std::size_t i = 0; i < n; ++i) {
            const double x0 = origin[0] + static_cast<double>(i) * h;
            const double outer = disk_rectangle_overlap(center, k_outer, x0, x0 + h, y0, y0 + h);
            const double inner = disk_rectangle_overlap(center, k_inner, x0, x0 + h, y0, y0 + h);
            f[j * n + i] = 2.0 * (outer - inner) / (h * h);
        }
    }
    return OccupancyGrid(origin, {h, h}, n, n, std::move(f));
}

void OccupancyGrid::write_csv(std::ostream& os) const {
    os << "kx,ky,f\n";
    char buf[96];
    for (std::size_t j = 0; j < ny_; ++j)
        for (std::size_t i = 0; i < nx_; ++i) {
            const Vec2 k = cell_center(i, j);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", k[0], k[1], value(i, j));
            os << buf;
        }
}

OccupancyGrid OccupancyGrid::read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw DomainError("occupancy csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "kx,ky,f") throw DomainError("occupancy csv: header must be kx,ky,f");

    struct Row { double kx, ky, f; };
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        std::istringstream ls(line);
        Row r{};
        char c1 = 0, c2 = 0;
        if (!(ls >> r.kx >> c1 >> r.ky >> c2 >> r.f) || c1 != ',' || c2 != ',')
            throw DomainError("occupancy csv: malformed row '" + line + "'");
        rows.push_back(r);
    }
    if (rows.empty()) return OccupancyGrid({0.0, 0.0}, {0.0, 0.0}, 0, 0, {});

    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        xs.push_back(r.kx);
        ys.push_back(r.ky);
    }
    auto uniq = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(xs);
    uniq(ys);
    const std::size_t nx = xs.size(), ny = ys.size();
    if (nx < 2 || ny < 2) throw DomainError("occupancy csv: need at least 2 cells per axis");
    if (nx * ny != rows.size()) throw DomainError("occupancy csv: rows do not form a full rectangular grid");
    const double hx = (xs.back() - xs.front()) / static_cast<double>(nx - 1);
    const double hy = (ys.back() - ys.front()) / static_cast<double>(ny - 1);
    for (std::size_t i = 1; i < nx; ++i)
        if (std::abs(xs[i] - xs[i - 1] - hx) > 1e-9 * hx) throw DomainError("occupancy csv: non-uniform kx spacing");
    for (std::size_t j = 1; j < ny; ++j)
        if (std::abs(ys[j] - ys[j - 1] - hy) > 1e-9 * hy) throw DomainError("occupancy csv: non-uniform ky spacing");

    std::vector<double> f(nx * ny, -1.0);
    for (const auto& r : rows) {
        const auto i = static_cast<std::size_t>(std::lround((r.kx - xs.front()) / hx));
        const auto j = static_cast<std::size_t>(std::lround((r.ky - ys.front()) / hy));
        if (f[j * nx + i] >= 0.0) throw DomainError("occupancy csv: duplicate cell");
        f[j * nx + i] = r.f;
    }
    return OccupancyGrid({xs.front() - 0.5 * hx, ys.front() - 0.5 * hy}, {hx, hy}, nx, ny, std::move(f));
}

DistributionMoments distribution_moments(const OccupancyGrid& grid) {
    if (grid.empty()) throw DomainError("distribution_moments: empty grid");
    const double weight = grid.spacing()[0] * grid.spacing()[1] / (4.0 * kPi * kPi);
    DistributionMoments m;
    for (std::size_t j = 0; j < grid.ny(); ++j)
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const double f = grid.value(i, j);
            if (f == 0.0) continue;
            const Vec2 k = grid.cell_center(i, j);
            m.t_D += f * (k[0] * k[0] + k[1] * k[1]);
            m.K_D[0] += f * k[0];
            m.K_D[1] += f * k[1];
            m.n_2d += f;
        }
    m.t_D *= weight;
    m.K_D[0] *= weight;
    m.K_D[1] *= weight;
    m.n_2d *= weight;
    return m;
}

} // namespace cavityqed
