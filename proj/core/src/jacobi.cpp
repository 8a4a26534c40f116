#include "jacobi.hpp"

#include <cmath>
#include <string>

#include "cavityqed/errors.hpp"

namespace cavityqed::detail {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& A) {
    const Eigen::Index n = A.rows();
    double s = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
        for (Eigen::Index p = 0; p < q; ++p) s += A(p, q) * A(p, q);
    return std::sqrt(2.0 * s);
}

} // namespace

JacobiResult cyclic_jacobi(Eigen::MatrixXd A, double rel_tol, int max_sweeps) {
    const Eigen::Index n = A.rows();
    JacobiResult out;
    out.vectors = Eigen::MatrixXd::Identity(n, n);
    const double target = rel_tol * A.norm();

    for (int sweep = 0;; ++sweep) {
        if (off_diagonal_norm(A) <= target) {
            out.values = A.diagonal();
            out.sweeps = sweep;
            return out;
        }
        if (sweep == max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps",
                                   sweep);

        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double app = A(p, p);
                const double aqq = A(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (Eigen::Index r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = A(r, p);
                    const double arq = A(r, q);
                    const double np = c * arp - s * arq;
                    const double nq = s * arp + c * arq;
                    A(r, p) = np;
                    A(p, r) = np;
                    A(r, q) = nq;
                    A(q, r) = nq;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double vrp = out.vectors(r, p);
                    const double vrq = out.vectors(r, q);
                    out.vectors(r, p) = c * vrp - s * vrq;
                    out.vectors(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }
}

} // namespace cavityqed::detail
