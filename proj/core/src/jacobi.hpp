#pragma once

#include <Eigen/Dense>

namespace cavityqed::detail {

struct JacobiResult {
    Eigen::VectorXd values; // unsorted
    Eigen::MatrixXd vectors;
    int sweeps = 0;
};

// Cyclic Jacobi on a symmetric matrix. Stops once the off-diagonal Frobenius
// norm is at most rel_tol * ||A||_F; throws ConvergenceError after max_sweeps.
JacobiResult cyclic_jacobi(Eigen::MatrixXd A, double rel_tol, int max_sweeps);

} // namespace cavityqed::detail
