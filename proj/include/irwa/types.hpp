#pragma once

#include <complex>

#include <Eigen/Dense>

namespace irwa {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

// Dense operator asserted Hermitian at construction. All Hamiltonians and
// observables are carried as this type; entries are angular frequencies in
// units where hbar = 1 (and omega_r = 1 unless configured otherwise).
class HermitianOperator {
public:
    static constexpr double kHermitianTol = 1e-12;

    explicit HermitianOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
};

// Eigendecomposition of a Hermitian operator: ascending real eigenvalues
// and orthonormal eigenvector columns.
struct EigenSystem {
    RealVector values;
    ComplexMatrix vectors;
};

}  // namespace irwa
