#include "irwa/numerics.hpp"

#include <string>

#include <Eigen/Eigenvalues>

#include "irwa/errors.hpp"

namespace irwa {

EigenSystem eig_hermitian(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success)
        throw EigensolverError("eig_hermitian: no convergence for dimension " +
                               std::to_string(h.dim()));

    EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};

    const auto n = h.dim();
    const double ortho = max_abs(sys.vectors.adjoint() * sys.vectors -
                                 ComplexMatrix::Identity(n, n));
    if (ortho > 1e-10)
        throw EigensolverError("eig_hermitian: eigenvector orthonormality residual " +
                               std::to_string(ortho) + " for dimension " + std::to_string(n));
    const double scale = max_abs(h.matrix());
    const double resid = max_abs(h.matrix() * sys.vectors -
                                 sys.vectors * sys.values.asDiagonal().toDenseMatrix().cast<Complex>());
    if (scale > 0.0 && resid > 1e-9 * scale)
        throw EigensolverError("eig_hermitian: reconstruction residual " +
                               std::to_string(resid) + " for dimension " + std::to_string(n));
    return sys;
}

ComplexMatrix expm_i(const HermitianOperator& h, double t) {
    const EigenSystem sys = eig_hermitian(h);
    ComplexVector phases(sys.values.size());
    for (Eigen::Index k = 0; k < sys.values.size(); ++k)
        phases(k) = std::exp(Complex(0.0, -sys.values(k) * t));
    ComplexMatrix u = sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();

    const auto n = h.dim();
    const double unit = max_abs(u.adjoint() * u - ComplexMatrix::Identity(n, n));
    if (unit > 1e-10)
        throw EigensolverError("expm_i: unitarity residual " + std::to_string(unit) +
                               " for dimension " + std::to_string(n));
    return u;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    ComplexMatrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i)
        for (Eigen::Index j = 0; j < ac; ++j)
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    return out;
}

}  // namespace irwa
