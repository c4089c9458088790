#include "irwa/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irwa {

double max_abs(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw std::invalid_argument("HermitianOperator: matrix must be square and nonempty");
    if (!all_finite(mat_))
        throw std::invalid_argument("HermitianOperator: matrix has non-finite entries");
    const double dev = max_abs(mat_ - mat_.adjoint());
    if (dev > kHermitianTol)
        throw std::invalid_argument("HermitianOperator: ||H - H^dag||_max = " +
                                    std::to_string(dev) + " exceeds tolerance");
}

}  // namespace irwa
