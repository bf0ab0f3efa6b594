#include "drc/linalg.hpp"

#include <Eigen/Cholesky>

namespace drc {

AffineProjector AffineProjector::build(const Matrix& constraint)
{
    const auto rows = constraint.rows();
    const auto cols = constraint.cols();
    if (rows == 0 || cols == 0)
        throw InvalidParameter("constraint matrix must be nonempty");

    Eigen::MatrixXd gram = constraint * constraint.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw FactorizationFailure("A*A^T is not positive definite (degenerate constraint rows?)");

    Matrix projector = Matrix::Identity(cols, cols) - constraint.transpose() * llt.solve(constraint);

    // A near-singular Gram matrix can slip past LLT; reject it if the
    // result is not actually annihilated by A.
    const double residual = (constraint * projector).cwiseAbs().maxCoeff();
    if (!(residual < 1e-6))
        throw FactorizationFailure("A*A^T is numerically singular");

    return AffineProjector(std::move(projector));
}

Matrix AffineProjector::apply(const Matrix& x) const
{
    if (x.rows() != projector_.rows())
        throw ShapeMismatch("projector dimension does not match input rows");
    return projector_ * x;
}

} // namespace drc
