#ifndef DRC_LINALG_HPP
#define DRC_LINALG_HPP

#include <Eigen/Dense>

#include "drc/errors.hpp"

namespace drc {

// Dense row-major matrices are the ambient space of every feasibility
// formulation in this project.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline double frobeniusNorm(const Matrix& m) { return m.norm(); }

inline double frobeniusInner(const Matrix& a, const Matrix& b)
{
    return (a.transpose() * b).trace();
}

// Orthogonal projector onto the nullspace {X : A X = 0} of a full
// row rank matrix A.  The projector Id - A^T (A A^T)^{-1} A is
// materialized once (via a Cholesky factorization of A A^T, never an
// explicit inverse) and applied as a plain matrix product afterwards.
class AffineProjector {
public:
    static AffineProjector build(const Matrix& constraint);

    int dimension() const { return static_cast<int>(projector_.rows()); }
    const Matrix& matrix() const { return projector_; }

    Matrix apply(const Matrix& x) const;

private:
    explicit AffineProjector(Matrix projector)
        : projector_(std::move(projector))
    {
    }

    Matrix projector_;
};

} // namespace drc

#endif
