#pragma once

#include <functional>
#include <utility>

#include "paor/matrix.hpp"
#include "paor/report.hpp"

namespace paor {

/// Matrix-free linear map on vectors of a fixed size.
class LinearOperator {
public:
    using ApplyFn = std::function<Vector(const Vector&)>;

    LinearOperator(std::size_t n, ApplyFn apply) : n_(n), apply_(std::move(apply)) {}

    std::size_t size() const noexcept { return n_; }

    Vector operator()(const Vector& x) const {
        if (x.size() != n_) throw DimensionError("LinearOperator: size mismatch");
        return apply_(x);
    }

private:
    std::size_t n_;
    ApplyFn apply_;
};

/// Wraps a dense matrix-vector product.
LinearOperator make_operator(const DenseMatrix& A);

/// The identity map, useful as a "no preconditioner" argument.
LinearOperator identity_operator(std::size_t n);

/// Restarted GMRES(m) on the left-preconditioned system P A x = P b with
/// initial guess zero: Arnoldi with single-pass modified Gram-Schmidt and
/// Givens-rotation least squares, restarting every m inner steps.
///
/// Convergence is decided on the true residual ||b - A x|| / ||b||; the
/// Givens recurrence value (the preconditioned residual estimate) is kept in
/// the report's estimate_history. An Arnoldi breakdown below 1e-14 times the
/// initial cycle norm ends the cycle and is accepted as convergence only if
/// the true residual confirms it.
///
/// In the report, `iterations` is the total number of inner iterations and
/// `restarts` the number of restart events (cycles started minus one).
SolveReport gmres_restarted(const LinearOperator& A_op, const LinearOperator& P_op,
                            const Vector& b, std::size_t m, double tol,
                            std::size_t max_total_iter);

}  // namespace paor
