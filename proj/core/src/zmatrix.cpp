#include "paor/zmatrix.hpp"

#include <cmath>

namespace paor {

bool is_z_matrix(const DenseMatrix& A) {
    if (!A.square()) throw DimensionError("is_z_matrix: matrix must be square");
    const std::size_t n = A.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && A(i, j) > 0.0) return false;
        }
    }
    return true;
}

MMatrixCertificate is_m_matrix(const DenseMatrix& A) {
    if (!is_z_matrix(A)) {
        throw PreconditionError("is_m_matrix: input must be a Z-matrix");
    }
    Vector x;
    try {
        x = lu_solve(A, Vector::ones(A.rows()));
    } catch (const SingularMatrixError&) {
        return {};  // singular Z-matrices are not M-matrices
    }
    const double floor = 1e-12 * norm_inf(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > floor)) return {};
    }
    return {true, std::move(x)};
}

DenseMatrix epsilon_fill(const DenseMatrix& A, double eps) {
    if (!(eps > 0.0)) throw ParameterError("epsilon_fill: eps must be positive");
    if (!A.square()) throw DimensionError("epsilon_fill: matrix must be square");
    DenseMatrix filled = A;
    for (double& v : filled.entries()) {
        if (v == 0.0) v = -eps;
    }
    return filled;
}

}  // namespace paor
