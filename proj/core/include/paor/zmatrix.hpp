#pragma once

#include <optional>

#include "paor/matrix.hpp"

namespace paor {

/// Outcome of the M-matrix test. When positive, `witness` holds a vector
/// x > 0 with A x > 0 entrywise, which certifies the property.
struct MMatrixCertificate {
    bool is_m_matrix = false;
    std::optional<Vector> witness;
};

/// True iff every off-diagonal entry of A is <= 0.
bool is_z_matrix(const DenseMatrix& A);

/// Tests whether a Z-matrix is a nonsingular M-matrix by solving A x = e
/// (e the all-ones vector) and checking x strictly positive, with relative
/// tolerance 1e-12. Throws PreconditionError for non-Z input; a singular
/// matrix yields a negative certificate.
MMatrixCertificate is_m_matrix(const DenseMatrix& A);

/// Replaces every zero entry of A by -eps, leaving nonzero entries alone.
/// Intended for unit-diagonal matrices; a zero diagonal entry would also be
/// replaced. Requires eps > 0.
DenseMatrix epsilon_fill(const DenseMatrix& A, double eps);

}  // namespace paor
