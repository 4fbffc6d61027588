#pragma once

#include <cstdint>
#include <vector>

#include "paor/matrix.hpp"

namespace paor {

/// Per-entry coefficients alpha_ij in [0,1] for i != j, selecting one member
/// of the preconditioner family P = I + (masked, negated off-diagonal part
/// of A). Values outside [0,1] are rejected at construction. Diagonal slots
/// are ignored and stored as zero.
class AlphaMask {
public:
    /// All off-diagonal coefficients set to `value`.
    AlphaMask(std::size_t n, double value);
    /// Full n*n coefficient table in row-major order; diagonal ignored.
    AlphaMask(std::size_t n, std::vector<double> alpha);

    /// Constant coefficients per triangle: `lower` below the diagonal,
    /// `upper` above it.
    static AlphaMask triangular(std::size_t n, double lower, double upper);
    /// Independent uniform(0,1) coefficients from a seeded SplitMix64
    /// generator keyed per entry; identical (seed, i, j) always yields the
    /// identical coefficient.
    static AlphaMask random(std::size_t n, std::uint64_t seed);
    /// Lower triangle fixed at 1, upper triangle random as in random().
    static AlphaMask random_upper(std::size_t n, std::uint64_t seed);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return alpha_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<double> alpha_;
};

/// The uniform(0,1) variate used by AlphaMask::random for entry (i, j).
double alpha_variate(std::uint64_t seed, std::size_t n, std::size_t i, std::size_t j);

/// Builds P with unit diagonal and p_ij = -alpha_ij * a_ij off the diagonal.
/// Requires A to have unit diagonal (tolerance 1e-12).
DenseMatrix build_preconditioner(const DenseMatrix& A, const AlphaMask& mask);

/// Left-preconditioned matrix P * A.
DenseMatrix preconditioned_matrix(const DenseMatrix& A, const DenseMatrix& P);

/// Entrywise closed form of P(mask) * A for unit-diagonal A, evaluated
/// directly from sums over A's entries. Serves as an independent cross-check
/// of preconditioned_matrix.
DenseMatrix preconditioned_matrix_closed_form(const DenseMatrix& A, const AlphaMask& mask);

/// Structural decomposition of the preconditioned matrix.
///
/// With P = I + Lo + Up (Lo, Up the strictly lower/upper parts of P - I),
/// the products Lo*U and Up*L split by support into diagonal (G1, G2),
/// strictly upper (E1, E2) and strictly lower (F1, F2) parts, from which the
/// splitting A_tilde = D - L - U is assembled:
///   D = I - G1 - G2
///   L = L_A - Lo + Lo*L_A + F1 + F2
///   U = U_A - Up + Up*U_A + E1 + E2
/// The assembly is verified against the direct product P*A to 1e-12.
struct PreconditionedSplitting {
    DenseMatrix A_tilde;
    DenseMatrix D;
    DenseMatrix L;
    DenseMatrix U;
    DenseMatrix G1, E1, F1;
    DenseMatrix G2, E2, F2;
};

PreconditionedSplitting decompose_preconditioned(const DenseMatrix& A, const AlphaMask& mask);

/// Sufficient condition under which the all-ones mask yields an AOR
/// iteration whose spectral radius is no larger than the masked one.
/// Evaluates, for every pair j < i,
///   (alpha_ij - 1) a_ij
///   + sum_{k != i} (alpha_ik - 1) a_ik a_kj
///   + sum_{k < i}  (alpha_ik - 1) a_ik a_kj
/// and reports true iff every value is <= 1e-12. Requires a unit-diagonal
/// Z-matrix.
bool dominance_condition(const DenseMatrix& A, const AlphaMask& mask);

/// The five benchmark preconditioners: identity, half-strength lower,
/// half-strength both triangles, seeded random mask, full strength.
enum class NamedPreconditioner { P0, P1, P2, P3, P4 };

AlphaMask named_mask(NamedPreconditioner which, std::size_t n, std::uint64_t seed);
DenseMatrix named_preconditioner(const DenseMatrix& A, NamedPreconditioner which,
                                 std::uint64_t seed);

const char* to_string(NamedPreconditioner which);

}  // namespace paor
