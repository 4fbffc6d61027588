#pragma once

#include "paor/matrix.hpp"
#include "paor/report.hpp"

namespace paor {

/// Relaxation pair (gamma, omega), restricted to 0 <= gamma <= omega <= 1
/// with omega != 0. gamma = 0, omega = 1 is the Jacobi sweep; gamma = omega
/// is SOR; gamma = omega = 1 is Gauss-Seidel.
class AorParams {
public:
    AorParams(double gamma, double omega);
    double gamma() const noexcept { return gamma_; }
    double omega() const noexcept { return omega_; }

private:
    double gamma_;
    double omega_;
};

/// Spectral-radius estimate with a Collatz-Wielandt bracket.
/// lower <= rho <= upper; on convergence upper - lower <= the requested tol.
struct SpectralEstimate {
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// AOR iteration matrix T = (D - gamma L)^{-1} [(1-omega) D + (omega-gamma) L
/// + omega U], formed column by column through forward substitution (the
/// inverse is never built). Requires a strictly positive diagonal in D.
DenseMatrix iteration_matrix(const SplittingTriple& splitting, const AorParams& params);

/// Spectral radius of a nonnegative matrix by power iteration on T + I with
/// Collatz-Wielandt bounds min/max_i (Tx)_i / x_i taken over strictly
/// positive components. Entries of T in [-1e-12, 0) are clamped to zero;
/// anything more negative is rejected. If the bracket stalls for 200
/// iterations (a reducibility symptom) the zero entries of T are filled with
/// +1e-10 once and the iteration restarts; the fill shifts the radius by at
/// most n * 1e-10.
SpectralEstimate spectral_radius(const DenseMatrix& T, double tol, std::size_t max_iter);

/// Reference spectral radius for nonnegative T with n <= 6: bisection on x
/// against the test "xI - T is an M-matrix", which holds exactly for
/// x > rho(T). Refined to 1e-10.
double spectral_radius_oracle(const DenseMatrix& T);

/// Stationary AOR solve of (D - L - U) x = b via triangular sweeps; the
/// iteration matrix is never formed. Stops when the true relative residual
/// drops to tol; throws DivergenceError if the residual grows by 1e12 over
/// its initial value.
SolveReport aor_solve(const SplittingTriple& splitting, const Vector& b, const AorParams& params,
                      const Vector& x0, double tol, std::size_t max_iter);

}  // namespace paor
