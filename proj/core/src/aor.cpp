#include "paor/aor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paor {

namespace {

constexpr double kNegativeEntryTol = 1e-12;
constexpr double kStallFill = 1e-10;
constexpr std::size_t kStallWindow = 200;
constexpr double kUnderflowFloor = 1e-300;

void require_positive_diagonal(const DenseMatrix& D, const char* what) {
    for (std::size_t i = 0; i < D.rows(); ++i) {
        if (!(D(i, i) > 0.0)) {
            throw PreconditionError(std::string(what) + ": D must have a positive diagonal");
        }
    }
}

}  // namespace

AorParams::AorParams(double gamma, double omega) : gamma_(gamma), omega_(omega) {
    if (!(0.0 <= gamma && gamma <= omega && omega <= 1.0) || omega == 0.0) {
        throw ParameterError("AorParams: need 0 <= gamma <= omega <= 1 and omega != 0");
    }
}

DenseMatrix iteration_matrix(const SplittingTriple& splitting, const AorParams& params) {
    const DenseMatrix& D = splitting.D;
    const DenseMatrix& L = splitting.L;
    const DenseMatrix& U = splitting.U;
    if (!D.square() || D.rows() != L.rows() || D.rows() != U.rows()) {
        throw DimensionError("iteration_matrix: splitting shape mismatch");
    }
    require_positive_diagonal(D, "iteration_matrix");

    const std::size_t n = D.rows();
    const double g = params.gamma();
    const double w = params.omega();

    DenseMatrix M(n, n);  // D - gamma L, lower triangular
    DenseMatrix B(n, n);  // (1-omega) D + (omega-gamma) L + omega U
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            M(i, j) = D(i, j) - g * L(i, j);
            B(i, j) = (1.0 - w) * D(i, j) + (w - g) * L(i, j) + w * U(i, j);
        }
    }

    DenseMatrix T(n, n);
    Vector col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = B(i, j);
        const Vector t = lower_triangular_solve(M, col);
        for (std::size_t i = 0; i < n; ++i) T(i, j) = t[i];
    }
    return T;
}

SpectralEstimate spectral_radius(const DenseMatrix& T, double tol, std::size_t max_iter) {
    if (!T.square()) throw DimensionError("spectral_radius: matrix must be square");
    if (!(tol > 0.0)) throw ParameterError("spectral_radius: tol must be positive");

    DenseMatrix S = T;
    for (double& v : S.entries()) {
        if (v < 0.0) {
            if (v < -kNegativeEntryTol) {
                throw PreconditionError("spectral_radius: materially negative entry");
            }
            v = 0.0;
        }
    }

    const std::size_t n = S.rows();
    SpectralEstimate est;
    if (n == 0) {
        est.converged = true;
        return est;
    }

    Vector x = Vector::ones(n);
    double best_width = std::numeric_limits<double>::infinity();
    std::size_t stall = 0;
    bool perturbed = false;

    while (est.iterations < max_iter) {
        ++est.iterations;
        const Vector y = S * x;

        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] > kUnderflowFloor) {
                const double r = y[i] / x[i];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
        if (!(lo <= hi)) {  // every component underflowed; restart from ones
            x = Vector::ones(n);
            continue;
        }

        est.lower = lo;
        est.upper = hi;
        est.rho = 0.5 * (lo + hi);
        const double width = hi - lo;
        if (width <= tol) {
            est.converged = true;
            return est;
        }

        if (width < best_width * (1.0 - 1e-12)) {
            best_width = width;
            stall = 0;
        } else if (++stall >= kStallWindow && !perturbed) {
            // Likely reducible: fill structural zeros and re-run.
            for (double& v : S.entries()) {
                if (v == 0.0) v = kStallFill;
            }
            perturbed = true;
            x = Vector::ones(n);
            best_width = std::numeric_limits<double>::infinity();
            stall = 0;
            continue;
        }

        // Power step on S + I keeps iterates strictly positive.
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = y[i] + x[i];
            scale = std::max(scale, std::abs(x[i]));
        }
        if (scale > 0.0) {
            for (std::size_t i = 0; i < n; ++i) x[i] /= scale;
        }
    }
    return est;  // converged stays false; bracket reports progress so far
}

double spectral_radius_oracle(const DenseMatrix& T) {
    if (!T.square()) throw DimensionError("spectral_radius_oracle: matrix must be square");
    const std::size_t n = T.rows();
    if (n > 6) throw CapacityError("spectral_radius_oracle: restricted to n <= 6");
    for (double v : T.entries()) {
        if (v < 0.0) throw PreconditionError("spectral_radius_oracle: matrix must be nonnegative");
    }
    if (n == 0) return 0.0;

    // x > rho(T) exactly when xI - T is an M-matrix; bisect on that test.
    const auto is_above = [&](double x) {
        DenseMatrix C(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) C(i, j) = (i == j ? x : 0.0) - T(i, j);
        }
        Vector y;
        try {
            y = lu_solve(C, Vector::ones(n));
        } catch (const SingularMatrixError&) {
            return false;
        }
        const double floor = 1e-12 * norm_inf(y);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(y[i] > floor)) return false;
        }
        return true;
    };

    double lo = 0.0;
    double hi = norm_inf(T) + 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (is_above(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SolveReport aor_solve(const SplittingTriple& splitting, const Vector& b, const AorParams& params,
                      const Vector& x0, double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw ParameterError("aor_solve: tol must be positive");
    const DenseMatrix& D = splitting.D;
    const DenseMatrix& L = splitting.L;
    const DenseMatrix& U = splitting.U;
    require_positive_diagonal(D, "aor_solve");
    const std::size_t n = D.rows();
    if (b.size() != n || x0.size() != n) throw DimensionError("aor_solve: size mismatch");

    const DenseMatrix A = reconstruct(splitting);
    const double g = params.gamma();
    const double w = params.omega();
    const double bnorm = norm2(b);

    DenseMatrix M(n, n);  // D - gamma L
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) M(i, j) = D(i, j) - g * L(i, j);
    }

    const auto relative_residual = [&](const Vector& x) {
        const Vector ax = A * x;
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = b[i] - ax[i];
            s += r * r;
        }
        const double rn = std::sqrt(s);
        return bnorm > 0.0 ? rn / bnorm : rn;
    };

    SolveReport report;
    Vector x = x0;
    double res = relative_residual(x);
    const double initial = res;
    report.residual_history.push_back(res);

    while (res > tol && report.iterations < max_iter) {
        // x <- (D - gamma L)^{-1} [((1-w) D + (w-g) L + w U) x + w b]
        Vector rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = w * b[i];
            for (std::size_t j = 0; j < n; ++j) {
                s += ((1.0 - w) * D(i, j) + (w - g) * L(i, j) + w * U(i, j)) * x[j];
            }
            rhs[i] = s;
        }
        x = lower_triangular_solve(M, rhs);
        ++report.iterations;
        res = relative_residual(x);
        report.residual_history.push_back(res);
        if (initial > 0.0 && res > 1e12 * initial) {
            throw DivergenceError("aor_solve: residual grew by 1e12 over its initial value");
        }
    }

    report.final_relative_residual = res;
    report.converged = res <= tol;
    return report;
}

}  // namespace paor
