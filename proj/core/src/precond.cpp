#include "paor/precond.hpp"

#include <cmath>
#include <string>

#include "paor/zmatrix.hpp"

namespace paor {

namespace {

constexpr double kUnitDiagonalTol = 1e-12;

void require_unit_diagonal(const DenseMatrix& A, const char* what) {
    if (!A.square()) throw DimensionError(std::string(what) + ": matrix must be square");
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (std::abs(A(i, i) - 1.0) > kUnitDiagonalTol) {
            throw PreconditionError(std::string(what) + ": matrix must have unit diagonal");
        }
    }
}

void require_alpha_range(const std::vector<double>& alpha) {
    for (double a : alpha) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw ParameterError("AlphaMask: coefficients must lie in [0,1]");
        }
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Decompose M by support into diagonal, strictly upper and strictly lower
/// parts (G + E + F = M exactly; supports disjoint).
void split_by_support(const DenseMatrix& M, DenseMatrix& G, DenseMatrix& E, DenseMatrix& F) {
    const std::size_t n = M.rows();
    G = DenseMatrix(n, n);
    E = DenseMatrix(n, n);
    F = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = M(i, j);
            if (i == j) {
                G(i, j) = v;
            } else if (i < j) {
                E(i, j) = v;
            } else {
                F(i, j) = v;
            }
        }
    }
}

}  // namespace

AlphaMask::AlphaMask(std::size_t n, double value) : n_(n), alpha_(n * n, value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ParameterError("AlphaMask: coefficients must lie in [0,1]");
    }
    for (std::size_t i = 0; i < n_; ++i) alpha_[i * n_ + i] = 0.0;
}

AlphaMask::AlphaMask(std::size_t n, std::vector<double> alpha) : n_(n), alpha_(std::move(alpha)) {
    if (alpha_.size() != n_ * n_) {
        throw DimensionError("AlphaMask: coefficient table must be n*n");
    }
    for (std::size_t i = 0; i < n_; ++i) alpha_[i * n_ + i] = 0.0;
    require_alpha_range(alpha_);
}

AlphaMask AlphaMask::triangular(std::size_t n, double lower, double upper) {
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) a[i * n + j] = lower;
            if (i < j) a[i * n + j] = upper;
        }
    }
    return AlphaMask(n, std::move(a));
}

double alpha_variate(std::uint64_t seed, std::size_t n, std::size_t i, std::size_t j) {
    const std::uint64_t key = seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(i * n + j + 1));
    const std::uint64_t bits = splitmix64(key);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;  // open interval (0,1)
}

AlphaMask AlphaMask::random(std::size_t n, std::uint64_t seed) {
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) a[i * n + j] = alpha_variate(seed, n, i, j);
        }
    }
    return AlphaMask(n, std::move(a));
}

AlphaMask AlphaMask::random_upper(std::size_t n, std::uint64_t seed) {
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) a[i * n + j] = 1.0;
            if (i < j) a[i * n + j] = alpha_variate(seed, n, i, j);
        }
    }
    return AlphaMask(n, std::move(a));
}

DenseMatrix build_preconditioner(const DenseMatrix& A, const AlphaMask& mask) {
    require_unit_diagonal(A, "build_preconditioner");
    if (mask.size() != A.rows()) {
        throw DimensionError("build_preconditioner: mask size mismatch");
    }
    const std::size_t n = A.rows();
    DenseMatrix P(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            P(i, j) = (i == j) ? 1.0 : -mask(i, j) * A(i, j);
        }
    }
    return P;
}

DenseMatrix preconditioned_matrix(const DenseMatrix& A, const DenseMatrix& P) {
    if (!A.square() || !P.square() || A.rows() != P.rows()) {
        throw DimensionError("preconditioned_matrix: conformable square matrices required");
    }
    return P * A;
}

DenseMatrix preconditioned_matrix_closed_form(const DenseMatrix& A, const AlphaMask& mask) {
    require_unit_diagonal(A, "preconditioned_matrix_closed_form");
    if (mask.size() != A.rows()) {
        throw DimensionError("preconditioned_matrix_closed_form: mask size mismatch");
    }
    const std::size_t n = A.rows();
    DenseMatrix At(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != i) s += mask(i, k) * A(i, k) * A(k, i);
                }
                At(i, j) = 1.0 - s;
            } else {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != i && k != j) s += mask(i, k) * A(i, k) * A(k, j);
                }
                At(i, j) = A(i, j) - mask(i, j) * A(i, j) - s;
            }
        }
    }
    return At;
}

PreconditionedSplitting decompose_preconditioned(const DenseMatrix& A, const AlphaMask& mask) {
    require_unit_diagonal(A, "decompose_preconditioned");
    const std::size_t n = A.rows();
    const DenseMatrix P = build_preconditioner(A, mask);
    const DenseMatrix A_tilde = P * A;

    const SplittingTriple sa = split(A);
    // Strict triangular parts of P - I; note Lo = mask .* L_A and Up = mask .* U_A.
    DenseMatrix Lo(n, n), Up(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) Lo(i, j) = P(i, j);
            if (i < j) Up(i, j) = P(i, j);
        }
    }

    PreconditionedSplitting out;
    out.A_tilde = A_tilde;
    split_by_support(Lo * sa.U, out.G1, out.E1, out.F1);
    split_by_support(Up * sa.L, out.G2, out.E2, out.F2);

    out.D = DenseMatrix::identity(n) - out.G1 - out.G2;
    out.L = sa.L - Lo + Lo * sa.L + out.F1 + out.F2;
    out.U = sa.U - Up + Up * sa.U + out.E1 + out.E2;

    const double tol = 1e-12 * std::max(1.0, max_abs(A_tilde));
    if (max_abs_diff(out.D - out.L - out.U, A_tilde) > tol) {
        throw InternalConsistencyError(
            "decompose_preconditioned: assembled splitting does not reproduce P*A");
    }
    return out;
}

bool dominance_condition(const DenseMatrix& A, const AlphaMask& mask) {
    require_unit_diagonal(A, "dominance_condition");
    if (!is_z_matrix(A)) {
        throw PreconditionError("dominance_condition: input must be a Z-matrix");
    }
    if (mask.size() != A.rows()) {
        throw DimensionError("dominance_condition: mask size mismatch");
    }
    const std::size_t n = A.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double t = (mask(i, j) - 1.0) * A(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) t += (mask(i, k) - 1.0) * A(i, k) * A(k, j);
            }
            for (std::size_t k = 0; k < i; ++k) {
                t += (mask(i, k) - 1.0) * A(i, k) * A(k, j);
            }
            if (t > 1e-12) return false;
        }
    }
    return true;
}

AlphaMask named_mask(NamedPreconditioner which, std::size_t n, std::uint64_t seed) {
    switch (which) {
        case NamedPreconditioner::P0: return AlphaMask(n, 0.0);
        case NamedPreconditioner::P1: return AlphaMask::triangular(n, 0.5, 0.0);
        case NamedPreconditioner::P2: return AlphaMask(n, 0.5);
        case NamedPreconditioner::P3: return AlphaMask::random(n, seed);
        case NamedPreconditioner::P4: return AlphaMask(n, 1.0);
    }
    throw ParameterError("named_mask: unknown preconditioner");
}

DenseMatrix named_preconditioner(const DenseMatrix& A, NamedPreconditioner which,
                                 std::uint64_t seed) {
    return build_preconditioner(A, named_mask(which, A.rows(), seed));
}

const char* to_string(NamedPreconditioner which) {
    switch (which) {
        case NamedPreconditioner::P0: return "P0";
        case NamedPreconditioner::P1: return "P1";
        case NamedPreconditioner::P2: return "P2";
        case NamedPreconditioner::P3: return "P3";
        case NamedPreconditioner::P4: return "P4";
    }
    return "?";
}

}  // namespace paor
