#include "paor/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace paor {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ParameterError(std::string(what) + ": entries must be finite");
        }
    }
}

constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 31;  // ~16 GiB of doubles

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("DenseMatrix: entry count does not match rows*cols");
    }
    require_finite(entries_, "DenseMatrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<double> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("from_rows: ragged rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return DenseMatrix(r, c, std::move(data));
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
    require_finite(entries_, "Vector");
}

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) {
    require_finite(entries_, "Vector");
}

Vector Vector::ones(std::size_t n) {
    Vector v(n);
    std::fill(v.entries().begin(), v.entries().end(), 1.0);
    return v;
}

SplittingTriple split(const DenseMatrix& A) {
    if (!A.square()) throw DimensionError("split: matrix must be square");
    const std::size_t n = A.rows();
    SplittingTriple s{DenseMatrix(n, n), DenseMatrix(n, n), DenseMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                s.D(i, j) = A(i, j);
            } else if (i > j) {
                s.L(i, j) = -A(i, j);
            } else {
                s.U(i, j) = -A(i, j);
            }
        }
    }
    return s;
}

DenseMatrix reconstruct(const SplittingTriple& s) {
    return s.D - s.L - s.U;
}

DenseMatrix kron(const DenseMatrix& A, const DenseMatrix& B) {
    const std::size_t rows = A.rows() * B.rows();
    const std::size_t cols = A.cols() * B.cols();
    if (A.rows() != 0 && B.rows() != 0 &&
        (rows / B.rows() != A.rows() || cols / B.cols() != A.cols() ||
         rows > kMaxDenseEntries / std::max<std::size_t>(cols, 1))) {
        throw CapacityError("kron: result exceeds supported dense size");
    }
    DenseMatrix K(rows, cols);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const double a = A(i, j);
            if (a == 0.0) continue;
            for (std::size_t k = 0; k < B.rows(); ++k) {
                for (std::size_t l = 0; l < B.cols(); ++l) {
                    K(i * B.rows() + k, j * B.cols() + l) = a * B(k, l);
                }
            }
        }
    }
    return K;
}

DenseMatrix tridiag(std::size_t n, double sub, double diag, double sup) {
    if (n == 0) throw DimensionError("tridiag: size must be at least 1");
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = diag;
        if (i > 0) m(i, i - 1) = sub;
        if (i + 1 < n) m(i, i + 1) = sup;
    }
    return m;
}

LuFactors lu_factor(const DenseMatrix& A) {
    if (!A.square()) throw DimensionError("lu_factor: matrix must be square");
    const std::size_t n = A.rows();
    LuFactors f{A, std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

    const double pivot_floor = 1e-14 * max_abs(A);
    DenseMatrix& lu = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu(i, k));
            if (cand > best) {
                best = cand;
                p = i;
            }
        }
        if (best <= pivot_floor) {
            throw SingularMatrixError("lu_factor: pivot below singularity threshold");
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            std::swap(f.perm[k], f.perm[p]);
        }
        const double inv_pivot = 1.0 / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu(i, k) * inv_pivot;
            lu(i, k) = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) {
                lu(i, j) -= factor * lu(k, j);
            }
        }
    }
    return f;
}

Vector lu_solve(const LuFactors& factors, const Vector& b) {
    const std::size_t n = factors.lu.rows();
    if (b.size() != n) throw DimensionError("lu_solve: size mismatch");
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[factors.perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= factors.lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= factors.lu(i, j) * x[j];
        x[i] = s / factors.lu(i, i);
    }
    return x;
}

Vector lu_solve(const DenseMatrix& A, const Vector& b) {
    return lu_solve(lu_factor(A), b);
}

Vector lower_triangular_solve(const DenseMatrix& M, const Vector& b) {
    if (!M.square()) throw DimensionError("lower_triangular_solve: matrix must be square");
    const std::size_t n = M.rows();
    if (b.size() != n) throw DimensionError("lower_triangular_solve: size mismatch");
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (M(i, i) == 0.0) {
            throw SingularMatrixError("lower_triangular_solve: zero diagonal entry");
        }
        double s = b[i];
        for (std::size_t j = 0; j < i; ++j) s -= M(i, j) * x[j];
        x[i] = s / M(i, i);
    }
    return x;
}

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch");
    }
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "operator+");
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.entries().size(); ++i) {
        r.entries()[i] = a.entries()[i] + b.entries()[i];
    }
    return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "operator-");
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.entries().size(); ++i) {
        r.entries()[i] = a.entries()[i] - b.entries()[i];
    }
    return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("operator*: inner dimension mismatch");
    DenseMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.entries().size(); ++i) r.entries()[i] = s * a.entries()[i];
    return r;
}

Vector operator*(const DenseMatrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw DimensionError("operator*: matrix-vector size mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const Vector& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    for (double v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double norm_inf(const DenseMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        m = std::max(m, s);
    }
    return m;
}

}  // namespace paor
