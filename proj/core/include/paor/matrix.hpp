#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "paor/errors.hpp"

namespace paor {

/// Dense real matrix in row-major order.
///
/// Construction from external data validates that every entry is finite.
/// Operations treat matrices as values; nothing here mutates its inputs.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const double> entries() const noexcept { return entries_; }
    std::span<double> entries() noexcept { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Dense real vector; finite entries enforced on construction from data.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : entries_(n, 0.0) {}
    Vector(std::vector<double> entries);
    Vector(std::initializer_list<double> entries);

    static Vector ones(std::size_t n);

    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double& operator[](std::size_t i) { return entries_[i]; }

    std::span<const double> entries() const noexcept { return entries_; }
    std::span<double> entries() noexcept { return entries_; }

private:
    std::vector<double> entries_;
};

/// Splitting A = D - L - U with D diagonal and L, U holding the *negated*
/// strictly lower/upper parts of A. With this sign convention L and U are
/// nonnegative exactly when A is a Z-matrix. split() only copies and negates
/// entries, so D - L - U reconstructs A bitwise.
struct SplittingTriple {
    DenseMatrix D;
    DenseMatrix L;
    DenseMatrix U;
};

SplittingTriple split(const DenseMatrix& A);

/// Reassembles D - L - U.
DenseMatrix reconstruct(const SplittingTriple& s);

/// Kronecker product; (A (x) B)[i*p+k, j*q+l] = A(i,j) * B(k,l) for B p-by-q.
DenseMatrix kron(const DenseMatrix& A, const DenseMatrix& B);

/// n-by-n matrix with constant sub-, main and super-diagonals.
DenseMatrix tridiag(std::size_t n, double sub, double diag, double sup);

/// LU factorization with partial pivoting, stored packed. A pivot whose
/// magnitude falls below 1e-14 times the largest initial entry is treated
/// as singular.
struct LuFactors {
    DenseMatrix lu;
    std::vector<std::size_t> perm;
};

LuFactors lu_factor(const DenseMatrix& A);
Vector lu_solve(const LuFactors& factors, const Vector& b);
Vector lu_solve(const DenseMatrix& A, const Vector& b);

/// Forward substitution with M lower triangular (strict upper part ignored).
Vector lower_triangular_solve(const DenseMatrix& M, const Vector& b);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);
Vector operator*(const DenseMatrix& a, const Vector& x);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
double norm_inf(const Vector& v);

/// Largest absolute entry.
double max_abs(const DenseMatrix& a);
/// Largest absolute entrywise difference; shapes must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
/// Maximum absolute row sum.
double norm_inf(const DenseMatrix& a);

}  // namespace paor
