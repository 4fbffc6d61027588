#include "paor/gmres.hpp"

#include <cmath>
#include <vector>

namespace paor {

LinearOperator make_operator(const DenseMatrix& A) {
    if (!A.square()) throw DimensionError("make_operator: matrix must be square");
    return LinearOperator(A.rows(), [A](const Vector& x) { return A * x; });
}

LinearOperator identity_operator(std::size_t n) {
    return LinearOperator(n, [](const Vector& x) { return x; });
}

SolveReport gmres_restarted(const LinearOperator& A_op, const LinearOperator& P_op,
                            const Vector& b, std::size_t m, double tol,
                            std::size_t max_total_iter) {
    const std::size_t n = b.size();
    if (A_op.size() != n || P_op.size() != n) {
        throw DimensionError("gmres_restarted: operator/vector size mismatch");
    }
    if (m < 1) throw ParameterError("gmres_restarted: restart length must be at least 1");
    if (!(tol > 0.0)) throw ParameterError("gmres_restarted: tol must be positive");
    const double bnorm = norm2(b);
    if (bnorm == 0.0) throw ParameterError("gmres_restarted: right-hand side must be nonzero");

    const double pbnorm = norm2(P_op(b));

    SolveReport report;
    Vector x(n);  // initial guess zero
    std::vector<Vector> V(m + 1, Vector(n));
    std::vector<std::vector<double>> H(m + 1, std::vector<double>(m, 0.0));
    std::vector<double> cs(m, 0.0), sn(m, 0.0), g(m + 1, 0.0);

    const auto true_relative_residual = [&](const Vector& xc) {
        const Vector ax = A_op(xc);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = b[i] - ax[i];
            s += r * r;
        }
        return std::sqrt(s) / bnorm;
    };

    double relres = true_relative_residual(x);
    report.residual_history.push_back(relres);
    if (relres <= tol) {
        report.converged = true;
        report.final_relative_residual = relres;
        return report;
    }

    bool first_cycle = true;
    while (report.iterations < max_total_iter) {
        if (!first_cycle) ++report.restarts;
        first_cycle = false;

        // r = P (b - A x)
        Vector r = A_op(x);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
        r = P_op(r);
        const double beta = norm2(r);
        if (beta == 0.0) break;  // preconditioned residual exactly zero

        for (std::size_t i = 0; i < n; ++i) V[0][i] = r[i] / beta;
        for (auto& col : H) std::fill(col.begin(), col.end(), 0.0);
        std::fill(g.begin(), g.end(), 0.0);
        g[0] = beta;

        std::size_t steps = 0;
        bool breakdown = false;
        for (std::size_t j = 0; j < m && report.iterations < max_total_iter; ++j) {
            Vector w = P_op(A_op(V[j]));
            for (std::size_t i = 0; i <= j; ++i) {
                const double hij = dot(V[i], w);
                H[i][j] = hij;
                for (std::size_t k = 0; k < n; ++k) w[k] -= hij * V[i][k];
            }
            const double hnext = norm2(w);
            H[j + 1][j] = hnext;
            breakdown = hnext <= 1e-14 * beta;
            if (!breakdown) {
                for (std::size_t k = 0; k < n; ++k) V[j + 1][k] = w[k] / hnext;
            }

            for (std::size_t i = 0; i < j; ++i) {
                const double t = cs[i] * H[i][j] + sn[i] * H[i + 1][j];
                H[i + 1][j] = -sn[i] * H[i][j] + cs[i] * H[i + 1][j];
                H[i][j] = t;
            }
            const double d = std::hypot(H[j][j], H[j + 1][j]);
            cs[j] = H[j][j] / d;
            sn[j] = H[j + 1][j] / d;
            H[j][j] = d;
            H[j + 1][j] = 0.0;
            g[j + 1] = -sn[j] * g[j];
            g[j] = cs[j] * g[j];

            ++report.iterations;
            ++steps;
            report.estimate_history.push_back(std::abs(g[j + 1]) / pbnorm);
            if (breakdown) break;
        }

        // Least-squares solve for the cycle and solution update.
        std::vector<double> y(steps, 0.0);
        for (std::size_t i = steps; i-- > 0;) {
            double s = g[i];
            for (std::size_t k = i + 1; k < steps; ++k) s -= H[i][k] * y[k];
            y[i] = s / H[i][i];
        }
        for (std::size_t i = 0; i < steps; ++i) {
            for (std::size_t k = 0; k < n; ++k) x[k] += y[i] * V[i][k];
        }

        relres = true_relative_residual(x);
        report.residual_history.push_back(relres);
        if (relres <= tol) {
            report.converged = true;
            break;
        }
        if (breakdown) break;  // basis exhausted but the true residual disagrees
    }

    report.final_relative_residual = relres;
    return report;
}

}  // namespace paor
