#include "jflc/nls.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <string>

namespace jflc {

namespace {

/// Projected gradient norm of the NLS objective at a feasible point, relative
/// to the gradient scale. Entries at the boundary only count when the gradient
/// pushes outward.
double kkt_residual_nls(const Matrix& G, const Matrix& Y, const Matrix& H, double l1) {
    const Matrix grad = 2.0 * (G.transpose() * (G * H - Y)).array() + l1;
    double sq = 0.0;
    for (Eigen::Index j = 0; j < H.cols(); ++j)
        for (Eigen::Index i = 0; i < H.rows(); ++i) {
            const double g = grad(i, j);
            const double pg = H(i, j) > 0.0 ? g : std::min(0.0, g);
            sq += pg * pg;
        }
    const double scale = std::max(1.0, 2.0 * (G.transpose() * Y).norm());
    return std::sqrt(sq) / scale;
}

enum class Constraint { nonneg, simplex };

NlsResult admm_ls(const Matrix& G, const Matrix& Y, const NlsOptions& opts, Constraint con) {
    if (!G.allFinite() || !Y.allFinite())
        fail_argument("nls_solve: non-finite input");
    if (G.rows() != Y.rows())
        fail_dimension("nls_solve: G and Y row counts differ");
    const Eigen::Index n = G.cols(), p = Y.cols();

    const Matrix gram = G.transpose() * G;
    double rho = gram.trace() / static_cast<double>(n);
    if (!(rho > 0.0)) rho = 1.0;

    Matrix A = 2.0 * gram;
    A.diagonal().array() += rho;
    Eigen::LLT<Matrix> llt(A);
    if (llt.info() != Eigen::Success) {
        A.diagonal().array() += 1e-12 * A.trace();
        llt.compute(A);
        if (llt.info() != Eigen::Success)
            fail_numerical("nls_solve: normal matrix factorization failed");
    }
    const Matrix B0 = 2.0 * G.transpose() * Y;

    Matrix Z(n, p);
    if (opts.warm_start && opts.warm_start->rows() == n && opts.warm_start->cols() == p) {
        Z = *opts.warm_start;
        if (con == Constraint::nonneg) {
            Z = Z.cwiseMax(0.0);
        } else {
            for (Eigen::Index j = 0; j < p; ++j) Z.col(j) = simplex_project(Z.col(j));
        }
    } else {
        Z.setZero();
        if (con == Constraint::simplex) Z.array() = 1.0 / static_cast<double>(n);
    }
    Matrix U = Matrix::Zero(n, p);
    Matrix H(n, p), Zprev(n, p);

    NlsResult res;
    res.converged = false;
    int it = 0;
    for (; it < opts.max_iters; ++it) {
        H = llt.solve(B0 + rho * (Z - U));
        Zprev = Z;
        if (con == Constraint::nonneg) {
            Z = (H + U).array() - opts.l1 / rho;
            Z = Z.cwiseMax(0.0);
        } else {
            const Matrix V = H + U;
            for (Eigen::Index j = 0; j < p; ++j) Z.col(j) = simplex_project(V.col(j));
        }
        U += H - Z;
        const double r_primal = (H - Z).norm();
        const double r_dual = rho * (Z - Zprev).norm();
        const double scale = std::max(1.0, Z.norm());
        if (r_primal + r_dual < opts.tol * scale) {
            res.converged = true;
            ++it;
            break;
        }
    }

    res.iterations = it;
    if (con == Constraint::nonneg) {
        // Never hand back something worse than the trivial feasible point.
        const double obj = (G * Z - Y).squaredNorm() + opts.l1 * Z.sum();
        const double obj_zero = Y.squaredNorm();
        if (obj > obj_zero) Z.setZero();
        res.kkt_residual = kkt_residual_nls(G, Y, Z, opts.l1);
        if (res.converged && res.kkt_residual > std::max(opts.tol, 1e-6))
            res.converged = false;
    } else {
        res.kkt_residual = 0.0;
    }
    res.H = std::move(Z);
    return res;
}

} // namespace

NlsResult nls_solve(const Matrix& G, const Matrix& Y, const NlsOptions& opts) {
    return admm_ls(G, Y, opts, Constraint::nonneg);
}

NlsResult simplex_ls_solve(const Matrix& G, const Matrix& Y, const NlsOptions& opts) {
    return admm_ls(G, Y, opts, Constraint::simplex);
}

Vector simplex_project(const Vector& v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double running = 0.0;
    double theta = 0.0;
    int support = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        running += u[k];
        const double t = (running - 1.0) / static_cast<double>(k + 1);
        if (u[k] - t > 0.0) {
            theta = t;
            support = static_cast<int>(k) + 1;
        }
    }
    (void)support;
    Vector out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = std::max(v[i] - theta, 0.0);
    return out;
}

Matrix volume_reg_matrix(int F) {
    Matrix G = Matrix::Constant(F, F, -1.0);
    G.diagonal().array() += static_cast<double>(F);
    return G;
}

Matrix ridge_volmin_w(const Matrix& X, const Matrix& H, double beta) {
    if (X.cols() != H.cols())
        fail_dimension("ridge_volmin_w: X and H column counts differ");
    if (beta < 0.0) fail_argument("ridge_volmin_w: beta must be >= 0");
    const int F = static_cast<int>(H.rows());
    Matrix A = H * H.transpose() + beta * volume_reg_matrix(F);
    const Matrix B = H * X.transpose(); // solves A * W^T = H X^T
    return chol_solve(A, B).transpose();
}

Matrix chol_solve(const Matrix& A, const Matrix& B) {
    Eigen::LLT<Matrix> llt(A);
    if (llt.info() == Eigen::Success) return llt.solve(B);
    Matrix Aj = A;
    double jitter = 1e-12 * std::max(A.trace(), 1.0);
    Aj.diagonal().array() += jitter;
    llt.compute(Aj);
    if (llt.info() == Eigen::Success) return llt.solve(B);
    fail_numerical("chol_solve: matrix is singular even after diagonal jitter");
}

} // namespace jflc
