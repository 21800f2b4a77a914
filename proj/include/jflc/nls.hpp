#pragma once

#include "jflc/matrix.hpp"

namespace jflc {

struct NlsOptions {
    double tol = 1e-8;     // relative projected-gradient target, also ADMM residual scale
    int max_iters = 300;   // inner ADMM iterations
    double l1 = 0.0;       // optional l1 weight on the solution (entries are >= 0)
    const Matrix* warm_start = nullptr;
};

struct NlsResult {
    Matrix H;
    bool converged = true;
    int iterations = 0;
    double kkt_residual = 0.0;
};

/// min_{H>=0} ||G*H - Y||_F^2 (+ l1 * sum(H)), solved by scaled-form ADMM with
/// penalty rho = trace(G^T G)/n. Ridge or coupling terms are encoded by the
/// caller through row-stacking of G and Y. Returns the feasible splitting
/// iterate; if the ADMM residuals have not met tol within max_iters the result
/// carries converged=false.
NlsResult nls_solve(const Matrix& G, const Matrix& Y, const NlsOptions& opts = {});

/// min ||G*H - Y||_F^2 subject to each column of H on the unit simplex
/// (H >= 0, 1^T H = 1^T). Same ADMM scheme with a sort-based Euclidean
/// simplex projection in the splitting step.
NlsResult simplex_ls_solve(const Matrix& G, const Matrix& Y, const NlsOptions& opts = {});

/// Euclidean projection of v onto {x >= 0, sum(x) = 1}.
Vector simplex_project(const Vector& v);

/// Pairwise-distance volume regularizer matrix G = F*I - 11^T (F x F).
Matrix volume_reg_matrix(int F);

/// Closed-form minimizer of ||X - W*H||_F^2 + beta * Tr(W * G * W^T) with
/// G = F*I - 11^T:  W = X H^T (H H^T + beta G)^{-1}. Cholesky with a
/// 1e-12*trace jitter retry; throws a numerical error if still singular.
Matrix ridge_volmin_w(const Matrix& X, const Matrix& H, double beta);

/// Cholesky solve of A*X = B for symmetric positive semi-definite A, with a
/// jitter retry on the diagonal. Shared by the solvers.
Matrix chol_solve(const Matrix& A, const Matrix& B);

} // namespace jflc
