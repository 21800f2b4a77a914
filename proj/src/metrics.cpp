#include "jflc/metrics.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace jflc {

std::vector<int> hungarian(const Matrix& cost) {
    if (cost.rows() != cost.cols()) fail_dimension("hungarian: cost matrix must be square");
    const int n = static_cast<int>(cost.rows());
    const double INF = std::numeric_limits<double>::infinity();
    // Potentials formulation with 1-based sentinel column 0.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, INF);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = INF;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

double clustering_accuracy(const std::vector<int>& truth, const std::vector<int>& pred) {
    if (truth.size() != pred.size())
        fail_dimension("clustering_accuracy: label vectors have different lengths");
    if (truth.empty()) fail_argument("clustering_accuracy: empty label vectors");

    auto compact = [](const std::vector<int>& labels) {
        std::map<int, int> ids;
        std::vector<int> out(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            auto [it, inserted] = ids.emplace(labels[i], static_cast<int>(ids.size()));
            out[i] = it->second;
        }
        return std::pair{out, static_cast<int>(ids.size())};
    };
    auto [t, kt] = compact(truth);
    auto [q, kq] = compact(pred);
    const int n = std::max(kt, kq);

    Matrix counts = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < t.size(); ++i) counts(t[i], q[i]) += 1.0;
    // Maximize matches == minimize (max - counts).
    const Matrix cost = Matrix::Constant(n, n, counts.maxCoeff()) - counts;
    const std::vector<int> match = hungarian(cost);
    double hits = 0.0;
    for (int r = 0; r < n; ++r) hits += counts(r, match[static_cast<std::size_t>(r)]);
    return hits / static_cast<double>(t.size());
}

double matched_mse(const Matrix& W_true, const Matrix& W_est, bool* had_zero_column) {
    if (W_true.rows() != W_est.rows() || W_true.cols() != W_est.cols())
        fail_dimension("matched_mse: factor shapes differ");
    const Eigen::Index F = W_true.cols();
    bool zero_col = false;
    auto normalized = [&](const Matrix& W, Eigen::Index f) {
        Vector c = W.col(f);
        const double nrm = c.norm();
        if (nrm <= 0.0) {
            zero_col = true;
            c.setZero();
            c[0] = 1.0;
            return c;
        }
        return Vector(c / nrm);
    };
    Matrix A(W_true.rows(), F), B(W_true.rows(), F);
    for (Eigen::Index f = 0; f < F; ++f) {
        A.col(f) = normalized(W_true, f);
        B.col(f) = normalized(W_est, f);
    }
    if (had_zero_column) *had_zero_column = zero_col;

    // Entry (f,g): best-sign distance 2 - 2*|a_f . b_g|.
    Matrix cost(F, F);
    for (Eigen::Index f = 0; f < F; ++f)
        for (Eigen::Index g = 0; g < F; ++g)
            cost(f, g) = 2.0 - 2.0 * std::abs(A.col(f).dot(B.col(g)));
    const std::vector<int> match = hungarian(cost);
    double total = 0.0;
    for (Eigen::Index f = 0; f < F; ++f) total += cost(f, match[static_cast<std::size_t>(f)]);
    return std::max(total / static_cast<double>(F), 0.0);
}

double mse_to_db(double mse_linear) {
    if (!(mse_linear > 0.0)) return -120.0;
    return std::max(10.0 * std::log10(mse_linear), -120.0);
}

int kruskal_rank(const Matrix& A) {
    const int n = static_cast<int>(A.cols());
    if (n > 8) fail_argument("kruskal_rank: more than 8 columns is out of scope");
    if (n == 0) return 0;

    auto subset_full_rank = [&](const std::vector<int>& idx) {
        Matrix S(A.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t c = 0; c < idx.size(); ++c) S.col(static_cast<Eigen::Index>(c)) = A.col(idx[c]);
        Eigen::JacobiSVD<Matrix> svd(S);
        const auto& sv = svd.singularValues();
        if (sv.size() < static_cast<Eigen::Index>(idx.size())) return false;
        return sv(sv.size() - 1) > 1e-9 * std::max(sv(0), 1e-300);
    };

    int k = 0;
    for (int size = 1; size <= std::min<int>(n, static_cast<int>(A.rows())); ++size) {
        // Iterate all size-subsets of {0..n-1}.
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        bool all_independent = true;
        while (true) {
            if (!subset_full_rank(idx)) {
                all_independent = false;
                break;
            }
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < size; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
        if (!all_independent) break;
        k = size;
    }
    return k;
}

} // namespace jflc
