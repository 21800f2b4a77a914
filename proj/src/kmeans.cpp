#include "jflc/kmeans.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace jflc {

Matrix assignment_matrix(const Labels& labels, int K) {
    Matrix S = Matrix::Zero(K, static_cast<Eigen::Index>(labels.size()));
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] < 0 || labels[j] >= K)
            fail_argument("assignment_matrix: label out of range");
        S(labels[j], static_cast<Eigen::Index>(j)) = 1.0;
    }
    return S;
}

Labels kmeans_assign(const Matrix& H, const Matrix& M) {
    if (H.rows() != M.rows())
        fail_dimension("kmeans_assign: dimension mismatch between points and centroids");
    const Eigen::Index J = H.cols(), K = M.cols();
    Labels labels(static_cast<std::size_t>(J));
    for (Eigen::Index j = 0; j < J; ++j) {
        int best = 0;
        double best_d = (H.col(j) - M.col(0)).squaredNorm();
        for (Eigen::Index k = 1; k < K; ++k) {
            const double d = (H.col(j) - M.col(k)).squaredNorm();
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(k);
            }
        }
        labels[static_cast<std::size_t>(j)] = best;
    }
    return labels;
}

Matrix kmeans_centroids(const Matrix& H, const Labels& labels, int K) {
    const Eigen::Index J = H.cols();
    if (static_cast<Eigen::Index>(labels.size()) != J)
        fail_dimension("kmeans_centroids: label count does not match columns");
    Matrix M = Matrix::Zero(H.rows(), K);
    std::vector<int> counts(static_cast<std::size_t>(K), 0);
    for (Eigen::Index j = 0; j < J; ++j) {
        M.col(labels[static_cast<std::size_t>(j)]) += H.col(j);
        ++counts[static_cast<std::size_t>(labels[j])];
    }
    std::vector<char> used(static_cast<std::size_t>(J), 0);
    for (int k = 0; k < K; ++k) {
        if (counts[static_cast<std::size_t>(k)] > 0) {
            M.col(k) /= static_cast<double>(counts[static_cast<std::size_t>(k)]);
        }
    }
    for (int k = 0; k < K; ++k) {
        if (counts[static_cast<std::size_t>(k)] > 0) continue;
        // Reseed at the point farthest from its own centroid.
        int far_j = -1;
        double far_d = -1.0;
        for (Eigen::Index j = 0; j < J; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const int kj = labels[static_cast<std::size_t>(j)];
            if (counts[static_cast<std::size_t>(kj)] == 0) continue;
            const double d = (H.col(j) - M.col(kj)).squaredNorm();
            if (d > far_d) {
                far_d = d;
                far_j = static_cast<int>(j);
            }
        }
        if (far_j >= 0) {
            M.col(k) = H.col(far_j);
            used[static_cast<std::size_t>(far_j)] = 1;
        }
    }
    return M;
}

double kmeans_cost(const Matrix& H, const Matrix& M, const Labels& labels) {
    double c = 0.0;
    for (Eigen::Index j = 0; j < H.cols(); ++j)
        c += (H.col(j) - M.col(labels[static_cast<std::size_t>(j)])).squaredNorm();
    return c;
}

Matrix kmeans_pp_init(const Matrix& H, int K, Rng& rng) {
    const Eigen::Index J = H.cols();
    Matrix M(H.rows(), K);
    M.col(0) = H.col(rng.uniform_int(static_cast<int>(J)));
    Vector d2(J);
    for (Eigen::Index j = 0; j < J; ++j) d2[j] = (H.col(j) - M.col(0)).squaredNorm();
    for (int k = 1; k < K; ++k) {
        const double total = d2.sum();
        Eigen::Index pick = 0;
        if (total > 0.0) {
            double r = rng.uniform() * total;
            for (Eigen::Index j = 0; j < J; ++j) {
                r -= d2[j];
                if (r <= 0.0) {
                    pick = j;
                    break;
                }
                pick = j;
            }
        } else {
            pick = rng.uniform_int(static_cast<int>(J));
        }
        M.col(k) = H.col(pick);
        for (Eigen::Index j = 0; j < J; ++j)
            d2[j] = std::min(d2[j], (H.col(j) - M.col(k)).squaredNorm());
    }
    return M;
}

KmeansResult kmeans_lloyd_from(const Matrix& H, const Matrix& M0, int max_iters) {
    KmeansResult res;
    res.centroids = M0;
    res.labels = kmeans_assign(H, res.centroids);
    int it = 0;
    for (; it < max_iters; ++it) {
        res.centroids = kmeans_centroids(H, res.labels, static_cast<int>(M0.cols()));
        Labels next = kmeans_assign(H, res.centroids);
        const bool stable = next == res.labels;
        res.labels = std::move(next);
        if (stable) {
            ++it;
            break;
        }
    }
    res.iterations = it;
    res.cost = kmeans_cost(H, res.centroids, res.labels);
    return res;
}

KmeansResult kmeans_lloyd(const Matrix& H, int K, Rng& rng, int max_iters) {
    if (K < 1) fail_argument("kmeans_lloyd: K must be >= 1");
    if (H.cols() < K)
        fail_argument("kmeans_lloyd: fewer points than clusters (J=" + std::to_string(H.cols()) +
                      ", K=" + std::to_string(K) + ")");
    return kmeans_lloyd_from(H, kmeans_pp_init(H, K, rng), max_iters);
}

} // namespace jflc
