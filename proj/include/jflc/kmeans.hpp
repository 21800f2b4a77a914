#pragma once

#include "jflc/matrix.hpp"
#include "jflc/rng.hpp"

namespace jflc {

/// Cluster labels, one per data column, values in [0, K). The dense binary
/// assignment matrix S (one-hot columns) is derivable via assignment_matrix().
using Labels = std::vector<int>;

Matrix assignment_matrix(const Labels& labels, int K);

/// Nearest-centroid assignment; ties go to the smallest index.
Labels kmeans_assign(const Matrix& H, const Matrix& M);

/// Per-cluster means. An empty cluster is reseeded at the point farthest from
/// its currently assigned centroid (each reseed consumes a distinct point).
Matrix kmeans_centroids(const Matrix& H, const Labels& labels, int K);

double kmeans_cost(const Matrix& H, const Matrix& M, const Labels& labels);

struct KmeansResult {
    Matrix centroids;
    Labels labels;
    double cost = 0.0;
    int iterations = 0;
};

/// Lloyd iterations from k-means++ seeding (seeded by rng). Stops when labels
/// stop changing or after max_iters sweeps.
KmeansResult kmeans_lloyd(const Matrix& H, int K, Rng& rng, int max_iters = 100);

/// Lloyd iterations warm-started from the given centroids.
KmeansResult kmeans_lloyd_from(const Matrix& H, const Matrix& M0, int max_iters = 100);

/// k-means++ seeding only.
Matrix kmeans_pp_init(const Matrix& H, int K, Rng& rng);

} // namespace jflc
