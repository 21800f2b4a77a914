#pragma once

#include "jflc/kmeans.hpp"
#include "jflc/matrix.hpp"

namespace jflc {

/// Per-cluster affine subspace: mean, orthonormal basis and member coordinates.
struct SubspaceModel {
    std::vector<Vector> means;   // K vectors of length F
    std::vector<Matrix> bases;   // K matrices F x r_k with orthonormal columns
    std::vector<Matrix> coords;  // K matrices r_k x |cluster k|, member columns in ascending index order
    std::vector<int> ranks;
};

/// Fits each cluster by centering and truncated SVD. Requires every cluster to
/// have at least r_k + 1 members; otherwise throws naming the offending cluster.
SubspaceModel ksubspace_fit(const Matrix& H, const Labels& labels, const std::vector<int>& ranks);

/// Point-to-subspace distance ||(I - U_k U_k^T)(h - mu_k)||_2.
double ksubspace_distance(const Matrix& H, Eigen::Index j, const SubspaceModel& model, int k);

/// Nearest-subspace assignment; ties go to the smallest index.
Labels ksubspace_assign(const Matrix& H, const SubspaceModel& model);

/// Sum of squared point-to-subspace distances under the given assignment.
double ksubspace_cost(const Matrix& H, const Labels& labels, const SubspaceModel& model);

} // namespace jflc
