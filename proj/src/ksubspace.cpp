#include "jflc/ksubspace.hpp"

#include <Eigen/SVD>
#include <string>

namespace jflc {

SubspaceModel ksubspace_fit(const Matrix& H, const Labels& labels, const std::vector<int>& ranks) {
    const int K = static_cast<int>(ranks.size());
    const Eigen::Index F = H.rows();
    SubspaceModel model;
    model.ranks = ranks;
    model.means.resize(static_cast<std::size_t>(K));
    model.bases.resize(static_cast<std::size_t>(K));
    model.coords.resize(static_cast<std::size_t>(K));

    for (int k = 0; k < K; ++k) {
        const int r = ranks[static_cast<std::size_t>(k)];
        if (r < 0 || r > F) fail_argument("ksubspace_fit: rank exceeds ambient dimension");
        std::vector<Eigen::Index> members;
        for (Eigen::Index j = 0; j < H.cols(); ++j)
            if (labels[static_cast<std::size_t>(j)] == k) members.push_back(j);
        if (static_cast<int>(members.size()) < r + 1)
            fail_argument("ksubspace_fit: cluster " + std::to_string(k) + " has " +
                          std::to_string(members.size()) + " members, needs at least " +
                          std::to_string(r + 1));
        Matrix Hk(F, static_cast<Eigen::Index>(members.size()));
        for (std::size_t c = 0; c < members.size(); ++c) Hk.col(static_cast<Eigen::Index>(c)) = H.col(members[c]);
        Vector mu = Hk.rowwise().mean();
        Matrix centered = Hk.colwise() - mu;
        Eigen::JacobiSVD<Matrix> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
        model.means[static_cast<std::size_t>(k)] = std::move(mu);
        model.bases[static_cast<std::size_t>(k)] = svd.matrixU().leftCols(r);
        model.coords[static_cast<std::size_t>(k)] =
            svd.singularValues().head(r).asDiagonal() * svd.matrixV().leftCols(r).transpose();
    }
    return model;
}

double ksubspace_distance(const Matrix& H, Eigen::Index j, const SubspaceModel& model, int k) {
    const Vector diff = H.col(j) - model.means[static_cast<std::size_t>(k)];
    const Matrix& U = model.bases[static_cast<std::size_t>(k)];
    return (diff - U * (U.transpose() * diff)).norm();
}

Labels ksubspace_assign(const Matrix& H, const SubspaceModel& model) {
    const int K = static_cast<int>(model.ranks.size());
    Labels labels(static_cast<std::size_t>(H.cols()));
    for (Eigen::Index j = 0; j < H.cols(); ++j) {
        int best = 0;
        double best_d = ksubspace_distance(H, j, model, 0);
        for (int k = 1; k < K; ++k) {
            const double d = ksubspace_distance(H, j, model, k);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        labels[static_cast<std::size_t>(j)] = best;
    }
    return labels;
}

double ksubspace_cost(const Matrix& H, const Labels& labels, const SubspaceModel& model) {
    double c = 0.0;
    for (Eigen::Index j = 0; j < H.cols(); ++j) {
        const double d = ksubspace_distance(H, j, model, labels[static_cast<std::size_t>(j)]);
        c += d * d;
    }
    return c;
}

} // namespace jflc
