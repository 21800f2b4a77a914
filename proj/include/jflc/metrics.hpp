#pragma once

#include "jflc/matrix.hpp"

namespace jflc {

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian, O(n^3)).
/// Returns col index assigned to each row.
std::vector<int> hungarian(const Matrix& cost);

/// Fraction of points whose labels match under the best bijection between the
/// two label alphabets. Invariant to any relabeling of either argument; label
/// values may be arbitrary integers.
double clustering_accuracy(const std::vector<int>& truth, const std::vector<int>& pred);

/// Permutation-, sign- and scale-matched column MSE:
///   min over permutations pi and signs c_f of
///   (1/F) sum_f || W(:,f)/||W(:,f)|| - c_f What(:,pi_f)/||What(:,pi_f)|| ||^2.
/// A zero column cannot be normalized; it is replaced by a unit basis vector
/// and reported via had_zero_column when the pointer is given.
double matched_mse(const Matrix& W_true, const Matrix& W_est, bool* had_zero_column = nullptr);

/// 10*log10 of the linear MSE, floored at -120 dB.
double mse_to_db(double mse_linear);

/// Largest k such that every k-column subset is linearly independent
/// (singular-value test at relative tolerance 1e-9). Brute-force subset
/// enumeration; restricted to at most 8 columns.
int kruskal_rank(const Matrix& A);

} // namespace jflc
