#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jflc/common.hpp"

namespace jflc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Throws if any entry is non-finite.
void require_finite(const Matrix& m, const char* name);

/// Dense three-way array. Element (i,j,l) is stored at data[i + I*(j + J*l)],
/// i.e. the first index varies fastest; the same convention is used by the
/// unfoldings below so the Khatri-Rao identities hold literally.
class Tensor3 {
  public:
    Tensor3() : I_(0), J_(0), L_(0) {}
    Tensor3(int I, int J, int L, double fill = 0.0);

    int dim1() const { return I_; }
    int dim2() const { return J_; }
    int dim3() const { return L_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(int i, int j, int l) { return data_[idx(i, j, l)]; }
    double operator()(int i, int j, int l) const { return data_[idx(i, j, l)]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double squared_norm() const;

  private:
    std::size_t idx(int i, int j, int l) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(I_) * (static_cast<std::size_t>(j) +
                                               static_cast<std::size_t>(J_) * static_cast<std::size_t>(l));
    }

    int I_, J_, L_;
    std::vector<double> data_;
};

/// Column-wise Kronecker product: column f of the result is kron(A(:,f), B(:,f)).
Matrix khatri_rao(const Matrix& A, const Matrix& B);

/// Matrix unfoldings of a three-way tensor. With first-index-fastest vec():
///   mode 1: (J*L) x I,  column i is vec(T(i,:,:))
///   mode 2: (I*L) x J,  column j is vec(T(:,j,:))
///   mode 3: (I*J) x L,  column l is vec(T(:,:,l))
/// For a rank-F tensor with factors A (IxF), B (JxF), C (LxF):
///   unfold(T,1) = khatri_rao(C,B) * A^T
///   unfold(T,2) = khatri_rao(C,A) * B^T
///   unfold(T,3) = khatri_rao(B,A) * C^T
Matrix unfold(const Tensor3& T, int mode);

/// Inverse of unfold for the given mode and target dimensions.
Tensor3 refold(const Matrix& M, int mode, int I, int J, int L);

/// Builds the rank-F tensor with T(i,j,l) = sum_f A(i,f) B(j,f) C(l,f).
Tensor3 tensor_from_factors(const Matrix& A, const Matrix& B, const Matrix& C);

} // namespace jflc
