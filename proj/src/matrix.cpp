#include "jflc/matrix.hpp"

#include <cmath>
#include <string>

namespace jflc {

void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite())
        fail_argument(std::string(name) + " contains non-finite values");
}

Tensor3::Tensor3(int I, int J, int L, double fill) : I_(I), J_(J), L_(L) {
    if (I < 1 || J < 1 || L < 1)
        fail_argument("Tensor3 dimensions must be positive");
    data_.assign(static_cast<std::size_t>(I) * J * L, fill);
}

double Tensor3::squared_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return s;
}

Matrix khatri_rao(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.cols())
        fail_dimension("khatri_rao: column counts differ (" + std::to_string(A.cols()) + " vs " +
                       std::to_string(B.cols()) + ")");
    const Eigen::Index I = A.rows(), J = B.rows(), F = A.cols();
    Matrix out(I * J, F);
    for (Eigen::Index f = 0; f < F; ++f)
        for (Eigen::Index i = 0; i < I; ++i)
            out.col(f).segment(i * J, J) = A(i, f) * B.col(f);
    return out;
}

Matrix unfold(const Tensor3& T, int mode) {
    const int I = T.dim1(), J = T.dim2(), L = T.dim3();
    Matrix out;
    switch (mode) {
        case 1:
            out.resize(static_cast<Eigen::Index>(J) * L, I);
            for (int i = 0; i < I; ++i)
                for (int l = 0; l < L; ++l)
                    for (int j = 0; j < J; ++j)
                        out(j + static_cast<Eigen::Index>(J) * l, i) = T(i, j, l);
            break;
        case 2:
            out.resize(static_cast<Eigen::Index>(I) * L, J);
            for (int j = 0; j < J; ++j)
                for (int l = 0; l < L; ++l)
                    for (int i = 0; i < I; ++i)
                        out(i + static_cast<Eigen::Index>(I) * l, j) = T(i, j, l);
            break;
        case 3:
            out.resize(static_cast<Eigen::Index>(I) * J, L);
            for (int l = 0; l < L; ++l)
                for (int j = 0; j < J; ++j)
                    for (int i = 0; i < I; ++i)
                        out(i + static_cast<Eigen::Index>(I) * j, l) = T(i, j, l);
            break;
        default:
            fail_argument("unfold: mode must be 1, 2 or 3");
    }
    return out;
}

Tensor3 refold(const Matrix& M, int mode, int I, int J, int L) {
    Tensor3 T(I, J, L);
    auto check = [&](Eigen::Index rows, Eigen::Index cols) {
        if (M.rows() != rows || M.cols() != cols)
            fail_dimension("refold: matrix shape does not match target dimensions");
    };
    switch (mode) {
        case 1:
            check(static_cast<Eigen::Index>(J) * L, I);
            for (int i = 0; i < I; ++i)
                for (int l = 0; l < L; ++l)
                    for (int j = 0; j < J; ++j)
                        T(i, j, l) = M(j + static_cast<Eigen::Index>(J) * l, i);
            break;
        case 2:
            check(static_cast<Eigen::Index>(I) * L, J);
            for (int j = 0; j < J; ++j)
                for (int l = 0; l < L; ++l)
                    for (int i = 0; i < I; ++i)
                        T(i, j, l) = M(i + static_cast<Eigen::Index>(I) * l, j);
            break;
        case 3:
            check(static_cast<Eigen::Index>(I) * J, L);
            for (int l = 0; l < L; ++l)
                for (int j = 0; j < J; ++j)
                    for (int i = 0; i < I; ++i)
                        T(i, j, l) = M(i + static_cast<Eigen::Index>(I) * j, l);
            break;
        default:
            fail_argument("refold: mode must be 1, 2 or 3");
    }
    return T;
}

Tensor3 tensor_from_factors(const Matrix& A, const Matrix& B, const Matrix& C) {
    if (A.cols() != B.cols() || B.cols() != C.cols())
        fail_dimension("tensor_from_factors: factor column counts differ");
    const int I = static_cast<int>(A.rows());
    const int J = static_cast<int>(B.rows());
    const int L = static_cast<int>(C.rows());
    Tensor3 T(I, J, L);
    for (int l = 0; l < L; ++l)
        for (int j = 0; j < J; ++j)
            for (int i = 0; i < I; ++i) {
                double v = 0.0;
                for (Eigen::Index f = 0; f < A.cols(); ++f) v += A(i, f) * B(j, f) * C(l, f);
                T(i, j, l) = v;
            }
    return T;
}

} // namespace jflc
