#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hb {

inline constexpr int kMaxMatrixSize = 5;

/// Small dense matrix with a compile-time capacity of 5×5, so nothing
/// inside the sampling loops touches the heap.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxMatrixSize, kMaxMatrixSize>;

/// Invertible real square matrix with cached determinant.
class GroupMatrix {
public:
    /// Throws SingularMatrixError when |det| ≤ 1e-12·‖m‖_F^n.
    explicit GroupMatrix(const Mat& m);

    static GroupMatrix identity(int n);
    static GroupMatrix diagonal(const std::vector<double>& d);

    int size() const { return static_cast<int>(m_.rows()); }
    const Mat& entries() const { return m_; }
    double det() const { return det_; }
    double operator()(int i, int j) const { return m_(i, j); }

    /// Partial-pivot LU inverse; prints a warning to stderr when the
    /// 1-norm condition number exceeds 1e12.
    GroupMatrix inverse() const;
    double condition_number() const;
    bool is_orthogonal(double tol = 1e-12) const;
    double trace_gram() const { return m_.squaredNorm(); }  // Tr(gᵀg)

private:
    Mat m_;
    double det_;
};

GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b);

/// "id", "diag:a,b,...", or row-major "m:a,b,c,d,...". The spec must
/// describe an n×n matrix with n = size.
GroupMatrix parse_matrix_spec(const std::string& spec, int size);

/// Whitespace-separated row-major entries.
GroupMatrix read_matrix_file(const std::string& path, int size);

}  // namespace hb
