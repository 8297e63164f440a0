#pragma once

#include <Eigen/Dense>

namespace cdgbn {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Exact symmetrization: (A + A^T) / 2.
inline Matrix symmetrized(const Matrix& a) { return 0.5 * (a + a.transpose()); }

inline bool all_finite(const Vector& v) { return v.allFinite(); }
inline bool all_finite(const Matrix& m) { return m.allFinite(); }

/// Columns S of a factor with S * S^T == P for symmetric positive
/// semi-definite P. Uses a pivoted LDL^T factorization; negative pivots
/// (roundoff past the PSD boundary) are clamped to zero, so the matching
/// directions contribute no spread.
Matrix psd_sqrt_columns(const Matrix& p);

/// Smallest eigenvalue of a symmetric matrix (dense, for small n).
double min_eigenvalue(const Matrix& sym);

}  // namespace cdgbn
