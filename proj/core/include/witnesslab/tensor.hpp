#pragma once
// Dense complex linear algebra for bipartite operators: tensor products,
// partial transpose/trace, Hadamard products, Hermitian eigendecomposition,
// SVD-based rank and determinants. All functions are pure; inputs are never
// mutated and results are safe to share across threads.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace witnesslab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

enum class Subsystem { First, Second };

struct EigenResult {
  RealVector values;  // ascending
  Matrix vectors;     // orthonormal columns, vectors.col(i) pairs values[i]
};

struct SpanRank {
  int rank = 0;
  std::vector<double> singular_values;  // descending
};

bool is_finite(const Matrix& m);

// max-abs-entry norm used for residual reporting
double inf_norm(const Matrix& m);

// ||m - m^dagger||_inf; 0 for exactly Hermitian input
double hermiticity_error(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Transposition of the second tensor factor of an n^2 x n^2 operator under
// the product-basis ordering |i> ⊗ |j>  ->  i*n + j.
Matrix partial_transpose(const Matrix& m, int n);

// Trace out one factor of an n^2 x n^2 operator; the result is n x n.
Matrix partial_trace(const Matrix& m, int n, Subsystem which);

Matrix hadamard(const Matrix& a, const Matrix& b);

// Eigendecomposition of a Hermitian matrix (throws if the input is not
// Hermitian within 1e-10 relative to its scale).
EigenResult hermitian_eigen(const Matrix& m);

// Numerical rank of the span of a family of equal-dimension vectors:
// count of singular values above rel_tol times the largest one.
SpanRank svd_rank(const std::vector<Vector>& vectors, double rel_tol);

Complex det(const Matrix& m);

}  // namespace witnesslab
