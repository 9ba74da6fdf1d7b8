#include "witnesslab/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace witnesslab {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

int bipartite_local_dim(const Matrix& m, int n, const char* who) {
  if (n < 1 || m.rows() != static_cast<Eigen::Index>(n) * n ||
      m.cols() != static_cast<Eigen::Index>(n) * n)
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  return n;
}

}  // namespace

bool is_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

double inf_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_error(const Matrix& m) {
  return inf_norm(m - m.adjoint());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

Matrix partial_transpose(const Matrix& m, int n) {
  bipartite_local_dim(m, n, "partial_transpose");
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.block(i * n, j * n, n, n) = m.block(i * n, j * n, n, n).transpose();
  return out;
}

Matrix partial_trace(const Matrix& m, int n, Subsystem which) {
  bipartite_local_dim(m, n, "partial_trace");
  Matrix out = Matrix::Zero(n, n);
  if (which == Subsystem::First) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) out(a, b) += m(k * n + a, k * n + b);
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) out(a, b) += m(a * n + k, b * n + k);
  }
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hadamard: dimension mismatch");
  return a.cwiseProduct(b);
}

EigenResult hermitian_eigen(const Matrix& m) {
  require_square(m, "hermitian_eigen");
  const double scale = std::max(1.0, inf_norm(m));
  if (hermiticity_error(m) > 1e-10 * scale)
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: eigensolver failed");
  return EigenResult{solver.eigenvalues(), solver.eigenvectors()};
}

SpanRank svd_rank(const std::vector<Vector>& vectors, double rel_tol) {
  if (vectors.empty()) throw std::invalid_argument("svd_rank: empty input");
  const Eigen::Index dim = vectors.front().size();
  Matrix stacked(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim)
      throw std::invalid_argument("svd_rank: mixed dimensions");
    stacked.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  Eigen::JacobiSVD<Matrix> svd(stacked);
  SpanRank out;
  out.singular_values.assign(svd.singularValues().data(),
                             svd.singularValues().data() +
                                 svd.singularValues().size());
  const double top = out.singular_values.empty() ? 0.0
                                                 : out.singular_values.front();
  for (double s : out.singular_values)
    if (top > 0.0 && s > rel_tol * top) ++out.rank;
  return out;
}

Complex det(const Matrix& m) {
  require_square(m, "det");
  return m.determinant();
}

}  // namespace witnesslab
