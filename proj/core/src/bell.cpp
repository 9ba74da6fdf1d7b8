#include "witnesslab/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace witnesslab {

int mod(int value, int n) {
  const int r = value % n;
  return r < 0 ? r + n : r;
}

Complex omega_power(int n, long long exponent) {
  const long long e = ((exponent % n) + n) % n;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
  return Complex(std::cos(angle), std::sin(angle));
}

Matrix DiagonalUnitary::matrix() const {
  const int n = static_cast<int>(phases.size());
  Matrix u = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    u(k, k) = Complex(std::cos(phases[k]), std::sin(phases[k]));
  return u;
}

Matrix weyl(const WeylIndex& idx) {
  if (idx.n < 1) throw std::invalid_argument("weyl: n < 1");
  const int n = idx.n;
  Matrix u = Matrix::Zero(n, n);
  for (int ell = 0; ell < n; ++ell)
    u(mod(ell + idx.k, n), ell) = omega_power(n, static_cast<long long>(idx.m) * ell);
  return u;
}

Vector max_entangled(int n) {
  if (n < 2) throw std::invalid_argument("max_entangled: n < 2");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n) * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) v[k * n + k] = amp;
  return v;
}

Vector bell_state(const BellLabel& lbl) {
  const int n = lbl.n;
  if (n < 2) throw std::invalid_argument("bell_state: n < 2");
  // (1 ⊗ U_{k,ell}) |psi+_n> = n^{-1/2} sum_m w^{km} |m, m+ell>
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n) * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m)
    v[m * n + mod(m + lbl.ell, n)] =
        amp * omega_power(n, static_cast<long long>(lbl.k) * m);
  return v;
}

Matrix bell_projector(const BellLabel& lbl) {
  const Vector v = bell_state(lbl);
  return v * v.adjoint();
}

Matrix band_projector(int n, int k) {
  if (n < 2) throw std::invalid_argument("band_projector: n < 2");
  if (k < 0 || k >= n) throw std::invalid_argument("band_projector: bad band");
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(n) * n,
                          static_cast<Eigen::Index>(n) * n);
  for (int m = 0; m < n; ++m) {
    const int idx = m * n + mod(m + k, n);
    p(idx, idx) = 1.0;
  }
  return p;
}

BellDecomposition bell_coefficients(const Matrix& X, int n) {
  if (X.rows() != static_cast<Eigen::Index>(n) * n || X.cols() != X.rows())
    throw std::invalid_argument("bell_coefficients: dimension mismatch");
  std::vector<Vector> states;
  states.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int ell = 0; ell < n; ++ell)
      states.push_back(bell_state(BellLabel{n, k, ell}));

  BellDecomposition out;
  out.table = Matrix::Zero(n, n);
  out.max_offdiag = 0.0;
  std::vector<Vector> applied;
  applied.reserve(states.size());
  for (const Vector& s : states) applied.push_back(X * s);
  for (int a = 0; a < n * n; ++a) {
    for (int b = 0; b < n * n; ++b) {
      const Complex overlap = states[a].dot(applied[b]);
      if (a == b)
        out.table(a / n, a % n) = overlap;
      else
        out.max_offdiag = std::max(out.max_offdiag, std::abs(overlap));
    }
  }
  return out;
}

double covariance_residual(const Matrix& X, const DiagonalUnitary& u) {
  const int n = static_cast<int>(u.phases.size());
  if (X.rows() != static_cast<Eigen::Index>(n) * n || X.cols() != X.rows())
    throw std::invalid_argument("covariance_residual: dimension mismatch");
  const Matrix um = u.matrix();
  const Matrix big = kron(um, um.conjugate());
  return (big * X * big.adjoint() - X).norm();
}

}  // namespace witnesslab
