#include "witnesslab/bell.hpp"
#include "witnesslab/rng.hpp"
#include "witnesslab/witness.hpp"

#include "test_util.hpp"

#include <numbers>

using namespace witnesslab;
using wtest::max_abs_diff;
using wtest::random_hermitian;

namespace {
constexpr double PI = std::numbers::pi;

DiagonalUnitary random_diagonal(Rng& rng, int n) {
  DiagonalUnitary u;
  for (int i = 0; i < n; ++i) u.phases.push_back(rng.uniform(0.0, 2 * PI));
  return u;
}
}  // namespace

TEST_SUITE("bell") {

TEST_CASE("weyl identity and pure shift") {
  CHECK(max_abs_diff(weyl({4, 0, 0}), Matrix::Identity(4, 4)) == 0.0);
  const Matrix shift = weyl({4, 0, 1});
  for (int l = 0; l < 4; ++l)
    CHECK(std::abs(shift((l + 1) % 4, l) - 1.0) <= 1e-15);
  CHECK(max_abs_diff(shift * shift.adjoint(), Matrix::Identity(4, 4)) <=
        1e-15);
}

TEST_CASE("weyl composition rule over all index pairs") {
  const int n = 4;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const Matrix lhs = weyl({n, k, l}) * weyl({n, r, s});
          const Matrix rhs = omega_power(n, static_cast<long long>(k) * s) *
                             weyl({n, k + r, l + s});
          CHECK(max_abs_diff(lhs, rhs) <= 1e-14);
        }
}

TEST_CASE("weyl conjugation identities") {
  for (int n : {3, 4})
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Matrix u = weyl({n, k, l});
        CHECK(max_abs_diff(u.conjugate(), weyl({n, -k, l})) <= 1e-14);
        CHECK(max_abs_diff(u.adjoint(),
                           omega_power(n, static_cast<long long>(k) * l) *
                               weyl({n, -k, -l})) <= 1e-14);
      }
}

TEST_CASE("weyl trace orthogonality") {
  for (int n : {3, 4})
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) {
            const Complex tr =
                (weyl({n, k, l}) * weyl({n, r, s}).adjoint()).trace();
            const double expected = (k == r && l == s) ? n : 0.0;
            CHECK(std::abs(tr - expected) <= 1e-13);
          }
}

TEST_CASE("maximally entangled state") {
  const Vector two = max_entangled(2);
  CHECK(std::abs(two[0] - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(two[1]) == 0.0);
  CHECK(std::abs(two[2]) == 0.0);
  CHECK(std::abs(two[3] - 1.0 / std::sqrt(2.0)) <= 1e-15);
  const Vector four = max_entangled(4);
  CHECK(std::abs(four.norm() - 1.0) <= 1e-15);
  int nonzero = 0;
  for (int i = 0; i < 16; ++i)
    if (std::abs(four[i]) > 0) ++nonzero;
  CHECK(nonzero == 4);
}

TEST_CASE("bell states are orthonormal") {
  // oracle: direct inner-product enumeration over all label pairs
  const int n = 4;
  std::vector<Vector> states;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) states.push_back(bell_state({n, k, l}));
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = 0; b < states.size(); ++b) {
      const Complex overlap = states[a].dot(states[b]);
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) <= 1e-14);
    }
}

TEST_CASE("bell state examples") {
  CHECK(max_abs_diff(Matrix(bell_state({4, 0, 0})), Matrix(max_entangled(4))) ==
        0.0);
  const Vector shifted = bell_state({4, 0, 1});
  for (int m = 0; m < 4; ++m)
    CHECK(std::abs(shifted[m * 4 + (m + 1) % 4] - 0.5) <= 1e-15);
}

TEST_CASE("band projectors resolve the identity") {
  const int n = 4;
  Matrix sum = Matrix::Zero(16, 16);
  for (int k = 0; k < n; ++k) {
    const Matrix p = band_projector(n, k);
    CHECK(max_abs_diff(p * p, p) == 0.0);
    for (int j = 0; j < k; ++j)
      CHECK(inf_norm(band_projector(n, j) * p) == 0.0);
    sum += p;
  }
  CHECK(max_abs_diff(sum, Matrix::Identity(16, 16)) == 0.0);
  // Pi_0 is the diagonal |kk> band
  const Matrix p0 = band_projector(4, 0);
  for (int k = 0; k < 4; ++k) CHECK(p0(k * 4 + k, k * 4 + k) == Complex(1.0));
  CHECK(std::abs(p0.trace() - 4.0) <= 1e-15);
}

TEST_CASE("band projector equals the phase-summed bell projectors") {
  for (int k = 0; k < 4; ++k) {
    Matrix summed = Matrix::Zero(16, 16);
    for (int m = 0; m < 4; ++m) summed += bell_projector({4, m, k});
    CHECK(max_abs_diff(summed, band_projector(4, k)) <= 1e-14);
  }
}

TEST_CASE("bell coefficients of a bell projector") {
  const Matrix p = bell_projector({4, 0, 0});
  const BellDecomposition d = bell_coefficients(p, 4);
  CHECK(std::abs(d.table(0, 0) - 1.0) <= 1e-13);
  double rest = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      if (k != 0 || l != 0) rest = std::max(rest, std::abs(d.table(k, l)));
  CHECK(rest <= 1e-13);
  CHECK(d.max_offdiag <= 1e-13);
}

TEST_CASE("bell coefficients round-trip a bell-diagonal operator") {
  Rng rng(21);
  Matrix x = Matrix::Zero(16, 16);
  Matrix table(4, 4);
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) {
      const double c = rng.gaussian();
      table(k, l) = c;
      x += c * bell_projector({4, k, l});
    }
  const BellDecomposition d = bell_coefficients(x, 4);
  CHECK(max_abs_diff(d.table, table) <= 1e-12);
  CHECK(d.max_offdiag <= 1e-12);
}

TEST_CASE("family witnesses are bell diagonal") {
  for (double theta : {PI / 5, PI / 2, 2.9}) {
    const Matrix w = family_witness({Family::ClassI, theta});
    CHECK(bell_coefficients(w, 4).max_offdiag <= 1e-12);
  }
  // eigenvalues coincide with the bell coefficient table
  const Matrix w = family_witness({Family::ClassI, PI / 3});
  const BellDecomposition d = bell_coefficients(w, 4);
  std::vector<double> coeffs;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) coeffs.push_back(d.table(k, l).real());
  std::sort(coeffs.begin(), coeffs.end());
  const EigenResult eig = hermitian_eigen(w);
  for (int i = 0; i < 16; ++i)
    CHECK(std::abs(coeffs[size_t(i)] - eig.values[i]) <= 1e-12);
}

TEST_CASE("random hermitian operators are generically not bell diagonal") {
  Rng rng(22);
  const Matrix x = random_hermitian(rng, 16);
  CHECK(bell_coefficients(x, 4).max_offdiag > 1e-3);
}

TEST_CASE("covariance residual vanishes for covariant operators") {
  Rng rng(23);
  CHECK(covariance_residual(Matrix::Identity(16, 16), random_diagonal(rng, 4)) <=
        1e-13);
  const Matrix w = family_witness({Family::ClassI, 1.1});
  for (int trial = 0; trial < 100; ++trial)
    CHECK(covariance_residual(w, random_diagonal(rng, 4)) <= 1e-12);
}

TEST_CASE("generic covariant operators pass, a non-covariant control fails") {
  Rng rng(24);
  // arbitrary circulant alpha and constant beta give a covariant operator
  AlphaVector alpha{4, RealVector(4)};
  alpha.alpha << 0.3, -1.2, 2.0, 0.4;
  const Matrix x = covariant_operator(alpha, 0.7);
  for (int trial = 0; trial < 50; ++trial)
    CHECK(covariance_residual(x, random_diagonal(rng, 4)) <= 1e-12);

  Matrix bad = bell_projector({4, 0, 0});
  bad(0 * 4 + 1, 1 * 4 + 0) += 1.0;  // |0><1| (x) |1><0|
  bad(1 * 4 + 0, 0 * 4 + 1) += 1.0;
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial)
    if (covariance_residual(bad, random_diagonal(rng, 4)) > 0.1) ++failures;
  CHECK(failures == 20);
}

}  // TEST_SUITE
