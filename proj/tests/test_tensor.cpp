#include "witnesslab/bell.hpp"
#include "witnesslab/positivity.hpp"
#include "witnesslab/tensor.hpp"
#include "witnesslab/witness.hpp"

#include "test_util.hpp"

using namespace witnesslab;
using wtest::max_abs_diff;
using wtest::random_hermitian;
using wtest::random_matrix;

TEST_SUITE("tensor") {

TEST_CASE("kron of identities and diagonals") {
  const Matrix id2 = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(id2, id2), Matrix::Identity(4, 4)) == 0.0);
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = 3.0;
  b(1, 1) = 4.0;
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 3.0;
  expected(1, 1) = 4.0;
  expected(2, 2) = 6.0;
  expected(3, 3) = 8.0;
  CHECK(max_abs_diff(kron(a, b), expected) <= 1e-15);
}

TEST_CASE("kron of Weyl matrices matches the index formula") {
  // oracle: entry ((i*rb + k), (j*cb + l)) = a(i,j) b(k,l), enumerated
  const Matrix u = weyl({2, 0, 1});
  const Matrix v = weyl({2, 1, 0});
  const Matrix k = kron(u, v);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          CHECK(std::abs(k(i * 2 + r, j * 2 + c) - u(i, j) * v(r, c)) <=
                1e-15);
}

TEST_CASE("kron associativity") {
  Rng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = random_matrix(rng, 2, 2);
    const Matrix b = random_matrix(rng, 3, 3);
    const Matrix c = random_matrix(rng, 2, 2);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("partial transpose is an involution preserving trace and hermiticity") {
  Rng rng(7);
  const Matrix m = random_hermitian(rng, 16);
  const Matrix pt = partial_transpose(m, 4);
  CHECK(max_abs_diff(partial_transpose(pt, 4), m) == 0.0);
  CHECK(std::abs((pt.trace() - m.trace())) <= 1e-13);
  CHECK(hermiticity_error(pt) <= 1e-13);
  // linearity
  const Matrix m2 = random_hermitian(rng, 16);
  CHECK(max_abs_diff(partial_transpose(m + 2.0 * m2, 4),
                     pt + 2.0 * partial_transpose(m2, 4)) <= 1e-12);
}

TEST_CASE("partial transpose fixes diagonal matrices") {
  Rng rng(8);
  Matrix d = Matrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) d(i, i) = rng.gaussian();
  CHECK(max_abs_diff(partial_transpose(d, 3), d) == 0.0);
}

TEST_CASE("partial transpose of the maximally entangled projector is SWAP") {
  // oracle: direct 4x4 enumeration of SWAP |ab> -> |ba>
  const Vector plus = max_entangled(2);
  const Matrix pt = partial_transpose(2.0 * (plus * plus.adjoint()), 2);
  Matrix swap = Matrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) swap(a * 2 + b, b * 2 + a) = 1.0;
  CHECK(max_abs_diff(pt, swap) <= 1e-15);
}

TEST_CASE("partial trace factorizes product operators") {
  Rng rng(9);
  const Matrix a = random_matrix(rng, 4, 4);
  const Matrix b = random_matrix(rng, 4, 4);
  const Matrix prod = kron(a, b);
  CHECK(max_abs_diff(partial_trace(prod, 4, Subsystem::First), a.trace() * b) <=
        1e-12);
  CHECK(max_abs_diff(partial_trace(prod, 4, Subsystem::Second), b.trace() * a) <=
        1e-12);
  CHECK(std::abs(partial_trace(prod, 4, Subsystem::First).trace() -
                 prod.trace()) <= 1e-12);
}

TEST_CASE("partial trace of the identity") {
  const Matrix id = Matrix::Identity(16, 16);
  CHECK(max_abs_diff(partial_trace(id, 4, Subsystem::Second),
                     4.0 * Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("partial trace of the maximally entangled projector") {
  // oracle: direct summation over the Bell state entries gives identity/n
  const Vector plus = max_entangled(4);
  const Matrix proj = 4.0 * (plus * plus.adjoint());
  Matrix direct = Matrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k < 4; ++k) direct(a, b) += proj(k * 4 + a, k * 4 + b);
  CHECK(max_abs_diff(direct, Matrix::Identity(4, 4)) <= 1e-14);
  CHECK(max_abs_diff(partial_trace(proj, 4, Subsystem::First), direct) == 0.0);
}

TEST_CASE("hadamard product identities") {
  Rng rng(10);
  const Matrix m = random_matrix(rng, 4, 4);
  CHECK(max_abs_diff(hadamard(Matrix::Ones(4, 4), m), m) == 0.0);
  CHECK(max_abs_diff(hadamard(Matrix::Zero(4, 4), m), Matrix::Zero(4, 4)) ==
        0.0);
}

TEST_CASE("hadamard with the sign checkerboard flips entries") {
  Rng rng(11);
  Matrix d(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d(i, j) = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  const Vector psi = rng.unit_complex(4);
  const Matrix flipped = hadamard(d, psi * psi.adjoint());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex expected =
          (((i + j) % 2 == 0) ? 1.0 : -1.0) * psi[i] * std::conj(psi[j]);
      CHECK(std::abs(flipped(i, j) - expected) <= 1e-15);
    }
}

TEST_CASE("hermitian_eigen basics") {
  const EigenResult id = hermitian_eigen(Matrix::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(id.values[i] == doctest::Approx(1.0));
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const EigenResult res = hermitian_eigen(d);
  CHECK(res.values[0] == doctest::Approx(1.0));
  CHECK(res.values[1] == doctest::Approx(2.0));
  CHECK(res.values[2] == doctest::Approx(3.0));
}

TEST_CASE("hermitian_eigen satisfies the reconstruction contract") {
  Rng rng(12);
  const Matrix m = random_hermitian(rng, 16);
  const EigenResult res = hermitian_eigen(m);
  Matrix rebuilt = Matrix::Zero(16, 16);
  for (int i = 0; i < 16; ++i)
    rebuilt += res.values[i] * (res.vectors.col(i) * res.vectors.col(i).adjoint());
  CHECK(max_abs_diff(rebuilt, m) <= 1e-9 * std::max(1.0, inf_norm(m)));
  CHECK(max_abs_diff(res.vectors.adjoint() * res.vectors,
                     Matrix::Identity(16, 16)) <= 1e-10);
  for (int i = 0; i < 16; ++i)
    CHECK((m * res.vectors.col(i) - res.values[i] * res.vectors.col(i)).norm() <=
          1e-10 * std::max(1.0, inf_norm(m)));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigen(m), std::invalid_argument);
}

TEST_CASE("choi-like witness has a negative eigenvalue") {
  // oracle: the entangled-diagonal block of W[1,1,1,0] is (a+1)I - J whose
  // characteristic polynomial has the root a - 3 = -2
  AlphaVector alpha{4, RealVector(4)};
  alpha.alpha << 1, 1, 1, 0;
  const Matrix w = witness_from_alpha({alpha, -1.0});
  const EigenResult res = hermitian_eigen(w);
  CHECK(res.values[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(res.values[0] < 0.0);
}

TEST_CASE("eigenvalues are invariant under unitary conjugation") {
  Rng rng(13);
  const Matrix m = random_hermitian(rng, 8);
  // unitary from the QR factorization of a random matrix
  const Matrix g = random_matrix(rng, 8, 8);
  const Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix u = qr.householderQ();
  const EigenResult before = hermitian_eigen(m);
  const EigenResult after = hermitian_eigen((u * m * u.adjoint()).eval());
  for (int i = 0; i < 8; ++i)
    CHECK(std::abs(before.values[i] - after.values[i]) <= 1e-9);
}

TEST_CASE("svd_rank counts duplicated directions once") {
  Vector e0 = Vector::Zero(3);
  e0[0] = 1.0;
  Vector e1 = Vector::Zero(3);
  e1[1] = 1.0;
  const SpanRank r = svd_rank({e0, e0, e1}, 1e-8);
  CHECK(r.rank == 2);
  CHECK(r.singular_values.size() == 3);
  CHECK(r.singular_values[0] >= r.singular_values[1]);
}

TEST_CASE("svd_rank of a generic square family is full") {
  // oracle: nonvanishing Gram determinant
  Rng rng(14);
  std::vector<Vector> vectors;
  for (int i = 0; i < 16; ++i) vectors.push_back(rng.unit_complex(16));
  Matrix gram(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) gram(i, j) = vectors[size_t(i)].dot(vectors[size_t(j)]);
  REQUIRE(std::abs(det(gram)) > 1e-12);
  CHECK(svd_rank(vectors, 1e-8).rank == 16);
}

TEST_CASE("svd_rank rejects empty input") {
  CHECK_THROWS_AS(svd_rank({}, 1e-8), std::invalid_argument);
}

TEST_CASE("det basics") {
  CHECK(std::abs(det(Matrix::Identity(4, 4)) - 1.0) <= 1e-14);
  Matrix d = Matrix::Zero(4, 4);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  d(2, 2) = 4.0;
  d(3, 3) = 5.0;
  CHECK(std::abs(det(d) - 120.0) <= 1e-12);
}

TEST_CASE("expectation contraction identity") {
  Rng rng(15);
  const Matrix w = random_hermitian(rng, 16);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector psi = rng.unit_complex(4);
    const Vector phi = rng.unit_complex(4);
    const double direct = product_expectation(w, {psi, phi});
    const Matrix projector = psi * psi.adjoint();
    const Matrix id4 = Matrix::Identity(4, 4);
    const Matrix contracted =
        partial_trace((kron(projector, id4) * w).eval(), 4, Subsystem::First);
    const Complex via = phi.dot(contracted * phi);
    CHECK(std::abs(via.real() - direct) <= 1e-12);
    CHECK(max_abs_diff(contract_first(w, psi), contracted) <= 1e-12);
  }
}

}  // TEST_SUITE
