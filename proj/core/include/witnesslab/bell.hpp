#pragma once
// Weyl shift-and-phase unitaries, generalized Bell states and projectors,
// diagonal-band projectors, and diagnostics for Bell diagonality and
// covariance under the maximal commutative subgroup of U(n).

#include "witnesslab/tensor.hpp"

#include <vector>

namespace witnesslab {

// U_{mk}|l> = w^{ml} |l+k mod n>, w = exp(2*pi*i/n); m is the phase index,
// k the shift index, both reduced mod n.
struct WeylIndex {
  int n;
  int m;
  int k;
};

// Label of the Bell state |psi_{k,l}> = (1 ⊗ U_{kl}) |psi+_n>.
struct BellLabel {
  int n;
  int k;    // phase index
  int ell;  // shift index
};

// U = sum_k exp(i*phi_k)|k><k|, an element of the diagonal subgroup T(n).
struct DiagonalUnitary {
  std::vector<double> phases;
  Matrix matrix() const;
};

// nonnegative remainder
int mod(int value, int n);

Complex omega_power(int n, long long exponent);

Matrix weyl(const WeylIndex& idx);

// |psi+_n> = (1/sqrt(n)) sum_k |k (x) k>
Vector max_entangled(int n);

Vector bell_state(const BellLabel& lbl);
Matrix bell_projector(const BellLabel& lbl);

// Pi_k = sum_m |m, m+k><m, m+k|, the rank-n projector onto the k-th
// diagonal band. Pi_k Pi_j = 0 for k != j and sum_k Pi_k = identity.
Matrix band_projector(int n, int k);

struct BellDecomposition {
  Matrix table;        // table(k, ell) = <psi_{k,ell}| X |psi_{k,ell}>
  double max_offdiag;  // max over distinct label pairs of |<psi|X|psi'>|
};

BellDecomposition bell_coefficients(const Matrix& X, int n);

// Frobenius norm of (U ⊗ U*) X (U ⊗ U*)^dagger - X.
double covariance_residual(const Matrix& X, const DiagonalUnitary& u);

}  // namespace witnesslab
