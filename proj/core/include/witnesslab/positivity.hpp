#pragma once
// Numerical block-positivity certification by alternating (see-saw)
// minimization over product vectors, Choi-map contractions, analytic
// zero-expectation product families, and spanning-rank analysis.

#include "witnesslab/tensor.hpp"
#include "witnesslab/witness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace witnesslab {

struct ProductVector {
  Vector psi;  // unit vector, first factor
  Vector phi;  // unit vector, second factor
};

// <psi ⊗ phi| W |psi ⊗ phi> as a real number (throws if the imaginary
// residual exceeds 1e-12 relative to scale; W must be Hermitian).
double product_expectation(const Matrix& W, const ProductVector& pv);

// n x n Hermitian M with <phi|M|phi> = <psi ⊗ phi| W |psi ⊗ phi>.
Matrix contract_first(const Matrix& W, const Vector& psi);

// n x n Hermitian M with <psi|M|psi> = <psi ⊗ phi| W |psi ⊗ phi>.
Matrix contract_second(const Matrix& W, const Vector& phi);

// The positive map of the witness: Phi(X) = Tr_1((X^T ⊗ I) W).
// For X = |chi><chi| this equals contract_first(W, conj(chi)).
Matrix choi_map_apply(const Matrix& W, const Matrix& X);

enum class Verdict { BlockPositiveHeuristic, NotBlockPositiveCertified };

struct SeesawOptions {
  int starts = 200;
  int max_iters = 120;
  std::uint64_t seed = 1;
  double certify_tol = 1e-10;  // min below -certify_tol => certified violation
  double stall_tol = 1e-17;    // stop when the objective stops moving
};

struct CertReport {
  double min_value = 0.0;
  ProductVector argmin;
  int starts = 0;
  int iterations_per_start = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::BlockPositiveHeuristic;
  double tolerance = 0.0;
};

// Multi-start alternating minimization of the product expectation. Each
// half-step replaces one factor by the minimal eigenvector of the
// corresponding contraction, so the objective is non-increasing. A negative
// outcome is re-verified directly at the argmin and is a rigorous
// counterexample; a non-negative outcome is heuristic.
CertReport seesaw_minimize(const Matrix& W, const SeesawOptions& opts);

// Analytic zero-expectation product families for the witness families.
//   ClassI,  optimized=false: phase vectors (psi, psi*) plus the three
//            two-level pair vectors; spans 15 dims for theta in (0,pi).
//   ClassI,  optimized=true : zero families of W - 2P (phase vectors, the
//            four band families with a free relative phase, and the
//            half-moduli family); spans 16 dims for theta in (0,pi).
//   ClassII : vectors (psi*, psi) with |psi_0|=|psi_2|, |psi_1|=|psi_3|
//            (rank 14); at theta=pi additionally (chi, chi*) for random chi.
//   N3      : phase vectors (rank 7); for 0 < a < 1 additionally the
//            two-level band zeros at moduli ratio (1-a)/c (rank 9), and at
//            a=0 the full (chi, chi*) family (rank 9).
// At least min_count vectors are returned; every vector is checked to have
// |expectation| <= 1e-10 on the corresponding witness.
std::vector<ProductVector> zero_locus_families(const FamilyParam& p,
                                               bool optimized,
                                               int min_count = 40,
                                               std::uint64_t seed = 1);

// Phase product vectors (psi, psi*) with psi = n^{-1/2} sum_l e^{i nu_l}|l>;
// the first `count` vectors of the seeded low-discrepancy stream. The
// deterministic subfamily {0..n^2-n} realizes the maximal rank n^2-(n-1).
std::vector<ProductVector> phase_product_family(int n, int count,
                                                std::uint64_t seed);

struct SpanReport {
  std::string family_description;
  int vector_count = 0;
  std::vector<double> singular_values;
  int rank = 0;
  double rel_tol = 0.0;
};

SpanReport span_analysis(const std::vector<ProductVector>& vectors,
                         double rel_tol,
                         const std::string& description = "");

// Harvest numerically found zeros of a (heuristically) block positive W:
// see-saw from `count` random starts, keep terminal points with objective
// <= 1e-9, deduplicate by phase-invariant distance (threshold 1e-6).
std::vector<ProductVector> numeric_zero_search(const Matrix& W, int count,
                                               std::uint64_t seed);

}  // namespace witnesslab
