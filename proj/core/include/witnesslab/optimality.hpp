#pragma once
// Rank-one subtraction optimization for class I, decomposition certificates
// for the two decomposable endpoints, and the analytic determinant and
// inequality evaluators backing the optimality claims.

#include "witnesslab/positivity.hpp"
#include "witnesslab/tensor.hpp"
#include "witnesslab/witness.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace witnesslab {

// (1/2) sum_j (-1)^{j+1} |j ⊗ j>; the direction subtracted from class I
// witnesses. Orthogonal to the full 15-dimensional zero locus of W_I(theta).
Vector classI_subtraction_vector();

struct SubtractionProbe {
  Vector psi;     // unit vector in C^16
  double lambda;  // >= 0
};

// W - lambda |psi><psi|
Matrix subtract_rank1(const Matrix& W, const SubtractionProbe& probe);

struct OptimizeReport {
  double theta = 0.0;
  double lambda_star = 0.0;  // feasible end of the final bracket
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int bisection_steps = 0;
  SeesawOptions certifier;
  int post_subtraction_span_rank = 0;
  // (lambda, certified min value) for every feasibility query, in order
  std::vector<std::pair<double, double>> trace;
};

// Bisection on lambda in [0,4] for the largest subtractable multiple of
// |probe_dir><probe_dir| that keeps W_I(theta) block positive. Infeasibility
// is certified by a violating product vector; feasibility is heuristic.
// Throws std::runtime_error on certifier inconsistency (non-monotone
// feasibility across the recorded trace).
OptimizeReport lambda_star_bisect(const FamilyParam& p, const Vector& probe_dir,
                                  double tol, const SeesawOptions& certifier);

struct DecompositionReport {
  std::string name;
  double residual_inf = 0.0;   // || W - (subtracted parts) - PSD^Gamma ||_inf
  double min_eigenvalue = 0.0; // smallest eigenvalue of the PSD certificate
  bool ok = false;             // residual <= 1e-12 and min eigenvalue >= -1e-12
};

// W_I(pi/2) = 2 P + A^Gamma with the fixed 16x16 certificate matrix A.
DecompositionReport verify_classI_decomposition();

// W[1,1,0,1] = B^Gamma + 2 (P_1 + P_2) with the fixed certificate matrix B
// and P_k the projectors onto (|00> - |22>)/sqrt2 and (|11> - |33>)/sqrt2.
DecompositionReport verify_classII_decomposition();

RealMatrix classI_certificate_matrix();   // A
RealMatrix classII_certificate_matrix();  // B
Vector classII_pair_vector(int which);    // which = 1 or 2

// Moduli bookkeeping x_{0±} = |psi_0|^2 ± |psi_2|^2,
// x_{1±} = |psi_1|^2 ± |psi_3|^2 and its polar form
// x_{0-} = R cos(phi), x_{1-} = R sin(phi).
struct ModuliSplit {
  double x0p = 0.0, x0m = 0.0, x1p = 0.0, x1m = 0.0;
  static ModuliSplit from_moduli_sq(const std::array<double, 4>& X);
  std::array<double, 4> to_moduli_sq() const;  // (X0, X1, X2, X3)
};

// Factorized determinant of the optimized-map contraction of
// W_I(theta) - 2P on a vector with the given moduli (phases drop out):
//   y0 y1 y2 y3 - (3/2) sum_i X_i prod_{j!=i} y_j
//                + 2 sum_{i} X_i X_{i+1} prod_{j!=i,i+1} y_j
// with y_k = (1+a) X_k + b X_{k+1} + c X_{k+2} + d X_{k+3} (indices mod 4).
// Throws std::domain_error when some y_i vanishes (degenerate support at the
// theta endpoints).
double classI_factorized_determinant(double theta,
                                     const std::array<double, 4>& moduli);

struct PolarInequality {
  double main_lhs = 0.0;       // 2 + 2|sin 2phi| - sin(4phi-theta)
                               //   - (2+sin theta) cos^2(2phi-theta)
  double organized_lhs = 0.0;  // sin^2(2phi-theta)(2 - cos 2phi sin(2phi-theta))
                               //   + sin 2phi (2 - cos(2phi-theta) - cos^3(2phi-theta))
  bool saturated = false;      // 2phi - theta = 0 mod pi within 1e-9
};

// Evaluate the two polar-coordinate inequality forms for theta in [0,pi],
// phi in [0,pi/2]; both sides are nonnegative on the whole domain.
PolarInequality classI_polar_inequality(double theta, double phi);

struct DetTerms {
  double S1 = 0.0, S2 = 0.0, S3 = 0.0;
  double sum() const { return S1 + S2 + S3; }
};

// The three nonnegative terms whose sum equals the determinant of the
// second-factor contraction of W_II(theta) on a vector with moduli-squared X.
DetTerms classII_determinant_terms(double theta, const std::array<double, 4>& X);

struct ProbeDetResult {
  double det = 0.0;            // determinant at the requested lambda
  double leading_coeff = 0.0;  // fitted coefficient of lambda^3
  double fit_residual = 0.0;   // relative residual at a held-out node
  int poly_degree = 0;         // detected polynomial degree in lambda
  bool permuted = false;       // x = 0 fallback applied
};

// Determinant of Phi_theta(|psi><psi|) - lambda D_{x,y} ∘ |psi><psi| on the
// probe vector psi = (0, 1, sqrt(2 k sin(theta/2) lambda), 1 + k cos(theta/2)
// lambda), with |x|^2 + |y|^2 = 1. Evaluated in extended precision. The
// probe's vanishing component decouples its row and column into a strictly
// positive spectator diagonal factor; `leading_coeff` is the lambda^3
// coefficient of the remaining 3x3 determinant, extracted by exact
// polynomial interpolation over lambda nodes, and equals
// 8 k^2 (k sin(t/2) cos^2(t/2) - |x|^2 sin^2(t/2)). `det` is the full 4x4
// determinant (the spectator factor is positive, so the signs agree). For
// x = 0 the probe vector is cyclically shifted by one entry and the roles of
// |x|^2 and |y|^2 swap in the leading coefficient.
ProbeDetResult classII_probe_determinant(double theta, double lambda, double k,
                                         Complex x, Complex y);

struct ProbeGridReport {
  double theta = 0.0;
  int directions = 0;
  int negative_count = 0;
  double max_det = 0.0;         // largest probe determinant over the grid
  double max_coeff_rel_err = 0.0;
  bool all_negative = false;
};

// Sweep a deterministic grid of (x, y) probe directions at fixed lambda with
// a per-direction k chosen to make the cubic coefficient negative.
ProbeGridReport classII_probe_grid(double theta, int directions, double lambda);

struct OptimalityReport {
  FamilyParam param;
  AlphaVector alpha;
  ClassTag tag = ClassTag::Neither;
  std::string endpoint;
  double witness_min_eigenvalue = 0.0;
  CertReport cert;
  SpanReport span;
  std::optional<OptimizeReport> optimization;   // class I
  std::optional<SpanReport> optimized_span;     // class I, lambda = 2
  std::optional<ProbeGridReport> probe;         // class II, theta in (0,pi)
  std::optional<DecompositionReport> decomposition;  // decomposable endpoints
  bool spanning = false;           // zero locus spans the full space
  std::string optimality;          // "optimal", "not-optimal", or
                                   // "consistent-with-optimal"
};

struct OptimalityOptions {
  SeesawOptions seesaw;
  double span_rel_tol = 1e-8;
  double bisect_tol = 1e-3;
  bool run_bisection = true;
};

OptimalityReport optimality_report(const FamilyParam& p,
                                   const OptimalityOptions& opts = {});

}  // namespace witnesslab
