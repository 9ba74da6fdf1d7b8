#include "witnesslab/positivity.hpp"

#include "witnesslab/bell.hpp"
#include "witnesslab/optimality.hpp"
#include "witnesslab/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace witnesslab {

namespace {

constexpr double kZeroMembershipTol = 1e-10;

int local_dim(const Matrix& W, const char* who) {
  const auto rows = W.rows();
  const int n = static_cast<int>(std::llround(std::sqrt(double(rows))));
  if (rows != W.cols() || static_cast<Eigen::Index>(n) * n != rows)
    throw std::invalid_argument(std::string(who) +
                                ": operator is not n^2 x n^2");
  return n;
}

Vector normalized(const Vector& v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return v / n;
}

Vector min_eigvec(const Matrix& m, double* value) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("seesaw: eigensolver failed");
  if (value) *value = solver.eigenvalues()[0];
  return solver.eigenvectors().col(0);
}

}  // namespace

double product_expectation(const Matrix& W, const ProductVector& pv) {
  const int n = local_dim(W, "product_expectation");
  if (pv.psi.size() != n || pv.phi.size() != n)
    throw std::invalid_argument("product_expectation: dimension mismatch");
  const Vector prod = kron(pv.psi, pv.phi);
  const Complex value = prod.dot(W * prod);
  const double scale = std::max(1.0, inf_norm(W));
  if (std::abs(value.imag()) > 1e-12 * scale)
    throw std::invalid_argument(
        "product_expectation: expectation is not real (W not Hermitian?)");
  return value.real();
}

Matrix contract_first(const Matrix& W, const Vector& psi) {
  const int n = local_dim(W, "contract_first");
  if (psi.size() != n)
    throw std::invalid_argument("contract_first: dimension mismatch");
  Matrix m = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += std::conj(psi[k]) * W(k * n + a, l * n + b) * psi[l];
      m(a, b) = acc;
    }
  return m;
}

Matrix contract_second(const Matrix& W, const Vector& phi) {
  const int n = local_dim(W, "contract_second");
  if (phi.size() != n)
    throw std::invalid_argument("contract_second: dimension mismatch");
  Matrix m = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += std::conj(phi[k]) * W(a * n + k, b * n + l) * phi[l];
      m(a, b) = acc;
    }
  return m;
}

Matrix choi_map_apply(const Matrix& W, const Matrix& X) {
  const int n = local_dim(W, "choi_map_apply");
  if (X.rows() != n || X.cols() != n)
    throw std::invalid_argument("choi_map_apply: dimension mismatch");
  Matrix out = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += X(l, k) * W(l * n + a, k * n + b);
      out(a, b) = acc;
    }
  return out;
}

CertReport seesaw_minimize(const Matrix& W, const SeesawOptions& opts) {
  const int n = local_dim(W, "seesaw_minimize");
  if (opts.starts < 1)
    throw std::invalid_argument("seesaw_minimize: starts < 1");

  CertReport best;
  best.min_value = std::numeric_limits<double>::infinity();
  best.starts = opts.starts;
  best.iterations_per_start = opts.max_iters;
  best.seed = opts.seed;
  best.tolerance = opts.certify_tol;

  for (int s = 0; s < opts.starts; ++s) {
    Rng rng(Rng::mix(opts.seed, static_cast<std::uint64_t>(s)));
    Vector psi = rng.unit_complex(n);
    Vector phi = rng.unit_complex(n);
    double value = std::numeric_limits<double>::infinity();
    double prev = value;
    for (int it = 0; it < opts.max_iters; ++it) {
      phi = min_eigvec(contract_first(W, psi), &value);
      psi = min_eigvec(contract_second(W, phi), &value);
      if (std::abs(prev - value) <= opts.stall_tol) break;
      prev = value;
    }
    if (value < best.min_value) {
      best.min_value = value;
      best.argmin = ProductVector{psi, phi};
    }
  }

  // re-verify the winner directly; the stored value is the recomputation
  best.min_value = product_expectation(W, best.argmin);
  best.verdict = best.min_value < -opts.certify_tol
                     ? Verdict::NotBlockPositiveCertified
                     : Verdict::BlockPositiveHeuristic;
  return best;
}

std::vector<ProductVector> phase_product_family(int n, int count,
                                                std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("phase_product_family: n < 2");
  KroneckerSequence seq(n, seed);
  std::vector<ProductVector> out;
  out.reserve(static_cast<std::size_t>(count));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < count; ++m) {
    const std::vector<double> u = seq.next();
    Vector psi(n);
    for (int l = 0; l < n; ++l) {
      const double nu = 2.0 * std::numbers::pi * u[static_cast<std::size_t>(l)];
      psi[l] = amp * Complex(std::cos(nu), std::sin(nu));
    }
    out.push_back(ProductVector{psi, psi.conjugate()});
  }
  return out;
}

namespace {

// Two-level pair vectors annihilating W_I(theta): on the band (j, j+1),
// psi carries (sqrt(sin t/2), sqrt(cos t/2)) and phi the swapped weights.
// The same relative phase enters both factors un-conjugated; the phased
// versions stay in the zero locus (the contraction kernel rotates with the
// argument's phase).
ProductVector classI_pair_vector(double theta, int j, double relative_phase) {
  const double s = std::sqrt(std::sin(theta / 2.0));
  const double c = std::sqrt(std::cos(theta / 2.0));
  Vector psi = Vector::Zero(4);
  Vector phi = Vector::Zero(4);
  const Complex rot(std::cos(relative_phase), std::sin(relative_phase));
  psi[mod(j, 4)] = s * rot;
  psi[mod(j + 1, 4)] = c;
  phi[mod(j, 4)] = c;
  phi[mod(j + 1, 4)] = s * rot;
  return ProductVector{normalized(psi), normalized(phi)};
}

// Half-moduli family (psi*, psi) with |psi_0|^2 = |psi_2|^2 = t/2 and
// |psi_1|^2 = |psi_3|^2 = (1-t)/2 (after normalization), free phases.
ProductVector half_moduli_vector(double t, double a, double b, double g) {
  Vector psi(4);
  const double r = std::sqrt(t);
  const double q = std::sqrt(1.0 - t);
  psi[0] = r;
  psi[1] = q * Complex(std::cos(a), std::sin(a));
  psi[2] = r * Complex(std::cos(b), std::sin(b));
  psi[3] = q * Complex(std::cos(g), std::sin(g));
  const Vector unit = normalized(psi);
  return ProductVector{unit.conjugate(), unit};
}

ProductVector classII_zero_vector(double u, const std::array<double, 4>& ph) {
  Vector psi(4);
  const double r = std::sqrt(u / 2.0);
  const double q = std::sqrt((1.0 - u) / 2.0);
  const double m[4] = {r, q, r, q};
  for (int i = 0; i < 4; ++i)
    psi[i] = m[i] * Complex(std::cos(ph[static_cast<std::size_t>(i)]),
                            std::sin(ph[static_cast<std::size_t>(i)]));
  const Vector unit = normalized(psi);
  return ProductVector{unit.conjugate(), unit};
}

void check_zero_membership(const Matrix& W,
                           const std::vector<ProductVector>& family) {
  for (const ProductVector& pv : family) {
    const double value = product_expectation(W, pv);
    if (std::abs(value) > kZeroMembershipTol)
      throw std::logic_error(
          "zero_locus_families: emitted vector misses the zero locus");
  }
}

}  // namespace

std::vector<ProductVector> zero_locus_families(const FamilyParam& p,
                                               bool optimized, int min_count,
                                               std::uint64_t seed) {
  const int want = std::max(min_count, 40);
  std::vector<ProductVector> out;
  Matrix W = family_witness(p);

  switch (p.family) {
    case Family::ClassI: {
      if (!optimized) {
        out = phase_product_family(4, want - 3, seed);
        for (int j = 0; j < 3; ++j)
          out.push_back(classI_pair_vector(p.angle, j, 0.0));
      } else {
        const Vector psi = classI_subtraction_vector();
        W -= 2.0 * (psi * psi.adjoint());
        out = phase_product_family(4, 16, seed);
        KroneckerSequence phases(1, Rng::mix(seed, 101));
        for (int j = 0; j < 4; ++j)
          for (int r = 0; r < 5; ++r) {
            const double rel = 2.0 * std::numbers::pi * phases.next()[0];
            out.push_back(classI_pair_vector(p.angle, j, rel));
          }
        KroneckerSequence half(4, Rng::mix(seed, 202));
        while (out.size() < static_cast<std::size_t>(want)) {
          const std::vector<double> u = half.next();
          out.push_back(half_moduli_vector(0.1 + 0.8 * u[0],
                                           2 * std::numbers::pi * u[1],
                                           2 * std::numbers::pi * u[2],
                                           2 * std::numbers::pi * u[3]));
        }
      }
      break;
    }
    case Family::ClassII: {
      KroneckerSequence seq(5, Rng::mix(seed, 303));
      const bool reduction_endpoint =
          std::abs(p.angle - std::numbers::pi) <= 1e-12;
      const int structured = reduction_endpoint ? want / 2 : want;
      for (int m = 0; m < structured; ++m) {
        const std::vector<double> u = seq.next();
        out.push_back(classII_zero_vector(
            0.1 + 0.8 * u[0],
            {2 * std::numbers::pi * u[1], 2 * std::numbers::pi * u[2],
             2 * std::numbers::pi * u[3], 2 * std::numbers::pi * u[4]}));
      }
      if (reduction_endpoint) {
        Rng rng(Rng::mix(seed, 404));
        while (out.size() < static_cast<std::size_t>(want)) {
          const Vector chi = rng.unit_complex(4);
          out.push_back(ProductVector{chi, chi.conjugate()});
        }
      }
      break;
    }
    case Family::N3: {
      const AlphaVector alpha = family_params(p);
      const double a = alpha.alpha[0];
      const double b = alpha.alpha[1];
      const double c = alpha.alpha[2];
      const bool reduction_like = std::abs(a) <= 1e-12;
      const bool band_zeros = !reduction_like && a < 1.0 - 1e-12;
      const int structured = reduction_like ? want / 2
                             : band_zeros   ? want - 12
                                            : want;
      out = phase_product_family(3, structured, seed);
      if (reduction_like) {
        Rng rng(Rng::mix(seed, 505));
        while (out.size() < static_cast<std::size_t>(want)) {
          const Vector chi = rng.unit_complex(3);
          out.push_back(ProductVector{chi, chi.conjugate()});
        }
      } else if (band_zeros) {
        // Two-level zeros on each band {j, j+1}: the moduli ratio
        // X_j / X_{j+1} = (1-a)/c is the tangential double root of the
        // band-restricted contraction determinant (bc = (a-1)^2 makes the
        // discriminant vanish). The first factor is the contraction kernel.
        const double ratio = (1.0 - a) / c;
        KroneckerSequence phases(2, Rng::mix(seed, 606));
        const double yj = (1.0 + a) * ratio + b;
        const double yj1 = (1.0 + a) + c * ratio;
        for (int j = 0; j < 3; ++j)
          for (int rep = 0; rep < 4; ++rep) {
            const std::vector<double> u = phases.next();
            const Complex em(std::cos(2 * std::numbers::pi * u[0]),
                             std::sin(2 * std::numbers::pi * u[0]));
            const Complex en(std::cos(2 * std::numbers::pi * u[1]),
                             std::sin(2 * std::numbers::pi * u[1]));
            Vector psi = Vector::Zero(3);
            Vector ker = Vector::Zero(3);
            psi[j] = std::sqrt(ratio) * em;
            psi[mod(j + 1, 3)] = en;
            ker[j] = std::sqrt(ratio) * std::conj(em) / yj;
            ker[mod(j + 1, 3)] = std::conj(en) / yj1;
            out.push_back(ProductVector{normalized(ker), normalized(psi)});
          }
      }
      break;
    }
  }

  check_zero_membership(W, out);
  return out;
}

SpanReport span_analysis(const std::vector<ProductVector>& vectors,
                         double rel_tol, const std::string& description) {
  if (vectors.empty())
    throw std::invalid_argument("span_analysis: empty family");
  std::vector<Vector> flattened;
  flattened.reserve(vectors.size());
  for (const ProductVector& pv : vectors)
    flattened.push_back(kron(pv.psi, pv.phi));
  const SpanRank rank = svd_rank(flattened, rel_tol);
  SpanReport report;
  report.family_description = description;
  report.vector_count = static_cast<int>(vectors.size());
  report.singular_values = rank.singular_values;
  report.rank = rank.rank;
  report.rel_tol = rel_tol;
  return report;
}

namespace {

double projective_distance(const ProductVector& a, const ProductVector& b) {
  const double po = std::abs(a.psi.dot(b.psi));
  const double qo = std::abs(a.phi.dot(b.phi));
  const double dp = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, po)));
  const double dq = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, qo)));
  return dp + dq;
}

double alternation_sweep(const Matrix& W, Vector& psi, Vector& phi) {
  double value = 0.0;
  phi = min_eigvec(contract_first(W, psi), &value);
  psi = min_eigvec(contract_second(W, phi), &value);
  return value;
}

Vector phase_align(const Vector& ref, const Vector& v) {
  const Complex overlap = ref.dot(v);
  const double mag = std::abs(overlap);
  if (mag <= 1e-14) return v;
  return v * (std::conj(overlap) / mag);
}

// Aitken extrapolation of the linearly converging alternation. Along nearly
// flat zero manifolds the contraction ratio approaches 1 and the objective
// stalls at the rounding floor long before the iterate reaches the manifold;
// extrapolating the geometric tail closes the remaining distance.
void aitken_polish(const Matrix& W, Vector& psi, Vector& phi) {
  double best = product_expectation(W, {psi, phi});
  for (int round = 0; round < 24; ++round) {
    Vector psi0 = psi, phi0 = phi;
    Vector psi1 = psi0, phi1 = phi0;
    alternation_sweep(W, psi1, phi1);
    psi1 = phase_align(psi0, psi1);
    phi1 = phase_align(phi0, phi1);
    Vector psi2 = psi1, phi2 = phi1;
    alternation_sweep(W, psi2, phi2);
    psi2 = phase_align(psi1, psi2);
    phi2 = phase_align(phi1, phi2);

    const double step1 = std::sqrt((psi1 - psi0).squaredNorm() +
                                   (phi1 - phi0).squaredNorm());
    const double step2 = std::sqrt((psi2 - psi1).squaredNorm() +
                                   (phi2 - phi1).squaredNorm());
    psi = psi2;
    phi = phi2;
    best = std::min(best, product_expectation(W, {psi, phi}));
    if (step1 <= 1e-12 || step2 <= 1e-12) break;
    const double ratio = step2 / step1;
    if (ratio >= 1.0 || ratio < 0.2) continue;
    Vector psi_x = psi2 + (ratio / (1.0 - ratio)) * (psi2 - psi1);
    Vector phi_x = phi2 + (ratio / (1.0 - ratio)) * (phi2 - phi1);
    const double np = psi_x.norm(), nq = phi_x.norm();
    if (np <= 0.5 || nq <= 0.5) continue;
    psi_x /= np;
    phi_x /= nq;
    const double extrapolated = product_expectation(W, {psi_x, phi_x});
    if (extrapolated < best) {
      best = extrapolated;
      psi = psi_x;
      phi = phi_x;
    }
  }
}

}  // namespace

std::vector<ProductVector> numeric_zero_search(const Matrix& W, int count,
                                               std::uint64_t seed) {
  const int n = local_dim(W, "numeric_zero_search");
  std::vector<ProductVector> found;
  for (int s = 0; s < count; ++s) {
    Rng rng(Rng::mix(seed, 7000 + static_cast<std::uint64_t>(s)));
    Vector psi = rng.unit_complex(n);
    Vector phi = rng.unit_complex(n);
    double value = std::numeric_limits<double>::infinity();
    double prev = value;
    for (int it = 0; it < 1500; ++it) {
      value = alternation_sweep(W, psi, phi);
      if (std::abs(prev - value) <= 1e-18) break;
      prev = value;
    }
    aitken_polish(W, psi, phi);
    const ProductVector pv{psi, phi};
    if (std::abs(product_expectation(W, pv)) > 1e-9) continue;
    bool duplicate = false;
    for (const ProductVector& kept : found)
      if (projective_distance(pv, kept) <= 1e-6) {
        duplicate = true;
        break;
      }
    if (!duplicate) found.push_back(pv);
  }
  return found;
}

}  // namespace witnesslab
