#include "witnesslab/optimality.hpp"

#include "witnesslab/bell.hpp"
#include "witnesslab/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace witnesslab {

namespace {

constexpr double kPi = std::numbers::pi;

struct Entry {
  int row;
  int col;
  double value;
};

// 16x16 certificate for the class I decomposition at theta = pi/2,
// stored as twice the actual entries (the matrix is this pattern times 1/2).
constexpr Entry kClassIPattern[] = {
    {1, 1, 1},   {1, 4, -1},  {4, 1, -1},  {4, 4, 1},    //
    {2, 2, 3},   {2, 8, -3},  {8, 2, -3},  {8, 8, 3},    //
    {3, 3, 1},   {3, 12, -1}, {12, 3, -1}, {12, 12, 1},  //
    {6, 6, 1},   {6, 9, -1},  {9, 6, -1},  {9, 9, 1},    //
    {7, 7, 3},   {7, 13, -3}, {13, 7, -3}, {13, 13, 3},  //
    {11, 11, 1}, {11, 14, -1}, {14, 11, -1}, {14, 14, 1}};

// 16x16 certificate for the class II decomposition at theta = 0.
constexpr Entry kClassIIPattern[] = {
    {1, 1, 1},   {1, 4, -1},  {4, 1, -1},  {4, 4, 1},    //
    {3, 3, 1},   {3, 12, -1}, {12, 3, -1}, {12, 12, 1},  //
    {6, 6, 1},   {6, 9, -1},  {9, 6, -1},  {9, 9, 1},    //
    {11, 11, 1}, {11, 14, -1}, {14, 11, -1}, {14, 14, 1}};

}  // namespace

Vector classI_subtraction_vector() {
  Vector v = Vector::Zero(16);
  for (int j = 0; j < 4; ++j) v[j * 4 + j] = (j % 2 == 0) ? -0.5 : 0.5;
  return v;
}

Matrix subtract_rank1(const Matrix& W, const SubtractionProbe& probe) {
  if (W.rows() != probe.psi.size() || W.cols() != probe.psi.size())
    throw std::invalid_argument("subtract_rank1: dimension mismatch");
  return W - probe.lambda * (probe.psi * probe.psi.adjoint());
}

RealMatrix classI_certificate_matrix() {
  RealMatrix a = RealMatrix::Zero(16, 16);
  for (const Entry& e : kClassIPattern) a(e.row, e.col) = 0.5 * e.value;
  return a;
}

RealMatrix classII_certificate_matrix() {
  RealMatrix b = RealMatrix::Zero(16, 16);
  for (const Entry& e : kClassIIPattern) b(e.row, e.col) = e.value;
  return b;
}

Vector classII_pair_vector(int which) {
  Vector v = Vector::Zero(16);
  const double amp = 1.0 / std::sqrt(2.0);
  if (which == 1) {
    v[0] = amp;
    v[10] = -amp;
  } else if (which == 2) {
    v[5] = amp;
    v[15] = -amp;
  } else {
    throw std::invalid_argument("classII_pair_vector: which must be 1 or 2");
  }
  return v;
}

namespace {

DecompositionReport decomposition_report(const std::string& name,
                                         const Matrix& residual,
                                         const RealMatrix& psd_part) {
  DecompositionReport report;
  report.name = name;
  report.residual_inf = inf_norm(residual);
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(psd_part);
  report.min_eigenvalue = solver.eigenvalues()[0];
  report.ok = report.residual_inf <= 1e-12 && report.min_eigenvalue >= -1e-12;
  return report;
}

}  // namespace

DecompositionReport verify_classI_decomposition() {
  const Matrix w = family_witness({Family::ClassI, kPi / 2});
  const Vector psi = classI_subtraction_vector();
  const RealMatrix a = classI_certificate_matrix();
  const Matrix residual =
      w - 2.0 * (psi * psi.adjoint()) -
      partial_transpose(a.cast<Complex>(), 4);
  return decomposition_report("W_I(pi/2) = 2P + A^Gamma", residual, a);
}

DecompositionReport verify_classII_decomposition() {
  AlphaVector alpha;
  alpha.n = 4;
  alpha.alpha.resize(4);
  alpha.alpha << 1, 1, 0, 1;
  const Matrix w = witness_from_alpha({alpha, -1.0});
  const RealMatrix b = classII_certificate_matrix();
  const Vector p1 = classII_pair_vector(1);
  const Vector p2 = classII_pair_vector(2);
  const Matrix residual = w - partial_transpose(b.cast<Complex>(), 4) -
                          2.0 * (p1 * p1.adjoint()) -
                          2.0 * (p2 * p2.adjoint());
  return decomposition_report("W[1,1,0,1] = B^Gamma + 2(P1+P2)", residual, b);
}

OptimizeReport lambda_star_bisect(const FamilyParam& p, const Vector& probe_dir,
                                  double tol,
                                  const SeesawOptions& certifier) {
  if (p.family != Family::ClassI)
    throw std::invalid_argument("lambda_star_bisect: class I families only");
  if (tol <= 0.0) throw std::invalid_argument("lambda_star_bisect: tol <= 0");
  const Matrix w = family_witness(p);
  if (probe_dir.size() != w.rows())
    throw std::invalid_argument("lambda_star_bisect: probe dimension mismatch");
  const Vector psi = probe_dir / probe_dir.norm();
  const Matrix proj = psi * psi.adjoint();

  OptimizeReport report;
  report.theta = p.angle;
  report.certifier = certifier;

  int query = 0;
  const auto feasible = [&](double lam) {
    SeesawOptions opts = certifier;
    opts.seed = Rng::mix(certifier.seed, static_cast<std::uint64_t>(query++));
    const CertReport cert = seesaw_minimize(w - lam * proj, opts);
    report.trace.emplace_back(lam, cert.min_value);
    return cert.verdict == Verdict::BlockPositiveHeuristic;
  };

  double lo = 0.0;
  double hi = 4.0;
  if (!feasible(lo))
    throw std::runtime_error(
        "lambda_star_bisect: certifier inconsistency, the witness itself was "
        "certified non block positive");
  if (feasible(hi))
    throw std::runtime_error(
        "lambda_star_bisect: certifier inconsistency, the upper bracket "
        "passed block positivity");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
    ++report.bisection_steps;
  }

  // monotone feasibility across the whole trace
  double max_feasible = -std::numeric_limits<double>::infinity();
  double min_infeasible = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.trace.size(); ++i) {
    const auto& [lam, value] = report.trace[i];
    if (value < -certifier.certify_tol)
      min_infeasible = std::min(min_infeasible, lam);
    else
      max_feasible = std::max(max_feasible, lam);
  }
  if (max_feasible >= min_infeasible)
    throw std::runtime_error(
        "lambda_star_bisect: certifier inconsistency, non-monotone "
        "feasibility trace");

  report.lambda_star = lo;
  report.bracket_lo = lo;
  report.bracket_hi = hi;

  // spanning rank after subtracting the feasible end: numerically harvested
  // zeros plus the analytic zero locus of the unsubtracted witness (the
  // latter is orthogonal to the probe direction, so it survives subtraction)
  const Matrix w_star = w - lo * proj;
  std::vector<ProductVector> zeros =
      zero_locus_families(p, false, 40, certifier.seed);
  const std::vector<ProductVector> found =
      numeric_zero_search(w_star, 160, Rng::mix(certifier.seed, 0xbeef));
  zeros.insert(zeros.end(), found.begin(), found.end());
  report.post_subtraction_span_rank =
      span_analysis(zeros, 1e-8, "post-subtraction zero locus").rank;
  return report;
}

ModuliSplit ModuliSplit::from_moduli_sq(const std::array<double, 4>& X) {
  ModuliSplit s;
  s.x0p = X[0] + X[2];
  s.x0m = X[0] - X[2];
  s.x1p = X[1] + X[3];
  s.x1m = X[1] - X[3];
  return s;
}

std::array<double, 4> ModuliSplit::to_moduli_sq() const {
  return {0.5 * (x0p + x0m), 0.5 * (x1p + x1m), 0.5 * (x0p - x0m),
          0.5 * (x1p - x1m)};
}

double classI_factorized_determinant(double theta,
                                     const std::array<double, 4>& moduli) {
  if (theta < 0.0 || theta > kPi)
    throw std::domain_error("classI_factorized_determinant: theta outside [0,pi]");
  std::array<double, 4> X{};
  for (int i = 0; i < 4; ++i) {
    if (moduli[static_cast<std::size_t>(i)] < 0.0)
      throw std::domain_error("classI_factorized_determinant: negative modulus");
    X[static_cast<std::size_t>(i)] =
        moduli[static_cast<std::size_t>(i)] * moduli[static_cast<std::size_t>(i)];
  }
  const AlphaVector alpha = family_params({Family::ClassI, theta});
  const double a = alpha.alpha[0], b = alpha.alpha[1], c = alpha.alpha[2],
               d = alpha.alpha[3];
  std::array<double, 4> y{};
  for (int k = 0; k < 4; ++k) {
    y[static_cast<std::size_t>(k)] = (1.0 + a) * X[static_cast<std::size_t>(k)] +
                                     b * X[static_cast<std::size_t>((k + 1) % 4)] +
                                     c * X[static_cast<std::size_t>((k + 2) % 4)] +
                                     d * X[static_cast<std::size_t>((k + 3) % 4)];
    if (y[static_cast<std::size_t>(k)] <= 0.0)
      throw std::domain_error(
          "classI_factorized_determinant: degenerate input, y_" +
          std::to_string(k) + " vanishes");
  }
  const double yprod = y[0] * y[1] * y[2] * y[3];
  double linear = 0.0;
  for (int k = 0; k < 4; ++k)
    linear += X[static_cast<std::size_t>(k)] * yprod / y[static_cast<std::size_t>(k)];
  const double pairs = X[0] * X[1] * y[2] * y[3] + X[1] * X[2] * y[3] * y[0] +
                       X[2] * X[3] * y[0] * y[1] + X[3] * X[0] * y[1] * y[2];
  return yprod - 1.5 * linear + 2.0 * pairs;
}

PolarInequality classI_polar_inequality(double theta, double phi) {
  if (theta < 0.0 || theta > kPi)
    throw std::domain_error("classI_polar_inequality: theta outside [0,pi]");
  if (phi < 0.0 || phi > kPi / 2)
    throw std::domain_error("classI_polar_inequality: phi outside [0,pi/2]");
  PolarInequality out;
  const double delta = 2.0 * phi - theta;
  out.main_lhs = 2.0 + 2.0 * std::abs(std::sin(2.0 * phi)) -
                 std::sin(4.0 * phi - theta) -
                 (2.0 + std::sin(theta)) * std::cos(delta) * std::cos(delta);
  out.organized_lhs =
      std::sin(delta) * std::sin(delta) *
          (2.0 - std::cos(2.0 * phi) * std::sin(delta)) +
      std::sin(2.0 * phi) *
          (2.0 - std::cos(delta) - std::pow(std::cos(delta), 3));
  const double wrapped = std::remainder(delta, kPi);
  out.saturated = std::abs(wrapped) <= 1e-9;
  return out;
}

DetTerms classII_determinant_terms(double theta,
                                   const std::array<double, 4>& X) {
  if (theta < 0.0 || theta > kPi)
    throw std::domain_error("classII_determinant_terms: theta outside [0,pi]");
  for (double x : X)
    if (x < 0.0)
      throw std::domain_error("classII_determinant_terms: negative moduli");
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double h = 0.5 * (1.0 + c);
  const double g = 0.5 * s;
  const double u = X[0] - X[2];
  const double w = X[1] - X[3];
  const double p = X[0] + X[2];
  const double q = X[1] + X[3];
  const double total = p + q;
  const double a0 = h * u - g * w;
  const double a1 = h * w + g * u;
  DetTerms terms;
  terms.S1 = h * h * std::pow(g * (u * u - w * w) + c * u * w, 2);
  terms.S2 = a0 * a0 * (q * total - w * a1);
  terms.S3 = a1 * a1 * (p * total - u * a0);
  return terms;
}

// ---------------------------------------------------------------------------
// Probe determinants in extended precision. Double rounding is not enough to
// resolve determinants of order 1e-16 and below, so the 4x4 determinant and
// the polynomial interpolation run in __float128.

namespace {

using Quad = __float128;

struct QComplex {
  Quad re;
  Quad im;
};

QComplex qc(double re, double im = 0.0) { return {Quad(re), Quad(im)}; }

QComplex operator+(const QComplex& a, const QComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
QComplex operator-(const QComplex& a, const QComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
QComplex operator*(const QComplex& a, const QComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QComplex operator*(Quad a, const QComplex& b) { return {a * b.re, a * b.im}; }

Quad qsqrt(Quad v) {
  if (v <= 0) return 0;
  Quad x = Quad(std::sqrt(static_cast<double>(v)));
  for (int i = 0; i < 4; ++i) x = Quad(0.5) * (x + v / x);
  return x;
}

QComplex det3(const QComplex m[4][4], const int rows[3], const int cols[3]) {
  const QComplex a = m[rows[0]][cols[0]], b = m[rows[0]][cols[1]],
                 c = m[rows[0]][cols[2]];
  const QComplex d = m[rows[1]][cols[0]], e = m[rows[1]][cols[1]],
                 f = m[rows[1]][cols[2]];
  const QComplex g = m[rows[2]][cols[0]], h = m[rows[2]][cols[1]],
                 i = m[rows[2]][cols[2]];
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

QComplex det4(const QComplex m[4][4]) {
  QComplex acc = qc(0.0);
  const int all[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  for (int j = 0; j < 4; ++j) {
    const int rows[3] = {1, 2, 3};
    const QComplex minor = det3(m, rows, all[j]);
    const QComplex term = m[0][j] * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

struct ProbeContext {
  double theta;
  double k;
  Complex x;
  Complex y;
  bool permuted;
};

// Probe matrix Phi_theta(|psi><psi|) - lambda D_{x,y} o |psi><psi| at the
// probe vector psi(lambda); everything in __float128. The probe vector has
// one vanishing component (index 0, or index 1 after the x = 0 cyclic
// shift), so that row and column of the matrix reduce to a single positive
// diagonal entry.
struct ProbeMatrix {
  QComplex m[4][4];
  int spectator;  // index of the probe's vanishing component
};

ProbeMatrix probe_matrix(const ProbeContext& ctx, Quad lambda) {
  const double st2 = std::sin(ctx.theta / 2.0);
  const double ct2 = std::cos(ctx.theta / 2.0);
  const double s = std::sin(ctx.theta);
  const double c = std::cos(ctx.theta);

  Quad psi[4];
  psi[0] = 0;
  psi[1] = 1;
  psi[2] = qsqrt(Quad(2.0 * ctx.k * st2) * lambda);
  psi[3] = Quad(1.0) + Quad(ctx.k * ct2) * lambda;
  int spectator = 0;
  if (ctx.permuted) {
    // cyclic shift down by one entry: (psi3, psi0, psi1, psi2)
    const Quad shifted[4] = {psi[3], psi[0], psi[1], psi[2]};
    for (int i = 0; i < 4; ++i) psi[i] = shifted[i];
    spectator = 1;
  }

  Quad X[4];
  for (int i = 0; i < 4; ++i) X[i] = psi[i] * psi[i];

  // the half-ulp rounding of coefficients like (1-c)/2 would otherwise leak
  // a lambda-independent offset into determinants of order 1e-16
  const Quad sq = Quad(s), cq = Quad(c);
  const Quad coef[4] = {(Quad(3) + cq) / 2, (Quad(2) - sq) / 2,
                        (Quad(1) - cq) / 2, (Quad(2) + sq) / 2};
  Quad yv[4];
  for (int j = 0; j < 4; ++j) {
    yv[j] = 0;
    for (int l = 0; l < 4; ++l) yv[j] = yv[j] + coef[l] * X[(j + l) % 4];
  }

  QComplex d[4][4];
  const Complex xx = ctx.x, yy = ctx.y;
  const Complex entries[4][4] = {
      {std::norm(xx), xx * std::conj(yy), -std::norm(xx), -xx * std::conj(yy)},
      {yy * std::conj(xx), std::norm(yy), -yy * std::conj(xx), -std::norm(yy)},
      {-std::norm(xx), -xx * std::conj(yy), std::norm(xx), xx * std::conj(yy)},
      {-yy * std::conj(xx), -std::norm(yy), yy * std::conj(xx), std::norm(yy)}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      d[i][j] = qc(entries[i][j].real(), entries[i][j].imag());

  ProbeMatrix out;
  out.spectator = spectator;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      QComplex weight = qc(1.0) + lambda * d[i][j];
      QComplex value = qc(0.0) - (psi[i] * psi[j]) * weight;
      if (i == j) value.re = value.re + yv[i];
      out.m[i][j] = value;
    }
  return out;
}

Quad probe_det_value(const ProbeContext& ctx, Quad lambda) {
  return det4(probe_matrix(ctx, lambda).m).re;
}

// Determinant of the probe matrix with the spectator row/column removed;
// the full determinant is this times the spectator diagonal entry (which
// stays near 2). The cubic coefficient of the reduced determinant equals
// 8 k^2 (k sin(t/2) cos^2(t/2) - |x|^2 sin^2(t/2)).
Quad probe_reduced_value(const ProbeContext& ctx, Quad lambda) {
  const ProbeMatrix pm = probe_matrix(ctx, lambda);
  int rows[3];
  int next = 0;
  for (int i = 0; i < 4; ++i)
    if (i != pm.spectator) rows[next++] = i;
  return det3(pm.m, rows, rows).re;
}

}  // namespace

ProbeDetResult classII_probe_determinant(double theta, double lambda, double k,
                                         Complex x, Complex y) {
  if (theta <= 0.0 || theta >= kPi)
    throw std::domain_error("classII_probe_determinant: theta outside (0,pi)");
  if (k <= 0.0) throw std::domain_error("classII_probe_determinant: k <= 0");
  if (lambda < 0.0)
    throw std::domain_error("classII_probe_determinant: lambda < 0");
  if (std::abs(std::norm(x) + std::norm(y) - 1.0) > 1e-12)
    throw std::domain_error(
        "classII_probe_determinant: |x|^2 + |y|^2 must equal 1");

  ProbeContext ctx{theta, k, x, y, std::abs(x) < 1e-15};

  ProbeDetResult out;
  out.permuted = ctx.permuted;
  out.det = static_cast<double>(probe_det_value(ctx, Quad(lambda)));

  // exact polynomial interpolation of the reduced determinant over lambda
  // nodes (Newton form)
  constexpr int kNodes = 12;
  Quad nodes[kNodes];
  Quad values[kNodes];
  for (int j = 0; j < kNodes; ++j) {
    nodes[j] = Quad(0.02) * Quad(j + 1);
    values[j] = probe_reduced_value(ctx, nodes[j]);
  }
  Quad divided[kNodes];
  for (int j = 0; j < kNodes; ++j) divided[j] = values[j];
  for (int level = 1; level < kNodes; ++level)
    for (int j = kNodes - 1; j >= level; --j)
      divided[j] = (divided[j] - divided[j - 1]) / (nodes[j] - nodes[j - level]);

  // Newton -> monomial coefficients
  Quad poly[kNodes] = {};
  poly[0] = divided[kNodes - 1];
  int degree_bound = 0;
  for (int i = kNodes - 2; i >= 0; --i) {
    for (int dpos = degree_bound + 1; dpos >= 1; --dpos)
      poly[dpos] = poly[dpos - 1] - nodes[i] * poly[dpos];
    poly[0] = divided[i] - nodes[i] * poly[0];
    ++degree_bound;
  }

  double coeffs[kNodes];
  double max_abs = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    coeffs[i] = static_cast<double>(poly[i]);
    max_abs = std::max(max_abs, std::abs(coeffs[i]));
  }
  out.leading_coeff = coeffs[3];
  out.poly_degree = 0;
  for (int i = 0; i < kNodes; ++i)
    if (std::abs(coeffs[i]) > 1e-20 * std::max(1.0, max_abs)) out.poly_degree = i;

  // held-out validation node
  const Quad probe_node = Quad(0.017);
  Quad fitted = 0;
  for (int i = kNodes - 1; i >= 0; --i) fitted = fitted * probe_node + poly[i];
  const Quad actual = probe_reduced_value(ctx, probe_node);
  const double denom = std::max(std::abs(static_cast<double>(actual)), 1e-300);
  out.fit_residual =
      std::abs(static_cast<double>(fitted - actual)) / denom;
  return out;
}

ProbeGridReport classII_probe_grid(double theta, int directions,
                                   double lambda) {
  if (directions < 1)
    throw std::invalid_argument("classII_probe_grid: directions < 1");
  ProbeGridReport report;
  report.theta = theta;
  report.directions = directions;
  report.max_det = -std::numeric_limits<double>::infinity();
  const double st2 = std::sin(theta / 2.0);
  const double ct2 = std::cos(theta / 2.0);
  for (int i = 0; i < directions; ++i) {
    const double mix = 0.3 + 0.25 * (i % 4);  // |x| stays away from 0
    const double chi = 2.0 * kPi * (i / 4) / std::max(1, (directions + 3) / 4);
    const Complex x = std::cos(mix);
    const Complex y = std::sin(mix) * Complex(std::cos(chi), std::sin(chi));
    // the magnitude-maximizing k with a negative cubic coefficient
    // 8k^2(k st2 ct2^2 - |x|^2 st2^2)
    const double k = (2.0 / 3.0) * std::norm(x) * st2 / (ct2 * ct2);
    const ProbeDetResult probe = classII_probe_determinant(theta, lambda, k, x, y);
    const double expected =
        8.0 * k * k * (k * st2 * ct2 * ct2 - std::norm(x) * st2 * st2);
    const double rel_err =
        std::abs(probe.leading_coeff - expected) / std::abs(expected);
    report.max_coeff_rel_err = std::max(report.max_coeff_rel_err, rel_err);
    report.max_det = std::max(report.max_det, probe.det);
    if (probe.det < -1e-18) ++report.negative_count;
  }
  report.all_negative = report.negative_count == report.directions;
  return report;
}

OptimalityReport optimality_report(const FamilyParam& p,
                                   const OptimalityOptions& opts) {
  OptimalityReport report;
  report.param = p;
  report.alpha = family_params(p);
  report.tag = report.alpha.n == 4 ? class_membership(report.alpha)
                                   : ClassTag::Neither;
  report.endpoint = describe_endpoint(p);

  const Matrix w = family_witness(p);
  report.witness_min_eigenvalue = hermitian_eigen(w).values[0];
  report.cert = seesaw_minimize(w, opts.seesaw);
  report.span = span_analysis(
      zero_locus_families(p, false, 40, opts.seesaw.seed), opts.span_rel_tol,
      format_family_descriptor(p) + " zero locus");
  const int full = report.alpha.n * report.alpha.n;
  report.spanning = report.span.rank == full;

  switch (p.family) {
    case Family::ClassI: {
      if (opts.run_bisection)
        report.optimization = lambda_star_bisect(
            p, classI_subtraction_vector(), opts.bisect_tol, opts.seesaw);
      report.optimized_span = span_analysis(
          zero_locus_families(p, true, 40, opts.seesaw.seed),
          opts.span_rel_tol, format_family_descriptor(p) + " optimized zero locus");
      if (std::abs(p.angle - kPi / 2) <= 1e-12)
        report.decomposition = verify_classI_decomposition();
      report.optimality = "not-optimal";
      break;
    }
    case Family::ClassII: {
      if (std::abs(p.angle) <= 1e-12) {
        report.decomposition = verify_classII_decomposition();
        report.optimality = "not-optimal";
      } else if (std::abs(p.angle - kPi) <= 1e-12) {
        report.optimality = "optimal";
      } else {
        report.probe = classII_probe_grid(p.angle, 12, 1e-4);
        report.optimality =
            report.probe->all_negative ? "optimal" : "consistent-with-optimal";
      }
      break;
    }
    case Family::N3: {
      report.optimality =
          report.spanning ? "optimal" : "consistent-with-optimal";
      break;
    }
  }
  return report;
}

}  // namespace witnesslab
