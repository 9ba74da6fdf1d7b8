#include "witnesslab/witness.hpp"

#include "witnesslab/bell.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace witnesslab {

namespace {

constexpr double kTol = 1e-12;
constexpr double kPi = std::numbers::pi;

void require_alpha(const AlphaVector& a, const char* who) {
  if (a.n < 2 || a.alpha.size() != a.n)
    throw std::invalid_argument(std::string(who) + ": malformed alpha vector");
}

bool near(double x, double y, double tol = kTol) { return std::abs(x - y) <= tol; }

}  // namespace

RealMatrix circulant(const AlphaVector& alpha) {
  require_alpha(alpha, "circulant");
  const int n = alpha.n;
  RealMatrix a(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) a(k, l) = alpha.alpha[mod(l - k, n)];
  return a;
}

AlphaValidation validate_alpha(const AlphaVector& alpha) {
  require_alpha(alpha, "validate_alpha");
  const int n = alpha.n;
  AlphaValidation report;
  report.sum_residual = std::abs(alpha.alpha.sum() - (n - 1));
  report.sum_ok = report.sum_residual <= kTol;
  const RealMatrix a = circulant(alpha);
  const RealMatrix gram = a * a.transpose();
  const RealMatrix target = RealMatrix::Identity(n, n) +
                            (n - 2) * RealMatrix::Ones(n, n);
  report.gram_residual = (gram - target).cwiseAbs().maxCoeff();
  report.gram_ok = report.gram_residual <= kTol;
  return report;
}

Matrix covariant_operator(const AlphaVector& alpha, double beta) {
  require_alpha(alpha, "covariant_operator");
  const int n = alpha.n;
  Matrix w = Matrix::Zero(static_cast<Eigen::Index>(n) * n,
                          static_cast<Eigen::Index>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      w(k * n + l, k * n + l) = alpha.alpha[mod(l - k, n)];
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (k != l) w(k * n + k, l * n + l) = beta;
  return w;
}

Matrix witness_compact_form(const WitnessSpec& spec) {
  require_alpha(spec.alpha, "witness_compact_form");
  const int n = spec.alpha.n;
  Matrix w = (spec.alpha.alpha[0] - spec.beta) * band_projector(n, 0);
  for (int k = 1; k < n; ++k) w += spec.alpha.alpha[k] * band_projector(n, k);
  const Vector plus = max_entangled(n);
  w += spec.beta * static_cast<double>(n) * (plus * plus.adjoint());
  return w;
}

Matrix witness_from_alpha(const WitnessSpec& spec) {
  const AlphaValidation check = validate_alpha(spec.alpha);
  if (!check.ok()) {
    std::ostringstream msg;
    msg << "witness_from_alpha: constraint violation (sum residual "
        << check.sum_residual << ", gram residual " << check.gram_residual
        << ")";
    throw std::invalid_argument(msg.str());
  }
  const Matrix w = covariant_operator(spec.alpha, spec.beta);
  const Matrix compact = witness_compact_form(spec);
  if (inf_norm(w - compact) > 1e-14)
    throw std::logic_error(
        "witness_from_alpha: band-projector form disagrees with the "
        "entrywise construction");
  return w;
}

AlphaVector family_params(const FamilyParam& p) {
  const double t = p.angle;
  AlphaVector out;
  switch (p.family) {
    case Family::ClassI: {
      if (t < -kTol || t > kPi + kTol)
        throw std::domain_error("family_params: theta outside [0,pi]");
      out.n = 4;
      out.alpha.resize(4);
      const double a = 0.5 * (2.0 - std::sin(t));
      const double b = 0.5 * (1.0 + std::cos(t));
      out.alpha << a, b, 2.0 - a, 1.0 - b;
      break;
    }
    case Family::ClassII: {
      if (t < -kTol || t > kPi + kTol)
        throw std::domain_error("family_params: theta outside [0,pi]");
      out.n = 4;
      out.alpha.resize(4);
      const double a = 0.5 * (1.0 + std::cos(t));
      const double b = 0.5 * (2.0 - std::sin(t));
      out.alpha << a, b, 1.0 - a, 2.0 - b;
      break;
    }
    case Family::N3: {
      if (t < -kTol || t >= 2.0 * kPi + kTol)
        throw std::domain_error("family_params: phi outside [0,2pi)");
      out.n = 3;
      out.alpha.resize(3);
      const double c = std::cos(t);
      const double s = std::sin(t);
      out.alpha << 2.0 * (1.0 + c) / 3.0,
          (2.0 - c - std::sqrt(3.0) * s) / 3.0,
          (2.0 - c + std::sqrt(3.0) * s) / 3.0;
      break;
    }
  }
  return out;
}

Matrix family_witness(const FamilyParam& p) {
  return witness_from_alpha(WitnessSpec{family_params(p), -1.0});
}

ClassTag class_membership(const AlphaVector& alpha) {
  require_alpha(alpha, "class_membership");
  if (alpha.n != 4)
    throw std::invalid_argument("class_membership: defined for n=4 only");
  const double a = alpha.alpha[0], b = alpha.alpha[1], c = alpha.alpha[2],
               d = alpha.alpha[3];
  if (near(a + c, 2.0) && near(b + d, 1.0)) return ClassTag::ClassI;
  if (near(a + c, 1.0) && near(b + d, 2.0)) return ClassTag::ClassII;
  return ClassTag::Neither;
}

std::string describe_endpoint(const FamilyParam& p) {
  switch (p.family) {
    case Family::ClassI:
      if (near(p.angle, 0.0, 1e-12)) return "choi-like:W[1,1,1,0]";
      if (near(p.angle, kPi, 1e-12)) return "choi-like:W[1,0,1,1]";
      if (near(p.angle, kPi / 2, 1e-12)) return "decomposable:W[1/2,1/2,3/2,1/2]";
      return "";
    case Family::ClassII:
      if (near(p.angle, 0.0, 1e-12)) return "decomposable:W[1,1,0,1]";
      if (near(p.angle, kPi, 1e-12)) return "reduction:W[0,1,1,1]";
      return "";
    case Family::N3: {
      const AlphaVector a = family_params(p);
      if (near(a.alpha[0], 1.0) && near(a.alpha[2], 0.0)) return "choi:W[1,1,0]";
      if (near(a.alpha[0], 1.0) && near(a.alpha[1], 0.0)) return "choi:W[1,0,1]";
      if (near(a.alpha[0], 0.0)) return "reduction-like:W[0,1,1]";
      return "";
    }
  }
  return "";
}

double parse_angle(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_angle: empty angle");
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size())
      throw std::invalid_argument("parse_angle: trailing characters in '" +
                                  text + "'");
    return value;
  }
  // [coef] "pi" [ "/" divisor ]
  double coef = 1.0;
  const std::string head = text.substr(0, pos);
  if (!head.empty()) {
    std::size_t used = 0;
    coef = std::stod(head, &used);
    if (used != head.size())
      throw std::invalid_argument("parse_angle: bad multiplier in '" + text +
                                  "'");
  }
  double divisor = 1.0;
  std::string tail = text.substr(pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/')
      throw std::invalid_argument("parse_angle: expected '/' in '" + text +
                                  "'");
    tail = tail.substr(1);
    std::size_t used = 0;
    divisor = std::stod(tail, &used);
    if (used != tail.size() || divisor == 0.0)
      throw std::invalid_argument("parse_angle: bad divisor in '" + text + "'");
  }
  return coef * kPi / divisor;
}

namespace {

std::pair<std::string, std::string> split_once(const std::string& text,
                                               char sep) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) return {text, ""};
  return {text.substr(0, pos), text.substr(pos + 1)};
}

double parse_keyed_angle(const std::string& payload, const std::string& key,
                         const std::string& descriptor) {
  const auto [k, v] = split_once(payload, '=');
  if (k != key || v.empty())
    throw std::invalid_argument("parse_descriptor: expected '" + key +
                                "=<angle>' in '" + descriptor + "'");
  return parse_angle(v);
}

}  // namespace

Descriptor parse_descriptor(const std::string& text) {
  Descriptor d;
  d.text = text;
  const auto [name, payload] = split_once(text, ':');
  if (name == "classI") {
    d.kind = Descriptor::Kind::Family;
    d.family = {Family::ClassI, parse_keyed_angle(payload, "theta", text)};
  } else if (name == "classII") {
    d.kind = Descriptor::Kind::Family;
    d.family = {Family::ClassII, parse_keyed_angle(payload, "theta", text)};
  } else if (name == "n3") {
    d.kind = Descriptor::Kind::Family;
    d.family = {Family::N3, parse_keyed_angle(payload, "phi", text)};
  } else if (name == "identity") {
    const auto [k, v] = split_once(payload, '=');
    if (k != "n" || v.empty())
      throw std::invalid_argument("parse_descriptor: expected 'n=<dim>' in '" +
                                  text + "'");
    d.kind = Descriptor::Kind::Identity;
    d.identity_n = std::stoi(v);
    if (d.identity_n < 2)
      throw std::invalid_argument("parse_descriptor: identity dim < 2");
  } else if (name == "alpha") {
    d.kind = Descriptor::Kind::Alpha;
    std::vector<double> values;
    std::string rest = payload;
    while (!rest.empty()) {
      const auto [head, tail] = split_once(rest, ',');
      values.push_back(std::stod(head));
      rest = tail;
    }
    if (values.size() < 2)
      throw std::invalid_argument("parse_descriptor: alpha needs >= 2 entries");
    d.alpha.n = static_cast<int>(values.size());
    d.alpha.alpha =
        Eigen::Map<const RealVector>(values.data(), values.size());
  } else {
    throw std::invalid_argument("parse_descriptor: unknown family '" + name +
                                "' (expected classI, classII, n3, alpha, "
                                "identity)");
  }
  return d;
}

std::string format_family_descriptor(const FamilyParam& p) {
  std::ostringstream out;
  out.precision(17);
  switch (p.family) {
    case Family::ClassI:
      out << "classI:theta=" << p.angle;
      break;
    case Family::ClassII:
      out << "classII:theta=" << p.angle;
      break;
    case Family::N3:
      out << "n3:phi=" << p.angle;
      break;
  }
  return out.str();
}

Matrix descriptor_operator(const Descriptor& d) {
  switch (d.kind) {
    case Descriptor::Kind::Family:
      return family_witness(d.family);
    case Descriptor::Kind::Identity:
      return Matrix::Identity(
          static_cast<Eigen::Index>(d.identity_n) * d.identity_n,
          static_cast<Eigen::Index>(d.identity_n) * d.identity_n);
    case Descriptor::Kind::Alpha:
      return witness_from_alpha(WitnessSpec{d.alpha, -1.0});
  }
  throw std::logic_error("descriptor_operator: unreachable");
}

}  // namespace witnesslab
