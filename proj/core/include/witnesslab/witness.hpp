#pragma once
// Circulant witness construction and the parametrized families: the n=3
// one-parameter family and the n=4 class I / class II families, with
// constraint validation and descriptor parsing for the CLI surface.

#include "witnesslab/tensor.hpp"

#include <optional>
#include <string>

namespace witnesslab {

struct AlphaVector {
  int n = 0;
  RealVector alpha;  // (alpha_0 .. alpha_{n-1})
};

struct AlphaValidation {
  bool sum_ok = false;   // |sum(alpha) - (n-1)| <= 1e-12
  bool gram_ok = false;  // ||A A^T - I - (n-2) J||_inf <= 1e-12
  double sum_residual = 0.0;
  double gram_residual = 0.0;
  bool ok() const { return sum_ok && gram_ok; }
};

struct WitnessSpec {
  AlphaVector alpha;
  double beta = -1.0;  // off-diagonal coupling; -1 for all witness families
};

enum class Family { ClassI, ClassII, N3 };

struct FamilyParam {
  Family family = Family::ClassI;
  double angle = 0.0;  // theta in [0,pi] for ClassI/II, phi in [0,2pi) for N3
};

enum class ClassTag { ClassI, ClassII, Neither };

// Circulant matrix A[k][l] = alpha[(l-k) mod n]; row k is the k-fold right
// cyclic shift of (alpha_0, ..., alpha_{n-1}). See docs/conventions.md for
// the orientation choice.
RealMatrix circulant(const AlphaVector& alpha);

AlphaValidation validate_alpha(const AlphaVector& alpha);

// Covariant operator sum_{k,l} A_{kl} |k><k| ⊗ |l><l| +
// beta * sum_{k!=l} |k><l| ⊗ |k><l|, with no witness guarantee.
Matrix covariant_operator(const AlphaVector& alpha, double beta);

// The witness of a validated alpha (throws std::invalid_argument with the
// residuals if validation fails). Cross-checked internally against the
// band-projector form to 1e-14.
Matrix witness_from_alpha(const WitnessSpec& spec);

// (alpha_0 - beta) Pi_0 + sum_{k>=1} alpha_k Pi_k + beta * n * P+_n
Matrix witness_compact_form(const WitnessSpec& spec);

// Family parametrizations:
//   ClassI : a = (2-sin t)/2, b = (1+cos t)/2, c = 2-a, d = 1-b,  t in [0,pi]
//   ClassII: a = (1+cos t)/2, b = (2-sin t)/2, c = 1-a, d = 2-b,  t in [0,pi]
//   N3     : a = 2(1+cos p)/3, b = (2-cos p-sqrt3 sin p)/3,
//            c = (2-cos p+sqrt3 sin p)/3,                         p in [0,2pi)
AlphaVector family_params(const FamilyParam& p);

Matrix family_witness(const FamilyParam& p);

// Classification of an n=4 coefficient vector by the linear splits
// a+c=2, b+d=1 (class I) and a+c=1, b+d=2 (class II), within 1e-12.
ClassTag class_membership(const AlphaVector& alpha);

// Human-readable tag for the named endpoints ("choi-like:W[1,1,1,0]",
// "reduction:W[0,1,1,1]", ...) or "" for generic parameters.
std::string describe_endpoint(const FamilyParam& p);

// Descriptor strings: "classI:theta=0.785", "classII:theta=pi",
// "n3:phi=pi/2", "alpha:1,1,1,0", "identity:n=4". Angles accept decimal
// literals and pi fractions ("pi", "pi/2", "3pi/4", "2pi").
struct Descriptor {
  enum class Kind { Family, Identity, Alpha };
  Kind kind = Kind::Family;
  FamilyParam family;
  int identity_n = 0;
  AlphaVector alpha;
  std::string text;
};

double parse_angle(const std::string& text);
Descriptor parse_descriptor(const std::string& text);
std::string format_family_descriptor(const FamilyParam& p);

// The operator a descriptor denotes: a family witness, an identity matrix,
// or the witness of an explicit alpha vector.
Matrix descriptor_operator(const Descriptor& d);

}  // namespace witnesslab
