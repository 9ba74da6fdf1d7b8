#pragma once
// JSON interchange. Matrices and vectors serialize as
// {"rows": r, "cols": c, "re": [...], "im": [...]} with row-major
// flattening; report payloads carry a versioned "schema" tag. Serialization
// is deterministic: identical values produce identical bytes.

#include "witnesslab/bell.hpp"
#include "witnesslab/optimality.hpp"
#include "witnesslab/positivity.hpp"
#include "witnesslab/tensor.hpp"
#include "witnesslab/witness.hpp"

#include "json.hpp"

#include <string>

namespace witnesslab {

using Json = nlohmann::json;

Json matrix_json(const Matrix& m);
Json matrix_json(const RealMatrix& m);
Json vector_json(const Vector& v);
Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);

Json alpha_json(const AlphaVector& a);
Json validation_json(const AlphaValidation& v);
Json cert_report_json(const CertReport& r);
Json span_report_json(const SpanReport& r);
Json optimize_report_json(const OptimizeReport& r);
Json decomposition_json(const DecompositionReport& r);
Json polar_inequality_json(const PolarInequality& r);
Json det_terms_json(const DetTerms& t);
Json probe_json(const ProbeDetResult& r);
Json probe_grid_json(const ProbeGridReport& r);
Json optimality_report_json(const OptimalityReport& r);
Json bell_decomposition_json(const BellDecomposition& d);

std::string family_name(Family f);
std::string class_tag_name(ClassTag t);
std::string verdict_name(Verdict v);

// Certificate fixture document: matrices A, B and the vectors Psi, Psi1,
// Psi2 used by the decomposition checks.
Json certificates_json();

}  // namespace witnesslab
