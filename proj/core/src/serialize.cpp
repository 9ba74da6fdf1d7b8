#include "witnesslab/serialize.hpp"

#include <stdexcept>

namespace witnesslab {

namespace {

Json complex_parts(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  return Json{{"re", re}, {"im", im}};
}

Json product_vector_json(const ProductVector& pv) {
  return Json{{"psi", vector_json(pv.psi)}, {"phi", vector_json(pv.phi)}};
}

}  // namespace

Json matrix_json(const Matrix& m) {
  Json j = complex_parts(m);
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  return j;
}

Json matrix_json(const RealMatrix& m) { return matrix_json(Matrix(m.cast<Complex>())); }

Json vector_json(const Vector& v) { return matrix_json(Matrix(v)); }

Matrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != rows * cols ||
      static_cast<Eigen::Index>(im.size()) != rows * cols)
    throw std::invalid_argument("matrix_from_json: length mismatch");
  Matrix m(rows, cols);
  Eigen::Index flat = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++flat)
      m(i, j2) = Complex(re[flat].get<double>(), im[flat].get<double>());
  return m;
}

Vector vector_from_json(const Json& j) {
  const Matrix m = matrix_from_json(j);
  if (m.cols() != 1)
    throw std::invalid_argument("vector_from_json: expected a single column");
  return m.col(0);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::ClassI:
      return "classI";
    case Family::ClassII:
      return "classII";
    case Family::N3:
      return "n3";
  }
  return "?";
}

std::string class_tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::ClassI:
      return "classI";
    case ClassTag::ClassII:
      return "classII";
    case ClassTag::Neither:
      return "neither";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  return v == Verdict::BlockPositiveHeuristic ? "block-positive(heuristic)"
                                              : "not-block-positive(certified)";
}

Json alpha_json(const AlphaVector& a) {
  Json values = Json::array();
  for (int i = 0; i < a.n; ++i) values.push_back(a.alpha[i]);
  return Json{{"n", a.n}, {"alpha", values}};
}

Json validation_json(const AlphaValidation& v) {
  return Json{{"schema", "witnesslab/validation/1"},
              {"sum_ok", v.sum_ok},
              {"gram_ok", v.gram_ok},
              {"residuals",
               Json{{"sum", v.sum_residual}, {"gram", v.gram_residual}}}};
}

Json cert_report_json(const CertReport& r) {
  return Json{{"schema", "witnesslab/cert/1"},
              {"min_value", r.min_value},
              {"argmin", product_vector_json(r.argmin)},
              {"starts", r.starts},
              {"iterations_per_start", r.iterations_per_start},
              {"seed", r.seed},
              {"verdict", verdict_name(r.verdict)},
              {"tolerance", r.tolerance}};
}

Json span_report_json(const SpanReport& r) {
  return Json{{"schema", "witnesslab/span/1"},
              {"family_description", r.family_description},
              {"vector_count", r.vector_count},
              {"singular_values", r.singular_values},
              {"rank", r.rank},
              {"rel_tol", r.rel_tol}};
}

Json optimize_report_json(const OptimizeReport& r) {
  Json trace = Json::array();
  for (const auto& [lam, value] : r.trace)
    trace.push_back(Json{{"lambda", lam}, {"min_value", value}});
  return Json{{"schema", "witnesslab/optimize/1"},
              {"theta", r.theta},
              {"lambda_star", r.lambda_star},
              {"bracket", Json::array({r.bracket_lo, r.bracket_hi})},
              {"bisection_steps", r.bisection_steps},
              {"certifier",
               Json{{"starts", r.certifier.starts},
                    {"iterations_per_start", r.certifier.max_iters},
                    {"seed", r.certifier.seed},
                    {"certify_tol", r.certifier.certify_tol}}},
              {"post_subtraction_span_rank", r.post_subtraction_span_rank},
              {"trace", trace}};
}

Json decomposition_json(const DecompositionReport& r) {
  return Json{{"schema", "witnesslab/decomposition/1"},
              {"name", r.name},
              {"residual_inf", r.residual_inf},
              {"min_eigenvalue", r.min_eigenvalue},
              {"ok", r.ok}};
}

Json polar_inequality_json(const PolarInequality& r) {
  return Json{{"schema", "witnesslab/polar-inequality/1"},
              {"main_lhs", r.main_lhs},
              {"organized_lhs", r.organized_lhs},
              {"saturated", r.saturated}};
}

Json det_terms_json(const DetTerms& t) {
  return Json{{"schema", "witnesslab/det-terms/1"},
              {"S1", t.S1},
              {"S2", t.S2},
              {"S3", t.S3},
              {"sum", t.sum()}};
}

Json probe_json(const ProbeDetResult& r) {
  return Json{{"schema", "witnesslab/probe/1"},
              {"det", r.det},
              {"leading_coeff", r.leading_coeff},
              {"fit_residual", r.fit_residual},
              {"poly_degree", r.poly_degree},
              {"permuted", r.permuted}};
}

Json probe_grid_json(const ProbeGridReport& r) {
  return Json{{"schema", "witnesslab/probe-grid/1"},
              {"theta", r.theta},
              {"directions", r.directions},
              {"negative_count", r.negative_count},
              {"max_det", r.max_det},
              {"max_coeff_rel_err", r.max_coeff_rel_err},
              {"all_negative", r.all_negative}};
}

Json bell_decomposition_json(const BellDecomposition& d) {
  return Json{{"schema", "witnesslab/bell-decomposition/1"},
              {"table", matrix_json(d.table)},
              {"max_offdiag", d.max_offdiag}};
}

Json optimality_report_json(const OptimalityReport& r) {
  Json j{{"schema", "witnesslab/optimality/1"},
         {"family", family_name(r.param.family)},
         {"angle", r.param.angle},
         {"alpha", alpha_json(r.alpha)},
         {"class", class_tag_name(r.tag)},
         {"endpoint", r.endpoint},
         {"witness_min_eigenvalue", r.witness_min_eigenvalue},
         {"certification", cert_report_json(r.cert)},
         {"span", span_report_json(r.span)},
         {"spanning", r.spanning},
         {"optimality", r.optimality}};
  if (r.optimization) j["optimization"] = optimize_report_json(*r.optimization);
  if (r.optimized_span) j["optimized_span"] = span_report_json(*r.optimized_span);
  if (r.probe) j["probe_grid"] = probe_grid_json(*r.probe);
  if (r.decomposition) j["decomposition"] = decomposition_json(*r.decomposition);
  return j;
}

Json certificates_json() {
  return Json{{"schema", "witnesslab/certificates/1"},
              {"A", matrix_json(classI_certificate_matrix())},
              {"B", matrix_json(classII_certificate_matrix())},
              {"Psi", vector_json(classI_subtraction_vector())},
              {"Psi1", vector_json(classII_pair_vector(1))},
              {"Psi2", vector_json(classII_pair_vector(2))}};
}

}  // namespace witnesslab
