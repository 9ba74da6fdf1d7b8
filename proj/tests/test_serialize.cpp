#include "witnesslab/serialize.hpp"

#include "test_util.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

using namespace witnesslab;
using wtest::max_abs_diff;
using wtest::random_matrix;

namespace {
constexpr double PI = std::numbers::pi;
}

TEST_SUITE("serialize") {

TEST_CASE("matrix json round trip") {
  Rng rng(71);
  const Matrix m = random_matrix(rng, 3, 5);
  const Json j = matrix_json(m);
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 5);
  CHECK(j.at("re").size() == 15);
  CHECK(max_abs_diff(matrix_from_json(j), m) == 0.0);
  const Vector v = rng.unit_complex(4);
  CHECK(max_abs_diff(Matrix(vector_from_json(vector_json(v))), Matrix(v)) ==
        0.0);
  CHECK_THROWS_AS(vector_from_json(matrix_json(m)), std::invalid_argument);
}

TEST_CASE("row-major flattening") {
  Matrix m(2, 2);
  m << Complex(1, 5), Complex(2, 6), Complex(3, 7), Complex(4, 8);
  const Json j = matrix_json(m);
  CHECK(j.at("re") == Json::array({1.0, 2.0, 3.0, 4.0}));
  CHECK(j.at("im") == Json::array({5.0, 6.0, 7.0, 8.0}));
}

TEST_CASE("report payloads carry schema tags") {
  const Matrix w = family_witness({Family::ClassI, 1.0});
  const CertReport cert = seesaw_minimize(w, SeesawOptions{10, 30, 72});
  CHECK(cert_report_json(cert).at("schema") == "witnesslab/cert/1");
  const SpanReport span = span_analysis(
      zero_locus_families({Family::ClassI, 1.0}, false, 40, 7), 1e-8, "t");
  CHECK(span_report_json(span).at("schema") == "witnesslab/span/1");
  CHECK(span_report_json(span).at("rank") == 15);
  CHECK(decomposition_json(verify_classI_decomposition()).at("ok") == true);
}

TEST_CASE("payload serialization is byte deterministic") {
  const Matrix w = family_witness({Family::ClassII, 0.7});
  const std::string a =
      cert_report_json(seesaw_minimize(w, SeesawOptions{15, 40, 73})).dump();
  const std::string b =
      cert_report_json(seesaw_minimize(w, SeesawOptions{15, 40, 73})).dump();
  CHECK(a == b);
}

TEST_CASE("checked-in certificate fixture matches the embedded patterns") {
  const std::string path =
      std::string(WITNESSLAB_SOURCE_DIR) + "/data/certificates.json";
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing fixture: " << path);
  Json file;
  in >> file;
  CHECK(file.at("schema") == "witnesslab/certificates/1");
  const Json embedded = certificates_json();
  CHECK(max_abs_diff(matrix_from_json(file.at("A")),
                     matrix_from_json(embedded.at("A"))) == 0.0);
  CHECK(max_abs_diff(matrix_from_json(file.at("B")),
                     matrix_from_json(embedded.at("B"))) == 0.0);
  for (const char* key : {"Psi", "Psi1", "Psi2"})
    CHECK(max_abs_diff(Matrix(vector_from_json(file.at(key))),
                       Matrix(vector_from_json(embedded.at(key)))) == 0.0);
}

TEST_CASE("optimality report serializes the optional sections") {
  OptimalityOptions opts;
  opts.seesaw = SeesawOptions{20, 40, 74};
  opts.run_bisection = false;
  const Json j = optimality_report_json(optimality_report({Family::ClassII, PI}, opts));
  CHECK(j.at("schema") == "witnesslab/optimality/1");
  CHECK(j.at("endpoint") == "reduction:W[0,1,1,1]");
  CHECK(j.at("span").at("rank") == 16);
  CHECK_FALSE(j.contains("optimization"));
}

}  // TEST_SUITE
