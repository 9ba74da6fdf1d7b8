// witnesslab: construct Bell-diagonal covariant witnesses, certify block
// positivity, analyze zero-locus spans, optimize by rank-one subtraction,
// verify decomposition certificates, and sweep the parametrized families.

#include "witnesslab/rng.hpp"
#include "witnesslab/serialize.hpp"
#include "witnesslab/version.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

using namespace witnesslab;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct OutputOptions {
  bool payload_only = false;
  std::string out_file;
};

int emit(const Json& payload, const std::vector<std::string>& argv,
         std::uint64_t seed, double wall_ms, const OutputOptions& out,
         int exit_code) {
  Json doc;
  if (out.payload_only) {
    doc = payload;
  } else {
    doc = Json{{"tool", "witnesslab"},
               {"version", kVersion},
               {"command", argv},
               {"seed", seed},
               {"wall_ms", wall_ms},
               {"payload", payload}};
  }
  const std::string text = doc.dump(2) + "\n";
  if (!out.out_file.empty()) {
    std::ofstream file(out.out_file);
    if (!file) {
      std::cerr << "witnesslab: cannot open " << out.out_file << "\n";
      return kExitUsage;
    }
    file << text;
  } else {
    std::cout << text;
  }
  return exit_code;
}

int thread_budget(int rows) {
  int budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget < 1) budget = 1;
  if (const char* env = std::getenv("WITNESSLAB_THREADS")) {
    const int capped = std::atoi(env);
    if (capped >= 1) budget = std::min(budget, capped);
  }
  return std::max(1, std::min(budget, rows));
}

Json descriptor_payload(const Descriptor& d, bool dump_matrix, double beta) {
  Json payload{{"schema", "witnesslab/witness/1"}, {"descriptor", d.text}};
  if (d.kind == Descriptor::Kind::Identity) {
    payload["kind"] = "identity";
    payload["n"] = d.identity_n;
    if (dump_matrix)
      payload["matrix"] = matrix_json(descriptor_operator(d));
    return payload;
  }
  const AlphaVector alpha = d.kind == Descriptor::Kind::Family
                                ? family_params(d.family)
                                : d.alpha;
  payload["kind"] = d.kind == Descriptor::Kind::Family ? "family" : "alpha";
  if (d.kind == Descriptor::Kind::Family) {
    payload["family"] = family_name(d.family.family);
    payload["angle"] = d.family.angle;
    payload["endpoint"] = describe_endpoint(d.family);
  }
  payload["alpha"] = alpha_json(alpha);
  payload["validation"] = validation_json(validate_alpha(alpha));
  if (alpha.n == 4) payload["class"] = class_tag_name(class_membership(alpha));
  const Matrix w = covariant_operator(alpha, beta);
  payload["beta"] = beta;
  payload["min_eigenvalue"] = hermitian_eigen(w).values[0];
  payload["bell_offdiag_residual"] = bell_coefficients(w, alpha.n).max_offdiag;
  if (dump_matrix) payload["matrix"] = matrix_json(w);
  return payload;
}

struct SweepRow {
  double angle = 0.0;
  AlphaVector alpha;
  double min_expectation = 0.0;
  int span_rank = 0;
  std::optional<double> lambda_star;
  std::string verdict;
};

SweepRow sweep_row(Family family, double angle, std::uint64_t seed, int starts,
                   bool optimize) {
  SweepRow row;
  row.angle = angle;
  const FamilyParam p{family, angle};
  row.alpha = family_params(p);
  const Matrix w = family_witness(p);
  SeesawOptions opts;
  opts.starts = starts;
  opts.max_iters = 80;
  opts.seed = seed;
  const CertReport cert = seesaw_minimize(w, opts);
  row.min_expectation = cert.min_value;
  row.verdict = verdict_name(cert.verdict);
  row.span_rank =
      span_analysis(zero_locus_families(p, false, 40, seed), 1e-8).rank;
  if (optimize && family == Family::ClassI) {
    SeesawOptions certifier = opts;
    certifier.starts = std::max(20, starts / 4);
    row.lambda_star = lambda_star_bisect(p, classI_subtraction_vector(), 1e-3,
                                         certifier)
                          .lambda_star;
  }
  return row;
}

std::string csv_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

int run_sweep(const std::string& family_name_arg, int points,
              std::uint64_t seed, int starts, bool skip_optimize,
              const std::string& format, const OutputOptions& out,
              const std::vector<std::string>& argv, double wall_start) {
  Family family;
  if (family_name_arg == "classI")
    family = Family::ClassI;
  else if (family_name_arg == "classII")
    family = Family::ClassII;
  else if (family_name_arg == "n3")
    family = Family::N3;
  else
    throw CLI::ValidationError("sweep",
                               "family must be classI, classII, or n3");

  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    if (family == Family::N3)
      grid[static_cast<std::size_t>(i)] = 2.0 * kPi * i / points;
    else
      grid[static_cast<std::size_t>(i)] = kPi * i / (points - 1);
  }

  std::vector<SweepRow> rows(grid.size());
  const int workers = thread_budget(points);
  std::size_t next = 0;
  std::mutex mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mutex);
          if (next >= grid.size()) return;
          i = next++;
        }
        rows[i] = sweep_row(family, grid[i], Rng::mix(seed, i), starts,
                            !skip_optimize);
      }
    });
  for (std::thread& t : pool) t.join();

  const double wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count() -
      wall_start;

  if (format == "csv") {
    std::ostringstream csv;
    csv << "theta,a,b,c,d,min_expectation,span_rank,lambda_star,verdict\n";
    for (const SweepRow& row : rows) {
      csv << csv_double(row.angle);
      for (int i = 0; i < 4; ++i)
        csv << ','
            << (i < row.alpha.n ? csv_double(row.alpha.alpha[i]) : "");
      csv << ',' << csv_double(row.min_expectation) << ',' << row.span_rank
          << ',' << (row.lambda_star ? csv_double(*row.lambda_star) : "")
          << ',' << row.verdict << '\n';
    }
    if (!out.out_file.empty()) {
      std::ofstream file(out.out_file);
      if (!file) {
        std::cerr << "witnesslab: cannot open " << out.out_file << "\n";
        return kExitUsage;
      }
      file << csv.str();
    } else {
      std::cout << csv.str();
    }
    return kExitOk;
  }

  Json payload{{"schema", "witnesslab/sweep/1"},
               {"family", family_name_arg},
               {"points", points},
               {"rows", Json::array()}};
  for (const SweepRow& row : rows) {
    Json r{{"theta", row.angle},
           {"alpha", alpha_json(row.alpha)},
           {"min_expectation", row.min_expectation},
           {"span_rank", row.span_rank},
           {"verdict", row.verdict}};
    if (row.lambda_star) r["lambda_star"] = *row.lambda_star;
    payload["rows"].push_back(r);
  }
  return emit(payload, argv, seed, wall_ms, out, kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-diagonal covariant entanglement witness laboratory"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  const std::vector<std::string> argv_echo(argv, argv + argc);
  const auto wall_start = std::chrono::steady_clock::now();
  const auto wall_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - wall_start)
        .count();
  };

  OutputOptions out;
  std::uint64_t seed = 20240814;
  int starts = 200;
  int iters = 120;
  double tol = 1e-4;
  app.add_flag("--payload-only", out.payload_only,
               "print only the payload JSON (deterministic for fixed seed)");
  app.add_option("--out", out.out_file, "write output to a file");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--starts", starts, "see-saw multi-start count");
  app.add_option("--iters", iters, "see-saw iterations per start");
  app.add_option("--tol", tol, "bisection tolerance");

  // ---- witness
  auto* witness_cmd =
      app.add_subcommand("witness", "construct and validate a witness");
  std::string witness_descriptor;
  bool dump_matrix = false;
  double beta = -1.0;
  witness_cmd->add_option("descriptor", witness_descriptor,
                          "family descriptor, e.g. classI:theta=pi/2")
      ->required();
  witness_cmd->add_flag("--dump-matrix", dump_matrix, "include the full matrix");
  witness_cmd->add_option("--beta", beta,
                          "off-diagonal coupling (diagnostic; -1 for the "
                          "witness families)");

  // ---- certify
  auto* certify_cmd = app.add_subcommand(
      "certify", "see-saw block positivity certification");
  std::string certify_descriptor;
  double subtract_lambda = 0.0;
  certify_cmd->add_option("descriptor", certify_descriptor)->required();
  certify_cmd->add_option("--subtract-lambda", subtract_lambda,
                          "subtract this multiple of the class I probe "
                          "projector before certifying");

  // ---- span
  auto* span_cmd =
      app.add_subcommand("span", "zero-locus spanning analysis");
  std::string span_descriptor;
  bool optimized = false;
  bool with_search = false;
  int span_count = 40;
  double rel_tol = 1e-8;
  span_cmd->add_option("descriptor", span_descriptor)->required();
  span_cmd->add_flag("--optimized", optimized,
                     "use the zero families of the optimized witness");
  span_cmd->add_flag("--with-search", with_search,
                     "union numerically harvested zeros into the family");
  span_cmd->add_option("--count", span_count, "minimum family size");
  span_cmd->add_option("--rel-tol", rel_tol, "singular value threshold");

  // ---- optimize
  auto* optimize_cmd = app.add_subcommand(
      "optimize", "bisection for the maximal class I subtraction");
  std::string optimize_descriptor;
  optimize_cmd->add_option("descriptor", optimize_descriptor)->required();

  // ---- verify-cert
  auto* verify_cmd = app.add_subcommand(
      "verify-cert", "verify the decomposition certificates");
  std::string export_file;
  verify_cmd->add_option("--export", export_file,
                         "write the certificate fixture JSON to a file");

  // ---- appendix evaluators
  auto* appendix_cmd = app.add_subcommand(
      "appendix", "analytic determinant and inequality evaluators");
  appendix_cmd->require_subcommand(1);
  auto* ineq_cmd = appendix_cmd->add_subcommand(
      "ineq", "polar inequality forms for the class I optimization");
  std::string ineq_theta = "pi/2", ineq_phi = "pi/4";
  int ineq_grid = 0;
  ineq_cmd->add_option("--theta", ineq_theta, "angle (decimal or pi literal)");
  ineq_cmd->add_option("--phi", ineq_phi, "angle (decimal or pi literal)");
  ineq_cmd->add_option("--grid", ineq_grid,
                       "evaluate on an N x N grid instead of a single point");
  auto* det1_cmd = appendix_cmd->add_subcommand(
      "class1-det", "factorized vs dense determinant for class I");
  int det_samples = 1000;
  det1_cmd->add_option("--samples", det_samples);
  auto* det2_cmd = appendix_cmd->add_subcommand(
      "class2-det", "determinant term decomposition for class II");
  det2_cmd->add_option("--samples", det_samples);
  auto* probe_cmd = appendix_cmd->add_subcommand(
      "probe", "class II subtraction probe determinant");
  std::string probe_theta = "pi/2";
  double probe_k = 0.1, probe_lambda = 1e-4;
  std::pair<double, double> probe_x{1.0, 0.0}, probe_y{0.0, 0.0};
  int probe_grid = 0;
  probe_cmd->add_option("--theta", probe_theta, "angle (decimal or pi literal)");
  probe_cmd->add_option("--k", probe_k);
  probe_cmd->add_option("--lambda", probe_lambda);
  probe_cmd->add_option("--x", probe_x, "re and im of the first pair weight");
  probe_cmd->add_option("--y", probe_y, "re and im of the second pair weight");
  probe_cmd->add_option("--grid", probe_grid,
                        "sweep this many probe directions instead");

  // ---- sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "row-per-angle family sweep (CSV or JSON)");
  std::string sweep_family;
  int sweep_points = 17;
  std::string sweep_format = "csv";
  bool skip_optimize = false;
  sweep_cmd->add_option("family", sweep_family, "classI | classII | n3")
      ->required();
  sweep_cmd->add_option("--points", sweep_points)->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--format", sweep_format)
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--skip-optimize", skip_optimize,
                      "skip the per-row lambda* bisection");

  // global flags (--seed, --payload-only, ...) may follow any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; }))
      enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (*witness_cmd) {
      const Descriptor d = parse_descriptor(witness_descriptor);
      const Json payload = descriptor_payload(d, dump_matrix, beta);
      const bool valid =
          d.kind == Descriptor::Kind::Identity ||
          (payload.at("validation").at("sum_ok").get<bool>() &&
           payload.at("validation").at("gram_ok").get<bool>());
      return emit(payload, argv_echo, seed, wall_ms(), out,
                  valid ? kExitOk : kExitUsage);
    }

    if (*certify_cmd) {
      const Descriptor d = parse_descriptor(certify_descriptor);
      Matrix w = descriptor_operator(d);
      if (subtract_lambda != 0.0) {
        if (w.rows() != 16)
          throw std::invalid_argument(
              "certify: --subtract-lambda applies to 16x16 witnesses");
        w = subtract_rank1(w, {classI_subtraction_vector(), subtract_lambda});
      }
      SeesawOptions opts;
      opts.starts = starts;
      opts.max_iters = iters;
      opts.seed = seed;
      const CertReport report = seesaw_minimize(w, opts);
      Json payload = cert_report_json(report);
      payload["descriptor"] = certify_descriptor;
      payload["subtract_lambda"] = subtract_lambda;
      return emit(payload, argv_echo, seed, wall_ms(), out,
                  report.verdict == Verdict::NotBlockPositiveCertified
                      ? kExitViolation
                      : kExitOk);
    }

    if (*span_cmd) {
      const Descriptor d = parse_descriptor(span_descriptor);
      if (d.kind != Descriptor::Kind::Family)
        throw std::invalid_argument("span: family descriptors only");
      std::vector<ProductVector> family =
          zero_locus_families(d.family, optimized, span_count, seed);
      if (with_search) {
        Matrix w = family_witness(d.family);
        if (optimized) {
          const Vector p = classI_subtraction_vector();
          w -= 2.0 * (p * p.adjoint());
        }
        const auto found = numeric_zero_search(w, starts, seed);
        family.insert(family.end(), found.begin(), found.end());
      }
      const SpanReport report = span_analysis(
          family, rel_tol,
          span_descriptor + (optimized ? " optimized zero locus"
                                       : " zero locus"));
      return emit(span_report_json(report), argv_echo, seed, wall_ms(), out,
                  kExitOk);
    }

    if (*optimize_cmd) {
      const Descriptor d = parse_descriptor(optimize_descriptor);
      if (d.kind != Descriptor::Kind::Family ||
          d.family.family != Family::ClassI)
        throw std::invalid_argument("optimize: class I descriptors only");
      SeesawOptions certifier;
      certifier.starts = starts;
      certifier.max_iters = iters;
      certifier.seed = seed;
      const OptimizeReport report = lambda_star_bisect(
          d.family, classI_subtraction_vector(), tol, certifier);
      return emit(optimize_report_json(report), argv_echo, seed, wall_ms(),
                  out, kExitOk);
    }

    if (*verify_cmd) {
      if (!export_file.empty()) {
        std::ofstream file(export_file);
        if (!file) {
          std::cerr << "witnesslab: cannot open " << export_file << "\n";
          return kExitUsage;
        }
        file << certificates_json().dump(2) << "\n";
      }
      const DecompositionReport class1 = verify_classI_decomposition();
      const DecompositionReport class2 = verify_classII_decomposition();
      const Json payload{{"schema", "witnesslab/verify-cert/1"},
                         {"classI", decomposition_json(class1)},
                         {"classII", decomposition_json(class2)},
                         {"ok", class1.ok && class2.ok}};
      return emit(payload, argv_echo, seed, wall_ms(), out,
                  class1.ok && class2.ok ? kExitOk : kExitViolation);
    }

    if (*appendix_cmd) {
      if (*ineq_cmd) {
        if (ineq_grid > 0) {
          double min_main = 1e300, min_organized = 1e300;
          int saturated = 0;
          for (int i = 0; i < ineq_grid; ++i)
            for (int j = 0; j < ineq_grid; ++j) {
              const PolarInequality e = classI_polar_inequality(
                  kPi * i / (ineq_grid - 1), (kPi / 2) * j / (ineq_grid - 1));
              min_main = std::min(min_main, e.main_lhs);
              min_organized = std::min(min_organized, e.organized_lhs);
              if (e.saturated) ++saturated;
            }
          const Json payload{{"schema", "witnesslab/polar-grid/1"},
                             {"grid", ineq_grid},
                             {"min_main_lhs", min_main},
                             {"min_organized_lhs", min_organized},
                             {"saturated_points", saturated}};
          return emit(payload, argv_echo, seed, wall_ms(), out, kExitOk);
        }
        return emit(polar_inequality_json(classI_polar_inequality(
                        parse_angle(ineq_theta), parse_angle(ineq_phi))),
                    argv_echo, seed, wall_ms(), out, kExitOk);
      }
      if (*det1_cmd || *det2_cmd) {
        Rng rng(seed);
        const bool class1 = static_cast<bool>(*det1_cmd);
        double worst = 0.0, min_value = 1e300;
        const Vector sub = classI_subtraction_vector();
        for (int trial = 0; trial < det_samples; ++trial) {
          const double theta = class1 ? rng.uniform(0.05, kPi - 0.05)
                                      : rng.uniform(0.0, kPi);
          std::array<double, 4> X{};
          for (auto& x : X) x = rng.uniform(0.05, 1.0);
          Vector psi(4);
          for (int i = 0; i < 4; ++i) {
            const double ph = rng.uniform(0.0, 2 * kPi);
            psi[i] = std::sqrt(X[static_cast<std::size_t>(i)]) *
                     Complex(std::cos(ph), std::sin(ph));
          }
          Matrix w = family_witness(
              {class1 ? Family::ClassI : Family::ClassII, theta});
          double formula;
          if (class1) {
            w -= 2.0 * (sub * sub.adjoint());
            std::array<double, 4> moduli{};
            for (int i = 0; i < 4; ++i)
              moduli[static_cast<std::size_t>(i)] =
                  std::sqrt(X[static_cast<std::size_t>(i)]);
            formula = classI_factorized_determinant(theta, moduli);
          } else {
            formula = classII_determinant_terms(theta, X).sum();
          }
          const double dense = det(contract_second(w, psi)).real();
          const double total = X[0] + X[1] + X[2] + X[3];
          const double scale = std::max(
              std::abs(dense), 1e-4 * 16.0 * total * total * total * total);
          worst = std::max(worst, std::abs(dense - formula) / scale);
          min_value = std::min(min_value, formula);
        }
        const Json payload{{"schema", "witnesslab/det-equivalence/1"},
                           {"family", class1 ? "classI-optimized" : "classII"},
                           {"samples", det_samples},
                           {"max_rel_err", worst},
                           {"min_value", min_value}};
        return emit(payload, argv_echo, seed, wall_ms(), out, kExitOk);
      }
      if (*probe_cmd) {
        const double theta = parse_angle(probe_theta);
        if (probe_grid > 0) {
          const ProbeGridReport report =
              classII_probe_grid(theta, probe_grid, probe_lambda);
          return emit(probe_grid_json(report), argv_echo, seed, wall_ms(), out,
                      report.all_negative ? kExitOk : kExitViolation);
        }
        const ProbeDetResult report = classII_probe_determinant(
            theta, probe_lambda, probe_k,
            Complex(probe_x.first, probe_x.second),
            Complex(probe_y.first, probe_y.second));
        return emit(probe_json(report), argv_echo, seed, wall_ms(), out,
                    kExitOk);
      }
    }

    if (*sweep_cmd) {
      const double start_ms =
          std::chrono::duration<double, std::milli>(
              wall_start.time_since_epoch())
              .count();
      return run_sweep(sweep_family, sweep_points, seed, starts, skip_optimize,
                       sweep_format, out, argv_echo, start_ms);
    }
  } catch (const std::exception& error) {
    std::cerr << "witnesslab: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
