#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/verify_suites.hpp"
#include "qmetric/algebra_maps.hpp"
#include "qmetric/error.hpp"
#include "qmetric/linalg.hpp"
#include "qmetric/lip_norms.hpp"
#include "qmetric/matrix_io.hpp"
#include "qmetric/mk_distance.hpp"

namespace qmetric::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::size_t n = 0;
  std::size_t k = 0;
  bool all_k = false;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-3;
  std::size_t max_iters = 2000;
  std::size_t threads = 1;
  OutputFormat format = OutputFormat::text;
  std::string suite;
  std::string variant = "trace";
  std::string input;
  std::string output;
  std::string rho_path;
  std::string sigma_path;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QMETRIC_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("QMETRIC_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

std::string rational(std::int64_t num, std::int64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

LipSpec spec_from(const RunConfig& c) {
  if (c.variant == "trace" || c.variant == "1") return LipSpec::trace(c.n);
  if (c.variant == "k" || c.variant == "divisor") {
    if (c.k == 0) throw UsageError("--variant k requires --k");
    return LipSpec::divisor(c.n, c.k);
  }
  throw UsageError("unknown --variant \"" + c.variant + "\" (expected trace or k)");
}

void emit_matrix(Report& r, const std::string& key, const Matrix& m, const RunConfig& c) {
  r.fields[key] = matrix_to_json(m);
  if (r.csv_header.empty()) {
    // Entry listing (1-based indices) doubles as the text table and the CSV body.
    r.csv_header = {"row", "col", "re", "im"};
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        r.csv_rows.push_back({std::to_string(i + 1), std::to_string(j + 1), format_number(m(i, j).real()),
                              format_number(m(i, j).imag())});
  }
  if (!c.output.empty()) {
    write_matrix_file(c.output, m);
    r.fields["output_path"] = c.output;
  }
}

// ---------------------------------------------------------------------------

Report cmd_certify(const RunConfig& c) {
  Report r;
  if (c.n == 0) throw UsageError("--n is required");
  std::vector<std::size_t> ks;
  if (c.all_k) {
    ks = proper_divisors(c.n);
    if (ks.empty()) throw UsageError("n = " + std::to_string(c.n) + " has no divisor k with 1 < k < n");
  } else {
    if (c.k == 0) throw UsageError("--k is required (or --all-k)");
    ks.push_back(c.k);
  }
  r.args = {{"n", c.n}, {"k", c.all_k ? json(nullptr) : json(c.k)}, {"all_k", c.all_k}};
  r.csv_header = {"n", "k", "lip1", "lipk", "gap", "closed_form_lip1", "closed_form_lipk", "certified"};

  json rows = json::array();
  for (std::size_t k : ks) {
    const auto w = certify_non_isometry(c.n, k);
    const std::string tag = "[k=" + std::to_string(k) + "]";
    r.add_check("lip1_closed_form" + tag, std::abs(w.lip1_value - w.closed_form_lip1), kClosedFormTolerance);
    r.add_check("lipk_closed_form" + tag, std::abs(w.lipk_value - w.closed_form_lipk), kClosedFormTolerance);
    r.add_check("gap_positive_exact" + tag, w.gap_positive, 0.0, 0.0);
    json row{{"n", w.n},
             {"k", w.k},
             {"lip1", w.lip1_value},
             {"lipk", w.lipk_value},
             {"gap", w.gap},
             {"closed_form_lip1", w.closed_form_lip1},
             {"closed_form_lipk", w.closed_form_lipk},
             {"lip1_exact", rational(w.lip1_numerator, w.denominator)},
             {"lipk_exact", rational(w.lipk_numerator, w.denominator)},
             {"gap_exact", rational(w.gap_numerator, w.denominator)},
             {"certified", w.certified()},
             {"statement", w.statement}};
    r.csv_rows.push_back({std::to_string(w.n), std::to_string(w.k), format_number(w.lip1_value),
                          format_number(w.lipk_value), format_number(w.gap),
                          format_number(w.closed_form_lip1), format_number(w.closed_form_lipk),
                          w.certified() ? "true" : "false"});
    rows.push_back(std::move(row));
  }
  if (c.all_k) {
    r.fields["n"] = c.n;
    r.fields["rows"] = std::move(rows);
  } else {
    for (auto& [key, value] : rows[0].items()) r.fields[key] = value;
  }
  return r;
}

Report cmd_verify(const RunConfig& c) {
  Report r;
  if (!is_suite(c.suite)) {
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    throw UsageError("unknown suite \"" + c.suite + "\" (expected one of: " + names + ")");
  }
  if (c.n == 0) throw UsageError("--n is required");
  if (c.trials == 0) throw UsageError("--trials must be at least 1");
  std::size_t k = c.k;
  if (k == 0) {
    const auto ks = proper_divisors(c.n);
    k = ks.empty() ? 1 : ks.front();
  }
  r.args = {{"suite", c.suite}, {"n", c.n}, {"k", k}, {"trials", c.trials}};

  const auto rows = run_suite(c.suite, c.n, k, c.trials, c.seed, c.threads);
  r.csv_header = {"suite", "n", "k", "trial", "residual", "tolerance", "pass"};
  json jrows = json::array();
  double worst = 0.0;
  double tolerance = rows.front().tolerance;
  std::size_t violations = 0;
  for (const auto& row : rows) {
    worst = std::max(worst, row.residual);
    if (!row.pass) ++violations;
    r.csv_rows.push_back({row.suite, std::to_string(row.n), std::to_string(row.k),
                          std::to_string(row.trial), format_number(row.residual),
                          format_number(row.tolerance), row.pass ? "true" : "false"});
    jrows.push_back({{"trial", row.trial},
                     {"residual", row.residual},
                     {"tolerance", row.tolerance},
                     {"pass", row.pass}});
  }
  r.add_check(c.suite + ":max_residual", violations == 0, worst, tolerance);
  r.fields["suite"] = c.suite;
  r.fields["n"] = c.n;
  r.fields["k"] = k;
  r.fields["trials"] = c.trials;
  r.fields["violations"] = violations;
  r.fields["max_residual"] = worst;
  r.fields["rows"] = std::move(jrows);
  return r;
}

DensityState load_state(const std::string& path, const char* which) {
  if (path.empty()) throw UsageError(std::string("--") + which + " is required");
  try {
    const Matrix m = read_matrix_file(path);
    if (!m.is_square()) throw ValidationError("density state: matrix must be square");
    return DensityState(HermitianMatrix(m));
  } catch (const Error& e) {
    throw ValidationError(std::string(which) + " (" + path + "): " + e.what());
  }
}

Report cmd_mk(const RunConfig& cfg) {
  Report r;
  const auto rho = load_state(cfg.rho_path, "rho");
  const auto sigma = load_state(cfg.sigma_path, "sigma");
  RunConfig c = cfg;
  if (c.n == 0) c.n = rho.dim();
  const auto spec = spec_from(c);
  r.args = {{"variant", c.variant}, {"n", c.n}, {"k", c.k}, {"tol", c.tol}, {"max_iters", c.max_iters},
            {"rho", c.rho_path}, {"sigma", c.sigma_path}};

  MkOptions opts;
  opts.max_iters = c.max_iters;
  opts.tol = c.tol;
  const auto res = mk_distance(spec, rho, sigma, opts);
  const double cert_lip = lip_eval(spec, res.certificate);

  r.fields["spec"] = spec.label();
  r.fields["value"] = res.value;
  r.fields["converged"] = res.converged;
  r.fields["iterations"] = res.iterations;
  r.fields["oracle_value"] = res.oracle_value ? json(*res.oracle_value) : json(nullptr);
  r.fields["primal_residual"] = res.primal_residual;
  r.fields["dual_residual"] = res.dual_residual;
  r.fields["certificate_lip"] = cert_lip;
  emit_matrix(r, "certificate", res.certificate.matrix(), c);

  r.add_check("certificate_feasible", std::max(0.0, cert_lip - 1.0), 1e-9);
  if (res.oracle_value) {
    r.add_check("oracle_agreement", std::abs(res.value - *res.oracle_value), c.tol);
  } else {
    r.add_check("solver_converged", res.converged, std::max(res.primal_residual, res.dual_residual),
                opts.residual_tol);
  }
  r.csv_header = {"spec", "value", "oracle_value", "converged", "iterations"};
  r.csv_rows.push_back({spec.label(), format_number(res.value),
                        res.oracle_value ? format_number(*res.oracle_value) : "",
                        res.converged ? "true" : "false", std::to_string(res.iterations)});
  return r;
}

Matrix load_input(const RunConfig& c) {
  if (c.input.empty()) throw UsageError("--in is required");
  return read_matrix_file(c.input);
}

Report cmd_embed(const RunConfig& c) {
  Report r;
  if (c.n == 0 || c.k == 0) throw UsageError("--n and --k are required");
  const DivisorPair pair(c.k, c.n);
  const Matrix a = load_input(c);
  r.args = {{"n", c.n}, {"k", c.k}, {"in", c.input}};
  const Matrix e = embed(pair, a);
  r.add_check("trace_compatible", std::abs(normalized_trace(e) - normalized_trace(a)), 1e-12);
  emit_matrix(r, "result", e, c);
  return r;
}

Report cmd_project(const RunConfig& c) {
  Report r;
  if (c.n == 0 || c.k == 0) throw UsageError("--n and --k are required");
  const DivisorPair pair(c.k, c.n);
  const Matrix a = load_input(c);
  r.args = {{"n", c.n}, {"k", c.k}, {"in", c.input}};
  const Matrix p = cond_expectation(pair, a);
  r.add_check("idempotent", max_abs_diff(cond_expectation(pair, p), p), 1e-12);
  r.add_check("trace_preserved", std::abs(normalized_trace(p) - normalized_trace(a)), 1e-12);
  r.add_check("blockmean_agreement", max_abs_diff(cond_expectation_blockmean(pair, a), p), 1e-13);
  emit_matrix(r, "result", p, c);
  return r;
}

Report cmd_lipnorm(const RunConfig& cfg) {
  Report r;
  const Matrix a = load_input(cfg);
  RunConfig c = cfg;
  if (c.n == 0) c.n = a.rows();
  const auto spec = spec_from(c);
  r.args = {{"variant", c.variant}, {"n", c.n}, {"k", c.k}, {"in", c.input}};
  const HermitianMatrix h(a);
  const double value = lip_eval(spec, h);
  r.fields["spec"] = spec.label();
  r.fields["value"] = value;
  r.csv_header = {"spec", "value"};
  r.csv_rows.push_back({spec.label(), format_number(value)});
  return r;
}

// ---------------------------------------------------------------------------

void add_format_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{
              {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}},
          CLI::ignore_case));
  sub->add_flag_callback("--json", [&c] { c.format = OutputFormat::json; }, "Shorthand for --format json");
  sub->add_flag_callback("--csv", [&c] { c.format = OutputFormat::csv; }, "Shorthand for --format csv");
  sub->add_option("--seed", c.seed, "RNG seed (default: $QMETRIC_SEED or 0)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Quantum metrics from the trace on full matrix algebras", "qmetric"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QMETRIC_VERSION);

  auto* certify = app.add_subcommand("certify", "Non-isometry certificate for L_1 vs L_k on M_n(C)");
  certify->add_option("--n", c.n, "Matrix size")->required();
  certify->add_option("--k", c.k, "Block size, 1 < k < n, k | n");
  certify->add_flag("--all-k", c.all_k, "Every k with 1 < k < n, k | n");

  auto* verify = app.add_subcommand("verify", "Randomized invariant sweep");
  verify->add_option("--suite", c.suite, "cstar|embed|trace|projection|leibniz|unitary|kernel")->required();
  verify->add_option("--n", c.n, "Matrix size")->required();
  verify->add_option("--k", c.k, "Block size (default: smallest k with 1 < k < n, k | n)");
  verify->add_option("--trials", c.trials, "Number of trials");
  verify->add_option("--threads", c.threads, "Worker threads");

  auto* mk = app.add_subcommand("mk", "Monge-Kantorovich distance between two density states");
  mk->add_option("--rho", c.rho_path, "First state (matrix file)")->required();
  mk->add_option("--sigma", c.sigma_path, "Second state (matrix file)")->required();
  mk->add_option("--variant", c.variant, "trace or k");
  mk->add_option("--n", c.n, "Matrix size (default: from the state files)");
  mk->add_option("--k", c.k, "Block size for --variant k");
  mk->add_option("--tol", c.tol, "Oracle agreement tolerance");
  mk->add_option("--max-iters", c.max_iters, "Iteration budget");
  mk->add_option("--out", c.output, "Write the certificate matrix here");

  auto* embed_cmd = app.add_subcommand("embed", "Block-diagonal embedding M_k -> M_n");
  auto* project = app.add_subcommand("project", "Conditional expectation P_{k,n}");
  for (auto* sub : {embed_cmd, project}) {
    sub->add_option("--n", c.n, "Target size")->required();
    sub->add_option("--k", c.k, "Block size")->required();
    sub->add_option("--in", c.input, "Input matrix file")->required();
    sub->add_option("--out", c.output, "Output matrix file");
  }

  auto* lipnorm = app.add_subcommand("lipnorm", "Evaluate a Lip-norm on a Hermitian matrix");
  lipnorm->add_option("--variant", c.variant, "trace or k");
  lipnorm->add_option("--n", c.n, "Matrix size (default: from the input)");
  lipnorm->add_option("--k", c.k, "Block size for --variant k");
  lipnorm->add_option("--in", c.input, "Input matrix file")->required();

  for (auto* sub : {certify, verify, mk, embed_cmd, project, lipnorm}) add_format_options(sub, c);

  try {
    c.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    const auto* chosen = app.get_subcommands().front();
    c.command = chosen->get_name();
    if (c.command == "certify") report = cmd_certify(c);
    else if (c.command == "verify") report = cmd_verify(c);
    else if (c.command == "mk") report = cmd_mk(c);
    else if (c.command == "embed") report = cmd_embed(c);
    else if (c.command == "project") report = cmd_project(c);
    else report = cmd_lipnorm(c);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.command = c.command;
  report.seed = c.seed;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.write(out, c.format);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace qmetric::cli
