#include "numrad/cli/commands.hpp"

#include <charconv>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "numrad/cli/demo.hpp"
#include "numrad/cli/matrix_file.hpp"
#include "numrad/cli/report.hpp"
#include "numrad/eigen.hpp"
#include "numrad/numrange.hpp"
#include "numrad/oracle.hpp"
#include "numrad/parallel.hpp"

namespace numrad::cli {

using nlohmann::json;

namespace {

struct OutputMode {
  bool json = false;
  bool text = false;
};

void add_output_flags(CLI::App* cmd, OutputMode& mode) {
  auto* j = cmd->add_flag("--json", mode.json, "Print the certificate as JSON");
  auto* t = cmd->add_flag("--text", mode.text, "Print the certificate as key/value lines (default)");
  j->excludes(t);
}

void emit(std::ostream& out, const OutputMode& mode, const json& doc) {
  if (mode.json) {
    write_json(out, doc);
  } else {
    write_text(out, doc);
  }
}

struct OracleArgs {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

std::optional<OracleArgs> parse_oracle(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  OracleArgs args;
  const char* begin = text.data();
  const char* mid = begin + comma;
  const char* end = begin + text.size();
  auto [p1, e1] = std::from_chars(begin, mid, args.count);
  auto [p2, e2] = std::from_chars(mid + 1, end, args.seed);
  if (e1 != std::errc() || p1 != mid || e2 != std::errc() || p2 != end || args.count == 0) {
    return std::nullopt;
  }
  return args;
}

InputInfo load(const std::string& path) { return {path, read_matrix_file(path)}; }

void require_same_dim(const InputInfo& a, const InputInfo& b) {
  if (a.file.matrix.dim() != b.file.matrix.dim()) {
    throw InvalidArgument("dimension mismatch: " + a.path + " is " +
                          std::to_string(a.file.matrix.dim()) + "x" +
                          std::to_string(a.file.matrix.dim()) + ", " + b.path + " is " +
                          std::to_string(b.file.matrix.dim()) + "x" +
                          std::to_string(b.file.matrix.dim()));
  }
}

int decision_exit(const Decision& d) { return d.parallel() ? kExitOk : kExitNotParallel; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical range, numerical radius and operator parallelism for complex matrices",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // radius
  std::string radius_path;
  double radius_tol = kRadiusTol;
  OutputMode radius_mode;
  auto* radius = app.add_subcommand("radius", "Numerical radius with a witness vector");
  radius->add_option("matrix", radius_path, "Matrix JSON file")->required();
  radius->add_option("--tol", radius_tol, "Witness residual tolerance")->check(CLI::PositiveNumber);
  add_output_flags(radius, radius_mode);

  // range
  std::string range_path;
  std::size_t range_samples = 360;
  std::string range_out;
  auto* range = app.add_subcommand("range", "Sampled boundary of the numerical range as CSV");
  range->add_option("matrix", range_path, "Matrix JSON file")->required();
  range->add_option("--samples", range_samples, "Number of boundary samples (>= 4)");
  range->add_option("--out", range_out, "CSV output path (stdout when omitted)");

  // wparallel
  std::string wa_path, wb_path, oracle_text;
  double w_tol = kDecideTol;
  OutputMode w_mode;
  auto* wpar = app.add_subcommand("wparallel", "Decide numerical-radius parallelism of A and B");
  wpar->add_option("a", wa_path, "Matrix A")->required();
  wpar->add_option("b", wb_path, "Matrix B")->required();
  wpar->add_option("--tol", w_tol, "Relative decision tolerance")->check(CLI::PositiveNumber);
  wpar->add_option("--oracle", oracle_text, "Brute-force cross-check as COUNT,SEED");
  add_output_flags(wpar, w_mode);

  // nparallel
  std::string na_path, nb_path;
  double n_tol = kDecideTol;
  OutputMode n_mode;
  auto* npar = app.add_subcommand("nparallel", "Decide operator-norm parallelism of A and B");
  npar->add_option("a", na_path, "Matrix A")->required();
  npar->add_option("b", nb_path, "Matrix B")->required();
  npar->add_option("--tol", n_tol, "Relative decision tolerance")->check(CLI::PositiveNumber);
  add_output_flags(npar, n_mode);

  // block
  std::string ba_path, bb_path;
  double block_theta = 0.0;
  OutputMode b_mode;
  auto* block = app.add_subcommand("block", "Numerical radius of [[0, e^{it}A], [e^{-it}B*, 0]]");
  block->add_option("a", ba_path, "Matrix A")->required();
  block->add_option("b", bb_path, "Matrix B")->required();
  block->add_option("--theta", block_theta, "Rotation angle t in radians");
  add_output_flags(block, b_mode);

  auto* demo = app.add_subcommand("demo", "Reproduce the nontransitivity example and self-check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*radius) {
      const InputInfo a = load(radius_path);
      const RadiusResult r = numerical_radius(a.file.matrix, radius_tol);
      DocumentHeader header{"radius", {a}, json{{"radius_tol", radius_tol}}, {}};
      emit(out, radius_mode, make_document(header, radius_json(r)));
      return kExitOk;
    }

    if (*range) {
      if (range_samples < 4) throw InvalidArgument("--samples must be at least 4");
      const InputInfo a = load(range_path);
      const RangeBoundary boundary = range_boundary(a.file.matrix, range_samples);
      if (range_out.empty()) {
        write_boundary_csv(out, boundary);
      } else {
        std::ofstream file(range_out, std::ios::binary);
        if (!file) throw MatrixFileError("--out", "cannot open '" + range_out + "' for writing");
        write_boundary_csv(file, boundary);
        if (!file.flush()) throw MatrixFileError("--out", "write to '" + range_out + "' failed");
      }
      return kExitOk;
    }

    if (*wpar) {
      std::optional<OracleArgs> oracle;
      if (!oracle_text.empty()) {
        oracle = parse_oracle(oracle_text);
        if (!oracle) throw InvalidArgument("--oracle expects COUNT,SEED, got '" + oracle_text + "'");
      }
      const InputInfo a = load(wa_path);
      const InputInfo b = load(wb_path);
      require_same_dim(a, b);
      const Decision d = omega_parallel(a.file.matrix, b.file.matrix, w_tol);
      json result = certificate_json(d.certificate);
      json tolerances{{"decide_tol", w_tol}, {"wit_tol", d.certificate.wit_tol}};
      if (oracle) {
        const OracleReport rep = brute_pair_max(a.file.matrix, b.file.matrix, oracle->count, oracle->seed);
        result["oracle"] = oracle_json(rep, d.certificate.a_value * d.certificate.b_value);
        tolerances["oracle_seed"] = oracle->seed;
      }
      emit(out, w_mode, make_document({"wparallel", {a, b}, tolerances, {}}, std::move(result)));
      return decision_exit(d);
    }

    if (*npar) {
      const InputInfo a = load(na_path);
      const InputInfo b = load(nb_path);
      require_same_dim(a, b);
      const Decision d = norm_parallel(a.file.matrix, b.file.matrix, n_tol);
      json result = certificate_json(d.certificate);
      if (d.parallel()) {
        // |<Ax, Bx>| = ||A|| ||B|| at the witness.
        const CVector ax = a.file.matrix.apply(d.certificate.witness);
        const CVector bx = b.file.matrix.apply(d.certificate.witness);
        result["product_check"] = {
            {"inner_abs", round12(std::abs(inner(ax, bx)))},
            {"norm_product", round12(d.certificate.a_value * d.certificate.b_value)},
            {"ok", d.certificate.witness_residuals.ok}};
      }
      json tolerances{{"decide_tol", n_tol}, {"wit_tol", d.certificate.wit_tol}};
      emit(out, n_mode, make_document({"nparallel", {a, b}, tolerances, {}}, std::move(result)));
      return decision_exit(d);
    }

    if (*block) {
      const InputInfo a = load(ba_path);
      const InputInfo b = load(bb_path);
      require_same_dim(a, b);
      const CMatrix t = block_operator(a.file.matrix, b.file.matrix, block_theta);
      const RadiusResult r = numerical_radius(t);
      const double half_sum =
          0.5 * (operator_norm(a.file.matrix).value + operator_norm(b.file.matrix).value);
      json result{{"theta", round12(block_theta)},
                  {"dim", t.dim()},
                  {"omega", round12(r.omega)},
                  {"half_norm_sum", round12(half_sum)},
                  {"difference", round12(r.omega - half_sum)}};
      emit(out, b_mode,
           make_document({"block", {a, b}, json{{"radius_tol", kRadiusTol}}, {}}, std::move(result)));
      return kExitOk;
    }

    if (*demo) {
      return run_reference_demo(out) ? kExitOk : kExitSelfTestFailed;
    }
  } catch (const MatrixFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << " (iterations " << e.iterations() << ")\n";
    return kExitNumerical;
  }
  return kExitBadInput;
}

}  // namespace numrad::cli
