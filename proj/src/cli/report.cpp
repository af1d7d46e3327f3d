#include "numrad/cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>

namespace numrad::cli {

using nlohmann::json;

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::stod(fmt12(x)); }

void write_boundary_csv(std::ostream& out, const RangeBoundary& boundary) {
  out << "theta,re,im,support\n";
  for (const RangeSample& s : boundary.samples) {
    out << fmt12(s.theta) << ',' << fmt12(s.point.real()) << ',' << fmt12(s.point.imag()) << ','
        << fmt12(s.support) << '\n';
  }
}

namespace {

json vector_json(const CVector& x) {
  json arr = json::array();
  for (const cplx& v : x.values()) arr.push_back({round12(v.real()), round12(v.imag())});
  return arr;
}

json complex_json(cplx z) { return json::array({round12(z.real()), round12(z.imag())}); }

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void scalar12(std::ostream& out, const json& v) {
  if (v.is_number_float()) {
    out << fmt12(v.get<double>());
  } else {
    out << v.dump();
  }
}

void array12(std::ostream& out, const json& v) {
  out << '[';
  bool first = true;
  for (const json& e : v) {
    if (!first) out << ',';
    first = false;
    if (e.is_array()) {
      array12(out, e);
    } else {
      scalar12(out, e);
    }
  }
  out << ']';
}

void pretty12(std::ostream& out, const json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << pad << json(it.key()).dump() << ": ";
      pretty12(out, it.value(), depth + 1);
    }
    out << '\n' << close << '}';
  } else if (v.is_array()) {
    const bool flat = std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
    if (flat) {
      array12(out, v);
      return;
    }
    out << "[\n";
    bool first = true;
    for (const json& e : v) {
      if (!first) out << ",\n";
      first = false;
      out << pad;
      pretty12(out, e, depth + 1);
    }
    out << '\n' << close << ']';
  } else {
    scalar12(out, v);
  }
}

void flatten(std::ostream& out, const std::string& prefix, const json& v) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(out, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
    }
    return;
  }
  out << prefix << ' ';
  if (v.is_string()) {
    out << v.get<std::string>();
  } else if (v.is_array()) {
    array12(out, v);
  } else {
    scalar12(out, v);
  }
  out << '\n';
}

}  // namespace

json radius_json(const RadiusResult& r) {
  return json{{"omega", round12(r.omega)},
              {"theta_star", round12(r.theta_star)},
              {"witness", vector_json(r.witness)},
              {"witness_value", complex_json(r.witness_value)},
              {"residual", round12(r.residual)}};
}

json certificate_json(const ParallelCertificate& c) {
  return json{{"kind", to_string(c.kind)},
              {"decision", to_string(c.decision)},
              {"lambda_phase", round12(c.lambda_phase)},
              {"lambda", complex_json(c.lambda())},
              {"achieved", round12(c.achieved)},
              {"target", round12(c.target)},
              {"gap", round12(c.gap)},
              {"a_value", round12(c.a_value)},
              {"b_value", round12(c.b_value)},
              {"decide_tol_abs", round12(c.decide_tol)},
              {"witness", vector_json(c.witness)},
              {"witness_check",
               {{"ok", c.witness_residuals.ok},
                {"wit_tol", c.wit_tol},
                {"product_residual", round12(c.witness_residuals.product_residual)},
                {"a_residual", round12(c.witness_residuals.a_residual)},
                {"b_residual", round12(c.witness_residuals.b_residual)}}}};
}

json oracle_json(const OracleReport& r, double target) {
  return json{{"best_value", round12(r.best_value)},
              {"target", round12(target)},
              {"shortfall", round12(target - r.best_value)},
              {"best_vector", vector_json(r.best_vector)},
              {"samples", r.samples_used},
              {"seed", r.seed},
              {"refinement_steps", r.refinement_steps}};
}

json make_document(const DocumentHeader& header, json result) {
  json inputs = json::array();
  for (const InputInfo& in : header.inputs) {
    json entry{{"path", in.path}, {"n", in.file.matrix.dim()}, {"digest", matrix_digest(in.file)}};
    if (in.file.name) entry["name"] = *in.file.name;
    inputs.push_back(std::move(entry));
  }
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", header.command},
              {"inputs", std::move(inputs)},
              {"tolerances", header.tolerances},
              {"result", std::move(result)},
              {"timestamp", header.timestamp.empty() ? utc_now() : header.timestamp}};
}

void write_text(std::ostream& out, const json& document) {
  out << "# " << document.value("tool", "") << ' ' << document.value("version", "") << ' '
      << document.value("command", "") << '\n';
  if (document.contains("inputs")) {
    for (const json& in : document.at("inputs")) {
      out << "# input " << in.value("path", "") << ' ' << in.value("digest", "") << '\n';
    }
  }
  flatten(out, "", document.at("result"));
  if (document.contains("tolerances")) flatten(out, "tolerances", document.at("tolerances"));
}

void write_json(std::ostream& out, const json& document) {
  pretty12(out, document, 0);
  out << '\n';
}

}  // namespace numrad::cli
