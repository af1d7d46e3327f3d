#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "numrad/cli/matrix_file.hpp"
#include "numrad/numrange.hpp"
#include "numrad/oracle.hpp"
#include "numrad/parallel.hpp"

namespace numrad::cli {

inline constexpr const char* kToolName = "numrad";
inline constexpr const char* kToolVersion = "0.1.0";

/// x printed with 12 significant digits ("%.12g").
std::string fmt12(double x);

/// x rounded to 12 significant digits, as stored in JSON documents.
double round12(double x);

/// theta,re,im,support header then one LF-terminated row per sample.
void write_boundary_csv(std::ostream& out, const RangeBoundary& boundary);

struct InputInfo {
  std::string path;
  MatrixFile file;
};

/// Envelope shared by every certificate document: tool, version, command,
/// inputs with digests, tolerances, UTC timestamp.
struct DocumentHeader {
  std::string command;
  std::vector<InputInfo> inputs;
  nlohmann::json tolerances = nlohmann::json::object();
  std::string timestamp;  // ISO-8601 UTC; empty means "now"
};

nlohmann::json radius_json(const RadiusResult& r);
nlohmann::json certificate_json(const ParallelCertificate& c);
nlohmann::json oracle_json(const OracleReport& r, double target);

nlohmann::json make_document(const DocumentHeader& header, nlohmann::json result);

/// Flattened "key value" lines of a document's result section.
void write_text(std::ostream& out, const nlohmann::json& document);

/// Pretty-printed JSON with every float written by fmt12.
void write_json(std::ostream& out, const nlohmann::json& document);

}  // namespace numrad::cli
