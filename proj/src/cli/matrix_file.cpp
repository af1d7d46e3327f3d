#include "numrad/cli/matrix_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace numrad::cli {

using nlohmann::json;

namespace {

std::string index_path(std::size_t i) { return "entries[" + std::to_string(i) + "]"; }

std::string index_path(std::size_t i, std::size_t j) {
  return index_path(i) + "[" + std::to_string(j) + "]";
}

double finite_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw MatrixFileError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw MatrixFileError(field, "value is not finite");
  return x;
}

}  // namespace

MatrixFile parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    // Also covers numeric literals that overflow a double.
    throw MatrixFileError("document", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MatrixFileError("document", "expected a JSON object");

  if (!doc.contains("n")) throw MatrixFileError("n", "missing");
  const json& jn = doc.at("n");
  if (!jn.is_number_integer() && !jn.is_number_unsigned()) {
    throw MatrixFileError("n", "expected a positive integer");
  }
  const auto n_signed = jn.get<long long>();
  if (n_signed < 1) throw MatrixFileError("n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(n_signed);

  if (!doc.contains("entries")) throw MatrixFileError("entries", "missing");
  const json& rows = doc.at("entries");
  if (!rows.is_array()) throw MatrixFileError("entries", "expected an array of rows");
  if (rows.size() != n) {
    throw MatrixFileError("entries", "expected " + std::to_string(n) + " rows, found " +
                                         std::to_string(rows.size()));
  }

  MatrixFile out{CMatrix(n), std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array()) throw MatrixFileError(index_path(i), "expected an array of entries");
    if (row.size() != n) {
      throw MatrixFileError(index_path(i), "expected " + std::to_string(n) + " entries, found " +
                                               std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& entry = row[j];
      const std::string field = index_path(i, j);
      if (!entry.is_array() || entry.size() != 2) {
        throw MatrixFileError(field, "expected a [re, im] array");
      }
      out.matrix(i, j) = cplx(finite_number(entry[0], field + "[0]"),
                              finite_number(entry[1], field + "[1]"));
    }
  }

  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw MatrixFileError("name", "expected a string");
    out.name = doc.at("name").get<std::string>();
  }
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatrixFileError("path", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string serialize_matrix_json(const MatrixFile& file) {
  const CMatrix& m = file.matrix;
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n"] = m.dim();
  doc["entries"] = std::move(rows);
  if (file.name) doc["name"] = *file.name;
  return doc.dump();
}

std::string matrix_digest(const MatrixFile& file) {
  // Name excluded: the digest identifies the operator, not its label.
  const std::string text = serialize_matrix_json(MatrixFile{file.matrix, std::nullopt});
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

}  // namespace numrad::cli
