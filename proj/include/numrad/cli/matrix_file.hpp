#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad::cli {

/// Malformed matrix document; what() names the offending field.
class MatrixFileError : public std::runtime_error {
 public:
  MatrixFileError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// {"n": 2, "entries": [[[re, im], ...], ...], "name": "optional"}
struct MatrixFile {
  CMatrix matrix;
  std::optional<std::string> name;

  friend bool operator==(const MatrixFile&, const MatrixFile&) = default;
};

MatrixFile parse_matrix_json(std::string_view text);
MatrixFile read_matrix_file(const std::string& path);

/// Compact JSON whose decimal literals round-trip every double exactly.
std::string serialize_matrix_json(const MatrixFile& file);

/// FNV-1a 64-bit hash of the serialized matrix, as "fnv1a64:<16 hex digits>".
std::string matrix_digest(const MatrixFile& file);

}  // namespace numrad::cli
