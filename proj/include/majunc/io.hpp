// JSON ingestion and emission for channels, unitaries and matrices.
//
// A matrix is an array of rows; a row is an array of entries; an entry is a
// two-element array [re, im].
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "majunc/channels.hpp"

namespace majunc::io {

using json = nlohmann::json;

// Malformed JSON text (syntax) or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

json read_json_file(const std::filesystem::path& path);

ComplexMatrix matrix_from_json(const json& j);
json matrix_to_json(const ComplexMatrix& m);

// Parses {"dim_in", "dim_out", "kraus"}. Shape is checked; trace
// preservation is not.
KrausSet channel_from_json(const json& j);
json channel_to_json(const KrausSet& k);

// Parses {"dim", "matrix"}. Unitarity is not checked here.
ComplexMatrix unitary_from_json(const json& j);
json unitary_to_json(const ComplexMatrix& u);

}  // namespace majunc::io
