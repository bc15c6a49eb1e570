#include "majunc/io.hpp"

#include <fstream>
#include <sstream>

namespace majunc::io {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return json::parse(text.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string(what) + ": expected a number");
  }
  return j.get<double>();
}

std::size_t positive_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() <= 0) {
    throw ParseError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("matrix: expected a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j.front().is_array() || j.front().empty()) {
    throw ParseError("matrix: rows must be nonempty arrays");
  }
  const std::size_t cols = j.front().size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("matrix: row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("matrix: entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") must be [re, im]");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(number(entry[0], "matrix entry"), number(entry[1], "matrix entry"));
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

KrausSet channel_from_json(const json& j) {
  if (!j.is_object()) {
    throw ParseError("channel: expected a JSON object");
  }
  const std::size_t dim_in = positive_int(j, "dim_in");
  const std::size_t dim_out = positive_int(j, "dim_out");
  if (dim_in != dim_out) {
    throw InvalidInput("channel: dim_in and dim_out must be equal");
  }
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty()) {
    throw ParseError("channel: field \"kraus\" must be a nonempty array of matrices");
  }
  std::vector<ComplexMatrix> ops;
  for (const json& mj : j.at("kraus")) {
    ComplexMatrix m = matrix_from_json(mj);
    if (static_cast<std::size_t>(m.rows()) != dim_out ||
        static_cast<std::size_t>(m.cols()) != dim_in) {
      throw InvalidInput("channel: Kraus operator shape does not match dim_out x dim_in");
    }
    ops.push_back(std::move(m));
  }
  return KrausSet(std::move(ops));
}

json channel_to_json(const KrausSet& k) {
  json ops = json::array();
  for (const auto& a : k.operators()) {
    ops.push_back(matrix_to_json(a));
  }
  return json{{"dim_in", k.dim_in()}, {"dim_out", k.dim_out()}, {"kraus", std::move(ops)}};
}

ComplexMatrix unitary_from_json(const json& j) {
  if (!j.is_object()) {
    throw ParseError("unitary: expected a JSON object");
  }
  const std::size_t dim = positive_int(j, "dim");
  if (!j.contains("matrix")) {
    throw ParseError("unitary: missing field \"matrix\"");
  }
  ComplexMatrix m = matrix_from_json(j.at("matrix"));
  if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
    throw InvalidInput("unitary: matrix is not dim x dim");
  }
  return m;
}

json unitary_to_json(const ComplexMatrix& u) {
  return json{{"dim", u.rows()}, {"matrix", matrix_to_json(u)}};
}

}  // namespace majunc::io
