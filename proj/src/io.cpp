// Copyright 2026 The gso authors
// SPDX-License-Identifier: Apache-2.0

#include "gso/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gso {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int read_n_modes(const json& j) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("n_modes") || !j["n_modes"].is_number_integer()) {
    throw ParseError("missing integer field \"n_modes\"");
  }
  const int n = j["n_modes"].get<int>();
  if (n < 1) throw ParseError("\"n_modes\" must be >= 1");
  return n;
}

Matrix read_matrix(const json& j, const char* key, int dim) {
  if (!j.contains(key)) throw ParseError(std::string("missing matrix field \"") + key + "\"");
  const json& rows = j[key];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError(std::string("field \"") + key + "\" must be a " + std::to_string(dim) +
                     "x" + std::to_string(dim) + " array");
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(std::string("row ") + std::to_string(r) + " of \"" + key + "\" must have " +
                       std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      if (!row[c].is_number()) {
        throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
      }
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

CovMatrix parse_state(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_n_modes(j);
  return CovMatrix(n, read_matrix(j, "matrix", 2 * n));
}

GaussianChannel parse_channel(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_n_modes(j);
  return GaussianChannel(n, read_matrix(j, "X", 2 * n), read_matrix(j, "Y", 2 * n));
}

GeneralChannel parse_general_channel(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_n_modes(j);
  return GeneralChannel(n, read_matrix(j, "A", 2 * n), read_matrix(j, "B", 2 * n),
                        read_matrix(j, "C", 2 * n));
}

LindbladModel parse_model(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_n_modes(j);
  if (!j.contains("nu") || !j["nu"].is_number()) {
    throw ParseError("missing numeric field \"nu\"");
  }
  return LindbladModel(n, read_matrix(j, "H", 2 * n), j["nu"].get<double>());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw ParseError("write failed: " + path);
}

CovMatrix load_state(const std::string& path) { return parse_state(read_text_file(path)); }

GaussianChannel load_channel(const std::string& path) {
  return parse_channel(read_text_file(path));
}

GeneralChannel load_general_channel(const std::string& path) {
  return parse_general_channel(read_text_file(path));
}

LindbladModel load_model(const std::string& path) { return parse_model(read_text_file(path)); }

std::string state_to_json(const CovMatrix& g) {
  json j;
  j["n_modes"] = g.n_modes;
  j["matrix"] = matrix_to_json(g.m);
  return j.dump(2) + "\n";
}

std::string channel_to_json(const GaussianChannel& ch) {
  json j;
  j["n_modes"] = ch.n_modes;
  j["X"] = matrix_to_json(ch.X);
  j["Y"] = matrix_to_json(ch.Y);
  return j.dump(2) + "\n";
}

}  // namespace gso
