// File formats shared by the CLI and the test suites: the JSON state-vector
// format, round-trip-exact CSV tables, and the run manifest that accompanies
// every output so a table can be regenerated from its recorded invocation.

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "entfluc/errors.hpp"
#include "entfluc/matrix.hpp"
#include "entfluc/version.hpp"

namespace entfluc::io {

/// Shortest exact decimal form: 17 significant digits round-trip doubles.
inline std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

struct StateFile {
  int dim_q = 0;
  int dim_b = 0;
  ComplexMatrix amplitudes;  // dim_q x dim_b grid
};

/// Parses {"dim_q": D, "dim_b": E, "amplitudes": [[re, im], ...]} with the
/// flat list row-major over (j, k).
inline StateFile parse_state_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim_q") || !j.contains("dim_b") ||
      !j.contains("amplitudes")) {
    throw ParseError("state file: expected object with dim_q, dim_b, "
                     "amplitudes");
  }
  StateFile state;
  try {
    state.dim_q = j.at("dim_q").get<int>();
    state.dim_b = j.at("dim_b").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("state file: bad dimension field: ") +
                     e.what());
  }
  if (state.dim_q < 1 || state.dim_b < 1) {
    throw ParseError("state file: dimensions must be >= 1");
  }
  const auto& amps = j.at("amplitudes");
  if (!amps.is_array()) {
    throw ParseError("state file: amplitudes must be an array of [re, im]");
  }
  const auto expected =
      static_cast<std::size_t>(state.dim_q) * static_cast<std::size_t>(state.dim_b);
  if (amps.size() != expected) {
    throw DimensionMismatch("state file: " + std::to_string(amps.size()) +
                            " amplitudes for a " + std::to_string(state.dim_q) +
                            "x" + std::to_string(state.dim_b) + " grid");
  }
  state.amplitudes.resize(state.dim_q, state.dim_b);
  std::size_t index = 0;
  for (int j_row = 0; j_row < state.dim_q; ++j_row) {
    for (int k_col = 0; k_col < state.dim_b; ++k_col, ++index) {
      const auto& pair = amps.at(index);
      if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number() ||
          !pair.at(1).is_number()) {
        throw ParseError("state file: amplitude " + std::to_string(index) +
                         " is not a [re, im] pair");
      }
      state.amplitudes(j_row, k_col) =
          Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return state;
}

inline StateFile load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("state file " + path + ": " + e.what());
  }
  return parse_state_json(j);
}

inline nlohmann::ordered_json state_to_json(const StateFile& state) {
  nlohmann::ordered_json j;
  j["dim_q"] = state.dim_q;
  j["dim_b"] = state.dim_b;
  auto amps = nlohmann::ordered_json::array();
  for (int row = 0; row < state.dim_q; ++row) {
    for (int col = 0; col < state.dim_b; ++col) {
      const Complex value = state.amplitudes(row, col);
      amps.push_back({value.real(), value.imag()});
    }
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

inline void save_state_file(const std::string& path, const StateFile& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write state file: " + path);
  out << state_to_json(state).dump(2) << '\n';
}

/// Invocation record serialized next to (or inside) every output.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string output;  // empty means stdout
  std::optional<std::uint64_t> seed;
  std::string version = kVersion;
};

inline nlohmann::ordered_json to_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  j["output"] = manifest.output;
  if (manifest.seed) j["seed"] = *manifest.seed;
  j["version"] = manifest.version;
  return j;
}

inline std::string manifest_path_for(const std::string& output_path) {
  return output_path + ".manifest.json";
}

inline void write_manifest(const RunManifest& manifest) {
  const std::string path = manifest_path_for(manifest.output);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest: " + path);
  out << to_json(manifest).dump(2) << '\n';
}

/// CSV with a header row, '.' decimal separator, LF line endings; numeric
/// cells should be preformatted with format_double.
inline void write_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write csv: " + path);
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c > 0) out << ',';
    out << header[c];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << row[c];
    }
    out << '\n';
  }
}

}  // namespace entfluc::io
