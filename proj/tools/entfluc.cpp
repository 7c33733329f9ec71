// entfluc: bipartite entanglement of pure states via subsystem fluctuations.
//
// Subcommands:
//   analyze       fluctuation report for a JSON state vector
//   free-fermion  block linear entropy sweep of the free fermion chain
//   aklt          AKLT block spectrum table, optionally cross-checked
//                 against the matrix-product oracle
//   validate      seeded property battery over every library identity
//
// Exit codes: 0 success, 1 validation failure, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entfluc/aklt.hpp"
#include "entfluc/bipartite.hpp"
#include "entfluc/errors.hpp"
#include "entfluc/fluctuation.hpp"
#include "entfluc/free_fermion.hpp"
#include "entfluc/io.hpp"
#include "entfluc/validation.hpp"
#include "entfluc/version.hpp"

namespace {

using entfluc::BipartitePureState;
using entfluc::ComplexMatrix;
using entfluc::FluctuationReport;
using entfluc::MeasureSet;
using entfluc::SchmidtDecomposition;
namespace io = entfluc::io;

void emit_json(const nlohmann::ordered_json& payload, const std::string& out) {
  if (out.empty()) {
    std::cout << payload.dump(2) << '\n';
    return;
  }
  std::ofstream stream(out, std::ios::binary);
  if (!stream) throw entfluc::Error("cannot write output: " + out);
  stream << payload.dump(2) << '\n';
}

int run_analyze(const std::string& state_path, double tol_rank,
                const std::string& out) {
  const io::StateFile file = io::load_state_file(state_path);
  const double norm = file.amplitudes.norm();
  const double deviation = std::abs(norm - 1.0);
  if (deviation > 1e-4) {
    throw entfluc::NotNormalized("analyze: state norm deviates from 1 by " +
                                 io::format_double(deviation));
  }
  if (deviation > 1e-8) {
    std::cerr << "warning: state norm deviates from 1 by "
              << io::format_double(deviation) << "; renormalizing\n";
  }
  const BipartitePureState state(file.amplitudes / norm);
  const SchmidtDecomposition dec = entfluc::schmidt(state, tol_rank);
  const FluctuationReport report =
      entfluc::schmidt_polarization_fluctuation(dec.spectrum);
  const MeasureSet m = entfluc::measures(dec.spectrum);

  io::RunManifest manifest;
  manifest.command = "analyze";
  manifest.parameters = {{"state", state_path},
                         {"tol_rank", io::format_double(tol_rank)}};
  manifest.output = out;

  nlohmann::ordered_json payload;
  payload["manifest"] = io::to_json(manifest);
  payload["dim_q"] = state.dim_q;
  payload["dim_b"] = state.dim_b;
  payload["rank"] = dec.spectrum.rank();
  payload["spectrum"] = dec.spectrum.probabilities();
  payload["per_component"] = report.per_component;
  payload["total"] = report.total;
  payload["purity"] = m.purity;
  payload["linear_entropy"] = m.linear_entropy;
  payload["von_neumann"] = m.von_neumann;
  payload["concurrence"] = m.concurrence;
  payload["generator_total"] = report.generator_total;
  payload["residual_main"] = report.residual_main;
  payload["residual_generator"] = report.residual_generator;
  emit_json(payload, out);
  return 0;
}

int run_free_fermion(const std::vector<double>& fillings, int m_max,
                     const std::string& out) {
  if (fillings.empty()) {
    throw entfluc::InvalidFilling("free-fermion: at least one --nu required");
  }
  for (double nu : fillings) {
    if (!(nu > 0.0 && nu < 1.0)) {
      throw entfluc::InvalidFilling("free-fermion: filling " +
                                    io::format_double(nu) +
                                    " outside (0, 1)");
    }
  }
  if (m_max < 1) {
    throw entfluc::InvalidDimension("free-fermion: --m-max must be >= 1");
  }
  std::vector<int> blocks(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) blocks[static_cast<std::size_t>(m) - 1] = m;
  const auto rows = entfluc::free_fermion::sweep(fillings, blocks);

  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& row : rows) {
    cells.push_back({io::format_double(row.filling),
                     std::to_string(row.block_size),
                     io::format_double(row.linear_entropy),
                     io::format_double(row.purity)});
  }
  io::write_csv(out, {"nu", "M", "S_L", "purity"}, cells);

  io::RunManifest manifest;
  manifest.command = "free-fermion";
  std::string nu_list;
  for (std::size_t i = 0; i < fillings.size(); ++i) {
    if (i > 0) nu_list += ',';
    nu_list += io::format_double(fillings[i]);
  }
  manifest.parameters = {{"nu", nu_list}, {"m_max", std::to_string(m_max)}};
  manifest.output = out;
  io::write_manifest(manifest);
  return 0;
}

int run_aklt(int l_max, bool with_oracle, const std::string& out) {
  if (l_max < 1) {
    throw entfluc::InvalidDimension("aklt: --l-max must be >= 1");
  }
  const int limit = with_oracle ? entfluc::aklt::kMaxOracleBlock : 64;
  if (l_max > limit) {
    throw entfluc::BlockTooLong("aklt: --l-max limited to " +
                                std::to_string(limit) +
                                (with_oracle ? " with --with-oracle" : ""));
  }

  std::vector<std::string> header = {"l", "p1", "p2", "p3", "p4",
                                     "fluctuation", "purity"};
  if (with_oracle) header.push_back("oracle_max_dev");
  std::vector<std::vector<std::string>> cells;
  for (int l = 1; l <= l_max; ++l) {
    const auto weights = entfluc::aklt::closed_form_weights(l);
    std::vector<std::string> row = {
        std::to_string(l),
        io::format_double(weights.triplet),
        io::format_double(weights.triplet),
        io::format_double(weights.triplet),
        io::format_double(weights.singlet),
        io::format_double(entfluc::aklt::fluctuation(l)),
        io::format_double(entfluc::aklt::purity(l))};
    if (with_oracle) {
      const auto closed = entfluc::aklt::closed_form_spectrum(l).probabilities();
      const auto oracle = entfluc::aklt::mps_block_spectrum(l).probabilities();
      double dev = 0.0;
      for (std::size_t j = 0; j < 4; ++j) {
        const double a = j < closed.size() ? closed[j] : 0.0;
        const double b = j < oracle.size() ? oracle[j] : 0.0;
        dev = std::max(dev, std::abs(a - b));
      }
      row.push_back(io::format_double(dev));
    }
    cells.push_back(std::move(row));
  }
  io::write_csv(out, header, cells);

  io::RunManifest manifest;
  manifest.command = "aklt";
  manifest.parameters = {{"l_max", std::to_string(l_max)},
                         {"with_oracle", with_oracle ? "true" : "false"}};
  manifest.output = out;
  io::write_manifest(manifest);
  return 0;
}

int run_validate(std::uint64_t seed, int n_samples, const std::string& out) {
  const entfluc::validation::Summary summary =
      entfluc::validation::run(seed, n_samples);

  io::RunManifest manifest;
  manifest.command = "validate";
  manifest.parameters = {{"n_samples", std::to_string(n_samples)}};
  manifest.seed = seed;
  manifest.output = out;

  nlohmann::ordered_json payload;
  payload["manifest"] = io::to_json(manifest);
  const nlohmann::ordered_json body = entfluc::validation::to_json(summary);
  for (const auto& [key, value] : body.items()) {
    payload[key] = value;
  }
  emit_json(payload, out);
  return summary.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite entanglement from subsystem fluctuations"};
  app.set_version_flag("--version", entfluc::kVersion);
  app.require_subcommand(1);

  std::string state_path;
  double tol_rank = entfluc::kDefaultRankTol;
  std::string analyze_out;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "fluctuation report for a JSON state vector");
  analyze->add_option("--state", state_path, "state vector JSON file")
      ->required();
  analyze->add_option("--tol-rank", tol_rank,
                      "Schmidt probabilities at or below this are discarded");
  analyze->add_option("--out", analyze_out, "output JSON path (default stdout)");

  std::vector<double> fillings;
  int m_max = 1;
  std::string fermion_out;
  CLI::App* fermion = app.add_subcommand(
      "free-fermion", "block linear entropy sweep of the free fermion chain");
  fermion->add_option("--nu", fillings, "fermion filling(s) in (0, 1)")
      ->required();
  fermion->add_option("--m-max", m_max, "largest block size")->required();
  fermion->add_option("--out", fermion_out, "output CSV path")->required();

  int l_max = 1;
  bool with_oracle = false;
  std::string aklt_out;
  CLI::App* aklt_cmd =
      app.add_subcommand("aklt", "AKLT block entanglement table");
  aklt_cmd->add_option("--l-max", l_max, "largest block length")->required();
  aklt_cmd->add_flag("--with-oracle", with_oracle,
                     "cross-check against the matrix-product oracle");
  aklt_cmd->add_option("--out", aklt_out, "output CSV path")->required();

  std::uint64_t seed = 42;
  int n_samples = 100;
  std::string validate_out;
  CLI::App* validate =
      app.add_subcommand("validate", "run the seeded property battery");
  validate->add_option("--seed", seed, "random seed (default 42)");
  validate->add_option("--n-samples", n_samples,
                       "samples per randomized property (default 100)");
  validate->add_option("--out", validate_out,
                       "output JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(state_path, tol_rank, analyze_out);
    if (fermion->parsed()) return run_free_fermion(fillings, m_max, fermion_out);
    if (aklt_cmd->parsed()) return run_aklt(l_max, with_oracle, aklt_out);
    if (validate->parsed()) return run_validate(seed, n_samples, validate_out);
  } catch (const entfluc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
