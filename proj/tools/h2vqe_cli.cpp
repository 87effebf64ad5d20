// Command-line front end: VQE/VQD dissociation-curve sweeps, single-point
// solves, exact-spectrum reports, and plot-script generation.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "h2vqe/h2vqe.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace h2vqe;

constexpr const char* kToolVersion = "1.0.0";

#ifndef H2VQE_DEFAULT_TABLE
#define H2VQE_DEFAULT_TABLE "data/h2_coefficients.csv"
#endif

// Exit codes: 0 ok, 1 usage, 2 data/parse/io, 3 accuracy failure (exact mode).
enum ExitCode { kOk = 0, kUsage = 1, kDataError = 2, kAccuracyError = 3 };

std::string fnv1a64_of_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open coefficient table '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// SOURCE_DATE_EPOCH wins when set, so reruns can be byte-identical.
std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH")) t = std::atoll(e);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct CommonOptions {
  std::string table_path = H2VQE_DEFAULT_TABLE;
  std::string formulation = "one-qubit";
  std::string mode = "exact";
  int shots = 4096;
  std::uint64_t seed = 20240314;
  std::string beta = "auto";  // "auto" or a decimal number
};

Formulation parse_formulation(const std::string& s) {
  return s == "two-qubit" ? Formulation::TwoQubit : Formulation::OneQubit;
}

std::optional<double> parse_beta(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("--beta must be 'auto' or a number, got '" + s + "'");
  }
}

json optimizer_json(const NelderMeadConfig& cfg) {
  return json{{"initial_step", cfg.initial_step},
              {"reflection", cfg.reflection},
              {"expansion", cfg.expansion},
              {"contraction", cfg.contraction},
              {"shrink", cfg.shrink},
              {"f_tolerance", cfg.f_tolerance},
              {"x_tolerance", cfg.x_tolerance},
              {"max_evaluations", cfg.max_evaluations},
              {"starts", {-0.7853981633974483, 0.0, 0.7853981633974483}}};
}

json manifest_skeleton(const std::string& command, const CommonOptions& opt) {
  json m;
  m["tool"] = "h2vqe";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["timestamp"] = utc_timestamp();
  m["table"] = {{"path", opt.table_path}, {"fnv1a64", fnv1a64_of_file(opt.table_path)}};
  m["formulation"] = opt.formulation;
  m["mode"] = opt.mode;
  m["shots"] = opt.shots;
  m["seed"] = opt.seed;
  if (opt.beta == "auto")
    m["beta"] = "auto";
  else
    m["beta"] = *parse_beta(opt.beta);
  m["optimizer"] = optimizer_json(NelderMeadConfig{});
  return m;
}

struct SolvedPoint {
  EnergyPoint point;
  double oracle_energy;
  double energy;          // reported energy (sampled in shots mode)
  double standard_error;  // 0 in exact mode
  std::uint64_t seed;     // per-point seed in shots mode
};

double oracle_level_energy(const SpectrumReport& report, Block b, int level) {
  const auto& pair = b == Block::A ? report.eigenvalues_A : report.eigenvalues_B;
  return pair[static_cast<std::size_t>(level)];
}

// Solves all four levels of every row and attaches oracle values plus, in
// shots mode, a sampled readout energy at the optimal angle.
std::vector<SolvedPoint> sweep(const CoefficientTable& table, const CommonOptions& opt) {
  const Formulation formulation = parse_formulation(opt.formulation);
  const std::optional<double> beta = parse_beta(opt.beta);
  const bool sampled = opt.mode == "shots";

  std::vector<SolvedPoint> out;
  std::uint64_t stream = 0;
  for (const auto& row : table.rows()) {
    const SpectrumReport report = full_report(row);
    const auto points = solve_all_levels(row, formulation, beta);
    for (const auto& p : points) {
      SolvedPoint sp;
      sp.point = p;
      sp.oracle_energy = oracle_level_energy(report, p.block, p.level);
      sp.seed = derived_seed(opt.seed, stream++);
      if (sampled) {
        const StateVector psi = prepare(family_for(formulation, p.block), p.theta_opt);
        const EnergyEstimate est =
            energy_from_measurements(row, p.block, psi, opt.shots, sp.seed);
        sp.energy = est.energy;
        sp.standard_error = est.standard_error;
      } else {
        sp.energy = p.energy;
        sp.standard_error = 0.0;
      }
      out.push_back(sp);
    }
  }
  return out;
}

json result_json(const SolvedPoint& sp, bool sampled, int shots) {
  json r;
  r["R"] = sp.point.R;
  r["formulation"] = to_string(sp.point.formulation);
  r["block"] = to_string(sp.point.block);
  r["level"] = sp.point.level;
  r["energy"] = sp.energy;
  r["theta_opt"] = sp.point.theta_opt;
  r["evaluations"] = sp.point.evaluations;
  r["converged"] = sp.point.converged;
  r["oracle_energy"] = sp.oracle_energy;
  r["abs_error"] = std::abs(sp.energy - sp.oracle_energy);
  if (sampled) {
    r["energy_stderr"] = sp.standard_error;
    r["shots"] = shots;
    r["seed"] = sp.seed;
  }
  return r;
}

void write_or_throw(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output path '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

int cmd_curve(const CommonOptions& opt, const std::string& out_path) {
  const CoefficientTable table = load_table_file(opt.table_path);
  const bool sampled = opt.mode == "shots";
  const std::vector<SolvedPoint> points = sweep(table, opt);

  const std::string manifest_path = out_path + ".manifest.json";
  json manifest = manifest_skeleton("curve", opt);
  manifest["output"] = out_path;
  json results = json::array();
  for (const auto& sp : points) results.push_back(result_json(sp, sampled, opt.shots));
  manifest["results"] = results;

  std::ostringstream csv;
  csv << "# manifest: " << manifest_path << "\n";
  csv << "R,block,level,energy,theta_opt,evaluations,oracle_energy,abs_error";
  if (sampled) csv << ",energy_stderr";
  csv << "\n";
  for (const auto& sp : points) {
    csv << fixed6(sp.point.R) << ',' << to_string(sp.point.block) << ',' << sp.point.level
        << ',' << fixed6(sp.energy) << ',' << fixed6(sp.point.theta_opt) << ','
        << sp.point.evaluations << ',' << fixed6(sp.oracle_energy) << ','
        << fixed6(std::abs(sp.energy - sp.oracle_energy));
    if (sampled) csv << ',' << fixed6(sp.standard_error);
    csv << "\n";
  }
  write_or_throw(out_path, csv.str());
  write_or_throw(manifest_path, manifest.dump(2) + "\n");

  if (!sampled) {
    for (const auto& sp : points)
      if (std::abs(sp.energy - sp.oracle_energy) >= 1e-6) {
        std::cerr << "accuracy failure: R=" << sp.point.R << " block "
                  << to_string(sp.point.block) << " level " << sp.point.level
                  << " abs_error=" << std::abs(sp.energy - sp.oracle_energy) << "\n";
        return kAccuracyError;
      }
  }
  std::cout << "wrote " << points.size() << " points to " << out_path << "\n";
  return kOk;
}

int cmd_point(const CommonOptions& opt, double R, const std::string& block_name, int level) {
  const CoefficientTable table = load_table_file(opt.table_path);
  const CoefficientRow& row = table.row_at(R);  // off-grid R throws
  const Block block = block_name == "B" ? Block::B : Block::A;
  const Formulation formulation = parse_formulation(opt.formulation);
  const std::optional<double> beta = parse_beta(opt.beta);

  const auto points = solve_all_levels(row, formulation, beta);
  const SpectrumReport report = full_report(row);
  for (const auto& p : points) {
    if (p.block != block || p.level != level) continue;
    SolvedPoint sp;
    sp.point = p;
    sp.oracle_energy = oracle_level_energy(report, block, level);
    sp.seed = derived_seed(opt.seed, 0);
    if (opt.mode == "shots") {
      const StateVector psi = prepare(family_for(formulation, block), p.theta_opt);
      const EnergyEstimate est = energy_from_measurements(row, block, psi, opt.shots, sp.seed);
      sp.energy = est.energy;
      sp.standard_error = est.standard_error;
    } else {
      sp.energy = p.energy;
      sp.standard_error = 0.0;
    }
    json out = result_json(sp, opt.mode == "shots", opt.shots);
    out["manifest"] = manifest_skeleton("point", opt);
    std::cout << out.dump(2) << "\n";
    if (opt.mode == "exact" && std::abs(sp.energy - sp.oracle_energy) >= 1e-6) {
      std::cerr << "accuracy failure: abs_error=" << std::abs(sp.energy - sp.oracle_energy)
                << "\n";
      return kAccuracyError;
    }
    return kOk;
  }
  throw Error("level must be 0 or 1 and block A or B");
}

int cmd_oracle(const CommonOptions& opt, const std::string& out_path) {
  const CoefficientTable table = load_table_file(opt.table_path);
  const std::string manifest_path = out_path + ".manifest.json";

  std::ostringstream csv;
  csv << "# manifest: " << manifest_path << "\n";
  csv << "R,e1,e2,e3,e4,eA1,eA2,eB1,eB2,residual,block_union\n";
  bool all_ok = true;
  for (const auto& row : table.rows()) {
    const SpectrumReport r = full_report(row);
    std::array<double, 4> merged = {r.eigenvalues_A[0], r.eigenvalues_A[1], r.eigenvalues_B[0],
                                    r.eigenvalues_B[1]};
    std::sort(merged.begin(), merged.end());
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i)
      ok = ok && std::abs(merged[i] - r.eigenvalues_4q[i]) <= 1e-10;
    all_ok = all_ok && ok;
    std::cout << "R=" << fixed6(row.R) << " block-union " << (ok ? "PASS" : "FAIL") << "\n";

    csv << fixed6(row.R);
    for (double v : r.eigenvalues_4q) csv << ',' << fixed6(v);
    csv << ',' << fixed6(r.eigenvalues_A[0]) << ',' << fixed6(r.eigenvalues_A[1]) << ','
        << fixed6(r.eigenvalues_B[0]) << ',' << fixed6(r.eigenvalues_B[1]);
    char res[24];
    std::snprintf(res, sizeof(res), "%.3e", r.residual);
    csv << ',' << res << ',' << (ok ? "PASS" : "FAIL") << "\n";
  }
  write_or_throw(out_path, csv.str());

  json manifest = manifest_skeleton("oracle", opt);
  manifest["output"] = out_path;
  write_or_throw(manifest_path, manifest.dump(2) + "\n");
  return all_ok ? kOk : kAccuracyError;
}

struct CurveFile {
  bool sampled = false;
  // columns: R, block(0/1), level, energy, theta, evals, oracle, abs_err[, stderr]
  std::vector<std::array<double, 9>> rows;
};

CurveFile parse_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open curve file '" + path + "'");
  CurveFile cf;
  std::string line;
  int line_number = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!seen_header) {
      if (cells.size() != 8 && cells.size() != 9)
        throw ParseError("curve header must have 8 or 9 columns", line_number);
      if (cells[0] != "R" || cells[1] != "block")
        throw ParseError("not a curve file (header mismatch)", line_number);
      cf.sampled = cells.size() == 9;
      seen_header = true;
      continue;
    }
    if (cells.size() != (cf.sampled ? 9u : 8u))
      throw ParseError("wrong cell count in curve row", line_number);
    std::array<double, 9> row{};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == 1) {
        if (cells[i] != "A" && cells[i] != "B")
          throw ParseError("block must be A or B", line_number);
        row[i] = cells[i] == "A" ? 0.0 : 1.0;
        continue;
      }
      try {
        row[i] = std::stod(cells[i]);
      } catch (const std::exception&) {
        throw ParseError("non-numeric cell '" + cells[i] + "'", line_number);
      }
    }
    cf.rows.push_back(row);
  }
  if (!seen_header || cf.rows.empty()) throw ParseError("curve file has no data", line_number);
  return cf;
}

int cmd_plot(const std::string& curve_path, const std::string& out_path) {
  const CurveFile cf = parse_curve_file(curve_path);
  const std::string data_path = out_path + ".dat";

  std::ostringstream dat;
  dat << "# from " << curve_path << " (manifest: " << curve_path << ".manifest.json)\n";
  dat << "# R block level energy theta_opt evaluations oracle_energy abs_error";
  if (cf.sampled) dat << " energy_stderr";
  dat << "\n";
  for (const auto& r : cf.rows) {
    for (std::size_t i = 0; i < (cf.sampled ? 9u : 8u); ++i) {
      if (i) dat << ' ';
      if (i == 1 || i == 2 || i == 5)
        dat << static_cast<long long>(r[i]);
      else
        dat << fixed6(r[i]);
    }
    dat << "\n";
  }
  write_or_throw(data_path, dat.str());

  std::ostringstream gp;
  gp << "# Energy curves generated from " << curve_path << " (manifest: " << curve_path
     << ".manifest.json)\n";
  gp << "# Render with: gnuplot -persist " << out_path << "\n";
  gp << "set xlabel 'R (Angstrom)'\n";
  gp << "set ylabel 'Energy (Hartree)'\n";
  gp << "set key outside right\n";
  gp << "set grid\n";
  const char* names[4] = {"block A level 0", "block A level 1", "block B level 0",
                          "block B level 1"};
  gp << "plot \\\n";
  for (int b = 0; b < 2; ++b)
    for (int l = 0; l < 2; ++l) {
      const int idx = b * 2 + l;
      const std::string sel = "($2==" + std::to_string(b) + " && $3==" + std::to_string(l) + " ? ";
      if (cf.sampled) {
        // Oracle line underneath, sampled points with error bars on top.
        gp << "  '" << data_path << "' using 1:" << sel << "$7 : 1/0) with lines lw 2 title '"
           << names[idx] << " (exact)', \\\n";
        gp << "  '" << data_path << "' using 1:" << sel << "$4 : 1/0):" << sel
           << "$9 : 1/0) with yerrorbars pt 7 title '" << names[idx] << " (sampled)'";
      } else {
        gp << "  '" << data_path << "' using 1:" << sel << "$4 : 1/0) with lines lw 2 title '"
           << names[idx] << "'";
      }
      gp << (idx == 3 ? "\n" : ", \\\n");
    }
  write_or_throw(out_path, gp.str());
  std::cout << "wrote " << out_path << " and " << data_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational ground- and excited-state energies of the parity-mapped H2 "
               "Hamiltonian, with an exact-diagonalization cross-check"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string out_path;
  double point_R = 0.0;
  std::string point_block = "A";
  int point_level = 0;
  std::string curve_path;

  const auto add_common = [&](CLI::App* sub, bool with_solver_flags) {
    sub->add_option("--table", opt.table_path, "Coefficient CSV (R,a0,a1,a2,a3,a4)")
        ->capture_default_str();
    if (with_solver_flags) {
      sub->add_option("--formulation", opt.formulation, "Qubit formulation")
          ->check(CLI::IsMember({"two-qubit", "one-qubit"}))
          ->capture_default_str();
      sub->add_option("--mode", opt.mode, "Energy evaluation at the optimum")
          ->check(CLI::IsMember({"exact", "shots"}))
          ->capture_default_str();
      sub->add_option("--shots", opt.shots, "Shots per expectation value (shots mode)")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      sub->add_option("--seed", opt.seed, "Base RNG seed (shots mode)")->capture_default_str();
      sub->add_option("--beta", opt.beta,
                      "Deflation weight in Hartree, or 'auto' for max(3, 1.5x spread)")
          ->capture_default_str();
    }
  };

  CLI::App* curve = app.add_subcommand("curve", "Sweep all tabulated distances, write CSV");
  add_common(curve, true);
  curve->add_option("--out", out_path, "Output CSV path")->required();

  CLI::App* point = app.add_subcommand("point", "Solve one (R, block, level), print JSON");
  add_common(point, true);
  point->add_option("--R", point_R, "Internuclear distance on the grid")->required();
  point->add_option("--block", point_block, "Invariant block")
      ->check(CLI::IsMember({"A", "B"}));
  point->add_option("--level", point_level, "0 = block ground, 1 = block excited")
      ->check(CLI::Range(0, 1));

  CLI::App* oracle = app.add_subcommand("oracle", "Exact spectra of every row, write CSV");
  add_common(oracle, false);
  oracle->add_option("--out", out_path, "Output CSV path")->required();

  CLI::App* plot = app.add_subcommand("plot", "Generate a gnuplot script from a curve CSV");
  plot->add_option("--curve", curve_path, "Curve CSV produced by the curve command")
      ->required();
  plot->add_option("--out", out_path, "Output script path (data goes to <out>.dat)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (curve->parsed()) return cmd_curve(opt, out_path);
    if (point->parsed()) return cmd_point(opt, point_R, point_block, point_level);
    if (oracle->parsed()) return cmd_oracle(opt, out_path);
    if (plot->parsed()) return cmd_plot(curve_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
