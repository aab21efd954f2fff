// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsh/circuit.hpp"
#include "hsh/closedform.hpp"
#include "hsh/partition.hpp"
#include "hsh/verify.hpp"

namespace hsh {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// All floating output goes through here: 12 significant digits, so
// identical inputs render byte-identically in both CSV and JSON.
std::string format_float(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double rounded(double v) { return std::stod(format_float(v)); }

nlohmann::json complex_json(std::complex<double> v) {
  return {{"re", rounded(v.real())}, {"im", rounded(v.imag())}};
}

int cmd_table(int n, const std::string& format, bool exact,
              std::ostream& out) {
  const std::uint64_t count = std::uint64_t{1} << n;
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      const UnnormalizedAmplitude row = table_row(n, z);
      const auto amp = row.normalized();
      nlohmann::json item;
      item["z"] = z.binary();
      if (exact) item["a_z"] = row.value.str();
      item["amplitude"] = complex_json(amp);
      item["probability"] = rounded(row.probability());
      rows.push_back(std::move(item));
    }
    nlohmann::json doc;
    doc["n"] = n;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
  } else {
    out << (exact ? "z,a_z,amplitude_re,amplitude_im,probability\n"
                  : "z,amplitude_re,amplitude_im,probability\n");
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      const UnnormalizedAmplitude row = table_row(n, z);
      const auto amp = row.normalized();
      out << z.binary() << ',';
      if (exact) out << row.value.str() << ',';
      out << format_float(amp.real()) << ',' << format_float(amp.imag())
          << ',' << format_float(row.probability()) << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(int max_n, std::ostream& out) {
  const VerifyReport report = run_verification(max_n);
  render_verify_report(report, out);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

std::vector<std::int64_t> load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open instance file: " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid instance file " + path + ": " +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("weights") ||
      !doc["weights"].is_array()) {
    throw std::invalid_argument(
        "instance file must be a JSON object with a \"weights\" array");
  }
  std::vector<std::int64_t> weights;
  for (const auto& v : doc["weights"]) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument("weights must be integers");
    }
    weights.push_back(v.get<std::int64_t>());
  }
  return weights;
}

void render_run_csv(const CircuitResult& result, std::ostream& out) {
  const int n = result.layout.n;
  std::vector<const SolutionDiagnostic*> by_state(result.probabilities.size(),
                                                  nullptr);
  for (const auto& d : result.solutions) by_state[d.state.value] = &d;

  out << "x,probability,is_solution,branch0_re,branch0_im,branch1_re,"
         "branch1_im,residual_exact,doubling_ratio\n";
  for (std::uint64_t x = 0; x < result.probabilities.size(); ++x) {
    const BitString xs(x, n);
    out << xs.binary() << ',' << format_float(result.probabilities[x]) << ',';
    if (const SolutionDiagnostic* d = by_state[x]) {
      out << "1," << format_float(d->branch0.real()) << ','
          << format_float(d->branch0.imag()) << ','
          << format_float(d->branch1.real()) << ','
          << format_float(d->branch1.imag()) << ','
          << (d->exact_residual ? d->exact_residual->str() : "") << ','
          << format_float(d->doubling_ratio) << '\n';
    } else {
      out << "0,,,,,,\n";
    }
  }
}

nlohmann::json run_json(const CircuitResult& result) {
  const int n = result.layout.n;
  nlohmann::json doc;
  doc["mode"] = result.mode == SimulationMode::fast ? "fast" : "full";
  doc["register"] = {{"n", result.layout.n},
                     {"m", result.layout.m},
                     {"total", result.layout.total},
                     {"half_sum", result.layout.half}};
  nlohmann::json probs = nlohmann::json::object();
  for (std::uint64_t x = 0; x < result.probabilities.size(); ++x) {
    probs[BitString(x, n).binary()] = rounded(result.probabilities[x]);
  }
  doc["probabilities"] = std::move(probs);
  nlohmann::json states = nlohmann::json::array();
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& d : result.solutions) {
    states.push_back(d.state.binary());
    nlohmann::json item;
    item["state"] = d.state.binary();
    item["branch0"] = complex_json(d.branch0);
    item["branch1"] = complex_json(d.branch1);
    if (d.exact_residual) item["residual_exact"] = d.exact_residual->str();
    item["probability"] = rounded(d.probability);
    item["doubling_ratio"] = rounded(d.doubling_ratio);
    diags.push_back(std::move(item));
  }
  doc["solutions"] = std::move(states);
  doc["solution_diagnostics"] = std::move(diags);
  doc["sigma_residual_mass"] = rounded(result.sigma_residual_mass);
  return doc;
}

int cmd_run(const std::string& path, const std::string& mode,
            const std::string& format, std::ostream& out, std::ostream& err) {
  const PartitionInstance instance(load_weights(path));
  const CircuitResult result =
      mode == "full" ? run_full(instance) : run_fast(instance);

  err << "half-sum: " << result.layout.half << " (register n=" << result.layout.n
      << " m=" << result.layout.m << " total=" << result.layout.total << ")\n";
  err << "solutions: " << result.solutions.size() << '\n';
  if (result.solutions.size() != 2) {
    err << "warning: instance has " << result.solutions.size()
        << " solution states; the closed-form residual applies only to "
           "two-solution instances\n";
  }
  if (format == "json") {
    out << run_json(result).dump(2) << '\n';
  } else {
    render_run_csv(result, out);
  }
  return kExitOk;
}

int cmd_ratio(int min_n, int max_n, const std::string& rule, int fixed_weight,
              const std::string& format, std::ostream& out) {
  std::function<int(int)> weight_rule;
  if (rule == "half") {
    weight_rule = [](int n) { return n / 2; };
  } else {
    if (fixed_weight < 0 || fixed_weight > min_n) {
      throw std::invalid_argument(
          "--weight must lie in [0, min-n] for the fixed rule");
    }
    weight_rule = [fixed_weight](int) { return fixed_weight; };
  }
  const auto rows = doubling_ratio_sweep(min_n, max_n, weight_rule);
  if (format == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& row : rows) {
      items.push_back({{"n", row.n},
                       {"weight", row.weight},
                       {"residual_norm_sq", row.residual_norm_sq},
                       {"predicted_probability",
                        rounded(row.predicted_probability)},
                       {"ratio", rounded(row.ratio)},
                       {"ratio_error_bound", rounded(row.bound)}});
    }
    nlohmann::json doc;
    doc["rows"] = std::move(items);
    out << doc.dump(2) << '\n';
  } else {
    out << "n,weight,residual_norm_sq,predicted_probability,ratio,"
           "ratio_error_bound\n";
    for (const auto& row : rows) {
      out << row.n << ',' << row.weight << ',' << row.residual_norm_sq << ','
          << format_float(row.predicted_probability) << ','
          << format_float(row.ratio) << ',' << format_float(row.bound)
          << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "exact and statevector simulation of the H-S-H amplitude-doubling "
      "circuit for the partition problem"};
  app.name("hsh");
  app.require_subcommand(1);

  int table_n = 0;
  std::string table_format = "csv";
  bool table_exact = false;
  auto* table = app.add_subcommand(
      "table", "print the amplitude table of the n-qubit H.S.H sandwich");
  table->add_option("--n", table_n, "qubit count")
      ->required()
      ->check(CLI::Range(1, 24));
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--exact", table_exact,
                  "include the exact unnormalized amplitude column");

  int verify_max_n = 0;
  auto* verify = app.add_subcommand(
      "verify", "run every exact identity check up to a register width");
  verify->add_option("--max-n", verify_max_n, "largest qubit count checked")
      ->required()
      ->check(CLI::Range(1, 16));

  std::string run_instance;
  std::string run_mode = "fast";
  std::string run_format = "csv";
  auto* run = app.add_subcommand(
      "run", "simulate the doubling circuit on a partition instance");
  run->add_option("--instance", run_instance,
                  "JSON file with {\"weights\": [...]}")
      ->required();
  run->add_option("--mode", run_mode, "simulation mode")
      ->check(CLI::IsMember({"fast", "full"}));
  run->add_option("--format", run_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  int ratio_min_n = 0;
  int ratio_max_n = 0;
  std::string ratio_rule = "half";
  int ratio_weight = 0;
  std::string ratio_format = "csv";
  auto* ratio = app.add_subcommand(
      "ratio", "closed-form doubling-ratio sweep over a range of n");
  ratio->add_option("--min-n", ratio_min_n, "first qubit count")
      ->required()
      ->check(CLI::Range(1, 30));
  ratio->add_option("--max-n", ratio_max_n, "last qubit count")
      ->required()
      ->check(CLI::Range(1, 30));
  ratio->add_option("--weight-rule", ratio_rule,
                    "how the solution weight is chosen per n")
      ->check(CLI::IsMember({"fixed", "half"}));
  ratio->add_option("--weight", ratio_weight,
                    "solution weight used by the fixed rule");
  ratio->add_option("--format", ratio_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hsh");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_n, table_format, table_exact, out);
    if (*verify) return cmd_verify(verify_max_n, out);
    if (*run) return cmd_run(run_instance, run_mode, run_format, out, err);
    if (*ratio) {
      if (ratio_min_n > ratio_max_n) {
        throw std::invalid_argument("--min-n must not exceed --max-n");
      }
      return cmd_ratio(ratio_min_n, ratio_max_n, ratio_rule, ratio_weight,
                       ratio_format, out);
    }
  } catch (const RejectedInstance& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hsh
