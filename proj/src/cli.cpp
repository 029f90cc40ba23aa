//  Copyright 2026 The Latticeflow Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latticeflow/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "latticeflow/confluence.hpp"
#include "latticeflow/laws.hpp"
#include "latticeflow/scenarios.hpp"

namespace latticeflow {

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
  out << bytes;
}

int run_command(const std::string& config_path, std::int64_t seed_override,
                bool has_seed, const std::string& format,
                const std::string& trace_path, std::ostream& out) {
  ScenarioConfig cfg = ScenarioConfig::parse_file(config_path);
  if (has_seed) cfg.seed = static_cast<std::uint64_t>(seed_override);

  const ScenarioResult result = run_scenario(cfg);
  const std::string report = format == "structured"
                                 ? render_json(cfg, result).dump(2) + "\n"
                                 : render_text(cfg, result);
  out << report;

  std::string trace_target = trace_path;
  const char* out_dir = std::getenv("LATTICEFLOW_OUT_DIR");
  if (out_dir != nullptr && *out_dir != '\0') {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const char* report_name =
        format == "structured" ? "report.json" : "report.txt";
    write_file(dir / report_name, report);
    if (trace_target.empty()) trace_target = (dir / "trace.jsonl").string();
  }
  if (!trace_target.empty()) write_file(trace_target, to_jsonl(result.trace));
  return 0;
}

int laws_command(std::uint64_t iterations, std::uint64_t seed,
                 std::ostream& out) {
  const std::vector<LawResult> results = run_law_suites(iterations, seed);
  for (const LawResult& r : results) {
    if (r.passed())
      out << "PASS " << r.name << " (" << r.iterations << " iterations)\n";
    else
      out << "FAIL " << r.name << " (" << r.failures << "/" << r.iterations
          << " failed; first: " << r.first_failure << ")\n";
  }
  out << (all_passed(results) ? "all laws passed\n" : "law violations found\n");
  return all_passed(results) ? 0 : 1;
}

int fuzz_command(int max_ops, int replicas, std::ostream& out) {
  std::uint64_t total_sequences = 0;
  std::uint64_t total_failures = 0;
  for (ConfluenceKind kind : {ConfluenceKind::OrSet, ConfluenceKind::PnCounter}) {
    const char* name = kind == ConfluenceKind::OrSet ? "orset" : "pncounter";
    const ConfluenceReport report = fuzz_confluence(kind, max_ops, replicas);
    out << name << ": " << report.scripts << " scripts, " << report.sequences
        << " delivery sequences, " << report.failures << " failures\n";
    if (report.failures > 0) out << "  first failure: " << report.first_failure << "\n";
    total_sequences += report.sequences;
    total_failures += report.failures;
  }
  out << "interleavings checked: " << total_sequences << "\n";
  out << (total_failures == 0 ? "confluence holds\n" : "confluence violated\n");
  return total_failures == 0 ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Convergent-dataflow toolkit: lattice law suites, confluence "
               "fuzzing, and epidemic dissemination scenarios"};
  app.require_subcommand(1);

  std::string config_path;
  std::int64_t seed = 0;
  std::string format = "text";
  std::string trace_path;
  CLI::App* run = app.add_subcommand("run", "run a scenario from a config file");
  run->add_option("--config", config_path, "scenario config path")->required();
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "override the config seed");
  run->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  run->add_option("--trace", trace_path, "write the JSONL trace here");

  std::uint64_t iterations = 1000;
  std::uint64_t laws_seed = 7;
  CLI::App* laws = app.add_subcommand("laws", "run randomized property suites");
  laws->add_option("--iterations", iterations, "iterations per law");
  laws->add_option("--seed", laws_seed, "generator seed");

  int max_ops = 4;
  int replicas = 3;
  std::uint64_t fuzz_seed = 0;
  CLI::App* fuzz =
      app.add_subcommand("fuzz", "exhaustive confluence oracle over small scripts");
  fuzz->add_option("--max-ops", max_ops, "mutations per script, up to 5");
  fuzz->add_option("--replicas", replicas, "replica count, up to 4");
  fuzz->add_option("--seed", fuzz_seed,
                   "accepted for interface uniformity; the enumeration is "
                   "exhaustive");

  std::vector<const char*> argv;
  argv.push_back("latticeflow");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run->parsed())
      return run_command(config_path, seed, seed_opt->count() > 0, format,
                         trace_path, out);
    if (laws->parsed()) return laws_command(iterations, laws_seed, out);
    if (fuzz->parsed()) return fuzz_command(max_ops, replicas, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace latticeflow
