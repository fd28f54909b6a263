// Copyright 2026 The genleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run, resume and report experiments.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "genleak/expcli/pipeline.hpp"
#include "genleak/expcli/report.hpp"
#include "genleak/numcore/errors.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitIo = 4;

void print_manifest_summary(const genleak::RunManifest& m,
                            const std::filesystem::path& dir) {
  std::printf("config %s, %zu stages, manifest %s\n", m.config_hash.c_str(),
              m.stages.size(), (dir / "manifest.json").string().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership-privacy experiments on small generative models"};
  app.require_subcommand(1);

  int threads = 1;
  std::string config_path;
  std::string manifest_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed_override;

  CLI::App* run = app.add_subcommand("run", "Run an experiment from a config file");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory (overrides the config)");
  run->add_option("--threads", threads, "Worker threads for attacks")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed-override", seed_override, "Replace the config's master_seed");

  CLI::App* resume = app.add_subcommand("resume", "Finish or replay a run");
  resume->add_option("--manifest", manifest_path, "manifest.json of the run")->required();
  resume->add_option("--threads", threads, "Worker threads for attacks")
      ->check(CLI::PositiveNumber);

  CLI::App* report = app.add_subcommand("report", "Summarize a completed run");
  report->add_option("--manifest", manifest_path, "manifest.json of the run")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*run) {
      std::optional<std::filesystem::path> out;
      if (!out_dir.empty()) out = out_dir;
      const genleak::RunManifest m =
          genleak::run_experiment(config_path, out, threads, seed_override);
      print_manifest_summary(m, out ? *out : std::filesystem::path("."));
    } else if (*resume) {
      const genleak::RunManifest m = genleak::resume(manifest_path, threads);
      print_manifest_summary(m, std::filesystem::path(manifest_path).parent_path());
    } else if (*report) {
      const genleak::Report r = genleak::report(manifest_path);
      std::fputs(r.csv.c_str(), stdout);
    }
  } catch (const genleak::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const genleak::DivergenceError& e) {
    std::fprintf(stderr, "training diverged: %s\n", e.what());
    return kExitDivergence;
  } catch (const genleak::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kExitIo;
  } catch (const genleak::FormatError& e) {
    std::fprintf(stderr, "file format error: %s\n", e.what());
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
