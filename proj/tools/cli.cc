// Copyright 2026 The steadydim Authors
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
#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "steadydim/network.h"
#include "steadydim/nondegen.h"
#include "steadydim/report.h"
#include "steadydim/sampler.h"

namespace steadydim::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReactionNetwork LoadNetwork(const fs::path& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseNetwork(text);
  } catch (const ParseError& e) {
    throw UsageError(path.string() + ":" + std::to_string(e.line) + ":" +
                     std::to_string(e.column) + ": " + e.message);
  }
}

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STEADYDIM_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("STEADYDIM_SEED is not an unsigned integer: '") +
                     env + "'");
  }
  return 0;
}

RationalVector ParsePositiveList(const std::string& text, const char* flag) {
  RationalVector v;
  try {
    v = ParseRationalList(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  for (const auto& q : v) {
    if (sgn(q) <= 0) {
      throw UsageError(std::string(flag) + ": entries must be positive, got " + ToString(q));
    }
  }
  return v;
}

struct AnalyzeOptions {
  std::string path;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::size_t retries = 5;
  std::uint64_t bound = 65536;
};

struct BatchRecord {
  std::string line;
  bool failed = false;
};

int RunBatch(const fs::path& dir, const SamplerConfig& base, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".crn") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  auto process = [&](const fs::path& file) {
    const std::string rel = fs::relative(file, dir).generic_string();
    Json rec;
    rec["path"] = rel;
    BatchRecord result;
    try {
      SamplerConfig cfg = base;
      cfg.seed = MixSeed(base.seed, HashString(rel));
      rec["seed"] = cfg.seed;
      rec["report"] = ToJson(Analyze(LoadNetwork(file), cfg));
    } catch (const std::exception& e) {
      rec["error"] = e.what();
      result.failed = true;
    }
    result.line = rec.dump();
    return result;
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<BatchRecord> records(files.size());
  for (std::size_t start = 0; start < files.size(); start += workers) {
    std::vector<std::future<BatchRecord>> jobs;
    const std::size_t end = std::min(files.size(), start + workers);
    for (std::size_t i = start; i < end; ++i) {
      jobs.push_back(std::async(std::launch::async, process, files[i]));
    }
    for (std::size_t i = start; i < end; ++i) records[i] = jobs[i - start].get();
  }

  bool any_failed = false;
  for (const auto& r : records) {
    out << r.line << "\n";
    any_failed = any_failed || r.failed;
  }
  return any_failed ? kUserError : kOk;
}

int CmdAnalyze(const AnalyzeOptions& opt, std::ostream& out) {
  SamplerConfig cfg;
  cfg.seed = ResolveSeed(opt.seed);
  cfg.retries = opt.retries;
  cfg.sample_bound = opt.bound;
  try {
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (fs::is_directory(opt.path)) return RunBatch(opt.path, cfg, out);

  const AnalysisReport rep = Analyze(LoadNetwork(opt.path), cfg);
  if (opt.json) {
    out << ToJson(rep).dump(2) << "\n";
  } else {
    out << RenderText(rep);
  }
  return kOk;
}

int CmdMatrices(const std::string& path, bool json, std::ostream& out) {
  const NetworkMatrices mats = BuildMatrices(LoadNetwork(path));
  if (json) {
    out << ToJson(mats).dump(2) << "\n";
  } else {
    out << RenderText(mats);
  }
  return kOk;
}

int CmdCheckPoint(const std::string& path, const std::string& kappa_text,
                  const std::string& x_text, bool json, std::ostream& out) {
  const RationalVector kappa = ParsePositiveList(kappa_text, "--kappa");
  const RationalVector x = ParsePositiveList(x_text, "--x");
  const NetworkMatrices mats = BuildMatrices(LoadNetwork(path));
  SteadyStateCheck check;
  try {
    check = CheckSteadyState(mats, kappa, x);
  } catch (const DimensionMismatch& e) {
    throw UsageError(e.what());
  }
  if (json) {
    out << ToJson(check).dump(2) << "\n";
  } else {
    out << RenderText(check);
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether mass-action steady-state systems admit nondegenerate "
               "solutions"};
  app.name("steadydim");
  app.require_subcommand(1);

  AnalyzeOptions aopt;
  std::uint64_t seed_value = 0;
  auto* analyze = app.add_subcommand(
      "analyze", "Analyze a .crn network (or every .crn file in a directory, as JSON lines)");
  analyze->add_option("path", aopt.path, "Network file or directory")->required();
  analyze->add_flag("--json", aopt.json, "Emit the JSON report");
  auto* seed_opt = analyze->add_option("--seed", seed_value,
                                       "Random seed (default: $STEADYDIM_SEED or 0)");
  analyze->add_option("--retries", aopt.retries, "Random samples before the symbolic test")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--bound", aopt.bound, "Sample coordinates from [-bound, bound]")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));

  std::string mpath;
  bool mjson = false;
  auto* matrices = app.add_subcommand("matrices", "Print Gamma, B, N and W");
  matrices->add_option("path", mpath, "Network file")->required();
  matrices->add_flag("--json", mjson, "Emit JSON");

  std::string cpath, kappa_text, x_text;
  bool cjson = false;
  auto* check = app.add_subcommand(
      "check-point", "Check whether x is a (degenerate) steady state for rate constants kappa");
  check->add_option("path", cpath, "Network file")->required();
  check->add_option("--kappa", kappa_text, "Comma-separated positive rationals")->required();
  check->add_option("--x", x_text, "Comma-separated positive rationals")->required();
  check->add_flag("--json", cjson, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  }

  try {
    if (*analyze) {
      if (seed_opt->count() > 0) aopt.seed = seed_value;
      return CmdAnalyze(aopt, out);
    }
    if (*matrices) return CmdMatrices(mpath, mjson, out);
    if (*check) return CmdCheckPoint(cpath, kappa_text, x_text, cjson, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUserError;
}

}  // namespace steadydim::cli
