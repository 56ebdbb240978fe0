// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ys/generate.hpp"
#include "ys/json_io.hpp"
#include "ys/oracles.hpp"

namespace {

// Exit codes: 0 success, 2 validation, 3 over-limit, 4 oracle mismatch,
// 5 fuzz violations.
constexpr int kExitValidation = 2;
constexpr int kExitOverLimit = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitFuzzViolations = 5;

struct CliError {
  int code;
  std::string message;
};

ys::InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitValidation, "cannot open " + path};
  ys::Json j;
  try {
    j = ys::Json::parse(in);
  } catch (const ys::Json::parse_error& e) {
    throw CliError{kExitValidation, path + ": " + e.what()};
  }
  try {
    return ys::instance_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitValidation, path + ": " + e.what()};
  }
}

ys::Criterion pick_criterion(const ys::InstanceFile& file,
                             const std::string& flag, const std::string& p) {
  ys::CriterionKind kind = ys::CriterionKind::kLeximin;
  if (!flag.empty()) {
    auto k = ys::criterion_from_name(flag);
    if (!k) throw CliError{kExitValidation, "unknown criterion: " + flag};
    kind = *k;
  } else if (file.criterion) {
    kind = file.criterion->kind;
  }
  ys::Rational pr = 0;
  if (!p.empty()) {
    try {
      pr = ys::parse_rational(p);
    } catch (const std::exception& e) {
      throw CliError{kExitValidation, std::string("--p: ") + e.what()};
    }
  }
  try {
    return ys::finalize_criterion(file.instance,
                                  flag.empty() ? file.criterion : std::nullopt,
                                  kind, pr);
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitValidation, e.what()};
  }
}

ys::RunOptions options_from_env() {
  ys::RunOptions opts;
  if (const char* cap = std::getenv("YA_QUERY_LIMIT"))
    opts.query_limit = std::atoll(cap);
  return opts;
}

void emit(const ys::Json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

void require_valid(const ys::Instance& inst, const ys::Criterion& c) {
  auto problems = ys::validate(inst, c);
  if (problems.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& p : problems) msg += "\n  " + p;
  throw CliError{kExitValidation, msg};
}

int cmd_solve(const std::string& path, const std::string& criterion,
              const std::string& p, bool pretty) {
  auto file = load_instance(path);
  auto c = pick_criterion(file, criterion, p);
  require_valid(file.instance, c);
  auto result = ys::run(file.instance, c, options_from_env());
  emit(ys::run_result_to_json(result, c), pretty);
  return 0;
}

int cmd_verify(const std::string& path, const std::string& criterion,
               const std::string& p, bool pretty) {
  auto file = load_instance(path);
  auto c = pick_criterion(file, criterion, p);
  require_valid(file.instance, c);
  auto result = ys::run(file.instance, c, options_from_env());
  ys::OptResult opt;
  try {
    opt = ys::brute_force_optimum(file.instance, c);
  } catch (const ys::EnumerationLimitExceeded&) {
    throw CliError{kExitOverLimit, "instance too large to verify"};
  }
  bool psi_ok = result.utilities == opt.best_utilities;
  bool usw_ok = true;
  for (const auto& u : ys::enumerate_utilities(file.instance)) {
    int total = 0;
    for (int v : u) total += v;
    usw_ok = usw_ok && result.usw >= total;
  }
  ys::Json j;
  j["engine_utilities"] = result.utilities;
  j["oracle_utilities"] = opt.best_utilities;
  j["psi"] = psi_ok ? "MATCH" : "MISMATCH";
  j["usw"] = usw_ok ? "MATCH" : "MISMATCH";
  auto efx = ys::check_efx(file.instance, result.allocation);
  j["efx"] = efx ? "violation: " + *efx : "ok";
  auto wef1 = ys::check_wef1(file.instance, result.allocation);
  j["wef1"] = wef1 ? "violation: " + *wef1 : "ok";
  bool have_shares = !file.instance.agents.empty();
  for (const auto& a : file.instance.agents)
    have_shares = have_shares && a.fair_share.has_value();
  if (have_shares) {
    bool ok = true;
    for (std::size_t i = 0; i < file.instance.agents.size(); ++i)
      ok = ok && ys::Rational(result.utilities[i]) >=
                     *file.instance.agents[i].fair_share;
    j["shares"] = ok ? "ok" : "violation";
  }
  emit(j, pretty);
  return psi_ok && usw_ok ? 0 : kExitMismatch;
}

int cmd_mms(const std::string& path, bool pretty) {
  auto file = load_instance(path);
  ys::Criterion c = ys::resolve_criterion(file.instance,
                                          ys::CriterionKind::kLeximin);
  require_valid(file.instance, c);
  ys::Json shares = ys::Json::array();
  try {
    for (std::size_t i = 1; i <= file.instance.agents.size(); ++i)
      shares.push_back(ys::compute_mms(file.instance, static_cast<int>(i)));
  } catch (const ys::EnumerationLimitExceeded&) {
    throw CliError{kExitOverLimit,
                   "instance too large for share computation; "
                   "supply fair_share values instead"};
  }
  ys::Json j;
  j["mms"] = std::move(shares);
  emit(j, pretty);
  return 0;
}

int cmd_fuzz(const std::string& path, const std::string& criterion,
             const std::string& p, int trials, std::uint64_t seed,
             bool pretty) {
  auto file = load_instance(path);
  auto c = pick_criterion(file, criterion, p);
  require_valid(file.instance, c);
  auto report = ys::fuzz_strategyproofness(file.instance, c, trials, seed,
                                           options_from_env());
  emit(ys::fuzz_report_to_json(report), pretty);
  return report.violations.empty() ? 0 : kExitFuzzViolations;
}

int cmd_bench(const std::string& sizes, bool explicit_graph) {
  std::vector<int> ms;
  std::stringstream ss(sizes);
  for (std::string tok; std::getline(ss, tok, ',');) ms.push_back(std::stoi(tok));
  std::cout << "n,m,query_count,normalized\n";
  for (int n : {2, 4, 8}) {
    for (int m : ms) {
      auto inst = ys::bench_instance(m, n, 1234u + static_cast<unsigned>(m));
      auto c = ys::resolve_criterion(inst, ys::CriterionKind::kLeximin);
      ys::RunOptions opts = options_from_env();
      if (explicit_graph)
        opts.path_mode = ys::RunOptions::PathMode::kExplicitGraph;
      auto result = ys::run(inst, c, opts);
      double denom = (m + n) * static_cast<double>(m) *
                     (std::log2(static_cast<double>(m)) + 2.0);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.4f",
                    static_cast<double>(result.query_count) / denom);
      std::cout << n << "," << m << "," << result.query_count << "," << buf
                << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair allocation of indivisible goods for agents with "
               "matroid-rank valuations"};
  app.require_subcommand(1);

  std::string path, criterion, p, sizes = "8,16,32,64,128";
  int trials = 1000;
  std::uint64_t seed = 0;
  bool pretty = false, explicit_graph = false;

  auto add_common = [&](CLI::App* cmd, bool with_criterion) {
    cmd->add_option("path", path, "instance file")->required();
    if (with_criterion) {
      cmd->add_option("--criterion", criterion,
                      "lorenz|leximin|fair_share|nash|pmean|harmonic");
      cmd->add_option("--p", p, "p for the pmean criterion, e.g. 1/2");
    }
    cmd->add_flag("--pretty", pretty, "indent JSON output");
    cmd->add_flag("--json", "JSON output (the default; accepted for scripts)");
  };

  auto* solve = app.add_subcommand("solve", "run the allocation engine");
  add_common(solve, true);
  auto* verify = app.add_subcommand(
      "verify", "run the engine and compare against brute force");
  add_common(verify, true);
  auto* mms = app.add_subcommand("mms", "compute exact maximin shares");
  add_common(mms, false);
  auto* fuzz = app.add_subcommand("fuzz", "strategyproofness fuzzer");
  add_common(fuzz, true);
  fuzz->add_option("--trials", trials, "number of manipulations");
  fuzz->add_option("--seed", seed, "fuzzer seed");
  auto* bench = app.add_subcommand("bench", "query-count scaling table");
  bench->add_option("--sizes", sizes, "comma-separated goods counts");
  bench->add_flag("--explicit-graph", explicit_graph,
                  "use the naive explicit-graph path search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, criterion, p, pretty);
    if (verify->parsed()) return cmd_verify(path, criterion, p, pretty);
    if (mms->parsed()) return cmd_mms(path, pretty);
    if (fuzz->parsed())
      return cmd_fuzz(path, criterion, p, trials, seed, pretty);
    return cmd_bench(sizes, explicit_graph);
  } catch (const CliError& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const ys::QueryLimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitOverLimit;
  } catch (const ys::EnumerationLimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitOverLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }
}
