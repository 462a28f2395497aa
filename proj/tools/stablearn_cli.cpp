// Copyright 2026 The stablearn Authors
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

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablearn/dense_state.hpp"
#include "stablearn/gates.hpp"
#include "stablearn/hybrid_state.hpp"
#include "stablearn/learner.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/report.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/state_source.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stablearn;

constexpr std::size_t kOracleCap = 14;  // widest register the dense oracle checks

double now_seconds() {
  const auto t = std::chrono::steady_clock::now().time_since_epoch();
  return std::chrono::duration<double>(t).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

Profile parse_profile(const std::string& name) {
  if (name == "paper") return Profile::kPaper;
  if (name == "desk") return Profile::kDesk;
  throw std::invalid_argument("unknown profile: " + name);
}

struct Options {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t depth = 0;
  double epsilon = 0.1;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string profile = "desk";
  std::string circuit_path;
  std::string out_path;
  std::size_t dense_cap = 16;
  std::string report_path;
};

int cmd_gen_circuit(const Options& opt) {
  if (opt.n == 0) throw std::invalid_argument("gen-circuit requires --n >= 1");
  const std::size_t depth = opt.depth > 0 ? opt.depth : 10 * opt.n;
  Rng rng(opt.seed);
  const Circuit c = random_doped_circuit(opt.n, depth, opt.t, rng);
  write_output(opt.out_path, c.to_text());
  return 0;
}

int cmd_simulate(const Options& opt) {
  if (opt.circuit_path.empty()) {
    throw std::invalid_argument("simulate requires --circuit");
  }
  const Circuit c = Circuit::parse_text(read_file(opt.circuit_path), opt.n);
  const double t0 = now_seconds();
  const HybridState state = HybridState::prepare(c, opt.dense_cap);
  const double wall = now_seconds() - t0;

  ordered_json doc;
  doc["num_qubits"] = c.num_qubits;
  doc["gate_count"] = c.gates.size();
  doc["doped_count"] = c.doped_count();
  doc["dense_cap"] = opt.dense_cap;
  doc["frozen_count"] = state.frozen_count();
  doc["dense_count"] = state.dense_count();
  doc["dense_order"] = state.dense_order();
  if (c.num_qubits <= kOracleCap) {
    const DenseState truth = simulate_circuit(c, kOracleCap);
    const DenseState rebuilt = state.to_dense(kOracleCap);
    std::complex<double> ov = 0.0;
    const auto& got = rebuilt.amplitudes();
    const auto& want = truth.amplitudes();
    for (std::size_t i = 0; i < want.size(); ++i) {
      ov += std::conj(want[i]) * got[i];
    }
    doc["oracle_overlap"] = std::abs(ov);
  } else {
    doc["oracle_overlap"] = nullptr;
    doc["note"] = "unverifiable at this n";
  }
  doc["wall_seconds"] = wall;
  write_output(opt.out_path, doc.dump(2));
  return 0;
}

LearnerConfig make_config(const Options& opt, std::uint64_t master_seed) {
  LearnerConfig cfg;
  cfg.epsilon = opt.epsilon;
  cfg.t_hint = opt.t;
  cfg.profile = parse_profile(opt.profile);
  cfg.master_seed = master_seed;
  return cfg;
}

int cmd_learn(const Options& opt) {
  const std::size_t trials = opt.trials > 0 ? opt.trials : 1;
  Circuit fixed;
  bool have_fixed = false;
  if (!opt.circuit_path.empty()) {
    fixed = Circuit::parse_text(read_file(opt.circuit_path), opt.n);
    have_fixed = true;
  } else if (opt.n == 0) {
    throw std::invalid_argument("learn requires --circuit or --n");
  }
  const std::size_t n = have_fixed ? fixed.num_qubits : opt.n;
  Rng root(opt.seed);

  ordered_json runs = ordered_json::array();
  std::size_t measured = 0;
  std::size_t within = 0;
  bool budget_ok_all = true;
  double max_distance = 0.0;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Circuit circuit;
    if (have_fixed) {
      circuit = fixed;
    } else {
      Rng crng = root.stream("circuit", trial);
      const std::size_t depth = opt.depth > 0 ? opt.depth : 10 * n;
      circuit = random_doped_circuit(n, depth, opt.t, crng);
    }
    const std::uint64_t trial_seed = root.stream("trial", trial).next_u64();
    const LearnerConfig cfg = make_config(opt, trial_seed);

    HybridStateSource source(HybridState::prepare(circuit, opt.dense_cap));
    const double t0 = now_seconds();
    const LearnedState learned = learn_doped_state(source, cfg);
    const double wall = now_seconds() - t0;

    ordered_json entry =
        ordered_json::parse(learned_state_report(learned, cfg, wall));
    entry["trial"] = trial;
    entry["circuit"] = circuit.to_text();

    const std::size_t budget = cfg.resolved_reps(n) * cfg.resolved_copies_per_rep(n) +
                               cfg.resolved_verify_copies(n, cfg.group_epsilon()) +
                               cfg.resolved_tomography_copies();
    const bool budget_ok = learned.diagnostics.total_copies <= budget;
    entry["copy_budget"] = budget;
    entry["copy_budget_ok"] = budget_ok;
    budget_ok_all = budget_ok_all && budget_ok;

    if (n <= kOracleCap) {
      const DenseState truth = simulate_circuit(circuit, kOracleCap);
      const double dist = trace_distance_pure(truth, learned.to_dense(kOracleCap));
      entry["trace_distance"] = dist;
      ++measured;
      if (dist <= opt.epsilon) ++within;
      max_distance = std::max(max_distance, dist);
    } else {
      entry["trace_distance"] = nullptr;
      entry["note"] = "unverifiable at this n";
    }
    runs.push_back(std::move(entry));
  }

  ordered_json doc;
  doc["mode"] = "learn";
  doc["num_qubits"] = n;
  doc["t"] = opt.t;
  doc["epsilon"] = opt.epsilon;
  doc["profile"] = opt.profile;
  doc["master_seed"] = opt.seed;
  doc["trials"] = trials;
  doc["runs"] = runs;
  ordered_json summary;
  summary["trials_checked_against_oracle"] = measured;
  summary["within_epsilon"] = within;
  if (measured > 0) {
    summary["within_epsilon_fraction"] =
        static_cast<double>(within) / static_cast<double>(measured);
    summary["max_trace_distance"] = max_distance;
  }
  summary["copy_budget_ok"] = budget_ok_all;
  doc["summary"] = summary;
  write_output(opt.out_path, doc.dump(2));
  return 0;
}

int cmd_lemma6(const Options& opt) {
  const std::size_t n = opt.n > 0 ? opt.n : 6;
  const std::size_t t = opt.t > 0 ? opt.t : 1;
  if (t >= n) throw std::invalid_argument("lemma6 requires --t < --n");
  const std::size_t trials = opt.trials > 0 ? opt.trials : 2000;
  Rng rng(opt.seed);
  std::vector<IntersectionStats> rows;
  rows.push_back(intersection_stats(n, n - t, trials, rng));
  write_output(opt.out_path, intersection_csv(rows));
  return 0;
}

int cmd_bench(const Options& opt) {
  const std::vector<std::size_t> sizes = {16, 32, 64, 128};
  ordered_json entries = ordered_json::array();
  std::vector<double> logn;
  std::vector<double> logt;

  auto run_once = [&](std::size_t n, std::size_t t) {
    Rng crng = Rng(opt.seed).stream("bench-circuit", n * 8 + t);
    const Circuit circuit = random_doped_circuit(n, 3 * n, t, crng);
    HybridStateSource source(HybridState::prepare(circuit, opt.dense_cap));
    LearnerConfig cfg;
    cfg.epsilon = 0.5;
    cfg.t_hint = t;
    cfg.profile = Profile::kDesk;
    cfg.master_seed = opt.seed + n;
    const double t0 = now_seconds();
    const GroupLearnResult res = learn_stabilizer_group(source, cfg);
    const double wall = now_seconds() - t0;
    ordered_json e;
    e["n"] = n;
    e["t"] = t;
    e["seconds"] = wall;
    e["rank"] = res.group.rank();
    e["reps"] = res.reps_run;
    e["copies"] = res.copies_used;
    entries.push_back(e);
    return wall;
  };

  for (const std::size_t n : sizes) {
    const double wall = run_once(n, 0);
    logn.push_back(std::log2(static_cast<double>(n)));
    logt.push_back(std::log2(std::max(wall, 1e-9)));
    std::cerr << "bench n=" << n << " t=0: " << logt.back() << " log2(s)\n";
  }

  // Least-squares slope of log2(time) against log2(n).
  const std::size_t m = logn.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += logn[i];
    sy += logt[i];
    sxx += logn[i] * logn[i];
    sxy += logn[i] * logt[i];
  }
  const double slope =
      (m * sxy - sx * sy) / std::max(m * sxx - sx * sx, 1e-12);

  const double t0s = run_once(32, 0);
  const double t1s = run_once(32, 1);

  ordered_json doc;
  doc["mode"] = "bench";
  doc["profile"] = "desk";
  doc["entries"] = entries;
  doc["loglog_slope"] = slope;
  doc["doping_ratio_n32"] = t1s / std::max(t0s, 1e-9);
  write_output(opt.out_path, doc.dump(2));
  return 0;
}

int cmd_verify(const Options& opt) {
  if (opt.report_path.empty()) {
    throw std::invalid_argument("verify requires a report path");
  }
  const ordered_json report = ordered_json::parse(read_file(opt.report_path));
  Circuit circuit;
  if (!opt.circuit_path.empty()) {
    circuit = Circuit::parse_text(read_file(opt.circuit_path), opt.n);
  } else if (report.contains("circuit")) {
    circuit = Circuit::parse_text(report.at("circuit").get<std::string>(), opt.n);
  } else {
    throw std::invalid_argument(
        "verify needs --circuit or a report with an embedded circuit");
  }
  const std::size_t n = circuit.num_qubits;

  const ordered_json& cfg = report.at("config");
  const double epsilon = cfg.at("epsilon").get<double>();
  const std::size_t budget = cfg.at("reps").get<std::size_t>() *
                                 cfg.at("copies_per_rep").get<std::size_t>() +
                             cfg.at("verify_copies").get<std::size_t>() +
                             cfg.at("tomography_copies").get<std::size_t>();
  const std::size_t used =
      report.at("diagnostics").at("total_copies").get<std::size_t>();

  ordered_json doc;
  doc["mode"] = "verify";
  doc["num_qubits"] = n;
  doc["epsilon"] = epsilon;
  doc["copies_used"] = used;
  doc["copy_budget"] = budget;
  doc["copy_budget_ok"] = used <= budget;

  if (n > kOracleCap) {
    doc["trace_distance"] = nullptr;
    doc["note"] = "unverifiable at this n";
    write_output(opt.out_path, doc.dump(2));
    return 0;
  }

  // Rebuild the reported vector V(|0^r> (x) phi_hat) from the report alone.
  const std::size_t rank = report.at("group").at("rank").get<std::size_t>();
  const std::vector<double> flat =
      report.at("phi_hat").get<std::vector<double>>();
  std::vector<std::complex<double>> amps(std::size_t{1} << n, 0.0);
  for (std::size_t i = 0; 2 * i + 1 < flat.size(); ++i) {
    amps[i << rank] = {flat[2 * i], flat[2 * i + 1]};
  }
  const Circuit frame = Circuit::parse_text(
      report.at("frame").at("gates").get<std::string>(), n);
  DenseState learned = DenseState::from_amplitudes(n, std::move(amps), kOracleCap);
  for (const Gate& g : frame.gates) learned.apply_gate(g);

  const DenseState truth = simulate_circuit(circuit, kOracleCap);
  const double dist = trace_distance_pure(truth, learned);
  doc["trace_distance"] = dist;
  doc["within_epsilon"] = dist <= epsilon;

  double min_exp = 1.0;
  for (const auto& gen : report.at("group").at("generators")) {
    const PauliOp g = PauliOp::parse(gen.get<std::string>());
    min_exp = std::min(min_exp, truth.pauli_expectation(g));
  }
  doc["min_generator_expectation"] = rank > 0 ? ordered_json(min_exp)
                                              : ordered_json(nullptr);
  write_output(opt.out_path, doc.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stablearn: simulate and learn lightly doped stabilizer states"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "master seed (64-bit)");
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen-circuit", "emit a random doped circuit");
  gen->add_option("--n", opt.n, "qubit count")->required();
  gen->add_option("--t", opt.t, "number of T gates");
  gen->add_option("--depth", opt.depth, "total gate count (default 10n)");
  add_common(gen);

  CLI::App* sim = app.add_subcommand("simulate", "run the hybrid simulator on a circuit");
  sim->add_option("--circuit", opt.circuit_path, "circuit file")->required();
  sim->add_option("--n", opt.n, "register width override");
  sim->add_option("--dense-cap", opt.dense_cap, "dense register capacity");
  add_common(sim);

  CLI::App* learn = app.add_subcommand("learn", "learn states from single-copy measurements");
  learn->add_option("--circuit", opt.circuit_path, "fixed source circuit");
  learn->add_option("--n", opt.n, "qubit count for generated circuits");
  learn->add_option("--t", opt.t, "doping bound (t_hint)");
  learn->add_option("--depth", opt.depth, "generated circuit depth (default 10n)");
  learn->add_option("--epsilon", opt.epsilon, "target trace distance");
  learn->add_option("--trials", opt.trials, "number of independent trials");
  learn->add_option("--profile", opt.profile, "constant profile")
      ->check(CLI::IsMember({"paper", "desk"}));
  learn->add_option("--dense-cap", opt.dense_cap, "dense register capacity");
  add_common(learn);

  CLI::App* lem = app.add_subcommand("lemma6", "random-group intersection statistics");
  lem->add_option("--n", opt.n, "qubit count (default 6)");
  lem->add_option("--t", opt.t, "doping level; reference rank is n - t (default 1)");
  lem->add_option("--trials", opt.trials, "trial count (default 2000)");
  add_common(lem);

  CLI::App* bench = app.add_subcommand("bench", "time group learning across sizes");
  bench->add_option("--dense-cap", opt.dense_cap, "dense register capacity");
  add_common(bench);

  CLI::App* verify = app.add_subcommand("verify", "re-check a learn report against its circuit");
  verify->add_option("report", opt.report_path, "learn report JSON")->required();
  verify->add_option("--circuit", opt.circuit_path,
                     "source circuit file (default: the report's embedded circuit)");
  verify->add_option("--n", opt.n, "register width override");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen_circuit(opt);
    if (sim->parsed()) return cmd_simulate(opt);
    if (learn->parsed()) return cmd_learn(opt);
    if (lem->parsed()) return cmd_lemma6(opt);
    if (bench->parsed()) return cmd_bench(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const CircuitParseError& e) {
    std::cerr << "circuit parse error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "report parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
