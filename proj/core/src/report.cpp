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

#include "stablearn/report.hpp"

#include <json.hpp>
#include <sstream>

namespace stablearn {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson config_node(const LearnerConfig& cfg, std::size_t n) {
  OrderedJson node;
  node["num_qubits"] = n;
  node["profile"] = cfg.profile == Profile::kPaper ? "paper" : "desk";
  node["epsilon"] = cfg.epsilon;
  node["group_epsilon"] = cfg.group_epsilon();
  node["t_hint"] = cfg.t_hint;
  node["master_seed"] = cfg.master_seed;
  node["c1"] = cfg.resolved_c1();
  node["c2"] = cfg.resolved_c2();
  node["c3"] = cfg.resolved_c3();
  node["reps"] = cfg.resolved_reps(n);
  node["copies_per_rep"] = cfg.resolved_copies_per_rep(n);
  node["verify_copies"] = cfg.resolved_verify_copies(n, cfg.group_epsilon());
  node["tomography_copies"] = cfg.resolved_tomography_copies();
  return node;
}

}  // namespace

std::string learner_config_json(const LearnerConfig& cfg, std::size_t n) {
  return config_node(cfg, n).dump(2);
}

std::string learned_state_report(const LearnedState& state,
                                 const LearnerConfig& cfg,
                                 double wall_seconds) {
  const std::size_t n = state.v.num_qubits();
  OrderedJson doc;
  doc["config"] = config_node(cfg, n);

  OrderedJson group;
  group["rank"] = state.group.rank();
  OrderedJson gens = OrderedJson::array();
  for (const PauliOp& g : state.group.generators()) {
    gens.push_back(g.to_string());
  }
  group["generators"] = gens;
  doc["group"] = group;

  OrderedJson frame;
  OrderedJson ximg = OrderedJson::array();
  OrderedJson zimg = OrderedJson::array();
  for (std::size_t j = 0; j < n; ++j) {
    ximg.push_back(state.v.x_image(j).to_string());
    zimg.push_back(state.v.z_image(j).to_string());
  }
  frame["x_images"] = ximg;
  frame["z_images"] = zimg;
  Circuit frame_circuit;
  frame_circuit.num_qubits = n;
  frame_circuit.gates = state.v_gates;
  frame["gates"] = frame_circuit.to_text();
  doc["frame"] = frame;

  OrderedJson phi = OrderedJson::array();
  for (const std::complex<double>& a : state.phi_hat) {
    phi.push_back(a.real());
    phi.push_back(a.imag());
  }
  doc["phi_hat"] = phi;

  OrderedJson diag;
  diag["reps_run"] = state.diagnostics.reps_run;
  diag["learn_copies"] = state.diagnostics.learn_copies;
  diag["verify_copies"] = state.diagnostics.verify_copies;
  diag["tomography_copies"] = state.diagnostics.tomography_copies;
  diag["total_copies"] = state.diagnostics.total_copies;
  diag["anticommute_aborts"] = state.diagnostics.anticommute_aborts;
  diag["candidate_rank"] = state.diagnostics.candidate_rank;
  diag["verify_removed"] = state.diagnostics.verify_removed;
  diag["tomography_rejects"] = state.diagnostics.tomography_rejects;
  doc["diagnostics"] = diag;

  doc["wall_seconds"] = wall_seconds;
  return doc.dump(2);
}

std::string intersection_csv(const std::vector<IntersectionStats>& rows) {
  std::ostringstream out;
  out << "n,r,trials,empirical_p,bound\n";
  out.precision(10);
  for (const IntersectionStats& s : rows) {
    out << s.num_qubits << ',' << s.reference_rank << ',' << s.trials << ','
        << s.empirical_p << ',' << s.bound << '\n';
  }
  return out.str();
}

}  // namespace stablearn
