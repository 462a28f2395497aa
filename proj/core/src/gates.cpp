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

#include "stablearn/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "stablearn/rng.hpp"

namespace stablearn {

int clifford_s_power(double theta) {
  constexpr double kHalfPi = 1.5707963267948966;
  const double k = theta / kHalfPi;
  const double r = std::nearbyint(k);
  if (std::abs(k - r) > 1e-12) return -1;
  const long long m = static_cast<long long>(r) % 4;
  return static_cast<int>(m < 0 ? m + 4 : m);
}

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kX: return "X";
    case GateKind::kZ: return "Z";
    case GateKind::kT: return "T";
    case GateKind::kRz: return "RZ";
  }
  return "?";
}

}  // namespace

std::string Circuit::to_text() const {
  std::string out = "# qubits: " + std::to_string(num_qubits) + "\n";
  for (const Gate& g : gates) {
    out += kind_name(g.kind);
    out += ' ';
    out += std::to_string(g.q0);
    if (g.kind == GateKind::kCnot) {
      out += ' ';
      out += std::to_string(g.q1);
    } else if (g.kind == GateKind::kRz) {
      char buf[40];
      std::snprintf(buf, sizeof buf, " %.17g", g.theta);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Circuit Circuit::parse_text(const std::string& text, std::size_t n_hint) {
  Circuit c;
  c.num_qubits = n_hint;
  std::size_t max_q = 0;
  bool saw_gate = false;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;

    auto read_qubit = [&](const char* what) {
      long long q = -1;
      if (!(ls >> q) || q < 0) {
        throw CircuitParseError(lineno, std::string("expected ") + what +
                                            " qubit index after " + op);
      }
      return static_cast<std::size_t>(q);
    };

    Gate g{};
    if (op == "H" || op == "S" || op == "X" || op == "Z" || op == "T") {
      g.q0 = read_qubit("a");
      g.kind = op == "H"   ? GateKind::kH
               : op == "S" ? GateKind::kS
               : op == "X" ? GateKind::kX
               : op == "Z" ? GateKind::kZ
                           : GateKind::kT;
    } else if (op == "CNOT" || op == "CX") {
      g.kind = GateKind::kCnot;
      g.q0 = read_qubit("control");
      g.q1 = read_qubit("target");
      if (g.q0 == g.q1) throw CircuitParseError(lineno, "CNOT control equals target");
    } else if (op == "RZ") {
      g.kind = GateKind::kRz;
      g.q0 = read_qubit("a");
      if (!(ls >> g.theta)) throw CircuitParseError(lineno, "expected RZ angle");
    } else {
      throw CircuitParseError(lineno, "unknown gate '" + op + "'");
    }

    std::string extra;
    if (ls >> extra) throw CircuitParseError(lineno, "trailing token '" + extra + "'");

    max_q = std::max({max_q, g.q0, g.q1});
    saw_gate = true;
    if (n_hint != 0 && max_q >= n_hint) {
      throw CircuitParseError(lineno, "qubit index " + std::to_string(max_q) +
                                          " exceeds register of size " +
                                          std::to_string(n_hint));
    }
    c.gates.push_back(g);
  }

  if (n_hint == 0) c.num_qubits = saw_gate ? max_q + 1 : 0;
  return c;
}

namespace {

Gate random_clifford_gate(std::size_t n, Rng& rng) {
  // CNOT needs two distinct qubits, so a 1-qubit register only draws H or S.
  const std::uint64_t kinds = n >= 2 ? 3 : 2;
  switch (rng.next_below(kinds)) {
    case 0:
      return Gate::h(rng.next_below(n));
    case 1:
      return Gate::s(rng.next_below(n));
    default: {
      const std::size_t c = rng.next_below(n);
      std::size_t t = rng.next_below(n - 1);
      if (t >= c) ++t;
      return Gate::cnot(c, t);
    }
  }
}

}  // namespace

Circuit random_clifford_circuit(std::size_t n, std::size_t length, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_clifford_circuit: empty register");
  Circuit c;
  c.num_qubits = n;
  c.gates.reserve(length);
  for (std::size_t i = 0; i < length; ++i) c.gates.push_back(random_clifford_gate(n, rng));
  return c;
}

Circuit random_doped_circuit(std::size_t n, std::size_t length, std::size_t t,
                             Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_doped_circuit: empty register");
  if (t > length) throw std::invalid_argument("random_doped_circuit: t exceeds length");
  // Choose the T positions by a partial Fisher-Yates over [0, length).
  std::vector<std::size_t> pos(length);
  for (std::size_t i = 0; i < length; ++i) pos[i] = i;
  std::vector<bool> is_t(length, false);
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t j = i + rng.next_below(length - i);
    std::swap(pos[i], pos[j]);
    is_t[pos[i]] = true;
  }
  Circuit c;
  c.num_qubits = n;
  c.gates.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (is_t[i]) {
      c.gates.push_back(Gate::t(rng.next_below(n)));
    } else {
      c.gates.push_back(random_clifford_gate(n, rng));
    }
  }
  return c;
}

}  // namespace stablearn
