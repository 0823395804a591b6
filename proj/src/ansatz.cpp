// Copyright 2026 The cliffinit Authors
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

#include "cliffinit/ansatz.hpp"

#include <cmath>
#include <numbers>

#include "cliffinit/error.hpp"
#include "json.hpp"

namespace cliffinit {

std::string_view axis_name(RotationAxis axis) {
  switch (axis) {
    case RotationAxis::RX: return "RX";
    case RotationAxis::RY: return "RY";
    case RotationAxis::RZ: return "RZ";
    case RotationAxis::RZZ: return "RZZ";
  }
  return "?";
}

std::string_view family_name(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::Real: return "real";
    case AnsatzFamily::Trotter: return "trotter";
    case AnsatzFamily::Qaoa: return "qaoa";
    case AnsatzFamily::Custom: return "custom";
  }
  return "?";
}

Ansatz::Ansatz(std::size_t n_qubits, std::size_t n_params, std::vector<GateSlot> slots, AnsatzFamily family)
    : n_qubits_(n_qubits), n_params_(n_params), slots_(std::move(slots)), family_(family) {
  if (n_qubits == 0) fail(ErrorCode::kInvalidArgument, "an ansatz needs at least one qubit");
  auto check_qubit = [&](std::uint32_t q) {
    if (q >= n_qubits_) {
      fail(ErrorCode::kInvalidArgument,
           "slot qubit " + std::to_string(q) + " out of range for " + std::to_string(n_qubits_) + " qubits");
    }
  };
  std::vector<std::size_t> uses(n_params_, 0);
  for (const auto& slot : slots_) {
    if (const auto* fixed = std::get_if<FixedSlot>(&slot)) {
      check_qubit(fixed->gate.q0);
      if (is_two_qubit(fixed->gate.kind)) {
        check_qubit(fixed->gate.q1);
        if (fixed->gate.q0 == fixed->gate.q1) fail(ErrorCode::kInvalidArgument, "two-qubit gate on a single qubit");
      }
      continue;
    }
    const auto& rot = std::get<RotationSlot>(slot);
    check_qubit(rot.q0);
    if (rot.axis == RotationAxis::RZZ) {
      check_qubit(rot.q1);
      if (rot.q0 == rot.q1) fail(ErrorCode::kInvalidArgument, "RZZ needs two distinct qubits");
    }
    if (rot.param >= n_params_) {
      fail(ErrorCode::kInvalidArgument, "parameter index " + std::to_string(rot.param) + " out of range for " +
                                            std::to_string(n_params_) + " parameters");
    }
    ++uses[rot.param];
  }
  for (std::size_t p = 0; p < n_params_; ++p) {
    if (uses[p] == 0) fail(ErrorCode::kInvalidArgument, "parameter " + std::to_string(p) + " is never used");
    if (uses[p] > 1 && (family_ == AnsatzFamily::Real || family_ == AnsatzFamily::Trotter)) {
      fail(ErrorCode::kInvalidArgument, "parameter " + std::to_string(p) + " is shared in a " +
                                            std::string(family_name(family_)) + " ansatz");
    }
  }
}

std::size_t Ansatz::num_rotation_slots() const {
  std::size_t count = 0;
  for (const auto& slot : slots_) count += std::holds_alternative<RotationSlot>(slot);
  return count;
}

QuarterTurns::QuarterTurns(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto v : values_) {
    if (v > 3) fail(ErrorCode::kInvalidArgument, "quarter-turn entries must lie in {0,1,2,3}");
  }
}

std::vector<double> QuarterTurns::radians() const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * (std::numbers::pi / 2);
  return out;
}

namespace {

void require_chain(std::size_t n_qubits, std::size_t depth) {
  if (n_qubits < 2) fail(ErrorCode::kInvalidArgument, "hardware-efficient ansatze need at least two qubits");
  if (depth == 0) fail(ErrorCode::kInvalidArgument, "ansatz depth must be positive");
}

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

Ansatz build_real_ansatz(std::size_t n_qubits, std::size_t depth) {
  require_chain(n_qubits, depth);
  std::vector<GateSlot> slots;
  for (std::size_t layer = 0; layer < depth; ++layer) {
    for (std::size_t q = 0; q < n_qubits; ++q) {
      slots.push_back(RotationSlot{RotationAxis::RY, u32(q), 0, u32(layer * n_qubits + q)});
    }
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
      slots.push_back(FixedSlot{CliffordGate::pair(GateKind::CX, u32(q), u32(q + 1))});
    }
  }
  return Ansatz(n_qubits, depth * n_qubits, std::move(slots), AnsatzFamily::Real);
}

Ansatz build_trotter_ansatz(std::size_t n_qubits, std::size_t depth) {
  require_chain(n_qubits, depth);
  const std::size_t per_layer = 3 * n_qubits - 1;
  std::vector<GateSlot> slots;
  for (std::size_t layer = 0; layer < depth; ++layer) {
    const std::size_t base = layer * per_layer;
    for (std::size_t q = 0; q < n_qubits; ++q) {
      slots.push_back(RotationSlot{RotationAxis::RZ, u32(q), 0, u32(base + q)});
    }
    for (std::size_t q = 0; q < n_qubits; ++q) {
      slots.push_back(RotationSlot{RotationAxis::RX, u32(q), 0, u32(base + n_qubits + q)});
    }
    for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
      slots.push_back(RotationSlot{RotationAxis::RZZ, u32(q), u32(q + 1), u32(base + 2 * n_qubits + q)});
    }
  }
  return Ansatz(n_qubits, depth * per_layer, std::move(slots), AnsatzFamily::Trotter);
}

Ansatz build_qaoa_ansatz(const Hamiltonian& h, std::size_t depth) {
  if (depth == 0) fail(ErrorCode::kInvalidArgument, "ansatz depth must be positive");
  struct CostTerm {
    std::uint32_t a, b;
    bool quadratic;
    long long weight;
  };
  std::vector<CostTerm> cost;
  for (const auto& term : h.terms()) {
    const auto& p = term.pauli;
    for (auto w : p.x_words()) {
      if (w) fail(ErrorCode::kInvalidArgument, "QAOA cost Hamiltonian must be diagonal; found " + p.letters());
    }
    if (p.weight() > 2) fail(ErrorCode::kInvalidArgument, "QAOA cost terms must have weight <= 2; found " + p.letters());
    if (std::nearbyint(term.coefficient) != term.coefficient) {
      fail(ErrorCode::kInvalidArgument, "QAOA weights must be integers so quarter turns stay Clifford; found " +
                                            std::to_string(term.coefficient) + " on " + p.letters());
    }
    if (p.weight() == 0) continue;
    std::vector<std::uint32_t> support;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
      if (p.z(q)) support.push_back(u32(q));
    }
    cost.push_back({support[0], support.size() == 2 ? support[1] : 0, support.size() == 2,
                    static_cast<long long>(term.coefficient)});
  }
  if (cost.empty()) fail(ErrorCode::kInvalidArgument, "QAOA needs at least one non-constant cost term");

  const std::size_t n = h.num_qubits();
  std::vector<GateSlot> slots;
  for (std::size_t q = 0; q < n; ++q) slots.push_back(FixedSlot{CliffordGate::single(GateKind::H, u32(q))});
  for (std::size_t layer = 0; layer < depth; ++layer) {
    const auto gamma = u32(2 * layer), beta = u32(2 * layer + 1);
    for (const auto& t : cost) {
      const bool negated = t.weight < 0;
      for (long long k = 0; k < std::llabs(t.weight); ++k) {
        if (t.quadratic) {
          slots.push_back(RotationSlot{RotationAxis::RZZ, t.a, t.b, gamma, negated});
        } else {
          slots.push_back(RotationSlot{RotationAxis::RZ, t.a, 0, gamma, negated});
        }
      }
    }
    for (std::size_t q = 0; q < n; ++q) slots.push_back(RotationSlot{RotationAxis::RX, u32(q), 0, beta});
  }
  return Ansatz(n, 2 * depth, std::move(slots), AnsatzFamily::Qaoa);
}

Ansatz parse_custom_ansatz(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("custom ansatz: ") + e.what());
  }
  std::optional<std::size_t> declared_qubits;
  const json* records = &doc;
  if (doc.is_object()) {
    if (doc.contains("n_qubits")) declared_qubits = doc.at("n_qubits").get<std::size_t>();
    if (!doc.contains("slots")) fail(ErrorCode::kParse, "custom ansatz: missing \"slots\"");
    records = &doc.at("slots");
  }
  if (!records->is_array()) fail(ErrorCode::kParse, "custom ansatz: slots must be an array");

  auto kind_from = [](const std::string& s) {
    static const std::pair<const char*, GateKind> kKinds[] = {
        {"H", GateKind::H}, {"S", GateKind::S},   {"Sdg", GateKind::Sdg}, {"X", GateKind::X},
        {"Y", GateKind::Y}, {"Z", GateKind::Z},   {"CX", GateKind::CX},   {"CZ", GateKind::CZ},
    };
    for (const auto& [name, kind] : kKinds) {
      if (s == name) return kind;
    }
    fail(ErrorCode::kParse, "custom ansatz: unknown gate kind '" + s + "'");
  };
  auto axis_from = [](const std::string& s) {
    if (s == "RX") return RotationAxis::RX;
    if (s == "RY") return RotationAxis::RY;
    if (s == "RZ") return RotationAxis::RZ;
    if (s == "RZZ") return RotationAxis::RZZ;
    fail(ErrorCode::kParse, "custom ansatz: unknown rotation axis '" + s + "'");
  };

  std::vector<GateSlot> slots;
  std::size_t max_qubit = 0, n_params = 0;
  try {
    for (const auto& rec : *records) {
      if (rec.contains("fixed")) {
        const auto& f = rec.at("fixed");
        const GateKind kind = kind_from(f.at("kind").get<std::string>());
        const auto qubits = f.at("qubits").get<std::vector<std::uint32_t>>();
        if (qubits.size() != (is_two_qubit(kind) ? 2u : 1u)) {
          fail(ErrorCode::kParse, "custom ansatz: wrong qubit count for " + std::string(gate_name(kind)));
        }
        for (auto q : qubits) max_qubit = std::max<std::size_t>(max_qubit, q);
        slots.push_back(FixedSlot{{kind, qubits[0], qubits.size() == 2 ? qubits[1] : 0}});
      } else if (rec.contains("rot")) {
        const auto& r = rec.at("rot");
        const RotationAxis axis = axis_from(r.at("axis").get<std::string>());
        const auto qubits = r.at("qubits").get<std::vector<std::uint32_t>>();
        if (qubits.size() != (axis == RotationAxis::RZZ ? 2u : 1u)) {
          fail(ErrorCode::kParse, "custom ansatz: wrong qubit count for " + std::string(axis_name(axis)));
        }
        const auto param = r.at("param").get<std::uint32_t>();
        const bool negated = r.value("negated", false);
        for (auto q : qubits) max_qubit = std::max<std::size_t>(max_qubit, q);
        n_params = std::max<std::size_t>(n_params, param + 1);
        slots.push_back(RotationSlot{axis, qubits[0], qubits.size() == 2 ? qubits[1] : 0, param, negated});
      } else {
        fail(ErrorCode::kParse, "custom ansatz: each slot needs a \"fixed\" or \"rot\" record");
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("custom ansatz: ") + e.what());
  }
  if (slots.empty()) fail(ErrorCode::kParse, "custom ansatz: no slots");
  const std::size_t n_qubits = declared_qubits.value_or(max_qubit + 1);
  return Ansatz(n_qubits, n_params, std::move(slots), AnsatzFamily::Custom);
}

void append_rotation(std::vector<CliffordGate>& out, const RotationSlot& slot, int m) {
  m = ((m % 4) + 4) % 4;
  if (m == 0) return;
  auto rz = [&](std::uint32_t q) {
    static constexpr GateKind kTurn[4] = {GateKind::Z, GateKind::S, GateKind::Z, GateKind::Sdg};
    out.push_back(CliffordGate::single(kTurn[m], q));
  };
  const std::uint32_t q = slot.q0;
  switch (slot.axis) {
    case RotationAxis::RZ:
      rz(q);
      break;
    case RotationAxis::RX:
      out.push_back(CliffordGate::single(GateKind::H, q));
      rz(q);
      out.push_back(CliffordGate::single(GateKind::H, q));
      break;
    case RotationAxis::RY:
      // RY = S RX Sdg as operators, so Sdg acts first.
      out.push_back(CliffordGate::single(GateKind::Sdg, q));
      out.push_back(CliffordGate::single(GateKind::H, q));
      rz(q);
      out.push_back(CliffordGate::single(GateKind::H, q));
      out.push_back(CliffordGate::single(GateKind::S, q));
      break;
    case RotationAxis::RZZ:
      out.push_back(CliffordGate::pair(GateKind::CX, q, slot.q1));
      rz(slot.q1);
      out.push_back(CliffordGate::pair(GateKind::CX, q, slot.q1));
      break;
  }
}

namespace {

void require_point(const Ansatz& a, const QuarterTurns& q) {
  if (q.size() != a.num_params()) {
    fail(ErrorCode::kSizeMismatch, "quarter-turn vector has " + std::to_string(q.size()) +
                                       " entries but the ansatz has " + std::to_string(a.num_params()) + " parameters");
  }
}

void compile_into(std::vector<CliffordGate>& out, const Ansatz& a, const QuarterTurns& q,
                  std::optional<std::size_t> shifted_slot, int delta) {
  out.clear();
  std::size_t index = 0;
  for (const auto& slot : a.slots()) {
    if (const auto* fixed = std::get_if<FixedSlot>(&slot)) {
      out.push_back(fixed->gate);
    } else {
      const auto& rot = std::get<RotationSlot>(slot);
      int m = q[rot.param];
      if (rot.negated) m = -m;
      if (shifted_slot == index) m += delta;
      append_rotation(out, rot, m);
    }
    ++index;
  }
}

}  // namespace

std::vector<CliffordGate> compile_clifford(const Ansatz& a, const QuarterTurns& q) {
  require_point(a, q);
  std::vector<CliffordGate> out;
  compile_into(out, a, q, std::nullopt, 0);
  return out;
}

CliffordEvaluator::CliffordEvaluator(const Ansatz& a, const Hamiltonian& h)
    : ansatz_(a), hamiltonian_(h), tableau_(a.num_qubits()) {
  if (a.num_qubits() != h.num_qubits()) {
    fail(ErrorCode::kSizeMismatch, "ansatz on " + std::to_string(a.num_qubits()) + " qubits, Hamiltonian on " +
                                       std::to_string(h.num_qubits()));
  }
}

double CliffordEvaluator::run(const QuarterTurns& q, std::optional<std::size_t> slot, int delta) {
  require_point(ansatz_, q);
  compile_into(gates_, ansatz_, q, slot, delta);
  tableau_.reset();
  tableau_.apply_all(gates_);
  ++evaluations_;
  return energy(tableau_, hamiltonian_);
}

double CliffordEvaluator::operator()(const QuarterTurns& q) { return run(q, std::nullopt, 0); }

double CliffordEvaluator::shifted(const QuarterTurns& q, std::size_t slot, int delta) { return run(q, slot, delta); }

double clifford_energy(const Ansatz& a, const QuarterTurns& q, const Hamiltonian& h) {
  CliffordEvaluator eval(a, h);
  return eval(q);
}

std::vector<double> clifford_gradient(const Ansatz& a, const QuarterTurns& q, const Hamiltonian& h) {
  CliffordEvaluator eval(a, h);
  require_point(a, q);
  std::vector<double> grad(a.num_params(), 0.0);
  std::size_t index = 0;
  for (const auto& slot : a.slots()) {
    if (const auto* rot = std::get_if<RotationSlot>(&slot)) {
      const double diff = (eval.shifted(q, index, +1) - eval.shifted(q, index, -1)) / 2;
      grad[rot->param] += rot->negated ? -diff : diff;
    }
    ++index;
  }
  return grad;
}

}  // namespace cliffinit
