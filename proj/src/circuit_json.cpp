#include "gatesmith/circuit_json.hpp"

#include <memory>

#include "gatesmith/errors.hpp"

namespace gatesmith {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Angle read_angle(const Json& j) {
  if (!j.contains("theta")) throw PreconditionError("gate is missing 'theta'");
  const auto& t = j.at("theta");
  if (t.is_number()) return Angle(t.get<double>());
  if (t.is_string()) return Angle::parse(t.get<std::string>());
  throw PreconditionError("'theta' must be a number or angle string");
}

int read_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw PreconditionError(std::string("gate is missing integer '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

Json circuit_to_json(const Circuit& circuit) {
  Json gates = Json::array();
  for (const auto& g : circuit.gates()) {
    Json entry;
    entry["kind"] = kind_name(g.kind);
    std::visit(overloaded{
                   [&](const gates::STheta& x) { entry["theta"] = x.theta.radians(); },
                   [&](const gates::SThetaInv& x) { entry["theta"] = x.theta.radians(); },
                   [&](const gates::SReflect& x) { entry["theta"] = x.theta.radians(); },
                   [&](const gates::ReflectZero& x) {
                     entry["m"] = x.m;
                     entry["negated"] = x.negated;
                   },
                   [&](const gates::MarkNonZeroFlip& x) { entry["m"] = x.m; },
                   [&](const gates::SigmaZTilde& x) { entry["k"] = x.k; },
                   [&](const gates::ControlledBlock& x) { entry["circuit"] = circuit_to_json(*x.inner); },
                   [](const auto&) {},
               },
               g.kind);
    entry["qubits"] = g.qubits;
    gates.push_back(std::move(entry));
  }
  Json out;
  out["n_qubits"] = circuit.n_qubits();
  out["gates"] = std::move(gates);
  return out;
}

Circuit circuit_from_json(const Json& json) {
  try {
    Circuit circuit(json.at("n_qubits").get<int>());
    for (const auto& entry : json.at("gates")) {
      const auto kind = entry.at("kind").get<std::string>();
      auto qubits = entry.at("qubits").get<std::vector<int>>();
      GateKind g;
      if (kind == "toffoli") g = gates::Toffoli{};
      else if (kind == "cnot") g = gates::Cnot{};
      else if (kind == "x") g = gates::X{};
      else if (kind == "z") g = gates::Z{};
      else if (kind == "h") g = gates::H{};
      else if (kind == "s_theta") g = gates::STheta{read_angle(entry)};
      else if (kind == "s_theta_inv") g = gates::SThetaInv{read_angle(entry)};
      else if (kind == "s_reflect") g = gates::SReflect{read_angle(entry)};
      else if (kind == "reflect_zero") g = gates::ReflectZero{read_int(entry, "m"), entry.value("negated", false)};
      else if (kind == "mark_nonzero_flip") g = gates::MarkNonZeroFlip{read_int(entry, "m")};
      else if (kind == "sigma_z_tilde") g = gates::SigmaZTilde{read_int(entry, "k")};
      else if (kind == "controlled_block") {
        g = gates::ControlledBlock{std::make_shared<const Circuit>(circuit_from_json(entry.at("circuit")))};
      } else {
        throw PreconditionError("unknown gate kind '" + kind + "'");
      }
      circuit.add(std::move(g), std::move(qubits));
    }
    return circuit;
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("malformed circuit JSON: ") + e.what());
  }
}

}  // namespace gatesmith
