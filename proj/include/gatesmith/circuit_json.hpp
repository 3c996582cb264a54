#pragma once

#include <json.hpp>
#include <string>

#include "gatesmith/circuit.hpp"

namespace gatesmith {

using Json = nlohmann::ordered_json;

/// {"n_qubits": N, "gates": [{"kind": "toffoli", "qubits": [0, 1, 2]}, ...]}
/// Parameterized kinds carry their parameter next to "kind": "theta" in
/// radians, "m" (and "negated") for the register gates, "k" for
/// sigma_z_tilde, and a nested "circuit" for controlled_block.
Json circuit_to_json(const Circuit& circuit);

/// Inverse of circuit_to_json.  "theta" may also be an angle string such
/// as "pi/6".  Throws PreconditionError on malformed input.
Circuit circuit_from_json(const Json& json);

}  // namespace gatesmith
