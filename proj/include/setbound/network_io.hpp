#pragma once

#include <setbound/network.hpp>

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace setbound {

// On-disk network format: a JSON document with a schema tag and one record
// per layer, weights row-major. Doubles are written with shortest
// round-trip precision, so load(save(net)) is value-identical.
//
//   {
//     "format": "setbound-net/1",
//     "layers": [
//       {"weights": [[...], ...], "bias": [...], "activation": "sigmoid"},
//       {"weights": ..., "bias": ..., "activation": "leaky_relu", "slope": 0.01}
//     ]
//   }

inline constexpr const char* kNetworkFormatTag = "setbound-net/1";

nlohmann::json to_document(const Network& net);
Network network_from_document(const nlohmann::json& doc);

Network load_network(const std::string& path);
void save_network(const Network& net, const std::string& path);

}  // namespace setbound
