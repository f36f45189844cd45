#pragma once

#include <json.hpp>
#include <string>

#include "gentropy/composition.hpp"
#include "gentropy/verify.hpp"

namespace gentropy {

using Json = nlohmann::ordered_json;

Json to_json(const Distribution& p);
Json to_json(const Params& params);

/// Scan report document: {entropy, params, law, seed, n_pairs, w_min, w_max,
/// max_residual, mean_residual, worst_pA, worst_pB, pass, tolerance}.
Json to_json(const ScanReport& r);
Json to_json(const BilinearFit& fit);
Json to_json(const AxiomResiduals& r);
Json to_json(const WeakCheck& r);
Json to_json(const SkReport& r);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& doc);

}  // namespace gentropy
