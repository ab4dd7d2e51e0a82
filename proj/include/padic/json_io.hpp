#pragma once

#include <json.hpp>

#include "padic/dynamics.hpp"
#include "padic/phase.hpp"
#include "padic/potts.hpp"
#include "padic/selftest.hpp"
#include "padic/sqrt.hpp"

namespace padic::io {

using Json = nlohmann::ordered_json;

Json to_json(const PadicNumber& x);
Json to_json(const tree::Configuration& sigma);
Json to_json(const potts::ModelParams& params);
Json to_json(const SqrtResult& r, const PadicNumber& input);
Json to_json(const dynamics::FixedPointReport& r);
Json to_json(const dynamics::OrbitResult& r);
Json to_json(const potts::CompatibilityReport& r);
Json to_json(const phase::PhaseReport& r);
Json to_json(const phase::CrossCheckReport& r);
Json to_json(const std::vector<selftest::SuiteResult>& results);

/// Parses {"valuation": v, "digits": [d0, d1, ...]} (little-endian base-p),
/// or {"zero": true}.
PadicNumber padic_from_json(const Json& j, long prime, const PrecisionConfig& cfg);

/// Field file: JSON object mapping vertex path strings ("1", "1.2", ...) to
/// arrays of q+1 digit/valuation records.
potts::BoundaryField field_from_json(const Json& j, const potts::ModelParams& params);

}  // namespace padic::io
