#pragma once

#include <json.hpp>

#include "contractforge/dp.hpp"
#include "contractforge/hardness.hpp"
#include "contractforge/model.hpp"
#include "contractforge/rna.hpp"

namespace contractforge {

// Rationals are emitted as decimal strings ("5", "-3/2") so values survive
// the wire exactly; floats are never produced. Parsing accepts a JSON integer
// or a "p/q" string and throws std::invalid_argument on anything else,
// including floating-point numbers.
nlohmann::json to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& j);

// {"rewards": [rat], "costs": [[rat]]}; parsing validates shape and signs.
nlohmann::json to_json(const DaInstance& instance);
DaInstance da_instance_from_json(const nlohmann::json& j);

// {"payments": [rat]}; length is checked against an instance at the call site.
nlohmann::json to_json(const PaymentProfile& profile);
PaymentProfile payment_profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Outcome& outcome);
nlohmann::json to_json(const Solution& solution);

// {"pieces": [{"lo","hi","lo_closed","hi_closed","a","b"}], "at_zero": rat};
// construction enforces the cost invariants, so parsing can throw InvalidCost.
nlohmann::json to_json(const PiecewiseCost& cost);
PiecewiseCost piecewise_cost_from_json(const nlohmann::json& j);

// {"costs": [cost]}; parsing also unwraps {"rna": {...}} so the output of the
// discrete-to-real reduction can be fed straight back in.
nlohmann::json to_json(const RnaInstance& instance);
RnaInstance rna_instance_from_json(const nlohmann::json& j);

// {"threshold": rat} or {"step": [{"hi": rat, "value": rat}]}.
nlohmann::json to_json(const RnaPayment& payment);
RnaPayment rna_payment_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ApproxContract& contract);
nlohmann::json to_json(const RnaOutcome& outcome);

// {"rna": instance, "scale": {"M": rat, "z": [rat], "scale": rat}}.
nlohmann::json to_json(const DaToRna& reduction);

// The instance fields plus {"r": rat, "names": {"agents": [...], "actions": [...]}}.
nlohmann::json to_json(const HardnessBundle& bundle);

}  // namespace contractforge
