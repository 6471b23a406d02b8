#include "contractforge/json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace contractforge {

using nlohmann::json;

namespace {

std::vector<Rational> rational_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const json& entry : j) out.push_back(rational_from_json(entry));
  return out;
}

json to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(to_json(v));
  return arr;
}

}  // namespace

json to_json(const Rational& value) { return json(value.str()); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or \"p/q\" string, got " + j.dump());
}

json to_json(const DaInstance& instance) {
  json costs = json::array();
  for (const auto& row : instance.costs) costs.push_back(to_json(row));
  return json{{"rewards", to_json(instance.rewards)}, {"costs", costs}};
}

DaInstance da_instance_from_json(const json& j) {
  DaInstance instance;
  instance.rewards = rational_array(j.at("rewards"), "rewards");
  const json& costs = j.at("costs");
  if (!costs.is_array()) throw std::invalid_argument("costs must be an array of arrays");
  for (const json& row : costs) instance.costs.push_back(rational_array(row, "cost row"));
  validate(instance);
  return instance;
}

json to_json(const PaymentProfile& profile) { return json{{"payments", to_json(profile.payments)}}; }

PaymentProfile payment_profile_from_json(const json& j) {
  PaymentProfile profile{rational_array(j.at("payments"), "payments")};
  for (const Rational& t : profile.payments) {
    if (t.sign() < 0) throw std::invalid_argument("payments must be nonnegative");
  }
  return profile;
}

json to_json(const Outcome& outcome) {
  return json{{"chosen_action", outcome.chosen_action},
              {"agent_utility", to_json(outcome.agent_utility)},
              {"principal_payoff", to_json(outcome.principal_payoff)}};
}

json to_json(const Solution& solution) {
  return json{{"method", solution.method == SolveMethod::kDp ? "dp" : "oracle"},
              {"assignment", solution.assignment},
              {"payments", to_json(solution.profile.payments)},
              {"payoff", to_json(solution.value)}};
}

json to_json(const PiecewiseCost& cost) {
  json pieces = json::array();
  for (const CostPiece& p : cost.pieces()) {
    pieces.push_back(json{{"lo", to_json(p.lo)},
                          {"hi", to_json(p.hi)},
                          {"lo_closed", p.lo_closed},
                          {"hi_closed", p.hi_closed},
                          {"a", to_json(p.a)},
                          {"b", to_json(p.b)}});
  }
  return json{{"pieces", pieces}, {"at_zero", to_json(cost.at_zero())}};
}

PiecewiseCost piecewise_cost_from_json(const json& j) {
  const json& pieces_json = j.at("pieces");
  if (!pieces_json.is_array()) throw std::invalid_argument("pieces must be an array");
  std::vector<CostPiece> pieces;
  for (const json& p : pieces_json) {
    CostPiece piece;
    piece.lo = rational_from_json(p.at("lo"));
    piece.hi = rational_from_json(p.at("hi"));
    piece.lo_closed = p.at("lo_closed").get<bool>();
    piece.hi_closed = p.at("hi_closed").get<bool>();
    piece.a = rational_from_json(p.at("a"));
    piece.b = rational_from_json(p.at("b"));
    pieces.push_back(piece);
  }
  Rational at_zero = j.contains("at_zero") ? rational_from_json(j.at("at_zero")) : Rational(0);
  return PiecewiseCost(std::move(pieces), at_zero);
}

json to_json(const RnaInstance& instance) {
  json costs = json::array();
  for (const PiecewiseCost& c : instance.costs) costs.push_back(to_json(c));
  return json{{"costs", costs}};
}

RnaInstance rna_instance_from_json(const json& j) {
  const json& inner = j.contains("rna") ? j.at("rna") : j;
  const json& costs = inner.at("costs");
  if (!costs.is_array()) throw std::invalid_argument("costs must be an array");
  RnaInstance instance;
  for (const json& c : costs) instance.costs.push_back(piecewise_cost_from_json(c));
  return instance;
}

json to_json(const RnaPayment& payment) {
  if (const auto* threshold = std::get_if<ThresholdPayment>(&payment)) {
    return json{{"threshold", to_json(threshold->y)}};
  }
  const auto& step = std::get<StepPayment>(payment);
  json pieces = json::array();
  for (const StepPayment::Piece& p : step.pieces) {
    pieces.push_back(json{{"hi", to_json(p.hi)}, {"value", to_json(p.value)}});
  }
  return json{{"step", pieces}};
}

RnaPayment rna_payment_from_json(const json& j) {
  if (j.contains("threshold")) {
    ThresholdPayment payment{rational_from_json(j.at("threshold"))};
    validate(payment);
    return payment;
  }
  if (j.contains("step")) {
    const json& pieces_json = j.at("step");
    if (!pieces_json.is_array()) throw std::invalid_argument("step must be an array");
    StepPayment payment;
    for (const json& p : pieces_json) {
      payment.pieces.push_back({rational_from_json(p.at("hi")), rational_from_json(p.at("value"))});
    }
    validate(payment);
    return payment;
  }
  throw std::invalid_argument("payment must contain \"threshold\" or \"step\"");
}

json to_json(const ApproxContract& contract) {
  return json{{"payment", to_json(RnaPayment(contract.payment))},
              {"i_star", contract.i_star},
              {"guarantee", to_json(contract.guarantee)}};
}

json to_json(const RnaOutcome& outcome) {
  return json{{"choices", to_json(outcome.choices)}, {"payoff", to_json(outcome.payoff)}};
}

json to_json(const DaToRna& reduction) {
  return json{{"rna", to_json(reduction.rna)},
              {"scale", json{{"M", to_json(reduction.scale.M)},
                             {"z", to_json(reduction.scale.z)},
                             {"scale", to_json(reduction.scale.scale)}}}};
}

json to_json(const HardnessBundle& bundle) {
  json out = to_json(bundle.instance);
  out["r"] = to_json(bundle.r);
  out["names"] = json{{"agents", bundle.agent_names}, {"actions", bundle.action_names}};
  return out;
}

}  // namespace contractforge
