#include "contractforge/rna.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "contractforge/errors.hpp"

namespace contractforge {
namespace {

Rational piece_value(const CostPiece& p, const Rational& x) { return p.a + p.b * x; }

bool piece_contains(const CostPiece& p, const Rational& x) {
  if (x < p.lo || x > p.hi) return false;
  if (x == p.lo && !p.lo_closed) return false;
  if (x == p.hi && !p.hi_closed) return false;
  return true;
}

}  // namespace

PiecewiseCost::PiecewiseCost(std::vector<CostPiece> pieces, Rational at_zero)
    : pieces_(std::move(pieces)), at_zero_(std::move(at_zero)) {
  if (pieces_.empty()) throw InvalidCost("cost: no pieces");
  if (pieces_.front().lo != 0) throw InvalidCost("cost: domain must start at 0");
  if (pieces_.back().hi != 1) throw InvalidCost("cost: domain must end at 1");
  if (!pieces_.back().hi_closed) throw InvalidCost("cost: x = 1 must be covered");
  if (at_zero_ != 0) throw InvalidCost("cost: c(0) must be 0");
  if (pieces_.front().lo_closed && pieces_.front().a != 0) {
    throw InvalidCost("cost: c(0) must be 0");
  }
  for (size_t k = 0; k < pieces_.size(); ++k) {
    const CostPiece& p = pieces_[k];
    if (!(p.lo < p.hi)) throw InvalidCost("cost: piece interval is empty");
    if (k + 1 < pieces_.size()) {
      const CostPiece& q = pieces_[k + 1];
      if (p.hi != q.lo) throw InvalidCost("cost: pieces leave a gap or overlap");
      if (p.hi_closed == q.lo_closed) {
        throw InvalidCost("cost: junction must be closed on exactly one side");
      }
    }
    if (piece_value(p, p.lo) < 0 || piece_value(p, p.hi) < 0) {
      throw InvalidCost("cost: negative value");
    }
    // x - c(x) has slope 1 - b here; its supremum over the piece must be
    // attained at a member point or downstream maximizations go inexact.
    if (p.b < 1 && !p.hi_closed) throw InvalidCost("cost: slope below 1 needs a closed right end");
    if (p.b > 1 && !p.lo_closed) throw InvalidCost("cost: slope above 1 needs a closed left end");
  }
}

Rational PiecewiseCost::value_at(const Rational& x) const {
  if (x < 0 || x > 1) throw std::domain_error("cost: x outside [0,1]");
  if (x == 0 && !pieces_.front().lo_closed) return at_zero_;
  // First piece with hi >= x contains x unless x sits exactly on its open
  // right end; then the junction rule hands x to the next piece.
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const CostPiece& p, const Rational& v) { return p.hi < v; });
  if (piece_contains(*it, x)) return piece_value(*it, x);
  return piece_value(*(it + 1), x);
}

void validate(const ThresholdPayment& payment) {
  if (payment.y < 0 || payment.y > 1) throw std::invalid_argument("threshold: y outside [0,1]");
}

void validate(const StepPayment& payment) {
  if (payment.pieces.empty()) throw std::invalid_argument("step: no pieces");
  Rational lo = 0;
  for (const auto& piece : payment.pieces) {
    if (!(piece.hi > lo)) throw std::invalid_argument("step: breakpoints must increase");
    if (piece.value < 0) throw std::invalid_argument("step: negative payment");
    lo = piece.hi;
  }
  if (lo != 1) throw std::invalid_argument("step: pieces must cover (0,1]");
}

void validate(const RnaPayment& payment) {
  std::visit([](const auto& p) { validate(p); }, payment);
}

Rational payment_at(const RnaPayment& payment, const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("payment: x outside [0,1]");
  if (const auto* thr = std::get_if<ThresholdPayment>(&payment)) {
    return x > thr->y ? x - thr->y : Rational(0);
  }
  const auto& step = std::get<StepPayment>(payment);
  if (x == 0) return 0;
  auto it = std::lower_bound(
      step.pieces.begin(), step.pieces.end(), x,
      [](const StepPayment::Piece& p, const Rational& v) { return p.hi < v; });
  return it->value;  // x <= 1 = the last hi, so a piece always matches
}

AgentSummary surplus_argmax(const PiecewiseCost& cost) {
  // x = 0 always yields 0; member endpoints cover sloped pieces; midpoints
  // stand in for pieces where x - c(x) is constant.
  AgentSummary best{0, 0};
  auto consider = [&](const Rational& x) {
    Rational y = x - cost.value_at(x);
    if (y > best.y || (y == best.y && x > best.x_star)) best = {x, std::move(y)};
  };
  for (const auto& p : cost.pieces()) {
    if (p.lo_closed) consider(p.lo);
    if (p.hi_closed) consider(p.hi);
    if (p.b == 1) consider((p.lo + p.hi) / 2);
  }
  return best;
}

ApproxContract approx_contract(const RnaInstance& instance) {
  const int n = instance.num_agents();
  if (n == 0) throw std::invalid_argument("approx_contract: no agents");
  std::vector<Rational> ys;
  ys.reserve(n);
  for (const auto& cost : instance.costs) ys.push_back(surplus_argmax(cost).y);
  std::sort(ys.begin(), ys.end());

  int i_star = 1;
  Rational guarantee = Rational(n) * ys[0];
  for (int i = 2; i <= n; ++i) {
    Rational cand = Rational(n - i + 1) * ys[i - 1];
    if (cand > guarantee) {
      guarantee = std::move(cand);
      i_star = i;
    }
  }
  return ApproxContract{ThresholdPayment{ys[i_star - 1]}, i_star, std::move(guarantee)};
}

namespace {

// Payment restricted to an open interval around mid is affine alpha + beta*x;
// mid never sits on a payment breakpoint (those are cell boundaries).
std::pair<Rational, Rational> payment_affine(const RnaPayment& payment, const Rational& mid) {
  if (const auto* thr = std::get_if<ThresholdPayment>(&payment)) {
    if (mid > thr->y) return {-thr->y, Rational(1)};
    return {Rational(0), Rational(0)};
  }
  return {payment_at(payment, mid), Rational(0)};
}

const CostPiece& covering_piece(const PiecewiseCost& cost, const Rational& mid) {
  for (const auto& p : cost.pieces()) {
    if (mid > p.lo && mid < p.hi) return p;
  }
  throw std::logic_error("cost: interior point not covered");
}

}  // namespace

Rational rna_best_response(const PiecewiseCost& cost, const RnaPayment& payment) {
  validate(payment);

  std::vector<Rational> breaks;
  breaks.push_back(0);
  breaks.push_back(1);
  for (const auto& p : cost.pieces()) {
    breaks.push_back(p.lo);
    breaks.push_back(p.hi);
  }
  if (const auto* thr = std::get_if<ThresholdPayment>(&payment)) {
    breaks.push_back(thr->y);
  } else {
    for (const auto& p : std::get<StepPayment>(payment).pieces) breaks.push_back(p.hi);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  struct Candidate {
    Rational x;
    Rational utility;
    Rational net;  // x - t(x), the principal's take
  };
  std::vector<Candidate> candidates;
  auto add = [&](const Rational& x) {
    Rational t = payment_at(payment, x);
    candidates.push_back({x, t - cost.value_at(x), x - t});
  };
  for (const auto& x : breaks) add(x);

  // Between adjacent breakpoints the utility is affine: its supremum leans on
  // an endpoint (tracked to verify attainment below) and flat cells
  // contribute an attained midpoint candidate.
  Rational sup = candidates.front().utility;
  for (size_t k = 0; k + 1 < breaks.size(); ++k) {
    const Rational mid = (breaks[k] + breaks[k + 1]) / 2;
    const CostPiece& cp = covering_piece(cost, mid);
    auto [t_alpha, t_beta] = payment_affine(payment, mid);
    Rational alpha = t_alpha - cp.a;
    Rational beta = t_beta - cp.b;
    if (beta == 0) add(mid);
    Rational at_lo = alpha + beta * breaks[k];
    Rational at_hi = alpha + beta * breaks[k + 1];
    if (at_lo > sup) sup = std::move(at_lo);
    if (at_hi > sup) sup = std::move(at_hi);
  }

  const Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.utility > best->utility ||
        (c.utility == best->utility &&
         (c.net > best->net || (c.net == best->net && c.x < best->x)))) {
      best = &c;
    }
  }
  if (sup > best->utility) {
    throw std::invalid_argument("rna_best_response: utility supremum is not attained");
  }
  return best->x;
}

RnaOutcome rna_simulate(const RnaInstance& instance, const RnaPayment& payment) {
  RnaOutcome out;
  out.choices.reserve(instance.costs.size());
  out.payoff = 0;
  for (const auto& cost : instance.costs) {
    Rational x = rna_best_response(cost, payment);
    out.payoff += x - payment_at(payment, x);
    out.choices.push_back(std::move(x));
  }
  return out;
}

DaToRna da_to_rna(const DaInstance& instance, const std::optional<Rational>& m_override) {
  validate(instance);
  const int n = instance.num_agents();
  const int m = instance.num_actions();
  if (m == 0) throw std::invalid_argument("da_to_rna: need at least one action");

  Rational M;
  if (m_override) {
    M = *m_override;
    if (M <= 0) throw std::invalid_argument("da_to_rna: M must be positive");
    for (int j = 1; j < m; ++j) {
      if (instance.reward(j + 1) + M <= instance.reward(j)) {
        throw std::invalid_argument("da_to_rna: M too small for a strictly increasing grid");
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 1; j < m; ++j) {
        if (instance.cost(i, j + 1) + M < instance.cost(i, j)) {
          throw std::invalid_argument("da_to_rna: M too small for weakly increasing step costs");
        }
      }
    }
  } else {
    M = 0;
    for (int j = 1; j <= m; ++j) {
      if (instance.reward(j) > M) M = instance.reward(j);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (instance.cost(i, j) > M) M = instance.cost(i, j);
      }
    }
    M += 1;
  }

  ReductionScale scale;
  scale.M = M;
  scale.scale = instance.reward(m) + Rational(m) * M;
  scale.z.resize(m + 1);
  scale.z[0] = 0;
  for (int j = 1; j <= m; ++j) {
    scale.z[j] = (instance.reward(j) + Rational(j) * M) / scale.scale;
  }

  RnaInstance rna;
  rna.costs.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<CostPiece> pieces(m);
    for (int j = 1; j <= m; ++j) {
      pieces[j - 1] = CostPiece{scale.z[j - 1], scale.z[j], false, true,
                                (instance.cost(i, j) + Rational(j) * M) / scale.scale, Rational(0)};
    }
    rna.costs.emplace_back(std::move(pieces));
  }
  return DaToRna{std::move(rna), std::move(scale)};
}

StepPayment rna_profile_from_da(const PaymentProfile& profile, const ReductionScale& scale) {
  const int m = static_cast<int>(scale.z.size()) - 1;
  if (static_cast<int>(profile.payments.size()) != m) {
    throw std::invalid_argument("rna_profile_from_da: profile length does not match the grid");
  }
  StepPayment step;
  step.pieces.resize(m);
  for (int j = 1; j <= m; ++j) {
    step.pieces[j - 1] = {scale.z[j], (profile.payment(j) + Rational(j) * scale.M) / scale.scale};
  }
  validate(step);
  return step;
}

PaymentProfile da_profile_from_rna(const StepPayment& payment, const ReductionScale& scale) {
  validate(payment);
  const int m = static_cast<int>(scale.z.size()) - 1;
  // Breakpoints must sit on the grid; a piece spanning several grid cells is
  // fine, the payment is still constant on each cell.
  for (const auto& piece : payment.pieces) {
    if (!std::binary_search(scale.z.begin() + 1, scale.z.end(), piece.hi)) {
      throw MisalignedStep("da_profile_from_rna: breakpoint off the z grid");
    }
  }
  RnaPayment wrapped = payment;
  PaymentProfile profile;
  profile.payments.resize(m);
  for (int j = 1; j <= m; ++j) {
    Rational t = payment_at(wrapped, scale.z[j]) * scale.scale - Rational(j) * scale.M;
    profile.payments[j - 1] = t < 0 ? Rational(0) : std::move(t);
  }
  return profile;
}

}  // namespace contractforge
