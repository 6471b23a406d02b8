#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "contractforge/model.hpp"

namespace contractforge {

// One affine piece of a cost function: value a + b*x on the interval from lo
// to hi, with explicit endpoint membership flags.
struct CostPiece {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = true;
  Rational a;
  Rational b;

  friend bool operator==(const CostPiece& l, const CostPiece& r) {
    return l.lo == r.lo && l.hi == r.hi && l.lo_closed == r.lo_closed &&
           l.hi_closed == r.hi_closed && l.a == r.a && l.b == r.b;
  }
};

// Piecewise-affine cost on [0,1]. Invariants, enforced at construction
// (InvalidCost on violation):
//   - pieces tile (0,1] contiguously; x = 1 is always covered; x = 0 is
//     covered either by a closed first piece or by the at_zero override;
//   - at interior junctions exactly one side is closed, so the function is
//     single-valued;
//   - c(0) = 0 (producing nothing is free) and c(x) >= 0 everywhere;
//   - x - c(x) attains its supremum on every piece: slopes b < 1 need a
//     closed right end, slopes b > 1 a closed left end. This keeps every
//     downstream maximization exact over finitely many candidate points.
class PiecewiseCost {
 public:
  PiecewiseCost(std::vector<CostPiece> pieces, Rational at_zero = Rational(0));

  const std::vector<CostPiece>& pieces() const { return pieces_; }
  const Rational& at_zero() const { return at_zero_; }

  Rational value_at(const Rational& x) const;

  friend bool operator==(const PiecewiseCost& l, const PiecewiseCost& r) {
    return l.pieces_ == r.pieces_ && l.at_zero_ == r.at_zero_;
  }

 private:
  std::vector<CostPiece> pieces_;
  Rational at_zero_;
};

struct RnaInstance {
  std::vector<PiecewiseCost> costs;  // one per agent
  int num_agents() const { return static_cast<int>(costs.size()); }
};

// t(x) = max(0, x - y): nothing up to the threshold, the full excess above it.
struct ThresholdPayment {
  Rational y;
  friend bool operator==(const ThresholdPayment& l, const ThresholdPayment& r) { return l.y == r.y; }
};

// Left-open right-closed constant pieces chained from 0: value applies on
// (previous hi, hi]; t(0) = 0.
struct StepPayment {
  struct Piece {
    Rational hi;
    Rational value;
    friend bool operator==(const Piece& l, const Piece& r) { return l.hi == r.hi && l.value == r.value; }
  };
  std::vector<Piece> pieces;
  friend bool operator==(const StepPayment& l, const StepPayment& r) { return l.pieces == r.pieces; }
};

using RnaPayment = std::variant<ThresholdPayment, StepPayment>;

// Throw std::invalid_argument unless y is in [0,1] / the steps climb to
// exactly 1 with nonnegative values.
void validate(const ThresholdPayment& payment);
void validate(const StepPayment& payment);
void validate(const RnaPayment& payment);

Rational payment_at(const RnaPayment& payment, const Rational& x);

// x_star maximizes x - cost(x); y is the maximum. 0 <= y <= x_star <= 1.
struct AgentSummary {
  Rational x_star;
  Rational y;
};

// Exact maximization over candidate points (piece endpoints, flat stretches
// of x - c(x), and 0). Among maximizers prefers the largest x; a flat stretch
// open on the right that ties the maximum is represented by its midpoint.
AgentSummary surplus_argmax(const PiecewiseCost& cost);

struct ApproxContract {
  ThresholdPayment payment;
  int i_star;          // 1-based rank in the ascending sort of the y values
  Rational guarantee;  // (n - i_star + 1) * y_(i_star), realized payoff is >= this
};

// The H_n-approximate threshold contract: sort surpluses ascending and pay
// the excess above the y value whose rank maximizes (n - i + 1) * y_(i).
ApproxContract approx_contract(const RnaInstance& instance);

// A utility-maximizing x; ties prefer larger x - t(x), then smaller x, over
// the candidate set. Throws std::invalid_argument when t(x) - c(x) does not
// attain its supremum (such payments are invalid against this cost).
Rational rna_best_response(const PiecewiseCost& cost, const RnaPayment& payment);

struct RnaOutcome {
  std::vector<Rational> choices;
  Rational payoff;  // sum of x_i - t(x_i)
};

RnaOutcome rna_simulate(const RnaInstance& instance, const RnaPayment& payment);

// The grid and scaling constants tying a discrete instance to its
// real-number-action image: z_j = (rho_j + j*M) / scale, scale = rho_m + m*M.
struct ReductionScale {
  Rational M;
  std::vector<Rational> z;  // z[0] = 0, z[m] = 1, strictly increasing
  Rational scale;
};

struct DaToRna {
  RnaInstance rna;
  ReductionScale scale;
};

// Step costs (c_{i,j} + j*M) / scale on (z_{j-1}, z_j]. M defaults to
// max{c_{i,j}, rho_j} + 1; an override must keep the step costs weakly
// increasing and the grid strictly increasing (std::invalid_argument).
DaToRna da_to_rna(const DaInstance& instance, const std::optional<Rational>& m_override = std::nullopt);

// t'(x) = (t_j + j*M) / scale on (z_{j-1}, z_j].
StepPayment rna_profile_from_da(const PaymentProfile& profile, const ReductionScale& scale);

// t_j = t(z_j) * scale - j*M, clamped at 0 (lowering unassigned actions'
// payments cannot change any best response). Throws MisalignedStep when the
// payment has a breakpoint off the z grid.
PaymentProfile da_profile_from_rna(const StepPayment& payment, const ReductionScale& scale);

}  // namespace contractforge
