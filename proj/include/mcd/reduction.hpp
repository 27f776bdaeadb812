#pragma once

#include "mcd/syntax.hpp"

namespace mcd {

struct EvalConfig {
  long fuel = 10'000'000;
  bool eta = false;
  // strategy is fixed: leftmost-outermost
};

struct ReductionStats {
  PureRef normalForm;
  long betaSteps = 0;
  long etaSteps = 0;
  long fuelUsed = 0;
  bool exhausted = false;
};

// One contraction of the leftmost-outermost β-redex. If the term has no
// β-redex at all and η is enabled, contracts the leftmost η-redex
// λx. f x with x not free in f. Null when normal under cfg.
PureRef step(const PureRef& t, const EvalConfig& cfg);

ReductionStats normalize(const PureRef& t, const EvalConfig& cfg = {});

struct EqResult {
  bool equal = false;
  bool exhausted = false; // fuel ran out before both sides reached normal form
};

// β(η)-convertibility via normalize-and-compare. Conservative: exhaustion
// reports not-equal with the exhausted flag set so callers can escalate.
EqResult betaEq(const PureRef& a, const PureRef& b, const EvalConfig& cfg = {});

} // namespace mcd
