#pragma once

#include "smf/lpgd.hpp"

namespace smf {

// Baseline block-coordinate descent on the unlifted four-block problem,
// targeting the same objective value as the lifted solver (Eq.-4 terms plus
// the same L2 regularizer applied to beta^T H or W beta, and gamma).
//
// Per sweep, in fixed order H, W, beta, gamma:
//  - H and W: exact ridge least squares against the factorization term,
//    combined with one proximal gradient step for the classification and
//    regularization terms when they involve the block;
//  - beta and gamma: `grad_steps` plain gradient steps with stepsize cfg.tau.
// One trace entry per sweep; max_iters counts sweeps.
LpgdResult bcd_train(const Dataset& data, const SolverConfig& cfg,
                     const std::optional<FactoredModel>& init = std::nullopt,
                     const std::optional<LiftedState>& ref = std::nullopt,
                     int grad_steps = 5);

}  // namespace smf
