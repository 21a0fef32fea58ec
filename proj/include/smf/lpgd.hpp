#pragma once

#include <optional>

#include "smf/objective.hpp"

namespace smf {

struct IterTrace {
  int iter = 0;
  double objective = 0.0;
  double grad_map_norm = 0.0;
  std::optional<double> dist_to_ref;
  double elapsed_seconds = 0.0;
};

struct LpgdResult {
  LiftedState final_state;
  FactoredModel final_model;
  std::vector<IterTrace> trace;
  bool converged = false;
  std::optional<double> rho_estimate;
};

// Divergence carries the failing iteration and the last finite trace.
struct DivergenceError : NumericalError {
  int iter;
  std::vector<IterTrace> trace;
  DivergenceError(int it, std::vector<IterTrace> tr, const std::string& msg)
      : NumericalError(msg), iter(it), trace(std::move(tr)) {}
};

// Algorithm 1: theta_k <- Pi_r(Pi_Theta(theta_{k-1} - tau grad_theta F)),
// gamma_k <- gamma_{k-1} - tau grad_gamma F (Pi_Theta applied to the pair).
// Stops early when the gradient-mapping norm drops below cfg.stop_tol.
LpgdResult lpgd_train(const Dataset& data, const SolverConfig& cfg,
                      const std::optional<FactoredModel>& init = std::nullopt,
                      const std::optional<LiftedState>& ref = std::nullopt);

// G(Z, tau) = (Z - Pi_Theta(Z - tau grad F(Z))) / tau; equals grad F exactly
// when Theta is unconstrained.
LossGradient gradient_mapping(const LiftedState& state, const Dataset& data,
                              const SolverConfig& cfg, double* norm_out = nullptr);

// Core formula for a precomputed gradient (also used with synthetic objectives
// in tests).
LossGradient gradient_mapping_from(const LiftedState& state, const LossGradient& grad,
                                   double tau, const ConstraintSet& constraint);

// exp(least-squares slope of log dist_to_ref vs iter) over the final 50% of
// usable points (dist present and > 1e-14); needs >= 10 such points.
double fit_contraction_rate(const std::vector<IterTrace>& trace);

struct StepSizeWindow {
  double lo = 0.0;  // 1 / (2 mu)
  double hi = 0.0;  // 3 / (2 L)
  bool ok = false;  // L / mu < 3
  double midpoint() const { return 0.5 * (lo + hi); }
};

StepSizeWindow step_size_window(double mu, double l);

// One IterTrace object per line, field names as in the type;
// dist_to_ref omitted when absent.
std::string trace_to_jsonl(const std::vector<IterTrace>& trace);

}  // namespace smf
