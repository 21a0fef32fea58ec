#pragma once

#include "smf/model.hpp"

namespace smf {

struct LossGradient {
  Matrix d_theta;  // same shape as theta
  Matrix d_gamma;  // q x kappa
  double norm() const { return pair_norm(d_theta, d_gamma); }
};

// Remark-style multinomial-logistic constants at activation bound M.
struct MnlConstants {
  double gamma_max = 0.0;
  double alpha_minus = 0.0;
  double alpha_plus = 0.0;
  double m_bound = 0.0;
};

// Per-sample activations a_s as the columns of a kappa x n matrix:
// SMF-H: a_s = A[:,s] + gamma^T x'_s; SMF-W: a_s = A^T x_s + gamma^T x'_s.
Matrix activations(const LiftedState& state, const Dataset& data);

// g(a) = C [1, h(a_1), ..., h(a_kappa)], C = 1/(1 + sum h(a_c)).
// For h=exp computed via a shifted log-sum-exp.
Vector predictive_probs(const Vector& a, const ScoreFunction& score);

// Negative log-likelihood of label y at activation a.
double nll(int y, const Vector& a, const ScoreFunction& score);

// F(Z) = sum_s nll(y_s, a_s) + xi ||X - B||_F^2 + lambda (||A||_F^2 + ||gamma||_F^2).
double objective_value(const LiftedState& state, const Dataset& data, const SolverConfig& cfg);

// Gradient hdot = grad_a nll and observed information hddot = hess_a nll.
void score_derivatives(int y, const Vector& a, const ScoreFunction& score,
                       Vector& hdot, Matrix& hddot);

LossGradient gradient(const LiftedState& state, const Dataset& data, const SolverConfig& cfg);

// gamma_max = 1 + e^M / (1 + e^M + (kappa-1) e^-M)
// alpha^-   = e^-M / (1 + e^-M + (kappa-1) e^M)
// alpha^+   = e^M (1 + 2(kappa-1) e^M) / (1 + e^M + (kappa-1) e^-M)^2
MnlConstants mnl_constants(double m_bound, int kappa);

// Exact quadratic form of the lifted-objective Hessian at `state` along the
// direction (d_theta, d_gamma):
//   sum_s da_s^T Hdd_s da_s + 2 xi ||dB||_F^2 + 2 lambda (||dA||_F^2 + ||dgamma||_F^2).
double hessian_quadratic_form(const LiftedState& state, const Dataset& data,
                              const SolverConfig& cfg, const Matrix& d_theta,
                              const Matrix& d_gamma);

struct EigBoundsReport {
  int trials = 0;
  double worst_lower_slack = 0.0;     // min over trials of lambda_min(Hdd) - lower bound
  double worst_upper_slack = 0.0;     // min over trials of upper bound - lambda_max(Hdd)
  double worst_kron_lower_slack = 0.0;  // sandwich (B.12-style) slacks
  double worst_kron_upper_slack = 0.0;
  bool ok = false;
};

// Assembles exact per-sample observed-information matrices at random bounded
// activations and checks the per-matrix eigenvalue bounds plus the
// Kronecker-sum sandwich against a dense eigensolver. Requires p*kappa <= 200.
EigBoundsReport hessian_eig_bounds_check(const Dataset& data, const SolverConfig& cfg,
                                         int trials);

}  // namespace smf
