#pragma once

#include "smf/objective.hpp"

namespace smf {

struct GenerativeSpec {
  int p = 0;
  int q = 0;
  int n = 0;
  int r = 1;
  int kappa = 1;
  double sigma = 0.0;       // feature noise
  double sigma_aux = 0.0;   // auxiliary-feature noise
  SmfVariant variant = SmfVariant::FeatureBased;
  long seed = 0;
  double scale = 0.0;       // ground-truth factor entry scale; 0 => 1/sqrt(r)

  void validate() const;
  double effective_scale() const;
};

GenerativeSpec generative_spec_from_json(const std::string& json_text);
std::string generative_spec_to_json(const GenerativeSpec& spec);

struct GroundTruth {
  Matrix a_star;      // kappa x n (SMF-H) or p x kappa (SMF-W)
  Matrix b_star;      // p x n
  Matrix c_star;      // q x n
  Matrix gamma_star;  // q x kappa
  LiftedState z_star;
};

// Generative SMF model: theta* = product of two seeded Gaussian factors,
// x_i = B*[:,i] + eps_i, x'_i = C*[:,i] + eps'_i, y_i ~ Multinomial(g(a_i))
// with h = exp. Deterministic per seed.
std::pair<Dataset, GroundTruth> generate(const GenerativeSpec& spec);

// Semi-synthetic construction: two averaged source-image groups form the
// feature factor, two more form the label factor, codes are U[0,1], features
// get N(0, sigma^2) noise, and binary labels are Bernoulli with
// p_i = sigmoid([1,-1] W_Y^T X_data[:,i]). q = 0, kappa = 1.
// `source` must hold at least 40 columns (4 groups of 10); when absent a
// smooth nonnegative surrogate is generated from the seed.
std::pair<Dataset, GroundTruth> semi_synthetic_mnist_like(
    long seed, int p = 784, int n = 500, int r = 2, double sigma = 0.5,
    const std::optional<Matrix>& source = std::nullopt);

struct ConditionReport {
  double delta_minus = 0.0;  // lambda_min(n^-1 Phi Phi^T), Phi = [X_data || X_aux]
  double delta_plus = 0.0;
  MnlConstants constants;
  double mu = 0.0;
  double l = 0.0;
  bool ok = false;          // L/mu < 3 (and mu > 0, Phi nondegenerate for SMF-W)
  bool degenerate = false;  // delta_minus <= 0 within tolerance
  double rho_for_tau = 0.0; // 2 (1 - tau mu) at cfg.tau
};

// Eq.-(8) condition numbers evaluated on the realized data at activation
// bound m_bound:
//   SMF-W: mu = min(2xi, 2lambda + n delta^- alpha^-), L = max(2xi, 2lambda + n delta^+ alpha^+)
//   SMF-H: mu = min(2xi, 2lambda),                     L = max(2xi, 2lambda + alpha^+)
ConditionReport condition_diagnostics(const Dataset& data, const SolverConfig& cfg,
                                      double m_bound);

// Max realized ||a_s|| at a given state (the default m_bound for diagnostics).
double max_activation_norm(const LiftedState& state, const Dataset& data);

}  // namespace smf
