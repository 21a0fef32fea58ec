#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smf/linalg.hpp"

namespace smf {

enum class SmfVariant {
  FeatureBased,  // SMF-H: classifier on codes, theta is (kappa+p) x n
  FilterBased,   // SMF-W: classifier on filtered signals, theta is p x (kappa+n)
};

std::string to_string(SmfVariant v);
SmfVariant variant_from_string(const std::string& s);

// Score function h: R -> [0, inf), twice differentiable, h(0)=1, increasing.
// Exp is the multinomial-logistic special case and uses closed forms throughout.
struct ScoreFunction {
  bool is_exp = true;
  std::function<double(double)> h, h_prime, h_second;  // used when !is_exp

  static ScoreFunction exp_score() { return ScoreFunction{}; }
  static ScoreFunction custom(std::function<double(double)> h,
                              std::function<double(double)> hp,
                              std::function<double(double)> hpp);
};

struct Dataset {
  Matrix x_data;            // p x n
  Matrix x_aux;             // q x n, q may be 0
  std::vector<int> labels;  // length n, values in {0..kappa}
  int kappa = 1;

  Eigen::Index p() const { return x_data.rows(); }
  Eigen::Index q() const { return x_aux.rows(); }
  Eigen::Index n() const { return x_data.cols(); }
  void validate() const;  // throws ConfigError on inconsistency
};

struct FactoredModel {
  Matrix w;      // p x r
  Matrix h;      // r x n
  Matrix beta;   // r x kappa
  Matrix gamma;  // q x kappa
};

struct LiftedState {
  Matrix theta;  // (kappa+p) x n for SMF-H, p x (kappa+n) for SMF-W
  Matrix gamma;  // q x kappa
  SmfVariant variant = SmfVariant::FeatureBased;
};

struct ConstraintSet {
  enum class Kind { Unconstrained, FrobeniusBall } kind = Kind::Unconstrained;
  double radius_theta = 0.0;
  double radius_gamma = 0.0;

  static ConstraintSet unconstrained() { return {}; }
  static ConstraintSet frobenius_ball(double r_theta, double r_gamma);
};

struct SolverConfig {
  SmfVariant variant = SmfVariant::FeatureBased;
  ScoreFunction score = ScoreFunction::exp_score();
  double xi = 1.0;        // factorization weight, > 0
  double lambda = 0.0;    // L2 weight on (A, gamma), >= 0
  double tau = 0.01;      // stepsize, > 0
  int rank = 1;           // r >= 1
  int max_iters = 100;    // N >= 1
  ConstraintSet constraint;
  double stop_tol = 1e-8;  // on the gradient-mapping norm
  long seed = 0;

  void validate() const;  // throws ConfigError
};

// JSON <-> SolverConfig with exactly the spec'd field names; unknown keys rejected.
SolverConfig solver_config_from_json(const std::string& json_text);
std::string solver_config_to_json(const SolverConfig& cfg);

// theta_0 = [beta^T H || W H] (SMF-H) or [W beta, W H] (SMF-W); gamma copied.
LiftedState lift(const FactoredModel& m, SmfVariant variant);

// SVD branch of Algorithm 1's output step. Spectrum beyond `rank` is truncated;
// `truncated_warning` (if given) is set when sigma_{r+1} > 1e-8 * sigma_1.
FactoredModel unlift(const LiftedState& state, int rank, bool* truncated_warning = nullptr);

// Euclidean projection onto the constraint set (per-factor ball rescaling).
LiftedState project_constraint(const LiftedState& state, const ConstraintSet& c);

// A/B split helpers: A is theta's first kappa rows (SMF-H) or first kappa
// columns (SMF-W), B the remainder.
Eigen::Block<const Matrix> block_a(const LiftedState& s, int kappa);
Eigen::Block<const Matrix> block_b(const LiftedState& s, int kappa);

// Default Algorithm 1 initialization: entries i.i.d. uniform on [0, 0.1].
FactoredModel default_init(Eigen::Index p, Eigen::Index q, Eigen::Index n, int kappa,
                           int rank, long seed);

double pair_norm(const Matrix& theta, const Matrix& gamma);  // ||[theta, gamma]||_F

}  // namespace smf
