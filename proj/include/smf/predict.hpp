#pragma once

#include "smf/lpgd.hpp"

namespace smf {

struct Prediction {
  int label = 0;
  Vector probs;  // length kappa+1
};

// SMF-W: a = beta^T W^T x + gamma^T x_aux; argmax of g(a), ties to the
// smallest index.
Prediction predict_filter(const FactoredModel& model, const Vector& x, const Vector& x_aux,
                          const ScoreFunction& score);

// SMF-H heuristic: h_test = least_squares(W, x), then classify on
// beta^T h_test + gamma^T x_aux.
Prediction predict_feature_heuristic(const FactoredModel& model, const Vector& x,
                                     const Vector& x_aux, const ScoreFunction& score);

struct FeatureFullPrediction {
  int label = 0;
  Vector probs;        // softmin over per-class objectives (heuristic report)
  Matrix h_per_class;  // r x (kappa+1), optimal code per candidate label
  Vector objectives;   // per-class optimal objective
};

// Supervised sparse coding: for each candidate y, minimize
// nll(y, beta^T h + gamma^T x_aux) + xi ||x - W h||^2 over h by gradient
// descent with backtracking (tol 1e-8, max 500 steps).
FeatureFullPrediction predict_feature_full(const FactoredModel& model, const Vector& x,
                                           const Vector& x_aux, const ScoreFunction& score,
                                           double xi);

// Rank-r SVD factorization of the training matrix followed by multinomial
// logistic regression on W^T X (ridge 1e-4, tol 1e-8).
double mf_lr_baseline(const Dataset& train, const Dataset& test, int r);

// Multinomial logistic regression on raw feature columns; returns the
// coefficient matrix (features x kappa). Used by mf_lr_baseline and tests.
Matrix fit_multinomial_lr(const Matrix& features, const std::vector<int>& labels, int kappa,
                          double ridge = 1e-4, double tol = 1e-8, int max_iters = 5000);

struct CvCell {
  std::string config_name;
  int fold = 0;
  double accuracy = 0.0;
};

struct CvSummaryRow {
  std::string config_name;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
};

struct CvResult {
  std::vector<CvCell> cells;
  std::vector<CvSummaryRow> summary;
  std::vector<std::string> warnings;  // e.g. class absent from a training fold
};

// Stratified k-fold cross-validation over a grid of solver configs
// (per-class round-robin assignment after a seeded shuffle).
CvResult cross_validate(const Dataset& data, const std::vector<SolverConfig>& grid,
                        const std::vector<std::string>& config_names, int folds, long seed);

// Fold id per sample, stratified by class.
std::vector<int> stratified_folds(const std::vector<int>& labels, int folds, long seed);

// Per-factor report: column w_j, coefficients beta_j, top-k feature indices
// (or names) by |w_j|. Emitted as JSON.
std::string supervised_factor_report(const FactoredModel& model,
                                     const std::vector<std::string>& feature_names = {},
                                     int top_k = 5);

// Per-row (gene) standardization to mean 0, variance 1; constant rows left at 0.
Matrix normalize_rows(const Matrix& m);

double accuracy_on(const Dataset& test, const FactoredModel& model, SmfVariant variant,
                   const ScoreFunction& score);

}  // namespace smf
