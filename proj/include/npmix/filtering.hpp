#pragma once

#include "npmix/models.hpp"

namespace npmix {

// Conditional state law plus accumulated log-likelihood.
struct FilterState {
  Eigen::VectorXd x;
  Eigen::MatrixXd cov;
  double log_likelihood = 0.0;
};

struct PredictiveMoments {
  Eigen::VectorXd x_pred;
  Eigen::MatrixXd cov_pred;
  Eigen::VectorXd y_hat;
  Eigen::MatrixXd innovation_cov;  // S = C cov_pred C' + V
};

// One-step-ahead state and observation moments:
//   x_pred = A x + B u,  cov_pred = W + A cov A',
//   y_hat  = C x_pred,   S = C cov_pred C' + V.
PredictiveMoments predictive_moments(const FilterState& state, const Eigen::MatrixXd& A,
                                     const Eigen::MatrixXd& B, const Eigen::VectorXd& u,
                                     const Eigen::MatrixXd& W, const Eigen::MatrixXd& C,
                                     const Eigen::MatrixXd& V);

// Measurement update with gain F = cov_pred C' S^{-1}.  The innovation
// covariance is factored by Cholesky; on failure a single jitter of
// 1e-10 tr(S)/p is applied, and if that also fails the update returns
// false and the caller reports -inf for the subject.
bool kalman_update(FilterState& state, const PredictiveMoments& pm, const Eigen::MatrixXd& C,
                   const Eigen::VectorXd& y);

// Exact log p(Y | theta) for one subject: the telescoped product of
// one-step predictive densities.  Returns -inf on degenerate numerics,
// never throws for numerical reasons.
double subject_log_likelihood(const DiscreteLinearModel& model, const Subject& subject);

// Reference implementation used by subject_log_likelihood for
// non-scalar systems; exposed so the scalar fast path can be checked
// against it.
double subject_log_likelihood_generic(const DiscreteLinearModel& model, const Subject& subject);

}  // namespace npmix
