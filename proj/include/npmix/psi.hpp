#pragma once

#include "npmix/filtering.hpp"

#include <unordered_map>

namespace npmix {

// N x K table of conditional likelihoods p(Y_i | phi_k) in row-scaled
// form: true p(Y_i | phi_k) = values(i,k) * exp(row_log_scale(i)), and
// each row's maximum entry is 1 unless the row is all zero.
struct PsiMatrix {
  Eigen::MatrixXd values;
  Eigen::VectorXd row_log_scale;
  std::vector<Eigen::VectorXd> grid;

  std::size_t n_subjects() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t n_points() const { return static_cast<std::size_t>(values.cols()); }
};

// log p(Y_i | theta) for every subject at one grid point.
Eigen::VectorXd log_likelihood_column(const ModelSpec& spec, const std::vector<Subject>& subjects,
                                      const Eigen::VectorXd& theta);

// Cache of log-likelihood columns keyed by the exact bit pattern of theta,
// reused for grid points retained across adaptive-grid cycles.
class PsiCache {
 public:
  const Eigen::VectorXd* find(const Eigen::VectorXd& theta) const;
  void insert(const Eigen::VectorXd& theta, Eigen::VectorXd column);
  std::size_t size() const { return cache_.size(); }

 private:
  static std::string key(const Eigen::VectorXd& theta);
  std::unordered_map<std::string, Eigen::VectorXd> cache_;
};

// Builds the scaled likelihood table over subjects x grid.  Throws
// DegenerateSubjectError when some subject has zero likelihood at every
// grid point.  Entries below 1e-100 after scaling are clamped to zero.
PsiMatrix build_psi(const ModelSpec& spec, const std::vector<Subject>& subjects,
                    const std::vector<Eigen::VectorXd>& grid, int threads = 0,
                    PsiCache* cache = nullptr);

// True (unscaled) mixture log-likelihood sum_i log(sum_k w_k p(Y_i|phi_k)).
double mixture_log_likelihood(const PsiMatrix& psi, const Eigen::VectorXd& weights);

}  // namespace npmix
