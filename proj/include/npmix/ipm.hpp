#pragma once

#include "npmix/psi.hpp"

namespace npmix {

struct WeightSolution {
  Eigen::VectorXd weights;       // on the simplex
  double log_likelihood = 0.0;   // true (unscaled) objective value
  double duality_gap = 0.0;      // Lindsay bound N * kkt_residual
  double kkt_residual = 0.0;     // max_k (1/N) sum_i psi_ik/(Psi w)_i - 1
  int iterations = 0;
};

// Thrown when the Newton iteration cap is reached; carries the best
// iterate found so far.
class SolverCapError : public Error {
 public:
  SolverCapError(std::string msg, WeightSolution best_iterate)
      : Error(std::move(msg)), best(std::move(best_iterate)) {}

  WeightSolution best;
};

// Primal-dual path-following interior point solve of
//   max_w sum_i log((Psi w)_i)   s.t.  w >= 0, 1'w = 1.
//
// Newton steps on the perturbed KKT system, barrier reduction sigma = 0.1,
// fraction-to-boundary 0.995.  Each step factors the K x K normal matrix
// directly or, when N < K, its N x N Woodbury complement.  Success is
// certified by the KKT residual, which equals max_k D(phi_k, F)/N.
WeightSolution solve_weights(const PsiMatrix& psi, double tol = 1e-10, int max_iter = 200);

}  // namespace npmix
