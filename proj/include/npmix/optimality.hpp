#pragma once

#include "npmix/psi.hpp"

namespace npmix {

struct OptimalityReport {
  double d_max = 0.0;
  Eigen::VectorXd argmax_theta;
  std::size_t check_grid_size = 0;  // lattice evaluations (resolution^dim)
  std::vector<double> support_d_values;
  double weighted_support_d = 0.0;  // sum_k w_k D(phi_k, F); identically 0 in exact arithmetic
  double tolerance = 1e-3;
  int resolution = 0;
  bool pass = false;

  // Retained lattice evaluations, for surface dumps.
  std::vector<Eigen::VectorXd> lattice_thetas;
  std::vector<double> lattice_d;
};

// Directional derivative of the mixture likelihood at F toward the point
// mass at theta:  D(theta, F) = sum_i p(Y_i|theta)/p(Y_i|F) - N, with the
// denominators computed by log-sum-exp over the support.
double directional_derivative(const Eigen::VectorXd& theta, const DiscreteDistribution& dist,
                              const ModelSpec& spec, const std::vector<Subject>& subjects);

// Evaluates D on a regular lattice (resolution points per axis, endpoints
// included) plus all support points, and certifies global optimality when
// max D <= tolerance * N.  resolution 0 picks a default by dimension.
OptimalityReport verify_optimality(const DiscreteDistribution& dist, const ModelSpec& spec,
                                   const std::vector<Subject>& subjects, int resolution = 0,
                                   double tolerance = 1e-3, int threads = 0);

}  // namespace npmix
