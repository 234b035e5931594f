#pragma once

#include "npmix/ipm.hpp"
#include "npmix/optimality.hpp"

#include <functional>

namespace npmix {

struct NpagConfig {
  int initial_grid_size = 0;  // 0 resolves to min(50 N, 10000)
  double eps_initial = 0.2;
  double eps_min = 1e-3;
  double prune_threshold = 1e-3;  // relative to the max weight
  double loglik_tol = 1e-4;
  int max_cycles = 100;
  std::uint64_t rng_seed = 1;

  double ipm_tol = 1e-10;
  int ipm_max_iter = 200;
  int optimality_resolution = 0;  // 0 picks the dimension default
  double optimality_tolerance = 1e-3;

  void validate() const;
};

struct CycleRecord {
  int cycle = 0;
  double log_likelihood = 0.0;
  double eps = 0.0;
  std::size_t grid_size = 0;
  std::size_t support_size = 0;
  int ipm_iterations = 0;
  double kkt_residual = 0.0;
};

struct FitResult {
  DiscreteDistribution distribution;
  double log_likelihood = 0.0;
  std::vector<CycleRecord> cycle_history;
  OptimalityReport optimality;
  bool converged = false;   // eps fell below eps_min with no improvement left
  bool ipm_capped = false;  // inner solver hit its iteration cap
  std::vector<std::string> warnings;
};

// Deterministic low-discrepancy start grid: shifted Halton points in the
// open box; size 1 degenerates to the box center.
std::vector<Eigen::VectorXd> initial_grid(const ParameterSpace& space, int size,
                                          std::uint64_t seed);

// Adds the two axis-aligned neighbors theta +- eps (b_k - a_k) e_k per
// support point and axis, clipped to the box.  Candidates landing within
// dedup_frac * (b_k - a_k) of an existing point on every axis are dropped;
// the original support is always retained.
std::vector<Eigen::VectorXd> expand_grid(const std::vector<Eigen::VectorXd>& support, double eps,
                                         const ParameterSpace& space, double dedup_frac = 1e-4);

// Drops support points with weight < threshold * max weight and
// renormalizes; never drops everything.
DiscreteDistribution prune_support(const DiscreteDistribution& dist, double threshold);

using ProgressFn = std::function<void(const CycleRecord&)>;

// The adaptive-grid driver: solve on the grid, prune, expand around the
// survivors with shrinking offsets, halving eps whenever a cycle improves
// the log-likelihood by less than loglik_tol.  Stops once eps falls below
// eps_min (or at max_cycles) and attaches the optimality certificate.
FitResult run_npag(const ModelSpec& spec, const std::vector<Subject>& subjects,
                   const NpagConfig& config, int threads = 0, const ProgressFn& progress = {},
                   const std::string& dump_psi_path = {});

}  // namespace npmix
