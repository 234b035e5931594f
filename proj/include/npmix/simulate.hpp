#pragma once

#include "npmix/types.hpp"

#include <random>

namespace npmix {

struct MixtureComponent {
  double weight = 1.0;
  double mean = 0.0;
  double sd = 1.0;
};

struct SimConfig {
  int n_subjects = 100;
  double dose = 20.0;
  std::vector<double> times = {0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<MixtureComponent> k_mixture = {{0.5, 0.5, 0.05}, {0.5, 1.5, 0.15}};
  double vol_mean = 1.0;
  double vol_sd = 0.2;
  double Wc = 0.0;
  double Vmeas = 0.25;
  double Sigma0 = 0.0;
  ParameterSpace box;  // parameter draws are rejected until inside this box
  std::uint64_t seed = 1;

  void validate() const;
};

// Default fitting box [0.4, 2]^2 over (K, Vol).
ParameterSpace default_sim_box();

// n_subjects draws of (K, Vol): K from the normal mixture, Vol from its
// normal law, each rejected and resampled until inside the box.  Uses a
// per-subject stream split from the master seed.
std::vector<Eigen::Vector2d> sample_parameters(const SimConfig& config);

// One trajectory from the exact discrete recursion
//   x_{k+1} = exp(-K dt_k) x_k + w_{k+1},  w_{k+1} ~ N(0, Wc/(2K)(1-exp(-2K dt_k))),
//   y_k = x_k + v_k,  v_k ~ N(0, Vmeas),   x_0 ~ N(dose/Vol, Sigma0).
Subject simulate_subject(const Eigen::Vector2d& theta, const SimConfig& config,
                         std::mt19937_64& rng, std::string id);

// Full dataset, reproducible from (config, seed).
std::vector<Subject> simulate_dataset(const SimConfig& config);

}  // namespace npmix
