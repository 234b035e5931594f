#pragma once

#include "npmix/types.hpp"

#include <variant>

namespace npmix {

struct DiscretizedLti {
  Eigen::MatrixXd A;  // exp(A dt)
  Eigen::MatrixXd B;  // int_0^dt exp(A s) B ds
  Eigen::MatrixXd W;  // int_0^dt exp(A s) W exp(A' s) ds, symmetrized
};

// Exact continuous-to-discrete conversion of a time-invariant linear SDE
// over one interval.  A single exponential of the augmented block matrix
//
//   [ A  B  W  ]
//   [ 0  0  0  ] * dt
//   [ 0  0 -A' ]
//
// yields the transition matrix, the discrete input gain, and the process
// noise covariance simultaneously.
DiscretizedLti discretize_lti(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                              const Eigen::MatrixXd& W, double dt);

// Fully numeric per-subject model: one step block per observation time,
// interval k running from t_{k-1} (t_0 = 0) to times[k].
struct DiscreteLinearModel {
  struct Step {
    Eigen::MatrixXd A;  // state transition
    Eigen::MatrixXd B;  // discrete input gain (n x q, q may be 0)
    Eigen::VectorXd u;  // input held constant over the interval
    Eigen::MatrixXd W;  // process noise covariance
    Eigen::MatrixXd C;  // observation matrix
    Eigen::MatrixXd V;  // measurement noise covariance
  };

  Eigen::VectorXd x0;
  Eigen::MatrixXd Sigma0;
  std::vector<Step> steps;

  int state_dim() const { return static_cast<int>(x0.size()); }
  int obs_dim() const { return steps.empty() ? 0 : static_cast<int>(steps.front().C.rows()); }
};

// One-compartment elimination model with bolus dose at t = 0:
//   A_k = exp(-K dt_k), W_k = Wc/(2K) (1 - exp(-2K dt_k)), y_k = x_k + v_k,
//   x_0 ~ N(dose/Vol, Sigma0).
DiscreteLinearModel pk_one_compartment(double K, double Vol, double dose,
                                       const std::vector<double>& times, double Wc,
                                       double Vmeas, double Sigma0);

// Matrix whose entries are constants or signed references to parameter
// axes; the numeric model specification from the config file.
class ParamMatrix {
 public:
  ParamMatrix() = default;
  explicit ParamMatrix(Eigen::MatrixXd constant) : constant_(std::move(constant)) {}

  static ParamMatrix zero(int rows, int cols) {
    return ParamMatrix(Eigen::MatrixXd::Zero(rows, cols));
  }

  int rows() const { return static_cast<int>(constant_.rows()); }
  int cols() const { return static_cast<int>(constant_.cols()); }

  void set_constant(int i, int j, double v) { constant_(i, j) = v; }
  void set_axis_ref(int i, int j, int axis, double scale) {
    refs_.push_back({i, j, axis, scale});
  }

  bool is_constant() const { return refs_.empty(); }

  Eigen::MatrixXd eval(const Eigen::VectorXd& theta) const;

 private:
  struct Ref {
    int i = 0;
    int j = 0;
    int axis = 0;
    double scale = 1.0;
  };

  Eigen::MatrixXd constant_;
  std::vector<Ref> refs_;
};

struct Pk1cSpec {
  double Wc = 0.0;
  double Vmeas = 0.25;
  double Sigma0 = 0.0;
  int k_axis = 0;    // axis carrying the elimination rate constant
  int vol_axis = 1;  // axis carrying the volume of distribution
};

// Continuous-time linear system, constant matrices on each inter-sample
// interval:  dx = A x dt + B u dt + dw,  E[dw dw'] = W dt,
//            y_k = C x_k + v_k,  v_k ~ N(0, V),  x_0 ~ N(x0, Sigma0).
struct ContinuousLinearSystem {
  ParamMatrix A, B, W;
  ParamMatrix C, V;
  ParamMatrix x0, Sigma0;

  int state_dim() const { return A.rows(); }
  int input_dim() const { return B.cols(); }
  int obs_dim() const { return C.rows(); }

  void validate_dims() const;
};

// Population model family bound to a parameter space.
struct ModelSpec {
  std::string name;  // "pk_1c" or "linear"
  ParameterSpace space;
  std::variant<Pk1cSpec, ContinuousLinearSystem> def;

  int obs_dim() const;

  // Binds a parameter vector and one subject's schedule to concrete
  // matrices.  theta must lie in the closed box.
  DiscreteLinearModel instantiate(const Eigen::VectorXd& theta, const Subject& subject) const;
};

// Built-in PK model over axes named "K" and "Vol".
ModelSpec make_pk_model(const ParameterSpace& space, double Wc, double Vmeas, double Sigma0);

}  // namespace npmix
