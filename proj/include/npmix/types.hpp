#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace npmix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration file, section, or option value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed dataset contents.
class DataError : public Error {
 public:
  using Error::Error;
};

// A result artifact does not belong to the supplied configuration.
class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

// Subjects whose data has zero likelihood at every candidate grid point.
class DegenerateSubjectError : public Error {
 public:
  DegenerateSubjectError(std::string msg, std::vector<std::string> ids)
      : Error(std::move(msg)), subject_ids(std::move(ids)) {}

  std::vector<std::string> subject_ids;
};

struct ParameterAxis {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
};

// Ordered, named parameter axes with box bounds [lower, upper].
class ParameterSpace {
 public:
  ParameterSpace() = default;
  explicit ParameterSpace(std::vector<ParameterAxis> axes);

  std::size_t dim() const { return axes_.size(); }
  const ParameterAxis& axis(std::size_t k) const { return axes_.at(k); }
  const std::vector<ParameterAxis>& axes() const { return axes_; }

  // Index of the named axis, or -1 when absent.
  int index_of(const std::string& name) const;

  // Closed-box membership.
  bool contains(const Eigen::VectorXd& theta) const;

  Eigen::VectorXd lower() const;
  Eigen::VectorXd upper() const;
  Eigen::VectorXd center() const;
  Eigen::VectorXd range() const;

 private:
  std::vector<ParameterAxis> axes_;
};

struct DoseEvent {
  double time = 0.0;
  double amount = 0.0;
};

// One individual's dosing schedule and observation record.  Missing
// observation elements are encoded as NaN.
struct Subject {
  std::string id;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> observations;
  std::vector<DoseEvent> doses;

  void validate() const;
};

// Support points with simplex weights; a candidate mixing distribution.
struct DiscreteDistribution {
  std::vector<Eigen::VectorXd> support;
  std::vector<double> weights;
};

}  // namespace npmix
