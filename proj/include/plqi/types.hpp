#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace plqi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Tolerances used across the library. Length-scale-dependent checks are
// relative to the simplex diameter; dimensionless checks are absolute.
inline constexpr double kDegeneracyTol = 1e-10;
inline constexpr double kWeightSumTol = 1e-9;
inline constexpr double kMembershipWeightTol = 1e-9;
inline constexpr double kResidualRelTol = 1e-9;
inline constexpr double kStructuralIdentityTol = 1e-12;
inline constexpr double kCheckSlack = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSimplex : Error {
  using Error::Error;
};
struct DimensionTooLow : Error {
  using Error::Error;
};
struct WeightSumViolation : Error {
  using Error::Error;
};
struct NotInCarrier : Error {
  using Error::Error;
};
struct NotSimplicial : Error {
  using Error::Error;
};
struct NotBijective : Error {
  using Error::Error;
};
struct IncompatibleComplexes : Error {
  using Error::Error;
};
struct ThetaOutOfRange : Error {
  using Error::Error;
};
struct DegenerateEdge : Error {
  using Error::Error;
};
struct InvalidDiscSequence : Error {
  using Error::Error;
};
struct EvaluationFailure : Error {
  using Error::Error;
};

}  // namespace plqi
