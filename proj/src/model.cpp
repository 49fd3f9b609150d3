#include "scantrack/model.hpp"

#include <cmath>
#include <stdexcept>

namespace scantrack {

Eigen::Vector3d UavState::velocity() const {
  return {v * std::cos(psi), v * std::sin(psi), z_dot};
}

Eigen::Matrix<double, 7, 1> UavState::state_vector() const {
  Eigen::Matrix<double, 7, 1> out;
  out << x, y, z, v, z_dot, psi, psi_dot;
  return out;
}

UavState UavState::from_vector(const Eigen::Matrix<double, 7, 1>& v) {
  UavState s;
  s.x = v(0);
  s.y = v(1);
  s.z = v(2);
  s.v = v(3);
  s.z_dot = v(4);
  s.psi = v(5);
  s.psi_dot = v(6);
  return s;
}

TargetSpec TargetSpec::from_dims(double length, double width, double height) {
  if (!(length > 0.0) || !(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("target dimensions must be positive");
  }
  TargetSpec t;
  t.dims = {length, width, height};
  t.radius = 0.5 * std::max(length, std::max(width, height));
  return t;
}

CovarianceCheck validate_covariance(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("covariance must be square, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
  CovarianceCheck check;
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9 * scale) {
    check.reason = "asymmetry " + std::to_string(asym) + " exceeds tolerance";
    return check;
  }
  if (!m.allFinite()) {
    check.reason = "non-finite entries";
    return check;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(symmetrized(m));
  if (llt.info() != Eigen::Success) {
    check.reason = "Cholesky factorization failed (not positive definite)";
    return check;
  }
  check.ok = true;
  return check;
}

double normalize_angle(double a) {
  if (!std::isfinite(a)) {
    throw std::domain_error("cannot normalize non-finite angle");
  }
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) {
    a += 2.0 * M_PI;
  } else if (a > M_PI) {
    a -= 2.0 * M_PI;
  }
  return a;
}

}  // namespace scantrack
