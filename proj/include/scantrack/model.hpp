#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace scantrack {

/// One LiDAR return in the sensor frame. `t` is the absolute acquisition
/// time of this return, not an offset into its scan.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double intensity = 0.0;  // reflectivity in [0, 1]
  double t = 0.0;          // seconds

  Eigen::Vector3d position() const { return {x, y, z}; }
};

/// One base sensor frame: the points emitted during [t_start, t_end].
struct Scan {
  std::vector<Point> points;
  double t_start = 0.0;
  double t_end = 0.0;
  std::int64_t seq = 0;
};

/// Points accumulated from a window of consecutive scans.
struct PointCloud {
  std::vector<Point> points;
  std::int64_t first_seq = 0;
  std::int64_t last_seq = 0;
};

/// Tracked-target state: planar speed/heading plus an independent vertical
/// rate. Order matches state_vector(): [x y z v z_dot psi psi_dot].
struct UavState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double v = 0.0;        // planar speed, m/s
  double z_dot = 0.0;    // vertical rate, m/s
  double psi = 0.0;      // heading, rad, in (-pi, pi]
  double psi_dot = 0.0;  // turn rate, rad/s

  static constexpr int kDim = 7;

  Eigen::Vector3d position() const { return {x, y, z}; }
  Eigen::Vector3d velocity() const;
  Eigen::Matrix<double, 7, 1> state_vector() const;
  static UavState from_vector(const Eigen::Matrix<double, 7, 1>& v);
};

/// Physical extent of the tracked object. The association search radius is
/// half the largest dimension.
struct TargetSpec {
  std::array<double, 3> dims{0.4, 0.4, 0.4};  // length, width, height (m)
  double radius = 0.2;                        // search radius r (m)

  static TargetSpec from_dims(double length, double width, double height);
};

struct CovarianceCheck {
  bool ok = false;
  std::string reason;
};

/// Symmetric within 1e-9 relative tolerance and positive definite
/// (Cholesky succeeds). Throws std::invalid_argument for non-square input.
CovarianceCheck validate_covariance(const Eigen::MatrixXd& m);

/// Wrap an angle into (-pi, pi]. Throws std::domain_error on non-finite input.
double normalize_angle(double a);

/// (P + P^T)/2, applied after every filter update to suppress drift.
inline Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& p) {
  return 0.5 * (p + p.transpose());
}

}  // namespace scantrack
