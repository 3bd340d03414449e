#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "atlaslearn/point_cloud.hpp"

namespace atlaslearn {

/// Sampled manifold points with the parameter values that generated them.
struct LabeledCloud {
    PointCloud cloud;
    /// one row per point
    std::vector<std::vector<double>> params;
    std::vector<std::string> param_names;
};

// Closed-form parameterizations, exposed for tests and for callers that want
// to place points by hand.
std::vector<double> sphere_point(double theta, double phi);
std::vector<double> torus_point(double theta, double phi);
std::vector<double> klein_point(double theta, double phi);
std::vector<double> cylinder_point(double theta, double height);
/// Row-major 3x3 rotation matrix of the quaternion (w, x, y, z), which is
/// normalized first.
std::vector<double> rotation_from_quaternion(double w, double x, double y, double z);

/// Unit sphere (cos t sin p, sin t sin p, cos p); theta uniform on [0, 2pi),
/// phi = arccos(uniform(-1, 1)) so the density is area-uniform.
LabeledCloud sample_sphere(std::size_t n, std::uint64_t seed);

/// Torus of revolution with major radius 6 and tube radius 4,
/// ((6 + 4 cos t) cos p, (6 + 4 cos t) sin p, 4 sin t); both angles uniform.
LabeledCloud sample_torus(std::size_t n, std::uint64_t seed);

/// Klein bottle in R^4, ((2 + cos t) cos p, (2 + cos t) sin p,
/// sin t cos(p/2), sin t sin(p/2)); both angles uniform.
LabeledCloud sample_klein(std::size_t n, std::uint64_t seed);

/// Haar-uniform rotations (normalized Gaussian quaternions) as row-major 3x3
/// matrices in R^9. Params are the quaternion (w, x, y, z) with w >= 0.
LabeledCloud sample_so3(std::size_t n, std::uint64_t seed);

/// Open cylinder (cos t, sin t, h), t uniform on [0, 2pi), h uniform on [0, 2].
LabeledCloud sample_cylinder(std::size_t n, std::uint64_t seed);

/// Dispatch by name: sphere, torus, klein, so3, cylinder. Unknown names throw
/// ParameterError.
LabeledCloud sample_manifold(const std::string& name, std::size_t n, std::uint64_t seed);

/// Adds independent N(0, sigma^2) noise to every coordinate. sigma = 0 leaves
/// the cloud untouched.
void add_gaussian_noise(PointCloud& cloud, double sigma, std::uint64_t seed);

}  // namespace atlaslearn
