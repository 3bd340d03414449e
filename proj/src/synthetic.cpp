#include "atlaslearn/synthetic.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "atlaslearn/error.hpp"
#include "atlaslearn/random.hpp"

namespace atlaslearn {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_count(std::size_t n) {
    if (n < 1) throw ParameterError("sample count must be at least 1");
}

template <class Draw>
LabeledCloud sample(std::size_t n, std::uint64_t seed, std::size_t dim, std::vector<std::string> names,
                    Draw draw) {
    require_count(n);
    Rng rng(seed);
    std::vector<double> values;
    values.reserve(n * dim);
    LabeledCloud out;
    out.param_names = std::move(names);
    out.params.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [point, params] = draw(rng);
        values.insert(values.end(), point.begin(), point.end());
        out.params.push_back(std::move(params));
    }
    out.cloud = PointCloud(dim, std::move(values));
    return out;
}

using Draw = std::pair<std::vector<double>, std::vector<double>>;

}  // namespace

std::vector<double> sphere_point(double theta, double phi) {
    return {std::cos(theta) * std::sin(phi), std::sin(theta) * std::sin(phi), std::cos(phi)};
}

std::vector<double> torus_point(double theta, double phi) {
    const double ring = 6.0 + 4.0 * std::cos(theta);
    return {ring * std::cos(phi), ring * std::sin(phi), 4.0 * std::sin(theta)};
}

std::vector<double> klein_point(double theta, double phi) {
    const double ring = 2.0 + std::cos(theta);
    return {ring * std::cos(phi), ring * std::sin(phi), std::sin(theta) * std::cos(phi / 2.0),
            std::sin(theta) * std::sin(phi / 2.0)};
}

std::vector<double> cylinder_point(double theta, double height) {
    return {std::cos(theta), std::sin(theta), height};
}

std::vector<double> rotation_from_quaternion(double w, double x, double y, double z) {
    const double norm = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(norm > 0.0)) throw ParameterError("zero quaternion");
    w /= norm;
    x /= norm;
    y /= norm;
    z /= norm;
    return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
            2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
            2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

LabeledCloud sample_sphere(std::size_t n, std::uint64_t seed) {
    return sample(n, seed, 3, {"theta", "phi"}, [](Rng& rng) -> Draw {
        const double theta = uniform(rng, 0.0, two_pi);
        const double phi = std::acos(uniform(rng, -1.0, 1.0));
        return {sphere_point(theta, phi), {theta, phi}};
    });
}

LabeledCloud sample_torus(std::size_t n, std::uint64_t seed) {
    return sample(n, seed, 3, {"theta", "phi"}, [](Rng& rng) -> Draw {
        const double theta = uniform(rng, 0.0, two_pi);
        const double phi = uniform(rng, 0.0, two_pi);
        return {torus_point(theta, phi), {theta, phi}};
    });
}

LabeledCloud sample_klein(std::size_t n, std::uint64_t seed) {
    return sample(n, seed, 4, {"theta", "phi"}, [](Rng& rng) -> Draw {
        const double theta = uniform(rng, 0.0, two_pi);
        const double phi = uniform(rng, 0.0, two_pi);
        return {klein_point(theta, phi), {theta, phi}};
    });
}

LabeledCloud sample_so3(std::size_t n, std::uint64_t seed) {
    return sample(n, seed, 9, {"qw", "qx", "qy", "qz"}, [](Rng& rng) -> Draw {
        double q[4];
        double norm = 0.0;
        do {
            norm = 0.0;
            for (double& c : q) {
                c = standard_normal(rng);
                norm += c * c;
            }
        } while (norm < 1e-12);
        norm = std::sqrt(norm);
        const double sign = q[0] < 0.0 ? -1.0 : 1.0;
        for (double& c : q) c = sign * c / norm;
        return {rotation_from_quaternion(q[0], q[1], q[2], q[3]), {q[0], q[1], q[2], q[3]}};
    });
}

LabeledCloud sample_cylinder(std::size_t n, std::uint64_t seed) {
    return sample(n, seed, 3, {"theta", "height"}, [](Rng& rng) -> Draw {
        const double theta = uniform(rng, 0.0, two_pi);
        const double height = uniform(rng, 0.0, 2.0);
        return {cylinder_point(theta, height), {theta, height}};
    });
}

LabeledCloud sample_manifold(const std::string& name, std::size_t n, std::uint64_t seed) {
    if (name == "sphere") return sample_sphere(n, seed);
    if (name == "torus") return sample_torus(n, seed);
    if (name == "klein") return sample_klein(n, seed);
    if (name == "so3") return sample_so3(n, seed);
    if (name == "cylinder") return sample_cylinder(n, seed);
    throw ParameterError("unknown manifold '" + name + "' (expected sphere, torus, klein, so3 or cylinder)");
}

void add_gaussian_noise(PointCloud& cloud, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw ParameterError("noise sigma must be nonnegative");
    if (sigma == 0.0) return;
    // Independent stream from the sampler's, derived from the same seed.
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (double& x : cloud[i]) x += sigma * standard_normal(rng);
    }
}

}  // namespace atlaslearn
