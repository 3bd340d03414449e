#include "atlaslearn/point_cloud.hpp"

#include <cmath>
#include <string>

#include "atlaslearn/error.hpp"

namespace atlaslearn {

PointCloud::PointCloud(std::size_t dimension, std::vector<double> values)
    : dimension_(dimension), values_(std::move(values)) {
    if (dimension_ == 0) throw ParameterError("point dimension must be at least 1");
    if (values_.empty()) throw ParameterError("point cloud must contain at least one point");
    if (values_.size() % dimension_ != 0) {
        throw ParameterError("value count " + std::to_string(values_.size()) +
                             " is not a multiple of dimension " + std::to_string(dimension_));
    }
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw ParameterError("point cloud must contain at least one point");
    const std::size_t dim = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim) {
            throw ParameterError("point " + std::to_string(i) + " has dimension " +
                                 std::to_string(rows[i].size()) + ", expected " + std::to_string(dim));
        }
        values.insert(values.end(), rows[i].begin(), rows[i].end());
    }
    return PointCloud(dim, std::move(values));
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
    std::vector<double> values;
    values.reserve(indices.size() * dimension_);
    for (std::size_t i : indices) {
        auto p = (*this)[i];
        values.insert(values.end(), p.begin(), p.end());
    }
    return PointCloud(dimension_, std::move(values));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace atlaslearn
