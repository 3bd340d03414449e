#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace atlaslearn {

/// Ordered set of points in R^n, stored row-major. A point's index is its
/// identity everywhere else in the library.
class PointCloud {
public:
    PointCloud() = default;

    /// Takes `values` laid out as count x dimension. Throws ParameterError if
    /// the size is not a multiple of `dimension` or the cloud is empty.
    PointCloud(std::size_t dimension, std::vector<double> values);

    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return dimension_ == 0 ? 0 : values_.size() / dimension_; }
    std::size_t dimension() const noexcept { return dimension_; }
    bool empty() const noexcept { return values_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {values_.data() + i * dimension_, dimension_};
    }
    std::span<double> operator[](std::size_t i) {
        return {values_.data() + i * dimension_, dimension_};
    }

    const std::vector<double>& values() const noexcept { return values_; }

    /// Points `indices[0]`, `indices[1]`, ... in that order.
    PointCloud subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::size_t dimension_ = 0;
    std::vector<double> values_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

}  // namespace atlaslearn
