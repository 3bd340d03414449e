#include "atlaslearn/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include <Eigen/LU>

#include "atlaslearn/error.hpp"

namespace atlaslearn {

namespace {

constexpr double kZeroTolerance = 1e-12;
constexpr std::int64_t kInfinite = -1;

double determinant(const Eigen::MatrixXd& m) {
    switch (m.rows()) {
        case 1: return m(0, 0);
        case 2: return Eigen::Matrix2d(m).determinant();
        case 3: return Eigen::Matrix3d(m).determinant();
        case 4: return Eigen::Matrix4d(m).determinant();
        default: return m.partialPivLu().determinant();
    }
}

// Sign of det(m), or 0 when it is below roundoff relative to the Hadamard bound.
int robust_sign(const Eigen::MatrixXd& m) {
    const double det = determinant(m);
    double bound = 1.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) bound *= m.row(r).norm();
    if (std::abs(det) <= kZeroTolerance * bound) return 0;
    return det > 0.0 ? 1 : -1;
}

class Builder {
public:
    Builder(const Eigen::MatrixXd& coords, std::size_t d) : y_(coords), d_(d), width_(d + 1) {}

    std::vector<std::vector<std::uint32_t>> run() {
        const std::vector<char> skip = duplicates();
        const std::vector<std::uint32_t> base = initial_simplex(skip);
        std::vector<char> used(static_cast<std::size_t>(y_.rows()), 0);
        for (auto b : base) used[b] = 1;
        start(base);
        for (Eigen::Index i = 0; i < y_.rows(); ++i) {
            if (!skip[i] && !used[i]) insert(static_cast<std::int64_t>(i));
        }
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t c = 0; c < alive_.size(); ++c) {
            if (!alive_[c] || infinite(c)) continue;
            std::vector<std::uint32_t> s(width_);
            for (std::size_t k = 0; k < width_; ++k) s[k] = static_cast<std::uint32_t>(vert(c, k));
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const Eigen::MatrixXd& y_;
    std::size_t d_;
    std::size_t width_;
    std::vector<std::int64_t> verts_;
    std::vector<std::int64_t> nbrs_;
    std::vector<char> alive_;
    std::vector<Eigen::VectorXd> centers_;
    std::vector<double> radius2_;
    std::vector<std::size_t> free_;

    std::int64_t& vert(std::size_t c, std::size_t k) { return verts_[c * width_ + k]; }
    std::int64_t& nbr(std::size_t c, std::size_t k) { return nbrs_[c * width_ + k]; }

    bool infinite(std::size_t c) {
        for (std::size_t k = 0; k < width_; ++k) {
            if (vert(c, k) == kInfinite) return true;
        }
        return false;
    }

    std::vector<char> duplicates() const {
        const auto n = static_cast<std::size_t>(y_.rows());
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        auto lex = [&](std::size_t a, std::size_t b) {
            for (Eigen::Index c = 0; c < y_.cols(); ++c) {
                if (y_(a, c) != y_(b, c)) return y_(a, c) < y_(b, c);
            }
            return a < b;
        };
        std::sort(order.begin(), order.end(), lex);
        std::vector<char> skip(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            if (y_.row(order[i]) == y_.row(order[i - 1])) skip[order[i]] = 1;
        }
        return skip;
    }

    // First d+1 affinely independent points in index order.
    std::vector<std::uint32_t> initial_simplex(const std::vector<char>& skip) const {
        std::vector<std::uint32_t> chosen;
        std::vector<Eigen::VectorXd> basis;
        for (Eigen::Index i = 0; i < y_.rows() && chosen.size() < width_; ++i) {
            if (skip[i]) continue;
            if (chosen.empty()) {
                chosen.push_back(static_cast<std::uint32_t>(i));
                continue;
            }
            Eigen::VectorXd v = (y_.row(i) - y_.row(chosen[0])).transpose();
            const double length = v.norm();
            for (const auto& b : basis) v -= b.dot(v) * b;
            if (v.norm() > 1e-9 * length) {
                basis.push_back(v.normalized());
                chosen.push_back(static_cast<std::uint32_t>(i));
            }
        }
        if (chosen.size() < width_) {
            throw DegeneracyError("points span fewer than " + std::to_string(d_) + " dimensions");
        }
        return chosen;
    }

    std::size_t new_cell() {
        if (!free_.empty()) {
            const std::size_t c = free_.back();
            free_.pop_back();
            alive_[c] = 1;
            return c;
        }
        const std::size_t c = alive_.size();
        verts_.resize(verts_.size() + width_, kInfinite);
        nbrs_.resize(nbrs_.size() + width_, -1);
        alive_.push_back(1);
        centers_.emplace_back();
        radius2_.push_back(0.0);
        return c;
    }

    // Circumsphere used only as a cheap filter before the exact-ish predicate.
    void cache_sphere(std::size_t c) {
        if (infinite(c)) return;
        Eigen::MatrixXd a(d_, d_);
        Eigen::VectorXd rhs(d_);
        const Eigen::VectorXd p0 = y_.row(vert(c, 0)).transpose();
        for (std::size_t k = 1; k < width_; ++k) {
            const Eigen::VectorXd pk = y_.row(vert(c, k)).transpose();
            a.row(static_cast<Eigen::Index>(k - 1)) = 2.0 * (pk - p0).transpose();
            rhs(static_cast<Eigen::Index>(k - 1)) = pk.squaredNorm() - p0.squaredNorm();
        }
        centers_[c] = a.partialPivLu().solve(rhs);
        radius2_[c] = (centers_[c] - p0).squaredNorm();
    }

    Eigen::MatrixXd difference_rows(std::size_t c, std::int64_t q, std::size_t replace_slot) {
        // rows y_j - y_0 with slot `replace_slot` taken by q
        auto point = [&](std::size_t k) -> Eigen::RowVectorXd {
            const std::int64_t v = k == replace_slot ? q : vert(c, k);
            return y_.row(v);
        };
        Eigen::MatrixXd m(d_, d_);
        const Eigen::RowVectorXd p0 = point(0);
        for (std::size_t k = 1; k < width_; ++k) m.row(static_cast<Eigen::Index>(k - 1)) = point(k) - p0;
        return m;
    }

    int orient_cell(std::size_t c) { return robust_sign(difference_rows(c, -1, width_)); }

    // > 0 when q is strictly inside the circumsphere of finite cell c, after
    // symbolic perturbation of the lifted coordinates.
    int insphere(std::size_t c, std::int64_t q) {
        const Eigen::RowVectorXd yq = y_.row(q);
        Eigen::MatrixXd a(width_, width_);
        for (std::size_t k = 0; k < width_; ++k) {
            const Eigen::RowVectorXd diff = y_.row(vert(c, k)) - yq;
            a.row(static_cast<Eigen::Index>(k)) << diff, diff.squaredNorm();
        }
        const int parity = (d_ % 2 == 0) ? 1 : -1;
        if (const int s = robust_sign(a); s != 0) return parity * s;

        // The lifted coordinate enters linearly, so the perturbed determinant
        // is det + sum_j eps_j * cofactor_j; the lowest index with a nonzero
        // cofactor decides. q's own term is -orientation, never zero.
        std::vector<std::pair<std::int64_t, std::size_t>> order;
        for (std::size_t k = 0; k < width_; ++k) order.emplace_back(vert(c, k), k);
        order.emplace_back(q, width_);
        std::sort(order.begin(), order.end());
        for (const auto& [id, slot] : order) {
            if (slot == width_) return -1;
            Eigen::MatrixXd b = a;
            b.col(static_cast<Eigen::Index>(d_)).setZero();
            b(static_cast<Eigen::Index>(slot), static_cast<Eigen::Index>(d_)) = 1.0;
            if (const int s = robust_sign(b); s != 0) return parity * s;
        }
        return -1;
    }

    bool conflict(std::size_t c, std::int64_t q) {
        std::size_t inf_slot = width_;
        for (std::size_t k = 0; k < width_; ++k) {
            if (vert(c, k) == kInfinite) inf_slot = k;
        }
        if (inf_slot == width_) {
            const double dist2 = (y_.row(q).transpose() - centers_[c]).squaredNorm();
            if (dist2 > radius2_[c] * (1.0 + 1e-6) + 1e-300) return false;
            return insphere(c, q) > 0;
        }
        const int o = robust_sign(difference_rows(c, q, inf_slot));
        if (o != 0) return o > 0;
        return conflict(static_cast<std::size_t>(nbr(c, inf_slot)), q);
    }

    using RidgeKey = std::vector<std::int64_t>;

    RidgeKey ridge(std::size_t c, std::size_t skip) {
        RidgeKey key;
        key.reserve(width_ - 1);
        for (std::size_t k = 0; k < width_; ++k) {
            if (k != skip) key.push_back(vert(c, k));
        }
        std::sort(key.begin(), key.end());
        return key;
    }

    void link(std::map<RidgeKey, std::pair<std::size_t, std::size_t>>& open, std::size_t c, std::size_t slot) {
        RidgeKey key = ridge(c, slot);
        auto it = open.find(key);
        if (it == open.end()) {
            open.emplace(std::move(key), std::make_pair(c, slot));
            return;
        }
        const auto [other, other_slot] = it->second;
        nbr(c, slot) = static_cast<std::int64_t>(other);
        nbr(other, other_slot) = static_cast<std::int64_t>(c);
        open.erase(it);
    }

    void start(const std::vector<std::uint32_t>& base) {
        std::vector<std::int64_t> v(base.begin(), base.end());
        const std::size_t c0 = new_cell();
        for (std::size_t k = 0; k < width_; ++k) vert(c0, k) = v[k];
        if (orient_cell(c0) < 0) std::swap(vert(c0, 0), vert(c0, 1));
        cache_sphere(c0);

        std::map<RidgeKey, std::pair<std::size_t, std::size_t>> open;
        for (std::size_t k = 0; k < width_; ++k) {
            const std::size_t c = new_cell();
            for (std::size_t j = 0; j < width_; ++j) vert(c, j) = vert(c0, j);
            vert(c, k) = kInfinite;
            // outward points must see a positive orientation in the infinite slot
            const std::size_t a = k == 0 ? 1 : 0;
            const std::size_t b = k <= 1 ? 2 : 1;
            std::swap(vert(c, a), vert(c, b));
            nbr(c, k) = static_cast<std::int64_t>(c0);
            nbr(c0, k) = static_cast<std::int64_t>(c);
            for (std::size_t j = 0; j < width_; ++j) {
                if (j != k) link(open, c, j);
            }
        }
    }

    void insert(std::int64_t q) {
        std::size_t seed = alive_.size();
        for (std::size_t c = 0; c < alive_.size(); ++c) {
            if (alive_[c] && conflict(c, q)) {
                seed = c;
                break;
            }
        }
        if (seed == alive_.size()) {
            throw DegeneracyError("point " + std::to_string(q) + " conflicts with no simplex");
        }

        std::vector<char> state(alive_.size(), 0);  // 0 unknown, 1 conflict, 2 clear
        std::vector<std::size_t> region{seed};
        state[seed] = 1;
        for (std::size_t head = 0; head < region.size(); ++head) {
            const std::size_t c = region[head];
            for (std::size_t k = 0; k < width_; ++k) {
                const auto n = static_cast<std::size_t>(nbr(c, k));
                if (state[n] != 0) continue;
                state[n] = conflict(n, q) ? 1 : 2;
                if (state[n] == 1) region.push_back(n);
            }
        }

        std::map<RidgeKey, std::pair<std::size_t, std::size_t>> open;
        std::vector<std::size_t> created;
        for (const std::size_t c : region) {
            for (std::size_t k = 0; k < width_; ++k) {
                const auto n = static_cast<std::size_t>(nbr(c, k));
                if (state[n] == 1) continue;
                const std::size_t fresh = new_cell();
                if (fresh >= state.size()) state.resize(fresh + 1, 0);
                state[fresh] = 3;
                for (std::size_t j = 0; j < width_; ++j) vert(fresh, j) = vert(c, j);
                vert(fresh, k) = q;
                nbr(fresh, k) = static_cast<std::int64_t>(n);
                for (std::size_t j = 0; j < width_; ++j) {
                    if (nbr(n, j) == static_cast<std::int64_t>(c)) nbr(n, j) = static_cast<std::int64_t>(fresh);
                }
                created.push_back(fresh);
            }
        }
        for (const std::size_t c : created) {
            for (std::size_t j = 0; j < width_; ++j) {
                if (vert(c, j) != q) link(open, c, j);
            }
        }
        if (!open.empty()) throw DegeneracyError("inconsistent cavity while inserting point " + std::to_string(q));
        for (const std::size_t c : created) {
            if (infinite(c)) continue;
            if (orient_cell(c) <= 0) {
                throw DegeneracyError("flat simplex while inserting point " + std::to_string(q));
            }
            cache_sphere(c);
        }
        for (const std::size_t c : region) {
            alive_[c] = 0;
            free_.push_back(c);
        }
    }
};

}  // namespace

Triangulation delaunay(const Eigen::MatrixXd& coords, std::size_t d) {
    if (d == 0) throw ParameterError("dimension must be positive");
    if (static_cast<std::size_t>(coords.cols()) != d) {
        throw ParameterError("coordinates have " + std::to_string(coords.cols()) + " columns, expected " +
                             std::to_string(d));
    }
    if (!coords.allFinite()) throw ParameterError("coordinates must be finite");
    Triangulation tri;
    tri.dim = d;
    tri.vertex_coords = coords;

    if (d == 1) {
        std::vector<std::uint32_t> order(static_cast<std::size_t>(coords.rows()));
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return coords(a, 0) < coords(b, 0); });
        std::vector<std::uint32_t> distinct;
        for (const auto i : order) {
            if (distinct.empty() || coords(i, 0) != coords(distinct.back(), 0)) distinct.push_back(i);
        }
        if (distinct.size() < 2) throw DegeneracyError("points span fewer than 1 dimension");
        for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
            tri.simplices.push_back({std::min(distinct[i], distinct[i + 1]), std::max(distinct[i], distinct[i + 1])});
        }
        std::sort(tri.simplices.begin(), tri.simplices.end());
        return tri;
    }

    tri.simplices = Builder(coords, d).run();
    return tri;
}

double orientation(const Eigen::MatrixXd& coords, const std::vector<std::uint32_t>& simplex) {
    const Eigen::Index d = coords.cols();
    if (static_cast<Eigen::Index>(simplex.size()) != d + 1) throw ParameterError("simplex needs d + 1 vertices");
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index k = 1; k <= d; ++k) m.row(k - 1) = coords.row(simplex[k]) - coords.row(simplex[0]);
    return determinant(m);
}

bool satisfies_empty_circumsphere(const Triangulation& tri, double tolerance) {
    const auto d = static_cast<Eigen::Index>(tri.dim);
    const Eigen::MatrixXd& y = tri.vertex_coords;
    for (const auto& s : tri.simplices) {
        Eigen::MatrixXd a(d, d);
        Eigen::VectorXd rhs(d);
        for (Eigen::Index k = 1; k <= d; ++k) {
            a.row(k - 1) = 2.0 * (y.row(s[k]) - y.row(s[0]));
            rhs(k - 1) = y.row(s[k]).squaredNorm() - y.row(s[0]).squaredNorm();
        }
        const Eigen::VectorXd center = a.partialPivLu().solve(rhs);
        const double r2 = (y.row(s[0]).transpose() - center).squaredNorm();
        for (Eigen::Index v = 0; v < y.rows(); ++v) {
            if (std::find(s.begin(), s.end(), static_cast<std::uint32_t>(v)) != s.end()) continue;
            if ((y.row(v).transpose() - center).squaredNorm() < r2 * (1.0 - tolerance)) return false;
        }
    }
    return true;
}

}  // namespace atlaslearn
