#include "umu/model_gh.hpp"

#include <algorithm>
#include <optional>

namespace umu::gh {

GHPoint::GHPoint(FiniteUltraSpace space) : space_(std::move(space)), key_(canonical_form(space_)) {}

Scale na_distance(const GHPoint& x, const GHPoint& y) {
    if (x == y) return Scale();
    const RangeSet candidates = union_of(trace(x), trace(y));
    for (const Scale& eps : candidates.elements()) {
        if (canonical_form(quotient(x.space(), eps)) == canonical_form(quotient(y.space(), eps))) return eps;
    }
    return candidates.top();  // both quotients are single points there
}

namespace {

// Backtracking over the cross block of an ambient matrix on X ⊔ Y.
class AmbientSearch {
public:
    AmbientSearch(const FiniteUltraSpace& x, const FiniteUltraSpace& y, std::vector<Scale> grid)
        : x_(x), y_(y), nx_(x.size()), ny_(y.size()), grid_(std::move(grid)), cross_(nx_ * ny_) {}

    Scale run() {
        assign(0);
        return *best_;
    }

private:
    const Scale& cross(std::size_t i, std::size_t j) const { return cross_[i * ny_ + j]; }

    // Checks every triangle closed by the entry (i, j) against entries set so
    // far. Cross entries are filled row-major over (i, j).
    bool consistent(std::size_t i, std::size_t j) const {
        const Scale& h = cross(i, j);
        for (std::size_t k = 0; k < nx_; ++k) {
            if (k == i || !assigned(k, j)) continue;
            const Scale& a = x_(i, k);
            const Scale& b = cross(k, j);
            if (h > max(a, b) || a > max(h, b) || b > max(h, a)) return false;
        }
        for (std::size_t l = 0; l < ny_; ++l) {
            if (l == j || !assigned(i, l)) continue;
            const Scale& a = y_(j, l);
            const Scale& b = cross(i, l);
            if (h > max(a, b) || a > max(h, b) || b > max(h, a)) return false;
        }
        return true;
    }

    bool assigned(std::size_t i, std::size_t j) const { return i * ny_ + j < depth_; }

    Scale hausdorff_value() const {
        Scale worst;
        for (std::size_t i = 0; i < nx_; ++i) {
            Scale near = cross(i, 0);
            for (std::size_t j = 1; j < ny_; ++j) near = min(near, cross(i, j));
            worst = max(worst, near);
        }
        for (std::size_t j = 0; j < ny_; ++j) {
            Scale near = cross(0, j);
            for (std::size_t i = 1; i < nx_; ++i) near = min(near, cross(i, j));
            worst = max(worst, near);
        }
        return worst;
    }

    void assign(std::size_t pos) {
        if (pos == cross_.size()) {
            const Scale v = hausdorff_value();
            if (!best_ || v < *best_) best_ = v;
            return;
        }
        const std::size_t i = pos / ny_;
        const std::size_t j = pos % ny_;
        for (const Scale& g : grid_) {
            cross_[pos] = g;
            depth_ = pos;
            if (!consistent(i, j)) continue;
            depth_ = pos + 1;
            assign(pos + 1);
        }
        depth_ = pos;
    }

    const FiniteUltraSpace& x_;
    const FiniteUltraSpace& y_;
    std::size_t nx_, ny_;
    std::vector<Scale> grid_;
    std::vector<Scale> cross_;
    std::size_t depth_ = 0;
    std::optional<Scale> best_;
};

}  // namespace

Scale na_oracle(const GHPoint& x, const GHPoint& y, const std::vector<Scale>& extra_grid) {
    if (x.space().size() + y.space().size() > kOracleMaxPoints) throw TooLarge();
    RangeSet grid = union_of(trace(x), trace(y));
    grid = union_of(grid, RangeSet(extra_grid));
    std::vector<Scale> values(grid.elements().begin(), grid.elements().end());
    return AmbientSearch(x.space(), y.space(), std::move(values)).run();
}

PetalDistance petal_distance(const GHPoint& x, const RangeSet& s) {
    const Scale u = tail_threshold(trace(x), s);
    if (u.is_zero()) return {u, x};
    return {u, GHPoint(quotient(x.space(), u))};
}

PetalApproximation approximate_into_petal(const GHPoint& x, const RangeSet& s, const Scale& r) {
    if (r.is_zero()) throw std::invalid_argument("approximation radius must be positive");
    const RangeSet tr = trace(x);
    Scale below;
    for (const Scale& t : tr.elements())
        if (t < r) below = t;
    return {extend_above(s, tr, r), GHPoint(quotient(x.space(), below))};
}

RangeSet covering_petal(const std::vector<GHPoint>& points) {
    RangeSet out;
    for (const auto& p : points) out = union_of(out, trace(p));
    return out;
}

}  // namespace umu::gh
