#include "umu/model_cpum.hpp"

#include "umu/cantor.hpp"

#include <algorithm>
#include <numeric>

namespace umu::cpum {

namespace {

template <typename Keep>
CantorPseudoUltrametric zero_unless(const CantorPseudoUltrametric& d, Keep&& keep) {
    ScaleMatrix m = d.dist();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!keep(m(i, j))) m(i, j) = Scale();
    return CantorPseudoUltrametric(d.cells(), m);
}

}  // namespace

CantorPseudoUltrametric::CantorPseudoUltrametric() : cells_{std::string()}, dist_(1) {}

CantorPseudoUltrametric::CantorPseudoUltrametric(std::vector<std::string> cells, const ScaleMatrix& dist) {
    if (cells.size() != dist.size()) throw std::invalid_argument("cell count does not match matrix size");
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
    cells_.reserve(cells.size());
    for (auto i : order) cells_.push_back(cells[i]);
    cantor::check_code(cells_);
    dist_ = ScaleMatrix(cells.size());
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b) dist_(a, b) = dist(order[a], order[b]);
    check_ultrametric(dist_, true);
}

const Scale& CantorPseudoUltrametric::at(const std::string& x, const std::string& y) const {
    return dist_(cantor::locate(cells_, x), cantor::locate(cells_, y));
}

CantorPseudoUltrametric canonicalize(const CantorPseudoUltrametric& d) {
    std::vector<std::string> cells = d.cells();
    ScaleMatrix m = d.dist();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < cells.size() && !changed; ++i) {
            const std::string& key = cells[i];
            if (key.empty() || key.back() != '0') continue;
            std::string sibling = key;
            sibling.back() = '1';
            // The sibling, if a cell, comes right after.
            if (cells[i + 1] != sibling || !m(i, i + 1).is_zero()) continue;
            std::vector<std::string> next_cells;
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (k == i) next_cells.push_back(key.substr(0, key.size() - 1));
                else if (k != i + 1) next_cells.push_back(cells[k]);
            }
            ScaleMatrix next(cells.size() - 1);
            auto src = [&](std::size_t k) { return k <= i ? k : k + 1; };
            for (std::size_t a = 0; a < next.size(); ++a)
                for (std::size_t b = 0; b < next.size(); ++b) next(a, b) = m(src(a), src(b));
            cells = std::move(next_cells);
            m = std::move(next);
            changed = true;
        }
    }
    return CantorPseudoUltrametric(std::move(cells), m);
}

Scale ud(const CantorPseudoUltrametric& d, const CantorPseudoUltrametric& e) {
    const auto refined = cantor::common_refinement({&d.cells(), &e.cells()});
    std::vector<std::size_t> in_d, in_e;
    in_d.reserve(refined.size());
    in_e.reserve(refined.size());
    for (const auto& c : refined) {
        in_d.push_back(cantor::locate(d.cells(), c));
        in_e.push_back(cantor::locate(e.cells(), c));
    }
    Scale out;
    for (std::size_t a = 0; a < refined.size(); ++a) {
        for (std::size_t b = a + 1; b < refined.size(); ++b) {
            const Scale& x = d.dist()(in_d[a], in_d[b]);
            const Scale& y = e.dist()(in_e[a], in_e[b]);
            if (x != y) out = max(out, max(x, y));
        }
    }
    return out;
}

RangeSet spectrum(const CantorPseudoUltrametric& d) {
    std::vector<Scale> values;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) values.push_back(d.dist()(i, j));
    return RangeSet(std::move(values));
}

PetalDistance petal_distance(const CantorPseudoUltrametric& d, const RangeSet& s) {
    const Scale u = tail_threshold(spectrum(d), s);
    if (u.is_zero()) return {u, d};
    return {u, zero_unless(d, [&](const Scale& v) { return v > u; })};
}

PetalApproximation approximate_into_petal(const CantorPseudoUltrametric& d, const RangeSet& s, const Scale& r) {
    if (r.is_zero()) throw std::invalid_argument("approximation radius must be positive");
    return {extend_above(s, spectrum(d), r), zero_unless(d, [&](const Scale& v) { return v >= r; })};
}

RangeSet covering_petal(const std::vector<CantorPseudoUltrametric>& points) {
    RangeSet out;
    for (const auto& p : points) out = union_of(out, spectrum(p));
    return out;
}

}  // namespace umu::cpum
