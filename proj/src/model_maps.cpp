#include "umu/model_maps.hpp"

#include "umu/cantor.hpp"

namespace umu::maps {

namespace {

CantorFunction::Cells zero_below(const CantorFunction::Cells& cells, auto&& keep) {
    CantorFunction::Cells out;
    for (const auto& [key, value] : cells) out.emplace(key, keep(value) ? value : Scale());
    return out;
}

}  // namespace

CantorFunction::CantorFunction() : cells_{{std::string(), Scale()}} {}

CantorFunction::CantorFunction(Cells cells) {
    cantor::check_code(cantor::keys_of(cells));
    bool has_zero = false;
    for (const auto& kv : cells) has_zero = has_zero || kv.second.is_zero();
    if (!has_zero) throw std::invalid_argument("a Cantor function must take the value 0");
    cells_ = cantor::merge_equal_siblings(cells);
}

CantorFunction::CantorFunction(std::initializer_list<std::pair<const std::string, Scale>> cells)
    : CantorFunction(Cells(cells)) {}

const Scale& CantorFunction::at(const std::string& point) const {
    auto it = cells_.upper_bound(point);
    if (it == cells_.begin() || !cantor::starts_with(point, std::prev(it)->first))
        throw cantor::CodeError("point '" + point + "' is coarser than the partition");
    return std::prev(it)->second;
}

Scale nabla(const CantorFunction& f, const CantorFunction& g) {
    Scale out;
    cantor::zip_cells(f.cells(), g.cells(), [&](const Scale& a, const Scale& b) {
        if (a != b) out = max(out, max(a, b));
    });
    return out;
}

RangeSet trace(const CantorFunction& f) {
    std::vector<Scale> values;
    for (const auto& kv : f.cells()) values.push_back(kv.second);
    return RangeSet(std::move(values));
}

PetalDistance petal_distance(const CantorFunction& f, const RangeSet& s) {
    const Scale u = tail_threshold(trace(f), s);
    if (u.is_zero()) return {u, f};
    return {u, CantorFunction(zero_below(f.cells(), [&](const Scale& v) { return v > u; }))};
}

PetalApproximation approximate_into_petal(const CantorFunction& f, const RangeSet& s, const Scale& r) {
    if (r.is_zero()) throw std::invalid_argument("approximation radius must be positive");
    return {extend_above(s, trace(f), r), CantorFunction(zero_below(f.cells(), [&](const Scale& v) { return v >= r; }))};
}

CantorFunction one_point_extension(const std::vector<CantorFunction>& anchors, const std::vector<Scale>& targets) {
    check_extension_consistent(anchors.size(), targets,
                               [&](std::size_t i, std::size_t j) { return nabla(anchors[i], anchors[j]); });
    if (anchors.empty()) return {};
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (targets[i].is_zero()) return anchors[i];

    const std::size_t pivot = first_minimum(targets);
    const Scale& m = targets[pivot];
    const auto& base = anchors[pivot].cells();

    // First zero cell of the pivot, then its first cell in the common
    // refinement of all anchors (every anchor is constant there).
    std::string cell;
    for (const auto& [key, value] : base) {
        if (value.is_zero()) {
            cell = key;
            break;
        }
    }
    const std::string parent = cell;
    auto finer = [&](const std::string& prefix) {
        for (const auto& a : anchors)
            if (cantor::refines_below(a.cells(), prefix)) return true;
        return false;
    };
    CantorFunction::Cells out = base;
    out.erase(parent);
    while (finer(cell)) {
        out.emplace(cell + '1', Scale());
        cell.push_back('0');
    }
    out.emplace(cell + '0', m);
    out.emplace(cell + '1', Scale());
    return CantorFunction(std::move(out));
}

RangeSet covering_petal(const std::vector<CantorFunction>& points) {
    RangeSet out;
    for (const auto& p : points) out = union_of(out, trace(p));
    return out;
}

}  // namespace umu::maps
