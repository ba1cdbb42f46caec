#include "umu/model_f.hpp"

#include <algorithm>
#include <numeric>

namespace umu::f {

SupportMap::SupportMap(Support support) {
    for (auto& [key, value] : support) {
        if (key.is_zero()) throw std::invalid_argument("support map key must be positive");
        if (value != 0) support_.emplace(key, value);
    }
}

SupportMap::SupportMap(std::initializer_list<std::pair<const Scale, std::uint64_t>> entries)
    : SupportMap(Support(entries)) {}

std::uint64_t SupportMap::operator()(const Scale& r) const {
    const auto it = support_.find(r);
    return it == support_.end() ? 0 : it->second;
}

SupportMap SupportMap::truncated_above(const Scale& above) const {
    Support out;
    for (const auto& [key, value] : support_) {
        if (key <= above) break;
        out.emplace(key, value);
    }
    return SupportMap(std::move(out));
}

SupportMap SupportMap::truncated_at_least(const Scale& at_least) const {
    Support out;
    for (const auto& [key, value] : support_) {
        if (key < at_least) break;
        out.emplace(key, value);
    }
    return SupportMap(std::move(out));
}

Scale delta(const SupportMap& f, const SupportMap& g) {
    // Walk both supports from the top; the first disagreement is the answer.
    auto a = f.support().begin();
    auto b = g.support().begin();
    const auto ae = f.support().end();
    const auto be = g.support().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first > b->first)) return a->first;
        if (a == ae || b->first > a->first) return b->first;
        if (a->second != b->second) return a->first;
        ++a;
        ++b;
    }
    return Scale();
}

RangeSet trace(const SupportMap& f) {
    std::vector<Scale> keys;
    keys.reserve(f.support().size());
    for (const auto& [key, value] : f.support()) keys.push_back(key);
    return RangeSet(std::move(keys));
}

PetalDistance petal_distance(const SupportMap& f, const RangeSet& s) {
    const Scale u = tail_threshold(trace(f), s);
    return {u, f.truncated_above(u)};
}

PetalApproximation approximate_into_petal(const SupportMap& f, const RangeSet& s, const Scale& r) {
    if (r.is_zero()) throw std::invalid_argument("approximation radius must be positive");
    return {extend_above(s, trace(f), r), f.truncated_at_least(r)};
}

SupportMap one_point_extension(const std::vector<SupportMap>& anchors, const std::vector<Scale>& targets) {
    check_extension_consistent(anchors.size(), targets,
                               [&](std::size_t i, std::size_t j) { return delta(anchors[i], anchors[j]); });
    if (anchors.empty()) return {};
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (targets[i].is_zero()) return anchors[i];

    const std::size_t pivot = first_minimum(targets);
    const Scale& m = targets[pivot];
    std::uint64_t fresh = 0;
    for (std::size_t j = 0; j < anchors.size(); ++j)
        if (targets[j] == m) fresh = std::max(fresh, anchors[j](m));

    SupportMap::Support out = anchors[pivot].truncated_above(m).support();
    out.emplace(m, fresh + 1);
    return SupportMap(std::move(out));
}

std::map<std::string, SupportMap> embed_space(const FiniteUltraSpace& space) {
    std::vector<std::size_t> order(space.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return space.labels()[a] < space.labels()[b]; });

    std::vector<SupportMap> images;
    std::map<std::string, SupportMap> out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<Scale> targets;
        for (std::size_t j = 0; j < k; ++j) targets.push_back(space(order[k], order[j]));
        images.push_back(k == 0 ? SupportMap() : one_point_extension(images, targets));
        out.emplace(space.labels()[order[k]], images.back());
    }
    return out;
}

RangeSet covering_petal(const std::vector<SupportMap>& points) {
    RangeSet out;
    for (const auto& p : points) out = union_of(out, trace(p));
    return out;
}

}  // namespace umu::f
