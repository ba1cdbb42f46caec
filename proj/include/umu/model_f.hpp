#pragma once

#include "umu/extension.hpp"
#include "umu/scales.hpp"
#include "umu/umspace.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace umu::f {

/// A finitely supported function from positive Scales to positive integers.
/// Zero values are never stored; f(0) = 0 is implicit.
class SupportMap {
public:
    using Support = std::map<Scale, std::uint64_t, std::greater<>>;

    SupportMap() = default;
    /// Rejects a zero key; drops zero values.
    explicit SupportMap(Support support);
    SupportMap(std::initializer_list<std::pair<const Scale, std::uint64_t>> entries);

    std::uint64_t operator()(const Scale& r) const;
    /// Keys in descending order.
    const Support& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    /// Restriction to keys strictly above `above` (or at least `at_least`).
    SupportMap truncated_above(const Scale& above) const;
    SupportMap truncated_at_least(const Scale& at_least) const;

    friend bool operator==(const SupportMap&, const SupportMap&) = default;

private:
    Support support_;
};

/// max{ r | f(r) ≠ g(r) }, or 0 when f = g.
Scale delta(const SupportMap& f, const SupportMap& g);

/// {0} ∪ supp(f).
RangeSet trace(const SupportMap& f);

inline bool in_petal(const SupportMap& f, const RangeSet& s) { return trace(f).subset_of(s); }

struct PetalDistance {
    Scale distance;
    SupportMap witness;
};

/// Distance from f to the piece over S, with a nearest member of that piece.
PetalDistance petal_distance(const SupportMap& f, const RangeSet& s);

struct PetalApproximation {
    RangeSet range;
    SupportMap element;
};

/// T = S ∪ (Tr(f) ∩ [r,∞)) and f cut to keys ≥ r; requires r > 0.
PetalApproximation approximate_into_petal(const SupportMap& f, const RangeSet& s, const Scale& r);

/// A point θ with delta(θ, anchors[i]) = targets[i] for all i.
/// Throws Inconsistent when no such point exists.
SupportMap one_point_extension(const std::vector<SupportMap>& anchors, const std::vector<Scale>& targets);

/// Isometric image of a finite ultrametric space, points taken in label order.
std::map<std::string, SupportMap> embed_space(const FiniteUltraSpace& space);

RangeSet covering_petal(const std::vector<SupportMap>& points);

}  // namespace umu::f
