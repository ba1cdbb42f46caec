#pragma once

#include "umu/extension.hpp"
#include "umu/scales.hpp"

#include <map>
#include <string>
#include <vector>

namespace umu::maps {

/// A locally constant function from the Cantor set into the non-negative
/// rationals that takes the value 0 somewhere.
///
/// Stored over a complete prefix-free cell code, always canonical: sibling
/// cells with equal values are merged, so equal functions compare equal.
class CantorFunction {
public:
    using Cells = std::map<std::string, Scale>;

    /// The all-zero function, a single cell "".
    CantorFunction();
    /// Validates the code and the zero value, then canonicalizes.
    explicit CantorFunction(Cells cells);
    CantorFunction(std::initializer_list<std::pair<const std::string, Scale>> cells);

    const Cells& cells() const { return cells_; }
    /// Value on the cell containing `point` (a binary prefix at least as
    /// fine as the partition along that branch).
    const Scale& at(const std::string& point) const;

    friend bool operator==(const CantorFunction&, const CantorFunction&) = default;

private:
    Cells cells_;
};

/// max{ f ∨ g over cells where they differ }, 0 when f = g.
Scale nabla(const CantorFunction& f, const CantorFunction& g);

RangeSet trace(const CantorFunction& f);

inline bool in_petal(const CantorFunction& f, const RangeSet& s) { return trace(f).subset_of(s); }

struct PetalDistance {
    Scale distance;
    CantorFunction witness;
};

/// Nearest member of the piece over S: cells valued at or below the gap are
/// sent to 0.
PetalDistance petal_distance(const CantorFunction& f, const RangeSet& s);

struct PetalApproximation {
    RangeSet range;
    CantorFunction element;
};

/// Zeroes every cell with value below r > 0.
PetalApproximation approximate_into_petal(const CantorFunction& f, const RangeSet& s, const Scale& r);

/// A function θ with nabla(θ, anchors[i]) = targets[i]; throws Inconsistent.
CantorFunction one_point_extension(const std::vector<CantorFunction>& anchors, const std::vector<Scale>& targets);

RangeSet covering_petal(const std::vector<CantorFunction>& points);

}  // namespace umu::maps
