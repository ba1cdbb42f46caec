#pragma once

#include "umu/scales.hpp"
#include "umu/umspace.hpp"

#include <string>
#include <vector>

namespace umu::cpum {

/// A locally constant pseudo-ultrametric on the Cantor set: a cell code plus
/// a pseudo-ultrametric matrix between cells. Points in one cell are at
/// distance 0; distinct cells may also be at distance 0.
class CantorPseudoUltrametric {
public:
    /// The zero pseudo-ultrametric on the single cell "".
    CantorPseudoUltrametric();
    /// Cells in any order; rows of `dist` follow `cells`. Validates.
    CantorPseudoUltrametric(std::vector<std::string> cells, const ScaleMatrix& dist);

    const std::vector<std::string>& cells() const { return cells_; }
    const ScaleMatrix& dist() const { return dist_; }
    std::size_t size() const { return cells_.size(); }

    /// Distance between the cells containing two points given as prefixes.
    const Scale& at(const std::string& x, const std::string& y) const;

    friend bool operator==(const CantorPseudoUltrametric&, const CantorPseudoUltrametric&) = default;

private:
    std::vector<std::string> cells_;  // sorted
    ScaleMatrix dist_;
};

/// Same element with sibling cells at distance 0 merged.
CantorPseudoUltrametric canonicalize(const CantorPseudoUltrametric& d);

/// max{ d ∨ e over refined cell pairs where they differ }, 0 if none.
Scale ud(const CantorPseudoUltrametric& d, const CantorPseudoUltrametric& e);

RangeSet spectrum(const CantorPseudoUltrametric& d);

inline bool in_petal(const CantorPseudoUltrametric& d, const RangeSet& s) { return spectrum(d).subset_of(s); }

struct PetalDistance {
    Scale distance;
    CantorPseudoUltrametric witness;
};

/// Witness keeps entries above the gap and zeroes the rest.
PetalDistance petal_distance(const CantorPseudoUltrametric& d, const RangeSet& s);

struct PetalApproximation {
    RangeSet range;
    CantorPseudoUltrametric element;
};

PetalApproximation approximate_into_petal(const CantorPseudoUltrametric& d, const RangeSet& s, const Scale& r);

RangeSet covering_petal(const std::vector<CantorPseudoUltrametric>& points);

}  // namespace umu::cpum
