#pragma once

#include "umu/scales.hpp"
#include "umu/umspace.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace umu::gh {

/// An isometry class of finite ultrametric spaces; the canonical form is the
/// identity key.
class GHPoint {
public:
    explicit GHPoint(FiniteUltraSpace space);

    const FiniteUltraSpace& space() const { return space_; }
    const std::string& key() const { return key_; }

    friend bool operator==(const GHPoint& a, const GHPoint& b) { return a.key_ == b.key_; }

private:
    FiniteUltraSpace space_;
    std::string key_;
};

/// Non-Archimedean Gromov–Hausdorff distance: the least ε in
/// {0} ∪ spectrum(X) ∪ spectrum(Y) at which the closed ε-quotients are isometric.
Scale na_distance(const GHPoint& x, const GHPoint& y);

class TooLarge : public std::invalid_argument {
public:
    TooLarge() : std::invalid_argument("na_oracle: |X| + |Y| must be at most 6") {}
};

inline constexpr std::size_t kOracleMaxPoints = 6;

/// Brute force over ultrametric ambients on X ⊔ Y. Cross distances range over
/// {0} ∪ spectrum(X) ∪ spectrum(Y) ∪ extra_grid; a zero cross distance glues a point
/// of X onto a point of Y. Returns the least Hausdorff distance found.
Scale na_oracle(const GHPoint& x, const GHPoint& y, const std::vector<Scale>& extra_grid = {});

inline RangeSet trace(const GHPoint& x) { return spectrum(x.space()); }
inline bool in_petal(const GHPoint& x, const RangeSet& s) { return trace(x).subset_of(s); }

struct PetalDistance {
    Scale distance;
    GHPoint witness;
};

/// Witness is the closed quotient at the gap.
PetalDistance petal_distance(const GHPoint& x, const RangeSet& s);

struct PetalApproximation {
    RangeSet range;
    GHPoint element;
};

/// Quotient by the largest spectrum value below r > 0.
PetalApproximation approximate_into_petal(const GHPoint& x, const RangeSet& s, const Scale& r);

RangeSet covering_petal(const std::vector<GHPoint>& points);

}  // namespace umu::gh
