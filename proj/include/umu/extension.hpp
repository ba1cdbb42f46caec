#pragma once

#include "umu/scales.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace umu {

/// The requested distances do not extend the anchors to an ultrametric space.
class Inconsistent : public std::runtime_error {
public:
    Inconsistent(std::size_t i, std::size_t j)
        : std::runtime_error("Inconsistent " + std::to_string(i) + " " + std::to_string(j)), i_(i), j_(j) {}
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }

private:
    std::size_t i_, j_;
};

/// Checks that anchors plus a new point at the given target distances form an
/// ultrametric space. `anchor_dist(i, j)` returns the anchors' mutual distance.
template <typename Dist>
void check_extension_consistent(std::size_t n, const std::vector<Scale>& targets, Dist&& anchor_dist) {
    if (targets.size() != n) throw std::invalid_argument("anchors and targets differ in length");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scale d = anchor_dist(i, j);
            if (d > max(targets[i], targets[j]) || targets[i] > max(targets[j], d) || targets[j] > max(targets[i], d))
                throw Inconsistent(i, j);
        }
    }
    // A zero target pins the new point onto that anchor.
    for (std::size_t i = 0; i < n; ++i) {
        if (!targets[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && anchor_dist(i, j) != targets[j]) throw Inconsistent(i, j);
    }
}

/// Index of the first minimal target.
inline std::size_t first_minimum(const std::vector<Scale>& targets) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (targets[i] < targets[best]) best = i;
    return best;
}

}  // namespace umu
