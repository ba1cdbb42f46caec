#pragma once

#include "umu/harness.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace umu::harness::detail {

// Platform-independent draws; std distributions are implementation-defined.
inline std::size_t uniform(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }
inline bool coin(Rng& rng, std::size_t one_in = 2) { return uniform(rng, one_in) == 0; }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(rng, i)]);
}

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng) {
    return v[uniform(rng, v.size())];
}

/// Pool elements ≤ t (always contains 0).
RangeSet pool_at_most(const RangeSet& pool, const Scale& t);

}  // namespace umu::harness::detail
