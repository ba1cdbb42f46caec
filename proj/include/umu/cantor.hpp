#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umu::cantor {

/// Cells of the Cantor set are named by finite binary prefixes. A partition is
/// a complete prefix-free code: no key prefixes another and every infinite
/// binary string extends exactly one key.
class CodeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws CodeError unless the sorted keys form a complete prefix-free code
/// over {0,1}.
void check_code(const std::vector<std::string>& sorted_keys);

/// Leaves of the union trie of several complete codes, in lexicographic order.
std::vector<std::string> common_refinement(const std::vector<const std::vector<std::string>*>& codes);

/// Index of the key in `sorted_keys` that is a prefix of `cell`. The code
/// must be at most as fine as `cell` along that branch.
std::size_t locate(const std::vector<std::string>& sorted_keys, std::string_view cell);

inline bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

/// True when some key strictly extends `prefix`.
template <typename Map>
bool refines_below(const Map& cells, const std::string& prefix) {
    auto it = cells.upper_bound(prefix);
    return it != cells.end() && it->first.size() > prefix.size() && starts_with(it->first, prefix);
}

/// Visits every cell of the common refinement of two cell maps, in
/// lexicographic order, calling `visit(value_in_a, value_in_b)`.
template <typename V, typename Visit>
void zip_cells(const std::map<std::string, V>& a, const std::map<std::string, V>& b, Visit&& visit) {
    using It = typename std::map<std::string, V>::const_iterator;
    // A side is either one key covering the current prefix, or the block of
    // all keys that strictly extend it.
    struct Side {
        It first, last;
        bool leaf;
    };
    auto children = [](const std::map<std::string, V>& m, const Side& s, const std::string& prefix) {
        if (s.leaf) return std::pair<Side, Side>{s, s};
        const It mid = m.lower_bound(prefix + '1');
        auto make = [&](It lo, It hi, const std::string& child) {
            return Side{lo, hi, std::next(lo) == hi && lo->first == child};
        };
        return std::pair<Side, Side>{make(s.first, mid, prefix + '0'), make(mid, s.last, prefix + '1')};
    };
    auto rec = [&](auto&& self, std::string& prefix, const Side& sa, const Side& sb) -> void {
        if (sa.leaf && sb.leaf) {
            visit(sa.first->second, sb.first->second);
            return;
        }
        auto [a0, a1] = children(a, sa, prefix);
        auto [b0, b1] = children(b, sb, prefix);
        prefix.push_back('0');
        self(self, prefix, a0, b0);
        prefix.back() = '1';
        self(self, prefix, a1, b1);
        prefix.pop_back();
    };
    auto root = [](const std::map<std::string, V>& m) {
        return Side{m.begin(), m.end(), m.size() == 1 && m.begin()->first.empty()};
    };
    std::string prefix;
    rec(rec, prefix, root(a), root(b));
}

/// Merges sibling cells that carry equal values, bottom-up.
template <typename V>
std::map<std::string, V> merge_equal_siblings(const std::map<std::string, V>& cells) {
    std::vector<std::pair<std::string, V>> sorted(cells.begin(), cells.end());
    using Vec = std::vector<std::pair<std::string, V>>;
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi, const std::string& prefix) -> Vec {
        if (hi - lo == 1 && sorted[lo].first == prefix) return Vec{sorted[lo]};
        const std::string right = prefix + '1';
        std::size_t mid = lo;
        while (mid < hi && sorted[mid].first < right) ++mid;
        Vec left = self(self, lo, mid, prefix + '0');
        Vec rest = self(self, mid, hi, right);
        if (left.size() == 1 && rest.size() == 1 && left[0].second == rest[0].second)
            return Vec{{prefix, left[0].second}};
        left.insert(left.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
        return left;
    };
    const Vec merged = rec(rec, 0, sorted.size(), std::string());
    return std::map<std::string, V>(merged.begin(), merged.end());
}

template <typename V>
std::vector<std::string> keys_of(const std::map<std::string, V>& cells) {
    std::vector<std::string> out;
    out.reserve(cells.size());
    for (const auto& kv : cells) out.push_back(kv.first);
    return out;
}

}  // namespace umu::cantor
