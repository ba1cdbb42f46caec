#include "umu/cantor.hpp"

#include <algorithm>
#include <set>

namespace umu::cantor {

namespace {

void check_block(const std::vector<std::string>& keys, std::size_t lo, std::size_t hi, std::string& prefix) {
    if (lo == hi) throw CodeError("incomplete cell code: nothing covers '" + prefix + "'");
    if (keys[lo] == prefix) {
        if (hi - lo > 1) throw CodeError("cell code not prefix-free: '" + prefix + "' prefixes '" + keys[lo + 1] + "'");
        return;
    }
    std::size_t mid = lo;
    prefix.push_back('1');
    while (mid < hi && keys[mid] < prefix) ++mid;
    prefix.back() = '0';
    check_block(keys, lo, mid, prefix);
    prefix.back() = '1';
    check_block(keys, mid, hi, prefix);
    prefix.pop_back();
}

}  // namespace

void check_code(const std::vector<std::string>& keys) {
    for (const auto& k : keys) {
        if (k.find_first_not_of("01") != std::string::npos) throw CodeError("cell prefix outside {0,1}: '" + k + "'");
    }
    if (!std::is_sorted(keys.begin(), keys.end()) || std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw CodeError("cell keys must be distinct");
    std::string prefix;
    check_block(keys, 0, keys.size(), prefix);
}

std::vector<std::string> common_refinement(const std::vector<const std::vector<std::string>*>& codes) {
    std::set<std::string> all;
    for (const auto* code : codes) all.insert(code->begin(), code->end());
    std::vector<std::string> out;
    for (auto it = all.begin(); it != all.end(); ++it) {
        // In sorted order, anything a key prefixes sits right after it.
        auto next = std::next(it);
        if (next != all.end() && starts_with(*next, *it)) continue;
        out.push_back(*it);
    }
    return out;
}

std::size_t locate(const std::vector<std::string>& keys, std::string_view cell) {
    // The covering key is the greatest key ≤ cell.
    auto it = std::upper_bound(keys.begin(), keys.end(), cell,
                               [](std::string_view c, const std::string& k) { return c < std::string_view(k); });
    if (it == keys.begin() || !starts_with(cell, *std::prev(it)))
        throw CodeError("cell '" + std::string(cell) + "' is not covered");
    return static_cast<std::size_t>(std::prev(it) - keys.begin());
}

}  // namespace umu::cantor
