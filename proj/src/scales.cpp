#include "umu/scales.hpp"

#include <algorithm>
#include <iterator>

namespace umu {

namespace {

void check_nonnegative(const mpq_class& q) {
    if (sgn(q) < 0) throw ScaleError("scale must be non-negative: " + q.get_str());
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Scale::Scale(std::int64_t n) : value_(static_cast<long>(n)) { check_nonnegative(value_); }

Scale::Scale(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ScaleError("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
    check_nonnegative(value_);
}

Scale::Scale(const mpq_class& q) : value_(q) {
    value_.canonicalize();
    check_nonnegative(value_);
}

Scale Scale::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw ScaleError("malformed scale: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ScaleError("zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Scale(q);
}

std::string Scale::str() const { return value_.get_str(10); }

Scale nearly_discrete_metric(const Scale& x, const Scale& y) { return x == y ? Scale() : max(x, y); }

RangeSet::RangeSet() : elems_{Scale()} {}

RangeSet::RangeSet(std::initializer_list<Scale> elems) : RangeSet(std::vector<Scale>(elems)) {}

RangeSet::RangeSet(std::vector<Scale> elems) : elems_(std::move(elems)) {
    elems_.emplace_back();
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool RangeSet::contains(const Scale& s) const { return std::binary_search(elems_.begin(), elems_.end(), s); }

bool RangeSet::subset_of(const RangeSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

RangeSet union_of(const RangeSet& a, const RangeSet& b) {
    std::vector<Scale> out;
    std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                   std::back_inserter(out));
    return RangeSet(std::move(out));
}

RangeSet intersect(const RangeSet& a, const RangeSet& b) {
    std::vector<Scale> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return RangeSet(std::move(out));
}

std::vector<Scale> difference(const RangeSet& a, const RangeSet& b) {
    std::vector<Scale> out;
    std::set_difference(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
    return out;
}

bool tail_subset(const RangeSet& a, const RangeSet& b, const Scale& t) {
    const auto first = std::upper_bound(a.elements().begin(), a.elements().end(), t);
    return std::all_of(first, a.elements().end(), [&](const Scale& s) { return b.contains(s); });
}

Scale tail_threshold(const RangeSet& trace, const RangeSet& s) {
    for (const Scale& t : trace.elements()) {
        if (tail_subset(trace, s, t)) return t;
    }
    return trace.top();  // unreachable: the tail above the top is empty
}

RangeSet extend_above(const RangeSet& s, const RangeSet& trace, const Scale& r) {
    std::vector<Scale> out(s.elements().begin(), s.elements().end());
    for (const Scale& t : trace.elements()) {
        if (t >= r) out.push_back(t);
    }
    return RangeSet(std::move(out));
}

std::string to_string(const RangeSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s.elements()[i].str();
    }
    return out + "}";
}

}  // namespace umu
