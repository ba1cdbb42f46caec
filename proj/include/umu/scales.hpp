#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umu {

/// An exact non-negative rational distance value.
///
/// Always kept in lowest terms with a positive denominator, so two Scales
/// compare equal exactly when their text forms are equal.
class Scale {
public:
    Scale() = default;
    Scale(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Scale(std::int64_t num, std::int64_t den);
    explicit Scale(const mpq_class& q);

    /// Parses "p/q" or "p". Accepts non-reduced input and reduces it.
    static Scale parse(std::string_view text);

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string str() const;

    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    friend bool operator==(const Scale& a, const Scale& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scale& a, const Scale& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend Scale operator+(const Scale& a, const Scale& b) { return Scale(mpq_class(a.value_ + b.value_)); }
    friend Scale operator*(const Scale& a, const Scale& b) { return Scale(mpq_class(a.value_ * b.value_)); }

private:
    mpq_class value_{0};
};

class ScaleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const Scale& max(const Scale& a, const Scale& b) { return a < b ? b : a; }
inline const Scale& min(const Scale& a, const Scale& b) { return b < a ? b : a; }

/// M(x, y) = x ∨ y when x ≠ y, else 0.
Scale nearly_discrete_metric(const Scale& x, const Scale& y);

/// A finite range set: sorted ascending, deduplicated, always containing 0.
class RangeSet {
public:
    RangeSet();
    RangeSet(std::initializer_list<Scale> elems);
    explicit RangeSet(std::vector<Scale> elems);

    std::span<const Scale> elements() const& { return elems_; }
    std::span<const Scale> elements() const&& = delete;
    std::size_t size() const { return elems_.size(); }
    bool contains(const Scale& s) const;
    /// Every element of *this belongs to other.
    bool subset_of(const RangeSet& other) const;
    /// Largest element; 0 for {0}.
    const Scale& top() const { return elems_.back(); }

    /// Elements strictly positive, ascending.
    std::span<const Scale> positive() const& { return std::span<const Scale>(elems_).subspan(1); }
    std::span<const Scale> positive() const&& = delete;

    friend bool operator==(const RangeSet&, const RangeSet&) = default;

private:
    std::vector<Scale> elems_;
};

RangeSet union_of(const RangeSet& a, const RangeSet& b);
RangeSet intersect(const RangeSet& a, const RangeSet& b);
/// a ∖ b (0 is never in the result since both sets contain it).
std::vector<Scale> difference(const RangeSet& a, const RangeSet& b);

/// True iff every element of a strictly greater than t belongs to b.
bool tail_subset(const RangeSet& a, const RangeSet& b, const Scale& t);

/// The least t ≥ 0 with trace ∩ (t,∞) ⊆ S ∩ (t,∞).
///
/// Scanned over the candidates {0} ∪ trace; the condition is monotone in t
/// and can only switch on at a trace element, so the minimum over all
/// non-negative rationals lies among them.
Scale tail_threshold(const RangeSet& trace, const RangeSet& s);

/// Restriction S ∪ (trace ∩ [r, ∞)).
RangeSet extend_above(const RangeSet& s, const RangeSet& trace, const Scale& r);

std::string to_string(const RangeSet& s);

}  // namespace umu
