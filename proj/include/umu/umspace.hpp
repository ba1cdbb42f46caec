#pragma once

#include "umu/scales.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace umu {

/// Dense symmetric matrix of Scales, row-major.
class ScaleMatrix {
public:
    ScaleMatrix() = default;
    explicit ScaleMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    const Scale& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    Scale& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    /// Sets (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, const Scale& s) {
        (*this)(i, j) = s;
        (*this)(j, i) = s;
    }

    friend bool operator==(const ScaleMatrix&, const ScaleMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scale> data_;
};

/// Thrown when a candidate matrix is not an ultrametric.
class ValidationError : public std::runtime_error {
public:
    enum class Kind { NotSquare, NotSymmetric, NotPositive, NotZeroDiagonal, NotUltrametric, DuplicateLabel };

    ValidationError(Kind kind, std::size_t i, std::size_t j, std::size_t k = 0);

    Kind kind() const { return kind_; }
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }
    std::size_t k() const { return k_; }

private:
    Kind kind_;
    std::size_t i_, j_, k_;
};

/// Checks symmetry, zero diagonal and the strong triangle inequality.
/// When `pseudo` is false, off-diagonal zeros are rejected as well.
void check_ultrametric(const ScaleMatrix& dist, bool pseudo);
/// Non-throwing form of check_ultrametric.
bool is_ultrametric(const ScaleMatrix& dist, bool pseudo);

/// A finite ultrametric space with labeled points.
class FiniteUltraSpace {
public:
    /// Validates; throws ValidationError.
    FiniteUltraSpace(std::vector<std::string> labels, ScaleMatrix dist);
    /// From rows; validates squareness too.
    static FiniteUltraSpace from_rows(std::vector<std::string> labels, const std::vector<std::vector<Scale>>& rows);
    static FiniteUltraSpace single(std::string label = "p0");

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const ScaleMatrix& dist() const { return dist_; }
    const Scale& operator()(std::size_t i, std::size_t j) const { return dist_(i, j); }
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const FiniteUltraSpace&, const FiniteUltraSpace&) = default;

private:
    std::vector<std::string> labels_;
    ScaleMatrix dist_;
};

/// Rooted tree equivalent of a finite ultrametric space. Leaves carry point
/// indices; an internal node's scale is the distance between any two leaves
/// whose lowest common ancestor it is.
struct Dendrogram {
    Scale scale;                     // 0 for leaves
    std::size_t point = 0;           // meaningful for leaves only
    std::vector<Dendrogram> children;

    bool is_leaf() const { return children.empty(); }
    std::size_t leaf_count() const;
};

Dendrogram dendrogram(const FiniteUltraSpace& space);
/// Distances recovered from lowest common ancestors; size = leaf count.
ScaleMatrix distances_from(const Dendrogram& tree, std::size_t n);

RangeSet spectrum(const FiniteUltraSpace& space);

/// Merges closed eps-balls. Class labels are the sorted member labels
/// joined by '+'; classes are ordered by their first member.
FiniteUltraSpace quotient(const FiniteUltraSpace& space, const Scale& eps);

/// Label-free string that identifies the isometry class.
std::string canonical_form(const FiniteUltraSpace& space);

bool isometric(const FiniteUltraSpace& a, const FiniteUltraSpace& b);

/// Hausdorff distance between two nonempty label subsets of an ambient space.
Scale hausdorff(const FiniteUltraSpace& ambient, std::span<const std::string> a, std::span<const std::string> b);

class EmptySubset : public std::invalid_argument {
public:
    EmptySubset() : std::invalid_argument("hausdorff: empty subset") {}
};

}  // namespace umu
