#include "umu/umspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace umu {

namespace {

const char* kind_name(ValidationError::Kind kind) {
    switch (kind) {
        case ValidationError::Kind::NotSquare: return "NotSquare";
        case ValidationError::Kind::NotSymmetric: return "NotSymmetric";
        case ValidationError::Kind::NotPositive: return "NotPositive";
        case ValidationError::Kind::NotZeroDiagonal: return "NotZeroDiagonal";
        case ValidationError::Kind::NotUltrametric: return "NotUltrametric";
        case ValidationError::Kind::DuplicateLabel: return "DuplicateLabel";
    }
    return "?";
}

std::string describe(ValidationError::Kind kind, std::size_t i, std::size_t j, std::size_t k) {
    std::string out = std::string(kind_name(kind)) + " " + std::to_string(i) + " " + std::to_string(j);
    if (kind == ValidationError::Kind::NotUltrametric) out += " " + std::to_string(k);
    return out;
}

Dendrogram build(const FiniteUltraSpace& space, std::vector<std::size_t> members) {
    if (members.size() == 1) return Dendrogram{Scale(), members.front(), {}};
    Scale diameter;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) diameter = max(diameter, space(members[a], members[b]));

    // Open balls of radius `diameter` partition the members.
    Dendrogram node{diameter, 0, {}};
    std::vector<bool> used(members.size(), false);
    for (std::size_t a = 0; a < members.size(); ++a) {
        if (used[a]) continue;
        std::vector<std::size_t> ball;
        for (std::size_t b = a; b < members.size(); ++b) {
            if (!used[b] && space(members[a], members[b]) < diameter) {
                used[b] = true;
                ball.push_back(members[b]);
            }
        }
        node.children.push_back(build(space, std::move(ball)));
    }
    return node;
}

void fill(const Dendrogram& node, ScaleMatrix& out, std::vector<std::size_t>& leaves) {
    if (node.is_leaf()) {
        leaves.push_back(node.point);
        return;
    }
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& child : node.children) {
        groups.emplace_back();
        fill(child, out, groups.back());
    }
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t h = g + 1; h < groups.size(); ++h)
            for (auto a : groups[g])
                for (auto b : groups[h]) out.set(a, b, node.scale);
    for (auto& g : groups) leaves.insert(leaves.end(), g.begin(), g.end());
}

std::string encode(const Dendrogram& node) {
    if (node.is_leaf()) return ".";
    std::vector<std::string> parts;
    parts.reserve(node.children.size());
    for (const auto& child : node.children) parts.push_back(encode(child));
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + node.scale.str() + ":";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out + ")";
}

}  // namespace

ValidationError::ValidationError(Kind kind, std::size_t i, std::size_t j, std::size_t k)
    : std::runtime_error(describe(kind, i, j, k)), kind_(kind), i_(i), j_(j), k_(k) {}

void check_ultrametric(const ScaleMatrix& d, bool pseudo) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!d(i, i).is_zero()) throw ValidationError(ValidationError::Kind::NotZeroDiagonal, i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d(i, j) != d(j, i)) throw ValidationError(ValidationError::Kind::NotSymmetric, i, j);
            if (!pseudo && d(i, j).is_zero()) throw ValidationError(ValidationError::Kind::NotPositive, i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (d(i, j) > max(d(i, k), d(k, j))) throw ValidationError(ValidationError::Kind::NotUltrametric, i, j, k);
}

bool is_ultrametric(const ScaleMatrix& d, bool pseudo) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!d(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (d(i, j) != d(j, i) || (!pseudo && d(i, j).is_zero())) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (d(i, j) > max(d(i, k), d(k, j))) return false;
    return true;
}

FiniteUltraSpace::FiniteUltraSpace(std::vector<std::string> labels, ScaleMatrix dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    if (labels_.empty()) throw std::invalid_argument("a space needs at least one point");
    if (labels_.size() != dist_.size()) throw ValidationError(ValidationError::Kind::NotSquare, labels_.size(), dist_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw ValidationError(ValidationError::Kind::DuplicateLabel, i, j);
    check_ultrametric(dist_, false);
}

FiniteUltraSpace FiniteUltraSpace::from_rows(std::vector<std::string> labels,
                                             const std::vector<std::vector<Scale>>& rows) {
    const std::size_t n = rows.size();
    ScaleMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ValidationError(ValidationError::Kind::NotSquare, i, rows[i].size());
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return FiniteUltraSpace(std::move(labels), std::move(m));
}

FiniteUltraSpace FiniteUltraSpace::single(std::string label) {
    return FiniteUltraSpace({std::move(label)}, ScaleMatrix(1));
}

std::size_t FiniteUltraSpace::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("unknown label: " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Dendrogram::leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
}

Dendrogram dendrogram(const FiniteUltraSpace& space) {
    if (space.size() == 0) throw std::invalid_argument("dendrogram of an empty space");
    std::vector<std::size_t> all(space.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return build(space, std::move(all));
}

ScaleMatrix distances_from(const Dendrogram& tree, std::size_t n) {
    ScaleMatrix out(n);
    std::vector<std::size_t> leaves;
    fill(tree, out, leaves);
    return out;
}

RangeSet spectrum(const FiniteUltraSpace& space) {
    std::vector<Scale> values;
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = i + 1; j < space.size(); ++j) values.push_back(space(i, j));
    return RangeSet(std::move(values));
}

FiniteUltraSpace quotient(const FiniteUltraSpace& space, const Scale& eps) {
    const std::size_t n = space.size();
    std::vector<std::size_t> cls(n, n);
    std::vector<std::size_t> reps;
    std::vector<std::vector<std::string>> members;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] != n) continue;
        cls[i] = reps.size();
        members.push_back({space.labels()[i]});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cls[j] == n && space(i, j) <= eps) {
                cls[j] = reps.size();
                members.back().push_back(space.labels()[j]);
            }
        }
        reps.push_back(i);
    }
    std::vector<std::string> labels;
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        std::string joined;
        for (std::size_t k = 0; k < m.size(); ++k) joined += (k ? "+" : "") + m[k];
        labels.push_back(std::move(joined));
    }
    ScaleMatrix d(reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b) d.set(a, b, space(reps[a], reps[b]));
    return FiniteUltraSpace(std::move(labels), std::move(d));
}

std::string canonical_form(const FiniteUltraSpace& space) { return encode(dendrogram(space)); }

bool isometric(const FiniteUltraSpace& a, const FiniteUltraSpace& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

Scale hausdorff(const FiniteUltraSpace& ambient, std::span<const std::string> a, std::span<const std::string> b) {
    if (a.empty() || b.empty()) throw EmptySubset();
    std::vector<std::size_t> ia, ib;
    for (const auto& l : a) ia.push_back(ambient.index_of(l));
    for (const auto& l : b) ib.push_back(ambient.index_of(l));
    auto directed = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
        Scale worst;
        for (auto x : from) {
            Scale best = ambient(x, to.front());
            for (auto y : to) best = min(best, ambient(x, y));
            worst = max(worst, best);
        }
        return worst;
    };
    return max(directed(ia, ib), directed(ib, ia));
}

}  // namespace umu
