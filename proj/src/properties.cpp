#include "random_util.hpp"
#include "umu/cantor.hpp"
#include "umu/harness.hpp"
#include "umu/io.hpp"

#include <filesystem>
#include <functional>
#include <optional>

namespace umu::harness {

using namespace detail;
using io::json;

namespace {

// Model adapters: one struct per model with a common static interface so the
// property trials below are written once.

/// Brute-force pointwise comparison over every binary string of one depth.
std::vector<std::string> grid_points(std::size_t depth) {
    std::vector<std::string> out{std::string()};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        for (const auto& p : out) {
            next.push_back(p + '0');
            next.push_back(p + '1');
        }
        out = std::move(next);
    }
    return out;
}

constexpr std::size_t kMaxGridDepth = 10;

template <typename Cells>
std::size_t depth_of(const Cells& cells) {
    std::size_t d = 0;
    for (const auto& c : cells) {
        if constexpr (requires { c.first; }) d = std::max(d, c.first.size());
        else d = std::max(d, c.size());
    }
    return d;
}

struct FModel {
    using E = f::SupportMap;
    static constexpr Model model = Model::F;
    static E gen(const RangeSet& pool, const TrialConfig& c, Rng& rng) { return gen_support_map(pool, c.max_support, rng); }
    static E perturb(const E& x, const Scale& t, const RangeSet& pool, const TrialConfig&, Rng& rng) {
        return harness::perturb(x, t, pool, rng);
    }
    static Scale dist(const E& a, const E& b) { return f::delta(a, b); }
    // Largest key of the union of supports where the values differ.
    static std::optional<Scale> dist_oracle(const E& a, const E& b) {
        Scale out;
        const RangeSet keys = union_of(f::trace(a), f::trace(b));
        for (const auto& s : keys.positive())
            if (a(s) != b(s)) out = max(out, s);
        return out;
    }
    static RangeSet trace(const E& x) { return f::trace(x); }
    static bool in_petal(const E& x, const RangeSet& s) { return f::in_petal(x, s); }
    static std::pair<Scale, E> petal_distance(const E& x, const RangeSet& s) {
        auto r = f::petal_distance(x, s);
        return {r.distance, r.witness};
    }
    static std::pair<RangeSet, E> approximate(const E& x, const RangeSet& s, const Scale& r) {
        auto a = f::approximate_into_petal(x, s, r);
        return {a.range, a.element};
    }
    static RangeSet covering(const std::vector<E>& xs) { return f::covering_petal(xs); }
    static bool same(const E& a, const E& b) { return a == b; }
    static E extend(const std::vector<E>& anchors, const std::vector<Scale>& targets) {
        return f::one_point_extension(anchors, targets);
    }
    static json to_json(const E& x) { return io::to_json(x); }
};

struct MapsModel {
    using E = maps::CantorFunction;
    static constexpr Model model = Model::Maps;
    static E gen(const RangeSet& pool, const TrialConfig& c, Rng& rng) {
        return gen_cantor_function(pool, c.max_support, rng);
    }
    static E perturb(const E& x, const Scale& t, const RangeSet& pool, const TrialConfig&, Rng& rng) {
        return harness::perturb(x, t, pool, rng);
    }
    static Scale dist(const E& a, const E& b) { return maps::nabla(a, b); }
    // Pointwise over a uniform-depth grid finer than both partitions.
    static std::optional<Scale> dist_oracle(const E& a, const E& b) {
        const std::size_t depth = std::max(depth_of(a.cells()), depth_of(b.cells()));
        if (depth > kMaxGridDepth) return std::nullopt;
        Scale out;
        for (const auto& p : grid_points(depth))
            if (a.at(p) != b.at(p)) out = max(out, max(a.at(p), b.at(p)));
        return out;
    }
    static RangeSet trace(const E& x) { return maps::trace(x); }
    static bool in_petal(const E& x, const RangeSet& s) { return maps::in_petal(x, s); }
    static std::pair<Scale, E> petal_distance(const E& x, const RangeSet& s) {
        auto r = maps::petal_distance(x, s);
        return {r.distance, r.witness};
    }
    static std::pair<RangeSet, E> approximate(const E& x, const RangeSet& s, const Scale& r) {
        auto a = maps::approximate_into_petal(x, s, r);
        return {a.range, a.element};
    }
    static RangeSet covering(const std::vector<E>& xs) { return maps::covering_petal(xs); }
    static bool same(const E& a, const E& b) { return a == b; }
    static E extend(const std::vector<E>& anchors, const std::vector<Scale>& targets) {
        return maps::one_point_extension(anchors, targets);
    }
    static json to_json(const E& x) { return io::to_json(x); }
};

struct CpumModel {
    using E = cpum::CantorPseudoUltrametric;
    static constexpr Model model = Model::Cpum;
    static E gen(const RangeSet& pool, const TrialConfig& c, Rng& rng) { return gen_cpum(pool, c.max_support, rng); }
    static E perturb(const E& x, const Scale& t, const RangeSet& pool, const TrialConfig&, Rng& rng) {
        return harness::perturb(x, t, pool, rng);
    }
    static Scale dist(const E& a, const E& b) { return cpum::ud(a, b); }
    static std::optional<Scale> dist_oracle(const E& a, const E& b) {
        const std::size_t depth = std::max(depth_of(a.cells()), depth_of(b.cells()));
        if (depth > kMaxGridDepth) return std::nullopt;
        const auto points = grid_points(depth);
        Scale out;
        for (const auto& p : points)
            for (const auto& q : points)
                if (a.at(p, q) != b.at(p, q)) out = max(out, max(a.at(p, q), b.at(p, q)));
        return out;
    }
    static RangeSet trace(const E& x) { return cpum::spectrum(x); }
    static bool in_petal(const E& x, const RangeSet& s) { return cpum::in_petal(x, s); }
    static std::pair<Scale, E> petal_distance(const E& x, const RangeSet& s) {
        auto r = cpum::petal_distance(x, s);
        return {r.distance, r.witness};
    }
    static std::pair<RangeSet, E> approximate(const E& x, const RangeSet& s, const Scale& r) {
        auto a = cpum::approximate_into_petal(x, s, r);
        return {a.range, a.element};
    }
    static RangeSet covering(const std::vector<E>& xs) { return cpum::covering_petal(xs); }
    // Same induced function on Γ×Γ, checked pointwise.
    static bool same(const E& a, const E& b) {
        const auto o = dist_oracle(a, b);
        return o ? o->is_zero() : cpum::ud(a, b).is_zero();
    }
    static json to_json(const E& x) { return io::to_json(x); }
};

struct GhModel {
    using E = gh::GHPoint;
    static constexpr Model model = Model::Gh;
    static E gen(const RangeSet& pool, const TrialConfig& c, Rng& rng) { return E(gen_space(c.max_points, pool, rng)); }
    static E perturb(const E& x, const Scale& t, const RangeSet& pool, const TrialConfig& c, Rng& rng) {
        return E(harness::perturb(x.space(), t, pool, c.max_points, rng));
    }
    static Scale dist(const E& a, const E& b) { return gh::na_distance(a, b); }
    static std::optional<Scale> dist_oracle(const E&, const E&) { return std::nullopt; }
    static RangeSet trace(const E& x) { return gh::trace(x); }
    static bool in_petal(const E& x, const RangeSet& s) { return gh::in_petal(x, s); }
    static std::pair<Scale, E> petal_distance(const E& x, const RangeSet& s) {
        auto r = gh::petal_distance(x, s);
        return {r.distance, r.witness};
    }
    static std::pair<RangeSet, E> approximate(const E& x, const RangeSet& s, const Scale& r) {
        auto a = gh::approximate_into_petal(x, s, r);
        return {a.range, a.element};
    }
    static RangeSet covering(const std::vector<E>& xs) { return gh::covering_petal(xs); }
    static bool same(const E& a, const E& b) { return a == b; }
    static json to_json(const E& x) { return io::to_json(x.space()); }
};

using Outcome = std::optional<json>;
using Trial = std::function<Outcome(Rng&)>;

Outcome fail(std::string what, json detail = json::object()) {
    detail["failed"] = std::move(what);
    return detail;
}

PropertyResult run_trials(const TrialConfig& config, Model model, std::string ref, std::string name,
                          std::size_t trials, const Trial& trial) {
    PropertyResult result{std::move(ref), std::move(name), true, trials, 0, "none"};
    const std::string stream = std::string(model_name(model)) + "/" + result.name;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::uint64_t seed = trial_seed(config.seed, stream, i);
        Rng rng = make_rng(seed);
        Outcome outcome;
        try {
            outcome = trial(rng);
        } catch (const std::exception& e) {
            outcome = fail("exception", json{{"what", e.what()}});
        }
        if (!outcome) continue;
        result.passed = false;
        result.failing_seed = seed;
        (*outcome)["trial"] = i;
        if (!config.counterexample_dir.empty()) {
            const auto path = std::filesystem::path(config.counterexample_dir) /
                              (std::string(model_name(model)) + "-" + result.name + "-" + std::to_string(seed) + ".json");
            io::write_file(path, *outcome);
            result.counterexample = path.string();
        }
        break;
    }
    return result;
}

template <typename M>
typename M::E near(const typename M::E& x, const TrialConfig& c, Rng& rng) {
    if (coin(rng, 3)) return M::gen(c.scale_pool, c, rng);
    return M::perturb(x, gen_scale(c.scale_pool, rng, false), c.scale_pool, c, rng);
}

Scale random_radius(const RangeSet& pool, Rng& rng) {
    static const Scale factors[] = {Scale(1), Scale(1, 2), Scale(3, 2)};
    return gen_scale(pool, rng, true) * factors[uniform(rng, 3)];
}

bool strictly_above_equal(const RangeSet& a, const RangeSet& b, const Scale& w) {
    return tail_subset(a, b, w) && tail_subset(b, a, w);
}

RangeSet erase(const RangeSet& s, const Scale& v) {
    std::vector<Scale> out;
    for (const auto& e : s.elements())
        if (e != v) out.push_back(e);
    return RangeSet(std::move(out));
}

template <typename M>
Outcome metric_trial(const TrialConfig& c, Rng& rng) {
    const auto a = M::gen(c.scale_pool, c, rng);
    const auto b = near<M>(a, c, rng);
    const auto cc = near<M>(coin(rng) ? a : b, c, rng);
    const std::array<const typename M::E*, 3> pts{&a, &b, &cc};
    auto detail = [&] { return json{{"a", M::to_json(a)}, {"b", M::to_json(b)}, {"c", M::to_json(cc)}}; };
    for (std::size_t i = 0; i < 3; ++i) {
        if (!M::dist(*pts[i], *pts[i]).is_zero()) return fail("d(x,x) != 0", detail());
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            const Scale d = M::dist(*pts[i], *pts[j]);
            if (d != M::dist(*pts[j], *pts[i])) return fail("symmetry", detail());
            if (d.is_zero() != M::same(*pts[i], *pts[j])) return fail("identity of indiscernibles", detail());
            if (auto o = M::dist_oracle(*pts[i], *pts[j]); o && *o != d) return fail("closed form vs pointwise", detail());
            const std::size_t k = 3 - i - j;
            if (d > max(M::dist(*pts[i], *pts[k]), M::dist(*pts[k], *pts[j]))) return fail("strong triangle", detail());
        }
    }
    return std::nullopt;
}

template <typename M>
Outcome piece_values_trial(const TrialConfig& c, Rng& rng) {
    const RangeSet s = gen_range(c.scale_pool, rng);
    const auto a = M::gen(s, c, rng);
    const auto b = coin(rng) ? M::gen(s, c, rng) : M::perturb(a, gen_scale(s, rng, false), s, c, rng);
    if (!M::in_petal(a, s) || !M::in_petal(b, s)) return fail("generated member outside the piece");
    if (!s.contains(M::dist(a, b))) return fail("distance between S-members not in S", json{{"a", M::to_json(a)}, {"b", M::to_json(b)}});
    return std::nullopt;
}

template <typename M>
Outcome trace_petal_trial(const TrialConfig& c, Rng& rng) {
    const auto x = M::gen(c.scale_pool, c, rng);
    const RangeSet tr = M::trace(x);
    if (!M::in_petal(x, tr)) return fail("x not in the piece of its trace", json{{"x", M::to_json(x)}});
    for (const auto& s : tr.positive())
        if (M::in_petal(x, erase(tr, s))) return fail("trace not minimal", json{{"x", M::to_json(x)}});
    return std::nullopt;
}

template <typename M>
Outcome intersection_trial(const TrialConfig& c, Rng& rng) {
    const auto x = M::gen(c.scale_pool, c, rng);
    auto draw = [&] { return coin(rng) ? union_of(M::trace(x), gen_range(c.scale_pool, rng)) : gen_range(c.scale_pool, rng); };
    const RangeSet s = draw();
    const RangeSet t = draw();
    if ((M::in_petal(x, s) && M::in_petal(x, t)) != M::in_petal(x, intersect(s, t)))
        return fail("piece intersection", json{{"x", M::to_json(x)}, {"S", io::to_json(s)}, {"T", io::to_json(t)}});
    return std::nullopt;
}

template <typename M>
Outcome difference_trial(const TrialConfig& c, Rng& rng) {
    const auto x = M::gen(c.scale_pool, c, rng);
    const RangeSet t = union_of(M::trace(x), gen_range(c.scale_pool, rng));
    const RangeSet s = coin(rng) ? intersect(t, gen_range(c.scale_pool, rng)) : gen_range(c.scale_pool, rng);
    const Scale u = M::petal_distance(x, s).first;
    if (!u.is_zero() && !(t.contains(u) && !s.contains(u)))
        return fail("distance to piece outside (T\\S)∪{0}",
                    json{{"x", M::to_json(x)}, {"S", io::to_json(s)}, {"T", io::to_json(t)}, {"d", u.str()}});
    return std::nullopt;
}

template <typename M>
Outcome nearest_point_trial(const TrialConfig& c, Rng& rng) {
    const auto x = M::gen(c.scale_pool, c, rng);
    const RangeSet s = coin(rng) ? intersect(union_of(M::trace(x), gen_range(c.scale_pool, rng)), gen_range(c.scale_pool, rng))
                                 : gen_range(c.scale_pool, rng);
    const auto [u, witness] = M::petal_distance(x, s);
    auto detail = [&] { return json{{"x", M::to_json(x)}, {"S", io::to_json(s)}, {"d", u.str()}}; };
    const auto missing = difference(M::trace(x), s);
    const Scale expected = missing.empty() ? Scale() : missing.back();
    if (u != expected) return fail("gap differs from max(Tr(x)\\S)", detail());
    if (!M::in_petal(witness, s)) return fail("witness outside the piece", detail());
    if (M::dist(x, witness) != u) return fail("witness does not attain the distance", detail());
    for (std::size_t k = 0; k < c.petal_members; ++k) {
        const auto g = coin(rng) ? M::gen(s, c, rng) : M::perturb(witness, gen_scale(s, rng, false), s, c, rng);
        if (!M::in_petal(g, s)) return fail("generated member outside the piece", detail());
        if (M::dist(x, g) < u) {
            auto d = detail();
            d["closer"] = M::to_json(g);
            return fail("a piece member is closer than the witness", d);
        }
    }
    return std::nullopt;
}

template <typename M>
Outcome trace_tail_trial(const TrialConfig& c, Rng& rng) {
    const auto x = M::gen(c.scale_pool, c, rng);
    const auto y = near<M>(x, c, rng);
    const Scale d = M::dist(x, y);
    const Scale w = coin(rng) ? d : max(d, gen_scale(c.scale_pool, rng, false));
    if (!strictly_above_equal(M::trace(x), M::trace(y), w))
        return fail("traces differ above w", json{{"x", M::to_json(x)}, {"y", M::to_json(y)}, {"w", w.str()}});
    return std::nullopt;
}

template <typename M>
Outcome covering_trial(const TrialConfig& c, Rng& rng) {
    std::vector<typename M::E> xs;
    const std::size_t n = uniform(rng, 6);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(xs.empty() ? M::gen(c.scale_pool, c, rng) : near<M>(xs.back(), c, rng));
    const RangeSet s = M::covering(xs);
    RangeSet expected;
    for (const auto& x : xs) {
        if (!M::in_petal(x, s)) return fail("point outside its covering piece");
        expected = union_of(expected, M::trace(x));
    }
    if (!(s == expected)) return fail("covering range is not the union of traces");
    return std::nullopt;
}

template <typename M>
Outcome density_trial(const TrialConfig& c, Rng& rng) {
    const auto x = M::gen(c.scale_pool, c, rng);
    const RangeSet s = gen_range(c.scale_pool, rng);
    const Scale r = random_radius(c.scale_pool, rng);
    const auto [t, g] = M::approximate(x, s, r);
    auto detail = [&] { return json{{"x", M::to_json(x)}, {"S", io::to_json(s)}, {"r", r.str()}}; };
    if (!s.subset_of(t)) return fail("S not contained in T", detail());
    for (const auto& v : difference(t, s))
        if (!M::trace(x).contains(v) || v < r) return fail("T\\S not inside Tr(x)∩[r,∞)", detail());
    if (!M::in_petal(g, t)) return fail("approximation outside the T piece", detail());
    if (!(M::dist(x, g) < r)) return fail("approximation not within r", detail());
    return std::nullopt;
}

// Anchors plus a hidden point whose distances become the targets.
template <typename M>
std::pair<std::vector<typename M::E>, typename M::E> extension_instance(const TrialConfig& c, Rng& rng) {
    std::vector<typename M::E> anchors{M::gen(c.scale_pool, c, rng)};
    const std::size_t n = 1 + uniform(rng, 8);
    while (anchors.size() < n) anchors.push_back(near<M>(pick(anchors, rng), c, rng));
    auto hidden = near<M>(pick(anchors, rng), c, rng);
    return {std::move(anchors), std::move(hidden)};
}

template <typename M>
Outcome extension_trial(const TrialConfig& c, Rng& rng) {
    const auto [anchors, hidden] = extension_instance<M>(c, rng);
    std::vector<Scale> targets;
    for (const auto& a : anchors) targets.push_back(M::dist(hidden, a));
    const auto theta = M::extend(anchors, targets);
    json anchors_json = json::array();
    for (const auto& a : anchors) anchors_json.push_back(M::to_json(a));
    auto detail = [&] { return json{{"anchors", anchors_json}, {"targets", io::to_json(RangeSet(targets))}}; };
    for (std::size_t i = 0; i < anchors.size(); ++i)
        if (M::dist(theta, anchors[i]) != targets[i]) return fail("target distance not reproduced", detail());
    const RangeSet s = union_of(M::covering(anchors), RangeSet(targets));
    if (!M::in_petal(theta, s)) return fail("extension leaves the anchors' piece", detail());
    return std::nullopt;
}

template <typename M>
Outcome rejection_trial(const TrialConfig& c, Rng& rng) {
    const auto [anchors, hidden] = extension_instance<M>(c, rng);
    std::vector<Scale> targets;
    for (const auto& a : anchors) targets.push_back(M::dist(hidden, a));
    const std::size_t mutations = 1 + uniform(rng, 2);
    for (std::size_t k = 0; k < mutations; ++k) targets[uniform(rng, targets.size())] = gen_scale(c.scale_pool, rng, false);

    // Independent consistency test: the augmented matrix is a pseudo-ultrametric.
    const std::size_t n = anchors.size();
    ScaleMatrix m(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, M::dist(anchors[i], anchors[j]));
        m.set(i, n, targets[i]);
    }
    const bool consistent = is_ultrametric(m, true);
    try {
        const auto theta = M::extend(anchors, targets);
        if (!consistent) return fail("inconsistent request accepted");
        for (std::size_t i = 0; i < n; ++i)
            if (M::dist(theta, anchors[i]) != targets[i]) return fail("target distance not reproduced");
    } catch (const Inconsistent&) {
        if (consistent) return fail("consistent request rejected");
    }
    return std::nullopt;
}

Outcome disagreement_trial(const TrialConfig& c, Rng& rng) {
    const auto x = FModel::gen(c.scale_pool, c, rng);
    const auto y = near<FModel>(x, c, rng);
    const Scale d = f::delta(x, y);
    const RangeSet keys = union_of(union_of(f::trace(x), f::trace(y)), c.scale_pool);
    for (const auto& r : keys.positive()) {
        bool agree_above = true;
        for (const auto& s : keys.positive())
            if (s > r && x(s) != y(s)) agree_above = false;
        if ((r == d) != (x(r) != y(r) && agree_above))
            return fail("top-disagreement equivalence", json{{"f", io::to_json(x)}, {"g", io::to_json(y)}, {"r", r.str()}});
    }
    return std::nullopt;
}

Outcome embedding_trial(const TrialConfig& c, Rng& rng) {
    const FiniteUltraSpace space = gen_space(c, rng);
    const auto images = f::embed_space(space);
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j)
            if (f::delta(images.at(space.labels()[i]), images.at(space.labels()[j])) != space(i, j))
                return fail("embedding distorts a distance", json{{"space", io::to_json(space)}});
    return std::nullopt;
}

Outcome canonical_trial(const TrialConfig& c, Rng& rng) {
    const auto x = MapsModel::gen(c.scale_pool, c, rng);
    maps::CantorFunction::Cells refined;
    for (const auto& [key, value] : x.cells()) {
        if (coin(rng)) {
            refined.emplace(key + '0', value);
            refined.emplace(key + '1', value);
            if (coin(rng)) {
                refined.erase(key + '1');
                refined.emplace(key + "10", value);
                refined.emplace(key + "11", value);
            }
        } else {
            refined.emplace(key, value);
        }
    }
    const maps::CantorFunction y(refined);
    if (!(y == x)) return fail("refined copy canonicalizes differently", json{{"x", io::to_json(x)}});
    if (!maps::nabla(x, y).is_zero()) return fail("refined copy at positive distance", json{{"x", io::to_json(x)}});
    return std::nullopt;
}

Outcome cross_model_trial(const TrialConfig& c, Rng& rng) {
    const FiniteUltraSpace space = gen_space(std::min<std::size_t>(c.max_points, 8), c.scale_pool, rng);
    const auto in_f = f::embed_space(space);
    std::vector<std::size_t> order(space.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return space.labels()[a] < space.labels()[b]; });
    std::vector<maps::CantorFunction> in_maps;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::vector<Scale> targets;
        for (std::size_t j = 0; j < k; ++j) targets.push_back(space(order[k], order[j]));
        in_maps.push_back(maps::one_point_extension(in_maps, targets));
    }
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b) {
            const Scale df = f::delta(in_f.at(space.labels()[order[a]]), in_f.at(space.labels()[order[b]]));
            if (df != maps::nabla(in_maps[a], in_maps[b]) || df != space(order[a], order[b]))
                return fail("embeddings disagree", json{{"space", io::to_json(space)}});
        }
    return std::nullopt;
}

std::pair<gh::GHPoint, gh::GHPoint> oracle_pair(const TrialConfig& c, Rng& rng, std::size_t total) {
    const std::size_t n = 1 + uniform(rng, total - 1);
    const gh::GHPoint x(gen_space(n, c.scale_pool, rng));
    const std::size_t m_max = total - x.space().size();
    if (!coin(rng)) {
        // X's closed quotient has at most as many classes as X has points.
        gh::GHPoint y(perturb(x.space(), gen_scale(c.scale_pool, rng, false), c.scale_pool, m_max, rng));
        if (y.space().size() <= m_max) return {x, std::move(y)};
    }
    return {x, gh::GHPoint(gen_space(m_max, c.scale_pool, rng))};
}

Outcome oracle_trial(const TrialConfig& c, Rng& rng) {
    auto [x, y] = oracle_pair(c, rng, gh::kOracleMaxPoints);
    const Scale fast = gh::na_distance(x, y);
    const Scale brute = gh::na_oracle(x, y);
    if (fast != brute)
        return fail("quotient scan disagrees with ambient oracle",
                    json{{"x", io::to_json(x.space())}, {"y", io::to_json(y.space())}, {"scan", fast.str()}, {"oracle", brute.str()}});
    return std::nullopt;
}

Outcome oracle_grid_trial(const TrialConfig& c, Rng& rng) {
    auto [x, y] = oracle_pair(c, rng, 5);
    const RangeSet grid = union_of(gh::trace(x), gh::trace(y));
    std::vector<Scale> extra{grid.top() + Scale(1)};
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        extra.push_back((grid.elements()[i] + grid.elements()[i + 1]) * Scale(1, 2));
    if (gh::na_oracle(x, y, extra) != gh::na_oracle(x, y))
        return fail("finer oracle grid changes the optimum", json{{"x", io::to_json(x.space())}, {"y", io::to_json(y.space())}});
    return std::nullopt;
}

Outcome quotient_bound_trial(const TrialConfig& c, Rng& rng) {
    const gh::GHPoint x(gen_space(c, rng));
    const RangeSet spec = gh::trace(x);
    Scale eps = coin(rng) ? spec.elements()[uniform(rng, spec.size())] : random_radius(c.scale_pool, rng);
    const gh::GHPoint q(quotient(x.space(), eps));
    const Scale d = gh::na_distance(x, q);
    auto detail = [&] { return json{{"x", io::to_json(x.space())}, {"eps", eps.str()}}; };
    if (d > eps) return fail("NA(X, X/eps) > eps", detail());
    if (!eps.is_zero() && spec.contains(eps) && d != eps) return fail("NA(X, X/eps) != eps for eps in spectrum", detail());
    return std::nullopt;
}

struct PropertyDef {
    std::string ref;
    std::string name;
    std::function<Outcome(const TrialConfig&, Rng&)> trial;
};

template <typename M>
std::vector<PropertyDef> common_properties(std::string_view metric) {
    return {
        {"ultrametric", std::string(metric) + "-axioms", metric_trial<M>},
        {"P1", "piece-values-in-S", piece_values_trial<M>},
        {"P2", "trace-piece", trace_petal_trial<M>},
        {"P3", "piece-intersection", intersection_trial<M>},
        {"P4", "distance-in-difference", difference_trial<M>},
        {"petal-distance", "nearest-point", nearest_point_trial<M>},
        {"trace-tail", "agreement-above-distance", trace_tail_trial<M>},
        {"covering-petal", "finite-set-in-one-piece", covering_trial<M>},
        {"density", "approximation-into-piece", density_trial<M>},
    };
}

std::vector<PropertyDef> properties(Model model) {
    std::vector<PropertyDef> out;
    switch (model) {
        case Model::F:
            out = common_properties<FModel>("delta");
            out.push_back({"top-disagreement", "disagreement-equivalence", disagreement_trial});
            out.push_back({"injectivity", "one-point-extension", extension_trial<FModel>});
            out.push_back({"injectivity", "inconsistent-rejection", rejection_trial<FModel>});
            out.push_back({"embedding", "finite-space-embedding", embedding_trial});
            break;
        case Model::Maps:
            out = common_properties<MapsModel>("nabla");
            out.push_back({"canonical-form", "refine-then-canonicalize", canonical_trial});
            out.push_back({"injectivity", "one-point-extension", extension_trial<MapsModel>});
            out.push_back({"injectivity", "inconsistent-rejection", rejection_trial<MapsModel>});
            out.push_back({"uniqueness", "cross-model-embedding", cross_model_trial});
            break;
        case Model::Cpum:
            out = common_properties<CpumModel>("ud");
            break;
        case Model::Gh:
            out = common_properties<GhModel>("na");
            out.push_back({"na-oracle", "oracle-agreement", oracle_trial});
            out.push_back({"na-oracle", "oracle-grid-refinement", oracle_grid_trial});
            out.push_back({"na-quotient", "quotient-bound", quotient_bound_trial});
            break;
    }
    return out;
}

std::string header(Model model, const TrialConfig& config) {
    std::string pool;
    for (const auto& s : config.scale_pool.elements()) pool += (pool.empty() ? "" : ",") + s.str();
    return "# umu harness model=" + std::string(model_name(model)) + " seed=" + std::to_string(config.seed) +
           " trials=" + std::to_string(config.trials) + " max_points=" + std::to_string(config.max_points) +
           " max_support=" + std::to_string(config.max_support) + " pool={" + pool + "} rng=" + std::string(kRngName);
}

}  // namespace

std::vector<std::string> property_names(Model model) {
    std::vector<std::string> out;
    for (const auto& p : properties(model)) out.push_back(p.name);
    return out;
}

PropertyResult run_property(Model model, std::string_view name, const TrialConfig& config, std::size_t trials) {
    for (const auto& p : properties(model)) {
        if (p.name != name) continue;
        return run_trials(config, model, p.ref, p.name, trials, [&](Rng& rng) { return p.trial(config, rng); });
    }
    throw std::invalid_argument("unknown property '" + std::string(name) + "' for model " + std::string(model_name(model)));
}

Report run_axiom_suite(Model model, const TrialConfig& config) {
    config.validate();
    Report report;
    report.header = header(model, config);
    for (const auto& p : properties(model))
        report.results.push_back(
            run_trials(config, model, p.ref, p.name, config.trials, [&](Rng& rng) { return p.trial(config, rng); }));
    return report;
}

PropertyResult check_oracle_exhaustive(const TrialConfig& config, const RangeSet& scales) {
    const auto corpus = exhaustive_corpus(gh::kOracleMaxPoints - 1, scales);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < corpus.size(); ++a)
        for (std::size_t b = a; b < corpus.size(); ++b)
            if (corpus[a].size() + corpus[b].size() <= gh::kOracleMaxPoints) pairs.emplace_back(a, b);
    std::size_t next = 0;
    auto result = run_trials(config, Model::Gh, "na-oracle", "oracle-agreement-exhaustive", pairs.size(), [&](Rng&) -> Outcome {
        const auto [a, b] = pairs[next++];
        const gh::GHPoint x(corpus[a]);
        const gh::GHPoint y(corpus[b]);
        if (gh::na_distance(x, y) != gh::na_oracle(x, y))
            return fail("quotient scan disagrees with ambient oracle",
                        json{{"x", io::to_json(corpus[a])}, {"y", io::to_json(corpus[b])}});
        return std::nullopt;
    });
    return result;
}

}  // namespace umu::harness
