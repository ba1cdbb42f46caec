#include "umu/harness.hpp"

#include "random_util.hpp"
#include "umu/cantor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace umu::harness {

using namespace detail;

namespace detail {

RangeSet pool_at_most(const RangeSet& pool, const Scale& t) {
    std::vector<Scale> out;
    for (const auto& s : pool.elements())
        if (s <= t) out.push_back(s);
    return RangeSet(std::move(out));
}

}  // namespace detail

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<Scale> positives(const RangeSet& pool) { return {pool.positive().begin(), pool.positive().end()}; }

void grow(std::vector<std::size_t> items, std::size_t upper, const std::vector<Scale>& scales, ScaleMatrix& m,
          Rng& rng, bool pseudo) {
    if (items.size() < 2) return;
    if (upper == 0) {
        if (!pseudo) throw std::invalid_argument("pool has too few positive scales for a metric");
        return;
    }
    if (pseudo && coin(rng, 5)) return;  // collapse to zero distances
    const std::size_t level = uniform(rng, upper);
    const bool singletons = !pseudo && level == 0;
    const std::size_t k = singletons ? items.size() : 2 + uniform(rng, items.size() - 1);
    shuffle(items, rng);
    std::vector<std::vector<std::size_t>> groups(k);
    for (std::size_t i = 0; i < items.size(); ++i) groups[i < k ? i : uniform(rng, k)].push_back(items[i]);
    for (std::size_t g = 0; g < k; ++g)
        for (std::size_t h = g + 1; h < k; ++h)
            for (auto a : groups[g])
                for (auto b : groups[h]) m.set(a, b, scales[level]);
    for (auto& g : groups) grow(std::move(g), level, scales, m, rng, pseudo);
}

std::vector<std::string> random_code(std::size_t leaves, Rng& rng) {
    std::vector<std::string> code{std::string()};
    while (code.size() < leaves) {
        const std::size_t i = uniform(rng, code.size());
        std::string cell = code[i];
        code[i] = cell + '0';
        code.push_back(cell + '1');
    }
    return code;
}

FiniteUltraSpace space_of_size(std::size_t n, const RangeSet& pool, Rng& rng) {
    if (pool.positive().empty()) n = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteUltraSpace(std::move(labels), gen_ultrametric(n, pool, rng, false));
}

}  // namespace

RangeSet default_pool() { return RangeSet{Scale(1, 4), Scale(1, 3), Scale(1, 2), Scale(2, 3), Scale(1), Scale(2)}; }

void TrialConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (max_points < 1 || max_support < 1) throw std::invalid_argument("size bounds must be at least 1");
    if (scale_pool.positive().size() < 2) throw std::invalid_argument("scale pool needs two positive values");
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
    std::uint64_t state = seed ^ fnv1a(stream);
    splitmix64(state);
    state ^= trial * 0xD1B54A32D192ED03ULL;
    return splitmix64(state);
}

Scale gen_scale(const RangeSet& pool, Rng& rng, bool positive) {
    if (positive) {
        if (pool.positive().empty()) throw std::invalid_argument("pool has no positive scale");
        return pool.positive()[uniform(rng, pool.positive().size())];
    }
    return pool.elements()[uniform(rng, pool.size())];
}

RangeSet gen_range(const RangeSet& pool, Rng& rng) {
    std::vector<Scale> out;
    for (const auto& s : pool.positive())
        if (coin(rng)) out.push_back(s);
    return RangeSet(std::move(out));
}

ScaleMatrix gen_ultrametric(std::size_t n, const RangeSet& pool, Rng& rng, bool pseudo) {
    ScaleMatrix m(n);
    std::vector<std::size_t> items(n);
    for (std::size_t i = 0; i < n; ++i) items[i] = i;
    const auto scales = positives(pool);
    grow(std::move(items), scales.size(), scales, m, rng, pseudo);
    return m;
}

FiniteUltraSpace gen_space(std::size_t points, const RangeSet& pool, Rng& rng) {
    return space_of_size(1 + uniform(rng, points), pool, rng);
}

FiniteUltraSpace gen_space(const TrialConfig& config, Rng& rng) {
    return gen_space(config.max_points, config.scale_pool, rng);
}

f::SupportMap gen_support_map(const RangeSet& pool, std::size_t max_support, Rng& rng) {
    auto keys = positives(pool);
    shuffle(keys, rng);
    keys.resize(uniform(rng, std::min(max_support, keys.size()) + 1));
    f::SupportMap::Support support;
    for (auto& k : keys) support.emplace(std::move(k), 1 + uniform(rng, 3));
    return f::SupportMap(std::move(support));
}

f::SupportMap gen_support_map(const TrialConfig& config, Rng& rng) {
    return gen_support_map(config.scale_pool, config.max_support, rng);
}

maps::CantorFunction gen_cantor_function(const RangeSet& pool, std::size_t max_cells, Rng& rng) {
    const auto code = random_code(1 + uniform(rng, max_cells), rng);
    maps::CantorFunction::Cells cells;
    for (const auto& c : code) cells.emplace(c, gen_scale(pool, rng, false));
    cells[pick(code, rng)] = Scale();
    return maps::CantorFunction(std::move(cells));
}

maps::CantorFunction gen_cantor_function(const TrialConfig& config, Rng& rng) {
    return gen_cantor_function(config.scale_pool, config.max_support, rng);
}

cpum::CantorPseudoUltrametric gen_cpum(const RangeSet& pool, std::size_t max_cells, Rng& rng) {
    auto code = random_code(1 + uniform(rng, max_cells), rng);
    const ScaleMatrix m = gen_ultrametric(code.size(), pool, rng, true);
    return cpum::CantorPseudoUltrametric(std::move(code), m);
}

cpum::CantorPseudoUltrametric gen_cpum(const TrialConfig& config, Rng& rng) {
    return gen_cpum(config.scale_pool, config.max_support, rng);
}

f::SupportMap perturb(const f::SupportMap& x, const Scale& t, const RangeSet& pool, Rng& rng) {
    f::SupportMap::Support support = x.truncated_above(t).support();
    const RangeSet low = pool_at_most(pool, t);
    for (const auto& s : low.positive()) {
        if (coin(rng)) support.emplace(s, 1 + uniform(rng, 3));
    }
    return f::SupportMap(std::move(support));
}

maps::CantorFunction perturb(const maps::CantorFunction& x, const Scale& t, const RangeSet& pool, Rng& rng) {
    const RangeSet low = pool_at_most(pool, t);
    maps::CantorFunction::Cells cells;
    std::vector<std::string> changed;
    for (const auto& [key, value] : x.cells()) {
        if (value > t) {
            cells.emplace(key, value);
        } else if (coin(rng, 3)) {
            for (char bit : {'0', '1'}) {
                cells.emplace(key + bit, gen_scale(low, rng, false));
                changed.push_back(key + bit);
            }
        } else {
            cells.emplace(key, gen_scale(low, rng, false));
            changed.push_back(key);
        }
    }
    const bool has_zero = std::any_of(cells.begin(), cells.end(), [](const auto& kv) { return kv.second.is_zero(); });
    if (!has_zero) cells[pick(changed, rng)] = Scale();
    return maps::CantorFunction(std::move(cells));
}

cpum::CantorPseudoUltrametric perturb(const cpum::CantorPseudoUltrametric& x, const Scale& t, const RangeSet& pool,
                                      Rng& rng) {
    std::vector<std::string> cells = x.cells();
    ScaleMatrix m = x.dist();
    if (coin(rng)) {
        // Split one cell into two children at distance 0.
        const std::size_t c = uniform(rng, cells.size());
        const std::size_t n = cells.size();
        ScaleMatrix grown(n + 1);
        for (std::size_t a = 0; a <= n; ++a)
            for (std::size_t b = 0; b <= n; ++b) grown(a, b) = m(a == n ? c : a, b == n ? c : b);
        grown(c, n) = grown(n, c) = Scale();
        cells.push_back(cells[c] + '1');
        cells[c] += '0';
        m = std::move(grown);
    }
    // Re-draw distances inside each class of the relation d ≤ t.
    const RangeSet low = pool_at_most(pool, t);
    std::vector<bool> seen(cells.size(), false);
    for (std::size_t a = 0; a < cells.size(); ++a) {
        if (seen[a]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t b = a; b < cells.size(); ++b)
            if (!seen[b] && m(a, b) <= t) {
                seen[b] = true;
                cls.push_back(b);
            }
        const ScaleMatrix inner = gen_ultrametric(cls.size(), low, rng, true);
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = 0; j < cls.size(); ++j) m(cls[i], cls[j]) = inner(i, j);
    }
    return cpum::CantorPseudoUltrametric(std::move(cells), m);
}

FiniteUltraSpace perturb(const FiniteUltraSpace& x, const Scale& t, const RangeSet& pool, std::size_t max_points,
                         Rng& rng) {
    const FiniteUltraSpace classes = quotient(x, t);
    const RangeSet low = pool_at_most(pool, t);
    const std::size_t k = classes.size();
    std::vector<std::size_t> sizes(k, 1);
    if (!low.positive().empty()) {
        std::size_t budget = max_points > k ? max_points - k : 0;
        for (std::size_t c = 0; c < k && budget > 0; ++c) {
            const std::size_t extra = uniform(rng, budget + 1);
            sizes[c] += extra;
            budget -= extra;
        }
    }
    std::vector<std::size_t> owner;
    for (std::size_t c = 0; c < k; ++c) owner.insert(owner.end(), sizes[c], c);
    ScaleMatrix m(owner.size());
    std::size_t offset = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const ScaleMatrix inner = gen_ultrametric(sizes[c], low, rng, false);
        for (std::size_t i = 0; i < sizes[c]; ++i)
            for (std::size_t j = 0; j < sizes[c]; ++j) m(offset + i, offset + j) = inner(i, j);
        offset += sizes[c];
    }
    for (std::size_t a = 0; a < owner.size(); ++a)
        for (std::size_t b = 0; b < owner.size(); ++b)
            if (owner[a] != owner[b]) m(a, b) = classes(owner[a], owner[b]);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < owner.size(); ++i) labels.push_back("q" + std::to_string(i));
    return FiniteUltraSpace(std::move(labels), std::move(m));
}

std::vector<FiniteUltraSpace> exhaustive_corpus(std::size_t max_points, const RangeSet& scales) {
    const auto values = positives(scales);
    std::vector<FiniteUltraSpace> out;
    out.push_back(FiniteUltraSpace::single());
    for (std::size_t n = 2; n <= max_points; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
        std::set<std::string> seen;
        std::vector<std::size_t> digits(pairs.size(), 0);
        ScaleMatrix m(n);
        while (true) {
            for (std::size_t p = 0; p < pairs.size(); ++p) m.set(pairs[p].first, pairs[p].second, values[digits[p]]);
            if (is_ultrametric(m, false)) {
                FiniteUltraSpace space(labels, m);
                if (seen.insert(canonical_form(space)).second) out.push_back(std::move(space));
            }
            std::size_t p = 0;
            while (p < digits.size() && ++digits[p] == values.size()) digits[p++] = 0;
            if (p == digits.size()) break;
        }
    }
    return out;
}

InvariantViolation::InvariantViolation(std::size_t step, std::size_t i, std::size_t j)
    : std::runtime_error("InvariantViolation step=" + std::to_string(step) + " pair=" + std::to_string(i) + "," +
                         std::to_string(j)),
      step_(step), i_(i), j_(j) {}

namespace {

void check_row(const PartialIsometry& p, std::size_t step) {
    const std::size_t n = p.left.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        if (f::delta(p.left[n], p.left[i]) != maps::nabla(p.right[n], p.right[i])) throw InvariantViolation(step, i, n);
}

Scale random_radius(const RangeSet& pool, Rng& rng) { return gen_scale(pool, rng, false); }

}  // namespace

void verify(const PartialIsometry& p) {
    if (p.left.size() != p.right.size()) throw InvariantViolation(0, p.left.size(), p.right.size());
    for (std::size_t i = 0; i < p.left.size(); ++i)
        for (std::size_t j = i + 1; j < p.left.size(); ++j)
            if (f::delta(p.left[i], p.left[j]) != maps::nabla(p.right[i], p.right[j]))
                throw InvariantViolation(p.left.size(), i, j);
}

PartialIsometry back_and_forth(const TrialConfig& config) {
    PartialIsometry p;
    std::size_t step = 0;
    for (std::size_t round = 0; round < config.trials; ++round) {
        Rng rng = make_rng(trial_seed(config.seed, "back-and-forth", round));
        try {
            // forth
            const f::SupportMap x = p.left.empty() || coin(rng)
                                        ? gen_support_map(config, rng)
                                        : perturb(pick(p.left, rng), random_radius(config.scale_pool, rng),
                                                  config.scale_pool, rng);
            std::vector<Scale> targets;
            for (const auto& l : p.left) targets.push_back(f::delta(x, l));
            p.right.push_back(maps::one_point_extension(p.right, targets));
            p.left.push_back(x);
            check_row(p, step++);

            // back
            const maps::CantorFunction y =
                coin(rng) ? gen_cantor_function(config, rng)
                          : perturb(pick(p.right, rng), random_radius(config.scale_pool, rng), config.scale_pool, rng);
            targets.clear();
            for (const auto& r : p.right) targets.push_back(maps::nabla(y, r));
            p.left.push_back(f::one_point_extension(p.left, targets));
            p.right.push_back(y);
            check_row(p, step++);
        } catch (const Inconsistent& e) {
            throw InvariantViolation(step, e.i(), e.j());
        }
    }
    verify(p);
    return p;
}

DemoReport ultrahomogeneity_demo(const TrialConfig& config, std::size_t subset_size) {
    DemoReport report;
    Rng left_rng = make_rng(trial_seed(config.seed, "homogeneity-subset", 0));
    std::vector<f::SupportMap> left;
    for (std::size_t attempts = 0; left.size() < subset_size && attempts < 1000 * (subset_size + 1); ++attempts) {
        auto x = gen_support_map(config, left_rng);
        if (std::find(left.begin(), left.end(), x) == left.end()) left.push_back(std::move(x));
    }
    if (left.size() < subset_size) {
        report.message = "could not draw " + std::to_string(subset_size) + " distinct points";
        return report;
    }

    // Isometric copy of A anchored at an unrelated base point.
    Rng copy_rng = make_rng(trial_seed(config.seed, "homogeneity-copy", 0));
    std::vector<f::SupportMap> right;
    auto mirror = [](const std::vector<f::SupportMap>& from, const f::SupportMap& x,
                     const std::vector<f::SupportMap>& onto) {
        std::vector<Scale> targets;
        for (const auto& a : from) targets.push_back(f::delta(x, a));
        return f::one_point_extension(onto, targets);
    };
    auto check_new = [&](std::size_t step) {
        const std::size_t n = left.size() - 1;
        for (std::size_t i = 0; i < n; ++i)
            if (f::delta(left[n], left[i]) != f::delta(right[n], right[i])) throw InvariantViolation(step, i, n);
    };
    try {
        for (std::size_t k = 0; k < left.size(); ++k) {
            if (k == 0) {
                right.push_back(gen_support_map(config, copy_rng));
            } else {
                std::vector<f::SupportMap> prefix(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(k));
                right.push_back(mirror(prefix, left[k], right));
            }
        }
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = i + 1; j < left.size(); ++j)
                if (f::delta(left[i], left[j]) != f::delta(right[i], right[j])) throw InvariantViolation(0, i, j);

        std::size_t step = 0;
        for (std::size_t round = 0; round < config.trials; ++round) {
            Rng rng = make_rng(trial_seed(config.seed, "homogeneity-extend", round));
            const f::SupportMap x = gen_support_map(config, rng);
            const f::SupportMap mx = mirror(left, x, right);
            left.push_back(x);
            right.push_back(mx);
            check_new(++step);
            const f::SupportMap y = gen_support_map(config, rng);
            const f::SupportMap my = mirror(right, y, left);
            left.push_back(my);
            right.push_back(y);
            check_new(++step);
        }
    } catch (const InvariantViolation& e) {
        report.message = e.what();
        report.final_size = left.size();
        return report;
    } catch (const Inconsistent& e) {
        report.message = e.what();
        report.final_size = left.size();
        return report;
    }
    report.success = true;
    report.final_size = left.size();
    report.message = "isometry extended to " + std::to_string(left.size()) + " pairs";
    return report;
}

Model parse_model(std::string_view name) {
    if (name == "f") return Model::F;
    if (name == "maps") return Model::Maps;
    if (name == "cpum") return Model::Cpum;
    if (name == "gh") return Model::Gh;
    throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected f, maps, cpum or gh)");
}

std::string_view model_name(Model model) {
    switch (model) {
        case Model::F: return "f";
        case Model::Maps: return "maps";
        case Model::Cpum: return "cpum";
        case Model::Gh: return "gh";
    }
    return "?";
}

std::string PropertyResult::line() const {
    std::string out = ref + " " + name + (passed ? " PASS" : " FAIL") + " trials=" + std::to_string(trials);
    if (!passed) out += " seed=" + std::to_string(failing_seed) + " counterexample=" + counterexample;
    return out;
}

bool Report::passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string Report::str() const {
    std::string out = header + "\n";
    for (const auto& r : results) out += r.line() + "\n";
    return out;
}

Report run_back_and_forth(const TrialConfig& config) {
    Report report;
    report.header = "# back-and-forth seed=" + std::to_string(config.seed) + " trials=" + std::to_string(config.trials) +
                    " rng=" + std::string(kRngName);
    PropertyResult r{"back-and-forth", "partial-isometry", true, config.trials, 0, "none"};
    try {
        const PartialIsometry p = back_and_forth(config);
        (void)p;
    } catch (const InvariantViolation& e) {
        r.passed = false;
        r.failing_seed = config.seed;
        r.counterexample = std::string("step-") + std::to_string(e.step());
    }
    report.results.push_back(std::move(r));
    return report;
}

}  // namespace umu::harness
