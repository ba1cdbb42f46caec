#pragma once

#include "umu/model_cpum.hpp"
#include "umu/model_f.hpp"
#include "umu/model_gh.hpp"
#include "umu/model_maps.hpp"
#include "umu/scales.hpp"
#include "umu/umspace.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umu::harness {

/// {0, 1/4, 1/3, 1/2, 2/3, 1, 2}
RangeSet default_pool();

struct TrialConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t max_points = 6;
    std::size_t max_support = 5;
    RangeSet scale_pool = default_pool();
    /// Random members of a piece compared against each nearest-point witness.
    std::size_t petal_members = 100;
    /// Where counterexamples are written; empty disables dumping.
    std::string counterexample_dir;

    /// Throws std::invalid_argument when a bound is violated.
    void validate() const;
};

using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64+splitmix64";

/// Independent stream for (seed, stream name, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::string_view stream, std::uint64_t trial);
inline Rng make_rng(std::uint64_t derived_seed) { return Rng(derived_seed); }

// Generators. Sizes are bounded by the config; values come from the pool.
Scale gen_scale(const RangeSet& pool, Rng& rng, bool positive);
RangeSet gen_range(const RangeSet& pool, Rng& rng);
/// Random n×n ultrametric matrix sampled as a random dendrogram.
ScaleMatrix gen_ultrametric(std::size_t n, const RangeSet& pool, Rng& rng, bool pseudo);
FiniteUltraSpace gen_space(const TrialConfig& config, Rng& rng);
FiniteUltraSpace gen_space(std::size_t points, const RangeSet& pool, Rng& rng);
f::SupportMap gen_support_map(const TrialConfig& config, Rng& rng);
f::SupportMap gen_support_map(const RangeSet& pool, std::size_t max_support, Rng& rng);
maps::CantorFunction gen_cantor_function(const TrialConfig& config, Rng& rng);
maps::CantorFunction gen_cantor_function(const RangeSet& pool, std::size_t max_cells, Rng& rng);
cpum::CantorPseudoUltrametric gen_cpum(const TrialConfig& config, Rng& rng);
cpum::CantorPseudoUltrametric gen_cpum(const RangeSet& pool, std::size_t max_cells, Rng& rng);

// Perturbations: a random element within distance t of the input, new
// values drawn from the pool.
f::SupportMap perturb(const f::SupportMap& x, const Scale& t, const RangeSet& pool, Rng& rng);
maps::CantorFunction perturb(const maps::CantorFunction& x, const Scale& t, const RangeSet& pool, Rng& rng);
cpum::CantorPseudoUltrametric perturb(const cpum::CantorPseudoUltrametric& x, const Scale& t, const RangeSet& pool,
                                      Rng& rng);
FiniteUltraSpace perturb(const FiniteUltraSpace& x, const Scale& t, const RangeSet& pool, std::size_t max_points,
                         Rng& rng);

/// Every isometry class of spaces with at most `max_points` points and
/// distances in `scales`, one representative each.
std::vector<FiniteUltraSpace> exhaustive_corpus(std::size_t max_points, const RangeSet& scales);

/// Index-paired elements of the two models with equal mutual distances.
struct PartialIsometry {
    std::vector<f::SupportMap> left;
    std::vector<maps::CantorFunction> right;
};

class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(std::size_t step, std::size_t i, std::size_t j);
    std::size_t step() const { return step_; }
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }

private:
    std::size_t step_, i_, j_;
};

/// Alternates forth (new model-f point mirrored into model-maps) and back
/// steps, config.trials rounds. Throws InvariantViolation.
PartialIsometry back_and_forth(const TrialConfig& config);

/// Throws InvariantViolation at the first pair whose distances differ.
void verify(const PartialIsometry& pairing);

struct DemoReport {
    bool success = false;
    std::size_t final_size = 0;
    std::string message;
};

/// Pairs a random finite A ⊂ model-f with an isometric copy built from a
/// different seed, then extends the pairing by config.trials back-and-forth
/// rounds inside model-f.
DemoReport ultrahomogeneity_demo(const TrialConfig& config, std::size_t subset_size);

enum class Model { F, Maps, Cpum, Gh };
Model parse_model(std::string_view name);
std::string_view model_name(Model model);

struct PropertyResult {
    std::string ref;
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::uint64_t failing_seed = 0;
    std::string counterexample;  // file path, or "none"

    /// `<ref> <name> PASS|FAIL trials=<n> [seed=<s> counterexample=<file>]`
    std::string line() const;
};

struct Report {
    std::string header;
    std::vector<PropertyResult> results;

    bool passed() const;
    std::string str() const;
};

/// Every property of one model at config.trials trials each.
Report run_axiom_suite(Model model, const TrialConfig& config);

/// Property ids of a model, in report order.
std::vector<std::string> property_names(Model model);
/// One property by name, with an explicit trial count.
PropertyResult run_property(Model model, std::string_view name, const TrialConfig& config, std::size_t trials);

/// Oracle agreement on every pair from the exhaustive corpus with
/// |X| + |Y| ≤ 6.
PropertyResult check_oracle_exhaustive(const TrialConfig& config, const RangeSet& scales);

/// Report header plus one line per back_and_forth seed.
Report run_back_and_forth(const TrialConfig& config);

}  // namespace umu::harness
