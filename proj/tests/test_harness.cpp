#include "test_util.hpp"
#include "umu/harness.hpp"
#include "umu/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace umu;
using namespace umu::harness;
using umu::testing::S;

TEST(TrialConfig, Validation) {
    TrialConfig c;
    EXPECT_NO_THROW(c.validate());
    c.trials = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = TrialConfig{};
    c.max_points = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = TrialConfig{};
    c.max_support = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = TrialConfig{};
    c.scale_pool = RangeSet{S("1")};
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Generators, DeterministicPerSeedAndTrial) {
    const TrialConfig c;
    for (const char* stream : {"a", "b"}) {
        Rng r1 = make_rng(trial_seed(1, stream, 0)), r2 = make_rng(trial_seed(1, stream, 0));
        EXPECT_EQ(gen_support_map(c, r1), gen_support_map(c, r2));
        EXPECT_EQ(gen_cantor_function(c, r1), gen_cantor_function(c, r2));
        EXPECT_EQ(gen_cpum(c, r1), gen_cpum(c, r2));
        EXPECT_EQ(gen_space(c, r1), gen_space(c, r2));
    }
    EXPECT_NE(trial_seed(1, "a", 0), trial_seed(1, "a", 1));
    EXPECT_NE(trial_seed(1, "a", 0), trial_seed(2, "a", 0));
    EXPECT_NE(trial_seed(1, "a", 0), trial_seed(1, "b", 0));
}

TEST(Generators, RespectBounds) {
    TrialConfig c;
    c.max_points = 7;
    c.max_support = 4;
    Rng rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = gen_space(c, rng);
        EXPECT_GE(x.size(), 1u);
        EXPECT_LE(x.size(), c.max_points);
        EXPECT_TRUE(is_ultrametric(x.dist(), false));
        EXPECT_TRUE(spectrum(x).subset_of(c.scale_pool));

        const auto f = gen_support_map(c, rng);
        EXPECT_LE(f.support().size(), c.max_support);
        EXPECT_TRUE(f::trace(f).subset_of(c.scale_pool));

        const auto g = gen_cantor_function(c, rng);
        EXPECT_TRUE(maps::trace(g).contains(Scale()));
        EXPECT_TRUE(maps::trace(g).subset_of(c.scale_pool));

        const auto d = gen_cpum(c, rng);
        EXPECT_TRUE(is_ultrametric(d.dist(), true));
    }
}

TEST(Perturb, StaysWithinDistance) {
    const TrialConfig c;
    Rng rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const Scale t = gen_scale(c.scale_pool, rng, true);
        const auto f = gen_support_map(c, rng);
        EXPECT_LE(f::delta(f, perturb(f, t, c.scale_pool, rng)), t);
        const auto g = gen_cantor_function(c, rng);
        EXPECT_LE(maps::nabla(g, perturb(g, t, c.scale_pool, rng)), t);
        const auto d = gen_cpum(c, rng);
        EXPECT_LE(cpum::ud(d, perturb(d, t, c.scale_pool, rng)), t);
    }
}

TEST(ExhaustiveCorpus, CountsSmallClasses) {
    // Distances in {1}: one class per size. Distances in {1/2, 1}: sizes 1..3
    // give 1, 2, 3 classes.
    EXPECT_EQ(exhaustive_corpus(4, RangeSet{S("1")}).size(), 4u);
    EXPECT_EQ(exhaustive_corpus(3, RangeSet{S("1/2"), S("1")}).size(), 6u);
}

TEST(BackAndForth, Examples) {
    TrialConfig c;
    c.trials = 0;
    auto p = back_and_forth(c);
    EXPECT_TRUE(p.left.empty());
    EXPECT_TRUE(p.right.empty());

    c.trials = 1;
    p = back_and_forth(c);
    EXPECT_EQ(p.left.size(), 2u);
    EXPECT_EQ(p.right.size(), 2u);
    EXPECT_NO_THROW(verify(p));

    c.trials = 20;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        c.seed = seed;
        EXPECT_NO_THROW(verify(back_and_forth(c)));
    }
}

TEST(BackAndForth, VerifyDetectsBrokenPairing) {
    TrialConfig c;
    c.trials = 3;
    auto p = back_and_forth(c);
    p.right.back() = maps::CantorFunction{{"0", S("2")}, {"1", S("0")}};
    p.right.front() = maps::CantorFunction();
    EXPECT_THROW(verify(p), InvariantViolation);
}

TEST(UltrahomogeneityDemo, Examples) {
    TrialConfig c;
    c.trials = 10;
    for (std::size_t size : {0u, 1u, 4u}) {
        const auto r = ultrahomogeneity_demo(c, size);
        EXPECT_TRUE(r.success) << r.message;
    }
}

TEST(Model, Names) {
    for (auto m : {Model::F, Model::Maps, Model::Cpum, Model::Gh}) EXPECT_EQ(parse_model(model_name(m)), m);
    EXPECT_THROW(parse_model("nope"), std::invalid_argument);
}

TEST(AxiomSuite, OneTrialAttemptsEveryProperty) {
    TrialConfig c;
    c.trials = 1;
    for (auto m : {Model::F, Model::Maps, Model::Cpum, Model::Gh}) {
        const Report r = run_axiom_suite(m, c);
        EXPECT_TRUE(r.passed()) << r.str();
        EXPECT_EQ(r.results.size(), property_names(m).size());
        for (const auto& res : r.results) EXPECT_EQ(res.trials, 1u);
    }
}

TEST(AxiomSuite, ByteIdenticalReports) {
    TrialConfig c;
    c.trials = 20;
    c.seed = 99;
    for (auto m : {Model::F, Model::Maps, Model::Cpum, Model::Gh})
        EXPECT_EQ(run_axiom_suite(m, c).str(), run_axiom_suite(m, c).str());
}

TEST(AxiomSuite, GhReportHasOracleLine) {
    TrialConfig c;
    c.trials = 2;
    const std::string text = run_axiom_suite(Model::Gh, c).str();
    EXPECT_NE(text.find("oracle-agreement PASS"), std::string::npos) << text;
}

TEST(PropertyResult, LineFormat) {
    PropertyResult r{"P3", "piece-intersection", true, 12, 0, ""};
    EXPECT_EQ(r.line(), "P3 piece-intersection PASS trials=12");
    r.passed = false;
    r.failing_seed = 77;
    r.counterexample = "dir/x.json";
    EXPECT_EQ(r.line(), "P3 piece-intersection FAIL trials=12 seed=77 counterexample=dir/x.json");
}

TEST(RunProperty, UnknownNameThrows) {
    EXPECT_THROW(run_property(Model::F, "no-such-property", TrialConfig{}, 1), std::invalid_argument);
}
