#include "test_util.hpp"
#include "umu/harness.hpp"
#include "umu/model_f.hpp"

#include <gtest/gtest.h>

using namespace umu;
using umu::f::SupportMap;
using umu::testing::R;
using umu::testing::S;

namespace {
// Largest key where the maps differ, by scanning the union of supports.
Scale delta_oracle(const SupportMap& a, const SupportMap& b) {
    Scale best;
    for (const auto* m : {&a, &b})
        for (const auto& [k, v] : m->support())
            if (a(k) != b(k)) best = max(best, k);
    return best;
}
}  // namespace

TEST(FSupportMap, DropsZeroValuesRejectsZeroKey) {
    const SupportMap m{{S("1"), 0}, {S("1/2"), 3}};
    EXPECT_EQ(m.support().size(), 1u);
    EXPECT_EQ(m(S("1/2")), 3u);
    EXPECT_EQ(m(S("1")), 0u);
    EXPECT_EQ(m(S("0")), 0u);
    EXPECT_THROW((SupportMap{{S("0"), 1}}), std::invalid_argument);
}

TEST(FDelta, Examples) {
    EXPECT_EQ(f::delta({{S("1"), 2}, {S("1/2"), 1}}, {{S("1"), 2}, {S("1/2"), 3}}), S("1/2"));
    const SupportMap x{{S("1/3"), 4}};
    EXPECT_EQ(f::delta(x, x), S("0"));
    EXPECT_EQ(f::delta({{S("1"), 2}}, {}), S("1"));
}

TEST(FDelta, AgreesWithScanOracle) {
    harness::TrialConfig c;
    harness::Rng rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = harness::gen_support_map(c, rng);
        const auto b = trial % 2 ? harness::gen_support_map(c, rng) : harness::perturb(a, S("1/2"), c.scale_pool, rng);
        EXPECT_EQ(f::delta(a, b), delta_oracle(a, b));
    }
}

TEST(FTrace, Examples) {
    EXPECT_EQ(f::trace({}), R({"0"}));
    EXPECT_EQ(f::trace({{S("1"), 2}, {S("1/2"), 1}}), R({"0", "1/2", "1"}));
    EXPECT_EQ(f::trace({{S("3/4"), 5}}), R({"0", "3/4"}));
}

TEST(FInPetal, Examples) {
    EXPECT_TRUE(f::in_petal({}, R({"0"})));
    EXPECT_TRUE(f::in_petal({{S("1"), 1}}, R({"0", "1"})));
    EXPECT_FALSE(f::in_petal({{S("1"), 1}, {S("1/3"), 2}}, R({"0", "1"})));
}

TEST(FPetalDistance, Examples) {
    auto r = f::petal_distance({{S("1"), 1}, {S("1/3"), 2}}, R({"0", "1"}));
    EXPECT_EQ(r.distance, S("1/3"));
    EXPECT_EQ(r.witness, (SupportMap{{S("1"), 1}}));

    const SupportMap member{{S("1"), 7}};
    r = f::petal_distance(member, R({"0", "1", "2"}));
    EXPECT_EQ(r.distance, S("0"));
    EXPECT_EQ(r.witness, member);

    r = f::petal_distance({{S("1"), 1}}, R({"0"}));
    EXPECT_EQ(r.distance, S("1"));
    EXPECT_EQ(r.witness, SupportMap{});
}

TEST(FApproximateIntoPetal, Examples) {
    const SupportMap x{{S("1"), 1}, {S("1/8"), 2}};
    auto a = f::approximate_into_petal(x, R({"0"}), S("1/2"));
    EXPECT_EQ(a.range, R({"0", "1"}));
    EXPECT_EQ(a.element, (SupportMap{{S("1"), 1}}));
    EXPECT_EQ(f::delta(x, a.element), S("1/8"));

    a = f::approximate_into_petal({}, R({"0", "1/3"}), S("1"));
    EXPECT_EQ(a.range, R({"0", "1/3"}));
    EXPECT_TRUE(a.element.empty());

    const SupportMap y{{S("1"), 1}};
    a = f::approximate_into_petal(y, R({"0", "1"}), S("1/2"));
    EXPECT_EQ(a.range, R({"0", "1"}));
    EXPECT_EQ(a.element, y);

    EXPECT_THROW(f::approximate_into_petal(y, R({"0"}), S("0")), std::invalid_argument);
}

TEST(FOnePointExtension, Examples) {
    EXPECT_EQ(f::one_point_extension({SupportMap{}}, {S("1/2")}), (SupportMap{{S("1/2"), 1}}));

    const SupportMap one{{S("1"), 1}};
    const auto theta = f::one_point_extension({SupportMap{}, one}, {S("1/2"), S("1")});
    EXPECT_EQ(theta, (SupportMap{{S("1/2"), 1}}));
    EXPECT_EQ(f::delta(theta, {}), S("1/2"));
    EXPECT_EQ(f::delta(theta, one), S("1"));

    EXPECT_EQ(f::one_point_extension({one}, {S("0")}), one);
}

TEST(FOnePointExtension, EmptyAnchorsAndErrors) {
    EXPECT_TRUE(f::one_point_extension({}, {}).empty());
    EXPECT_THROW(f::one_point_extension({SupportMap{}}, {}), std::invalid_argument);
    const SupportMap one{{S("1"), 1}};
    // d(anchors) = 1 but both targets 1/2.
    EXPECT_THROW(f::one_point_extension({SupportMap{}, one}, {S("1/2"), S("1/2")}), Inconsistent);
    // Zero target pins θ to anchor 0, so the second target must be 1.
    EXPECT_THROW(f::one_point_extension({SupportMap{}, one}, {S("0"), S("2")}), Inconsistent);
}

TEST(FOnePointExtension, AnchorsSharingAKey) {
    // Distinct values at the same key; θ must pick a third value there.
    const SupportMap a{{S("1"), 1}}, b{{S("1"), 2}};
    const auto theta = f::one_point_extension({SupportMap{}, a, b}, {S("1"), S("1"), S("1")});
    EXPECT_EQ(f::delta(theta, {}), S("1"));
    EXPECT_EQ(f::delta(theta, a), S("1"));
    EXPECT_EQ(f::delta(theta, b), S("1"));
}

TEST(FEmbedSpace, Examples) {
    auto e = f::embed_space(FiniteUltraSpace::single("x"));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_TRUE(e.at("x").empty());

    e = f::embed_space(umu::testing::space({"p", "q"}, {{"1"}}));
    EXPECT_TRUE(e.at("p").empty());
    EXPECT_EQ(e.at("q"), (SupportMap{{S("1"), 1}}));

    const auto x = umu::testing::three_point();
    e = f::embed_space(x);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(f::delta(e.at(x.labels()[i]), e.at(x.labels()[j])), x(i, j));
}

TEST(FEmbedSpace, RandomSpacesUpToTenPoints) {
    harness::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = harness::gen_space(10, harness::default_pool(), rng);
        const auto e = f::embed_space(x);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                ASSERT_EQ(f::delta(e.at(x.labels()[i]), e.at(x.labels()[j])), x(i, j));
    }
}

TEST(FCoveringPetal, Examples) {
    EXPECT_EQ(f::covering_petal({SupportMap{}}), R({"0"}));
    EXPECT_EQ(f::covering_petal({{{S("1"), 1}}, {{S("1/2"), 3}}}), R({"0", "1/2", "1"}));
    EXPECT_EQ(f::covering_petal({}), R({"0"}));
}
