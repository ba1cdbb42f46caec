#include "test_util.hpp"
#include "umu/cantor.hpp"
#include "umu/harness.hpp"
#include "umu/model_maps.hpp"

#include <gtest/gtest.h>

using namespace umu;
using umu::maps::CantorFunction;
using umu::testing::R;
using umu::testing::S;

namespace {
// Values on every depth-`depth` cell; the maximum over disagreeing cells.
Scale nabla_on_grid(const CantorFunction& f, const CantorFunction& g, std::size_t depth) {
    Scale best;
    for (std::size_t bits = 0; bits < (std::size_t{1} << depth); ++bits) {
        std::string cell;
        for (std::size_t k = depth; k-- > 0;) cell.push_back((bits >> k) & 1 ? '1' : '0');
        if (f.at(cell) != g.at(cell)) best = max(best, max(f.at(cell), g.at(cell)));
    }
    return best;
}

std::size_t max_depth(const CantorFunction& f) {
    std::size_t d = 0;
    for (const auto& [k, v] : f.cells()) d = std::max(d, k.size());
    return d;
}
}  // namespace

TEST(MapsCantorFunction, DefaultIsAllZero) {
    const CantorFunction z;
    ASSERT_EQ(z.cells().size(), 1u);
    EXPECT_EQ(z.cells().begin()->first, "");
    EXPECT_EQ(z.at("0101"), S("0"));
}

TEST(MapsCantorFunction, RejectsBadCodesAndMissingZero) {
    EXPECT_THROW((CantorFunction{{"0", S("1")}}), cantor::CodeError);
    EXPECT_THROW((CantorFunction{{"0", S("0")}, {"0", S("1")}, {"00", S("1")}, {"1", S("1")}}), cantor::CodeError);
    EXPECT_THROW((CantorFunction{{"0", S("0")}, {"2", S("1")}}), cantor::CodeError);
    EXPECT_THROW((CantorFunction{{"0", S("1")}, {"1", S("1/2")}}), std::invalid_argument);
    EXPECT_THROW(CantorFunction(CantorFunction::Cells{}), std::exception);
}

TEST(MapsCantorFunction, CanonicalizesEqualSiblings) {
    const CantorFunction f{{"00", S("1")}, {"01", S("1")}, {"10", S("0")}, {"11", S("0")}};
    EXPECT_EQ(f, (CantorFunction{{"0", S("1")}, {"1", S("0")}}));
    const CantorFunction z{{"0", S("0")}, {"1", S("0")}};
    EXPECT_EQ(z, CantorFunction());
}

TEST(MapsNabla, Examples) {
    EXPECT_EQ(maps::nabla({{"0", S("1/2")}, {"1", S("0")}}, {{"0", S("1/4")}, {"1", S("0")}}), S("1/2"));
    const CantorFunction f{{"00", S("1")}, {"01", S("1/2")}, {"1", S("0")}};
    EXPECT_EQ(maps::nabla(f, f), S("0"));
    EXPECT_EQ(maps::nabla({{"0", S("0")}, {"1", S("1")}}, {{"0", S("0")}, {"1", S("1/3")}}), S("1"));
}

TEST(MapsNabla, AgreesWithUniformGrid) {
    harness::TrialConfig c;
    harness::Rng rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = harness::gen_cantor_function(c, rng);
        const auto g = harness::gen_cantor_function(c, rng);
        const std::size_t depth = std::max(max_depth(f), max_depth(g));
        if (depth > 12) continue;
        EXPECT_EQ(maps::nabla(f, g), nabla_on_grid(f, g, depth));
    }
}

TEST(MapsTrace, Examples) {
    EXPECT_EQ(maps::trace(CantorFunction()), R({"0"}));
    EXPECT_EQ(maps::trace({{"0", S("1/2")}, {"1", S("0")}}), R({"0", "1/2"}));
    EXPECT_EQ(maps::trace({{"00", S("1")}, {"01", S("1/2")}, {"1", S("0")}}), R({"0", "1/2", "1"}));
}

TEST(MapsPetalDistance, Examples) {
    auto r = maps::petal_distance({{"0", S("1/2")}, {"1", S("0")}}, R({"0"}));
    EXPECT_EQ(r.distance, S("1/2"));
    EXPECT_EQ(r.witness, CantorFunction());

    const CantorFunction member{{"0", S("1")}, {"1", S("0")}};
    r = maps::petal_distance(member, R({"0", "1"}));
    EXPECT_EQ(r.distance, S("0"));
    EXPECT_EQ(r.witness, member);

    const CantorFunction f{{"00", S("1")}, {"01", S("1/3")}, {"1", S("0")}};
    r = maps::petal_distance(f, R({"0", "1"}));
    EXPECT_EQ(r.distance, S("1/3"));
    EXPECT_EQ(r.witness, (CantorFunction{{"00", S("1")}, {"01", S("0")}, {"1", S("0")}}));
    EXPECT_EQ(maps::nabla(f, r.witness), S("1/3"));
}

TEST(MapsOnePointExtension, Examples) {
    const CantorFunction zero;
    EXPECT_EQ(maps::one_point_extension({zero}, {S("1/2")}), (CantorFunction{{"0", S("1/2")}, {"1", S("0")}}));

    const CantorFunction g{{"0", S("1")}, {"1", S("0")}};
    const auto theta = maps::one_point_extension({zero, g}, {S("1/2"), S("1")});
    EXPECT_EQ(maps::nabla(theta, zero), S("1/2"));
    EXPECT_EQ(maps::nabla(theta, g), S("1"));

    EXPECT_EQ(maps::one_point_extension({g}, {S("0")}), g);
}

TEST(MapsOnePointExtension, ErrorsAndEmptyAnchors) {
    EXPECT_EQ(maps::one_point_extension({}, {}), CantorFunction());
    const CantorFunction zero;
    const CantorFunction g{{"0", S("1")}, {"1", S("0")}};
    EXPECT_THROW(maps::one_point_extension({zero, g}, {S("1/4"), S("1/4")}), Inconsistent);
    EXPECT_THROW(maps::one_point_extension({zero}, {S("1"), S("1")}), std::invalid_argument);
}

TEST(MapsOnePointExtension, RepeatedExtensionKeepsAllDistances) {
    // Many points at a common distance force repeated splits of one cell.
    std::vector<CantorFunction> points{CantorFunction()};
    for (int k = 0; k < 12; ++k) {
        points.push_back(maps::one_point_extension(points, std::vector<Scale>(points.size(), S("1"))));
        for (std::size_t i = 0; i + 1 < points.size(); ++i) ASSERT_EQ(maps::nabla(points.back(), points[i]), S("1"));
    }
}

TEST(MapsPetal, CoveringAndApproximation) {
    EXPECT_TRUE(maps::in_petal(CantorFunction(), R({"0"})));
    EXPECT_EQ(maps::covering_petal({{{"0", S("1/2")}, {"1", S("0")}}}), R({"0", "1/2"}));
    const CantorFunction f{{"0", S("1/8")}, {"1", S("0")}};
    const auto a = maps::approximate_into_petal(f, R({"0"}), S("1/2"));
    EXPECT_EQ(a.range, R({"0"}));
    EXPECT_EQ(a.element, CantorFunction());
    EXPECT_EQ(maps::nabla(f, a.element), S("1/8"));
    EXPECT_THROW(maps::approximate_into_petal(f, R({"0"}), S("0")), std::invalid_argument);
}
