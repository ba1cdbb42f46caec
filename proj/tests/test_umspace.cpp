#include "test_util.hpp"
#include "umu/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace umu;
using umu::testing::R;
using umu::testing::S;
using umu::testing::space;
using umu::testing::three_point;

TEST(Validate, AcceptsSpecExamples) {
    EXPECT_NO_THROW(space({"p", "q"}, {{"1"}}));
    EXPECT_NO_THROW(three_point());
}

TEST(Validate, ReportsViolatingTriple) {
    try {
        space({"a", "b", "c"}, {{"1/2", "1"}, {"1/4"}});
        FAIL() << "expected NotUltrametric";
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::NotUltrametric);
        // d(a,c) = 1 > d(a,b) ∨ d(b,c) = 1/2
        EXPECT_EQ(e.i(), 0u);
        EXPECT_EQ(e.j(), 2u);
        EXPECT_EQ(e.k(), 1u);
    }
}

TEST(Validate, RejectsZeroAsymmetricAndDiagonal) {
    ScaleMatrix m(2);
    try {
        FiniteUltraSpace({"a", "b"}, m);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::NotPositive);
    }
    m(0, 1) = S("1");
    m(1, 0) = S("1/2");
    try {
        FiniteUltraSpace({"a", "b"}, m);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::NotSymmetric);
    }
    ScaleMatrix d(1);
    d(0, 0) = S("1");
    EXPECT_THROW(FiniteUltraSpace({"a"}, d), ValidationError);
    EXPECT_THROW(space({"a", "a"}, {{"1"}}), ValidationError);
    EXPECT_THROW(FiniteUltraSpace({}, ScaleMatrix(0)), std::invalid_argument);
}

TEST(Spectrum, Examples) {
    EXPECT_EQ(spectrum(FiniteUltraSpace::single()), R({"0"}));
    EXPECT_EQ(spectrum(three_point()), R({"0", "1/2", "1"}));
    EXPECT_EQ(spectrum(space({"a", "b"}, {{"3/4"}})), R({"0", "3/4"}));
}

TEST(Quotient, Examples) {
    const auto q = quotient(three_point(), S("1/2"));
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q.labels(), (std::vector<std::string>{"a+b", "c"}));
    EXPECT_EQ(q(0, 1), S("1"));
    EXPECT_EQ(quotient(three_point(), S("0")), three_point());
    EXPECT_EQ(quotient(space({"a", "b"}, {{"3/4"}}), S("3/4")).size(), 1u);
}

TEST(Dendrogram, ReproducesDistances) {
    harness::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = harness::gen_space(8, harness::default_pool(), rng);
        const Dendrogram tree = dendrogram(x);
        EXPECT_EQ(tree.leaf_count(), x.size());
        EXPECT_EQ(distances_from(tree, x.size()), x.dist());
        // Child scales strictly below the parent.
        auto check = [](auto&& self, const Dendrogram& node) -> void {
            for (const auto& c : node.children) {
                if (!c.is_leaf()) EXPECT_LT(c.scale, node.scale);
                self(self, c);
            }
        };
        check(check, tree);
    }
}

TEST(CanonicalForm, Examples) {
    const auto x = three_point();
    const auto permuted = space({"c", "a", "b"}, {{"1", "1"}, {"1/2"}});
    EXPECT_EQ(canonical_form(x), canonical_form(permuted));
    EXPECT_NE(canonical_form(space({"a", "b"}, {{"1/2"}})), canonical_form(space({"a", "b"}, {{"1"}})));
    EXPECT_NE(canonical_form(x), canonical_form(space({"a", "b", "c"}, {{"1", "1"}, {"1"}})));
}

namespace {
FiniteUltraSpace permute(const FiniteUltraSpace& x, std::vector<std::size_t> perm) {
    ScaleMatrix m(x.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < x.size(); ++i) {
        labels.push_back("r" + std::to_string(perm[i]));
        for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = x(perm[i], perm[j]);
    }
    return FiniteUltraSpace(labels, m);
}
}  // namespace

TEST(CanonicalForm, InvariantUnderRandomPermutations) {
    harness::Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = harness::gen_space(7, harness::default_pool(), rng);
        std::vector<std::size_t> perm(x.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(x), canonical_form(permute(x, perm)));
    }
}

TEST(CanonicalForm, SeparatesNonIsometricCorpus) {
    // The exhaustive corpus is deduplicated by canonical form; check that no
    // two members share a sorted distance multiset AND are isometric by a
    // brute-force permutation search.
    const auto corpus = harness::exhaustive_corpus(4, R({"0", "1/2", "1"}));
    for (std::size_t a = 0; a < corpus.size(); ++a)
        for (std::size_t b = a + 1; b < corpus.size(); ++b) {
            if (corpus[a].size() != corpus[b].size()) continue;
            std::vector<std::size_t> perm(corpus[a].size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            bool iso = false;
            do {
                bool ok = true;
                for (std::size_t i = 0; i < perm.size() && ok; ++i)
                    for (std::size_t j = 0; j < perm.size() && ok; ++j) ok = corpus[a](i, j) == corpus[b](perm[i], perm[j]);
                iso = iso || ok;
            } while (!iso && std::next_permutation(perm.begin(), perm.end()));
            EXPECT_FALSE(iso) << canonical_form(corpus[a]);
        }
}

TEST(Quotient, Properties) {
    harness::Rng rng(3);
    const RangeSet pool = harness::default_pool();
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = harness::gen_space(8, pool, rng);
        const Scale e1 = harness::gen_scale(pool, rng, false);
        const Scale e2 = max(e1, harness::gen_scale(pool, rng, false));
        EXPECT_EQ(canonical_form(quotient(quotient(x, e1), e2)), canonical_form(quotient(x, e2)));
        std::vector<Scale> above;
        const RangeSet full = spectrum(x);
        for (const auto& s : full.elements())
            if (s > e1) above.push_back(s);
        EXPECT_EQ(spectrum(quotient(x, e1)), RangeSet(above));
    }
}

TEST(Hausdorff, Examples) {
    const auto x = three_point();
    const std::vector<std::string> all{"a", "b", "c"};
    EXPECT_EQ(hausdorff(x, all, all), S("0"));
    const auto pq = space({"p", "q"}, {{"1"}});
    EXPECT_EQ(hausdorff(pq, std::vector<std::string>{"p"}, std::vector<std::string>{"q"}), S("1"));
    EXPECT_EQ(hausdorff(x, std::vector<std::string>{"a"}, std::vector<std::string>{"b", "c"}), S("1"));
    EXPECT_THROW(hausdorff(x, std::vector<std::string>{}, all), EmptySubset);
}

TEST(Hausdorff, StrongTriangleOverSubsets) {
    harness::Rng rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = harness::gen_space(7, harness::default_pool(), rng);
        auto subset = [&] {
            std::vector<std::string> out;
            for (const auto& l : x.labels())
                if (rng() % 2) out.push_back(l);
            if (out.empty()) out.push_back(x.labels()[rng() % x.size()]);
            return out;
        };
        const auto a = subset(), b = subset(), c = subset();
        EXPECT_LE(hausdorff(x, a, c), max(hausdorff(x, a, b), hausdorff(x, b, c)));
        EXPECT_EQ(hausdorff(x, a, b), hausdorff(x, b, a));
    }
}
