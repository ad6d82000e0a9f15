#include <gtest/gtest.h>

#include "katom/glides.hpp"
#include "katom/skyline.hpp"
#include "oracles.hpp"

using namespace katom;

namespace {

SkylineFilling F(WeakComposition shape, std::map<std::size_t, std::vector<Box>> rows) {
    return SkylineFilling::from_rows(shape, rows);
}

}  // namespace

TEST(Skyline, RepresentationBounds) {
    EXPECT_THROW(F({0, 0, 1}, {{3, {{4}}}}), std::invalid_argument);
    EXPECT_THROW(F({0, 1}, {{2, {{}}}}), std::invalid_argument);
    EXPECT_THROW(F({0, 2}, {{2, {{2}}}}), std::invalid_argument);
    EXPECT_THROW(F({1}, {{1, {{1, 1}}}}), std::invalid_argument);
    const auto t = F({0, 0, 1, 2}, {{3, {{2, 3}}}, {4, {{4}, {3, 4}}}});
    EXPECT_EQ(t.box(3, 1), (Box{3, 2}));
    EXPECT_EQ(t.anchor(4, 2), 4);
    EXPECT_EQ(t.total_entries(), 5);
    EXPECT_EQ(t.free_count(), 2);
}

TEST(Skyline, Semistandard) {
    EXPECT_TRUE(is_semistandard(F({0, 0, 2, 2}, {{3, {{3}, {3}}}, {4, {{4}, {4}}}})));
    EXPECT_TRUE(is_semistandard(F({0, 0, 2, 2}, {{3, {{3}, {3}}}, {4, {{4}, {2}}}})));
    EXPECT_FALSE(is_semistandard(F({0, 1}, {{2, {{1}}}})));
    // column repeat
    EXPECT_FALSE(is_semistandard(F({0, 0, 1, 1}, {{3, {{3}}}, {4, {{4, 3}}}})));
    // row must decrease: {3} to the right of {4,2} breaks min >= right anchor
    EXPECT_FALSE(is_semistandard(F({0, 0, 0, 2}, {{4, {{4, 2}, {3}}}})));
}

TEST(Skyline, TripleRule) {
    // gamma = 3 above alpha = 3 with beta = 4: gamma in [alpha, beta]
    EXPECT_FALSE(satisfies_triple_rule(F({0, 0, 2, 2}, {{3, {{3}, {2}}}, {4, {{4}, {3}}}})));
    // gamma below beta in a strictly shorter row
    EXPECT_FALSE(satisfies_triple_rule(F({0, 1, 0, 2}, {{2, {{2}}}, {4, {{4}, {1}}}})));
    EXPECT_TRUE(satisfies_triple_rule(F({0, 1, 0, 2}, {{2, {{2}}}, {4, {{4}, {3}}}})));
    // equal lengths with gamma below: not constrained
    EXPECT_TRUE(satisfies_triple_rule(F({0, 0, 2, 2}, {{3, {{3}, {3}}}, {4, {{4}, {1}}}})));
}

TEST(Skyline, FreeEntryPlacement) {
    const auto t = F({0, 0, 2, 2}, {{3, {{3}, {3}}}, {4, {{4}, {2}}}});
    // a free 2 in column 1 cannot go to row 3 (right neighbour anchor 3 > 2)
    EXPECT_EQ(free_entry_row(t, 1, 2), 4u);
    EXPECT_EQ(free_entry_row(t, 2, 1), 4u);
    EXPECT_EQ(free_entry_row(t, 2, 2), 3u);
    EXPECT_EQ(free_entry_row(t, 2, 4), std::nullopt);
    EXPECT_FALSE(satisfies_free_placement(F({0, 0, 2, 2}, {{3, {{3, 2}, {3}}}, {4, {{4}, {2}}}})));
    EXPECT_TRUE(satisfies_free_placement(F({0, 0, 2, 2}, {{3, {{3}, {3}}}, {4, {{4, 2}, {2}}}})));
}

TEST(Skyline, QuasiSemistandard) {
    EXPECT_TRUE(is_quasi_semistandard(F({0, 1}, {{2, {{1}}}})));
    EXPECT_TRUE(is_quasi_semistandard(F({0, 0, 1, 2}, {{3, {{3}}}, {4, {{4}, {4}}}})));
    // leftmost anchors read 3 then 2 going up: not decreasing from the top
    EXPECT_FALSE(is_quasi_semistandard(F({0, 0, 1, 2}, {{3, {{3}}}, {4, {{2}, {1}}}})));
    EXPECT_TRUE(is_quasi_semistandard(F({0, 0, 1, 2}, {{3, {{2}}}, {4, {{3}, {3}}}})));
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& a : all_compositions(n, 2)) {
            for (const auto& t : enumerate_fillings(a, FillingVariant::Atom)) {
                EXPECT_TRUE(is_quasi_semistandard(t)) << t.to_compact();
            }
        }
    }
}

TEST(Skyline, MesonHighest) {
    EXPECT_TRUE(is_meson_highest(F({0, 0, 1, 2}, {{3, {{3}}}, {4, {{4}, {4}}}})));
    EXPECT_TRUE(is_meson_highest(F({0, 0, 1, 2}, {{3, {{3, 2}}}, {4, {{4}, {4, 3}}}})));
    EXPECT_TRUE(is_meson_highest(SkylineFilling(WeakComposition{0, 0}, {{}, {}})));
    // a lone 1 with no larger entry weakly to its right
    EXPECT_FALSE(is_meson_highest(F({0, 0, 1, 2}, {{3, {{3, 1}}}, {4, {{4}, {4}}}})));
}

TEST(Skyline, QuasiYamanouchi) {
    EXPECT_FALSE(is_quasi_yamanouchi(F({0, 0, 1, 2}, {{3, {{3, 1}}}, {4, {{4}, {4, 3}}}})));
    EXPECT_TRUE(is_quasi_yamanouchi(F({0, 0, 2, 2}, {{3, {{3}, {3}}}, {4, {{4}, {2}}}})));
    EXPECT_TRUE(is_quasi_yamanouchi(SkylineFilling(WeakComposition{}, {})));
}

TEST(Skyline, Weight) {
    EXPECT_EQ(weight(F({0, 0, 1, 2}, {{3, {{3}}}, {4, {{4}, {4, 3}}}})), (WeakComposition{0, 0, 2, 2}));
    EXPECT_EQ(weight(SkylineFilling(WeakComposition{0, 0, 0}, {{}, {}, {}})), (WeakComposition{0, 0, 0}));
    EXPECT_EQ(weight(F({0, 0, 1, 2}, {{3, {{3, 2, 1}}}, {4, {{4}, {4, 3, 2}}}})),
              (WeakComposition{1, 2, 2, 2}));
}

TEST(Skyline, EnumerationSmallCases) {
    const auto empty = enumerate_fillings({0, 0}, FillingVariant::Atom);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty.front().total_entries(), 0);
    EXPECT_EQ(enumerate_A2P({0, 0}), empty);
    EXPECT_EQ(enumerate_Q2F({0, 0}), empty);
    const auto two = enumerate_fillings({2}, FillingVariant::Atom);
    EXPECT_EQ(two, (std::vector<SkylineFilling>{F({2}, {{1, {{1}, {1}}}})}));
}

// The skeleton-plus-free-entries enumeration against a brute force over all
// set-valued fillings with entries in [1, i] on row i.
TEST(Skyline, EnumerationMatchesBruteForce) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& a : all_compositions(n, 2)) {
            EXPECT_EQ(enumerate_fillings(a, FillingVariant::Atom), oracle::fillings(a, is_semistandard))
                << a.to_string();
            EXPECT_EQ(enumerate_fillings(a, FillingVariant::Quasi),
                      oracle::fillings(a, is_quasi_semistandard))
                << a.to_string();
        }
    }
}

TEST(Skyline, FillingInvariants) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& a : all_compositions(n, 2)) {
            const auto atoms = enumerate_fillings(a, FillingVariant::Atom);
            const auto quasi = enumerate_fillings(a, FillingVariant::Quasi);
            for (const auto& t : quasi) {
                EXPECT_TRUE(satisfies_column_distinct(t));
                EXPECT_EQ(weight(t).sum(), t.total_entries());
            }
            for (const auto& t : enumerate_A2P(a)) EXPECT_TRUE(std::binary_search(atoms.begin(), atoms.end(), t));
            for (const auto& t : enumerate_Q2F(a)) EXPECT_TRUE(std::binary_search(quasi.begin(), quasi.end(), t));
            if (is_weakly_decreasing_nonzero(a)) {
                std::vector<std::vector<Box>> rows(n);
                for (std::size_t i = 1; i <= n; ++i) rows[i - 1].assign(a.at1(i), Box{static_cast<int>(i)});
                const SkylineFilling t(a, rows);
                EXPECT_TRUE(is_semistandard(t) && is_meson_highest(t)) << a.to_string();
                EXPECT_TRUE(is_quasi_semistandard(t) && is_quasi_yamanouchi(t)) << a.to_string();
            }
        }
    }
}

TEST(Skyline, SmallShapeTableauCounts) {
    const auto a2p = enumerate_A2P({0, 0, 1, 2});
    ASSERT_EQ(a2p.size(), 8u);
    std::vector<int> free;
    for (const auto& t : a2p) free.push_back(t.free_count());
    std::sort(free.begin(), free.end());
    EXPECT_EQ(free, (std::vector<int>{0, 1, 2, 2, 3, 3, 4, 5}));
    EXPECT_EQ(enumerate_Q2F({0, 0, 1, 2}).size(), 6u);
}

// (0,0,2,2) has two tableaux in each family that are easy to miss; both satisfy
// every condition and are needed for the expansion identities (the kaon and
// glide expansions are unique).
TEST(Skyline, SquareShapeIncludesEasilyMissedTableaux) {
    const std::vector<SkylineFilling> easily_missed{
        F({0, 0, 2, 2}, {{3, {{3}, {3, 2}}}, {4, {{4, 2}, {1}}}}),
        F({0, 0, 2, 2}, {{3, {{3}, {3, 2}}}, {4, {{4, 2, 1}, {1}}}}),
    };
    const auto a2p = enumerate_A2P({0, 0, 2, 2});
    const auto q2f = enumerate_Q2F({0, 0, 2, 2});
    EXPECT_EQ(a2p.size(), 13u);
    EXPECT_EQ(q2f.size(), 9u);
    for (const auto& t : easily_missed) {
        EXPECT_TRUE(is_semistandard(t) && is_meson_highest(t));
        EXPECT_TRUE(is_quasi_semistandard(t) && is_quasi_yamanouchi(t));
        EXPECT_TRUE(std::binary_search(a2p.begin(), a2p.end(), t));
    }
}

TEST(Skyline, LascouxAtomMatchesDemazureOperators) {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& a : all_compositions(n, 2)) {
            EXPECT_EQ(lascoux_atom(a), oracle::operator_lascoux_atom(a)) << a.to_string();
        }
    }
    for (const auto& a : all_compositions(5, 1)) {
        EXPECT_EQ(lascoux_atom(a), oracle::operator_lascoux_atom(a)) << a.to_string();
    }
}

TEST(Skyline, LascouxAtomBasics) {
    EXPECT_EQ(lascoux_atom({0, 0}), SparsePolynomial::constant(2, 1));
    EXPECT_EQ(quasi_lascoux({0, 0, 0}), SparsePolynomial::constant(3, 1));
    const WeakComposition a{0, 0, 2, 2};
    SparsePolynomial anchors_only(4);
    for (const auto& t : enumerate_fillings(a, FillingVariant::Atom)) {
        if (t.free_count() == 0) anchors_only.add_term(Monomial{weight(t).entries(), 0}, 1);
    }
    EXPECT_EQ(specialize_beta(lascoux_atom(a), 0), anchors_only);
}

TEST(Skyline, AtomExpansionInstance) {
    const WeakComposition a{0, 0, 1, 2};
    SparsePolynomial rhs(4);
    for (const auto& t : enumerate_A2P(a)) rhs += scale_monomial(kaon(weight(t)), 1, t.total_entries() - a.sum());
    EXPECT_EQ(lascoux_atom(a), rhs);

    SparsePolynomial glides(4);
    const std::vector<WeakComposition> weights{{0, 0, 1, 2}, {0, 0, 2, 2}, {0, 1, 2, 2},
                                               {0, 2, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}};
    for (int k = 0; k < 6; ++k) glides += scale_monomial(glide_polynomial(weights[k]), 1, k);
    EXPECT_EQ(quasi_lascoux(a), glides);
}

TEST(Skyline, UnionIdentity) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& a : all_compositions(n, 2)) {
            SparsePolynomial atoms(n);
            std::vector<SkylineFilling> pieces;
            for (const auto& b : dominating_set(a)) {
                atoms += lascoux_atom(b);
                auto part = enumerate_fillings(b, FillingVariant::Atom);
                pieces.insert(pieces.end(), part.begin(), part.end());
            }
            EXPECT_EQ(quasi_lascoux(a), atoms) << a.to_string();

            std::vector<SkylineFilling> relocated;
            for (const auto& t : enumerate_fillings(a, FillingVariant::Quasi)) {
                const auto moved = relocate_rows(t);
                EXPECT_TRUE(dominates(moved.shape(), a));
                EXPECT_EQ(nonzero_parts(moved.shape()), nonzero_parts(a));
                relocated.push_back(moved);
            }
            std::sort(relocated.begin(), relocated.end());
            std::sort(pieces.begin(), pieces.end());
            EXPECT_EQ(relocated, pieces) << a.to_string();
        }
    }
}

TEST(Skyline, TextRendering) {
    const auto t = F({0, 2}, {{2, {{2, 1}, {1}}}});
    EXPECT_EQ(t.to_string(), "2 | 2*1 1*\n1 |\n");
    EXPECT_EQ(t.to_compact(), "2:[2,1][1]");
    EXPECT_EQ(SkylineFilling(WeakComposition{0}, {{}}).to_compact(), "(empty)");
}
