#include <gtest/gtest.h>

#include "katom/glides.hpp"
#include "oracles.hpp"

using namespace katom;

namespace {

std::vector<std::string> render(const std::vector<std::vector<KompositionEntry>>& segments) {
    std::vector<std::string> out;
    for (const auto& s : segments) out.push_back(Komposition(s).to_string());
    return out;
}

std::vector<std::string> render(const std::vector<Komposition>& ks) {
    std::vector<std::string> out;
    for (const auto& k : ks) out.push_back(k.to_string());
    return out;
}

SparsePolynomial term(std::vector<int> x, int beta) {
    SparsePolynomial p(x.size());
    p.add_term(Monomial{std::move(x), beta}, 1);
    return p;
}

}  // namespace

TEST(Glides, BlockFillings) {
    EXPECT_EQ(render(enumerate_block_fillings({1, 2, 2})),
              (std::vector<std::string>{"0,2", "1,1", "1,2r", "2,1r"}));
    EXPECT_EQ(render(enumerate_block_fillings({3, 4, 1})), (std::vector<std::string>{"0,1", "1,1r"}));
    for (int t = 1; t <= 4; ++t) {
        EXPECT_EQ(render(enumerate_block_fillings({2, 2, t})), (std::vector<std::string>{std::to_string(t)}));
    }
    EXPECT_THROW(enumerate_block_fillings({2, 1, 1}), std::invalid_argument);
}

TEST(Glides, MesonicGlidesOfTwoBlockShape) {
    const auto glides = render(enumerate_mesonic_glides({0, 2, 0, 1}));
    std::vector<std::string> expected{"0,2,0,1", "1,1,0,1", "1,2r,0,1", "2,1r,0,1",
                                      "0,2,1,1r", "1,1,1,1r", "1,2r,1,1r", "2,1r,1,1r"};
    std::sort(expected.begin(), expected.end(), [](const std::string& l, const std::string& r) {
        return parse_komposition(l) < parse_komposition(r);
    });
    EXPECT_EQ(glides, expected);
}

TEST(Glides, WorkedExampleIsAGlide) {
    const auto glides = enumerate_mesonic_glides({0, 3, 0, 0, 4});
    EXPECT_TRUE(std::find(glides.begin(), glides.end(), parse_komposition("2,2r,1,3r,2r")) != glides.end());
}

TEST(Glides, ZeroShape) {
    EXPECT_EQ(render(enumerate_mesonic_glides({0, 0})), (std::vector<std::string>{"0,0"}));
    EXPECT_EQ(kaon({0, 0, 0}), SparsePolynomial::constant(3, 1));
    EXPECT_EQ(glide_polynomial({0, 0}), SparsePolynomial::constant(2, 1));
}

TEST(Glides, MatchesBruteForce) {
    for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& a : all_compositions(n, 2)) {
            if (a.sum() > 5) continue;
            EXPECT_EQ(enumerate_mesonic_glides(a), oracle::mesonic_glides(a)) << a.to_string();
        }
    }
}

TEST(Glides, GlideInvariants) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& a : all_compositions(n, 3)) {
            const auto glides = enumerate_mesonic_glides(a);
            std::size_t product = 1;
            for (const auto& block : glide_blocks(a)) product *= enumerate_block_fillings(block).size();
            EXPECT_EQ(glides.size(), product) << a.to_string();
            for (const auto& b : glides) {
                EXPECT_TRUE(dominates(b.values(), a)) << b.to_string();
                EXPECT_EQ(b.values().sum() - excess(b), a.sum()) << b.to_string();
            }
            const auto p = kaon(a);
            EXPECT_EQ(p.coefficient(Monomial{a.entries(), 0}), 1) << a.to_string();
            EXPECT_FALSE(specialize_beta(p, 0).is_zero());
        }
    }
}

TEST(Glides, KaonGolden) {
    const auto expected = term({0, 2, 0, 1}, 0) + term({1, 1, 0, 1}, 0) + term({1, 2, 0, 1}, 1) +
                          term({2, 1, 0, 1}, 1) + term({0, 2, 1, 1}, 1) + term({1, 1, 1, 1}, 1) +
                          term({1, 2, 1, 1}, 2) + term({2, 1, 1, 1}, 2);
    EXPECT_EQ(kaon({0, 2, 0, 1}), expected);
    EXPECT_EQ(kaon({2}), term({2}, 0));
}

TEST(Glides, GlidePolynomial) {
    EXPECT_EQ(glide_polynomial({0, 1}), kaon({1, 0}) + kaon({0, 1}));
    // β = 0 part only sees excess-free glides, so every monomial has x-degree |a|
    const auto low = specialize_beta(glide_polynomial({0, 2, 0, 1}), 0);
    EXPECT_FALSE(low.is_zero());
    for (const auto& [m, c] : low.terms()) {
        EXPECT_EQ(m.total_degree(), 3);
        EXPECT_GT(c, 0);
    }
}
