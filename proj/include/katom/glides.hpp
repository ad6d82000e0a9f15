#pragma once

/**
 * @file glides.hpp
 * @brief Mesonic glides, kaons and glide polynomials.
 *
 * The nonzero positions n_1 < ... < n_l of a cut 1..n_l into blocks
 * n_{j-1}+1 .. n_j. A mesonic glide fills block j with a colored segment
 * whose sum minus its red count is a_{n_j}, whose leftmost nonzero entry is
 * black and whose last entry is nonzero. Positions past n_l stay zero.
 */

#include <algorithm>
#include <cstddef>
#include <vector>

#include "katom/composition.hpp"
#include "katom/polynomial.hpp"

namespace katom {

struct GlideBlock {
    std::size_t start = 1;  // 1-based, inclusive
    std::size_t end = 1;    // 1-based, inclusive
    int target = 1;

    std::size_t length() const { return end - start + 1; }
};

inline std::vector<GlideBlock> glide_blocks(const WeakComposition& a) {
    std::vector<GlideBlock> blocks;
    std::size_t previous = 0;
    for (std::size_t pos : nonzero_positions(a)) {
        blocks.push_back({previous + 1, pos, a.at1(pos)});
        previous = pos;
    }
    return blocks;
}

/// Colored segments for one block, lexicographic on (value, color).
inline std::vector<std::vector<KompositionEntry>> enumerate_block_fillings(const GlideBlock& block) {
    if (block.start == 0 || block.start > block.end || block.target < 1) {
        throw std::invalid_argument("glide block needs 1 <= start <= end and target >= 1");
    }
    const std::size_t len = block.length();
    std::vector<std::vector<KompositionEntry>> out;
    std::vector<KompositionEntry> segment(len);

    // `effective` is the running sum minus red count; every entry contributes
    // value - [red] >= 0, so the search is bounded by the target.
    auto fill = [&](auto&& self, std::size_t i, int effective, bool seen_nonzero) -> void {
        if (i == len) {
            if (effective == block.target && segment.back().value != 0) out.push_back(segment);
            return;
        }
        const int remaining = block.target - effective;
        for (int v = 0; v <= remaining + 1; ++v) {
            for (Color color : {Color::Black, Color::Red}) {
                if (color == Color::Red && (v == 0 || !seen_nonzero)) continue;
                const int contribution = v - (color == Color::Red ? 1 : 0);
                if (contribution > remaining) continue;
                segment[i] = {v, color};
                self(self, i + 1, effective + contribution, seen_nonzero || v != 0);
            }
        }
    };
    fill(fill, 0, 0, false);
    std::sort(out.begin(), out.end());
    return out;
}

/// All mesonic glides of a, in lexicographic order on (value, color).
inline std::vector<Komposition> enumerate_mesonic_glides(const WeakComposition& a) {
    const auto blocks = glide_blocks(a);
    std::vector<std::vector<std::vector<KompositionEntry>>> per_block;
    per_block.reserve(blocks.size());
    for (const auto& block : blocks) per_block.push_back(enumerate_block_fillings(block));

    std::vector<Komposition> out;
    std::vector<KompositionEntry> current(a.size());
    auto combine = [&](auto&& self, std::size_t j) -> void {
        if (j == blocks.size()) {
            out.emplace_back(current);
            return;
        }
        for (const auto& segment : per_block[j]) {
            std::copy(segment.begin(), segment.end(), current.begin() + (blocks[j].start - 1));
            self(self, j + 1);
        }
    };
    combine(combine, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Kaon: Σ over mesonic glides b of β^{ex(b)} x^b.
inline SparsePolynomial kaon(const WeakComposition& a) {
    SparsePolynomial p(a.size());
    for (const auto& b : enumerate_mesonic_glides(a)) {
        p.add_term(Monomial{b.values().entries(), excess(b)}, 1);
    }
    return p;
}

/// Glide polynomial: Σ of kaons over b ≥ a with b⁺ = a⁺.
inline SparsePolynomial glide_polynomial(const WeakComposition& a) {
    SparsePolynomial p(a.size());
    for (const auto& b : dominating_set(a)) p += kaon(b);
    return p;
}

}  // namespace katom
