#pragma once

/**
 * @file expansions.hpp
 * @brief Coefficient tables of the kaon expansion of Lascoux atoms and the
 *        glide expansion of quasiLascoux polynomials.
 *
 * Coefficients are read off the tableau sets: the entry for weight b counts
 * the tableaux of weight b and carries β^{|b| - |a|}.
 */

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "katom/composition.hpp"
#include "katom/glides.hpp"
#include "katom/polynomial.hpp"
#include "katom/skyline.hpp"

namespace katom {

struct ExpansionTerm {
    std::int64_t multiplicity = 0;
    int beta_power = 0;

    friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

struct ExpansionTable {
    Family base = Family::A2P;
    WeakComposition source;
    std::map<WeakComposition, ExpansionTerm> coefficients;  // ordered lexicographically by b

    /// Σ_b m·β^k as a β-polynomial.
    SparsePolynomial beta_sum() const {
        SparsePolynomial p(0);
        for (const auto& [b, term] : coefficients) {
            p.add_term(Monomial{{}, term.beta_power}, term.multiplicity);
        }
        return p;
    }

    /// Σ_b m·t^k.
    Integer evaluate_at(const Integer& t) const {
        const auto p = specialize_beta(beta_sum(), t);
        return p.coefficient(Monomial{{}, 0});
    }
};

inline ExpansionTable tabulate(Family base, const WeakComposition& a,
                               const std::vector<SkylineFilling>& tableaux) {
    ExpansionTable table{base, a, {}};
    for (const auto& t : tableaux) {
        const WeakComposition b = weight(t);
        const int k = t.total_entries() - a.sum();
        auto [it, inserted] = table.coefficients.try_emplace(b, ExpansionTerm{0, k});
        if (it->second.beta_power != k) {
            throw std::logic_error("tableaux of weight " + b.to_string() +
                                   " carry different β powers");
        }
        it->second.multiplicity += 1;
    }
    return table;
}

/// Q_b^a(β) for every b, from Ā2P̄(a).
inline ExpansionTable a2p_expansion(const WeakComposition& a) {
    return tabulate(Family::A2P, a, enumerate_A2P(a));
}

/// M_b^a(β) for every b, from Q̄2F̄(a).
inline ExpansionTable q2f_expansion(const WeakComposition& a) {
    return tabulate(Family::Q2F, a, enumerate_Q2F(a));
}

/// Σ_b m·β^k·basis(b) over a table.
template <typename BasisFn>
SparsePolynomial expand(const ExpansionTable& table, BasisFn&& basis) {
    SparsePolynomial p(table.source.size());
    for (const auto& [b, term] : table.coefficients) {
        p += scale_monomial(basis(b), term.multiplicity, term.beta_power);
    }
    return p;
}

/// Ā_a == Σ_b Q_b^a(β) P̄_b, as an exact polynomial identity.
inline bool verify_a2p_identity(const WeakComposition& a) {
    return lascoux_atom(a) == expand(a2p_expansion(a), kaon);
}

/// Q̄_a == Σ_b M_b^a(β) F̄_b.
inline bool verify_q2f_identity(const WeakComposition& a) {
    return quasi_lascoux(a) == expand(q2f_expansion(a), glide_polynomial);
}

struct AlternatingSums {
    Integer q_sum;
    Integer m_sum;

    friend bool operator==(const AlternatingSums&, const AlternatingSums&) = default;
};

/// (Σ_b Q_b^a(-1), Σ_b M_b^a(-1)).
inline AlternatingSums alternating_sums(const WeakComposition& a) {
    return {a2p_expansion(a).evaluate_at(-1), q2f_expansion(a).evaluate_at(-1)};
}

}  // namespace katom
