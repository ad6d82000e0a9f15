#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse polynomials in x_1..x_n and β with arbitrary-precision
 *        integer coefficients.
 *
 * Only the operations the expansion identities need are provided: sums,
 * scaling by c·β^k and evaluation of β at an integer. Terms are kept in
 * graded-lexicographic order (total degree, then β-exponent, then
 * x-exponents), which is also the order of every serialized form.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "katom/composition.hpp"

namespace katom {

using Integer = boost::multiprecision::cpp_int;

struct Monomial {
    std::vector<int> x;
    int beta = 0;

    int total_degree() const { return std::accumulate(x.begin(), x.end(), beta); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct GradedLexOrder {
    bool operator()(const Monomial& l, const Monomial& r) const {
        const int dl = l.total_degree();
        const int dr = r.total_degree();
        if (dl != dr) return dl < dr;
        if (l.beta != r.beta) return l.beta < r.beta;
        return l.x < r.x;
    }
};

class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Integer, GradedLexOrder>;

    explicit SparsePolynomial(std::size_t variable_count = 0) : n_(variable_count) {}

    /// The constant polynomial c.
    static SparsePolynomial constant(std::size_t variable_count, const Integer& c) {
        SparsePolynomial p(variable_count);
        p.add_term(Monomial{std::vector<int>(variable_count, 0), 0}, c);
        return p;
    }

    /// c·β^k·x^exponents
    static SparsePolynomial monomial(const WeakComposition& exponents, int beta_power,
                                     const Integer& c = 1) {
        SparsePolynomial p(exponents.size());
        p.add_term(Monomial{exponents.entries(), beta_power}, c);
        return p;
    }

    std::size_t variable_count() const noexcept { return n_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Monomial& m, const Integer& c) {
        if (m.x.size() != n_) {
            throw std::invalid_argument("monomial has " + std::to_string(m.x.size()) +
                                        " x-exponents, polynomial has " + std::to_string(n_) +
                                        " variables");
        }
        if (m.beta < 0) throw std::invalid_argument("negative β-exponent");
        for (int e : m.x) {
            if (e < 0) throw std::invalid_argument("negative x-exponent");
        }
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePolynomial& operator+=(const SparsePolynomial& q) {
        require_same_ring(q);
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial p, const SparsePolynomial& q) {
        p += q;
        return p;
    }

    friend SparsePolynomial operator-(const SparsePolynomial& p) { return scale_monomial(p, -1, 0); }

    friend SparsePolynomial operator-(SparsePolynomial p, const SparsePolynomial& q) {
        p += -q;
        return p;
    }

    /// Every term multiplied by c·β^beta_power.
    friend SparsePolynomial scale_monomial(const SparsePolynomial& p, const Integer& c,
                                           int beta_power) {
        if (beta_power < 0) throw std::invalid_argument("negative β power in scale_monomial");
        SparsePolynomial out(p.n_);
        if (c == 0) return out;
        for (const auto& [m, coeff] : p.terms_) {
            out.terms_.emplace(Monomial{m.x, m.beta + beta_power}, coeff * c);
        }
        return out;
    }

    /// β ↦ t, exactly.
    friend SparsePolynomial specialize_beta(const SparsePolynomial& p, const Integer& t) {
        SparsePolynomial out(p.n_);
        for (const auto& [m, c] : p.terms_) {
            Integer factor = boost::multiprecision::pow(t, static_cast<unsigned>(m.beta));
            out.add_term(Monomial{m.x, 0}, c * factor);
        }
        return out;
    }

    friend bool operator==(const SparsePolynomial& p, const SparsePolynomial& q) {
        p.require_same_ring(q);
        return p.terms_ == q.terms_;
    }

    /// Plain-text form, e.g. "x2^2*x4 + b*x1*x2^2*x4".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer magnitude = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;

            std::vector<std::string> factors;
            if (m.beta == 1) factors.emplace_back("b");
            if (m.beta > 1) factors.push_back("b^" + std::to_string(m.beta));
            for (std::size_t i = 0; i < m.x.size(); ++i) {
                if (m.x[i] == 0) continue;
                std::string f = "x" + std::to_string(i + 1);
                if (m.x[i] > 1) f += "^" + std::to_string(m.x[i]);
                factors.push_back(std::move(f));
            }
            std::string body;
            if (magnitude != 1 || factors.empty()) body = magnitude.str();
            for (const auto& f : factors) {
                if (!body.empty()) body += '*';
                body += f;
            }
            out += body;
        }
        return out;
    }

    std::string to_latex() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer magnitude = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string body;
            if (m.beta == 1) body += "\\beta";
            if (m.beta > 1) body += "\\beta^{" + std::to_string(m.beta) + "}";
            for (std::size_t i = 0; i < m.x.size(); ++i) {
                if (m.x[i] == 0) continue;
                body += "x_{" + std::to_string(i + 1) + "}";
                if (m.x[i] > 1) body += "^{" + std::to_string(m.x[i]) + "}";
            }
            if (magnitude != 1 || body.empty()) body = magnitude.str() + body;
            out += body;
        }
        return out;
    }

private:
    void require_same_ring(const SparsePolynomial& q) const {
        if (n_ != q.n_) {
            throw std::invalid_argument("polynomials live in different rings: " +
                                        std::to_string(n_) + " vs " + std::to_string(q.n_) +
                                        " variables");
        }
    }

    std::size_t n_;
    TermMap terms_;
};

inline bool equals(const SparsePolynomial& p, const SparsePolynomial& q) { return p == q; }

/// Univariate β-polynomial Σ c_k β^k, as a polynomial in zero x-variables.
inline SparsePolynomial beta_polynomial(const std::vector<Integer>& coefficients) {
    SparsePolynomial p(0);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        p.add_term(Monomial{{}, static_cast<int>(k)}, coefficients[k]);
    }
    return p;
}

}  // namespace katom
