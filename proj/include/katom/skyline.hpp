#pragma once

/**
 * @file skyline.hpp
 * @brief Set-valued skyline fillings and the tableau sets built from them.
 *
 * Rows are indexed bottom-up from 1 and are left-justified, so the column
 * of a box is its position inside its row. Each box holds a nonempty set of
 * positive integers; its maximum is the anchor, the rest are free entries.
 *
 * Semistandard fillings satisfy:
 *   (S.1) no column repeats an entry;
 *   (S.2) the smallest entry of a box is >= the anchor of the box to its right;
 *   (S.3) the triple rule on anchors (see satisfies_triple_rule);
 *   (S.4) each free entry sits in the box of its column with the smallest
 *         anchor that keeps (S.2);
 *   (S.5) the leftmost anchor of row i is i.
 * Quasi fillings replace (S.5) by: the leftmost anchor of row i is at most i
 * and the leftmost column's anchors decrease from top to bottom.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "katom/composition.hpp"
#include "katom/polynomial.hpp"

namespace katom {

/// Entries of one box, strictly decreasing; front() is the anchor.
using Box = std::vector<int>;

struct Cell {
    std::size_t row = 0;     // 1-based
    std::size_t column = 0;  // 1-based

    friend bool operator==(const Cell&, const Cell&) = default;
};

class SkylineFilling {
public:
    SkylineFilling() = default;

    /// rows[i] is row i+1 (bottom row first). Boxes are canonicalized to
    /// decreasing order; entries of row i must lie in [1, i].
    SkylineFilling(WeakComposition shape, std::vector<std::vector<Box>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (rows_.size() != shape_.size()) {
            throw std::invalid_argument("filling has " + std::to_string(rows_.size()) +
                                        " rows but shape has " + std::to_string(shape_.size()));
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int row_index = static_cast<int>(i + 1);
            if (rows_[i].size() != static_cast<std::size_t>(shape_[i])) {
                throw std::invalid_argument("row " + std::to_string(row_index) + " has " +
                                            std::to_string(rows_[i].size()) + " boxes, shape says " +
                                            std::to_string(shape_[i]));
            }
            for (auto& box : rows_[i]) {
                if (box.empty()) {
                    throw std::invalid_argument("empty box in row " + std::to_string(row_index));
                }
                std::sort(box.begin(), box.end(), std::greater<>{});
                if (std::adjacent_find(box.begin(), box.end()) != box.end()) {
                    throw std::invalid_argument("repeated entry inside a box in row " +
                                                std::to_string(row_index));
                }
                if (box.back() < 1 || box.front() > row_index) {
                    throw std::invalid_argument("entry outside [1," + std::to_string(row_index) +
                                                "] in row " + std::to_string(row_index));
                }
            }
        }
    }

    /// Builds a filling from the nonempty rows only, keyed by 1-based row index.
    static SkylineFilling from_rows(const WeakComposition& shape,
                                    const std::map<std::size_t, std::vector<Box>>& nonempty) {
        std::vector<std::vector<Box>> rows(shape.size());
        for (const auto& [index, boxes] : nonempty) {
            if (index == 0 || index > shape.size()) {
                throw std::invalid_argument("row index " + std::to_string(index) + " out of range");
            }
            rows[index - 1] = boxes;
        }
        return SkylineFilling(shape, std::move(rows));
    }

    const WeakComposition& shape() const noexcept { return shape_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<std::vector<Box>>& rows() const noexcept { return rows_; }
    const std::vector<Box>& row(std::size_t i) const { return rows_.at(i - 1); }
    std::size_t row_length(std::size_t i) const { return rows_.at(i - 1).size(); }
    const Box& box(std::size_t i, std::size_t c) const { return rows_.at(i - 1).at(c - 1); }
    bool has_box(std::size_t i, std::size_t c) const {
        return i >= 1 && i <= rows_.size() && c >= 1 && c <= rows_[i - 1].size();
    }
    int anchor(std::size_t i, std::size_t c) const { return box(i, c).front(); }

    std::size_t column_count() const {
        std::size_t m = 0;
        for (const auto& r : rows_) m = std::max(m, r.size());
        return m;
    }

    /// |T|
    int total_entries() const {
        int total = 0;
        for (const auto& r : rows_) {
            for (const auto& b : r) total += static_cast<int>(b.size());
        }
        return total;
    }

    /// |T| - |shape|
    int free_count() const { return total_entries() - shape_.sum(); }

    /// Sorted distinct entry values.
    std::vector<int> values() const {
        std::set<int> seen;
        for (const auto& r : rows_) {
            for (const auto& b : r) seen.insert(b.begin(), b.end());
        }
        return {seen.begin(), seen.end()};
    }

    /// Cells holding value v, ordered by (column, row).
    std::vector<Cell> occurrences(int v) const {
        std::vector<Cell> out;
        for (std::size_t c = 1; c <= column_count(); ++c) {
            for (std::size_t i = 1; i <= rows_.size(); ++i) {
                if (!has_box(i, c)) continue;
                const auto& b = box(i, c);
                if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back({i, c});
            }
        }
        return out;
    }

    /// Copy with value v inserted into box (i, c).
    SkylineFilling with_entry(Cell cell, int v) const {
        auto rows = rows_;
        rows.at(cell.row - 1).at(cell.column - 1).push_back(v);
        return SkylineFilling(shape_, std::move(rows));
    }

    /// Copy with value v deleted from box (i, c). The box must keep an entry.
    SkylineFilling without_entry(Cell cell, int v) const {
        auto rows = rows_;
        auto& b = rows.at(cell.row - 1).at(cell.column - 1);
        b.erase(std::remove(b.begin(), b.end(), v), b.end());
        return SkylineFilling(shape_, std::move(rows));
    }

    /// Rows printed top to bottom as "i | 4* 4*3", anchors marked with '*'.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = rows_.size(); i >= 1; --i) {
            out += std::to_string(i) + " |";
            for (const auto& b : rows_[i - 1]) {
                out += ' ';
                for (std::size_t k = 0; k < b.size(); ++k) {
                    out += std::to_string(b[k]);
                    if (k == 0) out += '*';
                }
            }
            out += '\n';
        }
        return out;
    }

    /// One-line form of the nonempty rows, top first: "4:[4][4,3] 3:[3,2]".
    std::string to_compact() const {
        std::string out;
        for (std::size_t i = rows_.size(); i >= 1; --i) {
            if (rows_[i - 1].empty()) continue;
            if (!out.empty()) out += ' ';
            out += std::to_string(i) + ':';
            for (const auto& b : rows_[i - 1]) {
                out += '[';
                for (std::size_t k = 0; k < b.size(); ++k) {
                    if (k) out += ',';
                    out += std::to_string(b[k]);
                }
                out += ']';
            }
        }
        return out.empty() ? "(empty)" : out;
    }

    friend bool operator==(const SkylineFilling&, const SkylineFilling&) = default;
    friend auto operator<=>(const SkylineFilling&, const SkylineFilling&) = default;

private:
    WeakComposition shape_;
    std::vector<std::vector<Box>> rows_;
};

/// wt(T)_i = number of occurrences of i.
inline WeakComposition weight(const SkylineFilling& t) {
    std::vector<int> w(t.row_count(), 0);
    for (const auto& r : t.rows()) {
        for (const auto& b : r) {
            for (int v : b) w.at(static_cast<std::size_t>(v - 1)) += 1;
        }
    }
    return WeakComposition(std::move(w));
}

// ---------------------------------------------------------------------------
// Semistandard conditions

inline bool satisfies_column_distinct(const SkylineFilling& t) {
    for (std::size_t c = 1; c <= t.column_count(); ++c) {
        std::set<int> seen;
        for (std::size_t i = 1; i <= t.row_count(); ++i) {
            if (!t.has_box(i, c)) continue;
            for (int v : t.box(i, c)) {
                if (!seen.insert(v).second) return false;
            }
        }
    }
    return true;
}

inline bool satisfies_row_decrease(const SkylineFilling& t) {
    for (std::size_t i = 1; i <= t.row_count(); ++i) {
        for (std::size_t c = 1; c < t.row_length(i); ++c) {
            if (t.box(i, c).back() < t.anchor(i, c + 1)) return false;
        }
    }
    return true;
}

/**
 * Anchors beta (column c) and alpha (column c+1) adjacent in row r, and an
 * anchor gamma either above alpha in column c+1 or below beta in column c.
 * When row r is weakly longer than gamma's row (gamma above) or strictly
 * longer (gamma below), gamma must lie outside [alpha, beta].
 */
inline bool satisfies_triple_rule(const SkylineFilling& t) {
    for (std::size_t r = 1; r <= t.row_count(); ++r) {
        const std::size_t len = t.row_length(r);
        for (std::size_t c = 1; c < len; ++c) {
            const int beta = t.anchor(r, c);
            const int alpha = t.anchor(r, c + 1);
            auto outside = [&](int gamma) { return gamma < alpha || gamma > beta; };
            for (std::size_t above = r + 1; above <= t.row_count(); ++above) {
                if (!t.has_box(above, c + 1)) continue;
                if (len >= t.row_length(above) && !outside(t.anchor(above, c + 1))) return false;
            }
            for (std::size_t below = 1; below < r; ++below) {
                if (!t.has_box(below, c)) continue;
                if (len > t.row_length(below) && !outside(t.anchor(below, c))) return false;
            }
        }
    }
    return true;
}

/**
 * Row of the box in column c that a free entry v must occupy: the box with
 * the smallest anchor exceeding v whose right neighbour (if any) has anchor
 * at most v. Depends on anchors only.
 */
inline std::optional<std::size_t> free_entry_row(const SkylineFilling& t, std::size_t column,
                                                 int v) {
    std::optional<std::size_t> best;
    int best_anchor = 0;
    for (std::size_t i = 1; i <= t.row_count(); ++i) {
        if (!t.has_box(i, column)) continue;
        const int a = t.anchor(i, column);
        if (a <= v) continue;
        if (t.has_box(i, column + 1) && t.anchor(i, column + 1) > v) continue;
        if (!best || a < best_anchor) {
            best = i;
            best_anchor = a;
        }
    }
    return best;
}

inline bool satisfies_free_placement(const SkylineFilling& t) {
    for (std::size_t i = 1; i <= t.row_count(); ++i) {
        for (std::size_t c = 1; c <= t.row_length(i); ++c) {
            const auto& b = t.box(i, c);
            for (std::size_t k = 1; k < b.size(); ++k) {
                if (free_entry_row(t, c, b[k]) != i) return false;
            }
        }
    }
    return true;
}

inline bool satisfies_row_index_anchor(const SkylineFilling& t) {
    for (std::size_t i = 1; i <= t.row_count(); ++i) {
        if (t.row_length(i) > 0 && t.anchor(i, 1) != static_cast<int>(i)) return false;
    }
    return true;
}

inline bool satisfies_quasi_anchor(const SkylineFilling& t) {
    int previous = 0;  // leftmost anchor of the nearest nonempty row below
    for (std::size_t i = 1; i <= t.row_count(); ++i) {
        if (t.row_length(i) == 0) continue;
        const int a = t.anchor(i, 1);
        if (a > static_cast<int>(i) || a <= previous) return false;
        previous = a;
    }
    return true;
}

inline bool is_semistandard(const SkylineFilling& t) {
    return satisfies_column_distinct(t) && satisfies_row_decrease(t) && satisfies_triple_rule(t) &&
           satisfies_free_placement(t) && satisfies_row_index_anchor(t);
}

inline bool is_quasi_semistandard(const SkylineFilling& t) {
    return satisfies_column_distinct(t) && satisfies_row_decrease(t) && satisfies_triple_rule(t) &&
           satisfies_free_placement(t) && satisfies_quasi_anchor(t);
}

// ---------------------------------------------------------------------------
// Highest-weight style conditions

namespace detail {

/// Some occurrence of v at column >= origin.column, in a box other than origin.
inline bool occurs_weakly_right_elsewhere(const SkylineFilling& t, int v, Cell origin) {
    for (const auto& cell : t.occurrences(v)) {
        if (cell.column >= origin.column && !(cell == origin)) return true;
    }
    return false;
}

}  // namespace detail

inline bool is_meson_highest(const SkylineFilling& t) {
    const auto vals = t.values();
    for (std::size_t k = 0; k < vals.size(); ++k) {
        const int i = vals[k];
        const auto row_i = static_cast<std::size_t>(i);
        bool ok = false;
        if (row_i <= t.row_count()) {
            for (std::size_t c = 1; c <= t.row_length(row_i) && !ok; ++c) {
                ok = t.anchor(row_i, c) == i;
            }
        }
        if (!ok && k + 1 < vals.size()) {
            ok = detail::occurs_weakly_right_elsewhere(t, vals[k + 1], t.occurrences(i).front());
        }
        if (!ok) return false;
    }
    return true;
}

inline bool is_quasi_yamanouchi(const SkylineFilling& t) {
    for (int i : t.values()) {
        const Cell leftmost = t.occurrences(i).front();
        const bool own_row_anchor = leftmost.column == 1 &&
                                    leftmost.row == static_cast<std::size_t>(i) &&
                                    t.anchor(leftmost.row, 1) == i;
        if (own_row_anchor) continue;
        if (!detail::occurs_weakly_right_elsewhere(t, i + 1, leftmost)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration

enum class FillingVariant { Atom, Quasi };

namespace detail {

/// Anchor-only fillings passing (S.1)-(S.3) and (S.5) or its quasi variant.
inline std::vector<SkylineFilling> anchor_skeletons(const WeakComposition& a,
                                                    FillingVariant variant) {
    const std::size_t n = a.size();
    std::vector<Cell> cells;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t c = 1; c <= static_cast<std::size_t>(a.at1(i)); ++c) cells.push_back({i, c});
    }
    std::vector<std::vector<Box>> rows(n);
    for (std::size_t i = 1; i <= n; ++i) rows[i - 1].assign(a.at1(i), Box{0});

    std::vector<SkylineFilling> out;
    auto place = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            SkylineFilling t(a, rows);
            const bool anchors_ok = variant == FillingVariant::Atom ? satisfies_row_index_anchor(t)
                                                                    : satisfies_quasi_anchor(t);
            if (anchors_ok && satisfies_triple_rule(t)) out.push_back(std::move(t));
            return;
        }
        const auto [i, c] = cells[k];
        int low = 1;
        int high = static_cast<int>(i);
        if (c > 1) high = std::min(high, rows[i - 1][c - 2][0]);
        if (c == 1 && variant == FillingVariant::Atom) low = high;
        for (int v = low; v <= high; ++v) {
            bool clash = false;
            for (std::size_t below = 1; below < i && !clash; ++below) {
                clash = rows[below - 1].size() >= c && rows[below - 1][c - 1][0] == v;
            }
            if (clash) continue;
            rows[i - 1][c - 1][0] = v;
            self(self, k + 1);
        }
        rows[i - 1][c - 1][0] = 0;
    };
    place(place, 0);
    return out;
}

}  // namespace detail

/**
 * ĀSSF(a) for Atom, Q̄SSF(a) for Quasi, in ascending structural order.
 *
 * Free entries only interact with anchors (through (S.2) and (S.4)), so
 * each column's free set is chosen independently: a value is addable to a
 * column when it is absent from the column and (S.4) names a box for it.
 */
inline std::vector<SkylineFilling> enumerate_fillings(const WeakComposition& a,
                                                      FillingVariant variant) {
    std::vector<SkylineFilling> out;
    for (const auto& skeleton : detail::anchor_skeletons(a, variant)) {
        const std::size_t columns = skeleton.column_count();
        // per column: list of (value, row) placements that are individually admissible
        std::vector<std::vector<std::pair<int, std::size_t>>> options(columns + 1);
        for (std::size_t c = 1; c <= columns; ++c) {
            std::set<int> present;
            int top = 0;
            for (std::size_t i = 1; i <= skeleton.row_count(); ++i) {
                if (!skeleton.has_box(i, c)) continue;
                present.insert(skeleton.anchor(i, c));
                top = std::max(top, skeleton.anchor(i, c));
            }
            for (int v = 1; v < top; ++v) {
                if (present.count(v)) continue;
                if (auto row = free_entry_row(skeleton, c, v)) options[c].push_back({v, *row});
            }
        }

        auto rows = skeleton.rows();
        auto choose = [&](auto&& self, std::size_t c, std::size_t k) -> void {
            if (c > columns) {
                SkylineFilling t(a, rows);
                const bool ok = variant == FillingVariant::Atom ? is_semistandard(t)
                                                                : is_quasi_semistandard(t);
                if (ok) out.push_back(std::move(t));
                return;
            }
            if (k == options[c].size()) {
                self(self, c + 1, 0);
                return;
            }
            self(self, c, k + 1);
            const auto [v, row] = options[c][k];
            auto& b = rows[row - 1][c - 1];
            b.push_back(v);
            self(self, c, k + 1);
            b.pop_back();
        };
        choose(choose, 1, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Ā2P̄(a): semistandard meson-highest fillings.
inline std::vector<SkylineFilling> enumerate_A2P(const WeakComposition& a) {
    auto all = enumerate_fillings(a, FillingVariant::Atom);
    std::erase_if(all, [](const SkylineFilling& t) { return !is_meson_highest(t); });
    return all;
}

/// Q̄2F̄(a): quasi-skyline fillings with the quasiYamanouchi property.
inline std::vector<SkylineFilling> enumerate_Q2F(const WeakComposition& a) {
    auto all = enumerate_fillings(a, FillingVariant::Quasi);
    std::erase_if(all, [](const SkylineFilling& t) { return !is_quasi_yamanouchi(t); });
    return all;
}

/**
 * Moves each nonempty row of a quasi filling to the row named by its
 * leftmost anchor. A quasi filling of shape a lands on a semistandard
 * filling of some shape b >= a with b⁺ = a⁺.
 */
inline SkylineFilling relocate_rows(const SkylineFilling& t) {
    const std::size_t n = t.row_count();
    std::vector<int> shape(n, 0);
    std::vector<std::vector<Box>> rows(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (t.row_length(i) == 0) continue;
        const auto target = static_cast<std::size_t>(t.anchor(i, 1));
        if (!rows[target - 1].empty()) {
            throw std::invalid_argument("two rows share the leftmost anchor " +
                                        std::to_string(target));
        }
        rows[target - 1] = t.row(i);
        shape[target - 1] = static_cast<int>(t.row_length(i));
    }
    return SkylineFilling(WeakComposition(std::move(shape)), std::move(rows));
}

inline SparsePolynomial filling_generating_function(const WeakComposition& a,
                                                    const std::vector<SkylineFilling>& fillings) {
    SparsePolynomial p(a.size());
    for (const auto& t : fillings) {
        p.add_term(Monomial{weight(t).entries(), t.total_entries() - a.sum()}, 1);
    }
    return p;
}

/// Lascoux atom: Σ over ĀSSF(a) of β^{free entries} x^{wt(T)}.
inline SparsePolynomial lascoux_atom(const WeakComposition& a) {
    return filling_generating_function(a, enumerate_fillings(a, FillingVariant::Atom));
}

/// QuasiLascoux polynomial, straight from Q̄SSF(a).
inline SparsePolynomial quasi_lascoux(const WeakComposition& a) {
    return filling_generating_function(a, enumerate_fillings(a, FillingVariant::Quasi));
}

// ---------------------------------------------------------------------------
// The two tableau families used by the expansions

enum class Family { A2P, Q2F };

inline const char* family_name(Family f) { return f == Family::A2P ? "A2P" : "Q2F"; }

inline bool in_family(const SkylineFilling& t, Family f) {
    return f == Family::A2P ? is_semistandard(t) && is_meson_highest(t)
                            : is_quasi_semistandard(t) && is_quasi_yamanouchi(t);
}

inline std::vector<SkylineFilling> family_set(const WeakComposition& a, Family f) {
    return f == Family::A2P ? enumerate_A2P(a) : enumerate_Q2F(a);
}

}  // namespace katom
