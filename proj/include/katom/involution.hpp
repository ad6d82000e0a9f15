#pragma once

/**
 * @file involution.hpp
 * @brief The sign-reversing involution on Ā2P̄(a) and Q̄2F̄(a).
 *
 * For m running through the entries of T in increasing order, look for the
 * rightmost column where a free m can be added or removed with the result
 * still in the family; the first hit is the image. When no entry works the
 * map is undefined at T. Membership is always re-checked with the full
 * family predicates.
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "katom/composition.hpp"
#include "katom/skyline.hpp"

namespace katom {

namespace detail {

inline std::optional<std::size_t> row_holding(const SkylineFilling& t, std::size_t column, int m) {
    for (std::size_t i = 1; i <= t.row_count(); ++i) {
        if (!t.has_box(i, column)) continue;
        const auto& b = t.box(i, column);
        if (std::find(b.begin(), b.end(), m) != b.end()) return i;
    }
    return std::nullopt;
}

}  // namespace detail

/// Adds a free m to the given column at the box forced by the free-entry
/// placement rule, if the result stays in the family.
inline std::optional<SkylineFilling> try_add_free(const SkylineFilling& t, std::size_t column, int m,
                                                  Family family) {
    if (m < 1 || column < 1 || column > t.column_count()) return std::nullopt;
    if (detail::row_holding(t, column, m)) return std::nullopt;
    const auto row = free_entry_row(t, column, m);
    if (!row) return std::nullopt;
    auto candidate = t.with_entry({*row, column}, m);
    if (!in_family(candidate, family)) return std::nullopt;
    return candidate;
}

/// Removes the free m from the given column, if it is free and the result
/// stays in the family.
inline std::optional<SkylineFilling> try_remove_free(const SkylineFilling& t, std::size_t column,
                                                     int m, Family family) {
    if (m < 1 || column < 1 || column > t.column_count()) return std::nullopt;
    const auto row = detail::row_holding(t, column, m);
    if (!row || t.anchor(*row, column) == m) return std::nullopt;
    auto candidate = t.without_entry({*row, column}, m);
    if (!in_family(candidate, family)) return std::nullopt;
    return candidate;
}

struct IotaMove {
    int value = 0;
    std::size_t column = 0;
    bool added = false;
    SkylineFilling result;
};

/// The move ι makes at T, or nothing at a fixed point.
inline std::optional<IotaMove> iota_move(const SkylineFilling& t, Family family) {
    if (!in_family(t, family)) {
        throw std::invalid_argument(std::string("filling is not in ") + family_name(family) + ": " +
                                    t.to_compact());
    }
    for (int m : t.values()) {
        for (std::size_t c = t.column_count(); c >= 1; --c) {
            const bool present = detail::row_holding(t, c, m).has_value();
            auto next = present ? try_remove_free(t, c, m, family) : try_add_free(t, c, m, family);
            if (next) return IotaMove{m, c, !present, std::move(*next)};
        }
    }
    return std::nullopt;
}

inline std::optional<SkylineFilling> iota(const SkylineFilling& t, Family family) {
    auto move = iota_move(t, family);
    if (!move) return std::nullopt;
    return std::move(move->result);
}

namespace detail {

/// Row r consists only of singleton boxes {v} and is weakly longer than
/// every row above it.
inline bool is_solid_longest_row(const SkylineFilling& t, std::size_t r, int v) {
    if (r < 1 || r > t.row_count() || t.row_length(r) == 0) return false;
    for (const auto& b : t.row(r)) {
        if (b.size() != 1 || b.front() != v) return false;
    }
    for (std::size_t above = r + 1; above <= t.row_count(); ++above) {
        if (t.row_length(above) > t.row_length(r)) return false;
    }
    return true;
}

}  // namespace detail

/**
 * The value ι should modify, predicted without searching: the first entry
 * m' (in increasing order) that fails to fill a row by itself.
 *
 * A2P: every occurrence of m' lies in row m', that row holds only m' and
 * is weakly longer than all rows above it.
 * Q2F: the same, except the row may be any single row.
 */
inline std::optional<int> chosen_value_oracle(const SkylineFilling& t, Family family) {
    for (int v : t.values()) {
        const auto cells = t.occurrences(v);
        const std::size_t r = family == Family::A2P ? static_cast<std::size_t>(v) : cells.front().row;
        const bool one_row = std::all_of(cells.begin(), cells.end(),
                                         [&](const Cell& cell) { return cell.row == r; });
        if (!one_row || !detail::is_solid_longest_row(t, r, v)) return v;
    }
    return std::nullopt;
}

/// The filling with a_i boxes {i} in row i, when the nonzero parts of a
/// weakly decrease.
inline std::optional<SkylineFilling> predicted_fixed_point(const WeakComposition& a) {
    if (!is_weakly_decreasing_nonzero(a)) return std::nullopt;
    std::vector<std::vector<Box>> rows(a.size());
    for (std::size_t i = 1; i <= a.size(); ++i) {
        rows[i - 1].assign(static_cast<std::size_t>(a.at1(i)), Box{static_cast<int>(i)});
    }
    return SkylineFilling(a, std::move(rows));
}

class InvolutionError : public std::logic_error {
public:
    InvolutionError(const std::string& what, SkylineFilling offender)
        : std::logic_error(what + ": " + offender.to_compact()), offender_(std::move(offender)) {}

    const SkylineFilling& offender() const noexcept { return offender_; }

private:
    SkylineFilling offender_;
};

struct PairingReport {
    Family family = Family::A2P;
    WeakComposition shape;
    /// (T, ι(T)) with T the member with fewer free entries; sorted by T.
    std::vector<std::pair<SkylineFilling, SkylineFilling>> pairs;
    std::vector<SkylineFilling> fixed_points;

    /// Σ over the family of (-1)^{free entries}.
    long signed_count() const {
        auto sign = [](const SkylineFilling& t) { return t.free_count() % 2 == 0 ? 1L : -1L; };
        long total = 0;
        for (const auto& [t, u] : pairs) total += sign(t) + sign(u);
        for (const auto& t : fixed_points) total += sign(t);
        return total;
    }
};

/// Applies ι to every member of the family set and checks the pairing.
inline PairingReport pairing(const WeakComposition& a, Family family) {
    const auto members = family_set(a, family);
    PairingReport report{family, a, {}, {}};
    for (const auto& t : members) {
        auto image = iota(t, family);
        if (!image) {
            report.fixed_points.push_back(t);
            continue;
        }
        if (!std::binary_search(members.begin(), members.end(), *image)) {
            throw InvolutionError("image leaves the family set", t);
        }
        if (std::abs(image->free_count() - t.free_count()) != 1) {
            throw InvolutionError("image does not change the free count by one", t);
        }
        auto back = iota(*image, family);
        if (!back || *back != t) throw InvolutionError("iota(iota(T)) != T", t);
        if (t.free_count() < image->free_count()) report.pairs.emplace_back(t, std::move(*image));
    }
    std::sort(report.pairs.begin(), report.pairs.end());
    return report;
}

}  // namespace katom
