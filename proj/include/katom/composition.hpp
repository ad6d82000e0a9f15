#pragma once

/**
 * @file composition.hpp
 * @brief Weak compositions, colored kompositions and the dominance order.
 *
 * Positions are 1-based in every diagnostic and in the positional queries
 * (nonzero_positions); storage is an ordinary 0-based vector.
 */

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace katom {

class WeakComposition {
public:
    WeakComposition() = default;

    explicit WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 0) {
                throw std::invalid_argument("weak composition entry " + std::to_string(i + 1) +
                                            " is negative");
            }
        }
    }

    WeakComposition(std::initializer_list<int> entries)
        : WeakComposition(std::vector<int>(entries)) {}

    static WeakComposition zero(std::size_t n) { return WeakComposition(std::vector<int>(n, 0)); }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    // 0-based element access
    int operator[](std::size_t i) const { return entries_[i]; }
    // 1-based element access, the convention used for rows and positions
    int at1(std::size_t i) const { return entries_.at(i - 1); }

    const std::vector<int>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    int sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<int> entries_;
};

/// Parses "0,2,0,1". The empty string is the empty composition.
inline WeakComposition parse_composition(std::string_view text) {
    std::vector<int> values;
    if (text.empty()) return WeakComposition{};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                                  : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
            throw std::invalid_argument("malformed composition \"" + std::string(text) +
                                        "\": expected comma-separated nonnegative integers");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return WeakComposition(std::move(values));
}

/// a⁺: the nonzero entries, order preserved.
inline std::vector<int> nonzero_parts(const WeakComposition& a) {
    std::vector<int> out;
    for (int v : a) {
        if (v > 0) out.push_back(v);
    }
    return out;
}

/// 1-based positions of the nonzero entries, ascending.
inline std::vector<std::size_t> nonzero_positions(const WeakComposition& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0) out.push_back(i + 1);
    }
    return out;
}

/// b ≥ a in dominance order: every prefix sum of b is at least that of a.
inline bool dominates(const WeakComposition& b, const WeakComposition& a) {
    if (b.size() != a.size()) {
        throw std::invalid_argument("dominance compares compositions of equal length, got " +
                                    std::to_string(b.size()) + " and " + std::to_string(a.size()));
    }
    int prefix_b = 0;
    int prefix_a = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        prefix_b += b[i];
        prefix_a += a[i];
        if (prefix_b < prefix_a) return false;
    }
    return true;
}

/**
 * All b of the same length with b ≥ a and b⁺ = a⁺, in ascending
 * lexicographic order. The nonzero parts keep their relative order, so
 * each b is a choice of positions for a⁺.
 */
inline std::vector<WeakComposition> dominating_set(const WeakComposition& a) {
    const auto parts = nonzero_parts(a);
    const std::size_t n = a.size();
    std::vector<WeakComposition> out;
    std::vector<int> current(n, 0);

    auto place = [&](auto&& self, std::size_t part, std::size_t from) -> void {
        if (part == parts.size()) {
            WeakComposition b(current);
            if (dominates(b, a)) out.push_back(std::move(b));
            return;
        }
        for (std::size_t pos = from; pos + (parts.size() - part) <= n; ++pos) {
            current[pos] = parts[part];
            self(self, part + 1, pos + 1);
            current[pos] = 0;
        }
    };
    place(place, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_weakly_decreasing_nonzero(const WeakComposition& a) {
    const auto parts = nonzero_parts(a);
    return std::is_sorted(parts.begin(), parts.end(), std::greater<>{});
}

enum class Color { Black, Red };

struct KompositionEntry {
    int value = 0;
    Color color = Color::Black;

    friend bool operator==(const KompositionEntry&, const KompositionEntry&) = default;
    friend auto operator<=>(const KompositionEntry&, const KompositionEntry&) = default;
};

/// A weak composition whose entries are colored; zero entries are always Black.
class Komposition {
public:
    Komposition() = default;

    explicit Komposition(std::vector<KompositionEntry> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].value < 0) {
                throw std::invalid_argument("komposition entry " + std::to_string(i + 1) +
                                            " is negative");
            }
            if (entries_[i].value == 0 && entries_[i].color == Color::Red) {
                throw std::invalid_argument("komposition entry " + std::to_string(i + 1) +
                                            " is a red zero");
            }
        }
    }

    std::size_t size() const noexcept { return entries_.size(); }
    const KompositionEntry& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<KompositionEntry>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Forget the colors.
    WeakComposition values() const {
        std::vector<int> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.value);
        return WeakComposition(std::move(out));
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i].value);
            if (entries_[i].color == Color::Red) out += 'r';
        }
        return out;
    }

    friend bool operator==(const Komposition&, const Komposition&) = default;
    friend auto operator<=>(const Komposition&, const Komposition&) = default;

private:
    std::vector<KompositionEntry> entries_;
};

/// Parses "2,2r,1,3r,2r".
inline Komposition parse_komposition(std::string_view text) {
    std::vector<KompositionEntry> entries;
    if (text.empty()) return Komposition{};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                                  : comma - pos);
        Color color = Color::Black;
        if (!token.empty() && token.back() == 'r') {
            color = Color::Red;
            token.remove_suffix(1);
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed komposition \"" + std::string(text) + "\"");
        }
        entries.push_back({value, color});
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Komposition(std::move(entries));
}

inline int excess(const Komposition& b) {
    return static_cast<int>(std::count_if(b.begin(), b.end(),
                                          [](const KompositionEntry& e) { return e.color == Color::Red; }));
}

/// Every composition of length n with entries in [0, max_entry], lexicographic.
inline std::vector<WeakComposition> all_compositions(std::size_t n, int max_entry) {
    std::vector<WeakComposition> out;
    std::vector<int> current(n, 0);
    auto fill = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.emplace_back(current);
            return;
        }
        for (int v = 0; v <= max_entry; ++v) {
            current[i] = v;
            self(self, i + 1);
        }
    };
    fill(fill, 0);
    return out;
}

}  // namespace katom
