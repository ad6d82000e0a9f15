#pragma once

/**
 * @file sweep.hpp
 * @brief Exhaustive verification over all shapes of a fixed length.
 *
 * Shapes are processed by a pool of worker threads; results are stored by
 * shape index, so the report is identical for every worker count.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "katom/composition.hpp"
#include "katom/expansions.hpp"
#include "katom/involution.hpp"
#include "katom/serialize.hpp"
#include "katom/skyline.hpp"

namespace katom {

enum class Check { Identities, AlternatingSums, Involution, UnionIdentity };

inline const char* check_name(Check c) {
    switch (c) {
        case Check::Identities: return "identities";
        case Check::AlternatingSums: return "alternating_sums";
        case Check::Involution: return "involution";
        case Check::UnionIdentity: return "union_identity";
    }
    return "?";
}

struct SweepConfig {
    std::size_t max_length = 1;
    int max_entry = 1;
    std::set<Family> families{Family::A2P, Family::Q2F};
    std::set<Check> checks{Check::Identities, Check::AlternatingSums, Check::Involution,
                           Check::UnionIdentity};
    unsigned threads = 0;  // 0 = hardware concurrency

    void validate() const {
        if (max_length < 1) throw std::invalid_argument("max_length must be at least 1");
        if (max_entry < 1) throw std::invalid_argument("max_entry must be at least 1");
    }
};

struct ShapeOutcome {
    WeakComposition shape;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

/// Rightmost column where inserting or deleting a free m in any box gives a
/// family member. Tries every box rather than the forced one.
inline std::size_t rightmost_admissible_column(const SkylineFilling& t, int m, Family family) {
    for (std::size_t c = t.column_count(); c >= 1; --c) {
        for (std::size_t i = 1; i <= t.row_count(); ++i) {
            if (!t.has_box(i, c)) continue;
            const auto& b = t.box(i, c);
            const bool holds = std::find(b.begin(), b.end(), m) != b.end();
            if (holds && b.front() != m && in_family(t.without_entry({i, c}, m), family)) return c;
            if (!holds && m < b.front() && in_family(t.with_entry({i, c}, m), family)) return c;
        }
    }
    return 0;
}

inline void check_involution(const WeakComposition& a, Family family, const Integer& alt_sum,
                             std::vector<std::string>& failures) {
    const std::string tag = std::string(family_name(family)) + " involution: ";
    PairingReport report;
    try {
        report = pairing(a, family);
    } catch (const InvolutionError& e) {
        failures.push_back(tag + e.what());
        return;
    }
    const bool expect_fixed = is_weakly_decreasing_nonzero(a);
    if (report.fixed_points.size() != (expect_fixed ? 1u : 0u)) {
        failures.push_back(tag + std::to_string(report.fixed_points.size()) + " fixed points");
    } else if (expect_fixed) {
        const auto& fixed = report.fixed_points.front();
        if (fixed != *predicted_fixed_point(a) || fixed.free_count() != 0) {
            failures.push_back(tag + "unexpected fixed point " + fixed.to_compact());
        }
    }
    for (const auto& t : family_set(a, family)) {
        const auto move = iota_move(t, family);
        const auto predicted = chosen_value_oracle(t, family);
        const std::optional<int> actual = move ? std::optional<int>(move->value) : std::nullopt;
        if (actual != predicted) {
            failures.push_back(tag + "modified value disagrees with oracle at " + t.to_compact());
            continue;
        }
        if (move && rightmost_admissible_column(t, move->value, family) != move->column) {
            failures.push_back(tag + "column is not the rightmost admissible one at " + t.to_compact());
        }
    }
    if (Integer(report.signed_count()) != alt_sum) {
        failures.push_back(tag + "signed count " + std::to_string(report.signed_count()) +
                           " != alternating sum " + alt_sum.str());
    }
}

inline void check_union_identity(const WeakComposition& a, std::vector<std::string>& failures) {
    std::vector<SkylineFilling> relocated;
    for (const auto& t : enumerate_fillings(a, FillingVariant::Quasi)) relocated.push_back(relocate_rows(t));
    std::sort(relocated.begin(), relocated.end());

    std::vector<SkylineFilling> pieces;
    SparsePolynomial atoms(a.size());
    for (const auto& b : dominating_set(a)) {
        auto part = enumerate_fillings(b, FillingVariant::Atom);
        pieces.insert(pieces.end(), part.begin(), part.end());
        atoms += lascoux_atom(b);
    }
    std::sort(pieces.begin(), pieces.end());
    if (std::adjacent_find(pieces.begin(), pieces.end()) != pieces.end()) {
        failures.push_back("union identity: atom pieces overlap");
    }
    if (relocated != pieces) failures.push_back("union identity: fillings differ");
    if (quasi_lascoux(a) != atoms) failures.push_back("union identity: polynomials differ");
}

}  // namespace detail

inline ShapeOutcome check_shape(const WeakComposition& a, const SweepConfig& config) {
    ShapeOutcome outcome{a, {}};
    auto& failures = outcome.failures;
    const bool a2p = config.families.count(Family::A2P) > 0;
    const bool q2f = config.families.count(Family::Q2F) > 0;
    try {
        if (config.checks.count(Check::Identities)) {
            if (a2p && !verify_a2p_identity(a)) failures.push_back("A2P identity fails");
            if (q2f && !verify_q2f_identity(a)) failures.push_back("Q2F identity fails");
        }
        const bool need_sums = config.checks.count(Check::AlternatingSums) ||
                               config.checks.count(Check::Involution);
        AlternatingSums sums;
        if (need_sums) sums = alternating_sums(a);
        const Integer expected = is_weakly_decreasing_nonzero(a) ? 1 : 0;
        if (config.checks.count(Check::AlternatingSums)) {
            if (a2p && sums.q_sum != expected) failures.push_back("q_sum = " + sums.q_sum.str());
            if (q2f && sums.m_sum != expected) failures.push_back("m_sum = " + sums.m_sum.str());
        }
        if (config.checks.count(Check::Involution)) {
            if (a2p) detail::check_involution(a, Family::A2P, sums.q_sum, failures);
            if (q2f) detail::check_involution(a, Family::Q2F, sums.m_sum, failures);
        }
        if (config.checks.count(Check::UnionIdentity)) detail::check_union_identity(a, failures);
    } catch (const std::exception& e) {
        failures.push_back(std::string("internal error: ") + e.what());
    }
    return outcome;
}

inline std::vector<ShapeOutcome> run_sweep(const SweepConfig& config) {
    config.validate();
    const auto shapes = all_compositions(config.max_length, config.max_entry);
    std::vector<ShapeOutcome> results(shapes.size());

    unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(shapes.size())));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < shapes.size(); k = next++) {
            results[k] = check_shape(shapes[k], config);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return results;
}

inline std::size_t failure_count(const std::vector<ShapeOutcome>& results) {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const ShapeOutcome& o) { return !o.passed(); }));
}

inline std::string format_sweep_text(const std::vector<ShapeOutcome>& results) {
    std::string out;
    for (const auto& r : results) {
        out += r.passed() ? "PASS " : "FAIL ";
        out += r.shape.to_string();
        for (std::size_t k = 0; k < r.failures.size(); ++k) {
            out += k ? "; " : ": ";
            out += r.failures[k];
        }
        out += '\n';
    }
    out += std::to_string(results.size()) + " shapes, " + std::to_string(failure_count(results)) +
           " failures\n";
    return out;
}

/// One JSON object per shape, then a summary object; newline-delimited.
inline std::string format_sweep_json(const std::vector<ShapeOutcome>& results) {
    std::string out;
    for (const auto& r : results) {
        json line;
        line["shape"] = to_json_value(r.shape);
        line["pass"] = r.passed();
        line["failures"] = r.failures;
        out += line.dump() + '\n';
    }
    json summary;
    summary["shapes"] = results.size();
    summary["failures"] = failure_count(results);
    out += summary.dump() + '\n';
    return out;
}

}  // namespace katom
