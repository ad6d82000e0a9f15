#pragma once

// Command-line front end for the katom engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "katom/composition.hpp"
#include "katom/expansions.hpp"
#include "katom/glides.hpp"
#include "katom/involution.hpp"
#include "katom/serialize.hpp"
#include "katom/skyline.hpp"
#include "katom/sweep.hpp"

namespace katom::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline WeakComposition shape_arg(const std::string& text) {
    try {
        return parse_composition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// KATOM_THREADS, 0 (auto) when unset or unparsable.
inline unsigned threads_from_env() {
    const char* raw = std::getenv("KATOM_THREADS");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 0) return 0;
    return static_cast<unsigned>(v);
}

inline void print_polynomial(std::ostream& out, const SparsePolynomial& p, const std::string& format) {
    if (format == "json") {
        out << to_json_value(p).dump() << '\n';
    } else if (format == "latex") {
        out << p.to_latex() << '\n';
    } else {
        out << p.to_string() << '\n';
    }
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lascoux atoms, kaons, glide and quasiLascoux polynomials"};
    app.require_subcommand(1);

    std::string shape_text;
    std::string format = "text";
    std::optional<long long> beta;
    std::string family_text;
    std::string base_text;
    std::size_t max_length = 0;
    int max_entry = 0;
    std::vector<std::string> checks_text;
    std::vector<std::string> families_text;
    std::optional<unsigned> threads_flag;

    const std::vector<std::string> formats{"text", "json", "latex"};
    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("--shape", shape_text, "weak composition, e.g. 0,2,0,1")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats));
    };

    std::map<std::string, std::function<SparsePolynomial(const WeakComposition&)>> poly_commands{
        {"kaon", [](const WeakComposition& a) { return kaon(a); }},
        {"atom", [](const WeakComposition& a) { return lascoux_atom(a); }},
        {"glide", [](const WeakComposition& a) { return glide_polynomial(a); }},
        {"quasilascoux", [](const WeakComposition& a) { return quasi_lascoux(a); }},
    };
    std::map<std::string, CLI::App*> poly_subs;
    for (const auto& [name, fn] : poly_commands) {
        auto* sub = app.add_subcommand(name, "print the " + name + " polynomial of a shape");
        add_shape(sub);
        sub->add_option("--beta", beta, "evaluate beta at this integer");
        poly_subs[name] = sub;
    }

    auto* glides_cmd = app.add_subcommand("glides", "list the mesonic glides of a shape");
    add_shape(glides_cmd);

    auto* tableaux_cmd = app.add_subcommand("tableaux", "list a tableau set of a shape");
    add_shape(tableaux_cmd);
    tableaux_cmd->add_option("--family", family_text, "a2p | q2f | assf | qssf")
        ->required()
        ->check(CLI::IsMember({"a2p", "q2f", "assf", "qssf"}));

    auto* expand_cmd = app.add_subcommand("expand", "coefficient table of an expansion");
    add_shape(expand_cmd);
    expand_cmd->add_option("--base", base_text, "a2p | q2f")->required()->check(CLI::IsMember({"a2p", "q2f"}));
    expand_cmd->add_option("--beta", beta, "also report the coefficient sum at this beta");

    auto* altsum_cmd = app.add_subcommand("altsum", "alternating coefficient sums at beta = -1");
    add_shape(altsum_cmd);

    auto* pairing_cmd = app.add_subcommand("pairing", "pairing induced by the sign-reversing involution");
    add_shape(pairing_cmd);
    pairing_cmd->add_option("--family", family_text, "a2p | q2f")
        ->required()
        ->check(CLI::IsMember({"a2p", "q2f"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "verify every shape of a given length");
    sweep_cmd->add_option("--max-length", max_length, "shape length")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--max-entry", max_entry, "largest shape entry")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--checks", checks_text, "identities alternating_sums involution union_identity")
        ->check(CLI::IsMember({"identities", "alternating_sums", "involution", "union_identity"}));
    sweep_cmd->add_option("--families", families_text, "a2p q2f")->check(CLI::IsMember({"a2p", "q2f"}));
    sweep_cmd->add_option("--threads", threads_flag, "worker count, 0 = auto (overrides KATOM_THREADS)");
    sweep_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv{"katom"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (const auto& [name, sub] : poly_subs) {
            if (!sub->parsed()) continue;
            auto p = poly_commands.at(name)(shape_arg(shape_text));
            if (beta) p = specialize_beta(p, Integer(*beta));
            print_polynomial(out, p, format);
            return kExitOk;
        }

        if (glides_cmd->parsed()) {
            const auto glides = enumerate_mesonic_glides(shape_arg(shape_text));
            if (format == "json") {
                json arr = json::array();
                for (const auto& b : glides) arr.push_back(to_json_value(b));
                out << arr.dump() << '\n';
            } else {
                for (const auto& b : glides) out << b.to_string() << '\n';
            }
            return kExitOk;
        }

        if (tableaux_cmd->parsed()) {
            const auto a = shape_arg(shape_text);
            std::vector<SkylineFilling> set;
            if (family_text == "a2p") set = enumerate_A2P(a);
            if (family_text == "q2f") set = enumerate_Q2F(a);
            if (family_text == "assf") set = enumerate_fillings(a, FillingVariant::Atom);
            if (family_text == "qssf") set = enumerate_fillings(a, FillingVariant::Quasi);
            if (format == "json") {
                json arr = json::array();
                for (const auto& t : set) arr.push_back(to_json_value(t));
                out << arr.dump() << '\n';
            } else {
                for (const auto& t : set) {
                    out << "# wt=" << weight(t).to_string() << " free=" << t.free_count() << '\n'
                        << t.to_string() << '\n';
                }
                out << set.size() << " tableaux\n";
            }
            return kExitOk;
        }

        if (expand_cmd->parsed()) {
            const auto a = shape_arg(shape_text);
            const auto table = base_text == "a2p" ? a2p_expansion(a) : q2f_expansion(a);
            if (format == "json") {
                auto j = to_json_value(table);
                if (beta) j["beta_sum"] = to_json_value(table.evaluate_at(*beta));
                out << j.dump() << '\n';
            } else {
                const char* basis = table.base == Family::A2P ? "P" : "F";
                for (const auto& [b, term] : table.coefficients) {
                    out << basis << "(" << b.to_string() << "): m=" << term.multiplicity
                        << " k=" << term.beta_power << '\n';
                }
                out << "sum: " << table.beta_sum().to_string() << '\n';
                if (beta) out << "sum at beta=" << *beta << ": " << table.evaluate_at(*beta).str() << '\n';
            }
            return kExitOk;
        }

        if (altsum_cmd->parsed()) {
            const auto a = shape_arg(shape_text);
            const auto sums = alternating_sums(a);
            const bool decreasing = is_weakly_decreasing_nonzero(a);
            const Integer expected = decreasing ? 1 : 0;
            const bool ok = sums.q_sum == expected && sums.m_sum == expected;
            if (format == "json") {
                json j;
                j["a"] = to_json_value(a);
                j["q_sum"] = to_json_value(sums.q_sum);
                j["m_sum"] = to_json_value(sums.m_sum);
                j["weakly_decreasing"] = decreasing;
                j["pass"] = ok;
                out << j.dump() << '\n';
            } else {
                out << "(" << sums.q_sum.str() << ", " << sums.m_sum.str() << ") \xE2\x80\x94 nonzero parts "
                    << (decreasing ? "weakly decreasing" : "not weakly decreasing") << ": "
                    << (ok ? "PASS" : "FAIL") << '\n';
            }
            return ok ? kExitOk : kExitVerification;
        }

        if (pairing_cmd->parsed()) {
            const auto a = shape_arg(shape_text);
            const auto report = pairing(a, family_text == "a2p" ? Family::A2P : Family::Q2F);
            if (format == "json") {
                out << to_json_value(report).dump() << '\n';
            } else {
                for (const auto& [t, u] : report.pairs) {
                    out << t.to_compact() << "  \xE2\x86\x94  " << u.to_compact() << '\n';
                }
                for (const auto& t : report.fixed_points) out << "fixed: " << t.to_compact() << '\n';
                out << report.pairs.size() << " pairs, " << report.fixed_points.size() << " fixed\n";
            }
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            SweepConfig config;
            config.max_length = max_length;
            config.max_entry = max_entry;
            config.threads = threads_flag ? *threads_flag : threads_from_env();
            if (!checks_text.empty()) {
                config.checks.clear();
                for (const auto& c : checks_text) {
                    if (c == "identities") config.checks.insert(Check::Identities);
                    if (c == "alternating_sums") config.checks.insert(Check::AlternatingSums);
                    if (c == "involution") config.checks.insert(Check::Involution);
                    if (c == "union_identity") config.checks.insert(Check::UnionIdentity);
                }
            }
            if (!families_text.empty()) {
                config.families.clear();
                for (const auto& f : families_text) config.families.insert(f == "a2p" ? Family::A2P : Family::Q2F);
            }
            const auto results = run_sweep(config);
            out << (format == "json" ? format_sweep_json(results) : format_sweep_text(results));
            return failure_count(results) == 0 ? kExitOk : kExitVerification;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvolutionError& e) {
        err << "invariant violation for shape " << shape_text << ": " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::logic_error& e) {
        err << "invariant violation for shape " << shape_text << ": " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitUsage;
}

}  // namespace katom::cli
