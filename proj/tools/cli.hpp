#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prunres/json.hpp"
#include "prunres/prunres.hpp"

namespace prunres::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCheckFailed = 2 };

inline constexpr std::size_t kGeneratorCap = 24;

struct Common {
    std::string ideal;
    bool force = false;
    bool trace = false;
    bool dump_complex = false;
};

struct Pipeline {
    TaylorComplex taylor;
    Matching matching;
};

inline const std::vector<std::string>& method_names() {
    static const std::vector<std::string> names{"taylor", "pruned", "simplicial", "lyubeznik", "nu"};
    return names;
}

inline Matching build_matching(const std::string& method, const TaylorComplex& taylor) {
    if (method == "taylor") return Matching{taylor.generators(), {}, {}, 0, false};
    if (method == "pruned") return prune_taylor(taylor);
    if (method == "simplicial") return prune_simplicial(taylor);
    if (method == "lyubeznik") return prune_lyubeznik(taylor);
    if (method == "nu") return nu_prune(taylor);
    throw std::invalid_argument("unknown method '" + method + "'");
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline MonomialIdeal load(const Common& common) {
    if (common.ideal.empty()) throw UsageError("--ideal is required");
    auto ideal = resolve_ideal(common.ideal);
    if (ideal.size() > kGeneratorCap && !common.force) {
        throw UsageError(std::to_string(ideal.size()) + " generators exceeds the cap of " +
                         std::to_string(kGeneratorCap) + "; pass --force to continue");
    }
    return ideal;
}

inline std::string totals_text(const BettiTable& t) {
    std::string out;
    for (auto v : t.totals()) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

inline void emit_prelude(std::ostream& out, const Common& common, const MonomialIdeal& ideal,
                         const Matching& m) {
    if (common.trace) out << format_trace(m, ideal.variables());
}

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cellular free resolutions of monomial ideals by pruning the Taylor complex",
                 "prunres"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--ideal", common.ideal,
                        "path:<n>, cycle:<n>, edges:<file>, rp2, example-4-1, inline "
                        "'ring ...; gens ...', or a file");
        sub->add_flag("--force", common.force, "allow more than 24 generators");
        sub->add_flag("--trace", common.trace, "print one line per pruned edge");
        sub->add_flag("--dump-complex", common.dump_complex, "print cells and differentials");
    };

    std::string method = "pruned";
    std::uint32_t characteristic = 0;
    std::string format = "text";
    std::string oracle = "tor";
    bool polarize_input = false;

    auto* betti = app.add_subcommand("betti", "Betti diagram of a resolution");
    add_common(betti);
    betti->add_option("--method", method)->check(CLI::IsMember(method_names()));
    betti->add_option("--char", characteristic, "field characteristic (0 or prime)");
    betti->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* truth = app.add_subcommand("true-betti", "Betti numbers from an independent oracle");
    add_common(truth);
    truth->add_option("--char", characteristic);
    truth->add_option("--oracle", oracle)->check(CLI::IsMember({"tor", "hochster"}));
    truth->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    truth->add_flag("--polarize", polarize_input, "polarize before applying Hochster's formula");

    std::string what;
    auto* check = app.add_subcommand("check", "Validate a matching or its complex");
    add_common(check);
    check->add_option("what", what)->required()->check(
        CLI::IsMember({"matching", "dsquared", "exact", "minimal"}));
    check->add_option("--method", method)->check(CLI::IsMember(method_names()));
    check->add_option("--char", characteristic);

    auto* compare = app.add_subcommand("compare", "All methods side by side against the oracle");
    add_common(compare);
    compare->add_option("--char", characteristic);

    std::size_t split_at = 0;
    bool scan = false;
    auto* split = app.add_subcommand("split", "Pruned Betti splitting analysis");
    add_common(split);
    auto* at_opt = split->add_option("--at", split_at, "J = first s generators");
    split->add_flag("--scan", scan, "try every split point")->excludes(at_opt);
    split->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv_store{"prunres"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Field field = Field::of(characteristic);
        const MonomialIdeal ideal = load(common);
        const auto& names = ideal.variables();

        if (betti->parsed()) {
            TaylorComplex taylor(ideal);
            const Matching m = build_matching(method, taylor);
            emit_prelude(out, common, ideal, m);
            ChainComplex c = m.approximation ? critical_complex(taylor, m) : morse_differential(taylor, m);
            const BettiTable t = betti_of_complex(c);
            if (format == "json") {
                out << betti_json(t, names).dump() << "\n";
            } else {
                if (m.approximation) out << "approximation (degree-shift pruning)\n";
                out << render_betti(t);
            }
            if (common.dump_complex) out << format_complex(c, names);
            return kOk;
        }

        if (truth->parsed()) {
            BettiTable t;
            std::vector<std::string> table_names = names;
            if (oracle == "tor") {
                t = tor_betti(ideal, field);
            } else {
                MonomialIdeal input = ideal;
                if (!input.is_squarefree()) {
                    if (!polarize_input)
                        throw UsageError("Hochster's formula needs a squarefree ideal; pass --polarize");
                    input = polarize(input).ideal;
                    table_names = input.variables();
                }
                t = hochster_betti(input, field);
            }
            if (format == "json") {
                out << betti_json(t, table_names).dump() << "\n";
            } else {
                out << render_betti(t);
            }
            return kOk;
        }

        if (check->parsed()) {
            TaylorComplex taylor(ideal);
            const Matching m = build_matching(method, taylor);
            emit_prelude(out, common, ideal, m);
            if (what == "matching") {
                const auto rep = verify_matching(m, taylor);
                out << "is_matching=" << std::boolalpha << rep.is_matching
                    << " is_homogeneous=" << rep.is_homogeneous << " is_acyclic=" << rep.is_acyclic
                    << "\n";
                const bool pass = m.approximation ? rep.is_matching && rep.is_acyclic : rep.ok();
                out << (pass ? "PASS" : "FAIL") << "\n";
                return pass ? kOk : kCheckFailed;
            }
            if (m.approximation) {
                throw UsageError("the nu matching is an approximation; only 'check matching' applies");
            }
            const ChainComplex c = morse_differential(taylor, m);
            if (common.dump_complex) out << format_complex(c, names);
            bool pass = false;
            if (what == "dsquared") {
                pass = check_d_squared(c);
                out << "d^2=0: " << std::boolalpha << pass << "\n";
            } else if (what == "exact") {
                pass = check_d_squared(c) && check_exactness(taylor, c, field);
                out << "exact over char " << field.characteristic() << ": " << std::boolalpha << pass
                    << "\n";
            } else {
                pass = check_minimal(c, field);
                const bool syntactic = syntactic_minimality(taylor, m);
                out << "minimal: " << std::boolalpha << pass << "\n"
                    << "syntactic: " << syntactic << "\n";
                if (syntactic != check_minimal(c)) out << "note: syntactic and differential tests disagree\n";
            }
            out << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? kOk : kCheckFailed;
        }

        if (compare->parsed()) {
            TaylorComplex taylor(ideal);
            const BettiTable truth_table = tor_betti(taylor, field);
            std::vector<std::pair<std::string, std::string>> rows;
            rows.emplace_back("oracle", totals_text(truth_table));
            std::vector<std::string> flags{""};
            for (const auto& name : method_names()) {
                const Matching m = build_matching(name, taylor);
                if (name == "pruned") emit_prelude(out, common, ideal, m);
                const BettiTable t = betti_of_complex(critical_complex(taylor, m));
                rows.emplace_back(m.approximation ? name + " (approximation)" : name, totals_text(t));
                flags.push_back(m.approximation ? "" : (t == truth_table ? "MINIMAL" : "-"));
            }
            std::size_t width = 0;
            for (const auto& row : rows) width = std::max(width, row.first.size() + 1);
            out << "char " << field.characteristic() << "\n";
            for (std::size_t k = 0; k < rows.size(); ++k) {
                std::string line = rows[k].first + ":";
                line += std::string(width + 1 - line.size(), ' ') + rows[k].second;
                if (!flags[k].empty()) line += "  " + flags[k];
                out << line << "\n";
            }
            return kOk;
        }

        if (split->parsed()) {
            if (ideal.size() < 2) throw UsageError("splitting needs at least two generators");
            auto report_text = [&](const SplitReport& rep, bool edges) {
                if (edges) {
                    for (const auto& e : rep.edges) {
                        out << "step=" << e.edge.generator + 1
                            << " lower=" << characteristic_vector(e.edge.lower, ideal.size())
                            << " upper=" << characteristic_vector(e.edge.upper(), ideal.size()) << " "
                            << region_name(e.lower) << "/" << region_name(e.upper) << "\n";
                    }
                }
                out << "s=" << rep.split << " pruned_splitting=" << (rep.is_pruned_splitting ? "yes" : "no")
                    << " nonzero_residuals=" << rep.residuals.size() << "\n";
            };
            auto report_json = [&](const SplitReport& rep) {
                nlohmann::json edges = nlohmann::json::array();
                for (const auto& e : rep.edges) {
                    edges.push_back({{"step", e.edge.generator + 1},
                                     {"lower", characteristic_vector(e.edge.lower, ideal.size())},
                                     {"upper", characteristic_vector(e.edge.upper(), ideal.size())},
                                     {"regions", {region_name(e.lower), region_name(e.upper)}}});
                }
                nlohmann::json residuals = nlohmann::json::array();
                for (const auto& [key, v] : rep.residuals)
                    residuals.push_back({key.first, to_string(key.second, names), v});
                return nlohmann::json{{"s", rep.split},
                                      {"pruned_splitting", rep.is_pruned_splitting},
                                      {"edges", edges},
                                      {"residuals", residuals}};
            };
            std::vector<std::size_t> points;
            if (scan) {
                for (std::size_t s = 1; s < ideal.size(); ++s) points.push_back(s);
            } else {
                if (split_at == 0) throw UsageError("split needs --at <s> or --scan");
                points.push_back(split_at);
            }
            nlohmann::json all = nlohmann::json::array();
            for (auto s : points) {
                const auto rep = check_pruned_splitting(ideal, s);
                if (format == "json") {
                    all.push_back(report_json(rep));
                } else {
                    report_text(rep, !scan);
                }
            }
            const bool last_clean = check_last_generator(ideal);
            if (format == "json") {
                out << nlohmann::json{{"splits", all}, {"last_step_pruning", !last_clean}}.dump() << "\n";
            } else {
                out << "last_step_pruning=" << (last_clean ? "no" : "yes") << "\n";
            }
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace prunres::cli
