#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "octoramsey/loops.hpp"
#include "octoramsey/naf.hpp"
#include "octoramsey/signs.hpp"
#include "octoramsey/term.hpp"
#include "octoramsey/units.hpp"
#include "octoramsey/witness.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace octoramsey;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;  // a mathematical property failed
constexpr int kExitUsage = 2;      // bad input or bad flags

bool is_ground(const Term& t) {
    if (t.is_pair()) return is_ground(t.left()) && is_ground(t.right());
    return t.is_unit();
}

bool has_unit_leaf(const Term& t) {
    if (t.is_pair()) return has_unit_leaf(t.left()) || has_unit_leaf(t.right());
    return t.is_unit();
}

std::string element_name(const LoopTable& L, std::size_t i) {
    return L.has_names() ? L.name(i) : std::to_string(i);
}

std::size_t element_from_token(const LoopTable& L, const std::string& token) {
    const bool numeric = !token.empty() &&
                         token.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
        const std::size_t i = std::stoul(token);
        if (i >= L.order()) throw MalformedTable("element index out of range: " + token);
        return i;
    }
    return L.index_of(token);
}

std::vector<std::size_t> elements_from_list(const LoopTable& L, const std::string& list) {
    std::vector<std::size_t> out;
    std::string token;
    std::istringstream in(list);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(element_from_token(L, token));
    }
    return out;
}

LoopTable load_loop(const std::string& group, const std::string& file) {
    if (!group.empty()) return builtin_loop(group);
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open table file: " + file);
        return parse_loop_table(in);
    }
    return parse_loop_table(std::cin);
}

int cmd_eval(const std::string& text, bool as_json) {
    const Term t = parse(text);
    if (is_ground(t)) {
        const SignedUnit v = eval_units(t);
        if (as_json) {
            std::cout << json{{"term", render(t)}, {"kind", "unit"},
                              {"value", to_string(v)}}.dump(2) << '\n';
        } else {
            std::cout << to_string(v) << '\n';
        }
        return kExitOk;
    }
    if (has_unit_leaf(t))
        throw Error("mixed terms are not evaluable: use only variables or only units");
    const SymbolicOctonion v = symbolic_eval(t);
    if (as_json) {
        json coeffs = json::object();
        for (std::size_t j = 0; j < 8; ++j)
            coeffs["e" + std::to_string(j)] = v.coeffs[j].to_string();
        std::cout << json{{"term", render(t)}, {"kind", "symbolic"},
                          {"coefficients", coeffs}}.dump(2) << '\n';
    } else {
        std::cout << to_lines(v);
    }
    return kExitOk;
}

int cmd_naf(const std::string& value, bool decode, bool as_json) {
    if (decode) {
        const BigInt v = naf_decode(naf_from_string(value));
        if (as_json)
            std::cout << json{{"naf", value}, {"value", v.str()}}.dump(2) << '\n';
        else
            std::cout << v << '\n';
        return kExitOk;
    }
    BigInt v;
    try {
        v = BigInt(value);
    } catch (const std::exception&) {
        throw Error("not a decimal integer: " + value);
    }
    const std::string text = to_string(naf_encode(v));
    if (as_json)
        std::cout << json{{"value", v.str()}, {"naf", text}}.dump(2) << '\n';
    else
        std::cout << text << '\n';
    return kExitOk;
}

int cmd_distinguish(const std::string& left_text, const std::string& right_text,
                    bool as_json) {
    const Term t = parse(left_text);
    const Term u = parse(right_text);
    const Assignment mu = distinguish(t, u);
    const SignedUnit vt = eval_assigned(t, mu);
    const SignedUnit vu = eval_assigned(u, mu);
    if (as_json) {
        json assignment = json::object();
        for (const auto& [n, value] : mu)
            assignment["x" + std::to_string(n)] = to_string(value);
        std::cout << json{{"left", render(t)}, {"right", render(u)},
                          {"assignment", assignment},
                          {"left_value", to_string(vt)},
                          {"right_value", to_string(vu)}}.dump(2) << '\n';
        return kExitOk;
    }
    bool first = true;
    for (const auto& [n, value] : mu) {
        if (!first) std::cout << ' ';
        std::cout << 'x' << n << '=' << to_string(value);
        first = false;
    }
    std::cout << " / " << to_string(vt) << " vs " << to_string(vu) << '\n';
    return kExitOk;
}

int cmd_lambda(const std::string& text, bool as_json) {
    const Term t = parse(text);
    const LambdaSets ls = lambda_sets(t);
    if (as_json) {
        json entries = json::array();
        for (std::size_t j = 0; j < 8; ++j)
            for (const auto& [alpha, sign] : ls.buckets[j]) {
                json alpha_json = json::array();
                for (const auto a : alpha) alpha_json.push_back(static_cast<int>(a));
                entries.push_back(json{{"slot", "e" + std::to_string(j)},
                                       {"alpha", alpha_json},
                                       {"sign", sign > 0 ? "+" : "-"}});
            }
        std::cout << json{{"term", render(t)}, {"arity", ls.arity},
                          {"entries", entries}}.dump(2) << '\n';
    } else {
        std::cout << to_lines(ls);
    }
    return kExitOk;
}

json report_to_json(const WitnessReport& r) {
    json out{{"left", render(r.left)},
             {"right", render(r.right)},
             {"verdict", r.verdict == ClaimVerdict::Distinct ? "DISTINCT" : "EQUAL"},
             {"case", r.kase == ClaimCase::SameString ? "SAME_STRING" : "DIFFERENT_VARS"}};
    if (r.verdict == ClaimVerdict::Distinct) out["slot"] = "e" + std::to_string(r.slot);
    return out;
}

int cmd_theorem(std::size_t leaves, std::size_t indices, bool pairs, bool as_json) {
    const auto reports = claim_sweep(static_cast<std::uint32_t>(indices), leaves);
    bool all_distinct = true;
    std::size_t skipped = 0;
    json report_json = json::array();
    for (const auto& r : reports) {
        all_distinct = all_distinct && r.verdict == ClaimVerdict::Distinct;
        if (as_json)
            report_json.push_back(report_to_json(r));
        else
            std::cout << r.line() << '\n';
    }
    if (pairs) {
        const PairSweepResult pair_result =
            claim_pair_sweep(static_cast<std::uint32_t>(indices), leaves);
        skipped = pair_result.skipped_identical;
        for (const auto& r : pair_result.reports) {
            all_distinct = all_distinct && r.verdict == ClaimVerdict::Distinct;
            if (as_json)
                report_json.push_back(report_to_json(r));
            else
                std::cout << r.line() << '\n';
        }
        if (!as_json)
            std::cout << "# coincident composites skipped: " << skipped << '\n';
    }
    if (as_json) {
        json out{{"leaf_cap", leaves}, {"index_bound", indices},
                 {"reports", report_json}, {"all_distinct", all_distinct}};
        if (pairs) out["coincident_composites_skipped"] = skipped;
        std::cout << out.dump(2) << '\n';
    }
    return all_distinct ? kExitOk : kExitFalsified;
}

int cmd_inx(const std::string& text, std::size_t indices, std::size_t leaves,
            bool as_json) {
    const Term t = parse(text);
    const SymbolicOctonion v = symbolic_eval(t, leaves);
    const bool member = in_x(v, static_cast<std::uint32_t>(indices), leaves);
    if (as_json) {
        std::cout << json{{"term", render(t)}, {"index_bound", indices},
                          {"leaf_cap", leaves}, {"member", member},
                          {"note", "bounded verification only"}}.dump(2) << '\n';
    } else {
        std::cout << "IN-X index_bound=" << indices << " leaf_cap=" << leaves << " -> "
                  << (member ? "yes" : "no") << " (bounded verification only)\n";
    }
    return kExitOk;
}

int cmd_loop_check(const std::string& group, const std::string& file, bool as_json) {
    const LoopTable L = load_loop(group, file);
    const LoopReport report = validate_loop(L);
    if (!report.valid()) {
        if (as_json)
            std::cout << json{{"order", L.order()}, {"valid", false},
                              {"detail", report.detail}}.dump(2) << '\n';
        else
            std::cout << "invalid order=" << L.order() << '\n';
        std::cerr << "table invalid: " << report.detail << '\n';
        return kExitUsage;
    }
    const bool moufang = is_moufang(L);
    const bool assoc = is_associative(L);
    if (as_json) {
        std::cout << json{{"order", L.order()}, {"valid", true},
                          {"moufang", moufang}, {"associative", assoc}}.dump(2) << '\n';
    } else {
        std::cout << "valid " << (moufang ? "moufang" : "nonmoufang") << ' '
                  << (assoc ? "associative" : "nonassociative") << " order=" << L.order()
                  << '\n';
    }
    return kExitOk;
}

int cmd_loop_emit(const LoopTable& L, bool as_json) {
    if (as_json) {
        json rows = json::array();
        for (std::size_t a = 0; a < L.order(); ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < L.order(); ++b) row.push_back(L.mul(a, b));
            rows.push_back(row);
        }
        json names = json::array();
        if (L.has_names())
            for (std::size_t i = 0; i < L.order(); ++i) names.push_back(L.name(i));
        std::cout << json{{"order", L.order()}, {"identity", L.identity()},
                          {"table", rows}, {"names", names}}.dump(2) << '\n';
    } else {
        std::cout << format_loop_table(L);
    }
    return kExitOk;
}

int cmd_loop_reduce(const std::string& group, const std::string& file,
                    const std::string& prefix_list, const std::string& cycle_list,
                    std::size_t blocks, bool to_group, bool as_json) {
    const LoopTable L = load_loop(group, file);
    PeriodicSequence s;
    s.prefix = elements_from_list(L, prefix_list);
    s.cycle = elements_from_list(L, cycle_list);
    if (s.cycle.empty()) throw Error("--cycle must name at least one element");

    if (to_group) {
        const GroupReductionCertificate cert = mg2_reduce_to_group(L, s);
        const bool pairing = cert.kind == GroupReductionCertificate::Kind::Pairing;
        if (as_json) {
            json out{{"kind", pairing ? "PAIRING" : "SUBSEQUENCE"}};
            if (pairing) {
                json pairs = json::array();
                for (const auto& [a, b, product] : cert.pairs)
                    pairs.push_back(json{{"positions", {a, b}},
                                         {"product", element_name(L, product)}});
                out["pairs"] = pairs;
            } else {
                json positions = json::array();
                for (std::size_t pos : cert.positions)
                    positions.push_back(json{{"position", pos},
                                             {"element", element_name(L, s.at(pos))}});
                out["positions"] = positions;
            }
            std::cout << out.dump(2) << '\n';
            return kExitOk;
        }
        std::cout << "REDUCE-TO-GROUP kind=" << (pairing ? "PAIRING" : "SUBSEQUENCE")
                  << '\n';
        if (pairing) {
            for (const auto& [a, b, product] : cert.pairs)
                std::cout << "PAIR " << a << ' ' << b << " -> "
                          << element_name(L, product) << '\n';
        } else {
            for (std::size_t pos : cert.positions)
                std::cout << "POS " << pos << " -> " << element_name(L, s.at(pos)) << '\n';
        }
        return kExitOk;
    }

    const ReductionCertificate cert = ramsey_reduce(L, s, blocks);
    if (as_json) {
        json block_json = json::array();
        for (const auto& block : cert.blocks) block_json.push_back(block);
        std::cout << json{{"element", element_name(L, cert.element)},
                          {"order", cert.order},
                          {"blocks", block_json}}.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "REDUCE element=" << element_name(L, cert.element)
              << " order=" << cert.order << '\n';
    for (const auto& block : cert.blocks) {
        std::size_t product = block.empty() ? L.identity() : s.at(block[0]);
        std::cout << "BLOCK";
        for (std::size_t i = 0; i < block.size(); ++i) {
            std::cout << ' ' << block[i];
            if (i > 0) product = L.mul(product, s.at(block[i]));
        }
        std::cout << " -> " << element_name(L, product) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact octonion bracketing calculus and finite Moufang loop checks"};
    app.require_subcommand(1);
    bool as_json = false;
    auto add_json_flag = [&as_json](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit a JSON report instead of plain text");
    };

    std::string eval_term;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a bracketed term");
    add_json_flag(eval_cmd);
    eval_cmd->add_option("term", eval_term, "term text, e.g. \"(e1(e2e3))\" or \"(x0x1)\"")
        ->required();

    std::string naf_value;
    bool naf_decode_flag = false;
    auto* naf_cmd = app.add_subcommand("naf", "nonadjacent-form codec");
    add_json_flag(naf_cmd);
    naf_cmd->add_option("value", naf_value, "decimal integer, or digit string with --decode")
        ->required();
    naf_cmd->add_flag("--decode", naf_decode_flag, "decode a {1,0,T} digit string");

    std::string dist_left, dist_right;
    auto* dist_cmd = app.add_subcommand(
        "distinguish", "assignment separating two bracketings of the same string");
    add_json_flag(dist_cmd);
    dist_cmd->add_option("left", dist_left)->required();
    dist_cmd->add_option("right", dist_right)->required();

    std::string lambda_term;
    auto* lambda_cmd =
        app.add_subcommand("lambda", "assignment buckets of an orderly term");
    add_json_flag(lambda_cmd);
    lambda_cmd->add_option("term", lambda_term)->required();

    std::size_t th_leaves = 5, th_indices = 7;
    bool th_pairs = false;
    auto* th_cmd = app.add_subcommand(
        "theorem", "sweep the bracketing-separation claim over bounded chains");
    add_json_flag(th_cmd);
    th_cmd->add_option("--leaves", th_leaves, "total leaf cap per chain")
        ->check(CLI::PositiveNumber);
    th_cmd->add_option("--indices", th_indices, "number of variable indices available")
        ->check(CLI::PositiveNumber);
    th_cmd->add_flag("--pairs", th_pairs, "also sweep independent chain pairs");

    std::string inx_term;
    std::size_t inx_indices = 7, inx_leaves = 5;
    auto* inx_cmd = app.add_subcommand(
        "inx", "bounded membership of a term's value in the distinguished set");
    add_json_flag(inx_cmd);
    inx_cmd->add_option("term", inx_term)->required();
    inx_cmd->add_option("--indices", inx_indices)->check(CLI::PositiveNumber);
    inx_cmd->add_option("--leaves", inx_leaves)->check(CLI::PositiveNumber);

    auto* loop_cmd = app.add_subcommand("loop", "finite loop table operations");
    loop_cmd->require_subcommand(1);

    std::string check_group, check_file;
    auto* check_cmd = loop_cmd->add_subcommand("check", "validate a table (stdin by default)");
    add_json_flag(check_cmd);
    check_cmd->add_option("--group", check_group, "builtin name: z<n>, s3, octo16");
    check_cmd->add_option("--file", check_file, "table file");

    std::string mg2_group, mg2_file;
    auto* mg2_cmd = loop_cmd->add_subcommand("mg2", "double a group table");
    add_json_flag(mg2_cmd);
    mg2_cmd->add_option("--group", mg2_group, "builtin name: z<n>, s3");
    mg2_cmd->add_option("--file", mg2_file, "group table file");

    std::string red_group, red_file, red_prefix, red_cycle;
    std::size_t red_blocks = 3;
    bool red_to_group = false;
    auto* red_cmd = loop_cmd->add_subcommand("reduce", "reduction certificates");
    add_json_flag(red_cmd);
    red_cmd->add_option("--group", red_group, "builtin name");
    red_cmd->add_option("--file", red_file, "table file");
    red_cmd->add_option("--prefix", red_prefix, "comma separated prefix elements");
    red_cmd->add_option("--cycle", red_cycle, "comma separated cycle elements")->required();
    red_cmd->add_option("--blocks", red_blocks, "blocks to certify")->check(CLI::PositiveNumber);
    red_cmd->add_flag("--to-group", red_to_group,
                      "certify reduction into the embedded group of a doubled table");

    auto* octo_cmd = loop_cmd->add_subcommand("octo16", "emit the order-16 sign loop table");
    add_json_flag(octo_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval_cmd) return cmd_eval(eval_term, as_json);
        if (*naf_cmd) return cmd_naf(naf_value, naf_decode_flag, as_json);
        if (*dist_cmd) return cmd_distinguish(dist_left, dist_right, as_json);
        if (*lambda_cmd) return cmd_lambda(lambda_term, as_json);
        if (*th_cmd) return cmd_theorem(th_leaves, th_indices, th_pairs, as_json);
        if (*inx_cmd) return cmd_inx(inx_term, inx_indices, inx_leaves, as_json);
        if (*check_cmd) return cmd_loop_check(check_group, check_file, as_json);
        if (*mg2_cmd) return cmd_loop_emit(m_g2(load_loop(mg2_group, mg2_file)), as_json);
        if (*octo_cmd) return cmd_loop_emit(octonion_sign_loop(), as_json);
        if (*red_cmd)
            return cmd_loop_reduce(red_group, red_file, red_prefix, red_cycle, red_blocks,
                                   red_to_group, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
