/* cli.hpp -- command-line surface; kept in a header so tests drive it in-process */
#pragma once

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sdaut/buchi_encodings.hpp"
#include "sdaut/cobuchi_encodings.hpp"
#include "sdaut/families.hpp"
#include "sdaut/format.hpp"
#include "sdaut/oracles.hpp"
#include "sdaut/weak.hpp"

namespace sdaut {

// exit codes: 0 = yes/success, 1 = no (witness on stdout), 2 = error
inline constexpr int kCliYes = 0;
inline constexpr int kCliNo = 1;
inline constexpr int kCliError = 2;

namespace cli_detail {

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

inline ParsedAutomaton load(const std::string& path, Io& io) {
    if (path == "-") return parse_automaton(io.in);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_automaton(f);
}

inline OmegaAutomaton load_omega(const std::string& path, Io& io) {
    ParsedAutomaton p = load(path, io);
    if (std::holds_alternative<Nfw>(p))
        throw std::runtime_error(path + ": expected an omega-automaton, got kind nfw");
    return std::get<OmegaAutomaton>(std::move(p));
}

inline Nfw load_nfw(const std::string& path, Io& io) {
    ParsedAutomaton p = load(path, io);
    if (!std::holds_alternative<Nfw>(p))
        throw std::runtime_error(path + ": expected kind nfw");
    return std::get<Nfw>(std::move(p));
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& cin = std::cin,
                   std::ostream& cout = std::cout, std::ostream& cerr = std::cerr) {
    cli_detail::Io io{cin, cout, cerr};

    CLI::App app{"semantically deterministic omega-automata toolkit", "sdaut"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t budget = kDefaultStateBudget;
    int bound = -1;
    std::uint64_t seed = 1;
    app.add_option("--budget", budget, "state budget for constructions");
    app.add_option("--bound", bound, "length bound for bounded searches");
    app.add_option("--seed", seed, "seed for generators");

    int exit_code = kCliYes;

    // check sd|empty|universal|weak FILE
    std::string check_mode, check_file;
    auto* check = app.add_subcommand("check", "decide a property of an automaton");
    check->add_option("mode", check_mode)->required()->check(CLI::IsMember({"sd", "empty", "universal", "weak"}));
    check->add_option("file", check_file)->required();
    check->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(check_file, io);
        if (check_mode == "sd") {
            if (auto cex = is_sd(a, budget)) {
                if (cex->initial_violation)
                    cout << "# non-equivalent initial states " << cex->succ_a << " " << cex->succ_b << "\n";
                else
                    cout << "# state " << cex->state << " letter " << a.alphabet.name(cex->letter)
                         << " successors " << cex->succ_a << " " << cex->succ_b << "\n";
                cout << print_lasso(a.alphabet, cex->witness) << "\n";
                exit_code = kCliNo;
            }
        } else if (check_mode == "empty") {
            if (auto w = is_empty(a)) {
                cout << print_lasso(a.alphabet, *w) << "\n";
                exit_code = kCliNo;
            }
        } else if (check_mode == "universal") {
            if (auto w = is_universal(a, budget)) {
                cout << print_lasso(a.alphabet, *w) << "\n";
                exit_code = kCliNo;
            }
        } else {
            if (!is_weak(a)) exit_code = kCliNo;
        }
    });

    // contains A B / equiv A B
    std::string left_file, right_file;
    auto* contains_cmd = app.add_subcommand("contains", "language containment L(A) <= L(B)");
    contains_cmd->add_option("A", left_file)->required();
    contains_cmd->add_option("B", right_file)->required();
    contains_cmd->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(left_file, io);
        OmegaAutomaton b = cli_detail::load_omega(right_file, io);
        if (auto w = contains(a, b, budget)) {
            cout << print_lasso(a.alphabet, *w) << "\n";
            exit_code = kCliNo;
        }
    });
    auto* equiv_cmd = app.add_subcommand("equiv", "language equivalence");
    equiv_cmd->add_option("A", left_file)->required();
    equiv_cmd->add_option("B", right_file)->required();
    equiv_cmd->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(left_file, io);
        OmegaAutomaton b = cli_detail::load_omega(right_file, io);
        if (auto w = contains(a, b, budget)) {
            cout << "# accepted by " << a.name << " only\n" << print_lasso(a.alphabet, *w) << "\n";
            exit_code = kCliNo;
        } else if (auto v = contains(b, a, budget)) {
            cout << "# accepted by " << b.name << " only\n" << print_lasso(a.alphabet, *v) << "\n";
            exit_code = kCliNo;
        }
    });

    // member FILE --prefix U --period V
    std::string member_file, member_prefix, member_period;
    auto* member = app.add_subcommand("member", "lasso membership");
    member->add_option("file", member_file)->required();
    member->add_option("--prefix", member_prefix, "prefix letters, space-separated");
    member->add_option("--period", member_period, "period letters, space-separated")->required();
    member->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(member_file, io);
        Lasso w{parse_word(a.alphabet, member_prefix), parse_word(a.alphabet, member_period)};
        if (!lasso_membership(a, w)) exit_code = kCliNo;
    });

    // encode infty|infty-dollar|infty-state|bowtie|bowtie-state NFWFILE
    std::string encode_mode, encode_file;
    auto* encode = app.add_subcommand("encode", "NFW to omega-automaton encodings");
    encode->add_option("mode", encode_mode)
        ->required()
        ->check(CLI::IsMember({"infty", "infty-dollar", "infty-state", "bowtie", "bowtie-state"}));
    encode->add_option("file", encode_file)->required();
    encode->callback([&] {
        Nfw n = cli_detail::load_nfw(encode_file, io);
        if (encode_mode == "infty") cout << serialize(encode_infty(n));
        else if (encode_mode == "infty-dollar") cout << serialize(encode_infty_dollar(n));
        else if (encode_mode == "infty-state") cout << serialize(encode_infty_statebased(n));
        else if (encode_mode == "bowtie") cout << serialize(encode_bowtie(n));
        else cout << serialize(encode_bowtie_statebased(n));
    });

    // extract buchi AUTFILE --lang RFILE / extract cobuchi AUTFILE [--optimize-bad-infix]
    std::string extract_mode, extract_file, extract_lang;
    bool optimize_bad_infix = false;
    auto* extract = app.add_subcommand("extract", "NFW extraction from framed encodings");
    extract->add_option("mode", extract_mode)->required()->check(CLI::IsMember({"buchi", "cobuchi"}));
    extract->add_option("file", extract_file)->required();
    extract->add_option("--lang", extract_lang, "block-language NFW (required for buchi)");
    extract->add_flag("--optimize-bad-infix", optimize_bad_infix);
    extract->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(extract_file, io);
        if (extract_mode == "buchi") {
            if (extract_lang.empty()) throw std::runtime_error("extract buchi requires --lang RFILE");
            Nfw r = cli_detail::load_nfw(extract_lang, io);
            cout << serialize(extract_nfw_infty(a, r, budget));
        } else {
            Nfw n = extract_nfw_bowtie(a);
            if (optimize_bad_infix) {
                if (auto w = has_bad_infix(n, bound)) {
                    Nfw opt = bad_infix_optimize(a, n, *w);
                    cout << "# bad-infix";
                    for (int l : w->word) cout << " " << n.alphabet.name(l);
                    cout << "\n";
                    n = std::move(opt);
                }
            }
            cout << serialize(n);
        }
    });

    // det-weak / complement / minimize-dww / normalize FILE
    std::string single_file;
    auto* detweak = app.add_subcommand("det-weak", "determinize an SD weak automaton");
    detweak->add_option("file", single_file)->required();
    detweak->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(single_file, io);
        WeakDeterminization det = determinize_sd_nww(a);
        cout << "# state-ids";
        for (State q : det.original_ids) cout << " " << q;
        cout << "\n" << serialize(det.dww);
    });
    auto* compl_cmd = app.add_subcommand("complement", "complement an omega-automaton");
    compl_cmd->add_option("file", single_file)->required();
    compl_cmd->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(single_file, io);
        cout << serialize(complement(a, budget));
    });
    auto* minimize = app.add_subcommand("minimize-dww", "minimize a deterministic weak automaton");
    minimize->add_option("file", single_file)->required();
    minimize->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(single_file, io);
        cout << serialize(minimize_dww(a));
    });
    auto* normalize_cmd = app.add_subcommand("normalize", "normalize a transition-based co-Buchi automaton");
    normalize_cmd->add_option("file", single_file)->required();
    normalize_cmd->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(single_file, io);
        cout << serialize(normalize(a));
    });

    // convert --to state|transition FILE
    std::string convert_to;
    auto* convert = app.add_subcommand("convert", "switch between acceptance styles");
    convert->add_option("--to", convert_to)->required()->check(CLI::IsMember({"state", "transition"}));
    convert->add_option("file", single_file)->required();
    convert->callback([&] {
        OmegaAutomaton a = cli_detail::load_omega(single_file, io);
        cout << serialize(convert_to == "state" ? to_state_based(a) : to_transition_based(a));
    });

    // family NAME --n K
    std::string family_name;
    int family_n = 1;
    auto* family = app.add_subcommand("family", "generate a fixture automaton");
    family->add_option("name", family_name)
        ->required()
        ->check(CLI::IsMember({"nfw-good", "nfw-good-nodollar", "tdbw-dn", "tdcw-dn", "dfw-fld",
                               "nfw-dist", "sd-nww"}));
    family->add_option("--n", family_n, "family parameter")->required();
    family->callback([&] {
        if (family_name == "nfw-good") cout << serialize(families::nfw_good_words(family_n));
        else if (family_name == "nfw-good-nodollar") cout << serialize(families::nfw_good_words_nodollar(family_n));
        else if (family_name == "tdbw-dn") cout << serialize(families::tdbw_dn(family_n));
        else if (family_name == "tdcw-dn") cout << serialize(families::tdcw_dn(family_n));
        else if (family_name == "dfw-fld") cout << serialize(families::dfw_first_last_differ(family_n));
        else if (family_name == "nfw-dist") cout << serialize(families::nfw_distance_differ(family_n));
        else {
            GenParams p;
            p.states = static_cast<State>(family_n);
            p.seed = seed;
            cout << serialize(generate_sd_nww(p));
        }
    });

    // experiment succinctness --max-n K
    std::string experiment_name;
    int max_n = 3;
    auto* experiment = app.add_subcommand("experiment", "run a fixture experiment, TSV output");
    experiment->add_option("name", experiment_name)->required()->check(CLI::IsMember({"succinctness"}));
    experiment->add_option("--max-n", max_n, "largest family parameter")->required();
    experiment->callback([&] {
        cout << "n\tsd_states\tdet_states\tverdict\twall_ms\n";
        for (int n = 1; n <= max_n; ++n) {
            auto t0 = std::chrono::steady_clock::now();
            OmegaAutomaton sd = encode_infty(families::nfw_good_words(n));
            OmegaAutomaton det = families::tdbw_dn(n);
            bool eq = equivalent(sd, det, budget);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            cout << n << "\t" << sd.num_states << "\t" << det.num_states << "\t"
                 << (eq ? "equivalent" : "different") << "\t" << ms << "\n";
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            cout << app.help();
            return kCliYes;
        }
        cerr << "error: " << e.what() << "\n";
        return kCliError;
    } catch (const BudgetExceeded& e) {
        cerr << "error budget-exceeded limit=" << e.limit << "\n";
        return kCliError;
    } catch (const std::exception& e) {
        cerr << "error: " << e.what() << "\n";
        return kCliError;
    }
    return exit_code;
}

}  // namespace sdaut
