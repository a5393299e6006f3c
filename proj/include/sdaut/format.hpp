/* format.hpp -- line-oriented text format for automata and lasso witnesses */
#pragma once

#include <sstream>
#include <variant>

#include "sdaut/automata.hpp"

namespace sdaut {

// Grammar, one item per line ('#' comments on their own lines):
//   automaton NAME
//   kind nfw|nbw|ncw|nww|tnbw|tncw|tnww
//   alphabet L1 L2 ...
//   states N
//   init I1 I2 ...
//   acc-states S1 ...          (nfw and state-based kinds)
//   trans SRC LETTER DST [acc] (acc marks alpha transitions, transition-based only)
//   end

using ParsedAutomaton = std::variant<Nfw, OmegaAutomaton>;

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

inline ParsedAutomaton parse_automaton(std::istream& in) {
    std::string name = "a";
    std::string kind;
    std::optional<Alphabet> alphabet;
    std::optional<State> states;
    StateSet init, acc_states;
    struct RawTrans {
        State src, dst;
        int letter;
        bool acc;
        int line;
    };
    std::vector<RawTrans> trans;
    bool in_automaton = false, done = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty() || toks.front()[0] == '#') continue;
        if (done) throw ParseError(lineno, "content after end");
        const std::string& head = toks.front();
        auto need_header = [&]() {
            if (!in_automaton) throw ParseError(lineno, "expected 'automaton NAME' first");
        };
        if (head == "automaton") {
            if (in_automaton) throw ParseError(lineno, "nested automaton");
            if (toks.size() != 2) throw ParseError(lineno, "expected: automaton NAME");
            name = toks[1];
            in_automaton = true;
        } else if (head == "kind") {
            need_header();
            if (toks.size() != 2) throw ParseError(lineno, "expected: kind KIND");
            kind = toks[1];
        } else if (head == "alphabet") {
            need_header();
            if (toks.size() < 2) throw ParseError(lineno, "alphabet needs at least one letter");
            try {
                alphabet = Alphabet(std::vector<std::string>(toks.begin() + 1, toks.end()));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (head == "states") {
            need_header();
            if (toks.size() != 2) throw ParseError(lineno, "expected: states N");
            states = static_cast<State>(std::stoul(toks[1]));
        } else if (head == "init" || head == "acc-states") {
            need_header();
            StateSet& target = head == "init" ? init : acc_states;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                try {
                    set_insert(target, static_cast<State>(std::stoul(toks[i])));
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad state id: " + toks[i]);
                }
            }
        } else if (head == "trans") {
            need_header();
            if (!alphabet) throw ParseError(lineno, "trans before alphabet");
            if (toks.size() != 4 && !(toks.size() == 5 && toks[4] == "acc"))
                throw ParseError(lineno, "expected: trans SRC LETTER DST [acc]");
            auto letter = alphabet->index(toks[2]);
            if (!letter) throw ParseError(lineno, "unknown letter: " + toks[2]);
            try {
                trans.push_back({static_cast<State>(std::stoul(toks[1])),
                                 static_cast<State>(std::stoul(toks[3])), *letter, toks.size() == 5,
                                 lineno});
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad state id in trans");
            }
        } else if (head == "end") {
            need_header();
            done = true;
        } else {
            throw ParseError(lineno, "unknown item: " + head);
        }
    }
    if (!in_automaton) throw ParseError(lineno, "no automaton in input");
    if (!done) throw ParseError(lineno, "missing end");
    if (kind.empty()) throw ParseError(lineno, "missing kind");
    if (!alphabet) throw ParseError(lineno, "missing alphabet");
    if (!states) throw ParseError(lineno, "missing states");

    auto check_ids = [&](const RawTrans& t) {
        if (t.src >= *states || t.dst >= *states) throw ParseError(t.line, "state id out of range");
    };

    if (kind == "nfw") {
        Nfw n;
        n.name = name;
        n.alphabet = *alphabet;
        n.num_states = *states;
        n.initial = init;
        n.accepting = acc_states;
        n.init_delta();
        for (const auto& t : trans) {
            check_ids(t);
            if (t.acc) throw ParseError(t.line, "acc marker on a finite-word transition");
            n.add_trans(t.src, t.letter, t.dst);
        }
        try {
            check_valid(n);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        return n;
    }

    AcceptanceKind k;
    if (kind == "nbw" || kind == "nww") k = AcceptanceKind::BuchiState;
    else if (kind == "ncw") k = AcceptanceKind::CoBuchiState;
    else if (kind == "tnbw" || kind == "tnww") k = AcceptanceKind::BuchiTrans;
    else if (kind == "tncw") k = AcceptanceKind::CoBuchiTrans;
    else throw ParseError(lineno, "unknown kind: " + kind);

    OmegaAutomaton a;
    a.name = name;
    a.alphabet = *alphabet;
    a.num_states = *states;
    a.initial = init;
    a.kind = k;
    a.init_delta();
    if (is_state_based(k)) a.alpha_states = acc_states;
    else if (!acc_states.empty()) throw ParseError(lineno, "acc-states on a transition-based kind");
    for (const auto& t : trans) {
        check_ids(t);
        if (t.acc && is_state_based(k)) throw ParseError(t.line, "acc marker on a state-based kind");
        a.add_trans(t.src, t.letter, t.dst, t.acc);
    }
    try {
        check_valid(a);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
    return a;
}

inline ParsedAutomaton parse_automaton(const std::string& text) {
    std::istringstream in(text);
    return parse_automaton(in);
}

inline std::string kind_keyword(AcceptanceKind k) {
    switch (k) {
        case AcceptanceKind::BuchiState: return "nbw";
        case AcceptanceKind::BuchiTrans: return "tnbw";
        case AcceptanceKind::CoBuchiState: return "ncw";
        case AcceptanceKind::CoBuchiTrans: return "tncw";
    }
    return "nbw";
}

inline std::string serialize(const Nfw& n) {
    std::ostringstream out;
    out << "automaton " << n.name << "\n";
    out << "kind nfw\n";
    out << "alphabet";
    for (const auto& l : n.alphabet.letters()) out << " " << l;
    out << "\nstates " << n.num_states << "\ninit";
    for (State q : n.initial) out << " " << q;
    out << "\nacc-states";
    for (State q : n.accepting) out << " " << q;
    out << "\n";
    for (State q = 0; q < n.num_states; ++q)
        for (int l = 0; l < n.alphabet.size(); ++l)
            for (State s : n.delta[q][static_cast<std::size_t>(l)])
                out << "trans " << q << " " << n.alphabet.name(l) << " " << s << "\n";
    out << "end\n";
    return out.str();
}

inline std::string serialize(const OmegaAutomaton& a) {
    std::ostringstream out;
    out << "automaton " << a.name << "\n";
    out << "kind " << kind_keyword(a.kind) << "\n";
    out << "alphabet";
    for (const auto& l : a.alphabet.letters()) out << " " << l;
    out << "\nstates " << a.num_states << "\ninit";
    for (State q : a.initial) out << " " << q;
    out << "\n";
    if (is_state_based(a.kind)) {
        out << "acc-states";
        for (State q : a.alpha_states) out << " " << q;
        out << "\n";
    }
    for (State q = 0; q < a.num_states; ++q)
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                out << "trans " << q << " " << a.alphabet.name(l) << " " << e.dst;
                if (e.acc) out << " acc";
                out << "\n";
            }
    out << "end\n";
    return out.str();
}

// witness lines: `lasso PREFIX ; PERIOD`, letters space-separated

inline std::string print_lasso(const Alphabet& sigma, const Lasso& w) {
    std::ostringstream out;
    out << "lasso";
    for (int l : w.prefix) out << " " << sigma.name(l);
    out << " ;";
    for (int l : w.period) out << " " << sigma.name(l);
    return out.str();
}

inline Lasso parse_lasso(const Alphabet& sigma, const std::string& line) {
    auto toks = detail::tokenize(line);
    std::size_t at = 0;
    if (at < toks.size() && toks[at] == "lasso") ++at;
    Lasso w;
    bool in_period = false;
    for (; at < toks.size(); ++at) {
        if (toks[at] == ";") {
            in_period = true;
            continue;
        }
        auto l = sigma.index(toks[at]);
        if (!l) throw std::invalid_argument("unknown letter in lasso: " + toks[at]);
        (in_period ? w.period : w.prefix).push_back(*l);
    }
    if (w.period.empty()) throw std::invalid_argument("lasso period must be nonempty");
    return w;
}

/// Word parser for CLI flags: whitespace-separated letter names.
inline Word parse_word(const Alphabet& sigma, const std::string& text) {
    Word w;
    for (const auto& tok : detail::tokenize(text)) {
        auto l = sigma.index(tok);
        if (!l) throw std::invalid_argument("unknown letter: " + tok);
        w.push_back(*l);
    }
    return w;
}

}  // namespace sdaut
