/* families.hpp -- parametric automata families used as fixtures */
#pragma once

#include <variant>

#include "sdaut/automata.hpp"

namespace sdaut {
namespace families {

enum class Family {
    NfwGoodWords,
    NfwGoodWordsNoDollar,
    TdbwDn,
    TdcwDn,
    DfwFirstLastDiffer,
    NfwDistanceDiffer,
};

struct FamilySpec {
    Family family;
    int n = 1;  // >= 1
};

std::variant<Nfw, OmegaAutomaton> make(const FamilySpec& spec);

namespace detail {

inline Alphabet numbers_alphabet(int n, bool with_hash, bool with_dollar) {
    Alphabet sigma;
    for (int i = 1; i <= n; ++i) sigma.add(std::to_string(i));
    if (with_hash) sigma.add("#");
    if (with_dollar) sigma.add("$");
    return sigma;
}

}  // namespace detail

/// NFW with 3n+3 states for the marked words "$ x # i" with x over {1..n}
/// containing i. One three-state gadget per guessed final letter: scanning x
/// before i was seen, after it was seen, and after the # mark. Missing
/// transitions lead to a rejecting sink, which is part of the state count.
inline Nfw nfw_good_words(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Nfw a;
    a.name = "good" + std::to_string(n);
    a.alphabet = detail::numbers_alphabet(n, true, true);
    a.num_states = static_cast<State>(3 * n + 3);
    a.initial = {0};
    a.init_delta();
    const int hash = n, dollar = n + 1;
    const State acc = static_cast<State>(3 * n + 1), sink = static_cast<State>(3 * n + 2);
    a.accepting = {acc};
    auto waiting = [&](int i) { return static_cast<State>(3 * (i - 1) + 1); };
    auto seen = [&](int i) { return static_cast<State>(3 * (i - 1) + 2); };
    auto marked = [&](int i) { return static_cast<State>(3 * (i - 1) + 3); };

    for (int i = 1; i <= n; ++i) {
        a.add_trans(0, dollar, waiting(i));
        for (int j = 0; j < n; ++j) {
            a.add_trans(waiting(i), j, j + 1 == i ? seen(i) : waiting(i));
            a.add_trans(seen(i), j, seen(i));
            a.add_trans(marked(i), j, j + 1 == i ? acc : sink);
        }
        a.add_trans(seen(i), hash, marked(i));
    }
    for (State q = 0; q < a.num_states; ++q)
        for (int l = 0; l < a.alphabet.size(); ++l)
            if (a.delta[q][static_cast<std::size_t>(l)].empty()) a.add_trans(q, l, sink);
    a.completion_sink = sink;
    return a;
}

/// The unmarked variant: same gadgets, no leading "$"; the initial state
/// guesses which gadget to behave as on the first letter.
inline Nfw nfw_good_words_nodollar(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Nfw a;
    a.name = "goodnd" + std::to_string(n);
    a.alphabet = detail::numbers_alphabet(n, true, false);
    a.num_states = static_cast<State>(3 * n + 3);
    a.initial = {0};
    a.init_delta();
    const int hash = n;
    const State acc = static_cast<State>(3 * n + 1), sink = static_cast<State>(3 * n + 2);
    a.accepting = {acc};
    auto waiting = [&](int i) { return static_cast<State>(3 * (i - 1) + 1); };
    auto seen = [&](int i) { return static_cast<State>(3 * (i - 1) + 2); };
    auto marked = [&](int i) { return static_cast<State>(3 * (i - 1) + 3); };

    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < n; ++j) {
            a.add_trans(0, j, j + 1 == i ? seen(i) : waiting(i));
            a.add_trans(waiting(i), j, j + 1 == i ? seen(i) : waiting(i));
            a.add_trans(seen(i), j, seen(i));
            a.add_trans(marked(i), j, j + 1 == i ? acc : sink);
        }
        a.add_trans(seen(i), hash, marked(i));
    }
    for (State q = 0; q < a.num_states; ++q)
        for (int l = 0; l < a.alphabet.size(); ++l)
            if (a.delta[q][static_cast<std::size_t>(l)].empty()) a.add_trans(q, l, sink);
    a.completion_sink = sink;
    return a;
}

/// Deterministic tNBW with 2^(n+1) states for the words with infinitely many
/// good infixes: an accumulate copy collects the numbers read since the last
/// "$", a check copy fires alpha when the letter after "#" was collected.
inline OmegaAutomaton tdbw_dn(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 20) throw BudgetExceeded(1u << 21);
    OmegaAutomaton a;
    a.name = "tdbw_d" + std::to_string(n);
    a.alphabet = detail::numbers_alphabet(n, true, true);
    const State masks = static_cast<State>(1u << n);
    a.num_states = masks * 2;
    a.kind = AcceptanceKind::BuchiTrans;
    a.init_delta();
    const int hash = n, dollar = n + 1;
    auto accu = [&](State mask) { return mask * 2; };
    auto check = [&](State mask) { return mask * 2 + 1; };
    a.initial = {check(0)};

    for (State mask = 0; mask < masks; ++mask) {
        for (int j = 0; j < n; ++j) a.add_trans(accu(mask), j, accu(mask | (1u << j)));
        a.add_trans(accu(mask), hash, check(mask));
        a.add_trans(accu(mask), dollar, accu(0));
        for (int j = 0; j < n; ++j)
            a.add_trans(check(mask), j, check(0), (mask >> j) & 1u);
        a.add_trans(check(mask), hash, check(0));
        a.add_trans(check(mask), dollar, accu(0));
    }
    return a;
}

/// Deterministic tNCW with 2^(n+1)+1 states for the words with finitely many
/// "$" or a suffix made of good blocks; a pass state traps the runs that keep
/// completing good blocks without traversing alpha.
inline OmegaAutomaton tdcw_dn(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 20) throw BudgetExceeded(1u << 21);
    OmegaAutomaton a;
    a.name = "tdcw_d" + std::to_string(n);
    a.alphabet = detail::numbers_alphabet(n, true, true);
    const State masks = static_cast<State>(1u << n);
    a.num_states = masks * 2 + 1;
    a.kind = AcceptanceKind::CoBuchiTrans;
    a.init_delta();
    const int hash = n, dollar = n + 1;
    auto accu = [&](State mask) { return mask * 2; };
    auto check = [&](State mask) { return mask * 2 + 1; };
    const State pass = masks * 2;
    a.initial = {check(0)};

    for (State mask = 0; mask < masks; ++mask) {
        // accumulate copy
        for (int j = 0; j < n; ++j) a.add_trans(accu(mask), j, accu(mask | (1u << j)), false);
        a.add_trans(accu(mask), hash, check(mask), mask == 0);
        a.add_trans(accu(mask), dollar, accu(0), true);
        // check copy; the empty check state idles safely until the next "$"
        for (int j = 0; j < n; ++j) {
            bool in_set = (mask >> j) & 1u;
            if (in_set) a.add_trans(check(mask), j, pass, false);
            else a.add_trans(check(mask), j, check(0), mask != 0);
        }
        a.add_trans(check(mask), hash, check(0), mask != 0);
        a.add_trans(check(mask), dollar, accu(0), true);
    }
    for (int j = 0; j < n; ++j) a.add_trans(pass, j, check(0), true);
    a.add_trans(pass, hash, check(0), true);
    a.add_trans(pass, dollar, accu(0), false);
    return a;
}

/// DFW over {0,1} for the words of length n+1 whose first and last letters
/// differ. No word extends in the language, so it has no good prefix.
inline Nfw dfw_first_last_differ(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Nfw a;
    a.name = "fld" + std::to_string(n);
    a.alphabet = Alphabet({"0", "1"});
    a.num_states = static_cast<State>(2 * n + 3);
    a.initial = {0};
    a.init_delta();
    const State acc = static_cast<State>(2 * n + 1), sink = static_cast<State>(2 * n + 2);
    a.accepting = {acc};
    auto mid = [&](int f, int k) { return static_cast<State>(1 + f * n + (k - 1)); };
    for (int f = 0; f < 2; ++f) {
        a.add_trans(0, f, mid(f, 1));
        for (int k = 1; k < n; ++k)
            for (int l = 0; l < 2; ++l) a.add_trans(mid(f, k), l, mid(f, k + 1));
        for (int l = 0; l < 2; ++l) a.add_trans(mid(f, n), l, l == f ? sink : acc);
    }
    for (int l = 0; l < 2; ++l) {
        a.add_trans(acc, l, sink);
        a.add_trans(sink, l, sink);
    }
    a.completion_sink = sink;
    return a;
}

/// NFW over {0,1} for the words containing two different letters at distance
/// n: guess the left position, count n letters, compare.
inline Nfw nfw_distance_differ(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Nfw a;
    a.name = "dist" + std::to_string(n);
    a.alphabet = Alphabet({"0", "1"});
    a.num_states = static_cast<State>(2 * n + 3);
    a.initial = {0};
    a.init_delta();
    const State acc = static_cast<State>(2 * n + 1), sink = static_cast<State>(2 * n + 2);
    a.accepting = {acc};
    auto mid = [&](int f, int k) { return static_cast<State>(1 + f * n + (k - 1)); };
    for (int f = 0; f < 2; ++f) {
        a.add_trans(0, f, 0);
        a.add_trans(0, f, mid(f, 1));
        for (int k = 1; k < n; ++k)
            for (int l = 0; l < 2; ++l) a.add_trans(mid(f, k), l, mid(f, k + 1));
        for (int l = 0; l < 2; ++l) a.add_trans(mid(f, n), l, l == f ? sink : acc);
    }
    for (int l = 0; l < 2; ++l) {
        a.add_trans(acc, l, acc);
        a.add_trans(sink, l, sink);
    }
    return a;
}

/// Four-state SD weak automaton that no pruning determinizes: the initial
/// state guesses the letter after the next one, a wrong guess falls back to
/// the initial state, a right one reaches the accepting sink. Every state
/// accepts every word, so the automaton is semantically deterministic.
inline OmegaAutomaton sd_nww_not_dbp() {
    OmegaAutomaton a;
    a.name = "sdnww_nodbp";
    a.alphabet = Alphabet({"a", "b"});
    a.num_states = 4;
    a.initial = {0};
    a.kind = AcceptanceKind::BuchiState;
    a.alpha_states = {3};
    a.init_delta();
    const State guess_a = 1, guess_b = 2, acc = 3;
    for (int l = 0; l < 2; ++l) {
        a.add_trans(0, l, guess_a);
        a.add_trans(0, l, guess_b);
        a.add_trans(acc, l, acc);
    }
    a.add_trans(guess_a, 0, acc);
    a.add_trans(guess_a, 1, 0);
    a.add_trans(guess_b, 1, acc);
    a.add_trans(guess_b, 0, 0);
    return a;
}

/// tNCW over {0,1} for the words that are eventually periodic with period n:
/// a waiting component guesses the period vector and jumps into its cyclic
/// checker; staying in one checker forever means every letter matches the
/// letter n positions earlier.
inline OmegaAutomaton tncw_eventually_periodic(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 16) throw BudgetExceeded(1u << 20);
    OmegaAutomaton a;
    a.name = "evper" + std::to_string(n);
    a.alphabet = Alphabet({"0", "1"});
    const State vectors = static_cast<State>(1u << n);
    a.num_states = 1 + vectors * static_cast<State>(n);
    a.initial = {0};
    a.kind = AcceptanceKind::CoBuchiTrans;
    a.init_delta();
    auto checker = [&](State u, int j) { return 1 + u * static_cast<State>(n) + static_cast<State>(j); };
    for (int l = 0; l < 2; ++l) {
        a.add_trans(0, l, 0, true);
        for (State u = 0; u < vectors; ++u)
            for (int j = 0; j < n; ++j) a.add_trans(0, l, checker(u, j), true);
    }
    for (State u = 0; u < vectors; ++u)
        for (int j = 0; j < n; ++j) {
            int expected = static_cast<int>((u >> j) & 1u);
            a.add_trans(checker(u, j), expected, checker(u, (j + 1) % n), false);
            a.add_trans(checker(u, j), 1 - expected, 0, true);
        }
    return a;
}

inline std::variant<Nfw, OmegaAutomaton> make(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::NfwGoodWords: return nfw_good_words(spec.n);
        case Family::NfwGoodWordsNoDollar: return nfw_good_words_nodollar(spec.n);
        case Family::TdbwDn: return tdbw_dn(spec.n);
        case Family::TdcwDn: return tdcw_dn(spec.n);
        case Family::DfwFirstLastDiffer: return dfw_first_last_differ(spec.n);
        case Family::NfwDistanceDiffer: return nfw_distance_differ(spec.n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace families
}  // namespace sdaut
