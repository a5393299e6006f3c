/* buchi_encodings.hpp -- NFW <-> Buchi encodings of recurring-infix languages */
#pragma once

#include <optional>

#include "sdaut/decision.hpp"
#include "sdaut/dfw.hpp"

namespace sdaut {

/// tNBW with the state space of n accepting the words that contain
/// infinitely many disjoint infixes from L(n). Every state recognizes the
/// whole language, so the result is semantically deterministic.
inline OmegaAutomaton encode_infty(const Nfw& n) {
    check_valid(n);
    OmegaAutomaton a;
    a.name = n.name + "_infty";
    a.alphabet = n.alphabet;
    a.num_states = n.num_states;
    a.initial = n.initial;
    a.kind = AcceptanceKind::BuchiTrans;
    a.init_delta();
    const bool init_accepting = nfw_accepts_epsilon(n);
    for (State q = 0; q < n.num_states; ++q)
        for (int l = 0; l < n.alphabet.size(); ++l) {
            const StateSet& succ = n.delta[q][static_cast<std::size_t>(l)];
            bool hits_accepting = init_accepting || sets_intersect(succ, n.accepting);
            for (State s : succ) a.add_trans(q, l, s, hits_accepting && set_contains(n.initial, s));
            for (State s : n.initial) a.add_trans(q, l, s, hits_accepting);
        }
    return a;
}

namespace detail {

inline Alphabet extend_with_dollar(const Alphabet& sigma, const std::string& dollar) {
    if (sigma.has(dollar)) throw std::invalid_argument("framing letter already in alphabet: " + dollar);
    return sigma.extended(dollar);
}

/// Check that big = small + one trailing framing letter; returns its index.
inline int framing_letter(const Alphabet& big, const Alphabet& small) {
    if (big.size() != small.size() + 1) throw std::invalid_argument("alphabet mismatch (framing letter)");
    for (int i = 0; i < small.size(); ++i)
        if (big.name(i) != small.name(i)) throw std::invalid_argument("alphabet mismatch (framing letter)");
    return small.size();
}

}  // namespace detail

/// Determinism-preserving variant: tNBW over the alphabet of n extended with
/// a framing letter, for the words with infinitely many framed L(n) blocks.
/// Framing transitions go from every state to the initial set and are
/// accepting exactly when they leave an accepting state of n.
inline OmegaAutomaton encode_infty_dollar(const Nfw& n, const std::string& dollar = "$") {
    check_valid(n);
    OmegaAutomaton a;
    a.name = n.name + "_infty_dollar";
    a.alphabet = detail::extend_with_dollar(n.alphabet, dollar);
    a.num_states = n.num_states;
    a.initial = n.initial;
    a.kind = AcceptanceKind::BuchiTrans;
    a.init_delta();
    const int d = n.alphabet.size();
    for (State q = 0; q < n.num_states; ++q) {
        for (int l = 0; l < d; ++l)
            for (State s : n.delta[q][static_cast<std::size_t>(l)]) a.add_trans(q, l, s, false);
        bool from_accepting = set_contains(n.accepting, q);
        for (State s : n.initial) a.add_trans(q, d, s, from_accepting);
    }
    return a;
}

/// State-based adaptation of encode_infty_dollar: one extra accepting state
/// that stands in for the accepting framing transitions.
inline OmegaAutomaton encode_infty_statebased(const Nfw& n, const std::string& dollar = "$") {
    check_valid(n);
    OmegaAutomaton a;
    a.name = n.name + "_infty_state";
    a.alphabet = detail::extend_with_dollar(n.alphabet, dollar);
    a.num_states = n.num_states + 1;
    a.initial = n.initial;
    a.kind = AcceptanceKind::BuchiState;
    a.init_delta();
    const int d = n.alphabet.size();
    const State acc = n.num_states;
    a.alpha_states = {acc};
    for (State q = 0; q < n.num_states; ++q) {
        for (int l = 0; l < d; ++l)
            for (State s : n.delta[q][static_cast<std::size_t>(l)]) a.add_trans(q, l, s);
        if (set_contains(n.accepting, q)) a.add_trans(q, d, acc);
        else
            for (State s : n.initial) a.add_trans(q, d, s);
    }
    for (int l = 0; l < d; ++l)
        for (State s : nfw_step(n, n.initial, l)) a.add_trans(acc, l, s);
    for (State s : n.initial) a.add_trans(acc, d, s);
    return a;
}

namespace detail {

/// violated[q]: some finite run from q traverses an accepting transition on a
/// word of the form (framing letter . complement-block)+. Decided by a
/// reachability search in the product with the block automaton.
inline std::vector<char> hopeless_states(const OmegaAutomaton& a, const Nfw& rbar) {
    const int dollar = framing_letter(a.alphabet, rbar.alphabet);
    const State wn = rbar.num_states + 1;  // block automaton: 0 = fresh start, 1+r = rbar state
    std::vector<char> violated(a.num_states, 0);

    for (State start = 0; start < a.num_states; ++start) {
        std::vector<char> seen(static_cast<std::size_t>(a.num_states) * wn * 2, 0);
        auto id = [&](State q, State w, int flag) {
            return (static_cast<std::size_t>(q) * wn + w) * 2 + static_cast<std::size_t>(flag);
        };
        std::queue<std::tuple<State, State, int>> bfs;
        seen[id(start, 0, 0)] = 1;
        bfs.emplace(start, 0, 0);
        bool found = false;
        while (!bfs.empty() && !found) {
            auto [q, w, flag] = bfs.front();
            bfs.pop();
            for (int l = 0; l < a.alphabet.size(); ++l) {
                // successors of the block automaton on letter l
                StateSet wsucc;
                if (l == dollar) {
                    bool at_block_end = w == 0 || set_contains(rbar.accepting, static_cast<State>(w - 1));
                    if (at_block_end)
                        for (State i : rbar.initial) wsucc.push_back(i + 1);
                } else if (w != 0) {
                    for (State s : rbar.delta[w - 1][static_cast<std::size_t>(l)]) wsucc.push_back(s + 1);
                }
                if (wsucc.empty()) continue;
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                    int nf = flag || e.acc;
                    for (State nw : wsucc) {
                        if (nf && nw != 0 && set_contains(rbar.accepting, nw - 1)) {
                            found = true;
                            break;
                        }
                        if (!seen[id(e.dst, nw, nf)]) {
                            seen[id(e.dst, nw, nf)] = 1;
                            bfs.emplace(e.dst, nw, nf);
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
        }
        violated[start] = found ? 1 : 0;
    }
    return violated;
}

}  // namespace detail

/// True iff no state of s can traverse an accepting transition on any word
/// made of framed complement blocks; rbar must recognize the complement of
/// the block language over the unframed alphabet.
inline bool is_hopeful(const OmegaAutomaton& a, const Nfw& rbar, const StateSet& s) {
    if (a.kind != AcceptanceKind::BuchiTrans)
        throw std::invalid_argument("is_hopeful requires a transition-based Buchi automaton");
    std::vector<char> violated = detail::hopeless_states(a, rbar);
    for (State q : s)
        if (violated.at(q)) return false;
    return true;
}

struct GoodSetReport {
    StateSet set;
    StateSet hopeful_singletons;
    std::string checked_against;
};

class NoGoodSet : public std::runtime_error {
public:
    NoGoodSet() : std::runtime_error("no-good-set") {}
};

namespace detail {

/// The witness language of a candidate set S: the words x over the unframed
/// alphabet such that some run from S on (framing . x) traverses alpha, or
/// the reached set is not hopeful. S qualifies iff this language equals L(r).
inline Nfw candidate_witness_dfw(const OmegaAutomaton& a, const StateSet& s, int dollar,
                                 const Alphabet& sigma, const std::vector<char>& violated,
                                 std::size_t budget) {
    using Macro = std::pair<StateSet, StateSet>;  // (clean runs, alpha-tainted runs)
    std::map<Macro, State> ids;
    std::vector<Macro> macros;
    auto intern = [&](const Macro& m) {
        auto it = ids.find(m);
        if (it != ids.end()) return it->second;
        if (macros.size() >= budget) throw BudgetExceeded(budget);
        State id = static_cast<State>(macros.size());
        ids.emplace(m, id);
        macros.push_back(m);
        return id;
    };

    Macro start;
    for (State q : s)
        for (const Edge& e : a.delta[q][static_cast<std::size_t>(dollar)])
            set_insert(e.acc ? start.second : start.first, e.dst);

    Nfw t;
    t.name = "witness";
    t.alphabet = sigma;
    t.initial = {intern(start)};
    std::vector<std::vector<StateSet>> rows;
    for (std::size_t i = 0; i < macros.size(); ++i) {
        std::vector<StateSet> row(static_cast<std::size_t>(sigma.size()));
        for (int l = 0; l < sigma.size(); ++l) {
            const auto [clean, tainted] = macros[i];
            Macro next;
            for (State q : clean)
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)])
                    set_insert(e.acc ? next.second : next.first, e.dst);
            for (State q : tainted)
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) set_insert(next.second, e.dst);
            row[static_cast<std::size_t>(l)] = {intern(next)};
        }
        rows.push_back(std::move(row));
    }
    t.num_states = static_cast<State>(macros.size());
    t.delta = std::move(rows);
    for (State q = 0; q < t.num_states; ++q) {
        const auto& [clean, tainted] = macros[q];
        bool bad = !tainted.empty();
        for (State x : clean) bad = bad || violated[x];
        for (State x : tainted) bad = bad || violated[x];
        if (bad) t.accepting.push_back(q);
    }
    return t;
}

}  // namespace detail

/// Search for the first nonempty state set, by ascending size then
/// lexicographic order, whose alpha behaviour on framed words characterizes
/// L(r) exactly. Throws NoGoodSet when none qualifies.
inline GoodSetReport find_good_set(const OmegaAutomaton& a, const Nfw& r,
                                   std::size_t budget = kDefaultStateBudget) {
    if (a.kind != AcceptanceKind::BuchiTrans)
        throw std::invalid_argument("find_good_set requires a transition-based Buchi automaton");
    check_valid(r);
    const int dollar = detail::framing_letter(a.alphabet, r.alphabet);
    const Nfw rbar = nfw_complement(r);
    const std::vector<char> violated = detail::hopeless_states(a, rbar);

    GoodSetReport report;
    report.checked_against = r.name;
    for (State q = 0; q < a.num_states; ++q)
        if (!violated[q]) report.hopeful_singletons.push_back(q);

    const State n = a.num_states;
    for (State k = 1; k <= n; ++k) {
        // combinations of size k in lexicographic order
        std::vector<State> combo(k);
        for (State i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            Nfw t = detail::candidate_witness_dfw(a, combo, dollar, r.alphabet, violated, budget);
            if (!nfw_equivalent(t, r)) {
                report.set = combo;
                return report;
            }
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - k + static_cast<State>(pos)) --pos;
            if (pos < 0) break;
            combo[static_cast<std::size_t>(pos)]++;
            for (State i = static_cast<State>(pos) + 1; i < k; ++i)
                combo[i] = combo[i - 1] + 1;
        }
    }
    throw NoGoodSet();
}

/// NFW for the block language of a tNBW that frames it, built from a good
/// set: runs follow the non-accepting transitions, an accepting sink catches
/// alpha traversals, and non-hopeful states accept directly. At most one
/// state larger than a; not larger when the language has no good prefix.
inline Nfw extract_nfw_infty(const OmegaAutomaton& a, const Nfw& r,
                             std::size_t budget = kDefaultStateBudget) {
    check_valid(r);
    const int dollar = detail::framing_letter(a.alphabet, r.alphabet);

    auto one_state = [&](bool accepting) {
        Nfw n;
        n.name = a.name + "_block";
        n.alphabet = r.alphabet;
        n.num_states = 1;
        n.initial = {0};
        n.init_delta();
        for (int l = 0; l < n.alphabet.size(); ++l) n.add_trans(0, l, 0);
        if (accepting) n.accepting = {0};
        return n;
    };
    if (nfw_is_universal(r)) return one_state(true);
    if (nfw_is_empty(r)) return one_state(false);

    GoodSetReport good = find_good_set(a, r, budget);
    std::vector<char> violated(a.num_states, 1);
    for (State q : good.hopeful_singletons) violated[q] = 0;

    Nfw n;
    n.name = a.name + "_block";
    n.alphabet = r.alphabet;
    n.num_states = a.num_states + 1;
    const State acc_sink = a.num_states;
    n.init_delta();
    for (State q : good.set)
        for (const Edge& e : a.delta[q][static_cast<std::size_t>(dollar)]) set_insert(n.initial, e.dst);
    for (State q = 0; q < a.num_states; ++q) {
        if (violated[q]) n.accepting.push_back(q);
        for (int l = 0; l < r.alphabet.size(); ++l)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                if (e.acc) n.add_trans(q, l, acc_sink);
                else n.add_trans(q, l, e.dst);
            }
    }
    for (int l = 0; l < r.alphabet.size(); ++l) n.add_trans(acc_sink, l, acc_sink);
    n.accepting.push_back(acc_sink);
    sort_unique(n.accepting);

    // drop unreachable states (the sink disappears when no good prefix exists)
    StateSet reach = reachable_states(n);
    std::vector<State> remap(n.num_states, 0);
    for (std::size_t i = 0; i < reach.size(); ++i) remap[reach[i]] = static_cast<State>(i);
    Nfw out;
    out.name = n.name;
    out.alphabet = n.alphabet;
    out.num_states = static_cast<State>(reach.size());
    out.init_delta();
    for (State q : n.initial) set_insert(out.initial, remap[q]);
    for (State q : n.accepting)
        if (set_contains(reach, q)) set_insert(out.accepting, remap[q]);
    for (std::size_t i = 0; i < reach.size(); ++i)
        for (int l = 0; l < n.alphabet.size(); ++l)
            for (State s : n.delta[reach[i]][static_cast<std::size_t>(l)])
                out.add_trans(static_cast<State>(i), l, remap[s]);
    return out;
}

/// Shortest word after which every continuation stays in the language, if any.
inline std::optional<Word> has_good_prefix(const Nfw& r) {
    check_valid(r);
    Nfw d = subset_construct(r);
    // states that can still reach a rejecting state are not good-prefix states
    std::vector<char> can_reject(d.num_states, 0);
    std::vector<std::vector<State>> radj(d.num_states);
    for (State q = 0; q < d.num_states; ++q)
        for (int l = 0; l < d.alphabet.size(); ++l)
            radj[d.delta[q][static_cast<std::size_t>(l)].front()].push_back(q);
    std::queue<State> bfs;
    for (State q = 0; q < d.num_states; ++q)
        if (!set_contains(d.accepting, q)) {
            can_reject[q] = 1;
            bfs.push(q);
        }
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop();
        for (State p : radj[q])
            if (!can_reject[p]) {
                can_reject[p] = 1;
                bfs.push(p);
            }
    }

    std::vector<int> parent(d.num_states, -2), via(d.num_states, -1);
    State start = d.initial.front();
    parent[start] = -1;
    std::queue<State> q2;
    q2.push(start);
    while (!q2.empty()) {
        State q = q2.front();
        q2.pop();
        if (!can_reject[q]) {
            Word w;
            for (State at = q; parent[at] != -1; at = static_cast<State>(parent[at])) w.push_back(via[at]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int l = 0; l < d.alphabet.size(); ++l) {
            State s = d.delta[q][static_cast<std::size_t>(l)].front();
            if (parent[s] == -2) {
                parent[s] = static_cast<int>(q);
                via[s] = l;
                q2.push(s);
            }
        }
    }
    return std::nullopt;
}

}  // namespace sdaut
