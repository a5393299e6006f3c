/* automata.hpp -- finite-word and omega-automata data model */
#pragma once

#include <cassert>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "sdaut/alphabet.hpp"
#include "sdaut/base.hpp"

namespace sdaut {

/// Nondeterministic automaton on finite words. The transition relation is
/// total once the automaton leaves the builder stage (see complete()).
struct Nfw {
    std::string name = "a";
    Alphabet alphabet;
    State num_states = 0;
    StateSet initial;
    // delta[state][letter] -> sorted successor set
    std::vector<std::vector<StateSet>> delta;
    StateSet accepting;
    // Set when complete() appended a fresh rejecting sink; size accounting in
    // the extraction operations needs to know whether the sink is synthetic.
    std::optional<State> completion_sink;

    void init_delta() {
        delta.assign(num_states, std::vector<StateSet>(static_cast<std::size_t>(alphabet.size())));
    }

    void add_trans(State src, int letter, State dst) {
        set_insert(delta.at(src).at(static_cast<std::size_t>(letter)), dst);
    }

    bool is_deterministic() const {
        if (initial.size() != 1) return false;
        for (const auto& row : delta)
            for (const auto& succs : row)
                if (succs.size() != 1) return false;
        return true;
    }
};

enum class AcceptanceKind { BuchiState, BuchiTrans, CoBuchiState, CoBuchiTrans };

inline bool is_buchi(AcceptanceKind k) {
    return k == AcceptanceKind::BuchiState || k == AcceptanceKind::BuchiTrans;
}
inline bool is_cobuchi(AcceptanceKind k) { return !is_buchi(k); }
inline bool is_state_based(AcceptanceKind k) {
    return k == AcceptanceKind::BuchiState || k == AcceptanceKind::CoBuchiState;
}
inline bool is_transition_based(AcceptanceKind k) { return !is_state_based(k); }

/// One outgoing transition; `acc` is meaningful only for transition-based
/// acceptance and stays false otherwise.
struct Edge {
    State dst;
    bool acc = false;

    bool operator==(const Edge& o) const { return dst == o.dst && acc == o.acc; }
};

/// Automaton over infinite words. Acceptance is Buchi or co-Buchi, each with
/// a state-based (alpha_states) or transition-based (per-edge flags) variant.
struct OmegaAutomaton {
    std::string name = "a";
    Alphabet alphabet;
    State num_states = 0;
    StateSet initial;
    AcceptanceKind kind = AcceptanceKind::BuchiTrans;
    // delta[state][letter] -> edges sorted by destination, one per destination
    std::vector<std::vector<std::vector<Edge>>> delta;
    StateSet alpha_states;  // used iff state-based

    void init_delta() {
        delta.assign(num_states, std::vector<std::vector<Edge>>(static_cast<std::size_t>(alphabet.size())));
    }

    void add_trans(State src, int letter, State dst, bool acc = false) {
        auto& edges = delta.at(src).at(static_cast<std::size_t>(letter));
        auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                   [](const Edge& e, State d) { return e.dst < d; });
        if (it != edges.end() && it->dst == dst) {
            it->acc = it->acc || acc;
        } else {
            edges.insert(it, Edge{dst, acc});
        }
    }

    bool is_deterministic() const {
        if (initial.size() != 1) return false;
        for (const auto& row : delta)
            for (const auto& edges : row)
                if (edges.size() != 1) return false;
        return true;
    }

    bool state_in_alpha(State q) const { return set_contains(alpha_states, q); }

    /// Copy of this automaton re-rooted at a single state.
    OmegaAutomaton rerooted(State q) const {
        OmegaAutomaton out = *this;
        out.initial = {q};
        return out;
    }
};

/// Ultimately periodic word prefix.period^omega, by letter indices.
struct Lasso {
    Word prefix;
    Word period;  // nonempty

    bool operator==(const Lasso& o) const { return prefix == o.prefix && period == o.period; }
};

// ---------------------------------------------------------------------------
// validity checks

inline void check_valid(const Nfw& n, bool require_total = true) {
    if (n.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
    if (n.initial.empty()) throw std::invalid_argument("no initial state");
    if (n.delta.size() != n.num_states) throw std::invalid_argument("delta size mismatch");
    for (State q : n.initial)
        if (q >= n.num_states) throw std::invalid_argument("initial state out of range");
    for (State q : n.accepting)
        if (q >= n.num_states) throw std::invalid_argument("accepting state out of range");
    for (State q = 0; q < n.num_states; ++q) {
        if (n.delta[q].size() != static_cast<std::size_t>(n.alphabet.size()))
            throw std::invalid_argument("delta row size mismatch");
        for (int a = 0; a < n.alphabet.size(); ++a) {
            const auto& succs = n.delta[q][static_cast<std::size_t>(a)];
            if (require_total && succs.empty())
                throw std::invalid_argument("missing transition from state " + std::to_string(q) +
                                            " on letter " + n.alphabet.name(a));
            for (State s : succs)
                if (s >= n.num_states) throw std::invalid_argument("transition target out of range");
        }
    }
}

inline void check_valid(const OmegaAutomaton& a) {
    if (a.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
    if (a.initial.empty()) throw std::invalid_argument("no initial state");
    if (a.delta.size() != a.num_states) throw std::invalid_argument("delta size mismatch");
    for (State q : a.initial)
        if (q >= a.num_states) throw std::invalid_argument("initial state out of range");
    if (is_state_based(a.kind)) {
        for (State q : a.alpha_states)
            if (q >= a.num_states) throw std::invalid_argument("alpha state out of range");
    } else if (!a.alpha_states.empty()) {
        throw std::invalid_argument("alpha_states set on a transition-based automaton");
    }
    for (State q = 0; q < a.num_states; ++q) {
        if (a.delta[q].size() != static_cast<std::size_t>(a.alphabet.size()))
            throw std::invalid_argument("delta row size mismatch");
        for (int l = 0; l < a.alphabet.size(); ++l) {
            const auto& edges = a.delta[q][static_cast<std::size_t>(l)];
            if (edges.empty())
                throw std::invalid_argument("missing transition from state " + std::to_string(q) +
                                            " on letter " + a.alphabet.name(l));
            for (const Edge& e : edges) {
                if (e.dst >= a.num_states) throw std::invalid_argument("transition target out of range");
                if (e.acc && is_state_based(a.kind))
                    throw std::invalid_argument("acc-marked transition on a state-based automaton");
            }
        }
    }
}

inline void check_lasso(const Alphabet& sigma, const Lasso& w) {
    if (w.period.empty()) throw std::invalid_argument("lasso period must be nonempty");
    for (int l : w.prefix)
        if (l < 0 || l >= sigma.size()) throw std::invalid_argument("lasso letter outside alphabet");
    for (int l : w.period)
        if (l < 0 || l >= sigma.size()) throw std::invalid_argument("lasso letter outside alphabet");
}

// ---------------------------------------------------------------------------
// basic graph utilities

inline StateSet reachable_states(const Nfw& n) {
    std::vector<char> seen(n.num_states, 0);
    std::queue<State> bfs;
    for (State q : n.initial) {
        seen[q] = 1;
        bfs.push(q);
    }
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop();
        for (const auto& succs : n.delta[q])
            for (State s : succs)
                if (!seen[s]) {
                    seen[s] = 1;
                    bfs.push(s);
                }
    }
    StateSet out;
    for (State q = 0; q < n.num_states; ++q)
        if (seen[q]) out.push_back(q);
    return out;
}

inline StateSet reachable_states(const OmegaAutomaton& a) {
    std::vector<char> seen(a.num_states, 0);
    std::queue<State> bfs;
    for (State q : a.initial) {
        seen[q] = 1;
        bfs.push(q);
    }
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop();
        for (const auto& edges : a.delta[q])
            for (const Edge& e : edges)
                if (!seen[e.dst]) {
                    seen[e.dst] = 1;
                    bfs.push(e.dst);
                }
    }
    StateSet out;
    for (State q = 0; q < a.num_states; ++q)
        if (seen[q]) out.push_back(q);
    return out;
}

/// Restrict an omega-automaton to its reachable part, renumbering densely in
/// ascending id order. Returns the mapping new id -> old id.
inline OmegaAutomaton prune_unreachable(const OmegaAutomaton& a, std::vector<State>* old_ids = nullptr) {
    StateSet reach = reachable_states(a);
    std::vector<State> remap(a.num_states, 0);
    for (std::size_t i = 0; i < reach.size(); ++i) remap[reach[i]] = static_cast<State>(i);

    OmegaAutomaton out;
    out.name = a.name;
    out.alphabet = a.alphabet;
    out.num_states = static_cast<State>(reach.size());
    out.kind = a.kind;
    out.init_delta();
    for (State q : a.initial) out.initial.push_back(remap[q]);
    sort_unique(out.initial);
    for (std::size_t i = 0; i < reach.size(); ++i) {
        State q = reach[i];
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)])
                out.add_trans(static_cast<State>(i), l, remap[e.dst], e.acc);
    }
    for (State q : a.alpha_states)
        if (set_contains(reach, q)) out.alpha_states.push_back(remap[q]);
    sort_unique(out.alpha_states);
    if (old_ids) *old_ids = reach;
    return out;
}

/// Subset image of a finite word in an Nfw.
inline StateSet nfw_step(const Nfw& n, const StateSet& from, int letter) {
    StateSet out;
    for (State q : from)
        for (State s : n.delta[q][static_cast<std::size_t>(letter)]) set_insert(out, s);
    return out;
}

inline StateSet nfw_run(const Nfw& n, const StateSet& from, const Word& w) {
    StateSet cur = from;
    for (int l : w) cur = nfw_step(n, cur, l);
    return cur;
}

inline bool nfw_accepts(const Nfw& n, const Word& w) {
    return sets_intersect(nfw_run(n, n.initial, w), n.accepting);
}

inline bool nfw_accepts_epsilon(const Nfw& n) { return sets_intersect(n.initial, n.accepting); }

// ---------------------------------------------------------------------------
// complete: totalize a builder-stage Nfw by adding one rejecting sink

inline Nfw complete(const Nfw& n) {
    bool total = true;
    for (State q = 0; q < n.num_states && total; ++q)
        for (int a = 0; a < n.alphabet.size() && total; ++a)
            if (n.delta[q][static_cast<std::size_t>(a)].empty()) total = false;
    if (total && n.num_states > 0) return n;

    Nfw out = n;
    State sink = out.num_states;
    out.num_states += 1;
    out.delta.emplace_back(static_cast<std::size_t>(out.alphabet.size()));
    for (State q = 0; q < out.num_states; ++q)
        for (int a = 0; a < out.alphabet.size(); ++a)
            if (out.delta[q][static_cast<std::size_t>(a)].empty())
                out.delta[q][static_cast<std::size_t>(a)] = {sink};
    if (out.initial.empty()) out.initial = {sink};
    out.completion_sink = sink;
    return out;
}

/// One-state automaton accepting every infinite word over `sigma`.
inline OmegaAutomaton universal_tnbw(const Alphabet& sigma) {
    OmegaAutomaton a;
    a.name = "universal";
    a.alphabet = sigma;
    a.num_states = 1;
    a.initial = {0};
    a.kind = AcceptanceKind::BuchiTrans;
    a.init_delta();
    for (int l = 0; l < sigma.size(); ++l) a.add_trans(0, l, 0, true);
    return a;
}

}  // namespace sdaut
