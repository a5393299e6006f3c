/* complement.hpp -- complementation: dualization, breakpoint, level rankings */
#pragma once

#include <map>
#include <optional>

#include "sdaut/membership.hpp"

namespace sdaut {

namespace detail {

/// Breakpoint determinization of a transition-based co-Buchi automaton.
/// Macrostates pair the reachable set S with the subset O of runs that have
/// stayed clear of alpha since the last breakpoint; a transition that empties
/// O is a breakpoint and refills it from S. The result is a deterministic
/// tNCW for the same language, so flipping its kind complements it.
inline OmegaAutomaton breakpoint_determinize(const OmegaAutomaton& a, std::size_t budget) {
    using Macro = std::pair<StateSet, StateSet>;
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

    OmegaAutomaton out;
    out.name = a.name + "_det";
    out.alphabet = a.alphabet;
    out.kind = AcceptanceKind::CoBuchiTrans;
    out.initial = {intern({a.initial, a.initial})};

    std::vector<std::vector<std::vector<Edge>>> rows;
    for (std::size_t i = 0; i < macros.size(); ++i) {
        std::vector<std::vector<Edge>> row(static_cast<std::size_t>(a.alphabet.size()));
        for (int l = 0; l < a.alphabet.size(); ++l) {
            const auto [S, O] = macros[i];
            StateSet s_next, o_next;
            for (State q : S)
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) set_insert(s_next, e.dst);
            for (State q : O)
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)])
                    if (!e.acc) set_insert(o_next, e.dst);
            bool breakpoint = o_next.empty();
            if (breakpoint) o_next = s_next;
            row[static_cast<std::size_t>(l)] = {Edge{intern({s_next, o_next}), breakpoint}};
        }
        rows.push_back(std::move(row));
    }
    out.num_states = static_cast<State>(macros.size());
    out.delta = std::move(rows);
    return out;
}

/// Rank-based complementation of a transition-based Buchi automaton.
///
/// Macrostates carry a level ranking over the currently reachable set plus a
/// breakpoint set of runs still holding an even rank. Rank constraints along
/// an edge (q,sigma,q'): rank(q') <= rank(q), strictly smaller when the edge
/// is accepting and rank(q) is odd. Successors are restricted to the maximal
/// admissible ranking and its one-state decrements; any valid ranking run can
/// be replayed under this restriction by delaying decrements, so the
/// restriction loses no words.
inline OmegaAutomaton rank_complement(const OmegaAutomaton& a, std::size_t budget) {
    const State n = a.num_states;
    const int cap = 2 * static_cast<int>(n);
    const int absent = -1;

    struct Macro {
        std::vector<int> rank;  // absent = -1
        std::vector<char> in_o;

        bool operator<(const Macro& m) const {
            if (rank != m.rank) return rank < m.rank;
            return in_o < m.in_o;
        }
    };

    std::map<Macro, State> ids;
    std::vector<Macro> macros;
    StateSet alpha;
    auto intern = [&](const Macro& m) {
        auto it = ids.find(m);
        if (it != ids.end()) return it->second;
        if (macros.size() >= budget) throw BudgetExceeded(budget);
        State id = static_cast<State>(macros.size());
        ids.emplace(m, id);
        macros.push_back(m);
        bool o_empty = true;
        for (char c : m.in_o) o_empty = o_empty && !c;
        if (o_empty) alpha.push_back(id);
        return id;
    };

    Macro start;
    start.rank.assign(n, absent);
    start.in_o.assign(n, 0);
    for (State q : a.initial) start.rank[q] = cap;

    OmegaAutomaton out;
    out.name = a.name + "_bar";
    out.alphabet = a.alphabet;
    out.kind = AcceptanceKind::BuchiState;
    out.initial = {intern(start)};

    std::vector<std::vector<std::vector<Edge>>> rows;
    for (std::size_t i = 0; i < macros.size(); ++i) {
        std::vector<std::vector<Edge>> row(static_cast<std::size_t>(a.alphabet.size()));
        for (int l = 0; l < a.alphabet.size(); ++l) {
            const Macro cur = macros[i];
            bool o_empty = true;
            for (char c : cur.in_o) o_empty = o_empty && !c;

            // maximal admissible successor ranking
            std::vector<int> bound(n, absent);
            std::vector<char> o_reach(n, 0);
            for (State q = 0; q < n; ++q) {
                if (cur.rank[q] == absent) continue;
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                    int allowed = cur.rank[q];
                    if (e.acc && (allowed & 1)) allowed -= 1;
                    if (bound[e.dst] == absent || allowed < bound[e.dst]) bound[e.dst] = allowed;
                    if (cur.in_o[q]) o_reach[e.dst] = 1;
                }
            }

            auto make_macro = [&](const std::vector<int>& g) {
                Macro next;
                next.rank = g;
                next.in_o.assign(n, 0);
                for (State q = 0; q < n; ++q) {
                    if (g[q] == absent || (g[q] & 1)) continue;
                    next.in_o[q] = o_empty ? 1 : o_reach[q];
                }
                return next;
            };

            auto& edges = row[static_cast<std::size_t>(l)];
            auto add_edge = [&](const Macro& m) {
                State dst = intern(m);
                auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                           [](const Edge& e, State d) { return e.dst < d; });
                if (it == edges.end() || it->dst != dst) edges.insert(it, Edge{dst, false});
            };

            add_edge(make_macro(bound));
            for (State q = 0; q < n; ++q) {
                if (bound[q] == absent || bound[q] == 0) continue;
                std::vector<int> g = bound;
                g[q] -= 1;
                add_edge(make_macro(g));
            }
        }
        rows.push_back(std::move(row));
    }

    out.num_states = static_cast<State>(macros.size());
    out.delta = std::move(rows);
    out.alpha_states = std::move(alpha);
    sort_unique(out.alpha_states);
    return out;
}

}  // namespace detail

/// Automaton for the complement language. Deterministic input flips between
/// the dual acceptance kinds for free; nondeterministic co-Buchi goes through
/// the breakpoint determinization; nondeterministic Buchi through the
/// rank-based construction. Constructions refusing to fit in `budget` states
/// raise BudgetExceeded.
inline OmegaAutomaton complement(const OmegaAutomaton& a0, std::size_t budget = kDefaultStateBudget) {
    check_valid(a0);
    OmegaAutomaton a = as_transition_based(a0);
    if (a.is_deterministic()) {
        a.kind = is_buchi(a.kind) ? AcceptanceKind::CoBuchiTrans : AcceptanceKind::BuchiTrans;
        a.name = a0.name + "_bar";
        return a;
    }
    if (is_cobuchi(a.kind)) {
        OmegaAutomaton det = detail::breakpoint_determinize(a, budget);
        det.kind = AcceptanceKind::BuchiTrans;  // dual of the determinized tNCW
        det.name = a0.name + "_bar";
        return det;
    }
    return detail::rank_complement(a, budget);
}

}  // namespace sdaut
