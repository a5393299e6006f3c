/* membership.hpp -- lasso membership and emptiness with witness extraction */
#pragma once

#include <functional>
#include <optional>
#include <queue>

#include "sdaut/transform.hpp"

namespace sdaut {

namespace detail {

/// Letters of a shortest path from any state in `from` to `to`, walking only
/// edges accepted by `edge_ok` and states accepted by `node_ok`.
inline std::optional<Word> bfs_letters(const OmegaAutomaton& a, const StateSet& from, State to,
                                       const std::function<bool(State)>& node_ok,
                                       const std::function<bool(const Edge&)>& edge_ok) {
    std::vector<int> parent(a.num_states, -2);  // -2 unseen, -1 root
    std::vector<int> via(a.num_states, -1);
    std::queue<State> bfs;
    for (State q : from) {
        if (!node_ok(q)) continue;
        if (parent[q] == -2) {
            parent[q] = -1;
            bfs.push(q);
        }
    }
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop();
        if (q == to) {
            Word w;
            for (State at = q; parent[at] != -1; at = static_cast<State>(parent[at]))
                w.push_back(via[at]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                if (!edge_ok(e) || !node_ok(e.dst) || parent[e.dst] != -2) continue;
                parent[e.dst] = static_cast<int>(q);
                via[e.dst] = l;
                bfs.push(e.dst);
            }
    }
    return std::nullopt;
}

inline std::function<bool(State)> any_state() {
    return [](State) { return true; };
}
inline std::function<bool(const Edge&)> any_edge() {
    return [](const Edge&) { return true; };
}

}  // namespace detail

/// True iff the automaton accepts prefix.period^omega. Decided on the finite
/// product of states and word positions: a run is accepting iff it reaches a
/// cycle of the periodic part that satisfies the acceptance condition.
inline bool lasso_membership(const OmegaAutomaton& a0, const Lasso& w) {
    check_lasso(a0.alphabet, w);
    const OmegaAutomaton a = as_transition_based(a0);
    const bool buchi = is_buchi(a.kind);
    const int pre = static_cast<int>(w.prefix.size());
    const int total = pre + static_cast<int>(w.period.size());

    auto letter_at = [&](int p) { return p < pre ? w.prefix[static_cast<std::size_t>(p)]
                                                 : w.period[static_cast<std::size_t>(p - pre)]; };
    auto next_pos = [&](int p) { return p + 1 < total ? p + 1 : pre; };
    auto node = [&](State q, int p) { return static_cast<std::size_t>(q) * static_cast<std::size_t>(total) +
                                             static_cast<std::size_t>(p); };

    // reachability through the full product
    std::vector<char> reach(static_cast<std::size_t>(a.num_states) * static_cast<std::size_t>(total), 0);
    std::queue<std::pair<State, int>> bfs;
    for (State q : a.initial) {
        reach[node(q, 0)] = 1;
        bfs.emplace(q, 0);
    }
    while (!bfs.empty()) {
        auto [q, p] = bfs.front();
        bfs.pop();
        for (const Edge& e : a.delta[q][static_cast<std::size_t>(letter_at(p))]) {
            int np = next_pos(p);
            if (!reach[node(e.dst, np)]) {
                reach[node(e.dst, np)] = 1;
                bfs.emplace(e.dst, np);
            }
        }
    }

    // restricted subgraph over the periodic part
    const int plen = total - pre;
    auto pnode = [&](State q, int p) {
        return static_cast<std::size_t>(q) * static_cast<std::size_t>(plen) + static_cast<std::size_t>(p - pre);
    };
    std::vector<std::vector<State>> adj(static_cast<std::size_t>(a.num_states) * static_cast<std::size_t>(plen));
    for (State q = 0; q < a.num_states; ++q)
        for (int p = pre; p < total; ++p)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(letter_at(p))]) {
                if (!buchi && e.acc) continue;
                adj[pnode(q, p)].push_back(static_cast<State>(pnode(e.dst, next_pos(p))));
            }
    std::vector<StateSet> sccs = detail::tarjan_sccs(adj);
    std::vector<int> comp(adj.size(), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (State v : sccs[c]) comp[v] = static_cast<int>(c);

    auto reachable_pnode = [&](std::size_t v) {
        State q = static_cast<State>(v / static_cast<std::size_t>(plen));
        int p = pre + static_cast<int>(v % static_cast<std::size_t>(plen));
        return reach[node(q, p)] != 0;
    };

    if (buchi) {
        for (State q = 0; q < a.num_states; ++q)
            for (int p = pre; p < total; ++p)
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(letter_at(p))]) {
                    if (!e.acc) continue;
                    std::size_t u = pnode(q, p), v = pnode(e.dst, next_pos(p));
                    if (comp[u] == comp[v] && reachable_pnode(u)) return true;
                }
        return false;
    }
    for (const StateSet& c : sccs) {
        bool cyclic = c.size() > 1;
        if (!cyclic)
            for (State s : adj[c.front()])
                if (s == c.front()) cyclic = true;
        if (!cyclic) continue;
        for (State v : c)
            if (reachable_pnode(v)) return true;
    }
    return false;
}

/// Witness lasso when the language is nonempty; nullopt when empty.
inline std::optional<Lasso> is_empty(const OmegaAutomaton& a0) {
    check_valid(a0);
    const OmegaAutomaton a = as_transition_based(a0);
    SccOrder full = scc_order(a);
    StateSet reach = reachable_states(a);

    if (is_buchi(a.kind)) {
        // reachable cycle through an accepting transition
        for (State q : reach)
            for (int l = 0; l < a.alphabet.size(); ++l)
                for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                    if (!e.acc || full.component_of[q] != full.component_of[e.dst]) continue;
                    const StateSet& comp = full.components[static_cast<std::size_t>(full.component_of[q])];
                    auto in_comp = [&comp](State s) { return set_contains(comp, s); };
                    Word prefix = *detail::bfs_letters(a, a.initial, q, detail::any_state(), detail::any_edge());
                    Word cycle = {l};
                    if (e.dst != q) {
                        Word back = *detail::bfs_letters(a, {e.dst}, q, in_comp, detail::any_edge());
                        cycle.insert(cycle.end(), back.begin(), back.end());
                    }
                    return Lasso{prefix, cycle};
                }
        return std::nullopt;
    }

    // reachable cycle avoiding accepting transitions
    SccOrder safe = alpha_components(a);
    for (State q : reach) {
        const StateSet& comp = safe.components[static_cast<std::size_t>(safe.component_of[q])];
        auto in_comp = [&comp](State s) { return set_contains(comp, s); };
        auto safe_edge = [](const Edge& e) { return !e.acc; };
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                if (e.acc || !set_contains(comp, e.dst)) continue;
                Word cycle = {l};
                if (e.dst != q) {
                    auto back = detail::bfs_letters(a, {e.dst}, q, in_comp, safe_edge);
                    if (!back) continue;
                    cycle.insert(cycle.end(), back->begin(), back->end());
                }
                Word prefix = *detail::bfs_letters(a, a.initial, q, detail::any_state(), detail::any_edge());
                return Lasso{prefix, cycle};
            }
    }
    return std::nullopt;
}

}  // namespace sdaut
