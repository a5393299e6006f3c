/* scc.hpp -- strongly connected components and their topological order */
#pragma once

#include <functional>
#include <queue>
#include <vector>

#include "sdaut/automata.hpp"

namespace sdaut {

/// SCC decomposition in topological order, sources first. Ties are broken by
/// the smallest state id contained in a component, so the order is a pure
/// function of the graph.
struct SccOrder {
    std::vector<StateSet> components;
    std::vector<int> component_of;  // state -> index into components

    int size() const { return static_cast<int>(components.size()); }
};

namespace detail {

/// Iterative Tarjan over an adjacency list; returns components in discovery
/// (reverse-topological-ish) order, to be reordered by the caller.
inline std::vector<StateSet> tarjan_sccs(const std::vector<std::vector<State>>& adj) {
    const State n = static_cast<State>(adj.size());
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<State> stack;
    std::vector<StateSet> sccs;
    int next_index = 0;

    struct Frame {
        State v;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (State root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                State w = adj[f.v][f.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    StateSet comp;
                    State w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != f.v);
                    sort_unique(comp);
                    sccs.push_back(std::move(comp));
                }
                State v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return sccs;
}

/// Topologically sort components (sources first) with a min-heap keyed by the
/// smallest contained state id.
inline SccOrder order_components(std::vector<StateSet> sccs, const std::vector<std::vector<State>>& adj) {
    const int m = static_cast<int>(sccs.size());
    std::vector<int> comp_of(adj.size(), -1);
    for (int c = 0; c < m; ++c)
        for (State q : sccs[static_cast<std::size_t>(c)]) comp_of[q] = c;

    std::vector<int> indeg(static_cast<std::size_t>(m), 0);
    std::vector<std::vector<int>> cadj(static_cast<std::size_t>(m));
    for (State q = 0; q < adj.size(); ++q)
        for (State s : adj[q]) {
            int a = comp_of[q], b = comp_of[s];
            if (a != b) cadj[static_cast<std::size_t>(a)].push_back(b);
        }
    for (auto& v : cadj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (int b : v) indeg[static_cast<std::size_t>(b)]++;
    }

    auto key = [&](int c) { return sccs[static_cast<std::size_t>(c)].front(); };
    auto cmp = [&](int a, int b) { return key(a) > key(b); };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int c = 0; c < m; ++c)
        if (indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);

    SccOrder out;
    out.component_of.assign(adj.size(), -1);
    while (!ready.empty()) {
        int c = ready.top();
        ready.pop();
        for (State q : sccs[static_cast<std::size_t>(c)])
            out.component_of[q] = static_cast<int>(out.components.size());
        out.components.push_back(std::move(sccs[static_cast<std::size_t>(c)]));
        for (int b : cadj[static_cast<std::size_t>(c)])
            if (--indeg[static_cast<std::size_t>(b)] == 0) ready.push(b);
    }
    return out;
}

}  // namespace detail

/// SCC order of the full transition graph.
inline SccOrder scc_order(const OmegaAutomaton& a) {
    std::vector<std::vector<State>> adj(a.num_states);
    for (State q = 0; q < a.num_states; ++q) {
        for (const auto& edges : a.delta[q])
            for (const Edge& e : edges) adj[q].push_back(e.dst);
        std::sort(adj[q].begin(), adj[q].end());
        adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
    }
    return detail::order_components(detail::tarjan_sccs(adj), adj);
}

/// SCC order of the graph restricted to non-accepting transitions of a tNCW.
inline SccOrder alpha_components(const OmegaAutomaton& a) {
    if (a.kind != AcceptanceKind::CoBuchiTrans)
        throw std::invalid_argument("alpha_components requires a transition-based co-Buchi automaton");
    std::vector<std::vector<State>> adj(a.num_states);
    for (State q = 0; q < a.num_states; ++q) {
        for (const auto& edges : a.delta[q])
            for (const Edge& e : edges)
                if (!e.acc) adj[q].push_back(e.dst);
        std::sort(adj[q].begin(), adj[q].end());
        adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
    }
    return detail::order_components(detail::tarjan_sccs(adj), adj);
}

}  // namespace sdaut
