/* transform.hpp -- acceptance-kind conversions, normalization, weakness, dualization */
#pragma once

#include <map>

#include "sdaut/scc.hpp"

namespace sdaut {

/// A weak automaton has every SCC uniformly accepting or rejecting. For
/// transition-based acceptance only the transitions inside an SCC matter;
/// transitions between SCCs are traversed finitely often either way.
inline bool is_weak(const OmegaAutomaton& a) {
    SccOrder order = scc_order(a);
    if (is_state_based(a.kind)) {
        for (const StateSet& comp : order.components) {
            bool any_in = false, any_out = false;
            for (State q : comp)
                (a.state_in_alpha(q) ? any_in : any_out) = true;
            if (any_in && any_out) return false;
        }
        return true;
    }
    // -1 unseen, 0 all alpha-bar so far, 1 all alpha so far
    std::vector<int> polarity(order.components.size(), -1);
    for (State q = 0; q < a.num_states; ++q) {
        int c = order.component_of[q];
        for (const auto& edges : a.delta[q])
            for (const Edge& e : edges) {
                if (order.component_of[e.dst] != c) continue;
                int p = e.acc ? 1 : 0;
                if (polarity[static_cast<std::size_t>(c)] == -1) polarity[static_cast<std::size_t>(c)] = p;
                else if (polarity[static_cast<std::size_t>(c)] != p) return false;
            }
    }
    return true;
}

/// Move every non-accepting transition of a tNCW that crosses between two
/// distinct alpha-bar components into alpha. Accepting runs eventually stay
/// inside a single component, so the language is unchanged.
inline OmegaAutomaton normalize(const OmegaAutomaton& a) {
    if (a.kind != AcceptanceKind::CoBuchiTrans)
        throw std::invalid_argument("normalize requires a transition-based co-Buchi automaton");
    SccOrder comps = alpha_components(a);
    OmegaAutomaton out = a;
    for (State q = 0; q < out.num_states; ++q)
        for (auto& edges : out.delta[q])
            for (Edge& e : edges)
                if (!e.acc && comps.component_of[q] != comps.component_of[e.dst]) e.acc = true;
    return out;
}

/// State-based to transition-based, on the same state space.
/// Buchi: transitions leaving an alpha state become alpha.
/// Co-Buchi: transitions touching an alpha state become alpha; with
/// `cobuchi_target_only`, only the transitions entering one.
inline OmegaAutomaton to_transition_based(const OmegaAutomaton& a, bool cobuchi_target_only = false) {
    if (!is_state_based(a.kind))
        throw std::invalid_argument("to_transition_based requires state-based input");
    OmegaAutomaton out = a;
    out.kind = a.kind == AcceptanceKind::BuchiState ? AcceptanceKind::BuchiTrans
                                                    : AcceptanceKind::CoBuchiTrans;
    out.alpha_states.clear();
    for (State q = 0; q < out.num_states; ++q) {
        bool src_alpha = a.state_in_alpha(q);
        for (auto& edges : out.delta[q])
            for (Edge& e : edges) {
                if (a.kind == AcceptanceKind::BuchiState) {
                    e.acc = src_alpha;
                } else if (cobuchi_target_only) {
                    e.acc = a.state_in_alpha(e.dst);
                } else {
                    e.acc = src_alpha || a.state_in_alpha(e.dst);
                }
            }
    }
    return out;
}

/// Transition-based to state-based by splitting each state into an
/// alpha-entered and a plain copy; only reachable copies are kept.
inline OmegaAutomaton to_state_based(const OmegaAutomaton& a) {
    if (!is_transition_based(a.kind))
        throw std::invalid_argument("to_state_based requires transition-based input");

    OmegaAutomaton out;
    out.name = a.name;
    out.alphabet = a.alphabet;
    out.kind = a.kind == AcceptanceKind::BuchiTrans ? AcceptanceKind::BuchiState
                                                    : AcceptanceKind::CoBuchiState;

    std::map<std::pair<State, bool>, State> ids;
    std::vector<std::pair<State, bool>> worklist;
    auto intern = [&](State q, bool flag) {
        auto key = std::make_pair(q, flag);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(ids.size());
        ids.emplace(key, id);
        worklist.push_back(key);
        return id;
    };

    for (State q : a.initial) out.initial.push_back(intern(q, false));
    sort_unique(out.initial);

    std::vector<std::vector<std::vector<Edge>>> rows;
    for (std::size_t i = 0; i < worklist.size(); ++i) {
        auto [q, flag] = worklist[i];
        (void)flag;
        std::vector<std::vector<Edge>> row(static_cast<std::size_t>(a.alphabet.size()));
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)]) {
                State dst = intern(e.dst, e.acc);
                auto& edges = row[static_cast<std::size_t>(l)];
                auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                           [](const Edge& x, State d) { return x.dst < d; });
                if (it == edges.end() || it->dst != dst) edges.insert(it, Edge{dst, false});
            }
        rows.push_back(std::move(row));
    }

    out.num_states = static_cast<State>(worklist.size());
    out.delta = std::move(rows);
    for (const auto& [key, id] : ids)
        if (key.second) out.alpha_states.push_back(id);
    sort_unique(out.alpha_states);
    return out;
}

/// Complement a deterministic weak automaton by switching alpha and alpha-bar.
inline OmegaAutomaton dualize_dww(const OmegaAutomaton& d) {
    if (!d.is_deterministic()) throw std::invalid_argument("dualize_dww requires deterministic input");
    if (!is_weak(d)) throw std::invalid_argument("dualize_dww requires a weak automaton");
    OmegaAutomaton out = d;
    if (is_state_based(d.kind)) {
        StateSet flipped;
        for (State q = 0; q < d.num_states; ++q)
            if (!d.state_in_alpha(q)) flipped.push_back(q);
        out.alpha_states = std::move(flipped);
    } else {
        for (auto& row : out.delta)
            for (auto& edges : row)
                for (Edge& e : edges) e.acc = !e.acc;
    }
    return out;
}

/// View any automaton through transition-based acceptance (identity when it
/// already is). Used internally by the decision procedures.
inline OmegaAutomaton as_transition_based(const OmegaAutomaton& a) {
    return is_state_based(a.kind) ? to_transition_based(a) : a;
}

}  // namespace sdaut
