/* dfw.hpp -- finite-word toolbox: determinization, minimization, equivalence */
#pragma once

#include <map>
#include <optional>
#include <queue>

#include "sdaut/automata.hpp"

namespace sdaut {

/// Classic subset construction; output is deterministic, total, with states
/// numbered in BFS discovery order from the initial subset.
inline Nfw subset_construct(const Nfw& n) {
    check_valid(n);
    std::map<StateSet, State> ids;
    std::vector<StateSet> subsets;
    auto intern = [&](const StateSet& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(subsets.size());
        ids.emplace(s, id);
        subsets.push_back(s);
        return id;
    };

    Nfw out;
    out.name = n.name;
    out.alphabet = n.alphabet;
    out.initial = {intern(n.initial)};

    std::vector<std::vector<StateSet>> rows;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::vector<StateSet> row(static_cast<std::size_t>(n.alphabet.size()));
        for (int l = 0; l < n.alphabet.size(); ++l) {
            StateSet next = nfw_step(n, subsets[i], l);
            row[static_cast<std::size_t>(l)] = {intern(next)};
        }
        rows.push_back(std::move(row));
    }
    out.num_states = static_cast<State>(subsets.size());
    out.delta = std::move(rows);
    for (State q = 0; q < out.num_states; ++q)
        if (sets_intersect(subsets[q], n.accepting)) out.accepting.push_back(q);
    return out;
}

namespace detail {

inline void require_deterministic(const Nfw& d) {
    if (!d.is_deterministic()) throw std::invalid_argument("expected a deterministic automaton");
}

inline State dfw_step(const Nfw& d, State q, int letter) {
    return d.delta[q][static_cast<std::size_t>(letter)].front();
}

/// Renumber a DFW canonically: BFS from the initial state in letter order.
inline Nfw dfw_canonicalize(const Nfw& d) {
    require_deterministic(d);
    std::vector<State> order;
    std::vector<int> pos(d.num_states, -1);
    order.push_back(d.initial.front());
    pos[d.initial.front()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int l = 0; l < d.alphabet.size(); ++l) {
            State s = dfw_step(d, order[i], l);
            if (pos[s] == -1) {
                pos[s] = static_cast<int>(order.size());
                order.push_back(s);
            }
        }

    Nfw out;
    out.name = d.name;
    out.alphabet = d.alphabet;
    out.num_states = static_cast<State>(order.size());
    out.initial = {0};
    out.init_delta();
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int l = 0; l < d.alphabet.size(); ++l)
            out.add_trans(static_cast<State>(i), l, static_cast<State>(pos[dfw_step(d, order[i], l)]));
    for (State q : d.accepting)
        if (pos[q] != -1) set_insert(out.accepting, static_cast<State>(pos[q]));
    return out;
}

}  // namespace detail

/// Minimize a deterministic automaton by partition refinement, then renumber
/// canonically so equal languages give structurally equal outputs.
inline Nfw dfw_minimize(const Nfw& d) {
    check_valid(d);
    detail::require_deterministic(d);
    Nfw r = detail::dfw_canonicalize(d);  // also drops unreachable states

    std::vector<int> cls(r.num_states, 0);
    for (State q = 0; q < r.num_states; ++q) cls[q] = set_contains(r.accepting, q) ? 1 : 0;

    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(r.num_states);
        for (State q = 0; q < r.num_states; ++q) {
            std::vector<int> sig;
            sig.push_back(cls[q]);
            for (int l = 0; l < r.alphabet.size(); ++l) sig.push_back(cls[detail::dfw_step(r, q, l)]);
            auto it = sig_ids.find(sig);
            if (it == sig_ids.end()) it = sig_ids.emplace(sig, static_cast<int>(sig_ids.size())).first;
            next[q] = it->second;
        }
        if (next != cls) {
            cls = std::move(next);
            changed = true;
        }
    }

    int k = 0;
    for (State q = 0; q < r.num_states; ++q) k = std::max(k, cls[q] + 1);
    Nfw out;
    out.name = d.name;
    out.alphabet = r.alphabet;
    out.num_states = static_cast<State>(k);
    out.initial = {static_cast<State>(cls[r.initial.front()])};
    out.init_delta();
    for (State q = 0; q < r.num_states; ++q)
        for (int l = 0; l < r.alphabet.size(); ++l)
            out.add_trans(static_cast<State>(cls[q]), l, static_cast<State>(cls[detail::dfw_step(r, q, l)]));
    for (State q : r.accepting) set_insert(out.accepting, static_cast<State>(cls[q]));
    return detail::dfw_canonicalize(out);
}

/// Shortest word accepted by exactly one of the two automata, or nullopt when
/// they are equivalent. Runs a BFS over pairs of determinized subsets.
inline std::optional<Word> nfw_equivalent(const Nfw& a, const Nfw& b) {
    check_valid(a);
    check_valid(b);
    if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");

    using Pair = std::pair<StateSet, StateSet>;
    std::map<Pair, int> seen;
    std::vector<Pair> nodes;
    std::vector<std::pair<int, int>> back;  // (parent node, letter)

    auto accepting_mismatch = [&](const Pair& p) {
        return sets_intersect(p.first, a.accepting) != sets_intersect(p.second, b.accepting);
    };

    Pair start{a.initial, b.initial};
    seen.emplace(start, 0);
    nodes.push_back(start);
    back.emplace_back(-1, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (accepting_mismatch(nodes[i])) {
            Word w;
            for (int at = static_cast<int>(i); back[static_cast<std::size_t>(at)].first != -1;
                 at = back[static_cast<std::size_t>(at)].first)
                w.push_back(back[static_cast<std::size_t>(at)].second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int l = 0; l < a.alphabet.size(); ++l) {
            Pair next{nfw_step(a, nodes[i].first, l), nfw_step(b, nodes[i].second, l)};
            if (seen.emplace(next, static_cast<int>(nodes.size())).second) {
                nodes.push_back(next);
                back.emplace_back(static_cast<int>(i), l);
            }
        }
    }
    return std::nullopt;
}

/// Deterministic complement: determinize, then flip acceptance.
inline Nfw nfw_complement(const Nfw& n) {
    Nfw d = subset_construct(n);
    StateSet rejecting;
    for (State q = 0; q < d.num_states; ++q)
        if (!set_contains(d.accepting, q)) rejecting.push_back(q);
    d.accepting = std::move(rejecting);
    d.name = n.name + "_bar";
    return d;
}

/// The subset construction keeps only reachable subsets, so universality and
/// emptiness are direct scans of it.
inline bool nfw_is_universal(const Nfw& n) {
    Nfw d = subset_construct(n);
    return d.accepting.size() == d.num_states;
}

inline bool nfw_is_empty(const Nfw& n) {
    return !sets_intersect(reachable_states(n), n.accepting);
}

}  // namespace sdaut
