/* cobuchi_encodings.hpp -- NFW <-> co-Buchi encodings of framed-block languages */
#pragma once

#include <optional>

#include "sdaut/decision.hpp"
#include "sdaut/dfw.hpp"

namespace sdaut {

/// tNCW with the state space of n for the words that contain finitely many
/// framing letters or end in an infinite concatenation of framed L(n)
/// blocks. Framing transitions return to the initial set and are accepting
/// exactly when they leave a non-accepting state of n. Deterministic inputs
/// stay deterministic.
inline OmegaAutomaton encode_bowtie(const Nfw& n, const std::string& dollar = "$") {
    check_valid(n);
    OmegaAutomaton a;
    a.name = n.name + "_bowtie";
    a.alphabet = n.alphabet;
    if (a.alphabet.has(dollar)) throw std::invalid_argument("framing letter already in alphabet: " + dollar);
    a.alphabet = a.alphabet.extended(dollar);
    a.num_states = n.num_states;
    a.initial = n.initial;
    a.kind = AcceptanceKind::CoBuchiTrans;
    a.init_delta();
    const int d = n.alphabet.size();
    for (State q = 0; q < n.num_states; ++q) {
        for (int l = 0; l < d; ++l)
            for (State s : n.delta[q][static_cast<std::size_t>(l)]) a.add_trans(q, l, s, false);
        bool leaves_rejecting = !set_contains(n.accepting, q);
        for (State s : n.initial) a.add_trans(q, d, s, leaves_rejecting);
    }
    return a;
}

/// State-based adaptation: one additional alpha state standing in for the
/// accepting framing transitions; it behaves like the initial set.
inline OmegaAutomaton encode_bowtie_statebased(const Nfw& n, const std::string& dollar = "$") {
    check_valid(n);
    OmegaAutomaton a;
    a.name = n.name + "_bowtie_state";
    if (n.alphabet.has(dollar)) throw std::invalid_argument("framing letter already in alphabet: " + dollar);
    a.alphabet = n.alphabet.extended(dollar);
    a.num_states = n.num_states + 1;
    a.initial = n.initial;
    a.kind = AcceptanceKind::CoBuchiState;
    a.init_delta();
    const int d = n.alphabet.size();
    const State p = n.num_states;
    a.alpha_states = {p};
    bool some_initial_accepting = false, some_initial_rejecting = false;
    for (State q : n.initial)
        (set_contains(n.accepting, q) ? some_initial_accepting : some_initial_rejecting) = true;
    for (State q = 0; q < n.num_states; ++q) {
        for (int l = 0; l < d; ++l)
            for (State s : n.delta[q][static_cast<std::size_t>(l)]) a.add_trans(q, l, s);
        if (set_contains(n.accepting, q))
            for (State s : n.initial) a.add_trans(q, d, s);
        else
            a.add_trans(q, d, p);
    }
    for (int l = 0; l < d; ++l)
        for (State s : nfw_step(n, n.initial, l)) a.add_trans(p, l, s);
    // the framing successor of p routes the way the initial states do
    if (some_initial_accepting)
        for (State s : n.initial) a.add_trans(p, d, s);
    if (some_initial_rejecting) a.add_trans(p, d, p);
    return a;
}

namespace detail {

struct BowtieExtraction {
    OmegaAutomaton pruned;   // normalized, reachable part of the input
    Nfw raw;                 // block automaton before pruning; reject sink is last
    int dollar = 0;          // framing letter index in `pruned`
};

inline Alphabet strip_letter(const Alphabet& big, int drop) {
    std::vector<std::string> names;
    for (int i = 0; i < big.size(); ++i)
        if (i != drop) names.push_back(big.name(i));
    return Alphabet(names);
}

inline BowtieExtraction extract_bowtie_raw(const OmegaAutomaton& a0, const std::string& dollar_name) {
    if (a0.kind != AcceptanceKind::CoBuchiTrans)
        throw std::invalid_argument("extraction requires a transition-based co-Buchi automaton");
    auto dollar_opt = a0.alphabet.index(dollar_name);
    if (!dollar_opt) throw std::invalid_argument("framing letter not in alphabet: " + dollar_name);

    BowtieExtraction ex;
    ex.pruned = prune_unreachable(normalize(a0));
    const OmegaAutomaton& a = ex.pruned;
    ex.dollar = *dollar_opt;

    Nfw n;
    n.name = a0.name + "_block";
    n.alphabet = strip_letter(a.alphabet, ex.dollar);
    n.num_states = a.num_states + 1;
    const State rej = a.num_states;
    n.init_delta();
    for (State q = 0; q < a.num_states; ++q)
        for (const Edge& e : a.delta[q][static_cast<std::size_t>(ex.dollar)])
            if (!e.acc) {
                set_insert(n.initial, e.dst);
                set_insert(n.accepting, q);
            }
    for (State q = 0; q < a.num_states; ++q) {
        int out = 0;
        for (int l = 0; l < a.alphabet.size(); ++l) {
            if (l == ex.dollar) continue;
            bool any_safe = false;
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)])
                if (!e.acc) {
                    n.add_trans(q, out, e.dst);
                    any_safe = true;
                }
            if (!any_safe) n.add_trans(q, out, rej);
            ++out;
        }
    }
    for (int l = 0; l < n.alphabet.size(); ++l) n.add_trans(rej, l, rej);
    ex.raw = std::move(n);
    return ex;
}

inline Nfw prune_nfw(const Nfw& n) {
    if (n.initial.empty()) {
        Nfw empty;
        empty.name = n.name;
        empty.alphabet = n.alphabet;
        empty.num_states = 1;
        empty.initial = {0};
        empty.init_delta();
        for (int l = 0; l < empty.alphabet.size(); ++l) empty.add_trans(0, l, 0);
        return empty;
    }
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

}  // namespace detail

/// Fully constructive block extraction from a tNCW over a framed alphabet:
/// initial states are the targets of safe framing transitions, accepting
/// states their sources, transitions the safe unframed ones, and a fresh
/// rejecting sink absorbs the letters whose successors are all accepting.
inline Nfw extract_nfw_bowtie(const OmegaAutomaton& a, const std::string& dollar = "$") {
    return detail::prune_nfw(detail::extract_bowtie_raw(a, dollar).raw);
}

/// A finite word every extension of which leaves the language.
struct BadInfixWitness {
    Word word;
    std::optional<State> trap_state;
};

/// Bounded breadth-first search for a shortest bad infix: a word x such that
/// from every reachable state of the determinization, x leads into the
/// region that cannot reach acceptance again. Empty result only means none
/// was found within the bound.
inline std::optional<BadInfixWitness> has_bad_infix(const Nfw& r, int bound = -1) {
    check_valid(r);
    Nfw d = subset_construct(r);
    if (bound < 0) bound = 2 * static_cast<int>(d.num_states) + 2;

    // dead states: acceptance unreachable
    std::vector<char> dead(d.num_states, 1);
    std::vector<std::vector<State>> radj(d.num_states);
    std::queue<State> bfs;
    for (State q = 0; q < d.num_states; ++q)
        for (int l = 0; l < d.alphabet.size(); ++l) radj[d.delta[q][static_cast<std::size_t>(l)].front()].push_back(q);
    for (State q : d.accepting) {
        dead[q] = 0;
        bfs.push(q);
    }
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop();
        for (State p : radj[q])
            if (dead[p]) {
                dead[p] = 0;
                bfs.push(p);
            }
    }

    // BFS over the vector of positions of all states under the candidate word
    std::vector<State> start(d.num_states);
    for (State q = 0; q < d.num_states; ++q) start[q] = q;
    std::map<std::vector<State>, int> seen;
    std::vector<std::vector<State>> nodes{start};
    std::vector<std::pair<int, int>> back{{-1, -1}};
    std::vector<int> depth{0};
    seen.emplace(start, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        // the empty word qualifies only when the whole language is empty, and
        // then so does every single letter; report a nonempty witness
        bool all_dead = depth[i] > 0;
        for (State q = 0; q < d.num_states && all_dead; ++q) all_dead = all_dead && dead[nodes[i][q]];
        if (all_dead) {
            Word w;
            for (int at = static_cast<int>(i); back[static_cast<std::size_t>(at)].first != -1;
                 at = back[static_cast<std::size_t>(at)].first)
                w.push_back(back[static_cast<std::size_t>(at)].second);
            std::reverse(w.begin(), w.end());
            return BadInfixWitness{w, std::nullopt};
        }
        if (depth[i] >= bound) continue;
        for (int l = 0; l < d.alphabet.size(); ++l) {
            std::vector<State> next(d.num_states);
            for (State q = 0; q < d.num_states; ++q)
                next[q] = d.delta[nodes[i][q]][static_cast<std::size_t>(l)].front();
            if (seen.emplace(next, static_cast<int>(nodes.size())).second) {
                nodes.push_back(next);
                back.emplace_back(static_cast<int>(i), l);
                depth.push_back(depth[i] + 1);
            }
        }
    }
    return std::nullopt;
}

class NoTrapFound : public std::runtime_error {
public:
    NoTrapFound() : std::runtime_error("no-trap-found") {}
};

/// Replace the extraction's synthetic rejecting sink by a state of the
/// original automaton that can cycle safely on the bad infix inside a
/// component free of framing transitions. Shrinks the block automaton to at
/// most the size of the input automaton.
inline Nfw bad_infix_optimize(const OmegaAutomaton& a, const Nfw& n, const BadInfixWitness& witness,
                              const std::string& dollar = "$") {
    (void)n;  // the contract ties the witness to extract_nfw_bowtie(a); we rebuild from a
    if (witness.word.empty()) throw std::invalid_argument("empty bad infix");
    detail::BowtieExtraction ex = detail::extract_bowtie_raw(a, dollar);
    const OmegaAutomaton& p = ex.pruned;

    // translate the witness to letter indices of the pruned automaton
    Word x;
    for (int l : witness.word) {
        const std::string& name = ex.raw.alphabet.name(l);
        x.push_back(*p.alphabet.index(name));
    }

    // components without safe framing transitions
    SccOrder comps = alpha_components(p);
    std::vector<char> comp_has_dollar(comps.components.size(), 0);
    for (State q = 0; q < p.num_states; ++q)
        for (const Edge& e : p.delta[q][static_cast<std::size_t>(ex.dollar)])
            if (!e.acc) comp_has_dollar[static_cast<std::size_t>(comps.component_of[q])] = 1;

    // a safe cycle on x^omega: product of states and positions in x
    const int xl = static_cast<int>(x.size());
    std::vector<std::vector<State>> adj(static_cast<std::size_t>(p.num_states) * static_cast<std::size_t>(xl));
    auto node = [&](State q, int pos) {
        return static_cast<std::size_t>(q) * static_cast<std::size_t>(xl) + static_cast<std::size_t>(pos);
    };
    for (State q = 0; q < p.num_states; ++q)
        for (int pos = 0; pos < xl; ++pos)
            for (const Edge& e : p.delta[q][static_cast<std::size_t>(x[static_cast<std::size_t>(pos)])])
                if (!e.acc) adj[node(q, pos)].push_back(static_cast<State>(node(e.dst, (pos + 1) % xl)));

    std::optional<State> trap;
    for (const StateSet& c : detail::tarjan_sccs(adj)) {
        bool cyclic = c.size() > 1;
        if (!cyclic)
            for (State s : adj[c.front()])
                if (s == c.front()) cyclic = true;
        if (!cyclic) continue;
        for (State v : c) {
            if (v % static_cast<std::size_t>(xl) != 0) continue;
            State q = static_cast<State>(v / static_cast<std::size_t>(xl));
            if (!comp_has_dollar[static_cast<std::size_t>(comps.component_of[q])]) {
                trap = q;
                break;
            }
        }
        if (trap) break;
    }
    if (!trap) throw NoTrapFound();

    Nfw out = ex.raw;
    const State rej = p.num_states;
    for (State q = 0; q < rej; ++q)
        for (auto& succs : out.delta[q])
            for (State& s : succs) {
                if (s == rej) s = *trap;
            }
    for (auto& succs : out.delta)
        for (auto& set : succs) sort_unique(set);
    out.num_states = rej;  // drop the sink row
    out.delta.pop_back();
    return detail::prune_nfw(out);
}

}  // namespace sdaut
