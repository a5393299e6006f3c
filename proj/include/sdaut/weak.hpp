/* weak.hpp -- weak-automata engine: joint-reachability fixpoint, determinization,
 * dualization, minimization, and polynomial decision procedures */
#pragma once

#include <optional>
#include <random>

#include "sdaut/decision.hpp"

namespace sdaut {

/// Symmetric reflexive relation pairing states that are jointly reachable
/// from a common state on a common word, with the number of productive
/// fixpoint rounds it took to compute.
struct CloseRelation {
    std::vector<std::vector<char>> pairs;
    int iterations = 0;

    bool related(State a, State b) const { return pairs[a][b] != 0; }
};

namespace detail {

inline void require_nww(const OmegaAutomaton& a) {
    if (a.kind != AcceptanceKind::BuchiState)
        throw std::invalid_argument("expected a state-based weak automaton");
    if (!is_weak(a)) throw std::invalid_argument("expected a weak automaton");
}

}  // namespace detail

/// Fixpoint of the joint-reachability relation: a pair enters round i+1 when
/// both members are successors, on one letter, of a pair in round i. The
/// fixpoint is reached within |Q|^2 rounds because joint-reachability
/// witnesses can always be shortened below that length.
inline CloseRelation delta_close(const OmegaAutomaton& a) {
    detail::require_nww(a);
    const State n = a.num_states;
    CloseRelation h;
    h.pairs.assign(n, std::vector<char>(n, 0));
    for (State q = 0; q < n; ++q) h.pairs[q][q] = 1;

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<State, State>> added;
        for (State q1 = 0; q1 < n; ++q1)
            for (State q2 = q1; q2 < n; ++q2) {
                if (!h.pairs[q1][q2]) continue;
                for (int l = 0; l < a.alphabet.size(); ++l)
                    for (const Edge& e1 : a.delta[q1][static_cast<std::size_t>(l)])
                        for (const Edge& e2 : a.delta[q2][static_cast<std::size_t>(l)])
                            if (!h.pairs[e1.dst][e2.dst]) added.emplace_back(e1.dst, e2.dst);
            }
        for (auto [x, y] : added) {
            h.pairs[x][y] = 1;
            h.pairs[y][x] = 1;
            changed = true;
        }
        if (changed) h.iterations += 1;
    }
    return h;
}

/// Smallest transitive superset; with reflexivity and symmetry already in
/// place this is the equivalence closure, computed by joining components.
inline CloseRelation close_transitive(const CloseRelation& h) {
    const State n = static_cast<State>(h.pairs.size());
    std::vector<State> parent(n);
    for (State q = 0; q < n; ++q) parent[q] = q;
    std::function<State(State)> find = [&](State q) {
        while (parent[q] != q) {
            parent[q] = parent[parent[q]];
            q = parent[q];
        }
        return q;
    };
    for (State x = 0; x < n; ++x)
        for (State y = 0; y < n; ++y)
            if (h.pairs[x][y]) parent[find(x)] = find(y);

    CloseRelation out;
    out.iterations = h.iterations;
    out.pairs.assign(n, std::vector<char>(n, 0));
    for (State x = 0; x < n; ++x)
        for (State y = 0; y < n; ++y)
            if (find(x) == find(y)) out.pairs[x][y] = 1;
    return out;
}

/// Equivalence classes of the closed relation, each with a representative
/// picked from the deepest SCC the class intersects (smallest id inside it).
struct RepresentativePartition {
    std::vector<StateSet> classes;
    std::vector<State> representative;  // per class
    SccOrder scc;

    State rep_of(State q) const {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (set_contains(classes[c], q)) return representative[c];
        throw std::invalid_argument("state not covered by partition");
    }
};

inline RepresentativePartition representatives(const OmegaAutomaton& a, const CloseRelation& h) {
    const State n = a.num_states;
    RepresentativePartition part;
    part.scc = scc_order(a);
    std::vector<char> placed(n, 0);
    for (State q = 0; q < n; ++q) {
        if (placed[q]) continue;
        StateSet cls;
        for (State s = 0; s < n; ++s)
            if (h.pairs[q][s]) {
                cls.push_back(s);
                placed[s] = 1;
            }
        int deepest = -1;
        for (State s : cls) deepest = std::max(deepest, part.scc.component_of[s]);
        State rep = n;
        for (State s : cls)
            if (part.scc.component_of[s] == deepest) rep = std::min(rep, s);
        part.classes.push_back(std::move(cls));
        part.representative.push_back(rep);
    }
    return part;
}

/// Deterministic weak automaton equivalent to a semantically deterministic
/// weak automaton, carved out of the original state space: states are the
/// class representatives and each transition is redirected to the
/// representative of its successor class.
struct WeakDeterminization {
    OmegaAutomaton dww;               // dense automaton over the representatives
    std::vector<State> original_ids;  // dense id -> id in the input automaton
    RepresentativePartition partition;
    CloseRelation closure;
};

inline WeakDeterminization determinize_sd_nww(const OmegaAutomaton& a, bool validate = false,
                                              std::size_t budget = kDefaultStateBudget) {
    detail::require_nww(a);
    if (validate) {
        if (auto cex = is_sd(a, budget))
            throw std::invalid_argument("input is not semantically deterministic");
    }

    WeakDeterminization out;
    out.closure = close_transitive(delta_close(a));
    out.partition = representatives(a, out.closure);

    StateSet reps;
    for (State r : out.partition.representative) set_insert(reps, r);
    out.original_ids = reps;
    std::vector<int> dense(a.num_states, -1);
    for (std::size_t i = 0; i < reps.size(); ++i) dense[reps[i]] = static_cast<int>(i);

    std::vector<State> rep_of(a.num_states);
    for (std::size_t c = 0; c < out.partition.classes.size(); ++c)
        for (State q : out.partition.classes[c]) rep_of[q] = out.partition.representative[c];

    OmegaAutomaton& d = out.dww;
    d.name = a.name + "_det";
    d.alphabet = a.alphabet;
    d.num_states = static_cast<State>(reps.size());
    d.kind = AcceptanceKind::BuchiState;
    d.init_delta();
    d.initial = {static_cast<State>(dense[rep_of[a.initial.front()]])};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        State p = reps[i];
        for (int l = 0; l < a.alphabet.size(); ++l) {
            const auto& succ = a.delta[p][static_cast<std::size_t>(l)];
            State target = rep_of[succ.front().dst];
            for (const Edge& e : succ)
                if (rep_of[e.dst] != target)
                    throw std::logic_error("successor classes disagree; input is not weak-SD");
            d.add_trans(static_cast<State>(i), l, static_cast<State>(dense[target]));
        }
        if (set_contains(a.alpha_states, p)) d.alpha_states.push_back(static_cast<State>(i));
    }
    sort_unique(d.alpha_states);
    return out;
}

/// Complement of an SD weak automaton: determinize, then switch alpha.
inline OmegaAutomaton complement_sd_nww(const OmegaAutomaton& a, bool validate = false) {
    OmegaAutomaton d = determinize_sd_nww(a, validate).dww;
    OmegaAutomaton out = dualize_dww(d);
    out.name = a.name + "_bar";
    return out;
}

// ---------------------------------------------------------------------------
// deterministic weak decision procedures (product-based, no complementation)

namespace detail {

inline void require_dww(const OmegaAutomaton& d) {
    if (!d.is_deterministic()) throw std::invalid_argument("expected a deterministic automaton");
    require_nww(d);
}

inline State dww_step(const OmegaAutomaton& d, State q, int letter) {
    return d.delta[q][static_cast<std::size_t>(letter)].front().dst;
}

/// Witness in L(a) \ L(b) for deterministic weak automata, via a search for a
/// reachable product cycle that is accepting on the a side and rejecting on
/// the b side.
inline std::optional<Lasso> dww_minus(const OmegaAutomaton& a, const OmegaAutomaton& b) {
    if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
    // deterministic pair product
    std::map<std::pair<State, State>, State> ids;
    std::vector<std::pair<State, State>> nodes;
    auto intern = [&](State x, State y) {
        auto key = std::make_pair(x, y);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(nodes.size());
        ids.emplace(key, id);
        nodes.push_back(key);
        return id;
    };
    OmegaAutomaton p;
    p.alphabet = a.alphabet;
    p.kind = AcceptanceKind::BuchiTrans;
    p.initial = {intern(a.initial.front(), b.initial.front())};
    std::vector<std::vector<std::vector<Edge>>> rows;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<std::vector<Edge>> row(static_cast<std::size_t>(a.alphabet.size()));
        for (int l = 0; l < a.alphabet.size(); ++l) {
            auto [x, y] = nodes[i];
            row[static_cast<std::size_t>(l)] = {Edge{intern(dww_step(a, x, l), dww_step(b, y, l)), false}};
        }
        rows.push_back(std::move(row));
    }
    p.num_states = static_cast<State>(nodes.size());
    p.delta = std::move(rows);

    SccOrder comps = scc_order(p);
    for (std::size_t c = 0; c < comps.components.size(); ++c) {
        const StateSet& comp = comps.components[c];
        bool cyclic = comp.size() > 1;
        if (!cyclic)
            for (int l = 0; l < p.alphabet.size() && !cyclic; ++l)
                if (dww_step(p, comp.front(), l) == comp.front()) cyclic = true;
        if (!cyclic) continue;
        auto [x, y] = nodes[comp.front()];
        if (!set_contains(a.alpha_states, x) || set_contains(b.alpha_states, y)) continue;

        State anchor = comp.front();
        Word prefix = *bfs_letters(p, p.initial, anchor, any_state(), any_edge());
        auto in_comp = [&comp](State s) { return set_contains(comp, s); };
        for (int l = 0; l < p.alphabet.size(); ++l) {
            State nxt = dww_step(p, anchor, l);
            if (!set_contains(comp, nxt)) continue;
            Word period = {l};
            if (nxt != anchor) {
                auto back = bfs_letters(p, {nxt}, anchor, in_comp, any_edge());
                if (!back) continue;
                period.insert(period.end(), back->begin(), back->end());
            }
            return Lasso{prefix, period};
        }
    }
    return std::nullopt;
}

}  // namespace detail

struct WeakDecision {
    std::optional<Lasso> a_minus_b;           // witness against L(a) <= L(b)
    std::optional<Lasso> b_minus_a;           // witness against L(b) <= L(a)
    bool equivalent = false;
    std::optional<Lasso> a_not_universal;     // lasso rejected by a, if any
    std::optional<Lasso> b_not_universal;
};

/// Containment, equivalence, and universality for SD weak automata, decided
/// on their determinizations by product reachability.
inline WeakDecision weak_decision(const OmegaAutomaton& a, const OmegaAutomaton& b) {
    OmegaAutomaton da = a.is_deterministic() && a.kind == AcceptanceKind::BuchiState
                            ? a
                            : determinize_sd_nww(a).dww;
    OmegaAutomaton db = b.is_deterministic() && b.kind == AcceptanceKind::BuchiState
                            ? b
                            : determinize_sd_nww(b).dww;
    OmegaAutomaton dtop;
    dtop.alphabet = a.alphabet;
    dtop.num_states = 1;
    dtop.initial = {0};
    dtop.kind = AcceptanceKind::BuchiState;
    dtop.alpha_states = {0};
    dtop.init_delta();
    for (int l = 0; l < a.alphabet.size(); ++l) dtop.add_trans(0, l, 0);

    WeakDecision out;
    out.a_minus_b = detail::dww_minus(da, db);
    out.b_minus_a = detail::dww_minus(db, da);
    out.equivalent = !out.a_minus_b && !out.b_minus_a;
    out.a_not_universal = detail::dww_minus(dtop, da);
    out.b_not_universal = detail::dww_minus(dtop, db);
    return out;
}

/// Minimal deterministic weak automaton for the language of d, canonical up
/// to the BFS numbering from the initial state. State equivalence is decided
/// exactly: two states conflict iff some reachable pair cycle settles with
/// opposite acceptance, and classes merge whenever no conflict exists.
inline OmegaAutomaton minimize_dww(const OmegaAutomaton& d0) {
    OmegaAutomaton d = d0;
    if (d.kind == AcceptanceKind::CoBuchiState) {
        // weak automata carry both readings; normalize to the Buchi view
        StateSet flipped;
        for (State q = 0; q < d.num_states; ++q)
            if (!d.state_in_alpha(q)) flipped.push_back(q);
        d.alpha_states = std::move(flipped);
        d.kind = AcceptanceKind::BuchiState;
    }
    detail::require_dww(d);
    d = prune_unreachable(d);
    const State n = d.num_states;

    // conflict pairs: from (x,y) some word settles in cycles of opposite kind
    std::vector<char> conflict(static_cast<std::size_t>(n) * n, 0);
    {
        std::vector<std::vector<State>> adj(static_cast<std::size_t>(n) * n);
        auto id = [&](State x, State y) { return static_cast<std::size_t>(x) * n + y; };
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < n; ++y)
                for (int l = 0; l < d.alphabet.size(); ++l)
                    adj[id(x, y)].push_back(
                        static_cast<State>(id(detail::dww_step(d, x, l), detail::dww_step(d, y, l))));
        std::vector<StateSet> sccs = detail::tarjan_sccs(adj);
        std::queue<std::size_t> bfs;
        for (const StateSet& comp : sccs) {
            bool cyclic = comp.size() > 1;
            if (!cyclic)
                for (State s : adj[comp.front()])
                    if (s == comp.front()) cyclic = true;
            if (!cyclic) continue;
            State x = static_cast<State>(comp.front() / n), y = static_cast<State>(comp.front() % n);
            if (set_contains(d.alpha_states, x) != set_contains(d.alpha_states, y))
                for (State v : comp)
                    if (!conflict[v]) {
                        conflict[v] = 1;
                        bfs.push(v);
                    }
        }
        // propagate backwards
        std::vector<std::vector<std::size_t>> radj(static_cast<std::size_t>(n) * n);
        for (std::size_t v = 0; v < adj.size(); ++v)
            for (State s : adj[v]) radj[s].push_back(v);
        while (!bfs.empty()) {
            std::size_t v = bfs.front();
            bfs.pop();
            for (std::size_t u : radj[v])
                if (!conflict[u]) {
                    conflict[u] = 1;
                    bfs.push(u);
                }
        }
    }

    std::vector<State> parent(n);
    for (State q = 0; q < n; ++q) parent[q] = q;
    std::function<State(State)> find = [&](State q) {
        while (parent[q] != q) {
            parent[q] = parent[parent[q]];
            q = parent[q];
        }
        return q;
    };
    for (State x = 0; x < n; ++x)
        for (State y = x + 1; y < n; ++y)
            if (!conflict[static_cast<std::size_t>(x) * n + y]) parent[find(x)] = find(y);

    // quotient: class acceptance comes from any member that lies on a cycle
    SccOrder comps = scc_order(d);
    std::vector<char> cyclic_state(n, 0);
    for (const StateSet& comp : comps.components) {
        bool cyclic = comp.size() > 1;
        if (!cyclic) {
            State q = comp.front();
            for (int l = 0; l < d.alphabet.size() && !cyclic; ++l)
                if (detail::dww_step(d, q, l) == q) cyclic = true;
        }
        if (cyclic)
            for (State q : comp) cyclic_state[q] = 1;
    }

    std::vector<State> cls(n);
    std::map<State, State> root_ids;
    for (State q = 0; q < n; ++q) {
        State r = find(q);
        auto it = root_ids.find(r);
        if (it == root_ids.end()) it = root_ids.emplace(r, static_cast<State>(root_ids.size())).first;
        cls[q] = it->second;
    }
    OmegaAutomaton quot;
    quot.name = d0.name + "_min";
    quot.alphabet = d.alphabet;
    quot.num_states = static_cast<State>(root_ids.size());
    quot.kind = AcceptanceKind::BuchiState;
    quot.init_delta();
    quot.initial = {cls[d.initial.front()]};
    for (State q = 0; q < n; ++q)
        for (int l = 0; l < d.alphabet.size(); ++l)
            quot.add_trans(cls[q], l, cls[detail::dww_step(d, q, l)]);
    for (State q = 0; q < n; ++q)
        if (cyclic_state[q] && set_contains(d.alpha_states, q)) set_insert(quot.alpha_states, cls[q]);

    // canonical BFS numbering
    std::vector<State> order{quot.initial.front()};
    std::vector<int> pos(quot.num_states, -1);
    pos[order.front()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int l = 0; l < quot.alphabet.size(); ++l) {
            State s = detail::dww_step(quot, order[i], l);
            if (pos[s] == -1) {
                pos[s] = static_cast<int>(order.size());
                order.push_back(s);
            }
        }
    OmegaAutomaton out;
    out.name = quot.name;
    out.alphabet = quot.alphabet;
    out.num_states = static_cast<State>(order.size());
    out.kind = AcceptanceKind::BuchiState;
    out.init_delta();
    out.initial = {0};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int l = 0; l < quot.alphabet.size(); ++l)
            out.add_trans(static_cast<State>(i), l,
                          static_cast<State>(pos[detail::dww_step(quot, order[i], l)]));
    for (State q : quot.alpha_states)
        if (pos[q] != -1) set_insert(out.alpha_states, static_cast<State>(pos[q]));
    return out;
}

// ---------------------------------------------------------------------------
// seeded generator for the SD weak random suite

struct GenParams {
    State states = 8;
    int letters = 2;
    int duplication = 3;
    std::uint64_t seed = 1;
};

/// Random SD weak automaton: a layered deterministic weak base, a few
/// language-equivalent duplicates of its states, and extra nondeterministic
/// transitions only between duplicates of one original. Semantic determinism
/// and weakness hold by construction; the output is a fixed function of the
/// parameters.
inline OmegaAutomaton generate_sd_nww(const GenParams& params) {
    if (params.states == 0 || params.letters < 1) throw std::invalid_argument("bad generator parameters");
    std::mt19937_64 rng(params.seed);
    auto rnd = [&](State k) { return static_cast<State>(rng() % k); };

    const State clones = std::min<State>(static_cast<State>(params.duplication),
                                         params.states > 1 ? params.states - 1 : 0);
    const State base = params.states - clones;

    std::vector<State> depth(base, 0);
    for (State q = 1; q < base; ++q) depth[q] = depth[q - 1] + rnd(2);
    const State max_depth = depth[base - 1];
    std::vector<char> depth_accepting(max_depth + 1, 0);
    for (State dl = 0; dl <= max_depth; ++dl) depth_accepting[dl] = static_cast<char>(rnd(2));

    // deterministic weak base: transitions never decrease depth
    std::vector<std::vector<State>> base_delta(base, std::vector<State>(static_cast<std::size_t>(params.letters)));
    for (State q = 0; q < base; ++q) {
        State lowest = q;
        while (lowest > 0 && depth[lowest - 1] == depth[q]) --lowest;
        for (int l = 0; l < params.letters; ++l)
            base_delta[q][static_cast<std::size_t>(l)] = lowest + rnd(base - lowest);
    }

    std::vector<State> origin(params.states);
    for (State q = 0; q < base; ++q) origin[q] = q;
    std::vector<StateSet> duplicates(base);
    for (State q = 0; q < base; ++q) duplicates[q] = {q};
    for (State c = 0; c < clones; ++c) {
        State o = rnd(base);
        origin[base + c] = o;
        duplicates[o].push_back(base + c);
    }

    Alphabet sigma;
    for (int l = 0; l < params.letters; ++l) sigma.add(std::string(1, static_cast<char>('a' + l)));

    OmegaAutomaton a;
    a.name = "sdnww_seed" + std::to_string(params.seed);
    a.alphabet = sigma;
    a.num_states = params.states;
    a.initial = {0};
    a.kind = AcceptanceKind::BuchiState;
    a.init_delta();
    for (State q = 0; q < params.states; ++q) {
        State o = origin[q];
        if (depth_accepting[depth[o]]) a.alpha_states.push_back(q);
        for (int l = 0; l < params.letters; ++l) {
            State t = base_delta[o][static_cast<std::size_t>(l)];
            const StateSet& dups = duplicates[t];
            a.add_trans(q, l, dups[rnd(static_cast<State>(dups.size()))]);
            if (rnd(2) == 1) a.add_trans(q, l, dups[rnd(static_cast<State>(dups.size()))]);
        }
    }
    sort_unique(a.alpha_states);
    return a;
}

}  // namespace sdaut
