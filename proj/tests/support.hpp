/* support.hpp -- seeded generators and independent oracles for the test suites */
#pragma once

#include <random>

#include "sdaut/automata.hpp"
#include "sdaut/transform.hpp"

namespace sdaut::testing {

// ---------------------------------------------------------------------------
// seeded random inputs

inline Alphabet letters_alphabet(int k) {
    Alphabet sigma;
    for (int i = 0; i < k; ++i) sigma.add(std::string(1, static_cast<char>('a' + i)));
    return sigma;
}

inline Nfw random_nfw(State states, int letters, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](State k) { return static_cast<State>(rng() % k); };
    Nfw n;
    n.name = "rnd" + std::to_string(seed);
    n.alphabet = letters_alphabet(letters);
    n.num_states = states;
    n.initial = {rnd(states)};
    n.init_delta();
    for (State q = 0; q < states; ++q)
        for (int l = 0; l < letters; ++l) {
            n.add_trans(q, l, rnd(states));
            if (rnd(3) == 0) n.add_trans(q, l, rnd(states));
        }
    for (State q = 0; q < states; ++q)
        if (rnd(3) == 0) set_insert(n.accepting, q);
    if (n.accepting.empty()) n.accepting = {rnd(states)};
    return n;
}

inline OmegaAutomaton random_omega(State states, int letters, AcceptanceKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](State k) { return static_cast<State>(rng() % k); };
    OmegaAutomaton a;
    a.name = "rnd" + std::to_string(seed);
    a.alphabet = letters_alphabet(letters);
    a.num_states = states;
    a.initial = {rnd(states)};
    a.kind = kind;
    a.init_delta();
    const bool trans_based = is_transition_based(kind);
    for (State q = 0; q < states; ++q)
        for (int l = 0; l < letters; ++l) {
            a.add_trans(q, l, rnd(states), trans_based && rnd(3) == 0);
            if (rnd(3) == 0) a.add_trans(q, l, rnd(states), trans_based && rnd(3) == 0);
        }
    if (!trans_based)
        for (State q = 0; q < states; ++q)
            if (rnd(3) == 0) set_insert(a.alpha_states, q);
    return a;
}

inline Lasso random_lasso(const Alphabet& sigma, int max_prefix, int max_period, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    Lasso w;
    int pre = rnd(max_prefix + 1);
    int per = 1 + rnd(max_period);
    for (int i = 0; i < pre; ++i) w.prefix.push_back(rnd(sigma.size()));
    for (int i = 0; i < per; ++i) w.period.push_back(rnd(sigma.size()));
    return w;
}

/// All lassos over `letters` letters with |prefix| + |period| <= total_len.
inline std::vector<Lasso> enumerate_lassos(int letters, int total_len) {
    std::vector<Lasso> out;
    std::function<void(Word&, int, std::function<void(const Word&)>)> words =
        [&](Word& cur, int len, std::function<void(const Word&)> visit) {
            if (len == 0) {
                visit(cur);
                return;
            }
            visit(cur);
            for (int l = 0; l < letters; ++l) {
                cur.push_back(l);
                words(cur, len - 1, visit);
                cur.pop_back();
            }
        };
    Word prefix;
    words(prefix, total_len - 1, [&](const Word& p) {
        int rest = total_len - static_cast<int>(p.size());
        Word period;
        std::function<void(int)> build = [&](int len) {
            if (!period.empty()) out.push_back(Lasso{p, period});
            if (len == 0) return;
            for (int l = 0; l < letters; ++l) {
                period.push_back(l);
                build(len - 1);
                period.pop_back();
            }
        };
        build(rest);
    });
    return out;
}

// ---------------------------------------------------------------------------
// independent membership oracle: compose per-period-block step relations and
// look for a repeated state with the acceptance requirement inside the loop

struct BlockStep {
    // reach[b][q][s] = a run from q over one period can end in s; b records
    // whether an accepting transition (Buchi) / only non-accepting ones
    // (co-Buchi uses b=0 slice) were available on the way
    std::vector<std::vector<char>> plain;   // any transitions
    std::vector<std::vector<char>> marked;  // traversing alpha at least once
    std::vector<std::vector<char>> safe;    // avoiding alpha entirely
};

inline BlockStep block_step(const OmegaAutomaton& a, const Word& block) {
    const State n = a.num_states;
    BlockStep s;
    s.plain.assign(n, std::vector<char>(n, 0));
    s.marked.assign(n, std::vector<char>(n, 0));
    s.safe.assign(n, std::vector<char>(n, 0));
    for (State q = 0; q < n; ++q) {
        // flagged pair BFS over the block
        std::vector<std::vector<char>> cur(2, std::vector<char>(n, 0));
        cur[0][q] = 1;
        for (int l : block) {
            std::vector<std::vector<char>> next(2, std::vector<char>(n, 0));
            for (int f = 0; f < 2; ++f)
                for (State x = 0; x < n; ++x) {
                    if (!cur[f][x]) continue;
                    for (const Edge& e : a.delta[x][static_cast<std::size_t>(l)])
                        next[f || e.acc ? 1 : 0][e.dst] = 1;
                }
            cur = std::move(next);
        }
        for (State x = 0; x < n; ++x) {
            if (cur[0][x]) {
                s.plain[q][x] = 1;
                s.safe[q][x] = 1;
            }
            if (cur[1][x]) {
                s.plain[q][x] = 1;
                s.marked[q][x] = 1;
            }
        }
    }
    return s;
}

/// Reference lasso membership built on block-relation composition rather than
/// on component analysis of the product graph.
inline bool lasso_membership_oracle(const OmegaAutomaton& a0, const Lasso& w) {
    const OmegaAutomaton a = is_state_based(a0.kind) ? to_transition_based(a0) : a0;
    const State n = a.num_states;

    // states reachable at period boundaries: after prefix, then after k blocks
    std::vector<char> at_boundary(n, 0);
    {
        std::vector<char> cur(n, 0);
        for (State q : a.initial) cur[q] = 1;
        for (int l : w.prefix) {
            std::vector<char> next(n, 0);
            for (State x = 0; x < n; ++x)
                if (cur[x])
                    for (const Edge& e : a.delta[x][static_cast<std::size_t>(l)]) next[e.dst] = 1;
            cur = std::move(next);
        }
        BlockStep step = block_step(a, w.period);
        // the subset sequence at block boundaries has preperiod + period
        // bounded by the number of distinct subsets
        int rounds = n >= 16 ? 1 << 16 : (1 << n) + 1;
        for (int k = 0; k <= rounds; ++k) {
            for (State x = 0; x < n; ++x) at_boundary[x] = at_boundary[x] || cur[x];
            std::vector<char> next(n, 0);
            for (State x = 0; x < n; ++x)
                if (cur[x])
                    for (State y = 0; y < n; ++y)
                        if (step.plain[x][y]) next[y] = 1;
            cur = std::move(next);
        }
    }

    BlockStep step = block_step(a, w.period);
    if (is_buchi(a.kind)) {
        // marked multi-block loop at some boundary-reachable state
        std::vector<std::vector<char>> reach = step.plain, reach_marked = step.marked;
        for (int it = 0; it < 2 * static_cast<int>(n) + 2; ++it) {
            std::vector<std::vector<char>> nr = reach, nm = reach_marked;
            for (State x = 0; x < n; ++x)
                for (State y = 0; y < n; ++y)
                    for (State z = 0; z < n; ++z) {
                        if (reach[x][y] && step.plain[y][z]) nr[x][z] = 1;
                        if ((reach_marked[x][y] && step.plain[y][z]) || (reach[x][y] && step.marked[y][z]))
                            nm[x][z] = 1;
                    }
            reach = std::move(nr);
            reach_marked = std::move(nm);
        }
        for (State x = 0; x < n; ++x)
            if (at_boundary[x] && reach_marked[x][x]) return true;
        return false;
    }

    // co-Buchi: a safe multi-block loop reached from a boundary state
    std::vector<std::vector<char>> safe_reach = step.safe;
    for (int it = 0; it < 2 * static_cast<int>(n) + 2; ++it) {
        std::vector<std::vector<char>> nr = safe_reach;
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < n; ++y)
                for (State z = 0; z < n; ++z)
                    if (safe_reach[x][y] && step.safe[y][z]) nr[x][z] = 1;
        safe_reach = std::move(nr);
    }
    // boundary states can walk any finite number of blocks first
    std::vector<std::vector<char>> reach = step.plain;
    for (int it = 0; it < 2 * static_cast<int>(n) + 2; ++it) {
        std::vector<std::vector<char>> nr = reach;
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < n; ++y)
                for (State z = 0; z < n; ++z)
                    if (reach[x][y] && step.plain[y][z]) nr[x][z] = 1;
        reach = std::move(nr);
    }
    for (State x = 0; x < n; ++x) {
        if (!at_boundary[x]) continue;
        for (State y = 0; y < n; ++y)
            if ((x == y || reach[x][y]) && safe_reach[y][y]) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// brute-force component oracle: mutual reachability by DFS

inline std::vector<StateSet> brute_sccs(const OmegaAutomaton& a, bool alpha_bar_only) {
    const State n = a.num_states;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (State q = 0; q < n; ++q) {
        std::vector<State> stack{q};
        reach[q][q] = 1;
        while (!stack.empty()) {
            State x = stack.back();
            stack.pop_back();
            for (const auto& edges : a.delta[x])
                for (const Edge& e : edges) {
                    if (alpha_bar_only && e.acc) continue;
                    if (!reach[q][e.dst]) {
                        reach[q][e.dst] = 1;
                        stack.push_back(e.dst);
                    }
                }
        }
    }
    std::vector<char> placed(n, 0);
    std::vector<StateSet> out;
    for (State q = 0; q < n; ++q) {
        if (placed[q]) continue;
        StateSet comp;
        for (State s = 0; s < n; ++s)
            if (reach[q][s] && reach[s][q]) {
                comp.push_back(s);
                placed[s] = 1;
            }
        out.push_back(comp);
    }
    return out;
}

}  // namespace sdaut::testing
