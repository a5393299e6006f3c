/* decision.hpp -- products, containment, universality, state equivalence, SD check */
#pragma once

#include <optional>
#include <unordered_map>

#include "sdaut/complement.hpp"
#include "sdaut/ramsey.hpp"

namespace sdaut {

namespace detail {

struct ProductBuilder {
    OmegaAutomaton out;
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::uint64_t> keys;
    std::size_t budget;

    explicit ProductBuilder(std::size_t budget) : budget(budget) {}

    State intern(std::uint64_t key) {
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (keys.size() >= budget) throw BudgetExceeded(budget);
        State id = static_cast<State>(keys.size());
        ids.emplace(key, id);
        keys.push_back(key);
        return id;
    }
};

}  // namespace detail

/// Product automaton for the intersection of two languages over one alphabet.
/// Buchi x Buchi uses the two-phase construction; co-Buchi x co-Buchi takes
/// the union of the acceptance sets; a mixed pair guesses the point from
/// which the co-Buchi side stays clear of alpha.
inline OmegaAutomaton intersect(const OmegaAutomaton& a0, const OmegaAutomaton& b0,
                                std::size_t budget = kDefaultStateBudget) {
    if (a0.alphabet != b0.alphabet) throw std::invalid_argument("alphabet mismatch");
    const OmegaAutomaton a = as_transition_based(a0);
    const OmegaAutomaton b = as_transition_based(b0);
    const int sigma = a.alphabet.size();

    detail::ProductBuilder pb(budget);
    pb.out.name = a0.name + "*" + b0.name;
    pb.out.alphabet = a.alphabet;

    auto key3 = [&](State qa, State qb, std::uint64_t tag) {
        return (static_cast<std::uint64_t>(qa) * b.num_states + qb) * 4 + tag;
    };

    if (is_buchi(a.kind) && is_buchi(b.kind)) {
        pb.out.kind = AcceptanceKind::BuchiTrans;
        for (State ia : a.initial)
            for (State ib : b.initial) set_insert(pb.out.initial, pb.intern(key3(ia, ib, 0)));
        std::vector<std::vector<std::vector<Edge>>> rows;
        for (std::size_t i = 0; i < pb.keys.size(); ++i) {
            std::uint64_t k = pb.keys[i];
            State qb = static_cast<State>((k / 4) % b.num_states);
            State qa = static_cast<State>((k / 4) / b.num_states);
            int phase = static_cast<int>(k % 4);
            std::vector<std::vector<Edge>> row(static_cast<std::size_t>(sigma));
            for (int l = 0; l < sigma; ++l)
                for (const Edge& ea : a.delta[qa][static_cast<std::size_t>(l)])
                    for (const Edge& eb : b.delta[qb][static_cast<std::size_t>(l)]) {
                        int next = phase;
                        bool acc = false;
                        if (phase == 0 && ea.acc) next = 1;
                        if (phase == 1 && eb.acc) {
                            next = 0;
                            acc = true;
                        }
                        State dst = pb.intern(key3(ea.dst, eb.dst, static_cast<std::uint64_t>(next)));
                        auto& edges = row[static_cast<std::size_t>(l)];
                        auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                                   [](const Edge& e, State d) { return e.dst < d; });
                        if (it != edges.end() && it->dst == dst) it->acc = it->acc || acc;
                        else edges.insert(it, Edge{dst, acc});
                    }
            rows.push_back(std::move(row));
        }
        pb.out.num_states = static_cast<State>(pb.keys.size());
        pb.out.delta = std::move(rows);
        return pb.out;
    }

    if (is_cobuchi(a.kind) && is_cobuchi(b.kind)) {
        pb.out.kind = AcceptanceKind::CoBuchiTrans;
        for (State ia : a.initial)
            for (State ib : b.initial) set_insert(pb.out.initial, pb.intern(key3(ia, ib, 0)));
        std::vector<std::vector<std::vector<Edge>>> rows;
        for (std::size_t i = 0; i < pb.keys.size(); ++i) {
            std::uint64_t k = pb.keys[i];
            State qb = static_cast<State>((k / 4) % b.num_states);
            State qa = static_cast<State>((k / 4) / b.num_states);
            std::vector<std::vector<Edge>> row(static_cast<std::size_t>(sigma));
            for (int l = 0; l < sigma; ++l)
                for (const Edge& ea : a.delta[qa][static_cast<std::size_t>(l)])
                    for (const Edge& eb : b.delta[qb][static_cast<std::size_t>(l)]) {
                        State dst = pb.intern(key3(ea.dst, eb.dst, 0));
                        bool acc = ea.acc || eb.acc;
                        auto& edges = row[static_cast<std::size_t>(l)];
                        auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                                   [](const Edge& e, State d) { return e.dst < d; });
                        if (it != edges.end() && it->dst == dst) it->acc = it->acc && acc;
                        else edges.insert(it, Edge{dst, acc});
                    }
            rows.push_back(std::move(row));
        }
        pb.out.num_states = static_cast<State>(pb.keys.size());
        pb.out.delta = std::move(rows);
        return pb.out;
    }

    // mixed: orient so that `x` is the Buchi side and `y` the co-Buchi side
    const OmegaAutomaton& x = is_buchi(a.kind) ? a : b;
    const OmegaAutomaton& y = is_buchi(a.kind) ? b : a;
    pb.out.kind = AcceptanceKind::BuchiTrans;
    auto keyxy = [&](State qx, State qy, std::uint64_t tag) {
        return (static_cast<std::uint64_t>(qx) * y.num_states + qy) * 4 + tag;
    };
    // tag 0 = uncommitted, 1 = committed to avoiding y's alpha, 2 = dead sink
    const std::uint64_t dead_key = static_cast<std::uint64_t>(x.num_states) * y.num_states * 4 + 2;
    for (State ix : x.initial)
        for (State iy : y.initial) {
            set_insert(pb.out.initial, pb.intern(keyxy(ix, iy, 0)));
            set_insert(pb.out.initial, pb.intern(keyxy(ix, iy, 1)));
        }
    std::vector<std::vector<std::vector<Edge>>> rows;
    for (std::size_t i = 0; i < pb.keys.size(); ++i) {
        std::uint64_t k = pb.keys[i];
        std::vector<std::vector<Edge>> row(static_cast<std::size_t>(sigma));
        if (k == dead_key) {
            for (int l = 0; l < sigma; ++l) row[static_cast<std::size_t>(l)] = {Edge{pb.intern(dead_key), false}};
            rows.push_back(std::move(row));
            continue;
        }
        State qy = static_cast<State>((k / 4) % y.num_states);
        State qx = static_cast<State>((k / 4) / y.num_states);
        int phase = static_cast<int>(k % 4);
        for (int l = 0; l < sigma; ++l) {
            auto& edges = row[static_cast<std::size_t>(l)];
            auto add = [&](State dst, bool acc) {
                auto it = std::lower_bound(edges.begin(), edges.end(), dst,
                                           [](const Edge& e, State d) { return e.dst < d; });
                if (it != edges.end() && it->dst == dst) it->acc = it->acc || acc;
                else edges.insert(it, Edge{dst, acc});
            };
            for (const Edge& ex : x.delta[qx][static_cast<std::size_t>(l)])
                for (const Edge& ey : y.delta[qy][static_cast<std::size_t>(l)]) {
                    if (phase == 0) {
                        add(pb.intern(keyxy(ex.dst, ey.dst, 0)), false);
                        if (!ey.acc) add(pb.intern(keyxy(ex.dst, ey.dst, 1)), ex.acc);
                    } else if (!ey.acc) {
                        add(pb.intern(keyxy(ex.dst, ey.dst, 1)), ex.acc);
                    }
                }
            if (edges.empty()) edges = {Edge{pb.intern(dead_key), false}};
        }
        rows.push_back(std::move(row));
    }
    pb.out.num_states = static_cast<State>(pb.keys.size());
    pb.out.delta = std::move(rows);
    return pb.out;
}

/// Empty result iff L(a) is contained in L(b); otherwise a lasso accepted by
/// a and rejected by b. Complementing the right side is cheap when it is
/// deterministic (dual kind) or co-Buchi (breakpoint). A nondeterministic
/// Buchi right side first tries the profile-composition check, which stays
/// small on structured instances, and falls back to the rank-based
/// complement when its closure outgrows the profile budget.
inline std::optional<Lasso> contains(const OmegaAutomaton& a, const OmegaAutomaton& b,
                                     std::size_t budget = kDefaultStateBudget) {
    if (a.alphabet != b.alphabet) throw std::invalid_argument("alphabet mismatch");
    const OmegaAutomaton bt = as_transition_based(b);
    if (!bt.is_deterministic() && is_buchi(bt.kind)) {
        try {
            return ramsey_contains(a, bt, std::min(budget, kProfileBudget));
        } catch (const BudgetExceeded&) {
            // closure too large; the graph construction gets the full budget
        }
    }
    return is_empty(intersect(a, complement(bt, budget), budget));
}

/// Empty result iff the automaton accepts every word; otherwise a rejected lasso.
inline std::optional<Lasso> is_universal(const OmegaAutomaton& a, std::size_t budget = kDefaultStateBudget) {
    return contains(universal_tnbw(a.alphabet), a, budget);
}

inline bool equivalent(const OmegaAutomaton& a, const OmegaAutomaton& b,
                       std::size_t budget = kDefaultStateBudget) {
    return !contains(a, b, budget) && !contains(b, a, budget);
}

/// Lasso accepted from exactly one of the two states, or empty when the
/// re-rooted languages coincide.
inline std::optional<Lasso> distinguishing_lasso(const OmegaAutomaton& a, State q, State s,
                                                 std::size_t budget = kDefaultStateBudget) {
    if (q >= a.num_states || s >= a.num_states) throw std::invalid_argument("state id out of range");
    if (q == s) return std::nullopt;
    try {
        return state_signatures(a, std::min(budget, kProfileBudget)).separating(q, s);
    } catch (const BudgetExceeded&) {
        OmegaAutomaton aq = a.rerooted(q), as = a.rerooted(s);
        if (auto w = contains(aq, as, budget)) return w;
        if (auto w = contains(as, aq, budget)) return w;
        return std::nullopt;
    }
}

inline bool states_equivalent(const OmegaAutomaton& a, State q, State s,
                              std::size_t budget = kDefaultStateBudget) {
    return !distinguishing_lasso(a, q, s, budget).has_value();
}

/// Witness that an automaton is not semantically deterministic: two successors
/// (or two initial states, with `initial_violation` set) whose languages a
/// replayable lasso separates.
struct SdCounterexample {
    State state = 0;
    int letter = 0;
    State succ_a = 0;
    State succ_b = 0;
    Lasso witness;
    bool initial_violation = false;
};

/// Empty result iff all nondeterministic choices (including the choice of
/// initial state) lead to language-equivalent states. One signature closure
/// answers all the pairwise equivalence queries; when that closure outgrows
/// the profile budget, the check degrades to cached pairwise containment.
inline std::optional<SdCounterexample> is_sd(const OmegaAutomaton& a,
                                             std::size_t budget = kDefaultStateBudget) {
    check_valid(a);
    std::optional<StateSignatures> sig;
    try {
        sig = state_signatures(a, std::min(budget, kProfileBudget));
    } catch (const BudgetExceeded&) {
    }

    // union-find cache for the pairwise fallback
    std::vector<State> parent(a.num_states);
    for (State q = 0; q < a.num_states; ++q) parent[q] = q;
    std::function<State(State)> find = [&](State q) {
        while (parent[q] != q) {
            parent[q] = parent[parent[q]];
            q = parent[q];
        }
        return q;
    };
    auto separate = [&](State x, State y) -> std::optional<Lasso> {
        if (sig) return sig->separating(x, y);
        if (find(x) == find(y)) return std::nullopt;
        if (auto w = distinguishing_lasso(a, x, y, budget)) return w;
        parent[find(x)] = find(y);
        return std::nullopt;
    };

    for (std::size_t i = 0; i + 1 < a.initial.size(); ++i)
        for (std::size_t j = i + 1; j < a.initial.size(); ++j)
            if (auto w = separate(a.initial[i], a.initial[j])) {
                SdCounterexample cex;
                cex.succ_a = a.initial[i];
                cex.succ_b = a.initial[j];
                cex.witness = *w;
                cex.initial_violation = true;
                return cex;
            }

    for (State q : reachable_states(a))
        for (int l = 0; l < a.alphabet.size(); ++l) {
            const auto& edges = a.delta[q][static_cast<std::size_t>(l)];
            for (std::size_t i = 0; i + 1 < edges.size(); ++i)
                for (std::size_t j = i + 1; j < edges.size(); ++j)
                    if (auto w = separate(edges[i].dst, edges[j].dst)) {
                        SdCounterexample cex;
                        cex.state = q;
                        cex.letter = l;
                        cex.succ_a = edges[i].dst;
                        cex.succ_b = edges[j].dst;
                        cex.witness = *w;
                        return cex;
                    }
        }
    return std::nullopt;
}

}  // namespace sdaut
