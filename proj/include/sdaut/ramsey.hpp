/* ramsey.hpp -- containment by transition-profile composition
 *
 * A profile of a finite word records, per state pair (q,s), whether the
 * automaton can run from q to s avoiding accepting transitions (bit 1) or
 * traversing at least one (bit 2). Profiles of infixes compose like boolean
 * matrices. Every ultimately periodic word factors into a prefix profile g
 * and an idempotent loop profile h with g*h = g, and then acceptance of
 * every word with that factorization shape depends only on (g,h). Closing
 * the letter profiles of both automata jointly under composition therefore
 * decides containment, and each violating pair carries a concrete witness
 * lasso assembled from the words that generated it.
 */
#pragma once

#include <map>
#include <optional>

#include "sdaut/transform.hpp"

namespace sdaut {

/// The profile closure costs a composition per element pair, so it runs with
/// a much smaller element budget than graph constructions; callers fall back
/// to a complement-based route when the closure refuses.
inline constexpr std::size_t kProfileBudget = 4096;

namespace detail {

struct Profile {
    int n = 0;
    std::vector<std::uint8_t> m;  // n*n entries, bitmask {1: plain run, 2: run with alpha}

    std::uint8_t at(int x, int y) const { return m[static_cast<std::size_t>(x) * n + y]; }
    std::uint8_t& at(int x, int y) { return m[static_cast<std::size_t>(x) * n + y]; }

    static Profile identity(int n) {
        Profile p;
        p.n = n;
        p.m.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) p.at(i, i) = 1;
        return p;
    }

    static Profile letter(const OmegaAutomaton& a, int l) {
        Profile p;
        p.n = static_cast<int>(a.num_states);
        p.m.assign(static_cast<std::size_t>(p.n) * p.n, 0);
        for (State q = 0; q < a.num_states; ++q)
            for (const Edge& e : a.delta[q][static_cast<std::size_t>(l)])
                p.at(static_cast<int>(q), static_cast<int>(e.dst)) |= e.acc ? 2 : 1;
        return p;
    }

    Profile compose(const Profile& r) const {
        Profile out;
        out.n = n;
        out.m.assign(m.size(), 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                std::uint8_t xy = at(x, y);
                if (!xy) continue;
                for (int z = 0; z < n; ++z) {
                    std::uint8_t yz = r.at(y, z);
                    if (!yz) continue;
                    std::uint8_t v = 0;
                    if ((xy & 1) && (yz & 1)) v |= 1;
                    if ((xy & 2) || (yz & 2)) v |= 2;  // some run through y sees alpha
                    out.at(x, z) |= v;
                }
            }
        return out;
    }

    bool operator==(const Profile& o) const { return m == o.m; }
    bool operator<(const Profile& o) const { return m < o.m; }
};

/// Can some lasso shaped (prefix profile g, loop profile h) be accepted?
inline bool profile_accepts(const OmegaAutomaton& a, const Profile& g, const Profile& h) {
    const std::uint8_t want = is_buchi(a.kind) ? 2 : 1;
    for (State p0 : a.initial)
        for (int q = 0; q < g.n; ++q)
            if (g.at(static_cast<int>(p0), q) && (h.at(q, q) & want)) return true;
    return false;
}

struct PairProfile {
    Profile pa, pb;
    Word word;  // a witness word carrying this profile pair

    bool operator<(const PairProfile& o) const {
        if (pa.m != o.pa.m) return pa.m < o.pa.m;
        return pb.m < o.pb.m;
    }
};

}  // namespace detail

/// Per-state acceptance signatures: one row per class of ultimately periodic
/// words that the profile closure distinguishes, with a sample lasso each.
/// Two states accept the same language iff their signature columns agree,
/// and a disagreeing row yields a replayable separating lasso.
struct StateSignatures {
    std::vector<std::vector<char>> accepts;  // [row][state]
    std::vector<Lasso> witnesses;            // [row]

    bool states_agree(State q, State s) const {
        for (const auto& row : accepts)
            if (row[q] != row[s]) return false;
        return true;
    }

    std::optional<Lasso> separating(State q, State s) const {
        for (std::size_t i = 0; i < accepts.size(); ++i)
            if (accepts[i][q] != accepts[i][s]) return witnesses[i];
        return std::nullopt;
    }

    /// A lasso accepted from every state of `from` and from none of `avoid`,
    /// if some row provides one.
    std::optional<Lasso> separating_sets(const StateSet& from, const StateSet& avoid) const {
        for (std::size_t i = 0; i < accepts.size(); ++i) {
            bool ok = true;
            for (State q : from) ok = ok && accepts[i][q];
            for (State s : avoid) ok = ok && !accepts[i][s];
            if (ok) return witnesses[i];
        }
        return std::nullopt;
    }
};

/// Close the profile monoid of one automaton and record, for every
/// (prefix-profile, idempotent-loop) class, which states accept its words.
inline StateSignatures state_signatures(const OmegaAutomaton& a0,
                                        std::size_t budget = kDefaultStateBudget) {
    const OmegaAutomaton a = as_transition_based(a0);
    using detail::Profile;

    std::vector<Profile> monoid;
    std::vector<Word> words;
    std::map<std::vector<std::uint8_t>, std::size_t> seen;
    auto intern = [&](Profile&& p, Word&& w) {
        if (seen.count(p.m)) return;
        if (monoid.size() >= budget) throw BudgetExceeded(budget);
        seen.emplace(p.m, monoid.size());
        monoid.push_back(std::move(p));
        words.push_back(std::move(w));
    };
    for (int l = 0; l < a.alphabet.size(); ++l) intern(Profile::letter(a, l), {l});
    for (std::size_t i = 0; i < monoid.size(); ++i)
        for (std::size_t j = 0; j <= i && j < monoid.size(); ++j)
            for (auto [x, y] : {std::make_pair(i, j), std::make_pair(j, i)}) {
                Profile p = monoid[x].compose(monoid[y]);
                if (seen.count(p.m)) continue;
                Word w = words[x];
                w.insert(w.end(), words[y].begin(), words[y].end());
                intern(std::move(p), std::move(w));
            }

    const std::uint8_t want = is_buchi(a.kind) ? 2 : 1;
    const int n = static_cast<int>(a.num_states);
    StateSignatures sig;
    std::map<std::vector<char>, std::size_t> unique_rows;

    for (std::size_t h = 0; h < monoid.size(); ++h) {
        if (!(monoid[h].compose(monoid[h]) == monoid[h])) continue;
        const Profile& loop = monoid[h];
        auto emit = [&](const Profile& gh, Word u) {
            std::vector<char> row(static_cast<std::size_t>(n), 0);
            for (int q = 0; q < n; ++q)
                for (int x = 0; x < n; ++x)
                    if (gh.at(q, x) && (loop.at(x, x) & want)) {
                        row[static_cast<std::size_t>(q)] = 1;
                        break;
                    }
            if (unique_rows.emplace(row, sig.accepts.size()).second) {
                sig.accepts.push_back(std::move(row));
                sig.witnesses.push_back(Lasso{std::move(u), words[h]});
            }
        };
        emit(loop, words[h]);  // empty prefix aligned: id*h = h
        for (std::size_t g = 0; g < monoid.size(); ++g) {
            Word u = words[g];
            u.insert(u.end(), words[h].begin(), words[h].end());
            emit(monoid[g].compose(loop), std::move(u));
        }
    }
    return sig;
}

/// Decide L(a) <= L(b) by joint profile closure; returns a witness lasso in
/// L(a) \ L(b) when containment fails. Both automata are viewed through
/// transition-based acceptance; the budget bounds the closure size.
inline std::optional<Lasso> ramsey_contains(const OmegaAutomaton& a0, const OmegaAutomaton& b0,
                                            std::size_t budget = kDefaultStateBudget) {
    if (a0.alphabet != b0.alphabet) throw std::invalid_argument("alphabet mismatch");
    const OmegaAutomaton a = as_transition_based(a0);
    const OmegaAutomaton b = as_transition_based(b0);

    using detail::PairProfile;
    using detail::Profile;

    std::vector<PairProfile> monoid;
    std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>, std::size_t> seen;
    auto intern = [&](PairProfile&& p) -> bool {
        auto key = std::make_pair(p.pa.m, p.pb.m);
        if (seen.count(key)) return false;
        if (monoid.size() >= budget) throw BudgetExceeded(budget);
        seen.emplace(std::move(key), monoid.size());
        monoid.push_back(std::move(p));
        return true;
    };

    for (int l = 0; l < a.alphabet.size(); ++l) {
        PairProfile p{Profile::letter(a, l), Profile::letter(b, l), {l}};
        intern(std::move(p));
    }
    // closure under composition; elements are processed in discovery order so
    // witness words stay short
    for (std::size_t i = 0; i < monoid.size(); ++i)
        for (std::size_t j = 0; j < monoid.size() && j <= i; ++j) {
            for (auto [x, y] : {std::make_pair(i, j), std::make_pair(j, i)}) {
                PairProfile p;
                p.pa = monoid[x].pa.compose(monoid[y].pa);
                p.pb = monoid[x].pb.compose(monoid[y].pb);
                p.word = monoid[x].word;
                p.word.insert(p.word.end(), monoid[y].word.begin(), monoid[y].word.end());
                intern(std::move(p));
            }
        }

    std::vector<std::size_t> idempotents;
    for (std::size_t i = 0; i < monoid.size(); ++i) {
        if (monoid[i].pa.compose(monoid[i].pa) == monoid[i].pa &&
            monoid[i].pb.compose(monoid[i].pb) == monoid[i].pb)
            idempotents.push_back(i);
    }

    PairProfile empty_prefix{Profile::identity(static_cast<int>(a.num_states)),
                             Profile::identity(static_cast<int>(b.num_states)),
                             {}};
    for (std::size_t h : idempotents) {
        const PairProfile& loop = monoid[h];
        auto check = [&](const PairProfile& prefix) -> std::optional<Lasso> {
            // align the prefix with the loop so that g*h = g holds
            Profile ga = prefix.pa.compose(loop.pa);
            Profile gb = prefix.pb.compose(loop.pb);
            if (detail::profile_accepts(a, ga, loop.pa) && !detail::profile_accepts(b, gb, loop.pb)) {
                Word u = prefix.word;
                u.insert(u.end(), loop.word.begin(), loop.word.end());
                return Lasso{u, loop.word};
            }
            return std::nullopt;
        };
        if (auto w = check(empty_prefix)) return w;
        for (const PairProfile& g : monoid)
            if (auto w = check(g)) return w;
    }
    return std::nullopt;
}

}  // namespace sdaut
