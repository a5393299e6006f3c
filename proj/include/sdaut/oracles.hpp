/* oracles.hpp -- finite-word oracles for the framed omega-languages */
#pragma once

#include <queue>

#include "sdaut/automata.hpp"

namespace sdaut {

/// Does prefix.period^omega contain infinitely many disjoint infixes from
/// L(r)? Decided without omega-automata: the word qualifies iff epsilon is in
/// L(r), or some word of L(r) occurs as an infix of the periodic tail (such
/// an occurrence repeats every period, giving infinitely many disjoint ones).
/// The infix test is emptiness of the product of r with the position-tracking
/// automaton of period^omega.
inline bool lasso_in_infty(const Nfw& r, const Lasso& w) {
    check_valid(r);
    check_lasso(r.alphabet, w);
    if (nfw_accepts_epsilon(r)) return true;

    const int plen = static_cast<int>(w.period.size());
    std::vector<char> seen(static_cast<std::size_t>(r.num_states) * static_cast<std::size_t>(plen), 0);
    auto id = [&](State q, int p) {
        return static_cast<std::size_t>(q) * static_cast<std::size_t>(plen) + static_cast<std::size_t>(p);
    };
    std::queue<std::pair<State, int>> bfs;
    for (State q : r.initial)
        for (int p = 0; p < plen; ++p) {
            seen[id(q, p)] = 1;
            bfs.emplace(q, p);
        }
    while (!bfs.empty()) {
        auto [q, p] = bfs.front();
        bfs.pop();
        if (set_contains(r.accepting, q)) return true;
        int letter = w.period[static_cast<std::size_t>(p)];
        int np = (p + 1) % plen;
        for (State s : r.delta[q][static_cast<std::size_t>(letter)])
            if (!seen[id(s, np)]) {
                seen[id(s, np)] = 1;
                bfs.emplace(s, np);
            }
    }
    return false;
}

/// Membership of prefix.period^omega (over the alphabet of r extended with a
/// framing letter whose index is r.alphabet.size()) in the language "finitely
/// many framing letters, or a suffix made of framed L(r) blocks". With at
/// least one framing letter in the period, this holds iff every cyclic
/// segment of the period between consecutive framing letters is in L(r).
inline bool lasso_in_bowtie(const Nfw& r, const Lasso& w) {
    check_valid(r);
    const int dollar = r.alphabet.size();
    for (int l : w.prefix)
        if (l < 0 || l > dollar) throw std::invalid_argument("lasso letter outside alphabet");
    for (int l : w.period)
        if (l < 0 || l > dollar) throw std::invalid_argument("lasso letter outside alphabet");
    if (w.period.empty()) throw std::invalid_argument("lasso period must be nonempty");

    const int plen = static_cast<int>(w.period.size());
    std::vector<int> dollars;
    for (int p = 0; p < plen; ++p)
        if (w.period[static_cast<std::size_t>(p)] == dollar) dollars.push_back(p);
    if (dollars.empty()) return true;

    for (std::size_t i = 0; i < dollars.size(); ++i) {
        int from = dollars[i];
        int to = i + 1 < dollars.size() ? dollars[i + 1] : dollars.front() + plen;
        Word segment;
        for (int p = from + 1; p < to; ++p) segment.push_back(w.period[static_cast<std::size_t>(p % plen)]);
        if (!nfw_accepts(r, segment)) return false;
    }
    return true;
}

}  // namespace sdaut
