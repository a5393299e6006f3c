/* base.hpp -- state ids, sorted-set helpers, error types shared by the library */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdaut {

using State = std::uint32_t;

/// A set of state ids, kept sorted and duplicate-free.
using StateSet = std::vector<State>;

/// A finite word as letter indices into an Alphabet.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultStateBudget = 1000000;

/// Thrown when a construction would exceed its state budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t limit)
        : std::runtime_error("budget-exceeded limit=" + std::to_string(limit)), limit(limit) {}

    std::size_t limit;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

    int line;
};

inline bool set_contains(const StateSet& s, State q) {
    return std::binary_search(s.begin(), s.end(), q);
}

inline void set_insert(StateSet& s, State q) {
    auto it = std::lower_bound(s.begin(), s.end(), q);
    if (it == s.end() || *it != q) s.insert(it, q);
}

inline StateSet set_union(const StateSet& a, const StateSet& b) {
    StateSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline StateSet set_intersection(const StateSet& a, const StateSet& b) {
    StateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sets_intersect(const StateSet& a, const StateSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

inline void sort_unique(StateSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace sdaut
