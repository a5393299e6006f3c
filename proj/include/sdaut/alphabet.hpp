/* alphabet.hpp -- explicit finite alphabets with stable letter indices */
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdaut/base.hpp"

namespace sdaut {

/// An ordered list of distinct printable letter names. The position of a
/// letter in the list is its index; all transition tables are keyed by index.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) {
        for (auto& n : names) add(n);
    }

    int add(const std::string& name) {
        if (name.empty()) throw std::invalid_argument("empty letter name");
        for (char c : name)
            if (c <= ' ' || c > '~') throw std::invalid_argument("letter name must be printable: " + name);
        if (name == ";") throw std::invalid_argument("';' is reserved and cannot be a letter");
        if (index_.count(name)) throw std::invalid_argument("duplicate letter: " + name);
        letters_.push_back(name);
        index_[name] = static_cast<int>(letters_.size()) - 1;
        return index_[name];
    }

    std::optional<int> index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    const std::string& name(int i) const { return letters_.at(static_cast<std::size_t>(i)); }

    int size() const { return static_cast<int>(letters_.size()); }

    const std::vector<std::string>& letters() const { return letters_; }

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// Copy with one extra letter appended (used by the framing encodings).
    Alphabet extended(const std::string& extra) const {
        Alphabet out = *this;
        out.add(extra);
        return out;
    }

private:
    std::vector<std::string> letters_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace sdaut
