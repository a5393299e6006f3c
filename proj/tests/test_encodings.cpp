/* tests for the framed-language encodings and both extraction directions */

#include <catch2/catch_amalgamated.hpp>

#include "sdaut/buchi_encodings.hpp"
#include "sdaut/cobuchi_encodings.hpp"
#include "sdaut/decision.hpp"
#include "sdaut/families.hpp"
#include "sdaut/format.hpp"
#include "sdaut/oracles.hpp"
#include "support.hpp"

using namespace sdaut;

namespace {

Nfw ab_word_nfw() {
    Nfw n;
    n.name = "ab";
    n.alphabet = Alphabet({"a", "b"});
    n.num_states = 3;
    n.initial = {0};
    n.init_delta();
    n.add_trans(0, 0, 1);
    n.add_trans(1, 1, 2);
    n.accepting = {2};
    return complete(n);
}

// DFW for a(a+b)*: has the good prefix "a"
Nfw a_then_anything() {
    Nfw n;
    n.name = "aplus";
    n.alphabet = Alphabet({"a", "b"});
    n.num_states = 3;
    n.initial = {0};
    n.init_delta();
    n.add_trans(0, 0, 1);
    n.add_trans(0, 1, 2);
    for (int l = 0; l < 2; ++l) {
        n.add_trans(1, l, 1);
        n.add_trans(2, l, 2);
    }
    n.accepting = {1};
    return n;
}

// DFW for (a+b)*a: no good prefix
Nfw ends_with_a() {
    Nfw n;
    n.name = "endsa";
    n.alphabet = Alphabet({"a", "b"});
    n.num_states = 2;
    n.initial = {0};
    n.init_delta();
    n.add_trans(0, 0, 1);
    n.add_trans(0, 1, 0);
    n.add_trans(1, 0, 1);
    n.add_trans(1, 1, 0);
    n.accepting = {1};
    return n;
}

// random lasso over the alphabet of n extended by one framing letter
Lasso random_framed_lasso(const Nfw& n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    Lasso w;
    int pre = rnd(4), per = 1 + rnd(5);
    for (int i = 0; i < pre; ++i) w.prefix.push_back(rnd(n.alphabet.size() + 1));
    for (int i = 0; i < per; ++i) w.period.push_back(rnd(n.alphabet.size() + 1));
    return w;
}

// membership in the finite-word language (frame . L(n) . frame) framed blocks,
// realized as an NFW so the recurring-infix oracle applies to it
Nfw framed_block_nfw(const Nfw& n) {
    Nfw f;
    f.name = n.name + "_framed";
    f.alphabet = n.alphabet.extended("$");
    const int dollar = n.alphabet.size();
    // states: 0 fresh, 1+q copies, last = accepted-after-closing-frame
    f.num_states = n.num_states + 2;
    f.initial = {0};
    f.init_delta();
    const State done = n.num_states + 1;
    for (State q = 0; q < n.num_states; ++q)
        for (int l = 0; l < n.alphabet.size(); ++l)
            for (State s : n.delta[q][static_cast<std::size_t>(l)]) f.add_trans(1 + q, l, 1 + s);
    for (State q : n.initial) f.add_trans(0, dollar, 1 + q);
    for (State q : n.accepting) f.add_trans(1 + q, dollar, done);
    f.accepting = {done};
    return complete(f);
}

}  // namespace

TEST_CASE("encode_infty builds a semantically deterministic recurring-infix automaton") {
    SECTION("epsilon in the block language gives the universal automaton") {
        Nfw n = ab_word_nfw();
        set_insert(n.accepting, 0);
        REQUIRE(is_universal(encode_infty(n)) == std::nullopt);
    }
    SECTION("the ab example keeps its state count and language") {
        Nfw n = ab_word_nfw();
        OmegaAutomaton a = encode_infty(n);
        REQUIRE(a.num_states == n.num_states);
        REQUIRE(lasso_membership(a, Lasso{{}, {0, 1}}));
        REQUIRE_FALSE(lasso_membership(a, Lasso{{}, {0}}));
    }
    SECTION("membership matches lasso_in_infty on random pairs") {
        for (std::uint64_t seed = 2000; seed < 2060; ++seed) {
            Nfw n = testing::random_nfw(3 + seed % 3, 2, seed);
            OmegaAutomaton a = encode_infty(n);
            REQUIRE(a.num_states == n.num_states);
            for (int i = 0; i < 25; ++i) {
                Lasso w = testing::random_lasso(n.alphabet, 3, 4, seed * 13 + static_cast<std::uint64_t>(i));
                INFO("seed " << seed << " lasso #" << i);
                REQUIRE(lasso_membership(a, w) == lasso_in_infty(n, w));
            }
        }
    }
    SECTION("outputs pass the SD check") {
        for (std::uint64_t seed = 2100; seed < 2110; ++seed)
            REQUIRE(is_sd(encode_infty(testing::random_nfw(5, 2, seed))) == std::nullopt);
    }
}

TEST_CASE("encode_infty_dollar frames blocks and preserves determinism") {
    SECTION("deterministic input gives a deterministic automaton") {
        Nfw d = families::dfw_first_last_differ(1);
        REQUIRE(encode_infty_dollar(d).is_deterministic());
    }
    SECTION("framed ab blocks recur, unframed ones do not") {
        OmegaAutomaton a = encode_infty_dollar(ab_word_nfw());
        const int dollar = 2;
        REQUIRE(lasso_membership(a, Lasso{{}, {dollar, 0, 1}}));
        REQUIRE_FALSE(lasso_membership(a, Lasso{{}, {dollar, 0}}));
        REQUIRE_FALSE(lasso_membership(a, Lasso{{}, {0}}));
    }
    SECTION("the framing letter must be fresh") {
        Nfw n = ab_word_nfw();
        REQUIRE_THROWS_AS(encode_infty_dollar(n, "a"), std::invalid_argument);
    }
    SECTION("membership matches the recurring-infix oracle on the framed block language") {
        for (std::uint64_t seed = 2200; seed < 2240; ++seed) {
            Nfw n = testing::random_nfw(4, 2, seed);
            Nfw framed = framed_block_nfw(n);
            OmegaAutomaton a = encode_infty_dollar(n);
            for (int i = 0; i < 25; ++i) {
                Lasso w = random_framed_lasso(n, seed * 19 + static_cast<std::uint64_t>(i));
                INFO("seed " << seed << " lasso #" << i);
                REQUIRE(lasso_membership(a, w) == lasso_in_infty(framed, w));
            }
        }
    }
    SECTION("an empty block language encodes to an empty automaton") {
        Nfw n = ab_word_nfw();
        n.accepting.clear();
        REQUIRE(is_empty(encode_infty_dollar(n)) == std::nullopt);
    }
}

TEST_CASE("encode_infty_statebased mimics the framed encoding with one alpha state") {
    SECTION("deterministic input gives a deterministic automaton of size n+1") {
        Nfw d = families::dfw_first_last_differ(1);
        OmegaAutomaton a = encode_infty_statebased(d);
        REQUIRE(a.num_states == d.num_states + 1);
        REQUIRE(a.is_deterministic());
        REQUIRE(a.kind == AcceptanceKind::BuchiState);
    }
    SECTION("equivalent to the transition-based framed encoding on random lassos") {
        for (std::uint64_t seed = 2300; seed < 2350; ++seed) {
            Nfw n = testing::random_nfw(4, 2, seed);
            OmegaAutomaton dollar = encode_infty_dollar(n);
            OmegaAutomaton state = encode_infty_statebased(n);
            for (int i = 0; i < 20; ++i) {
                Lasso w = random_framed_lasso(n, seed * 29 + static_cast<std::uint64_t>(i));
                INFO("seed " << seed << " lasso #" << i);
                REQUIRE(lasso_membership(dollar, w) == lasso_membership(state, w));
            }
        }
    }
    SECTION("an empty block language leaves the alpha state unreachable") {
        Nfw n = ab_word_nfw();
        n.accepting.clear();
        OmegaAutomaton a = encode_infty_statebased(n);
        REQUIRE_FALSE(set_contains(reachable_states(a), a.num_states - 1));
        REQUIRE(is_empty(a) == std::nullopt);
    }
}

TEST_CASE("hopefulness") {
    SECTION("without accepting transitions every set is hopeful") {
        OmegaAutomaton a = encode_infty_dollar(ab_word_nfw());
        for (auto& row : a.delta)
            for (auto& edges : row)
                for (Edge& e : edges) e.acc = false;
        Nfw rbar = nfw_complement(ab_word_nfw());
        REQUIRE(is_hopeful(a, rbar, {0, 1, 2, 3}));
    }
    SECTION("an empty complement language is vacuously hopeful") {
        Nfw sigma_star = ab_word_nfw();
        sigma_star.accepting = {0, 1, 2, 3};
        Nfw rbar = nfw_complement(sigma_star);  // empty language
        OmegaAutomaton a = encode_infty_dollar(ab_word_nfw());
        REQUIRE(is_hopeful(a, rbar, {0, 1, 2, 3}));
    }
    SECTION("singleton hopefulness matches a bounded enumeration of framed complement words") {
        Nfw r = families::dfw_first_last_differ(2);
        OmegaAutomaton a = encode_infty_dollar(r);
        Nfw rbar = nfw_complement(r);
        const int dollar = 2;
        // enumerate words over {0,1,$} up to length 9 that lie in ($ . rbar)+
        // and search for alpha-traversing runs directly
        std::vector<char> expected(a.num_states, 1);
        std::function<void(Word&)> visit = [&](Word& w) {
            // split at framing letters; check shape and block membership
            if (!w.empty() && w.front() == dollar) {
                std::vector<Word> blocks;
                Word cur;
                for (std::size_t i = 1; i < w.size(); ++i) {
                    if (w[i] == dollar) {
                        blocks.push_back(cur);
                        cur.clear();
                    } else {
                        cur.push_back(w[i]);
                    }
                }
                blocks.push_back(cur);
                bool shape_ok = true;
                for (const Word& b : blocks) shape_ok = shape_ok && !nfw_accepts(r, b);
                if (shape_ok) {
                    // mark states with an alpha-traversing run on w
                    for (State q = 0; q < a.num_states; ++q) {
                        std::vector<std::vector<char>> cur_set(2, std::vector<char>(a.num_states, 0));
                        cur_set[0][q] = 1;
                        for (int l : w) {
                            std::vector<std::vector<char>> next(2, std::vector<char>(a.num_states, 0));
                            for (int f = 0; f < 2; ++f)
                                for (State x = 0; x < a.num_states; ++x)
                                    if (cur_set[f][x])
                                        for (const Edge& e : a.delta[x][static_cast<std::size_t>(l)])
                                            next[f || e.acc][e.dst] = 1;
                            cur_set = std::move(next);
                        }
                        for (State x = 0; x < a.num_states; ++x)
                            if (cur_set[1][x]) expected[q] = 0;
                    }
                }
            }
            if (w.size() >= 9) return;
            for (int l = 0; l < 3; ++l) {
                w.push_back(l);
                visit(w);
                w.pop_back();
            }
        };
        Word w;
        visit(w);
        for (State q = 0; q < a.num_states; ++q) {
            INFO("state " << q);
            REQUIRE(is_hopeful(a, rbar, {q}) == static_cast<bool>(expected[q]));
        }
    }
}

TEST_CASE("good-set search and block extraction for framed Buchi encodings") {
    SECTION("encodings of deterministic automata admit a good set") {
        Nfw r = families::dfw_first_last_differ(1);
        OmegaAutomaton a = encode_infty_dollar(r);
        GoodSetReport report = find_good_set(a, r);
        REQUIRE_FALSE(report.set.empty());
    }
    SECTION("the universal automaton is not a framed encoding of a nontrivial language") {
        Nfw r = families::dfw_first_last_differ(1);
        OmegaAutomaton u = universal_tnbw(r.alphabet.extended("$"));
        REQUIRE_THROWS_AS(find_good_set(u, r), NoGoodSet);
    }
    SECTION("round trips recover the block language within the size bounds") {
        for (int n = 1; n <= 2; ++n) {
            Nfw r = families::dfw_first_last_differ(n);
            REQUIRE(has_good_prefix(r) == std::nullopt);
            OmegaAutomaton a = encode_infty_dollar(r);
            Nfw extracted = extract_nfw_infty(a, r);
            REQUIRE(extracted.num_states <= a.num_states);
            REQUIRE_FALSE(nfw_equivalent(extracted, r).has_value());
        }
    }
    SECTION("a language with a good prefix keeps the accepting sink") {
        Nfw r = a_then_anything();
        OmegaAutomaton a = encode_infty_dollar(r);
        Nfw extracted = extract_nfw_infty(a, r);
        REQUIRE(extracted.num_states <= a.num_states + 1);
        REQUIRE_FALSE(nfw_equivalent(extracted, r).has_value());
    }
    SECTION("trivial block languages short-circuit to one state") {
        Nfw sigma_star = ab_word_nfw();
        sigma_star.accepting = {0, 1, 2, 3};
        OmegaAutomaton a = universal_tnbw(sigma_star.alphabet.extended("$"));
        Nfw extracted = extract_nfw_infty(a, sigma_star);
        REQUIRE(extracted.num_states == 1);
        REQUIRE_FALSE(nfw_equivalent(extracted, sigma_star).has_value());
    }
}

TEST_CASE("has_good_prefix") {
    SECTION("a(a+b)* has the good prefix a") {
        auto w = has_good_prefix(a_then_anything());
        REQUIRE(w.has_value());
        REQUIRE(*w == Word{0});
    }
    SECTION("(a+b)*a has none") { REQUIRE(has_good_prefix(ends_with_a()) == std::nullopt); }
    SECTION("the empty language has none") {
        Nfw n = ab_word_nfw();
        n.accepting.clear();
        REQUIRE(has_good_prefix(n) == std::nullopt);
    }
}

TEST_CASE("encode_bowtie builds a semantically deterministic framed co-Buchi automaton") {
    SECTION("frame-free periods are always accepted") {
        OmegaAutomaton a = encode_bowtie(ab_word_nfw());
        REQUIRE(lasso_membership(a, Lasso{{}, {0}}));
        REQUIRE(lasso_membership(a, Lasso{{2, 1}, {1, 0}}));
    }
    SECTION("the ab example accepts framed ab blocks only") {
        OmegaAutomaton a = encode_bowtie(ab_word_nfw());
        REQUIRE(a.num_states == 4);
        REQUIRE(lasso_membership(a, Lasso{{}, {2, 0, 1}}));
        REQUIRE_FALSE(lasso_membership(a, Lasso{{}, {2, 0}}));
    }
    SECTION("membership matches lasso_in_bowtie on random pairs") {
        for (std::uint64_t seed = 3000; seed < 3060; ++seed) {
            Nfw n = testing::random_nfw(3 + seed % 3, 2, seed);
            OmegaAutomaton a = encode_bowtie(n);
            REQUIRE(a.num_states == n.num_states);
            for (int i = 0; i < 25; ++i) {
                Lasso w = random_framed_lasso(n, seed * 37 + static_cast<std::uint64_t>(i));
                INFO("seed " << seed << " lasso #" << i);
                REQUIRE(lasso_membership(a, w) == lasso_in_bowtie(n, w));
            }
        }
    }
    SECTION("determinism is preserved and outputs pass the SD check") {
        REQUIRE(encode_bowtie(families::dfw_first_last_differ(1)).is_deterministic());
        for (std::uint64_t seed = 3100; seed < 3110; ++seed)
            REQUIRE(is_sd(encode_bowtie(testing::random_nfw(5, 2, seed))) == std::nullopt);
    }
}

TEST_CASE("encode_bowtie_statebased adds one alpha state") {
    SECTION("sizes and determinism") {
        Nfw d = families::dfw_first_last_differ(1);
        OmegaAutomaton a = encode_bowtie_statebased(d);
        REQUIRE(a.num_states == d.num_states + 1);
        REQUIRE(a.is_deterministic());
        REQUIRE(a.kind == AcceptanceKind::CoBuchiState);
    }
    SECTION("equivalent to the transition-based encoding on random lassos") {
        for (std::uint64_t seed = 3200; seed < 3250; ++seed) {
            Nfw n = testing::random_nfw(4, 2, seed);
            OmegaAutomaton trans = encode_bowtie(n);
            OmegaAutomaton state = encode_bowtie_statebased(n);
            REQUIRE(state.num_states == trans.num_states + 1);
            for (int i = 0; i < 20; ++i) {
                Lasso w = random_framed_lasso(n, seed * 41 + static_cast<std::uint64_t>(i));
                INFO("seed " << seed << " lasso #" << i);
                REQUIRE(lasso_membership(trans, w) == lasso_membership(state, w));
            }
        }
    }
    SECTION("a universal block language gives a universal automaton") {
        Nfw n = ab_word_nfw();
        n.accepting = {0, 1, 2, 3};
        REQUIRE(is_universal(encode_bowtie_statebased(n)) == std::nullopt);
    }
}

TEST_CASE("extract_nfw_bowtie inverts the framed co-Buchi encoding") {
    SECTION("the ab example round-trips") {
        Nfw n = ab_word_nfw();
        Nfw back = extract_nfw_bowtie(encode_bowtie(n));
        REQUIRE_FALSE(nfw_equivalent(back, n).has_value());
        REQUIRE(back.num_states <= n.num_states + 1);
    }
    SECTION("random automata round-trip within the size bound") {
        for (std::uint64_t seed = 3300; seed < 3330; ++seed) {
            Nfw n = testing::random_nfw(4, 2, seed);
            OmegaAutomaton a = encode_bowtie(n);
            Nfw back = extract_nfw_bowtie(a);
            INFO("seed " << seed);
            REQUIRE(back.num_states <= a.num_states + 1);
            REQUIRE_FALSE(nfw_equivalent(back, n).has_value());
        }
    }
    SECTION("extraction on the deterministic family automaton recovers its block language") {
        OmegaAutomaton d1 = families::tdcw_dn(1);
        Nfw back = extract_nfw_bowtie(d1);
        REQUIRE(back.num_states <= d1.num_states + 1);
        Nfw r1 = families::nfw_good_words_nodollar(1);
        REQUIRE_FALSE(nfw_equivalent(back, r1).has_value());
    }
    SECTION("no safe framing transition means the empty block language") {
        OmegaAutomaton a = encode_bowtie(ab_word_nfw());
        const int dollar = 2;
        for (State q = 0; q < a.num_states; ++q)
            for (Edge& e : a.delta[q][dollar]) e.acc = true;
        Nfw back = extract_nfw_bowtie(a);
        REQUIRE(nfw_is_empty(back));
    }
    SECTION("normalization inside extraction does not change the result") {
        for (std::uint64_t seed = 3400; seed < 3410; ++seed) {
            Nfw n = testing::random_nfw(4, 2, seed);
            OmegaAutomaton a = encode_bowtie(n);
            Nfw direct = extract_nfw_bowtie(a);
            Nfw prenormalized = extract_nfw_bowtie(normalize(a));
            REQUIRE_FALSE(nfw_equivalent(direct, prenormalized).has_value());
        }
    }
}

TEST_CASE("bad infixes and the extraction optimization") {
    SECTION("the full language has no bad infix") {
        Nfw n = ab_word_nfw();
        n.accepting = {0, 1, 2, 3};
        REQUIRE(has_bad_infix(n) == std::nullopt);
    }
    SECTION("aa is the first bad infix of the single word ab") {
        auto w = has_bad_infix(ab_word_nfw());
        REQUIRE(w.has_value());
        REQUIRE(w->word == Word{0, 0});
        // verify by exhaustive scan: no word of length <= 6 containing it is accepted
        Nfw n = ab_word_nfw();
        for (const Lasso& l : testing::enumerate_lassos(2, 6)) {
            Word word = l.prefix;
            word.insert(word.end(), l.period.begin(), l.period.end());
            bool has_infix = false;
            for (std::size_t i = 0; i + w->word.size() <= word.size() && !has_infix; ++i)
                has_infix = std::equal(w->word.begin(), w->word.end(), word.begin() + static_cast<long>(i));
            if (has_infix) REQUIRE_FALSE(nfw_accepts(n, word));
        }
    }
    SECTION("suffix-extendable languages have none within the bound") {
        REQUIRE(has_bad_infix(ends_with_a()) == std::nullopt);
    }
    SECTION("the optimization brings the extraction down to the input size") {
        Nfw r = families::dfw_first_last_differ(2);
        OmegaAutomaton a = encode_bowtie(r);
        Nfw extracted = extract_nfw_bowtie(a);
        auto witness = has_bad_infix(extracted);
        REQUIRE(witness.has_value());
        Nfw optimized = bad_infix_optimize(a, extracted, *witness);
        REQUIRE(optimized.num_states <= a.num_states);
        REQUIRE_FALSE(nfw_equivalent(optimized, r).has_value());
    }
    SECTION("the family automaton optimizes through its repeated-mark bad infix") {
        OmegaAutomaton d1 = families::tdcw_dn(1);
        Nfw extracted = extract_nfw_bowtie(d1);
        auto witness = has_bad_infix(extracted);
        REQUIRE(witness.has_value());
        Nfw optimized = bad_infix_optimize(d1, extracted, *witness);
        REQUIRE(optimized.num_states <= d1.num_states);
        REQUIRE_FALSE(nfw_equivalent(optimized, families::nfw_good_words_nodollar(1)).has_value());
    }
}
