/* tests for the fixture families: exact sizes, reference languages, cross checks */

#include <catch2/catch_amalgamated.hpp>

#include "sdaut/buchi_encodings.hpp"
#include "sdaut/cobuchi_encodings.hpp"
#include "sdaut/decision.hpp"
#include "sdaut/families.hpp"
#include "sdaut/format.hpp"
#include "sdaut/oracles.hpp"
#include "support.hpp"

using namespace sdaut;
using namespace sdaut::families;

namespace {

// Reference DFW for the good-word language, built from first principles:
// track the set of numbers seen, then the mark, then compare the final
// letter. Entirely independent of the family generator.
Nfw reference_good_words_dfw(int n, bool with_dollar) {
    Alphabet sigma;
    for (int i = 1; i <= n; ++i) sigma.add(std::to_string(i));
    sigma.add("#");
    if (with_dollar) sigma.add("$");
    const int hash = n, dollar = n + 1;

    // states: start (dollar version only), collect(mask), marked(mask), acc, sink
    Nfw d;
    d.name = "ref";
    d.alphabet = sigma;
    const State masks = static_cast<State>(1u << n);
    const State collect0 = with_dollar ? 1 : 0;
    const State marked0 = collect0 + masks;
    const State acc = marked0 + masks, sink = acc + 1;
    d.num_states = sink + 1;
    d.initial = {0};
    d.init_delta();
    d.accepting = {acc};
    auto collect = [&](State mask) { return collect0 + mask; };
    auto marked = [&](State mask) { return marked0 + mask; };

    if (with_dollar) d.add_trans(0, dollar, collect(0));
    for (State mask = 0; mask < masks; ++mask) {
        for (int j = 0; j < n; ++j) d.add_trans(collect(mask), j, collect(mask | (1u << j)));
        if (mask != 0) d.add_trans(collect(mask), hash, marked(mask));
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1u) d.add_trans(marked(mask), j, acc);
    }
    for (State q = 0; q < d.num_states; ++q)
        for (int l = 0; l < sigma.size(); ++l)
            if (d.delta[q][static_cast<std::size_t>(l)].empty()) d.add_trans(q, l, sink);
    return d;
}

Word to_word(const Alphabet& sigma, const std::string& text) { return parse_word(sigma, text); }

}  // namespace

TEST_CASE("family sizes are exact") {
    for (int n = 1; n <= 5; ++n) {
        REQUIRE(nfw_good_words(n).num_states == static_cast<State>(3 * n + 3));
        REQUIRE(nfw_good_words_nodollar(n).num_states == static_cast<State>(3 * n + 3));
        REQUIRE(dfw_first_last_differ(n).num_states == static_cast<State>(2 * n + 3));
        REQUIRE(nfw_distance_differ(n).num_states == static_cast<State>(2 * n + 3));
    }
    for (int n = 1; n <= 4; ++n) {
        REQUIRE(tdbw_dn(n).num_states == static_cast<State>(1u << (n + 1)));
        REQUIRE(tdcw_dn(n).num_states == static_cast<State>((1u << (n + 1)) + 1));
    }
}

TEST_CASE("the family dispatcher reaches every generator") {
    using families::Family;
    using families::FamilySpec;
    REQUIRE(std::get<Nfw>(families::make({Family::NfwGoodWords, 2})).num_states == 9);
    REQUIRE(std::get<Nfw>(families::make({Family::NfwGoodWordsNoDollar, 2})).num_states == 9);
    REQUIRE(std::get<OmegaAutomaton>(families::make({Family::TdbwDn, 2})).num_states == 8);
    REQUIRE(std::get<OmegaAutomaton>(families::make({Family::TdcwDn, 2})).num_states == 9);
    REQUIRE(std::get<Nfw>(families::make({Family::DfwFirstLastDiffer, 2})).num_states == 7);
    REQUIRE(std::get<Nfw>(families::make({Family::NfwDistanceDiffer, 2})).num_states == 7);
}

TEST_CASE("generators are valid and reproducible") {
    for (int n = 1; n <= 3; ++n) {
        check_valid(nfw_good_words(n));
        check_valid(nfw_good_words_nodollar(n));
        check_valid(tdbw_dn(n));
        check_valid(tdcw_dn(n));
        check_valid(dfw_first_last_differ(n));
        check_valid(nfw_distance_differ(n));
        REQUIRE(serialize(nfw_good_words(n)) == serialize(nfw_good_words(n)));
        REQUIRE(serialize(tdcw_dn(n)) == serialize(tdcw_dn(n)));
        REQUIRE(tdbw_dn(n).is_deterministic());
        REQUIRE(tdcw_dn(n).is_deterministic());
        REQUIRE(dfw_first_last_differ(n).is_deterministic());
    }
}

TEST_CASE("the marked-word family matches the reference language") {
    SECTION("reference equivalence for small n") {
        for (int n = 1; n <= 3; ++n) {
            INFO("n = " << n);
            REQUIRE_FALSE(nfw_equivalent(nfw_good_words(n), reference_good_words_dfw(n, true)).has_value());
            REQUIRE_FALSE(
                nfw_equivalent(nfw_good_words_nodollar(n), reference_good_words_dfw(n, false)).has_value());
        }
    }
    SECTION("spot checks at n = 1") {
        Nfw g = nfw_good_words(1);
        REQUIRE(nfw_accepts(g, to_word(g.alphabet, "$ 1 # 1")));
        REQUIRE_FALSE(nfw_accepts(g, to_word(g.alphabet, "$ # 1")));
        REQUIRE_FALSE(nfw_accepts(g, to_word(g.alphabet, "$ 1 #")));
        REQUIRE_FALSE(nfw_accepts(g, to_word(g.alphabet, "1 # 1")));
        Nfw gn = nfw_good_words_nodollar(1);
        REQUIRE(nfw_accepts(gn, to_word(gn.alphabet, "1 # 1")));
        REQUIRE_FALSE(nfw_accepts(gn, to_word(gn.alphabet, "# 1")));
    }
    SECTION("spot checks at n = 2") {
        Nfw g = nfw_good_words(2);
        REQUIRE(nfw_accepts(g, to_word(g.alphabet, "$ 1 2 # 1")));
        REQUIRE(nfw_accepts(g, to_word(g.alphabet, "$ 2 # 2")));
        REQUIRE_FALSE(nfw_accepts(g, to_word(g.alphabet, "$ 1 # 2")));
        Nfw gn = nfw_good_words_nodollar(2);
        REQUIRE(nfw_accepts(gn, to_word(gn.alphabet, "2 1 # 2")));
        REQUIRE_FALSE(nfw_accepts(gn, to_word(gn.alphabet, "1 # 2")));
    }
}

TEST_CASE("the deterministic recurring-infix automaton") {
    SECTION("membership examples at n = 2") {
        OmegaAutomaton d = tdbw_dn(2);
        Lasso good{{}, to_word(d.alphabet, "$ 1 2 # 1")};
        Lasso bad{{}, to_word(d.alphabet, "$ 1 # 2")};
        REQUIRE(lasso_membership(d, good));
        REQUIRE_FALSE(lasso_membership(d, bad));
    }
    SECTION("membership agrees with the block oracle on sampled lassos") {
        for (int n = 1; n <= 2; ++n) {
            OmegaAutomaton d = tdbw_dn(n);
            Nfw g = nfw_good_words(n);
            for (int i = 0; i < 120; ++i) {
                Lasso w = testing::random_lasso(d.alphabet, 4, 6, 5000 + static_cast<std::uint64_t>(100 * n + i));
                INFO("n " << n << " lasso #" << i);
                REQUIRE(lasso_membership(d, w) == lasso_in_infty(g, w));
            }
        }
    }
    SECTION("equivalent to the encoded family for small n") {
        for (int n = 1; n <= 2; ++n) {
            OmegaAutomaton enc = encode_infty(nfw_good_words(n));
            OmegaAutomaton d = tdbw_dn(n);
            REQUIRE(contains(enc, d) == std::nullopt);
            REQUIRE(contains(d, enc) == std::nullopt);
        }
    }
    SECTION("not weak") { REQUIRE_FALSE(is_weak(tdbw_dn(1))); }
}

TEST_CASE("the deterministic framed-block automaton") {
    SECTION("membership examples at n = 1") {
        OmegaAutomaton d = tdcw_dn(1);
        REQUIRE(lasso_membership(d, Lasso{{}, to_word(d.alphabet, "$ 1 # 1")}));
        REQUIRE(lasso_membership(d, Lasso{{}, to_word(d.alphabet, "1")}));
        REQUIRE_FALSE(lasso_membership(d, Lasso{{}, to_word(d.alphabet, "$ 1 #")}));
    }
    SECTION("membership agrees with the segment oracle on sampled lassos") {
        for (int n = 1; n <= 2; ++n) {
            OmegaAutomaton d = tdcw_dn(n);
            Nfw g = nfw_good_words_nodollar(n);
            for (int i = 0; i < 120; ++i) {
                Lasso w = testing::random_lasso(d.alphabet, 4, 6, 6000 + static_cast<std::uint64_t>(100 * n + i));
                INFO("n " << n << " lasso #" << i);
                REQUIRE(lasso_membership(d, w) == lasso_in_bowtie(g, w));
            }
        }
    }
    SECTION("equivalent to the encoded family for small n") {
        for (int n = 1; n <= 2; ++n) {
            OmegaAutomaton enc = encode_bowtie(nfw_good_words_nodollar(n));
            OmegaAutomaton d = tdcw_dn(n);
            REQUIRE(contains(enc, d) == std::nullopt);
            REQUIRE(contains(d, enc) == std::nullopt);
        }
    }
}

TEST_CASE("first-last-differ and distance-differ families") {
    SECTION("membership examples") {
        Nfw f1 = dfw_first_last_differ(1);
        REQUIRE(nfw_accepts(f1, {0, 1}));
        REQUIRE(nfw_accepts(f1, {1, 0}));
        REQUIRE_FALSE(nfw_accepts(f1, {0, 0}));
        REQUIRE_FALSE(nfw_accepts(f1, {1, 1}));
        REQUIRE_FALSE(nfw_accepts(f1, {0}));
        Nfw f2 = dfw_first_last_differ(2);
        REQUIRE(nfw_accepts(f2, {0, 0, 1}));
        REQUIRE_FALSE(nfw_accepts(f2, {0, 0, 0}));

        Nfw d1 = nfw_distance_differ(1);
        REQUIRE(nfw_accepts(d1, {0, 1}));
        REQUIRE(nfw_accepts(d1, {1, 0}));
        REQUIRE(nfw_accepts(d1, {0, 0, 1}));
        REQUIRE_FALSE(nfw_accepts(d1, {0, 0}));
        REQUIRE_FALSE(nfw_accepts(d1, {1, 1}));
        REQUIRE_FALSE(nfw_accepts(d1, {0, 0, 0}));
        Nfw d2 = nfw_distance_differ(2);
        REQUIRE(nfw_accepts(d2, {0, 1, 1}));
        REQUIRE_FALSE(nfw_accepts(d2, {0, 1, 0}));
    }
    SECTION("fixed length words leave no good prefix") {
        for (int n = 1; n <= 4; ++n) REQUIRE(has_good_prefix(dfw_first_last_differ(n)) == std::nullopt);
    }
    SECTION("distance-differ bad-infix search agrees with the brute-force oracle") {
        // every word x extends to x 0^n 1, which is in the language, so no
        // bad infix exists; the bounded search must come back empty and the
        // brute-force scan over short candidates must agree
        for (int n = 1; n <= 3; ++n) {
            Nfw d = nfw_distance_differ(n);
            REQUIRE(has_bad_infix(d) == std::nullopt);
            for (const Lasso& l : testing::enumerate_lassos(2, 5)) {
                Word x = l.prefix;
                x.insert(x.end(), l.period.begin(), l.period.end());
                Word extended = x;
                for (int i = 0; i < n; ++i) extended.push_back(0);
                extended.push_back(1);
                REQUIRE(nfw_accepts(d, extended));
            }
        }
        // first-last-differ, by contrast, is length-exact: a run of n+1 equal
        // letters fits in no accepted word
        for (int n = 1; n <= 3; ++n) {
            auto w = has_bad_infix(dfw_first_last_differ(n));
            REQUIRE(w.has_value());
            REQUIRE(w->word == Word(static_cast<std::size_t>(n + 1), 0));
        }
    }
}

TEST_CASE("the guess-the-next-letter weak fixture") {
    OmegaAutomaton a = sd_nww_not_dbp();
    SECTION("weak, semantically deterministic, all states universal") {
        REQUIRE(is_weak(a));
        REQUIRE(is_sd(a) == std::nullopt);
        for (State q = 0; q < a.num_states; ++q)
            REQUIRE(is_universal(a.rerooted(q)) == std::nullopt);
    }
    SECTION("no pruning is equivalent") {
        for (State ga : {State{1}, State{2}})
            for (State gb : {State{1}, State{2}}) {
                OmegaAutomaton pruned = a;
                pruned.delta[0][0] = {Edge{ga, false}};
                pruned.delta[0][1] = {Edge{gb, false}};
                auto w = is_universal(pruned);
                REQUIRE(w.has_value());
                REQUIRE_FALSE(lasso_membership(pruned, *w));
            }
    }
}

TEST_CASE("the eventually-periodic co-Buchi automaton") {
    SECTION("membership at n = 1: eventually constant words") {
        OmegaAutomaton e = tncw_eventually_periodic(1);
        REQUIRE(lasso_membership(e, Lasso{{}, {0}}));
        REQUIRE(lasso_membership(e, Lasso{{0, 1}, {1}}));
        REQUIRE_FALSE(lasso_membership(e, Lasso{{}, {0, 1}}));
    }
    SECTION("membership at n = 2: eventually period two") {
        OmegaAutomaton e = tncw_eventually_periodic(2);
        REQUIRE(lasso_membership(e, Lasso{{}, {0, 1}}));
        REQUIRE(lasso_membership(e, Lasso{{1}, {0, 0}}));
        REQUIRE_FALSE(lasso_membership(e, Lasso{{}, {0, 1, 1}}));
    }
}
