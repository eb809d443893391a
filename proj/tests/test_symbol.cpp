#include <seifert/seifert.hpp>

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace seifert;

namespace {
SeifertSymbol sym(int g, std::vector<std::pair<long long, long long>> ab) {
    std::vector<Ratio> rs;
    for (auto [a, b] : ab) rs.push_back(make_ratio(a, b));
    return make_symbol(g, rs);
}
} // namespace

TEST_CASE("ratio validity") {
    CHECK_THROWS_AS(make_ratio(2, 0), error);  // 0/alpha with alpha > 1
    CHECK_NOTHROW(make_ratio(1, 0));           // 0/1 is legal
    CHECK_THROWS_AS(make_ratio(4, 2), error);
    CHECK_THROWS_AS(make_ratio(0, 1), error);
}

TEST_CASE("euler number") {
    CHECK(euler_number(sym(0, {{2, 1}, {2, -1}})) == Rational(0));
    CHECK(euler_number(sym(3, {})) == Rational(0));
    // -(1/2 + 1/3 + 1/5) = -31/30, hand evaluation
    CHECK(euler_number(sym(0, {{2, 1}, {3, 1}, {5, 1}})) == make_rational(-31, 30));
}

TEST_CASE("moves") {
    SeifertSymbol s = sym(0, {{1, 0}, {3, 1}, {3, -1}});

    SECTION("delete 0/1") {
        SeifertSymbol out = apply_move(s, MoveDelete01{0});
        CHECK(out == sym(0, {{3, 1}, {3, -1}}));
        CHECK_THROWS_AS(apply_move(s, MoveDelete01{1}), error);
    }
    SECTION("transfer") {
        SeifertSymbol out = apply_move(sym(0, {{2, 1}, {3, 1}}), MoveTransfer{0, 1, 1});
        CHECK(out == sym(0, {{2, 3}, {3, -2}}));
    }
    SECTION("permute keeps the multiset") {
        SeifertSymbol out = apply_move(s, MovePermute{{2, 0, 1}});
        auto a = s.ratios, b = out.ratios;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
    SECTION("insert then delete round-trips") {
        SeifertSymbol out = apply_move(s, MoveInsert01{1});
        CHECK(out.ratios.size() == 4);
        CHECK(apply_move(out, MoveDelete01{1}) == s);
    }
}

TEST_CASE("euler number is invariant under every move") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        SeifertSymbol s = oracle::random_symbol(rng, 3, 6, 12);
        Rational e = euler_number(s);
        for (int k = 0; k < 5; ++k) {
            s = apply_move(s, oracle::random_move(rng, s));
            CHECK(euler_number(s) == e);
        }
    }
}

TEST_CASE("canonicalize") {
    SECTION("worked example") {
        CanonicalSymbol c = canonicalize(sym(0, {{1, 0}, {2, 1}, {2, -1}}));
        CHECK(c.genus == 0);
        CHECK(c.b == -1);
        CHECK(c.exceptional == std::vector<Ratio>{{2, 1}, {2, 1}});
    }
    SECTION("empty symbol") {
        CanonicalSymbol c = canonicalize(sym(0, {}));
        CHECK(c == CanonicalSymbol{0, 0, {}});
    }
    SECTION("two routes to the same class") {
        CHECK(canonicalize(sym(0, {{3, 1}, {3, -1}})) ==
              canonicalize(sym(0, {{1, -1}, {3, 1}, {3, 2}})));
    }
    SECTION("idempotent and stable under move scrambling") {
        oracle::Rng rng(29);
        for (int trial = 0; trial < 120; ++trial) {
            SeifertSymbol s = oracle::random_symbol(rng, 2, 6, 12);
            CanonicalSymbol c = canonicalize(s);
            CHECK(canonicalize(c.to_symbol()) == c);
            SeifertSymbol scrambled = s;
            int moves = static_cast<int>(rng.range(0, 20));
            for (int k = 0; k < moves; ++k)
                scrambled = apply_move(scrambled, oracle::random_move(rng, scrambled));
            CHECK(canonicalize(scrambled) == c);
        }
    }
}

TEST_CASE("equivalence") {
    SeifertSymbol s = sym(1, {{2, 1}, {5, 3}});
    CHECK(equivalent(s, apply_move(s, MovePermute{{1, 0}})));
    CHECK_FALSE(equivalent(sym(0, {{2, 1}, {2, -1}}), sym(1, {})));

    // (Oo,0; 1/2, -1/2) and (Oo,0; 0/1) are distinct fiberings of the same
    // manifold: the multiset of (alpha, beta mod alpha) with alpha >= 2 is a
    // move invariant, so no move sequence connects them.
    CHECK_FALSE(equivalent(sym(0, {{2, 1}, {2, -1}}), sym(0, {{1, 0}})));
    CHECK(recognize_s2xs1(sym(0, {{2, 1}, {2, -1}})));
    CHECK(recognize_s2xs1(sym(0, {{1, 0}})));

    SECTION("equivalence relation on scrambles") {
        oracle::Rng rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            SeifertSymbol a = oracle::random_symbol(rng, 2, 5, 9);
            SeifertSymbol b = a;
            for (int k = 0; k < 6; ++k) b = apply_move(b, oracle::random_move(rng, b));
            SeifertSymbol c = b;
            for (int k = 0; k < 6; ++k) c = apply_move(c, oracle::random_move(rng, c));
            CHECK(equivalent(a, a));
            CHECK(equivalent(a, b));
            CHECK(equivalent(b, a));
            CHECK((equivalent(a, b) && equivalent(b, c) && equivalent(a, c)));
        }
    }
}

TEST_CASE("recognize S^2 x S^1 fiberings") {
    for (long long alpha = 1; alpha <= 9; ++alpha)
        for (long long k = 1; k < alpha; ++k) {
            if (gcd_ll(k, alpha) != 1) continue;
            CHECK(recognize_s2xs1(sym(0, {{alpha, k}, {alpha, -k}})));
        }
    // three exceptional fibers survive canonicalization, e = 0 notwithstanding
    CHECK_FALSE(recognize_s2xs1(sym(0, {{2, 1}, {3, 1}, {6, 1}, {1, -1}})));
    CHECK_FALSE(recognize_s2xs1(sym(1, {})));
    CHECK_FALSE(recognize_s2xs1(sym(0, {{2, 1}, {3, 1}})));
}

TEST_CASE("first homology") {
    CHECK(h1(sym(0, {})) == AbelianGroup{1, {}});
    CHECK(h1(sym(0, {{3, 1}, {3, 1}, {3, 1}, {1, -1}})) == AbelianGroup{1, {3}});
    CHECK(h1(sym(0, {{2, 1}, {2, 1}, {2, -1}, {2, -1}})) == AbelianGroup{1, {2, 2}});
    // lens-space style check: (Oo,0; b) has H1 = Z_b
    CHECK(h1(sym(0, {{1, 5}})) == AbelianGroup{0, {5}});

    SECTION("free rank is 2g plus one exactly when e = 0") {
        oracle::Rng rng(37);
        for (int trial = 0; trial < 150; ++trial) {
            SeifertSymbol s = oracle::random_symbol(rng, 3, 6, 12);
            int expected = 2 * s.genus + (euler_number(s) == Rational(0) ? 1 : 0);
            CHECK(h1(s).free_rank == expected);
        }
    }
}
