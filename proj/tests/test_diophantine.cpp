#include <catch_amalgamated.hpp>

#include <random>

#include "genus1/diophantine.hpp"
#include "oracle_helpers.hpp"

using namespace genus1;

namespace {

const SignTriple kAllPlus{{1, 1, 1}};
const SignTriple kMixed{{-1, 1, 1}};

Solution random_solution(std::mt19937& rng) {
    std::uniform_int_distribution<i64> d(-30, 30);
    std::uniform_int_distribution<int> s(0, 1);
    SignTriple delta{{s(rng) ? 1 : -1, s(rng) ? 1 : -1, s(rng) ? 1 : -1}};
    return Solution(delta, {d(rng), d(rng), d(rng)});
}

}  // namespace

TEST_CASE("eval_a") {
    CHECK(eval_a(kAllPlus, {3, 3, 3}) == 0);
    CHECK(eval_a(kAllPlus, {-1, 1, 1}) == 4);
    CHECK(eval_a(kMixed, {0, 0, 0}) == 0);
    CHECK(eval_a(SignTriple{{-1, -1, -1}}, {0, 0, 0}) == 0);
}

TEST_CASE("mutation") {
    CHECK(mutate(Solution(kAllPlus, {3, 3, 3}), 0).x == XTriple{6, 3, 3});
    CHECK(mutate(Solution(kMixed, {1, 1, 1}), 0).x == XTriple{-2, 1, 1});

    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        Solution s = random_solution(rng);
        for (int j = 0; j < 3; ++j) {
            CHECK(mutate(mutate(s, j), j) == s);
            CHECK(mutate(s, j).a == s.a);
        }
    }
}

TEST_CASE("sign changes and permutations") {
    CHECK(sign_change(Solution(kAllPlus, {3, 3, 3}), 12).x == XTriple{-3, -3, 3});
    CHECK(sign_change(Solution(kAllPlus, {1, 2, -1}), 23).x == XTriple{1, -2, 1});

    Solution cyc = permute(Solution(kMixed, {2, 1, 1}), {1, 2, 0});
    CHECK(cyc.delta == SignTriple{{1, 1, -1}});
    CHECK(cyc.x == XTriple{1, 1, 2});
    CHECK(permute(Solution(kMixed, {2, 1, 1}), {0, 1, 2}) == Solution(kMixed, {2, 1, 1}));
    CHECK(permute(Solution(kAllPlus, {6, 3, 3}), {2, 0, 1}).a == 0);

    std::mt19937 rng(29);
    for (int i = 0; i < 300; ++i) {
        Solution s = random_solution(rng);
        for (int pair : {12, 13, 23}) {
            CHECK(sign_change(sign_change(s, pair), pair) == s);
            CHECK(sign_change(s, pair).a == s.a);
        }
    }
}

TEST_CASE("weak minimality") {
    CHECK(is_weakly_minimal(Solution(kAllPlus, {3, 3, 3})));
    CHECK_FALSE(is_weakly_minimal(Solution(kAllPlus, {6, 3, 3})));
    CHECK(is_weakly_minimal(Solution(kAllPlus, {0, 0, 0})));
    CHECK(is_minimal(Solution(kAllPlus, {0, 0, 0})));
    CHECK_FALSE(is_minimal(Solution(kAllPlus, {3, 3, 3})));  // mutation reaches (3,3,3) again
}

TEST_CASE("descent") {
    auto one = descend(Solution(kAllPlus, {6, 3, 3}));
    CHECK(one.terminal.x == XTriple{3, 3, 3});
    CHECK(one.steps == std::vector<int>{1});

    auto four = descend(Solution(kMixed, {-2, -3, 5}));
    CHECK(four.terminal.x == XTriple{1, 0, 1});
    CHECK(four.steps.size() == 4);
    CHECK(four.steps == std::vector<int>{3, 2, 1, 2});

    auto zero = descend(Solution(kAllPlus, {3, 3, 3}));
    CHECK(zero.steps.empty());
    CHECK(zero.terminal.x == XTriple{3, 3, 3});
}

TEST_CASE("hurwitz transformations on solutions") {
    Solution s(kAllPlus, {3, 3, 3});
    Solution t = hurwitz_on_solution(s, 3);  // (12) after mu1
    CHECK(t.x == XTriple{3, 6, 3});
    CHECK(t.delta == kAllPlus);

    std::mt19937 rng(31);
    for (int i = 0; i < 300; ++i) {
        Solution r = random_solution(rng);
        CHECK(hurwitz_on_solution(hurwitz_on_solution(r, 1), 2) == r);
        CHECK(hurwitz_on_solution(hurwitz_on_solution(r, 3), 4) == r);
        for (int mv = 1; mv <= 4; ++mv) CHECK(hurwitz_on_solution(r, mv).a == r.a);
    }
}

TEST_CASE("solution enumeration matches the cube-scan oracle") {
    for (const auto& delta : {kAllPlus, kMixed, SignTriple{{1, -1, -1}}}) {
        for (i64 a : {0, 4}) {
            for (i64 bound : {0, 1, 2, 7, 12}) {
                auto got = enumerate_solutions(delta, a, bound);
                auto want = oracle::naive_solutions(delta, a, bound);
                REQUIRE(got.size() == want.size());
                for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].x == want[i]);
            }
        }
    }
    CHECK(enumerate_solutions(kAllPlus, 0, 2).size() == 1);
    CHECK(enumerate_solutions(kAllPlus, 0, 2).front().x == XTriple{0, 0, 0});

    auto tiny = enumerate_solutions(kAllPlus, 4, 1);
    std::vector<XTriple> xs;
    for (const auto& s : tiny) xs.push_back(s.x);
    CHECK(xs == std::vector<XTriple>{{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}});

    CHECK(enumerate_solutions(kMixed, 4, 0).empty());
    CHECK(enumerate_solutions(kMixed, 0, 0).size() == 1);
}

TEST_CASE("weakly minimal classes") {
    auto a0 = weakly_minimal_classes(kAllPlus, 0, 10);
    REQUIRE(a0.size() == 2);
    CHECK(a0[0].x == XTriple{0, 0, 0});
    CHECK(a0[1].x == XTriple{3, 3, 3});

    auto a4 = weakly_minimal_classes(kAllPlus, 4, 5);
    std::vector<XTriple> xs;
    for (const auto& s : a4) xs.push_back(s.x);
    CHECK(xs == std::vector<XTriple>{{-1, 1, 1}, {0, 0, 2}, {2, 2, 2}, {2, 3, 3}, {2, 4, 4},
                                     {2, 5, 5}});

    auto b4 = weakly_minimal_classes(kMixed, 4, 3);
    std::vector<XTriple> bx;
    for (const auto& s : b4) bx.push_back(s.x);
    CHECK(bx == std::vector<XTriple>{{2, 0, 0}, {2, 1, 1}, {2, 2, 2}, {2, 3, 3}});
}

TEST_CASE("markov triples") {
    auto t30 = enumerate_markov(30);
    std::vector<std::array<i64, 3>> ys;
    for (const auto& t : t30) ys.push_back(t.y);
    CHECK(ys == std::vector<std::array<i64, 3>>{
                    {1, 1, 1}, {2, 1, 1}, {5, 2, 1}, {13, 5, 1}, {29, 5, 2}});

    CHECK(enumerate_markov(1).size() == 1);

    auto big = enumerate_markov(1000);
    auto scanned = oracle::markov_scan(1000);
    REQUIRE(big.size() == scanned.size());
    for (const auto& t : big) {
        CHECK(is_markov(t.y[0], t.y[1], t.y[2]));
        CHECK(scanned.count(t.y) == 1);
        CHECK(gcd_v(t.y[0], t.y[1]) == 1);
        CHECK(gcd_v(t.y[0], t.y[2]) == 1);
        CHECK(gcd_v(t.y[1], t.y[2]) == 1);
    }
}
