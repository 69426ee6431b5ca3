#include <catch_amalgamated.hpp>

#include <random>

#include "genus1/symplectic.hpp"

using namespace genus1;

namespace {

Lattice2Vector random_curve(std::mt19937& rng, i64 bound) {
    std::uniform_int_distribution<i64> d(-bound, bound);
    for (;;) {
        Lattice2Vector v{d(rng), d(rng)};
        if (is_coprime_curve(v)) return v;
    }
}

}  // namespace

TEST_CASE("intersection pairing") {
    CHECK(intersection(mu, lambda) == 1);
    CHECK(intersection(Lattice2Vector{2, 1}, Lattice2Vector{1, 2}) == 3);

    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        Lattice2Vector v{d(rng), d(rng)}, w{d(rng), d(rng)};
        CHECK(intersection(v, v) == 0);
        CHECK(intersection(v, w) == -intersection(w, v));
    }
}

TEST_CASE("transvection formula") {
    CHECK(transvection_apply(lambda, i64(1), mu) == Lattice2Vector{1, -1});
    CHECK(transvection_apply(mu, i64(2), lambda) == Lattice2Vector{2, 1});

    std::mt19937 rng(11);
    std::uniform_int_distribution<i64> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
        Lattice2Vector v{d(rng), d(rng)}, w{d(rng), d(rng)};
        CHECK(transvection_apply(v, i64(0), w) == w);
    }
}

TEST_CASE("twist matrix columns match the transvection") {
    CHECK(twist_matrix(lambda, i64(3)) == SL2Matrix{1, 0, -3, 1});
    CHECK(twist_matrix(Lattice2Vector{1, 1}, i64(1)) == SL2Matrix{0, 1, -1, 2});
    CHECK(twist_matrix(Lattice2Vector{2, 1}, i64(0)) == SL2Matrix{1, 0, 0, 1});

    std::mt19937 rng(13);
    std::uniform_int_distribution<i64> e(-5, 5);
    for (int i = 0; i < 300; ++i) {
        Lattice2Vector v = random_curve(rng, 20);
        i64 n = e(rng);
        SL2Matrix m = twist_matrix(v, n);
        CHECK(m.det() == 1);
        CHECK(m.apply(mu) == transvection_apply(v, n, mu));
        CHECK(m.apply(lambda) == transvection_apply(v, n, lambda));
        i64 n2 = e(rng);
        CHECK(twist_matrix(v, n) * twist_matrix(v, n2) == twist_matrix(v, add_ck(n, n2)));
    }
}

TEST_CASE("monodromy of the minimal factorizations") {
    // tau_{mu+2l} tau_{2mu+l} tau_{mu-l} = tau_lambda^{-9}
    TwistFactorization row1{{{{1, -1}, 1}, {{2, 1}, 1}, {{1, 2}, 1}}};
    CHECK(monodromy(row1) == twist_matrix(lambda, i64(-9)));

    // tau_{mu+l} tau_l tau_mu = -tau_lambda^{-3}
    TwistFactorization row2{{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}};
    CHECK(monodromy(row2) == twist_matrix(lambda, i64(-3)).negated());

    CHECK(monodromy(TwistFactorization{}) == SL2Matrix{});

    TwistFactorization bad{{{{2, 4}, 1}}};
    CHECK_THROWS_AS(monodromy(bad), invalid_curve_error);
}

TEST_CASE("recognizing powers of the lambda twist") {
    auto id = recognize_lambda_power(SL2Matrix{});
    REQUIRE(id.has_value());
    CHECK(id->first == 1);
    CHECK(id->second == 0);

    auto r = recognize_lambda_power(twist_matrix(lambda, i64(-9)));
    REQUIRE(r.has_value());
    CHECK(r->first == 1);
    CHECK(r->second == -9);

    CHECK_FALSE(recognize_lambda_power(SL2Matrix{0, 1, -1, 0}).has_value());

    for (i64 k = -100; k <= 100; ++k) {
        for (int s : {1, -1}) {
            SL2Matrix m = twist_matrix(lambda, k);
            if (s < 0) m = m.negated();
            auto rec = recognize_lambda_power(m);
            REQUIRE(rec.has_value());
            CHECK(rec->first == s);
            CHECK(rec->second == k);
        }
    }
}

TEST_CASE("closing condition") {
    CHECK(closes_to_s3(SL2Matrix{}));
    TwistFactorization row1{{{{1, -1}, 1}, {{2, 1}, 1}, {{1, 2}, 1}}};
    CHECK(closes_to_s3(monodromy(row1)));
    CHECK_FALSE(closes_to_s3(twist_matrix(mu, i64(1))));

    // on monodromies, closing is the same as being +-tau_lambda^k
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> es(0, 1);
    for (int i = 0; i < 500; ++i) {
        TwistFactorization f;
        for (int j = 0; j < 3; ++j) f.factors.push_back({random_curve(rng, 6), es(rng) ? 1 : -1});
        SL2Matrix m = monodromy(f);
        CHECK(closes_to_s3(m) == recognize_lambda_power(m).has_value());
    }
}

TEST_CASE("trace formula") {
    auto [l0, r0] = trace_formula_sides(mu, lambda, Lattice2Vector{1, 1}, i64(0), i64(0), i64(0));
    CHECK(l0 == 0);
    CHECK(r0 == 0);

    auto [l1, r1] = trace_formula_sides(mu, lambda, Lattice2Vector{1, 1}, i64(1), i64(1), i64(1));
    CHECK(l1 == 3);
    CHECK(r1 == 3);

    Lattice2Vector v{3, -2};
    auto [l2, r2] = trace_formula_sides(v, v, v, i64(2), i64(-3), i64(5));
    CHECK(l2 == 0);
    CHECK(r2 == 0);

    std::mt19937 rng(19);
    std::uniform_int_distribution<i64> c(-20, 20), e(-5, 5);
    for (int i = 0; i < 2000; ++i) {
        Lattice2Vector u{c(rng), c(rng)}, v2{c(rng), c(rng)}, w{c(rng), c(rng)};
        auto [lhs, rhs] = trace_formula_sides(u, v2, w, e(rng), e(rng), e(rng));
        CHECK(lhs == rhs);
    }
}
