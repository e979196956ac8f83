#include <catch2/catch_amalgamated.hpp>

#include "monreg/ideal.hpp"
#include "monreg/io.hpp"
#include "monreg/random_ideal.hpp"
#include "support/oracles.hpp"

using namespace monreg;

namespace {
MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
    std::vector<Monomial> ms;
    for (const char* s : gens) ms.push_back(parse_monomial(s, n));
    return MonomialIdeal::make(n, ms);
}
}  // namespace

TEST_CASE("minimalize keeps the divisibility antichain") {
    CHECK(ideal(2, {"x1^2", "x1^2*x2", "x2^2"}) == ideal(2, {"x1^2", "x2^2"}));
    CHECK(MonomialIdeal::make(2, {}).is_zero());
    CHECK(ideal(3, {"x1*x2", "x1*x3", "x1*x2*x3"}) == ideal(3, {"x1*x2", "x1*x3"}));
    CHECK(ideal(2, {"1", "x1"}).is_unit());
}

TEST_CASE("membership is divisibility by a generator") {
    auto I = ideal(3, {"x1^2", "x2^2"});
    CHECK(I.contains(parse_monomial("x1^2*x3", 3)));
    CHECK_FALSE(I.contains(parse_monomial("x1*x2", 3)));
    // the worked ideal from the stability section
    auto E = ideal(3, {"x1^2", "x1*x2", "x1*x3", "x2^2"});
    CHECK(E.contains(parse_monomial("x1*x2*x3", 3)));
}

TEST_CASE("colon of ideals") {
    CHECK(colon(ideal(2, {"x1^2", "x2^2"}), ideal(2, {"x1"})) == ideal(2, {"x1", "x2^2"}));
    auto I = ideal(3, {"x1^2", "x2*x3"});
    CHECK(colon(I, MonomialIdeal::unit(3)) == I);
    CHECK(colon(ideal(2, {"x1*x2"}), ideal(2, {"x2"})) == ideal(2, {"x1"}));
    CHECK_THROWS_AS(colon(I, MonomialIdeal::zero(3)), PreconditionError);
}

TEST_CASE("saturation along one variable") {
    CHECK(saturate_variable(ideal(3, {"x1^2", "x1*x2", "x2^3*x3^2"}), 3) ==
          ideal(3, {"x1^2", "x1*x2", "x2^3"}));
    auto I = ideal(3, {"x1^2", "x2^2"});
    CHECK(saturate_variable(I, 3) == I);
    CHECK(saturate_variable(ideal(3, {"x1*x3", "x3^2"}), 3).is_unit());
}

TEST_CASE("saturation equals the stabilized colon by a variable power") {
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        auto I = random_monomial_ideal(3, 4, 4, rng.fork(trial));
        int n = I.vars();
        int k = I.max_exponent(n);
        auto pow = [&](int e) { return MonomialIdeal::make(n, {Monomial::variable(n, n, std::max(e, 1))}); };
        auto sat = saturate_variable(I, n);
        CHECK(colon(I, pow(k)) == sat);
        CHECK(colon(I, pow(k + 2)) == sat);
    }
}

TEST_CASE("product, sum, intersection") {
    CHECK(product(ideal(1, {"x1"}), ideal(1, {"x1"})) == ideal(1, {"x1^2"}));
    CHECK(intersect(ideal(3, {"x1", "x2"}), ideal(3, {"x2", "x3"})) == ideal(3, {"x2", "x1*x3"}));
    auto I = ideal(2, {"x1^2", "x1*x2"});
    CHECK(product(I, MonomialIdeal::unit(2)) == I);
    CHECK(sum(I, MonomialIdeal::zero(2)) == I);
}

TEST_CASE("product/sum/intersection membership matches the brute-force oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int max_degree = 3;
        auto I = random_monomial_ideal(3, max_degree, 3, rng.fork(2 * trial));
        auto J = random_monomial_ideal(3, max_degree, 3, rng.fork(2 * trial + 1));
        auto P = product(I, J), S = sum(I, J), X = intersect(I, J);
        for (int d = 0; d <= max_degree + 2; ++d)
            for_each_monomial_of_degree(3, d, [&](const Monomial& u) {
                CHECK(P.contains(u) == oracles::in_product(I, J, u));
                CHECK(S.contains(u) == oracles::in_sum(I, J, u));
                CHECK(X.contains(u) == oracles::in_intersection(I, J, u));
            });
    }
}

TEST_CASE("restrict re-reads generators in one fewer variable") {
    auto I = ideal(3, {"x1^2", "x1*x2"});
    auto R = restrict(I);
    CHECK(R.vars() == 2);
    CHECK(R == ideal(2, {"x1^2", "x1*x2"}));
    CHECK(restrict(MonomialIdeal::zero(3)) == MonomialIdeal::zero(2));
    CHECK_THROWS_AS(restrict(ideal(3, {"x1*x3"})), PreconditionError);
    CHECK(extend_to(R, 3) == I);
}

TEST_CASE("degreewise dimension counting") {
    auto I = ideal(2, {"x1^2", "x1*x2", "x2^2"});  // R/I = k + 2 linear
    CHECK(quotient_dim_in_degree(I, 0) == 1);
    CHECK(quotient_dim_in_degree(I, 1) == 2);
    CHECK(quotient_dim_in_degree(I, 2) == 0);
    CHECK(ideal_dim_in_degree(I, 2) == 3);
}

TEST_CASE("random ideals are deterministic, minimal, proper, nonzero") {
    auto a = random_monomial_ideal(3, 3, 4, 99);
    auto b = random_monomial_ideal(3, 3, 4, 99);
    CHECK(a == b);
    CHECK(a.is_proper());
    CHECK_FALSE(a.is_zero());
    auto c = random_monomial_ideal(2, 1, 50, 5);  // more draws than monomials
    CHECK(c.generator_count() <= 2);
    CHECK_FALSE(c.is_zero());
}
