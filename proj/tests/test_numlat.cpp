#include "seshadri/numlat.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using seshadri::DivClass;
using seshadri::Rat;
using seshadri::RuledSurface;
using seshadri::arithmetic_genus;
using seshadri::canonical_class;
using seshadri::chi;
using seshadri::h0;
using seshadri::intersect;
using seshadri::is_ample;
using seshadri::is_irreducible_candidate;
using seshadri::to_string;

TEST_CASE("surface construction validates invariants", "[numlat]") {
    CHECK(RuledSurface(0).rational_base());
    CHECK(RuledSurface(3).invariant_e == 3);
    CHECK(RuledSurface(3).base_genus == 0);
    CHECK_FALSE(RuledSurface(2, 1).rational_base());
    CHECK_THROWS_AS(RuledSurface(-1), std::domain_error);
    CHECK_THROWS_AS(RuledSurface(0, -2), std::domain_error);
}

TEST_CASE("intersection numbers on the standard basis", "[numlat]") {
    CHECK(intersect(RuledSurface(0), {0, 1}, {0, 1}) == 0);
    CHECK(intersect(RuledSurface(3), {1, 0}, {1, 0}) == -3);
    CHECK(intersect(RuledSurface(1), {1, 2}, {1, 3}) == 4);
    CHECK(intersect(RuledSurface(2), {1, 0}, {0, 1}) == 1);
}

TEST_CASE("intersection form is symmetric and bilinear", "[numlat]") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long long> coef(-10, 10), es(0, 5);
    for (int i = 0; i < 20000; ++i) {
        const RuledSurface S(es(rng));
        const DivClass D{coef(rng), coef(rng)}, E{coef(rng), coef(rng)}, F{coef(rng), coef(rng)};
        CHECK(intersect(S, D, E) == intersect(S, E, D));
        CHECK(intersect(S, D + E, F) == intersect(S, D, F) + intersect(S, E, F));
        const long long k = coef(rng);
        CHECK(intersect(S, k * D, E) == k * intersect(S, D, E));
        // self-intersection in closed form
        CHECK(intersect(S, D, D) == 2 * D.a * D.b - D.a * D.a * S.invariant_e);
    }
}

TEST_CASE("canonical class and adjunction", "[numlat]") {
    CHECK(canonical_class(RuledSurface(0)) == DivClass{-2, -2});
    CHECK(canonical_class(RuledSurface(1)) == DivClass{-2, -3});
    CHECK(canonical_class(RuledSurface(2)) == DivClass{-2, -4});
    CHECK(intersect(RuledSurface(1), canonical_class(RuledSurface(1)), {2, 2}) == -6);

    // 2 p_a - 2 = -m^2 e + m e - 2 m + n (2 m - 2) for D = m C0 + n f
    for (long long e = 0; e <= 5; ++e) {
        const RuledSurface S(e);
        for (long long m = 1; m <= 12; ++m)
            for (long long n = -10; n <= 30; ++n) {
                const Rat pa = arithmetic_genus(S, {m, n});
                CHECK(Rat(2) * pa - Rat(2) == Rat(-m * m * e + m * e - 2 * m + n * (2 * m - 2)));
            }
    }
}

TEST_CASE("ampleness criterion", "[numlat]") {
    CHECK(is_ample(RuledSurface(2), {1, 3}));
    CHECK_FALSE(is_ample(RuledSurface(2), {1, 2}));
    CHECK(is_ample(RuledSurface(4), {3, 25}));
    CHECK_FALSE(is_ample(RuledSurface(0), {0, 1}));
    CHECK_FALSE(is_ample(RuledSurface(0), {1, 0}));
    CHECK(is_ample(RuledSurface(0), {1, 1}));
    CHECK_FALSE(is_ample(RuledSurface(3), {-1, 5}));
}

TEST_CASE("irreducible-candidate predicate", "[numlat]") {
    CHECK(is_irreducible_candidate(RuledSurface(0), {1, 0}));
    CHECK(is_irreducible_candidate(RuledSurface(5), {0, 1}));
    CHECK_FALSE(is_irreducible_candidate(RuledSurface(2), {1, 1}));
    CHECK(is_irreducible_candidate(RuledSurface(3), {2, 6}));  // b = a e, e > 0
    CHECK_FALSE(is_irreducible_candidate(RuledSurface(0), {2, 0}));
    CHECK_FALSE(is_irreducible_candidate(RuledSurface(1), {0, 2}));
    CHECK(is_irreducible_candidate(RuledSurface(1), {2, 3}));
}

TEST_CASE("section counts and Euler characteristic", "[numlat]") {
    CHECK(h0(RuledSurface(2), {1, 3}) == 6);
    CHECK(h0(RuledSurface(2), {0, 0}) == 1);
    CHECK(h0(RuledSurface(0), {1, 2}) == 6);
    CHECK(h0(RuledSurface(3), {-1, 5}) == 0);
    CHECK(h0(RuledSurface(2), {2, 1}) == 2);  // truncated terms drop out

    CHECK(chi(RuledSurface(0), {0, 0}) == Rat(1));
    CHECK(chi(RuledSurface(2), {1, 3}) == Rat(6));
    CHECK(chi(RuledSurface(0), {0, 1}) == Rat(2));

    // vanishing higher cohomology: h0 == chi whenever a >= 0 and b >= a e
    for (long long e = 0; e <= 5; ++e) {
        const RuledSurface S(e);
        for (long long a = 0; a <= 8; ++a)
            for (long long b = a * e; b <= 40; ++b)
                CHECK(Rat(h0(S, {a, b})) == chi(S, {a, b}));
    }
}

TEST_CASE("arithmetic genus values and integrality", "[numlat]") {
    CHECK(arithmetic_genus(RuledSurface(1), {2, 2}) == Rat(0));
    CHECK(arithmetic_genus(RuledSurface(0), {2, 2}) == Rat(1));
    CHECK(arithmetic_genus(RuledSurface(0), {1, 0}) == Rat(0));
    CHECK(arithmetic_genus(RuledSurface(3), {1, 3}) == Rat(0));
    CHECK(arithmetic_genus(RuledSurface(3), {2, 6}) == Rat(2));

    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long long> coef(-12, 12), es(0, 5);
    for (int i = 0; i < 20000; ++i) {
        const RuledSurface S(es(rng));
        const DivClass D{coef(rng), coef(rng)};
        const Rat pa = arithmetic_genus(S, D);
        CHECK(pa.is_integer());
        // chi(D) + p_a(D) == 2 + D^2 ties the two Riemann-Roch forms together
        CHECK(chi(S, D) + pa == Rat(2 + intersect(S, D, D)));
    }
}

TEST_CASE("operations needing a rational base reject positive genus", "[numlat]") {
    const RuledSurface S(2, 1);
    CHECK(intersect(S, {1, 2}, {1, 3}) == 3);  // lattice arithmetic is genus-free
    CHECK(is_ample(S, {1, 3}));
    CHECK_THROWS_AS(canonical_class(S), std::domain_error);
    CHECK_THROWS_AS(h0(S, {1, 3}), std::domain_error);
    CHECK_THROWS_AS(chi(S, {1, 3}), std::domain_error);
    CHECK_THROWS_AS(arithmetic_genus(S, {1, 3}), std::domain_error);
    CHECK_THROWS_WITH(h0(S, {1, 3}), Catch::Matchers::ContainsSubstring("genus 0"));
}

TEST_CASE("signature constraint: (L.D)^2 >= L^2 D^2 for ample L", "[numlat]") {
    for (long long e = 0; e <= 4; ++e) {
        const RuledSurface S(e);
        for (long long p = 1; p <= 4; ++p)
            for (long long q = p * e + 1; q <= p * e + 6; ++q) {
                const DivClass L{p, q};
                REQUIRE(is_ample(S, L));
                for (long long a = -8; a <= 8; ++a)
                    for (long long b = -8; b <= 8; ++b) {
                        const DivClass D{a, b};
                        const long long ld = intersect(S, L, D);
                        const long long lhs = ld * ld;
                        const long long rhs = intersect(S, L, L) * intersect(S, D, D);
                        CHECK(lhs >= rhs);
                        // equality exactly when D is a rational multiple of L
                        CHECK((lhs == rhs) == (p * b == q * a));
                    }
            }
    }
}

TEST_CASE("divisor class serialization", "[numlat]") {
    CHECK(to_string(DivClass{1, 2}) == "1*C0+2*f");
    CHECK(to_string(DivClass{-2, -4}) == "-2*C0-4*f");
    CHECK(to_string(DivClass{3, -1}) == "3*C0-1*f");
    CHECK(to_string(DivClass{0, 0}) == "0*C0+0*f");
}

TEST_CASE("divisor classes order lexicographically", "[numlat]") {
    CHECK(DivClass{0, 5} < DivClass{1, 0});
    CHECK(DivClass{1, 2} < DivClass{1, 3});
    CHECK(DivClass{1, 2} == DivClass{1, 2});
    CHECK((DivClass{1, 2} + DivClass{0, 3}) == DivClass{1, 5});
    CHECK(3 * DivClass{1, -2} == DivClass{3, -6});
}
