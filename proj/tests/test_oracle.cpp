#include "seshadri/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using seshadri::DivClass;
using seshadri::HanSweepReport;
using seshadri::MultVector;
using seshadri::Rat;
using seshadri::RuledSurface;
using seshadri::ScrollDivisor;
using seshadri::SearchParams;
using seshadri::SeshadriResult;
using seshadri::TheoremScanReport;
using seshadri::UpperBoundCert;
using seshadri::exists_divisor_with_mults;
using seshadri::scroll_exact_value;
using seshadri::sweep_han_inequality;
using seshadri::upper_bound_very_general;
using seshadri::verify_theorem_r_le_e;

TEST_CASE("search parameter validation and defaults", "[oracle]") {
    CHECK_THROWS_AS(SearchParams(0, 5, 5), std::domain_error);
    CHECK_THROWS_AS(SearchParams(5, 0, 5), std::domain_error);
    CHECK_THROWS_AS(SearchParams(5, 5, 0), std::domain_error);

    const SearchParams d = SearchParams::defaults(RuledSurface(3), {2, 7}, 2);
    CHECK(d.max_a == 3);
    CHECK(d.max_b == 4 * 3 * 3 + 4);
    CHECK(d.max_total_mult == 4);

    const SearchParams d0 = SearchParams::defaults(RuledSurface(0), {1, 1}, 5);
    CHECK(d0.max_a == 3);
    CHECK(d0.max_b == 16);
    CHECK(d0.max_total_mult == 10);
}

TEST_CASE("certain existence of divisors with assigned multiplicities", "[oracle]") {
    const RuledSurface S(0);
    CHECK(exists_divisor_with_mults(S, {1, 2}, MultVector({1, 1, 1, 1, 1})));
    CHECK_FALSE(exists_divisor_with_mults(S, {0, 1}, MultVector({1, 1})));
    CHECK(exists_divisor_with_mults(S, {1, 2}, MultVector({2})));
    CHECK(exists_divisor_with_mults(S, {0, 1}, MultVector({1})));
    CHECK_FALSE(exists_divisor_with_mults(RuledSurface(2), {1, 0}, MultVector({1})));
}

TEST_CASE("certified upper bounds with canonical tie-breaking", "[oracle]") {
    const UpperBoundCert one = upper_bound_very_general(RuledSurface(3), {2, 7}, 2,
                                                        SearchParams(3, 15, 6));
    CHECK(one.value == Rat(2));
    CHECK(one.cls == DivClass{0, 1});  // ties resolve to the lexicographically least class
    CHECK(one.mults == MultVector({1}));

    const UpperBoundCert diag =
        upper_bound_very_general(RuledSurface(0), {1, 1}, 2, SearchParams(3, 6, 6));
    CHECK(diag.value == Rat(1));
    CHECK(diag.cls == DivClass{0, 1});
    CHECK(diag.mults == MultVector({1}));

    const UpperBoundCert scroll5 =
        upper_bound_very_general(RuledSurface(0), {1, 2}, 5, SearchParams(3, 16, 10));
    CHECK(scroll5.value == Rat(4, 5));
    CHECK(scroll5.cls == DivClass{1, 2});
    CHECK(scroll5.mults == MultVector({1, 1, 1, 1, 1}));
}

TEST_CASE("upper-bound search is deterministic across worker counts", "[oracle]") {
    const RuledSurface S(3);
    const DivClass L{2, 7};
    const SearchParams p(3, 15, 6);
    const UpperBoundCert base = upper_bound_very_general(S, L, 2, p, 1);
    for (unsigned workers : {2u, 3u, 5u, 8u}) {
        const UpperBoundCert c = upper_bound_very_general(S, L, 2, p, workers);
        CHECK(c.value == base.value);
        CHECK(c.cls == base.cls);
        CHECK(c.mults == base.mults);
    }
}

TEST_CASE("upper bounds never increase when the search widens", "[oracle]") {
    const struct {
        long long e, a, b, r;
    } cases[] = {{3, 2, 7, 2}, {0, 1, 1, 3}, {0, 1, 2, 5}, {1, 1, 3, 4}, {2, 1, 5, 3}};
    for (const auto& c : cases) {
        const RuledSurface S(c.e);
        const DivClass L{c.a, c.b};
        const Rat narrow = upper_bound_very_general(S, L, c.r, SearchParams(2, 8, 4)).value;
        const Rat mid = upper_bound_very_general(S, L, c.r, SearchParams(3, 12, 6)).value;
        const Rat wide = upper_bound_very_general(S, L, c.r, SearchParams(4, 16, 9)).value;
        CHECK(mid <= narrow);
        CHECK(wide <= mid);
    }
}

TEST_CASE("one fibre through one point certifies the few-point value", "[oracle]") {
    // with multiplicity budget 1 the best class is a fibre: value L.f = a
    const UpperBoundCert f1 =
        upper_bound_very_general(RuledSurface(2), {1, 3}, 1, SearchParams(3, 12, 1));
    CHECK(f1.value == Rat(1));
    CHECK(f1.cls == DivClass{0, 1});

    const UpperBoundCert f2 =
        upper_bound_very_general(RuledSurface(5), {2, 11}, 3, SearchParams(3, 12, 1));
    CHECK(f2.value == Rat(2));
    CHECK(f2.cls == DivClass{0, 1});
    CHECK(f2.mults == MultVector({1}));
}

TEST_CASE("upper-bound search rejects bad inputs", "[oracle]") {
    CHECK_THROWS_AS(upper_bound_very_general(RuledSurface(2), {1, 2}, 2, SearchParams(3, 12, 4)),
                    std::domain_error);  // not ample
    CHECK_THROWS_AS(upper_bound_very_general(RuledSurface(2), {1, 3}, 0, SearchParams(3, 12, 4)),
                    std::domain_error);
}

TEST_CASE("scan confirms the special-position formula", "[oracle]") {
    const TheoremScanReport a =
        verify_theorem_r_le_e(RuledSurface(3), {2, 7}, {3, 2, 1}, SearchParams(12, 48, 1));
    CHECK(a.passed());
    CHECK(a.expected.value == Rat(1));
    CHECK(a.violators.empty());
    REQUIRE(a.worst_class.has_value());
    CHECK(*a.worst_class == DivClass{1, 3});
    CHECK(*a.worst_ratio == Rat(7, 3));
    CHECK(a.classes_checked > 0);

    const TheoremScanReport b =
        verify_theorem_r_le_e(RuledSurface(1), {1, 2}, {1, 1, 0}, SearchParams(12, 24, 1));
    CHECK(b.passed());
    CHECK(b.expected.value == Rat(1));
    CHECK(*b.worst_class == DivClass{1, 1});
    CHECK(*b.worst_ratio == Rat(2));

    const TheoremScanReport c =
        verify_theorem_r_le_e(RuledSurface(4), {3, 25}, {4, 4, 0}, SearchParams(12, 60, 1));
    CHECK(c.passed());
    CHECK(c.expected.value == Rat(3, 4));
    CHECK(*c.worst_class == DivClass{1, 4});
    CHECK(*c.worst_ratio == Rat(25, 4));

    CHECK_THROWS_AS(
        verify_theorem_r_le_e(RuledSurface(0), {1, 1}, {1, 1, 0}, SearchParams(4, 4, 1)),
        std::domain_error);
}

TEST_CASE("scroll values meet their lower bounds exactly", "[oracle]") {
    const SeshadriResult r3 = scroll_exact_value(3, SearchParams(3, 16, 6));
    CHECK(r3.value == Rat(2, 3));
    REQUIRE(std::holds_alternative<ScrollDivisor>(r3.certificate));
    CHECK(std::get<ScrollDivisor>(r3.certificate).cls == DivClass{1, 1});
    CHECK(std::get<ScrollDivisor>(r3.certificate).points == 3);

    const SeshadriResult r5 = scroll_exact_value(5, SearchParams(3, 16, 10));
    CHECK(r5.value == Rat(4, 5));
    CHECK(std::get<ScrollDivisor>(r5.certificate).cls == DivClass{1, 2});
    CHECK(std::get<ScrollDivisor>(r5.certificate).points == 5);

    const SeshadriResult r6 = scroll_exact_value(6, SearchParams(3, 20, 12));
    CHECK(r6.value == Rat(5, 6));
    CHECK(std::get<ScrollDivisor>(r6.certificate).cls == DivClass{1, 3});
    CHECK(std::get<ScrollDivisor>(r6.certificate).points == 6);

    // caps too tight to reach the optimum: the bounds cannot meet
    CHECK_THROWS_AS(scroll_exact_value(5, SearchParams(1, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(scroll_exact_value(2, SearchParams(3, 12, 4)), std::domain_error);
}

TEST_CASE("multiplicity-inequality sweeps", "[oracle]") {
    const HanSweepReport wide = sweep_han_inequality(8, 12);
    CHECK(wide.passed());
    CHECK(wide.counterexamples.empty());
    CHECK(wide.vectors_total > wide.vectors_applicable);
    REQUIRE(wide.equality_witness.has_value());
    CHECK(*wide.equality_witness == MultVector({2, 2, 2}));
    CHECK(*wide.tightest_ratio == Rat(1));

    const HanSweepReport tiny = sweep_han_inequality(2, 2);
    CHECK(tiny.vectors_total == 5);       // (1) (2) (1,1) (2,1) (2,2)
    CHECK(tiny.vectors_applicable == 1);  // only (2,1); (2,2) is the excluded pair
    CHECK(tiny.passed());

    const HanSweepReport nine = sweep_han_inequality(3, 2);
    CHECK(nine.vectors_total == 9);
    CHECK(nine.vectors_applicable == 4);
    REQUIRE(nine.tightest.has_value());
    CHECK(*nine.tightest == MultVector({2, 2, 2}));
    CHECK(*nine.tightest_ratio == Rat(1));
    CHECK(*nine.equality_witness == MultVector({2, 2, 2}));

    CHECK_THROWS_AS(sweep_han_inequality(1, 5), std::domain_error);
    CHECK_THROWS_AS(sweep_han_inequality(5, 1), std::domain_error);
}
