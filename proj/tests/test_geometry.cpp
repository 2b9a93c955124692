#include <catch2/catch_amalgamated.hpp>

#include <hodge/geometry.hpp>

using namespace hodge;

TEST_CASE("exact rationals") {
    const Rational half(1, 2), third(1, 3);
    CHECK((half + third) == Rational(5, 6));
    CHECK((half - third) == Rational(1, 6));
    CHECK((half * third) == Rational(1, 6));
    CHECK((half / third) == Rational(3, 2));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(-1, -2) == half);
    CHECK(Rational(1, -2) < Rational(0));
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-3, 9).to_string() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
    CHECK_THROWS_AS(half / Rational(0), domain_error);
}

TEST_CASE("middle Hodge numbers of the named families") {
    CHECK(middle_hodge_vector({FamilyKind::double_cover, 2, 4}) == HodgeVector{3, 37, 3});
    CHECK(middle_hodge_vector({FamilyKind::hypersurface, 3, 4}) == HodgeVector{1, 19, 1});
    CHECK(middle_hodge_vector({FamilyKind::hypersurface, 4, 5}) == HodgeVector{1, 101, 101, 1});
    CHECK_THROWS_AS(middle_hodge_vector({FamilyKind::hypersurface, 3, 3}), input_error);
    CHECK_THROWS_AS(middle_hodge_vector({FamilyKind::double_cover, 0, 4}), input_error);
    // values past int range fail loudly instead of wrapping
    CHECK_THROWS_AS(middle_hodge_vector({FamilyKind::hypersurface, 20, 40}), input_error);
    CHECK_THROWS_AS(closed_form_h0_h1({FamilyKind::double_cover, 40, 200}), input_error);
}

TEST_CASE("closed forms for h0 and h1") {
    CHECK(closed_form_h0_h1({FamilyKind::hypersurface, 2, 4}) == std::make_pair(3LL, 3LL));
    CHECK(closed_form_h0_h1({FamilyKind::double_cover, 2, 4}) == std::make_pair(3LL, 37LL));
    CHECK(closed_form_h0_h1({FamilyKind::hypersurface, 4, 5}) == std::make_pair(1LL, 101LL));
}

TEST_CASE("generating function agrees with closed forms over the grid") {
    for (FamilyKind fam : {FamilyKind::hypersurface, FamilyKind::double_cover})
        for (int n = 2; n <= 5; ++n)
            for (int d = n + 1; d <= 10; ++d) {
                const FamilySpec spec{fam, n, d};
                const auto h = middle_hodge_vector(spec);
                const auto [h0, h1] = closed_form_h0_h1(spec);
                CHECK(h[0] == h0);
                CHECK(h[1] == h1);
            }
}

TEST_CASE("bound reports") {
    for (const FamilySpec spec : {FamilySpec{FamilyKind::double_cover, 2, 4},
                                  FamilySpec{FamilyKind::hypersurface, 4, 5},
                                  FamilySpec{FamilyKind::hypersurface, 5, 6}}) {
        const auto r = check_bounds(spec);
        CHECK(r.unimodal);
        CHECK(r.h1_bound);
        CHECK(r.b_bound);
        CHECK(r.consistent());
    }
    for (FamilyKind fam : {FamilyKind::hypersurface, FamilyKind::double_cover})
        for (int n = 2; n <= 5; ++n)
            for (int d = n + 1; d <= 10; ++d) {
                const auto r = check_bounds({fam, n, d});
                CHECK(r.unimodal);
                CHECK(r.h1_bound);
                CHECK(r.b_bound);
                CHECK(r.consistent());
            }
}

TEST_CASE("f_n matches h1/h0 - (n - 1) at integer degrees") {
    for (int n = 3; n <= 6; ++n)
        for (int d = n + 1; d <= 12; ++d) {
            const FamilySpec spec{FamilyKind::hypersurface, n, d};
            const auto [h0, h1] = closed_form_h0_h1(spec);
            const Rational expected = Rational(h1, h0) - Rational(n - 1);
            CHECK(f_n(n, Rational(d)) == expected);
        }
}

TEST_CASE("f_n is nonnegative on the whole grid") {
    CHECK(f_n(3, Rational(4)) >= Rational(0));
    CHECK(f_n(4, Rational(5)) >= Rational(0));
    for (int n = 3; n <= 8; ++n)
        for (int d = n + 1; d <= 30; ++d) CHECK(f_n(n, Rational(d)) >= Rational(0));
    // rational degrees are fine too
    CHECK(f_n(3, Rational(7, 2)) >= Rational(0));
}

TEST_CASE("f_n approaches 2^n - 2n") {
    // |f_n(10^6) - (2^n - 2n)| <= 1; the tail is O(1/d)
    for (int n : {3, 4, 5}) {
        const Rational v = f_n(n, Rational(1000000));
        const Rational target((1LL << n) - 2 * n);
        CHECK((v - target).abs() <= Rational(1));
    }
}

TEST_CASE("f_n domain errors") {
    CHECK_THROWS_AS(f_n(3, Rational(3)), domain_error);
    CHECK_THROWS_AS(f_n(3, Rational(2)), domain_error);
    CHECK_THROWS_AS(f_n(2, Rational(5)), input_error);
}
