#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hslab/closedform.hpp>
#include <hslab/lattice.hpp>
#include <hslab/permstats.hpp>

using namespace hslab;

TEST_CASE("polynomial binomials do not vanish at negative arguments") {
    // binom(2t+1, 2) = 2t^2 + t
    CHECK(poly_binomial(2, 1, 2) == RatPolynomial({Rat(0), Rat(1), Rat(2)}));
    CHECK(poly_binomial(2, 1, 2).eval(Rat(3)) == Rat(21));

    // binom(t-1, 2) evaluated at t = 0 is 1, unlike the combinatorial
    // convention binomial(-1, 2) = 0
    CHECK(poly_binomial(1, -1, 2).eval(Rat(0)) == Rat(1));
    CHECK(binomial(-1, 2) == 0);
}

TEST_CASE("closed slice formulas match hand-sized interpolations") {
    CHECK(ehrhart_A_closed(2, 1, 1) ==
          RatPolynomial({Rat(0), Rat(1, 2), Rat(1, 2)}));
    CHECK(ehrhart_B_closed(2, 1, 2) ==
          RatPolynomial({Rat(1), Rat(3, 2), Rat(1, 2)}));
    CHECK(ehrhart_A_closed(3, 2, 4) ==
          ehrhart_polynomial(SliceRegion::a_slice(3, 2, 4)));
    CHECK(ehrhart_B_closed(3, 2, 4) ==
          ehrhart_polynomial(SliceRegion::b_slice(3, 2, 4)));
}

TEST_CASE("closed-form flag counts") {
    CHECK(flag_eulerian_closed(3, 1, 1) == 1);
    CHECK(flag_eulerian_closed(3, 1, 2) == 4);
    CHECK(flag_eulerian_closed(3, 1, 3) == 1);
    CHECK(flag_eulerian_closed(2, 2, 2) == 3);
    // outside the support everything cancels
    CHECK(flag_eulerian_closed(2, 2, -1) == 0);
    CHECK(flag_eulerian_closed(2, 2, 0) == 0);
    CHECK(flag_eulerian_closed(2, 2, 5) == 0);
    for (long k = 0; k <= 6; ++k)
        CHECK(flag_eulerian_closed(3, 2, k) == flag_eulerian(3, 2, k));
}

TEST_CASE("closed-form descent counts at n=6") {
    const std::vector<Int> frozen{1, 57, 302, 302, 57, 1};
    const IntPolynomial enumerated = eulerian_polynomial(6);
    for (long k = 1; k <= 6; ++k) {
        CHECK(eulerian_closed(6, k) == frozen[k - 1]);
        CHECK(eulerian_closed(6, k) == enumerated.coeff(k - 1));
    }
    CHECK_THROWS_AS(eulerian_closed(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_closed(6, 7), std::invalid_argument);
}

TEST_CASE("constant-term window oracles agree with direct counting") {
    CHECK(ct_window_qpoly(2, 1, 0, 2) == 3);
    CHECK(ct_window_binomial(2, 1, 0, 2) == 3);
    CHECK(ct_window_qpoly(2, 1, 2, 2) == 0);

    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r)
            for (long k = 1; k <= static_cast<long>(r) * n; ++k)
                for (bool open_side : {true, false}) {
                    const SliceRegion region =
                        open_side ? SliceRegion::a_slice(n, r, k)
                                  : SliceRegion::b_slice(n, r, k);
                    for (long t = 1; t <= 4; ++t) {
                        const Int want = count_points(region, t);
                        CHECK(ct_count_points_qpoly(region, t) == want);
                        CHECK(ct_count_points_binomial(region, t) == want);
                    }
                }
}

TEST_CASE("constant-term oracles reject non-slice regions") {
    CHECK_THROWS_AS(ct_count_points_qpoly(SliceRegion::cube_closed(2, 1), 1),
                    std::invalid_argument);
}
