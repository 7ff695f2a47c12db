#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hslab/bijections.hpp>
#include <hslab/permstats.hpp>

using namespace hslab;

namespace {
GridPoint pt(std::vector<Rat> coords, int r, long t) {
    return GridPoint(std::move(coords), r, t);
}
} // namespace

TEST_CASE("standardization breaks ties left to right") {
    const std::vector<char> word{'x', 'y', 'x', 'z', 'y', 'x', 'x'};
    CHECK(standardization(word) == std::vector<int>{1, 5, 2, 7, 6, 3, 4});
    CHECK(standardization(std::vector<int>{}) == std::vector<int>{});
    CHECK(standardization(std::vector<int>{7}) == std::vector<int>{1});
}

TEST_CASE("colored standardization of a rational point") {
    // v = (5/3, 1/3, 4/3) in [0,2)^3: floors give the colors, the
    // fractional parts standardize to sigma
    const GridPoint v = pt({Rat(5, 3), Rat(1, 3), Rat(4, 3)}, 2, 3);
    const ColoredPermutation p = cstd(v);
    CHECK(p.sigma == std::vector<int>{3, 1, 2});
    CHECK(p.colors == std::vector<int>{1, 0, 1});
    CHECK(p.r == 2);

    CHECK(fdes_point(v) == Rat(10, 3));
    CHECK(rat_floor(fdes_point(v)) == fdes(p));
}

TEST_CASE("phi sends a point to its difference vector") {
    const GridPoint v = pt({Rat(5, 3), Rat(1, 3), Rat(4, 3)}, 2, 3);
    const GridPoint b = phi(v);
    CHECK(b.coords == std::vector<Rat>{Rat(5, 3), Rat(2, 3), Rat(1)});
    Rat total(0);
    for (const Rat& c : b.coords) total += c;
    CHECK(total == fdes_point(v));
    CHECK(phi_inverse(b) == v);
}

TEST_CASE("phi round-trips on a full grid") {
    for_each_grid_point(2, 2, 2, [](const GridPoint& a) {
        CHECK(phi_inverse(phi(a)) == a);
        CHECK(phi(phi_inverse(a)) == a);
    });
}

TEST_CASE("alpha recolors without touching sigma") {
    const ColoredPermutation p({1, 2}, {1, 0}, 2);
    const ColoredPermutation q = alpha(p);
    CHECK(q.sigma == p.sigma);
    CHECK(q.colors == std::vector<int>{1, 1});
    CHECK(fdes(q) == cdes(p));

    const ColoredPermutation s = alpha_star(p);
    CHECK(s.sigma == p.sigma);
    CHECK(s.colors == std::vector<int>{1, 0});
    CHECK(fdes_star(s) == cdes(p));
}

TEST_CASE("alpha and alpha_star transport exhaustively at n=3, r=2") {
    for_each_colored_permutation(3, 2, [](const ColoredPermutation& p) {
        CHECK(fdes(alpha(p)) == cdes(p));
        CHECK(fdes_star(alpha_star(p)) == cdes(p));
    });
}

TEST_CASE("block involution reverses color blocks inside nonzero runs") {
    const ColoredPermutation in({1, 2}, {1, 2}, 3);
    const ColoredPermutation want({2, 1}, {2, 1}, 3);
    CHECK(block_involution(in) == want);
    CHECK(block_involution(want) == in);

    // zero-colored positions stay put
    const ColoredPermutation zeros({3, 1, 2}, {0, 0, 0}, 2);
    CHECK(block_involution(zeros) == zeros);
}

TEST_CASE("block involution on the longer mixed-run example") {
    const ColoredPermutation in({8, 2, 7, 1, 4, 3, 5, 6},
                                {1, 0, 2, 2, 1, 0, 1, 1}, 3);
    const ColoredPermutation want({8, 2, 4, 7, 1, 3, 5, 6},
                                  {1, 0, 1, 2, 2, 0, 1, 1}, 3);
    const ColoredPermutation got = block_involution(in);
    CHECK(got == want);
    CHECK(block_involution(got) == in);
    CHECK(fexc(got) == fexc(in));
    CHECK(ceil_div(fdes(in), 3) == ceil_div(fdes_star(got), 3));
}
