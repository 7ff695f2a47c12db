#ifndef HSLAB_LATTICE_HPP
#define HSLAB_LATTICE_HPP

#include <hslab/colored_permutation.hpp>
#include <hslab/polynomial.hpp>
#include <map>
#include <vector>

namespace hslab {

// Regions inside [0,r]^n whose lattice point counts we study.
//   a_slice        {v in [0,r)^n : k-1 <= sum v < k}
//   b_slice        {v in [0,r]^n : k-1 <= sum v < k}, top closed when k = r*n
//   cube_closed    [0,r]^n
//   cube_halfopen  [0,r)^n
//   cell_closed    {v in [0,1]^n : std(v) = sigma}
//   cell_halfopen  {v in [0,1)^n : std(v) = sigma}
enum class RegionFamily {
    a_slice,
    b_slice,
    cube_closed,
    cube_halfopen,
    cell_closed,
    cell_halfopen,
};

struct SliceRegion {
    RegionFamily family;
    int n = 0;
    int r = 1;
    long k = 0;              // slices only
    std::vector<int> sigma;  // cells only

    static SliceRegion a_slice(int n, int r, long k);
    static SliceRegion b_slice(int n, int r, long k);
    static SliceRegion cube_closed(int n, int r);
    static SliceRegion cube_halfopen(int n, int r);
    static SliceRegion cell_closed(std::vector<int> sigma);
    static SliceRegion cell_halfopen(std::vector<int> sigma);

    std::string to_string() const;
};

// Exact membership of a rational point.
bool region_contains(const SliceRegion& region, const std::vector<Rat>& point);

// #(Z^n intersect t*region). DP over the running coordinate sum for the
// slice and cube families, direct enumeration for the cells. t >= 1.
Int count_points(const SliceRegion& region, long t);

// Independent oracle: walks the full bounding box of t*region and tests
// region_contains on every rational point. Exponential; small inputs only.
Int count_points_naive(const SliceRegion& region, long t);

// Degree <= n polynomial in t interpolated through the counts at
// t = 1..n+1; throws if the count at t = n+2 disagrees with it.
RatPolynomial ehrhart_polynomial(const SliceRegion& region);

// Numerator of the generating series of the counts over (1-z)^(n+1),
// a polynomial in z of degree <= n+1 with integer coefficients. The
// count at t = 0 is read off the interpolated polynomial.
IntPolynomial ehrhart_series(const SliceRegion& region);

// ehrhart_series of the A/B slices with the degenerate cases folded in:
// k = 0 gives 1 when n = 0 and the zero polynomial otherwise; k outside
// 0..r*n gives the zero polynomial.
IntPolynomial A_polynomial(int n, int r, long k);
IntPolynomial B_polynomial(int n, int r, long k);

// Series of every std cell of S_n at once (one box scan per dilation
// instead of one per sigma). Keys are the sigma vectors.
std::map<std::vector<int>, IntPolynomial> std_cell_series_all(int n, bool closed);

// A_n(z) = sum over S_n of z^des, the classical n-th descent polynomial.
IntPolynomial eulerian_polynomial(int n);

} // namespace hslab

#endif
