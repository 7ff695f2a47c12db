#ifndef HSLAB_CLOSEDFORM_HPP
#define HSLAB_CLOSEDFORM_HPP

#include <hslab/lattice.hpp>
#include <hslab/polynomial.hpp>

namespace hslab {

// binom(a*t + b, n) expanded as a polynomial in t: a degree-n falling
// factorial over n!. This is the polynomial reading of the binomial; it
// does not vanish for negative arguments.
RatPolynomial poly_binomial(long a, long b, int n);

// Closed form for the Ehrhart polynomial (in t) of the A slice:
//   sum_{j=0}^{floor((k-1)/r)} (-1)^(j+1) C(n,j) binom((k-1-rj)t + n-1, n)
// - sum_{j=0}^{floor(k/r)}     (-1)^(j+1) C(n,j) binom((k-rj)t   + n-1, n)
RatPolynomial ehrhart_A_closed(int n, int r, long k);

// Same for the B slice; the j-th term also loses j from the constant:
// binom((k-1-rj)t + n-1-j, n) and binom((k-rj)t + n-1-j, n).
RatPolynomial ehrhart_B_closed(int n, int r, long k);

// Closed form for the flag descent count #{fdes = k-1}:
//   sum_{j<=floor((k-1)/r)} C(n,j)(-1)^(j+1) (k-rj-1)^n
// - sum_{j<=floor(k/r)}     C(n,j)(-1)^(j+1) (k-rj)^n
Int flag_eulerian_closed(int n, int r, long k);

// Classical descent count #{sigma in S_n : des = k-1}:
//   sum_{j=0}^{k-1} (-1)^j C(n+1,j) (k-j)^n
Int eulerian_closed(int n, long k);

// Constant-term oracle, first route: expand ([box+1]_q)^n with exact
// integer polynomial arithmetic in q and add up the coefficients of
// q^lo .. q^(hi-1); this is #{v in {0..box}^n : lo <= sum v < hi}.
Int ct_window_qpoly(int n, long box, long lo, long hi);

// Constant-term oracle, second route: the same window count as the
// alternating binomial sum over j = 0..n, with the combinatorial
// convention that binom(m, n) = 0 whenever m < 0.
Int ct_window_binomial(int n, long box, long lo, long hi);

// Both routes applied to the dilated A/B slices (other families rejected).
Int ct_count_points_qpoly(const SliceRegion& region, long t);
Int ct_count_points_binomial(const SliceRegion& region, long t);

} // namespace hslab

#endif
