#ifndef HSLAB_SERIES_HPP
#define HSLAB_SERIES_HPP

#include <hslab/polynomial.hpp>
#include <hslab/trunc_series.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hslab {

// Exponential generating series of the three slice/statistic families on
// the box (nx, r*nx, nx+1). Coefficient of x^n/n! y^k z^b:
//   build_A  #{(sigma,c) : fdes = k-1, des(sigma^-1) = b-1}
//   build_B  coefficient b of B_polynomial(n, r, k)
//   build_C  #{(sigma,c) : fexc = r*n-k, ceil(fdes*/r) = b}
// All three have constant term 1 (the n = 0 conventions).
TruncSeries build_A(int r, int nx);
TruncSeries build_B(int r, int nx);
TruncSeries build_C(int r, int nx);

// Checks lhs == exp((1-z) y^r x) * rhs_base on the shared box, which must
// satisfy ny >= r*nx. Returns the first differing coefficient rendered as
// text, nullopt when the boxes agree.
std::optional<std::string> verify_exp_relation(const TruncSeries& lhs,
                                               const TruncSeries& rhs_base,
                                               int r);

// Linear map on polynomials in z sending z^k to z^(ceil(k/r)).
IntPolynomial beta(const IntPolynomial& p, int r);

// Checks sum_n W_n(y,z) x^n / (1-z^r)^n == (1-z) sum_k z^k F_k(x,y) on the
// box (nx, r*nx+r, nz), where W_n is the joint (fexc, fdes*) counting
// polynomial of S_n^(r) and F_k is the x,y kernel
//   F_k = U^floor(k/r) / (1-x) * (1-y^r)
//           / (sum_{0<=i<r} y^i - sum_{1<=i<=r} y^i U^(floor((k-i)/r)+1)),
//   U = (1-x y^r)/(1-x).
// Every retained coefficient of both sides is exact (the n-sum past nx
// only touches higher x powers and the k-sum is complete for every
// retained z power), so the whole box is compared. Requires nz >= r*nx.
std::optional<std::string> verify_foata_han(int r, int nx, int nz);

// Which family's ordinary generating function identity to check.
enum class OgfSide { A, C };

// Checks, on the box (nx, r*nx+r, nz) with ordinary x normalization:
//   A: sum_n A_n(y,z) x^n == (1-y)(1-z) sum_m z^m / (1 - y g^m),
//      g = 1/(1 - x(1-y^r)(1-z))
//   C: sum_n C_n(y,z) x^n == (1-z)(1-y)/(1 - x y^r (1-z))
//        * sum_m z^m / (1 - y V^m),
//      V = (1 - x y^r (1-z))/(1 - x(1-z))
// The left side is build_A/build_C converted to ordinary normalization;
// the m-sum runs to nz, complete for every retained z power. Requires
// nz >= nx+1 so the converted series embeds without loss.
std::optional<std::string> verify_ogf(OgfSide side, int r, int nx, int nz);

// Exact polynomial identities at one r for n = 0..n_max (the grid checks
// start at n = 1). Returns (name, witness) pairs, witness empty on pass:
//   flag-product     A_n^(r)(y,z) (1-y)^n == (1-y^r)^n A_n^(1)(y,z)
//   binomial-grid    A_n^(r)(y,z) / ((1-y^r)^n (1-y) (1-z)^(n+1)) has
//                    (i,j) coefficient binom(i*j+n-1, n)
//   power-sum        A_n^(r)(y,1) / ((1-y^r)^n (1-y)) has coefficient i^n
//   fdes-cdes-joint  joint (fdes, inverse descents) == joint (cdes, same)
// where A_n^(r)(y,z) = sum over S_n^(r) of y^(fdes+1) z^(des(sigma^-1)+1).
std::vector<std::pair<std::string, std::optional<std::string>>>
verify_polynomial_identities(int r, int n_max);

} // namespace hslab

#endif
