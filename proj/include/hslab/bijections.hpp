#ifndef HSLAB_BIJECTIONS_HPP
#define HSLAB_BIJECTIONS_HPP

#include <hslab/colored_permutation.hpp>
#include <hslab/grid_point.hpp>
#include <algorithm>
#include <numeric>
#include <vector>

namespace hslab {

// Standardization: the unique permutation ordered like v, ties broken
// left to right. Returns one-based values.
template <class T>
std::vector<int> standardization(const std::vector<T>& v) {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return v[a] < v[b]; });
    std::vector<int> sigma(v.size());
    for (size_t rank = 0; rank < idx.size(); ++rank)
        sigma[idx[rank]] = static_cast<int>(rank) + 1;
    return sigma;
}

// Colored standardization of a point of [0,r)^n: colors are the integer
// parts, sigma standardizes the fractional parts.
ColoredPermutation cstd(const GridPoint& v);

// r*des(coords) + last coordinate, as an exact rational. des counts
// strict drops between adjacent coordinates.
Rat fdes_point(const GridPoint& v);

// Difference map: b_i = a_i - a_{i-1}, plus r when a_{i-1} > a_i, with
// a_0 = 0. Lands in [0,r)^n on the same grid and satisfies
// sum_i b_i = fdes_point(a).
GridPoint phi(const GridPoint& a);

// Inverse of phi: a_i = (b_1 + ... + b_i) mod r.
GridPoint phi_inverse(const GridPoint& b);

// Color transport along prefixes: c'_i = (c_1+...+c_i + des(sigma_1..sigma_i)) mod r.
// Sends the joint (cdes, sigma) to (fdes, sigma): fdes(alpha(p)) = cdes(p).
ColoredPermutation alpha(const ColoredPermutation& p);

// Suffix variant: c''_i = (c_i+...+c_n + des(sigma_i..sigma_n)) mod r,
// with fdes_star(alpha_star(p)) = cdes(p).
ColoredPermutation alpha_star(const ColoredPermutation& p);

// Involution on colored permutations: split into maximal constant-color
// blocks, keep zero-colored blocks in place, reverse the block order
// inside every maximal run of nonzero-colored blocks. Preserves fexc and
// swaps ceil(fdes/r) with ceil(fdes_star/r).
ColoredPermutation block_involution(const ColoredPermutation& p);

} // namespace hslab

#endif
