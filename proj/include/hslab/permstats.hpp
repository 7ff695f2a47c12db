#ifndef HSLAB_PERMSTATS_HPP
#define HSLAB_PERMSTATS_HPP

#include <hslab/colored_permutation.hpp>
#include <map>
#include <optional>
#include <utility>

namespace hslab {

// descents of the underlying permutation: #{i : sigma_i > sigma_{i+1}}
int des_perm(const std::vector<int>& sigma);

// color-lexicographic descent: c_i > c_{i+1}, or equal colors and sigma_i > sigma_{i+1}
int des(const ColoredPermutation& p);

// r*des + last color; undefined on the empty permutation
int fdes(const ColoredPermutation& p);

// variant descent: c_i < c_{i+1}, or equal colors and sigma_i > sigma_{i+1}
int des_star(const ColoredPermutation& p);

// r*des_star + first color; undefined on the empty permutation
int fdes_star(const ColoredPermutation& p);

// r*#{zero-colored excedances sigma_i > i} + sum of colors
int fexc(const ColoredPermutation& p);

// des of sigma + sum of colors
int cdes(const ColoredPermutation& p);

// #{i in 1..n : inv(i-1) + 1 < inv(i)} with inv(0) = 0; colors ignored
int cover(const ColoredPermutation& p);

// #{i : c_i > 0 and sigma_{i-1} + 1 = sigma_i} with sigma_0 = 0
int cef(const ColoredPermutation& p);

enum class Statistic {
    inverse_descents,
    des,
    fdes,
    des_star,
    fdes_star,
    fexc,
    cdes,
    cover,
    cef,
    ceil_fdes_r,
    ceil_fdes_star_r,
};

const char* statistic_name(Statistic s);
std::optional<Statistic> parse_statistic(const std::string& name);

// Registry evaluation. Every statistic of the empty permutation is 0 so
// that distributions over n = 0 are well defined.
long statistic_value(Statistic s, const ColoredPermutation& p);

// Number of (sigma, c) in the full enumeration with fdes = k-1.
// Conventions: (0, r, 0) -> 1; 0 outside 0 <= k <= r*n.
Int flag_eulerian(int n, int r, long k);

// All of the above at once: entry k of the result, k = 0..r*n.
std::vector<Int> flag_eulerian_row(int n, int r);

using JointDistribution = std::map<std::pair<long, long>, Int>;

// Counts of (a, b) value pairs over the full enumeration of S_n^(r).
JointDistribution joint_distribution(int n, int r, Statistic a, Statistic b);

} // namespace hslab

#endif
