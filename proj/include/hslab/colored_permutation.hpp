#ifndef HSLAB_COLORED_PERMUTATION_HPP
#define HSLAB_COLORED_PERMUTATION_HPP

#include <hslab/numbers.hpp>
#include <functional>
#include <string>
#include <vector>

namespace hslab {

// A permutation sigma of {1..n} (one-based values) with a color in {0..r-1}
// attached to every position. n == 0 is the empty object.
struct ColoredPermutation {
    std::vector<int> sigma;   // sigma[i] = image of position i+1
    std::vector<int> colors;  // colors[i] = color at position i+1
    int r = 1;

    ColoredPermutation() = default;
    ColoredPermutation(std::vector<int> s, std::vector<int> c, int colors_count);

    int size() const { return static_cast<int>(sigma.size()); }

    // inverse permutation with colors dropped (all zero), same r
    ColoredPermutation inverse() const;

    std::string to_string() const;

    bool operator==(const ColoredPermutation& o) const {
        return r == o.r && sigma == o.sigma && colors == o.colors;
    }
    bool operator<(const ColoredPermutation& o) const {
        if (sigma != o.sigma) return sigma < o.sigma;
        return colors < o.colors;
    }
};

void validate(const ColoredPermutation& p);

// Number of elements of the full enumeration: r^n * n!.
Int colored_count(int n, int r);

// Calls fn for every (sigma, colors) with sigma in lexicographic order and,
// within one sigma, colors in lexicographic order. The object passed to fn
// is reused between calls.
void for_each_colored_permutation(int n, int r,
                                  const std::function<void(const ColoredPermutation&)>& fn);

// Materialized enumeration, same order. Intended for small n.
std::vector<ColoredPermutation> all_colored_permutations(int n, int r);

} // namespace hslab

#endif
