#ifndef HSLAB_GRID_POINT_HPP
#define HSLAB_GRID_POINT_HPP

#include <hslab/numbers.hpp>
#include <functional>
#include <vector>

namespace hslab {

// A point of (1/t)Z^n with exact rational coordinates. r records the cube
// size [0,r)^n the point is read against; t is the grid denominator.
struct GridPoint {
    std::vector<Rat> coords;
    int r = 1;
    long t = 1;

    GridPoint() = default;
    GridPoint(std::vector<Rat> v, int cube, long denom);

    int size() const { return static_cast<int>(coords.size()); }

    bool operator==(const GridPoint& o) const {
        return r == o.r && t == o.t && coords == o.coords;
    }
    bool operator<(const GridPoint& o) const { return coords < o.coords; }

    std::string to_string() const;
};

// Checks t >= 1, r >= 1 and that every coordinate times t is an integer.
void validate(const GridPoint& p);

// All points of the half-open cube [0,r)^n with denominator t, i.e. every
// coordinate in {0, 1/t, ..., (rt-1)/t}. Lexicographic order, object reused.
void for_each_grid_point(int n, int r, long t,
                         const std::function<void(const GridPoint&)>& fn);

} // namespace hslab

#endif
