#ifndef HSLAB_TABLEAUX_HPP
#define HSLAB_TABLEAUX_HPP

#include <hslab/numbers.hpp>
#include <hslab/polynomial.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hslab {

// Partition shape: weakly decreasing positive parts, at least one part.
// Rows are indexed from the bottom, so row 0 is the longest.
struct YoungDiagram {
    std::vector<int> parts;

    explicit YoungDiagram(std::vector<int> p);

    int rows() const { return static_cast<int>(parts.size()); }
    int size() const;
    std::string to_string() const;
};

// Filling of a diagram by 1..n, each once: rows strictly increase left to
// right, columns strictly increase bottom to top. rows[i][j] is the entry
// in row i (from the bottom), column j.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    int size() const;
    std::string to_string() const;
};

// Number of standard tableaux of the shape, by the hook length formula.
Int hook_length_count(const YoungDiagram& shape);

// Every standard tableau of the shape, deterministic order (entries placed
// in increasing order, candidate rows tried bottom-up). Cross-checks the
// total against hook_length_count before returning.
std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape);

// #{i : entry i+1 lies in a higher row than entry i}
int des_tableau(const StandardTableau& t);

// Number of fillings with entries in {1..t}, weakly increasing along rows
// and strictly increasing up columns, counted directly. t >= 0.
Int schur_ones(const YoungDiagram& shape, long t);

// The same count from the hook content product, an independent route.
Int schur_ones_hook_content(const YoungDiagram& shape, long t);

// Checks (1-z)^(n+1) sum_t schur_ones(shape, t) z^t equals the descent
// polynomial sum over SYT of z^(des+1). The counting function is
// interpolated from t = 0..n and confirmed at t = n+1 before the series
// transform. Returns the first mismatch rendered as text, nullopt on pass.
std::optional<std::string> verify_sytdes(const YoungDiagram& shape);

// All partitions of n >= 1 as weakly decreasing part lists, ordered
// lexicographically largest-first.
std::vector<std::vector<int>> partitions_of(int n);

// sum over shapes of n of (sum_P y^(des P + 1)) (sum_Q z^(des Q + 1)),
// P, Q standard tableaux of the same shape. Entry a of the result is the
// coefficient of y^a, a polynomial in z.
std::vector<IntPolynomial> syt_pair_bivariate(int n);

} // namespace hslab

#endif
