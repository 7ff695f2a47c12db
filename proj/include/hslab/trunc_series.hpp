#ifndef HSLAB_TRUNC_SERIES_HPP
#define HSLAB_TRUNC_SERIES_HPP

#include <hslab/numbers.hpp>
#include <optional>
#include <vector>

namespace hslab {

// How the x direction is normalized. Storage is identical either way
// (entry (n,a,b) multiplies x^n y^a z^b / n!); the tag records which
// builder produced the series and blocks mixing the two conventions in
// one expression. Exponential series read their combinatorial
// coefficients straight from storage, ordinary series store n! times
// the plain x^n coefficient.
enum class XNorm { exponential, ordinary };

// Truncated power series in x, y, z with exact rational coefficients.
// Truncation orders are inclusive maximal degrees per variable. All
// arithmetic is exact on the retained box: multiplication only ever
// discards terms whose every contribution lies outside the box.
class TruncSeries {
public:
    TruncSeries(int nx, int ny, int nz, XNorm norm);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    XNorm norm() const { return norm_; }

    const Rat& at(int n, int a, int b) const { return c_[index(n, a, b)]; }
    void set(int n, int a, int b, const Rat& v) { c_[index(n, a, b)] = v; }
    void add_at(int n, int a, int b, const Rat& v) { c_[index(n, a, b)] += v; }

    // plain coefficient of x^n y^a z^b regardless of normalization
    Rat plain_coeff(int n, int a, int b) const;
    // store v as the plain coefficient of x^n y^a z^b
    void set_plain_coeff(int n, int a, int b, const Rat& v);

    bool same_shape(const TruncSeries& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && nz_ == o.nz_ && norm_ == o.norm_;
    }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rat& s) const;

    // Same coefficients on a wider (y, z) box. Only valid when the source
    // slice is already complete in y and z, so the new cells are true zeros.
    TruncSeries expanded(int ny, int nz) const;

    // Multiplicative inverse on the box; requires constant term 1.
    TruncSeries inverse() const;

    // e >= 0, by repeated multiplication
    TruncSeries pow(long e) const;

private:
    size_t index(int n, int a, int b) const {
        if (n < 0 || n > nx_ || a < 0 || a > ny_ || b < 0 || b > nz_)
            throw std::out_of_range("TruncSeries: index outside truncation box");
        return (static_cast<size_t>(n) * (ny_ + 1) + a) * (nz_ + 1) + b;
    }

    int nx_, ny_, nz_;
    XNorm norm_;
    std::vector<Rat> c_;
};

struct SeriesMismatch {
    int n, a, b;
    Rat lhs, rhs;
    std::string to_string() const;
};

// First difference in lexicographic (n, a, b) order, or nullopt.
std::optional<SeriesMismatch> first_mismatch(const TruncSeries& lhs,
                                             const TruncSeries& rhs);

// Value coef * x^n y^a z^b on the given box.
TruncSeries monomial_series(int nx, int ny, int nz, XNorm norm, const Rat& coef,
                            int n, int a, int b);

// exp((1-z) y^r x) truncated: the m-th x term carries (1-z)^m y^(rm).
TruncSeries exp_one_minus_z_yr_x(int r, int nx, int ny, int nz);

// Reinterpret an exponential series sum c_n(y,z) x^n / n! as the ordinary
// series sum c_n(y,z) x^n.
TruncSeries ordinary_from_exponential(const TruncSeries& s);

} // namespace hslab

#endif
