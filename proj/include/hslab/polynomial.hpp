#ifndef HSLAB_POLYNOMIAL_HPP
#define HSLAB_POLYNOMIAL_HPP

#include <hslab/numbers.hpp>
#include <initializer_list>
#include <vector>

namespace hslab {

// Dense univariate polynomial with exact integer coefficients, stored
// low-to-high with no trailing zeros (zero polynomial = empty vector).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial monomial(const Int& coeff, long deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Int coeff(long i) const {
        return (i < 0 || i >= static_cast<long>(c_.size())) ? Int(0) : c_[i];
    }
    const std::vector<Int>& coeffs() const { return c_; }

    void add_to_coeff(long i, const Int& v);

    Int eval(const Int& x) const;
    Int sum_coeffs() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    // z^k -> z^(k+shift); shift >= 0
    IntPolynomial shifted(long shift) const;

    std::string to_string(const std::string& var = "z") const;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

private:
    std::vector<Int> c_;
};

// Dense univariate polynomial with exact rational coefficients.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPolynomial from_int(const IntPolynomial& p);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(long i) const {
        return (i < 0 || i >= static_cast<long>(c_.size())) ? Rat(0) : c_[i];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    // Exact only if every coefficient is an integer; throws otherwise.
    IntPolynomial to_int() const;

    RatPolynomial operator+(const RatPolynomial& o) const;
    RatPolynomial operator-(const RatPolynomial& o) const;
    RatPolynomial operator*(const RatPolynomial& o) const;
    RatPolynomial operator*(const Rat& s) const;
    bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "t") const;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

private:
    std::vector<Rat> c_;
};

// Unique polynomial of degree < points.size() through the given nodes,
// computed by exact Lagrange interpolation. Nodes must be distinct.
RatPolynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Coefficients 0..n+1 of (1-z)^(n+1) * sum_t counts[t] z^t, which is the
// whole product when the counting function is a polynomial of degree <= n.
// Requires counts.size() == n+2; throws if a retained coefficient is not
// an integer.
IntPolynomial series_numerator(const std::vector<Int>& counts, long n);

} // namespace hslab

#endif
