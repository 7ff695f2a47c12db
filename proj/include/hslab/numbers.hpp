#ifndef HSLAB_NUMBERS_HPP
#define HSLAB_NUMBERS_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hslab {

// Exact arithmetic only; no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Combinatorial binomial: 0 whenever k < 0, k > n, or n < 0.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

inline Int int_pow(const Int& base, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return p;
}

// floor(q) as an Int, exact for any sign.
inline Int rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

// q mod m reduced into [0, m) for integer m > 0.
inline Rat rat_mod(const Rat& q, long m) {
    if (m <= 0) throw std::invalid_argument("rat_mod: modulus must be positive");
    Rat r = q - Rat(rat_floor(q / m)) * m;
    return r;
}

// Floored integer division (round toward -infinity), exact for any sign.
inline long floor_div(long a, long b) {
    long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return v.get_si();
}

} // namespace hslab

#endif
