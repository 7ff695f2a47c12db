#include <hslab/closedform.hpp>

namespace hslab {

namespace {

// Window and box of the dilated slice, kept separate from the lattice
// module on purpose: this file is the independent route.
struct Window {
    long box, lo, hi;
};

Window slice_window_of(const SliceRegion& region, long t) {
    if (region.family != RegionFamily::a_slice && region.family != RegionFamily::b_slice)
        throw std::invalid_argument("constant-term oracle: slice families only");
    Window w{};
    w.lo = region.k * t - t;
    w.hi = region.k * t;
    if (region.family == RegionFamily::a_slice) {
        w.box = static_cast<long>(region.r) * t - 1;
    } else {
        w.box = static_cast<long>(region.r) * t;
        if (region.k == static_cast<long>(region.r) * region.n) w.hi += 1;
    }
    return w;
}

} // namespace

RatPolynomial poly_binomial(long a, long b, int n) {
    if (n < 0) throw std::invalid_argument("poly_binomial: need n >= 0");
    std::vector<Rat> acc{Rat(1)};
    for (int i = 0; i < n; ++i) {
        // multiply by (a*t + b - i)
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (size_t d = 0; d < acc.size(); ++d) {
            next[d + 1] += acc[d] * a;
            next[d] += acc[d] * (Rat(b) - i);
        }
        acc = std::move(next);
    }
    Rat inv_fact = make_rat(Int(1), factorial(n));
    for (auto& c : acc) c *= inv_fact;
    return RatPolynomial(std::move(acc));
}

RatPolynomial ehrhart_A_closed(int n, int r, long k) {
    if (n < 1 || r < 1) throw std::invalid_argument("ehrhart_A_closed: need n >= 1, r >= 1");
    if (k < 1 || k > static_cast<long>(r) * n)
        throw std::invalid_argument("ehrhart_A_closed: k out of 1..r*n");
    RatPolynomial total;
    for (long j = 0; j <= floor_div(k - 1, r); ++j) {
        Rat sign = (j % 2 == 0) ? Rat(-1) : Rat(1);
        total = total + poly_binomial(k - 1 - r * j, n - 1, n) * (sign * Rat(binomial(n, j)));
    }
    for (long j = 0; j <= floor_div(k, r); ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        total = total + poly_binomial(k - r * j, n - 1, n) * (sign * Rat(binomial(n, j)));
    }
    return total;
}

RatPolynomial ehrhart_B_closed(int n, int r, long k) {
    if (n < 1 || r < 1) throw std::invalid_argument("ehrhart_B_closed: need n >= 1, r >= 1");
    if (k < 1 || k > static_cast<long>(r) * n)
        throw std::invalid_argument("ehrhart_B_closed: k out of 1..r*n");
    RatPolynomial total;
    for (long j = 0; j <= floor_div(k - 1, r); ++j) {
        Rat sign = (j % 2 == 0) ? Rat(-1) : Rat(1);
        total = total + poly_binomial(k - 1 - r * j, n - 1 - j, n) * (sign * Rat(binomial(n, j)));
    }
    for (long j = 0; j <= floor_div(k, r); ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        total = total + poly_binomial(k - r * j, n - 1 - j, n) * (sign * Rat(binomial(n, j)));
    }
    return total;
}

Int flag_eulerian_closed(int n, int r, long k) {
    if (n < 1 || r < 1)
        throw std::invalid_argument("flag_eulerian_closed: need n >= 1, r >= 1");
    Int total = 0;
    for (long j = 0; j <= floor_div(k - 1, r); ++j) {
        Int term = binomial(n, j) * int_pow(Int(k - r * j - 1), n);
        if (j % 2 == 0) total -= term; else total += term;
    }
    for (long j = 0; j <= floor_div(k, r); ++j) {
        Int term = binomial(n, j) * int_pow(Int(k - r * j), n);
        if (j % 2 == 0) total += term; else total -= term;
    }
    return total;
}

Int eulerian_closed(int n, long k) {
    if (n < 1) throw std::invalid_argument("eulerian_closed: need n >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("eulerian_closed: k out of 1..n");
    Int total = 0;
    for (long j = 0; j <= k - 1; ++j) {
        Int term = binomial(n + 1, j) * int_pow(Int(k - j), n);
        if (j % 2 == 0) total += term; else total -= term;
    }
    return total;
}

Int ct_window_qpoly(int n, long box, long lo, long hi) {
    if (n < 0 || box < 0) throw std::invalid_argument("ct_window_qpoly: bad arguments");
    // ([box+1]_q)^n, dense in q
    std::vector<Int> poly{Int(1)};
    for (int i = 0; i < n; ++i) {
        std::vector<Int> next(poly.size() + box, Int(0));
        for (size_t d = 0; d < poly.size(); ++d)
            for (long e = 0; e <= box; ++e) next[d + e] += poly[d];
        poly = std::move(next);
    }
    Int total = 0;
    for (long s = std::max(0L, lo); s < hi && s < static_cast<long>(poly.size()); ++s)
        total += poly[s];
    return total;
}

Int ct_window_binomial(int n, long box, long lo, long hi) {
    if (n < 0 || box < 0) throw std::invalid_argument("ct_window_binomial: bad arguments");
    auto cumulative = [&](long s) {
        // #{v in {0..box}^n : sum v <= s}, binom(m, n) = 0 when m < 0
        Int f = 0;
        for (long j = 0; j <= n; ++j) {
            Int term = binomial(n, j) * binomial(s - j * (box + 1) + n, n);
            if (j % 2 == 0) f += term; else f -= term;
        }
        return f;
    };
    return cumulative(hi - 1) - cumulative(lo - 1);
}

Int ct_count_points_qpoly(const SliceRegion& region, long t) {
    if (t < 1) throw std::invalid_argument("ct_count_points_qpoly: need t >= 1");
    Window w = slice_window_of(region, t);
    return ct_window_qpoly(region.n, w.box, w.lo, w.hi);
}

Int ct_count_points_binomial(const SliceRegion& region, long t) {
    if (t < 1) throw std::invalid_argument("ct_count_points_binomial: need t >= 1");
    Window w = slice_window_of(region, t);
    return ct_window_binomial(region.n, w.box, w.lo, w.hi);
}

} // namespace hslab
