#include <hslab/lattice.hpp>
#include <hslab/bijections.hpp>
#include <hslab/permstats.hpp>

#include <numeric>
#include <sstream>

namespace hslab {

namespace {

void require_perm(const std::vector<int>& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v - 1])
            throw std::invalid_argument("cell region: sigma is not a permutation");
        seen[v - 1] = true;
    }
}

// #{v in {0..box}^n : lo <= sum v < hi} by DP over the running sum.
Int window_count(int n, long box, long lo, long hi) {
    if (hi <= lo) return 0;
    const long smax = static_cast<long>(n) * box;
    std::vector<Int> ways(smax + 1, Int(0));
    ways[0] = 1;
    long reach = 0;
    for (int i = 0; i < n; ++i) {
        reach += box;
        std::vector<Int> next(smax + 1, Int(0));
        // prefix sums make each step O(smax)
        std::vector<Int> pref(smax + 2, Int(0));
        for (long s = 0; s <= smax; ++s) pref[s + 1] = pref[s] + ways[s];
        for (long s = 0; s <= reach && s <= smax; ++s) {
            long a = std::max(0L, s - box);
            next[s] = pref[s + 1] - pref[a];
        }
        ways = std::move(next);
    }
    Int total = 0;
    for (long s = std::max(0L, lo); s < hi && s <= smax; ++s) total += ways[s];
    return total;
}

// Sum window of the dilated slice: [kt-t, kt), closed at the top for the
// B slice with k = r*n (the corner with every coordinate at r stays in).
std::pair<long, long> slice_window(const SliceRegion& region, long t) {
    const long lo = region.k * t - t;
    long hi = region.k * t;
    if (region.family == RegionFamily::b_slice &&
        region.k == static_cast<long>(region.r) * region.n)
        hi += 1;
    return {lo, hi};
}

long box_top(const SliceRegion& region, long t) {
    switch (region.family) {
        case RegionFamily::a_slice:
        case RegionFamily::cube_halfopen: return static_cast<long>(region.r) * t - 1;
        case RegionFamily::b_slice:
        case RegionFamily::cube_closed: return static_cast<long>(region.r) * t;
        case RegionFamily::cell_closed: return t;
        case RegionFamily::cell_halfopen: return t - 1;
    }
    throw std::logic_error("box_top: unknown family");
}

std::vector<Int> counts_through(const SliceRegion& region, long tmax) {
    std::vector<Int> counts;
    counts.reserve(tmax);
    for (long t = 1; t <= tmax; ++t) counts.push_back(count_points(region, t));
    return counts;
}

RatPolynomial interpolated(const SliceRegion& region, const std::vector<Int>& counts) {
    const int n = region.n;
    std::vector<std::pair<Rat, Rat>> pts;
    for (long t = 1; t <= n + 1; ++t) pts.emplace_back(Rat(t), Rat(counts[t - 1]));
    RatPolynomial p = interpolate(pts);
    if (p.eval(Rat(n + 2)) != Rat(counts[n + 1]))
        throw std::logic_error("ehrhart_polynomial: interpolant fails at t = n+2 for " +
                               region.to_string());
    return p;
}

} // namespace

SliceRegion SliceRegion::a_slice(int n, int r, long k) {
    if (n < 1 || r < 1) throw std::invalid_argument("a_slice: need n >= 1, r >= 1");
    if (k < 1 || k > static_cast<long>(r) * n)
        throw std::invalid_argument("a_slice: k out of 1..r*n");
    return SliceRegion{RegionFamily::a_slice, n, r, k, {}};
}

SliceRegion SliceRegion::b_slice(int n, int r, long k) {
    if (n < 1 || r < 1) throw std::invalid_argument("b_slice: need n >= 1, r >= 1");
    if (k < 1 || k > static_cast<long>(r) * n)
        throw std::invalid_argument("b_slice: k out of 1..r*n");
    return SliceRegion{RegionFamily::b_slice, n, r, k, {}};
}

SliceRegion SliceRegion::cube_closed(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("cube_closed: need n >= 0, r >= 1");
    return SliceRegion{RegionFamily::cube_closed, n, r, 0, {}};
}

SliceRegion SliceRegion::cube_halfopen(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("cube_halfopen: need n >= 0, r >= 1");
    return SliceRegion{RegionFamily::cube_halfopen, n, r, 0, {}};
}

SliceRegion SliceRegion::cell_closed(std::vector<int> sigma) {
    require_perm(sigma);
    SliceRegion region{RegionFamily::cell_closed, static_cast<int>(sigma.size()), 1, 0, {}};
    region.sigma = std::move(sigma);
    return region;
}

SliceRegion SliceRegion::cell_halfopen(std::vector<int> sigma) {
    require_perm(sigma);
    SliceRegion region{RegionFamily::cell_halfopen, static_cast<int>(sigma.size()), 1, 0, {}};
    region.sigma = std::move(sigma);
    return region;
}

std::string SliceRegion::to_string() const {
    std::ostringstream out;
    switch (family) {
        case RegionFamily::a_slice: out << "A(n=" << n << ",r=" << r << ",k=" << k << ")"; break;
        case RegionFamily::b_slice: out << "B(n=" << n << ",r=" << r << ",k=" << k << ")"; break;
        case RegionFamily::cube_closed: out << "[0," << r << "]^" << n; break;
        case RegionFamily::cube_halfopen: out << "[0," << r << ")^" << n; break;
        case RegionFamily::cell_closed:
        case RegionFamily::cell_halfopen: {
            out << (family == RegionFamily::cell_closed ? "S(" : "T(");
            for (int v : sigma) out << v;
            out << ")";
            break;
        }
    }
    return out.str();
}

bool region_contains(const SliceRegion& region, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != region.n) return false;
    Rat sum = 0;
    for (const Rat& c : point) sum += c;
    switch (region.family) {
        case RegionFamily::a_slice: {
            for (const Rat& c : point)
                if (c < 0 || c >= region.r) return false;
            return Rat(region.k - 1) <= sum && sum < Rat(region.k);
        }
        case RegionFamily::b_slice: {
            for (const Rat& c : point)
                if (c < 0 || c > region.r) return false;
            if (sum < Rat(region.k - 1)) return false;
            if (region.k == static_cast<long>(region.r) * region.n)
                return sum <= Rat(region.k);
            return sum < Rat(region.k);
        }
        case RegionFamily::cube_closed: {
            for (const Rat& c : point)
                if (c < 0 || c > region.r) return false;
            return true;
        }
        case RegionFamily::cube_halfopen: {
            for (const Rat& c : point)
                if (c < 0 || c >= region.r) return false;
            return true;
        }
        case RegionFamily::cell_closed:
        case RegionFamily::cell_halfopen: {
            const Rat top = 1;
            for (const Rat& c : point) {
                if (c < 0) return false;
                if (region.family == RegionFamily::cell_closed ? c > top : c >= top)
                    return false;
            }
            return standardization(point) == region.sigma;
        }
    }
    throw std::logic_error("region_contains: unknown family");
}

Int count_points(const SliceRegion& region, long t) {
    if (t < 1) throw std::invalid_argument("count_points: need t >= 1");
    const int n = region.n;
    switch (region.family) {
        case RegionFamily::a_slice:
        case RegionFamily::b_slice: {
            auto [lo, hi] = slice_window(region, t);
            return window_count(n, box_top(region, t), lo, hi);
        }
        case RegionFamily::cube_closed:
            return int_pow(Int(static_cast<long>(region.r) * t + 1), n);
        case RegionFamily::cube_halfopen:
            return int_pow(Int(static_cast<long>(region.r) * t), n);
        case RegionFamily::cell_closed:
        case RegionFamily::cell_halfopen: {
            if (n == 0) return 1;
            const long box = box_top(region, t);
            if (box < 0) return 0;
            Int total = 0;
            std::vector<int> w(n, 0);
            while (true) {
                if (standardization(w) == region.sigma) total += 1;
                int i = n - 1;
                while (i >= 0 && w[i] == box) w[i--] = 0;
                if (i < 0) break;
                ++w[i];
            }
            return total;
        }
    }
    throw std::logic_error("count_points: unknown family");
}

Int count_points_naive(const SliceRegion& region, long t) {
    if (t < 1) throw std::invalid_argument("count_points_naive: need t >= 1");
    const int n = region.n;
    if (n == 0) return region_contains(region, {}) ? 1 : 0;
    // full closed bounding box of t*region, membership decides the rest
    const long box = (region.family == RegionFamily::cell_closed ||
                      region.family == RegionFamily::cell_halfopen)
                         ? t
                         : static_cast<long>(region.r) * t;
    Int total = 0;
    std::vector<long> w(n, 0);
    std::vector<Rat> point(n, Rat(0));
    while (true) {
        for (int i = 0; i < n; ++i) point[i] = make_rat(Int(w[i]), Int(t));
        if (region_contains(region, point)) total += 1;
        int i = n - 1;
        while (i >= 0 && w[i] == box) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return total;
}

RatPolynomial ehrhart_polynomial(const SliceRegion& region) {
    return interpolated(region, counts_through(region, region.n + 2));
}

IntPolynomial ehrhart_series(const SliceRegion& region) {
    const int n = region.n;
    std::vector<Int> counts = counts_through(region, n + 2);
    RatPolynomial p = interpolated(region, counts);
    Rat at0 = p.eval(Rat(0));
    if (at0.get_den() != 1)
        throw std::logic_error("ehrhart_series: non-integer value at t = 0 for " +
                               region.to_string());
    std::vector<Int> with0;
    with0.reserve(n + 2);
    with0.push_back(at0.get_num());
    for (long t = 1; t <= n + 1; ++t) with0.push_back(counts[t - 1]);
    IntPolynomial h = series_numerator(with0, n);
    if (region.family != RegionFamily::cell_closed &&
        region.family != RegionFamily::cell_halfopen) {
        for (const Int& c : h.coeffs())
            if (c < 0)
                throw std::logic_error("ehrhart_series: negative coefficient for " +
                                       region.to_string());
    }
    return h;
}

IntPolynomial A_polynomial(int n, int r, long k) {
    if (n < 0 || r < 1) throw std::invalid_argument("A_polynomial: need n >= 0, r >= 1");
    if (n == 0) return k == 0 ? IntPolynomial{1} : IntPolynomial();
    if (k < 1 || k > static_cast<long>(r) * n) return IntPolynomial();
    return ehrhart_series(SliceRegion::a_slice(n, r, k));
}

IntPolynomial B_polynomial(int n, int r, long k) {
    if (n < 0 || r < 1) throw std::invalid_argument("B_polynomial: need n >= 0, r >= 1");
    if (n == 0) return k == 0 ? IntPolynomial{1} : IntPolynomial();
    if (k < 1 || k > static_cast<long>(r) * n) return IntPolynomial();
    return ehrhart_series(SliceRegion::b_slice(n, r, k));
}

std::map<std::vector<int>, IntPolynomial> std_cell_series_all(int n, bool closed) {
    if (n < 1) throw std::invalid_argument("std_cell_series_all: need n >= 1");
    // tally std(v) over the whole box once per dilation
    std::map<std::vector<int>, std::vector<Int>> counts;
    {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 1);
        do counts[sigma] = std::vector<Int>(n + 2, Int(0));
        while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    for (long t = 1; t <= n + 2; ++t) {
        const long box = closed ? t : t - 1;
        if (box < 0) continue;
        std::vector<int> w(n, 0);
        while (true) {
            counts[standardization(w)][t - 1] += 1;
            int i = n - 1;
            while (i >= 0 && w[i] == box) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
    }
    std::map<std::vector<int>, IntPolynomial> out;
    for (auto& [sigma, cnt] : counts) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (long t = 1; t <= n + 1; ++t) pts.emplace_back(Rat(t), Rat(cnt[t - 1]));
        RatPolynomial p = interpolate(pts);
        if (p.eval(Rat(n + 2)) != Rat(cnt[n + 1]))
            throw std::logic_error("std_cell_series_all: interpolant fails at t = n+2");
        Rat at0 = p.eval(Rat(0));
        if (at0.get_den() != 1)
            throw std::logic_error("std_cell_series_all: non-integer value at t = 0");
        std::vector<Int> with0;
        with0.push_back(at0.get_num());
        for (long t = 1; t <= n + 1; ++t) with0.push_back(cnt[t - 1]);
        out[sigma] = series_numerator(with0, n);
    }
    return out;
}

IntPolynomial eulerian_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("eulerian_polynomial: need n >= 0");
    if (n == 0) return IntPolynomial{1};
    std::vector<Int> row = flag_eulerian_row(n, 1);
    IntPolynomial p;
    for (size_t k = 1; k < row.size(); ++k) p.add_to_coeff(k - 1, row[k]);
    return p;
}

} // namespace hslab
