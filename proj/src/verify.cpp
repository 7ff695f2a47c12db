#include <hslab/verify.hpp>

#include <hslab/bijections.hpp>
#include <hslab/closedform.hpp>
#include <hslab/lattice.hpp>
#include <hslab/permstats.hpp>
#include <hslab/series.hpp>
#include <hslab/tableaux.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hslab {

namespace {

using Witness = std::optional<std::string>;

int cap(int hard, int bound) { return std::min(hard, bound); }

std::string poly_str(const IntPolynomial& p) { return p.to_string("z"); }

// one enumeration pass per (n, r): the three closed-slice statistic
// polynomials, keyed by slice level k
struct SliceStatPolys {
    std::map<long, IntPolynomial> fexc_ceil_star; // k = rn-fexc, z^ceil(fdes*/r)
    std::map<long, IntPolynomial> fexc_ceil;      // k = rn-fexc, z^ceil(fdes/r)
    std::map<long, IntPolynomial> cdes_cover_cef; // k = rn-cdes, z^(cover+cef)
};

SliceStatPolys slice_stat_polys(int n, int r) {
    SliceStatPolys out;
    const long rn = static_cast<long>(r) * n;
    for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
        out.fexc_ceil_star[rn - fexc(p)].add_to_coeff(ceil_div(fdes_star(p), r), Int(1));
        out.fexc_ceil[rn - fexc(p)].add_to_coeff(ceil_div(fdes(p), r), Int(1));
        out.cdes_cover_cef[rn - cdes(p)].add_to_coeff(cover(p) + cef(p), Int(1));
    });
    return out;
}

IntPolynomial poly_by_k(const std::map<long, IntPolynomial>& m, long k) {
    auto it = m.find(k);
    return it == m.end() ? IntPolynomial() : it->second;
}

Witness fourway_at(int n, int r) {
    const auto sp = slice_stat_polys(n, r);
    const long rn = static_cast<long>(r) * n;
    for (const auto* m : {&sp.fexc_ceil_star, &sp.fexc_ceil, &sp.cdes_cover_cef})
        for (const auto& [k, p] : *m)
            if (k < 1 || k > rn) {
                std::ostringstream os;
                os << "n=" << n << " r=" << r << ": statistic level k=" << k
                   << " outside 1.." << rn;
                return os.str();
            }
    for (long k = 1; k <= rn; ++k) {
        const IntPolynomial b = B_polynomial(n, r, k);
        const struct {
            const char* name;
            IntPolynomial p;
        } sides[] = {
            {"fexc/ceil-fdes*", poly_by_k(sp.fexc_ceil_star, k)},
            {"fexc/ceil-fdes", poly_by_k(sp.fexc_ceil, k)},
            {"cdes/cover+cef", poly_by_k(sp.cdes_cover_cef, k)},
        };
        for (const auto& s : sides)
            if (!(b == s.p)) {
                std::ostringstream os;
                os << "n=" << n << " r=" << r << " k=" << k << ": lattice "
                   << poly_str(b) << " vs " << s.name << " " << poly_str(s.p);
                return os.str();
            }
    }
    return std::nullopt;
}

using DistMap = std::map<long, Int>;
using PairMap = std::map<std::pair<long, long>, Int>;

Witness compare_pair_maps(int n, int r, const char* what, const PairMap& lhs,
                          const PairMap& rhs) {
    if (lhs == rhs) return std::nullopt;
    std::set<std::pair<long, long>> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const auto& key : keys) {
        auto l = lhs.find(key), h = rhs.find(key);
        const Int lv = l == lhs.end() ? Int(0) : l->second;
        const Int rv = h == rhs.end() ? Int(0) : h->second;
        if (lv != rv) {
            std::ostringstream os;
            os << what << " n=" << n << " r=" << r << " cell (" << key.first
               << "," << key.second << "): " << lv.get_str() << " vs "
               << rv.get_str();
            return os.str();
        }
    }
    return std::nullopt;
}

struct Entry {
    const char* id;
    const char* suite;
    std::string (*params)(int, int);
    Witness (*run)(int, int);
};

const Entry kRegistry[] = {
    // ---- permstats ----
    {"eulerian-baseline", "permstats",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n);
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         const std::map<int, IntPolynomial> frozen = {
             {2, IntPolynomial{1, 1}},
             {3, IntPolynomial{1, 4, 1}},
             {4, IntPolynomial{1, 11, 11, 1}},
         };
         for (const auto& [n, want] : frozen) {
             if (n > max_n) continue;
             const IntPolynomial got = eulerian_polynomial(n);
             if (!(got == want)) {
                 std::ostringstream os;
                 os << "n=" << n << ": " << poly_str(got) << " vs " << poly_str(want);
                 return os.str();
             }
         }
         return std::nullopt;
     }},
    {"flag-row-mass", "permstats",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (int n = 0; n <= cap(5, max_n); ++n) {
                 const auto row = flag_eulerian_row(n, r);
                 Int total(0);
                 for (const Int& v : row) total += v;
                 if (total != colored_count(n, r)) {
                     std::ostringstream os;
                     os << "n=" << n << " r=" << r << ": row sums to "
                        << total.get_str() << ", expected "
                        << colored_count(n, r).get_str();
                     return os.str();
                 }
                 const Int want0 = n == 0 ? 1 : 0;
                 if (row[0] != want0) {
                     std::ostringstream os;
                     os << "n=" << n << " r=" << r << ": k=0 entry "
                        << row[0].get_str();
                     return os.str();
                 }
             }
         return std::nullopt;
     }},
    {"fdes-fdes-star-marginal", "permstats",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (int n = 0; n <= cap(4, max_n); ++n) {
                 DistMap a, b;
                 for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                     a[statistic_value(Statistic::fdes, p)] += 1;
                     b[statistic_value(Statistic::fdes_star, p)] += 1;
                 });
                 if (a != b) {
                     for (const auto& [k, v] : a)
                         if (b[k] != v) {
                             std::ostringstream os;
                             os << "n=" << n << " r=" << r << " value " << k
                                << ": " << v.get_str() << " vs "
                                << b[k].get_str();
                             return os.str();
                         }
                 }
             }
         return std::nullopt;
     }},
    {"negative-fexc-pair-witness", "permstats",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         if (cap(4, max_n) < 2 || cap(3, max_r) < 2)
             os << " (bounds below the first split; vacuously true)";
         else
             os << " (expects a joint fdes/fdes* split over fexc)";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nb = cap(4, max_n), rb = cap(3, max_r);
         if (nb < 2 || rb < 2) return std::nullopt;
         for (int n = 0; n <= nb; ++n)
             for (int r = 1; r <= rb; ++r) {
                 const auto lhs =
                     joint_distribution(n, r, Statistic::fexc, Statistic::fdes);
                 const auto rhs =
                     joint_distribution(n, r, Statistic::fexc, Statistic::fdes_star);
                 if (lhs != rhs) return std::nullopt; // the split exists
             }
         std::ostringstream os;
         os << "no (n,r) with joint (fexc,fdes) != (fexc,fdes*) found for n<="
            << nb << " r<=" << rb;
         return os.str();
     }},
    {"fexc-ceil-vs-cdes-cover", "permstats",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (int n = 0; n <= cap(4, max_n); ++n) {
                 PairMap lhs, rhs;
                 for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                     lhs[{statistic_value(Statistic::fexc, p),
                          statistic_value(Statistic::ceil_fdes_r, p)}] += 1;
                     rhs[{statistic_value(Statistic::cdes, p),
                          statistic_value(Statistic::cover, p) +
                              statistic_value(Statistic::cef, p)}] += 1;
                 });
                 if (auto w = compare_pair_maps(n, r, "(level, exponent)", lhs, rhs))
                     return w;
             }
         return std::nullopt;
     }},

    // ---- bijections ----
    {"cstd-floor", "bijections",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(3, max_n) << " r<=" << cap(3, max_r) << " t<=3";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         Witness w;
         for (int n = 1; n <= cap(3, max_n) && !w; ++n)
             for (int r = 1; r <= cap(3, max_r) && !w; ++r)
                 for (long t = 1; t <= 3 && !w; ++t)
                     for_each_grid_point(n, r, t, [&](const GridPoint& v) {
                         if (w) return;
                         const ColoredPermutation p = cstd(v);
                         const Int lhs = rat_floor(fdes_point(v));
                         if (lhs != Int(fdes(p))) {
                             std::ostringstream os;
                             os << v.to_string() << ": floor(fdes) "
                                << lhs.get_str() << " vs fdes(cstd) " << fdes(p);
                             w = os.str();
                         }
                     });
         return w;
     }},
    {"phi-roundtrip", "bijections",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(3, max_n) << " r<=" << cap(3, max_r) << " t<=3";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         Witness w;
         for (int n = 1; n <= cap(3, max_n) && !w; ++n)
             for (int r = 1; r <= cap(3, max_r) && !w; ++r)
                 for (long t = 1; t <= 3 && !w; ++t)
                     for_each_grid_point(n, r, t, [&](const GridPoint& a) {
                         if (w) return;
                         if (!(phi_inverse(phi(a)) == a)) {
                             w = "phi_inverse(phi(a)) != a at a=" + a.to_string();
                             return;
                         }
                         if (!(phi(phi_inverse(a)) == a))
                             w = "phi(phi_inverse(b)) != b at b=" + a.to_string();
                     });
         return w;
     }},
    {"phi-sum-transport", "bijections",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(3, max_n) << " r<=" << cap(3, max_r) << " t<=3";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         Witness w;
         for (int n = 1; n <= cap(3, max_n) && !w; ++n)
             for (int r = 1; r <= cap(3, max_r) && !w; ++r)
                 for (long t = 1; t <= 3 && !w; ++t)
                     for_each_grid_point(n, r, t, [&](const GridPoint& a) {
                         if (w) return;
                         const GridPoint b = phi(a);
                         Rat total(0);
                         for (const Rat& c : b.coords) total += c;
                         if (total != fdes_point(a)) {
                             std::ostringstream os;
                             os << a.to_string() << ": sum of phi coords "
                                << total.get_str() << " vs fdes "
                                << fdes_point(a).get_str();
                             w = os.str();
                         }
                     });
         return w;
     }},
    {"alpha-transport", "bijections",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         Witness w;
         for (int n = 1; n <= cap(5, max_n) && !w; ++n)
             for (int r = 1; r <= cap(3, max_r) && !w; ++r) {
                 std::map<std::vector<int>, std::set<std::vector<int>>> seen,
                     seen_star;
                 for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                     if (w) return;
                     const ColoredPermutation q = alpha(p);
                     if (q.sigma != p.sigma) {
                         w = "alpha moved sigma at " + p.to_string();
                         return;
                     }
                     if (fdes(q) != cdes(p)) {
                         std::ostringstream os;
                         os << "alpha at " << p.to_string() << ": fdes "
                            << fdes(q) << " vs cdes " << cdes(p);
                         w = os.str();
                         return;
                     }
                     seen[p.sigma].insert(q.colors);
                     const ColoredPermutation s = alpha_star(p);
                     if (s.sigma != p.sigma) {
                         w = "alpha_star moved sigma at " + p.to_string();
                         return;
                     }
                     if (fdes_star(s) != cdes(p)) {
                         std::ostringstream os;
                         os << "alpha_star at " << p.to_string() << ": fdes* "
                            << fdes_star(s) << " vs cdes " << cdes(p);
                         w = os.str();
                         return;
                     }
                     seen_star[p.sigma].insert(s.colors);
                 });
                 if (w) break;
                 const size_t all = [&] {
                     size_t v = 1;
                     for (int i = 0; i < n; ++i) v *= r;
                     return v;
                 }();
                 for (const auto& [sigma, outs] : seen)
                     if (outs.size() != all) {
                         std::ostringstream os;
                         os << "alpha not injective on colors: n=" << n
                            << " r=" << r << ", " << outs.size() << " of "
                            << all << " images";
                         w = os.str();
                         break;
                     }
                 if (w) break;
                 for (const auto& [sigma, outs] : seen_star)
                     if (outs.size() != all) {
                         std::ostringstream os;
                         os << "alpha_star not injective on colors: n=" << n
                            << " r=" << r << ", " << outs.size() << " of "
                            << all << " images";
                         w = os.str();
                         break;
                     }
             }
         return w;
     }},
    {"block-involution", "bijections",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r)
            << " plus the fixed n=8 r=3 example";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const ColoredPermutation in({8, 2, 7, 1, 4, 3, 5, 6},
                                     {1, 0, 2, 2, 1, 0, 1, 1}, 3);
         const ColoredPermutation want({8, 2, 4, 7, 1, 3, 5, 6},
                                       {1, 0, 1, 2, 2, 0, 1, 1}, 3);
         const ColoredPermutation got = block_involution(in);
         if (!(got == want))
             return "fixed example maps to " + got.to_string() + ", expected " +
                    want.to_string();
         Witness w;
         for (int n = 1; n <= cap(5, max_n) && !w; ++n)
             for (int r = 1; r <= cap(3, max_r) && !w; ++r)
                 for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                     if (w) return;
                     const ColoredPermutation q = block_involution(p);
                     if (!(block_involution(q) == p)) {
                         w = "not an involution at " + p.to_string();
                         return;
                     }
                     if (fexc(q) != fexc(p)) {
                         w = "fexc changed at " + p.to_string();
                         return;
                     }
                     if (ceil_div(fdes(p), r) != ceil_div(fdes_star(q), r)) {
                         std::ostringstream os;
                         os << "ceil swap failed at " << p.to_string() << ": "
                            << ceil_div(fdes(p), r) << " vs "
                            << ceil_div(fdes_star(q), r);
                         w = os.str();
                     }
                 });
         return w;
     }},

    // ---- lattice ----
    {"cell-series", "lattice",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << ", closed and half-open";
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(5, max_n); ++n)
             for (bool closed : {true, false}) {
                 const auto all = std_cell_series_all(n, closed);
                 if (Int(all.size()) != factorial(n)) {
                     std::ostringstream os;
                     os << "n=" << n << ": " << all.size() << " cells";
                     return os.str();
                 }
                 for (const auto& [sigma, series] : all) {
                     std::vector<int> inv(n);
                     for (int i = 0; i < n; ++i) inv[sigma[i] - 1] = i + 1;
                     const long d = des_perm(inv) + (closed ? 0 : 1);
                     if (!(series == IntPolynomial::monomial(Int(1), d))) {
                         std::ostringstream os;
                         os << (closed ? "closed" : "half-open") << " cell of "
                            << ColoredPermutation(sigma, std::vector<int>(n, 0), 1)
                                   .to_string()
                            << ": " << poly_str(series) << " vs z^" << d;
                         return os.str();
                     }
                 }
             }
         return std::nullopt;
     }},
    {"cell-count-binomial", "lattice",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " t<=4";
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(4, max_n); ++n)
             for (const auto& p : all_colored_permutations(n, 1)) {
                 std::vector<int> inv(n);
                 for (int i = 0; i < n; ++i) inv[p.sigma[i] - 1] = i + 1;
                 const long d = des_perm(inv);
                 for (long t = 1; t <= 4; ++t) {
                     const Int got =
                         count_points(SliceRegion::cell_closed(p.sigma), t);
                     const Int want = binomial(n + t - d, n);
                     if (got != want) {
                         std::ostringstream os;
                         os << "sigma=" << p.to_string() << " t=" << t << ": "
                            << got.get_str() << " vs " << want.get_str();
                         return os.str();
                     }
                 }
             }
         return std::nullopt;
     }},
    {"cell-decomposition", "lattice",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " t<=n+2";
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(4, max_n); ++n)
             for (long t = 1; t <= n + 2; ++t) {
                 Int closed(0), halfopen(0);
                 for (const auto& p : all_colored_permutations(n, 1)) {
                     closed += count_points(SliceRegion::cell_closed(p.sigma), t);
                     halfopen +=
                         count_points(SliceRegion::cell_halfopen(p.sigma), t);
                 }
                 if (closed != int_pow(Int(t + 1), n)) {
                     std::ostringstream os;
                     os << "n=" << n << " t=" << t << ": closed cells sum to "
                        << closed.get_str();
                     return os.str();
                 }
                 if (halfopen != int_pow(Int(t), n)) {
                     std::ostringstream os;
                     os << "n=" << n << " t=" << t << ": half-open cells sum to "
                        << halfopen.get_str();
                     return os.str();
                 }
             }
         return std::nullopt;
     }},
    {"cube-eulerian", "lattice",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(6, max_n);
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 0; n <= cap(6, max_n); ++n) {
             const IntPolynomial a = eulerian_polynomial(n);
             const IntPolynomial closed =
                 ehrhart_series(SliceRegion::cube_closed(n, 1));
             if (!(closed == a)) {
                 std::ostringstream os;
                 os << "n=" << n << " closed cube: " << poly_str(closed)
                    << " vs " << poly_str(a);
                 return os.str();
             }
             if (n >= 1) {
                 const IntPolynomial half =
                     ehrhart_series(SliceRegion::cube_halfopen(n, 1));
                 if (!(half == a.shifted(1))) {
                     std::ostringstream os;
                     os << "n=" << n << " half-open cube: " << poly_str(half)
                        << " vs " << poly_str(a.shifted(1));
                     return os.str();
                 }
             }
         }
         return std::nullopt;
     }},
    {"slice-partition", "lattice",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r) << " t<=3";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(4, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r)
                 for (long t = 1; t <= 3; ++t) {
                     Int a(0), b(0);
                     for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
                         a += count_points(SliceRegion::a_slice(n, r, k), t);
                         b += count_points(SliceRegion::b_slice(n, r, k), t);
                     }
                     if (a != int_pow(Int(r * t), n)) {
                         std::ostringstream os;
                         os << "n=" << n << " r=" << r << " t=" << t
                            << ": open slices sum to " << a.get_str();
                         return os.str();
                     }
                     if (b != int_pow(Int(r * t + 1), n)) {
                         std::ostringstream os;
                         os << "n=" << n << " r=" << r << " t=" << t
                            << ": closed slices sum to " << b.get_str();
                         return os.str();
                     }
                 }
         return std::nullopt;
     }},
    {"interpolation-extra-point", "lattice",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(2, max_r) << " t<=n+3";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(4, max_n); ++n)
             for (int r = 1; r <= cap(2, max_r); ++r)
                 for (long k = 1; k <= static_cast<long>(r) * n; ++k)
                     for (bool open_side : {true, false}) {
                         const SliceRegion region =
                             open_side ? SliceRegion::a_slice(n, r, k)
                                       : SliceRegion::b_slice(n, r, k);
                         const RatPolynomial p = ehrhart_polynomial(region);
                         for (long t = 1; t <= n + 3; ++t)
                             if (p.eval(Rat(t)) != Rat(count_points(region, t))) {
                                 std::ostringstream os;
                                 os << region.to_string() << " t=" << t
                                    << ": polynomial disagrees with count";
                                 return os.str();
                             }
                     }
         return std::nullopt;
     }},
    {"count-oracle-naive", "lattice",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(3, max_n) << " r<=" << cap(3, max_r) << " t<=3";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(3, max_n); ++n) {
             std::vector<SliceRegion> regions;
             for (int r = 1; r <= cap(3, max_r); ++r) {
                 for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
                     regions.push_back(SliceRegion::a_slice(n, r, k));
                     regions.push_back(SliceRegion::b_slice(n, r, k));
                 }
                 regions.push_back(SliceRegion::cube_closed(n, r));
                 regions.push_back(SliceRegion::cube_halfopen(n, r));
             }
             for (const auto& p : all_colored_permutations(n, 1)) {
                 regions.push_back(SliceRegion::cell_closed(p.sigma));
                 regions.push_back(SliceRegion::cell_halfopen(p.sigma));
             }
             for (const auto& region : regions)
                 for (long t = 1; t <= 3; ++t) {
                     const Int fast = count_points(region, t);
                     const Int slow = count_points_naive(region, t);
                     if (fast != slow) {
                         std::ostringstream os;
                         os << region.to_string() << " t=" << t << ": "
                            << fast.get_str() << " vs naive " << slow.get_str();
                         return os.str();
                     }
                 }
         }
         return std::nullopt;
     }},
    {"slice-inclusion-exclusion", "lattice",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const IntPolynomial one_minus_z{1, -1};
         for (int n = 0; n <= cap(4, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r)
                 for (long k = 0; k <= static_cast<long>(r) * n; ++k) {
                     IntPolynomial rhs, pw{1};
                     for (int j = 0; j <= n; ++j) {
                         rhs = rhs +
                               pw * A_polynomial(n - j, r, k - static_cast<long>(r) * j) *
                                   binomial(n, j);
                         pw = pw * one_minus_z;
                     }
                     const IntPolynomial lhs = B_polynomial(n, r, k);
                     if (!(lhs == rhs)) {
                         std::ostringstream os;
                         os << "n=" << n << " r=" << r << " k=" << k << ": "
                            << poly_str(lhs) << " vs " << poly_str(rhs);
                         return os.str();
                     }
                 }
         return std::nullopt;
     }},
    {"open-slice-flag-descents", "lattice",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(5, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r) {
                 std::map<long, IntPolynomial> by_k;
                 for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                     by_k[fdes(p) + 1].add_to_coeff(
                         des_perm(p.inverse().sigma) + 1, Int(1));
                 });
                 for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
                     const IntPolynomial lhs = A_polynomial(n, r, k);
                     const IntPolynomial rhs = poly_by_k(by_k, k);
                     if (!(lhs == rhs)) {
                         std::ostringstream os;
                         os << "n=" << n << " r=" << r << " k=" << k << ": "
                            << poly_str(lhs) << " vs " << poly_str(rhs);
                         return os.str();
                     }
                 }
             }
         return std::nullopt;
     }},
    {"closed-slice-fourway-r1", "lattice",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r=1";
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(5, max_n); ++n)
             if (auto w = fourway_at(n, 1)) return w;
         return std::nullopt;
     }},
    {"closed-slice-fourway-colored", "lattice",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " 2<=r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 2; r <= cap(3, max_r); ++r)
             for (int n = 1; n <= cap(4, max_n); ++n)
                 if (auto w = fourway_at(n, r)) return w;
         return std::nullopt;
     }},

    // ---- closedform ----
    {"slice-closed-forms", "closedform",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(4, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r)
                 for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
                     const RatPolynomial ia =
                         ehrhart_polynomial(SliceRegion::a_slice(n, r, k));
                     const RatPolynomial ca = ehrhart_A_closed(n, r, k);
                     if (!(ia == ca)) {
                         std::ostringstream os;
                         os << "open slice n=" << n << " r=" << r << " k=" << k
                            << ": " << ia.to_string() << " vs " << ca.to_string();
                         return os.str();
                     }
                     const RatPolynomial ib =
                         ehrhart_polynomial(SliceRegion::b_slice(n, r, k));
                     const RatPolynomial cb = ehrhart_B_closed(n, r, k);
                     if (!(ib == cb)) {
                         std::ostringstream os;
                         os << "closed slice n=" << n << " r=" << r << " k=" << k
                            << ": " << ib.to_string() << " vs " << cb.to_string();
                         return os.str();
                     }
                 }
         return std::nullopt;
     }},
    {"closed-form-cube-sum", "closedform",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(4, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r) {
                 RatPolynomial total;
                 for (long k = 1; k <= static_cast<long>(r) * n; ++k)
                     total = total + ehrhart_B_closed(n, r, k);
                 std::vector<Rat> want(n + 1);
                 for (int j = 0; j <= n; ++j)
                     want[j] = Rat(binomial(n, j) * int_pow(Int(r), j));
                 if (!(total == RatPolynomial(want))) {
                     std::ostringstream os;
                     os << "n=" << n << " r=" << r << ": slice sum "
                        << total.to_string() << " vs (rt+1)^n";
                     return os.str();
                 }
             }
         return std::nullopt;
     }},
    {"flag-count-closed-form", "closedform",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(5, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r)
                 for (long k = -1; k <= static_cast<long>(r) * n + 2; ++k) {
                     const Int got = flag_eulerian_closed(n, r, k);
                     const Int want = flag_eulerian(n, r, k);
                     if (got != want) {
                         std::ostringstream os;
                         os << "n=" << n << " r=" << r << " k=" << k << ": "
                            << got.get_str() << " vs " << want.get_str();
                         return os.str();
                     }
                 }
         return std::nullopt;
     }},
    {"descent-count-closed-form", "closedform",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(6, max_n);
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(6, max_n); ++n) {
             const IntPolynomial a = eulerian_polynomial(n);
             for (long k = 1; k <= n; ++k)
                 if (eulerian_closed(n, k) != a.coeff(k - 1)) {
                     std::ostringstream os;
                     os << "n=" << n << " k=" << k << ": "
                        << eulerian_closed(n, k).get_str() << " vs "
                        << a.coeff(k - 1).get_str();
                     return os.str();
                 }
         }
         return std::nullopt;
     }},
    {"ct-window-oracle", "closedform",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(3, max_n) << " r<=" << cap(3, max_r) << " t<=5";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 1; n <= cap(3, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r)
                 for (long k = 1; k <= static_cast<long>(r) * n; ++k)
                     for (bool open_side : {true, false}) {
                         const SliceRegion region =
                             open_side ? SliceRegion::a_slice(n, r, k)
                                       : SliceRegion::b_slice(n, r, k);
                         for (long t = 1; t <= 5; ++t) {
                             const Int direct = count_points(region, t);
                             const Int q = ct_count_points_qpoly(region, t);
                             const Int alt = ct_count_points_binomial(region, t);
                             if (q != direct || alt != direct) {
                                 std::ostringstream os;
                                 os << region.to_string() << " t=" << t
                                    << ": dp " << direct.get_str() << ", qpoly "
                                    << q.get_str() << ", binomial "
                                    << alt.get_str();
                                 return os.str();
                             }
                         }
                     }
         return std::nullopt;
     }},

    // ---- series ----
    {"series-b-from-a", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "Nx=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nx = cap(4, max_n);
         for (int r = 1; r <= cap(3, max_r); ++r) {
             if (auto w = verify_exp_relation(build_B(r, nx), build_A(r, nx), r)) {
                 std::ostringstream os;
                 os << "r=" << r << " " << *w;
                 return os.str();
             }
         }
         return std::nullopt;
     }},
    {"series-c-from-a", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "Nx=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nx = cap(4, max_n);
         for (int r = 1; r <= cap(3, max_r); ++r) {
             if (auto w = verify_exp_relation(build_C(r, nx), build_A(r, nx), r)) {
                 std::ostringstream os;
                 os << "r=" << r << " " << *w;
                 return os.str();
             }
         }
         return std::nullopt;
     }},
    {"series-b-equals-c", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "Nx=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nx = cap(5, max_n);
         for (int r = 1; r <= cap(3, max_r); ++r)
             if (auto diff = first_mismatch(build_B(r, nx), build_C(r, nx))) {
                 std::ostringstream os;
                 os << "r=" << r << " " << diff->to_string();
                 return os.str();
             }
         return std::nullopt;
     }},
    {"series-b-cube-total", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(4, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int n = 0; n <= cap(4, max_n); ++n)
             for (int r = 1; r <= cap(3, max_r); ++r) {
                 IntPolynomial total;
                 for (long k = 0; k <= static_cast<long>(r) * n; ++k)
                     total = total + B_polynomial(n, r, k);
                 const IntPolynomial cube =
                     ehrhart_series(SliceRegion::cube_closed(n, r));
                 if (!(total == cube)) {
                     std::ostringstream os;
                     os << "n=" << n << " r=" << r << ": " << poly_str(total)
                        << " vs cube " << poly_str(cube);
                     return os.str();
                 }
             }
         return std::nullopt;
     }},
    {"foata-han", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "Nx=" << cap(3, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nx = cap(3, max_n);
         for (int r = 1; r <= cap(3, max_r); ++r)
             if (auto w = verify_foata_han(r, nx, r * nx + 4)) {
                 std::ostringstream os;
                 os << "r=" << r << " " << *w;
                 return os.str();
             }
         return std::nullopt;
     }},
    {"ogf-a", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "Nx=" << cap(3, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nx = cap(3, max_n);
         for (int r = 1; r <= cap(3, max_r); ++r)
             if (auto w = verify_ogf(OgfSide::A, r, nx, nx + 4)) {
                 std::ostringstream os;
                 os << "r=" << r << " " << *w;
                 return os.str();
             }
         return std::nullopt;
     }},
    {"ogf-c", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "Nx=" << cap(3, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         const int nx = cap(3, max_n);
         for (int r = 1; r <= cap(3, max_r); ++r)
             if (auto w = verify_ogf(OgfSide::C, r, nx, nx + 4)) {
                 std::ostringstream os;
                 os << "r=" << r << " " << *w;
                 return os.str();
             }
         return std::nullopt;
     }},
    {"flag-product", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (const auto& [name, w] :
                  verify_polynomial_identities(r, cap(5, max_n)))
                 if (name == "flag-product" && w) {
                     std::ostringstream os;
                     os << "r=" << r << " " << *w;
                     return os.str();
                 }
         return std::nullopt;
     }},
    {"binomial-grid", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r)
            << " (r=1 is the two-sided tableau case)";
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (const auto& [name, w] :
                  verify_polynomial_identities(r, cap(5, max_n)))
                 if (name == "binomial-grid" && w) {
                     std::ostringstream os;
                     os << "r=" << r << " " << *w;
                     return os.str();
                 }
         return std::nullopt;
     }},
    {"power-sum", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (const auto& [name, w] :
                  verify_polynomial_identities(r, cap(5, max_n)))
                 if (name == "power-sum" && w) {
                     std::ostringstream os;
                     os << "r=" << r << " " << *w;
                     return os.str();
                 }
         return std::nullopt;
     }},
    {"fdes-cdes-joint", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n) << " r<=" << cap(3, max_r);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (const auto& [name, w] :
                  verify_polynomial_identities(r, cap(5, max_n)))
                 if (name == "fdes-cdes-joint" && w) {
                     std::ostringstream os;
                     os << "r=" << r << " " << *w;
                     return os.str();
                 }
         return std::nullopt;
     }},
    {"beta-operator", "series",
     +[](int max_n, int max_r) {
         std::ostringstream os;
         os << "k<=12 r<=" << cap(3, max_r) << ", marginals n<=" << cap(4, max_n);
         return os.str();
     },
     +[](int max_n, int max_r) -> Witness {
         for (int r = 1; r <= cap(3, max_r); ++r) {
             if (!(beta(IntPolynomial{1}, r) == IntPolynomial{1}))
                 return std::string("beta(1) != 1");
             for (long k = 0; k <= 12; ++k) {
                 const IntPolynomial arg =
                     IntPolynomial::monomial(Int(1), k) -
                     IntPolynomial::monomial(Int(1), k + 1);
                 const IntPolynomial got = beta(arg, r);
                 IntPolynomial want;
                 if (k % r == 0)
                     want = IntPolynomial::monomial(Int(1), k / r) -
                            IntPolynomial::monomial(Int(1), k / r + 1);
                 if (!(got == want)) {
                     std::ostringstream os;
                     os << "r=" << r << " beta(z^" << k << "-z^" << k + 1
                        << ") = " << poly_str(got);
                     return os.str();
                 }
             }
         }
         if (cap(3, max_r) >= 2) {
             const IntPolynomial z3 = IntPolynomial::monomial(Int(1), 3);
             if (beta(beta(z3, 2), 2) == beta(z3, 2))
                 return std::string(
                     "beta should not be idempotent at r=2 on z^3");
         }
         // the ceil map in build_C is beta applied to the fdes* marginal
         for (int r = 1; r <= cap(3, max_r); ++r)
             for (int n = 1; n <= cap(4, max_n); ++n) {
                 std::map<long, IntPolynomial> raw, ceiled;
                 for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                     const long k = static_cast<long>(r) * n - fexc(p);
                     raw[k].add_to_coeff(fdes_star(p), Int(1));
                     ceiled[k].add_to_coeff(ceil_div(fdes_star(p), r), Int(1));
                 });
                 for (const auto& [k, p] : raw)
                     if (!(beta(p, r) == ceiled[k])) {
                         std::ostringstream os;
                         os << "n=" << n << " r=" << r << " k=" << k << ": "
                            << poly_str(beta(p, r)) << " vs "
                            << poly_str(ceiled[k]);
                         return os.str();
                     }
             }
         return std::nullopt;
     }},

    // ---- tableaux ----
    {"syt-hook-count", "tableaux",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "|shape|<=" << cap(8, max_n + 3);
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(8, max_n + 3); ++n)
             for (const auto& parts : partitions_of(n)) {
                 const YoungDiagram shape(parts);
                 const auto all = enumerate_syt(shape);
                 if (Int(all.size()) != hook_length_count(shape)) {
                     std::ostringstream os;
                     os << shape.to_string() << ": " << all.size() << " vs "
                        << hook_length_count(shape).get_str();
                     return os.str();
                 }
             }
         return std::nullopt;
     }},
    {"schur-two-routes", "tableaux",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "|shape|<=" << cap(6, max_n + 1) << " t<=6";
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(6, max_n + 1); ++n)
             for (const auto& parts : partitions_of(n)) {
                 const YoungDiagram shape(parts);
                 for (long t = 0; t <= 6; ++t) {
                     const Int a = schur_ones(shape, t);
                     const Int b = schur_ones_hook_content(shape, t);
                     if (a != b) {
                         std::ostringstream os;
                         os << shape.to_string() << " t=" << t << ": "
                            << a.get_str() << " vs " << b.get_str();
                         return os.str();
                     }
                 }
             }
         return std::nullopt;
     }},
    {"ssyt-descent-series", "tableaux",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "|shape|<=" << cap(7, max_n + 2);
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(7, max_n + 2); ++n)
             for (const auto& parts : partitions_of(n))
                 if (auto w = verify_sytdes(YoungDiagram(parts))) return w;
         return std::nullopt;
     }},
    {"syt-pair-bivariate", "tableaux",
     +[](int max_n, int) {
         std::ostringstream os;
         os << "n<=" << cap(5, max_n);
         return os.str();
     },
     +[](int max_n, int) -> Witness {
         for (int n = 1; n <= cap(5, max_n); ++n) {
             const auto lhs = syt_pair_bivariate(n);
             std::vector<IntPolynomial> rhs;
             for_each_colored_permutation(n, 1, [&](const ColoredPermutation& p) {
                 const long a = des_perm(p.sigma) + 1;
                 if (a >= static_cast<long>(rhs.size())) rhs.resize(a + 1);
                 rhs[a].add_to_coeff(des_perm(p.inverse().sigma) + 1, Int(1));
             });
             const size_t width = std::max(lhs.size(), rhs.size());
             for (size_t a = 0; a < width; ++a) {
                 const IntPolynomial l = a < lhs.size() ? lhs[a] : IntPolynomial();
                 const IntPolynomial q = a < rhs.size() ? rhs[a] : IntPolynomial();
                 if (!(l == q)) {
                     std::ostringstream os;
                     os << "n=" << n << " y^" << a << ": tableau side "
                        << poly_str(l) << " vs permutation side " << poly_str(q);
                     return os.str();
                 }
             }
         }
         return std::nullopt;
     }},
};

int resolve_threads(const VerifyOptions& opts, size_t jobs) {
    long want = opts.threads;
    if (want <= 0) {
        if (const char* env = std::getenv("HSLAB_THREADS")) {
            char* end = nullptr;
            const long parsed = std::strtol(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) want = parsed;
        }
    }
    if (want <= 0) want = static_cast<long>(std::thread::hardware_concurrency());
    if (want <= 0) want = 1;
    return static_cast<int>(std::min<long>(want, static_cast<long>(jobs ? jobs : 1)));
}

} // namespace

bool suite_known(const std::string& name) {
    static const char* names[] = {"all",        "permstats", "bijections",
                                  "lattice",    "closedform", "series",
                                  "tableaux"};
    for (const char* s : names)
        if (name == s) return true;
    return false;
}

std::vector<VerdictReport> run_verification(const VerifyOptions& opts) {
    if (!suite_known(opts.suite))
        throw std::invalid_argument("run_verification: unknown suite " + opts.suite);
    if (opts.max_n < 0 || opts.max_r < 1)
        throw std::invalid_argument("run_verification: need max_n >= 0, max_r >= 1");

    std::vector<const Entry*> jobs;
    for (const Entry& e : kRegistry)
        if (opts.suite == "all" || opts.suite == e.suite) jobs.push_back(&e);

    std::vector<VerdictReport> out(jobs.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= jobs.size()) return;
            const Entry& e = *jobs[i];
            VerdictReport rep;
            rep.id = e.id;
            rep.suite = e.suite;
            rep.params = e.params(opts.max_n, opts.max_r);
            const auto start = std::chrono::steady_clock::now();
            Witness w;
            try {
                w = e.run(opts.max_n, opts.max_r);
            } catch (const std::exception& ex) {
                w = std::string("exception: ") + ex.what();
            }
            rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            rep.pass = !w.has_value();
            rep.witness = std::move(w);
            out[i] = std::move(rep);
        }
    };

    const int threads = resolve_threads(opts, jobs.size());
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

} // namespace hslab
