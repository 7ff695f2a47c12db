#include <hslab/series.hpp>

#include <hslab/lattice.hpp>
#include <hslab/permstats.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hslab {

namespace {

// polynomial in y and z with integer coefficients; rows[a] = coefficient
// of y^a as a polynomial in z
struct Poly2 {
    std::vector<IntPolynomial> rows;

    void add(long a, long b, const Int& v) {
        if (a >= static_cast<long>(rows.size())) rows.resize(a + 1);
        rows[a].add_to_coeff(b, v);
    }
    Int coeff(long a, long b) const {
        if (a < 0 || a >= static_cast<long>(rows.size())) return Int(0);
        return rows[a].coeff(b);
    }
    long ydeg() const { return static_cast<long>(rows.size()) - 1; }
    long zdeg() const {
        long d = -1;
        for (const auto& p : rows) d = std::max(d, p.degree());
        return d;
    }
};

// p(y,z) * q(y) where q is a polynomial in y alone
Poly2 mul_y(const Poly2& p, const IntPolynomial& q) {
    Poly2 out;
    for (long a = 0; a <= p.ydeg(); ++a) {
        if (p.rows[a].is_zero()) continue;
        for (long i = 0; i <= q.degree(); ++i) {
            if (q.coeff(i) == 0) continue;
            const IntPolynomial scaled = p.rows[a] * q.coeff(i);
            for (long b = 0; b <= scaled.degree(); ++b)
                if (scaled.coeff(b) != 0) out.add(a + i, b, scaled.coeff(b));
        }
    }
    return out;
}

std::optional<std::string> first_diff(int n, const Poly2& lhs, const Poly2& rhs) {
    long ay = std::max(lhs.ydeg(), rhs.ydeg());
    long az = std::max(lhs.zdeg(), rhs.zdeg());
    for (long a = 0; a <= ay; ++a)
        for (long b = 0; b <= az; ++b)
            if (lhs.coeff(a, b) != rhs.coeff(a, b)) {
                std::ostringstream out;
                out << "n=" << n << " y^" << a << " z^" << b << ": "
                    << lhs.coeff(a, b).get_str() << " vs " << rhs.coeff(a, b).get_str();
                return out.str();
            }
    return std::nullopt;
}

// (1 - y^s)^n
IntPolynomial one_minus_ypow(int s, int n) {
    std::vector<Int> base(s + 1, Int(0));
    base[0] = 1;
    base[s] = -1;
    IntPolynomial b(std::move(base)), acc({1});
    for (int i = 0; i < n; ++i) acc = acc * b;
    return acc;
}

// sum over S_n^(r) of y^(fdes+1) z^(des(sigma^-1)+1); 1 for n = 0
Poly2 flag_bivariate(int r, int n) {
    Poly2 p;
    if (n == 0) {
        p.add(0, 0, Int(1));
        return p;
    }
    for_each_colored_permutation(n, r, [&](const ColoredPermutation& q) {
        p.add(fdes(q) + 1, des_perm(q.inverse().sigma) + 1, Int(1));
    });
    return p;
}

} // namespace

TruncSeries build_A(int r, int nx) {
    if (r < 1 || nx < 0) throw std::invalid_argument("build_A: need r >= 1, nx >= 0");
    TruncSeries s(nx, r * nx, nx + 1, XNorm::exponential);
    s.set(0, 0, 0, Rat(1));
    for (int n = 1; n <= nx; ++n)
        for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
            s.add_at(n, fdes(p) + 1, des_perm(p.inverse().sigma) + 1, Rat(1));
        });
    return s;
}

TruncSeries build_B(int r, int nx) {
    if (r < 1 || nx < 0) throw std::invalid_argument("build_B: need r >= 1, nx >= 0");
    TruncSeries s(nx, r * nx, nx + 1, XNorm::exponential);
    s.set(0, 0, 0, Rat(1));
    for (int n = 1; n <= nx; ++n)
        for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
            const IntPolynomial p = B_polynomial(n, r, k);
            for (long b = 0; b <= p.degree(); ++b)
                if (p.coeff(b) != 0) s.set(n, k, b, Rat(p.coeff(b)));
        }
    return s;
}

TruncSeries build_C(int r, int nx) {
    if (r < 1 || nx < 0) throw std::invalid_argument("build_C: need r >= 1, nx >= 0");
    TruncSeries s(nx, r * nx, nx + 1, XNorm::exponential);
    s.set(0, 0, 0, Rat(1));
    for (int n = 1; n <= nx; ++n)
        for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
            long k = static_cast<long>(r) * n - fexc(p);
            long b = ceil_div(fdes_star(p), r);
            s.add_at(n, k, b, Rat(1));
        });
    return s;
}

std::optional<std::string> verify_exp_relation(const TruncSeries& lhs,
                                               const TruncSeries& rhs_base,
                                               int r) {
    if (!lhs.same_shape(rhs_base))
        throw std::invalid_argument("verify_exp_relation: truncation order mismatch");
    if (static_cast<long>(r) * lhs.nx() > lhs.ny())
        throw std::invalid_argument("verify_exp_relation: need ny >= r*nx");
    TruncSeries factor = exp_one_minus_z_yr_x(r, lhs.nx(), lhs.ny(), lhs.nz());
    auto diff = first_mismatch(lhs, factor * rhs_base);
    if (!diff) return std::nullopt;
    return diff->to_string();
}

IntPolynomial beta(const IntPolynomial& p, int r) {
    if (r < 1) throw std::invalid_argument("beta: need r >= 1");
    IntPolynomial out;
    for (long k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) out.add_to_coeff(ceil_div(k, r), p.coeff(k));
    return out;
}

std::optional<std::string> verify_foata_han(int r, int nx, int nz) {
    if (r < 1 || nx < 0) throw std::invalid_argument("verify_foata_han: bad orders");
    if (nz < static_cast<long>(r) * nx)
        throw std::invalid_argument("verify_foata_han: insufficient truncation margin");
    const int ny = r * nx + r;
    const TruncSeries one =
        monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, 0, 0);

    // left side: sum_n W_n(y,z) x^n / (1-z^r)^n
    TruncSeries zr(nx, ny, nz, XNorm::ordinary);
    zr.set_plain_coeff(0, 0, 0, Rat(1));
    if (r <= nz) zr.set_plain_coeff(0, 0, r, Rat(-1));
    const TruncSeries inv_zr = zr.inverse();

    TruncSeries lhs(nx, ny, nz, XNorm::ordinary);
    lhs.set_plain_coeff(0, 0, 0, Rat(1));
    TruncSeries pw = one;
    for (int n = 1; n <= nx; ++n) {
        pw = pw * inv_zr;
        TruncSeries wn(nx, ny, nz, XNorm::ordinary);
        for (const auto& [ab, cnt] :
             joint_distribution(n, r, Statistic::fexc, Statistic::fdes_star))
            wn.set_plain_coeff(n, ab.first, ab.second, Rat(cnt));
        lhs = lhs + wn * pw;
    }

    // right side: (1-z) sum_k z^k F_k with x,y-only kernels F_k
    TruncSeries x1(nx, ny, nz, XNorm::ordinary);
    x1.set_plain_coeff(0, 0, 0, Rat(1));
    if (nx >= 1) x1.set_plain_coeff(1, 0, 0, Rat(-1));
    const TruncSeries inv_1mx = x1.inverse();

    TruncSeries xyr(nx, ny, nz, XNorm::ordinary);
    xyr.set_plain_coeff(0, 0, 0, Rat(1));
    if (nx >= 1) xyr.set_plain_coeff(1, r, 0, Rat(-1));
    const TruncSeries u = xyr * inv_1mx;

    std::vector<TruncSeries> upow{one};
    for (long e = 1; e <= nz / r + 1; ++e) upow.push_back(upow.back() * u);

    TruncSeries geom_y(nx, ny, nz, XNorm::ordinary);
    for (int i = 0; i < r; ++i) geom_y.set_plain_coeff(0, i, 0, Rat(1));

    TruncSeries one_minus_yr(nx, ny, nz, XNorm::ordinary);
    one_minus_yr.set_plain_coeff(0, 0, 0, Rat(1));
    one_minus_yr.set_plain_coeff(0, r, 0, Rat(-1));

    TruncSeries rhs(nx, ny, nz, XNorm::ordinary);
    for (long k = 0; k <= nz; ++k) {
        TruncSeries denom = geom_y;
        for (int i = 1; i <= r; ++i) {
            long e = floor_div(k - i, r) + 1;
            denom = denom -
                    monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, i, 0) *
                        upow[e];
        }
        TruncSeries fk = upow[k / r] * inv_1mx * one_minus_yr * denom.inverse();
        rhs = rhs +
              monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, 0, k) * fk;
    }
    TruncSeries zfac(nx, ny, nz, XNorm::ordinary);
    zfac.set_plain_coeff(0, 0, 0, Rat(1));
    if (nz >= 1) zfac.set_plain_coeff(0, 0, 1, Rat(-1));
    rhs = zfac * rhs;

    auto diff = first_mismatch(lhs, rhs);
    if (!diff) return std::nullopt;
    return diff->to_string();
}

std::optional<std::string> verify_ogf(OgfSide side, int r, int nx, int nz) {
    if (r < 1 || nx < 0) throw std::invalid_argument("verify_ogf: bad orders");
    if (nz < nx + 1)
        throw std::invalid_argument("verify_ogf: insufficient truncation margin");
    const int ny = r * nx + r;

    const TruncSeries lhs =
        ordinary_from_exponential(side == OgfSide::A ? build_A(r, nx)
                                                     : build_C(r, nx))
            .expanded(ny, nz);

    const TruncSeries one =
        monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, 0, 0);
    const TruncSeries ymono =
        monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, 1, 0);

    TruncSeries yz(nx, ny, nz, XNorm::ordinary);  // (1-y)(1-z)
    yz.set_plain_coeff(0, 0, 0, Rat(1));
    yz.set_plain_coeff(0, 1, 0, Rat(-1));
    yz.set_plain_coeff(0, 0, 1, Rat(-1));
    yz.set_plain_coeff(0, 1, 1, Rat(1));

    TruncSeries msum(nx, ny, nz, XNorm::ordinary);
    TruncSeries rhs(nx, ny, nz, XNorm::ordinary);

    if (side == OgfSide::A) {
        TruncSeries h(nx, ny, nz, XNorm::ordinary);  // 1 - x (1-y^r)(1-z)
        h.set_plain_coeff(0, 0, 0, Rat(1));
        if (nx >= 1) {
            h.set_plain_coeff(1, 0, 0, Rat(-1));
            h.set_plain_coeff(1, r, 0, Rat(1));
            h.set_plain_coeff(1, 0, 1, Rat(1));
            h.set_plain_coeff(1, r, 1, Rat(-1));
        }
        const TruncSeries g = h.inverse();
        TruncSeries gm = one;
        for (long m = 0; m <= nz; ++m) {
            if (m > 0) gm = gm * g;
            msum = msum +
                   monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, 0, m) *
                       (one - ymono * gm).inverse();
        }
        rhs = yz * msum;
    } else {
        TruncSeries p(nx, ny, nz, XNorm::ordinary);  // 1 - x y^r (1-z)
        p.set_plain_coeff(0, 0, 0, Rat(1));
        if (nx >= 1) {
            p.set_plain_coeff(1, r, 0, Rat(-1));
            p.set_plain_coeff(1, r, 1, Rat(1));
        }
        TruncSeries q(nx, ny, nz, XNorm::ordinary);  // 1 - x (1-z)
        q.set_plain_coeff(0, 0, 0, Rat(1));
        if (nx >= 1) {
            q.set_plain_coeff(1, 0, 0, Rat(-1));
            q.set_plain_coeff(1, 0, 1, Rat(1));
        }
        const TruncSeries v = p * q.inverse();
        TruncSeries vm = one;
        for (long m = 0; m <= nz; ++m) {
            if (m > 0) vm = vm * v;
            msum = msum +
                   monomial_series(nx, ny, nz, XNorm::ordinary, Rat(1), 0, 0, m) *
                       (one - ymono * vm).inverse();
        }
        rhs = yz * p.inverse() * msum;
    }

    auto diff = first_mismatch(lhs, rhs);
    if (!diff) return std::nullopt;
    return diff->to_string();
}

std::vector<std::pair<std::string, std::optional<std::string>>>
verify_polynomial_identities(int r, int n_max) {
    if (r < 1 || n_max < 0)
        throw std::invalid_argument("verify_polynomial_identities: bad bounds");
    std::vector<std::pair<std::string, std::optional<std::string>>> out;

    std::optional<std::string> w;
    for (int n = 0; n <= n_max && !w; ++n) {
        const Poly2 lhs = mul_y(flag_bivariate(r, n), one_minus_ypow(1, n));
        const Poly2 rhs = mul_y(flag_bivariate(1, n), one_minus_ypow(r, n));
        w = first_diff(n, lhs, rhs);
    }
    out.emplace_back("flag-product", w);

    w.reset();
    for (int n = 1; n <= n_max && !w; ++n) {
        const int gy = r * n + 3, gz = n + 3;
        TruncSeries num(0, gy, gz, XNorm::ordinary);
        const Poly2 fp = flag_bivariate(r, n);
        for (long a = 0; a <= fp.ydeg(); ++a)
            for (long b = 0; b <= fp.rows[a].degree(); ++b)
                if (fp.coeff(a, b) != 0) num.set(0, a, b, Rat(fp.coeff(a, b)));

        TruncSeries fy(0, gy, gz, XNorm::ordinary);  // 1 - y^r
        fy.set(0, 0, 0, Rat(1));
        fy.set(0, r, 0, Rat(-1));
        TruncSeries f1(0, gy, gz, XNorm::ordinary);  // 1 - y
        f1.set(0, 0, 0, Rat(1));
        f1.set(0, 1, 0, Rat(-1));
        TruncSeries fz(0, gy, gz, XNorm::ordinary);  // 1 - z
        fz.set(0, 0, 0, Rat(1));
        fz.set(0, 0, 1, Rat(-1));
        const TruncSeries grid =
            num * (fy.pow(n) * f1 * fz.pow(n + 1)).inverse();

        for (long i = 0; i <= gy && !w; ++i)
            for (long j = 0; j <= gz && !w; ++j) {
                const Rat want(binomial(i * j + n - 1, n));
                if (grid.at(0, i, j) != want) {
                    std::ostringstream os;
                    os << "n=" << n << " y^" << i << " z^" << j << ": "
                       << grid.at(0, i, j).get_str() << " vs " << want.get_str();
                    w = os.str();
                }
            }
    }
    out.emplace_back("binomial-grid", w);

    w.reset();
    for (int n = 1; n <= n_max && !w; ++n) {
        const int gy = r * n + 3;
        TruncSeries num(0, gy, 0, XNorm::ordinary);
        for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
            num.add_at(0, fdes(p) + 1, 0, Rat(1));
        });
        TruncSeries fy(0, gy, 0, XNorm::ordinary);
        fy.set(0, 0, 0, Rat(1));
        fy.set(0, r, 0, Rat(-1));
        TruncSeries f1(0, gy, 0, XNorm::ordinary);
        f1.set(0, 0, 0, Rat(1));
        f1.set(0, 1, 0, Rat(-1));
        const TruncSeries expanded = num * (fy.pow(n) * f1).inverse();
        for (long i = 0; i <= gy && !w; ++i) {
            const Rat want(int_pow(Int(i), n));
            if (expanded.at(0, i, 0) != want) {
                std::ostringstream os;
                os << "n=" << n << " y^" << i << ": "
                   << expanded.at(0, i, 0).get_str() << " vs " << want.get_str();
                w = os.str();
            }
        }
    }
    out.emplace_back("power-sum", w);

    w.reset();
    for (int n = 0; n <= n_max && !w; ++n) {
        const auto lhs =
            joint_distribution(n, r, Statistic::fdes, Statistic::inverse_descents);
        const auto rhs =
            joint_distribution(n, r, Statistic::cdes, Statistic::inverse_descents);
        if (lhs != rhs) {
            for (const auto& [key, cnt] : lhs) {
                auto it = rhs.find(key);
                const Int other = it == rhs.end() ? Int(0) : it->second;
                if (cnt != other) {
                    std::ostringstream os;
                    os << "n=" << n << " (" << key.first << "," << key.second
                       << "): " << cnt.get_str() << " vs " << other.get_str();
                    w = os.str();
                    break;
                }
            }
            if (!w) {
                for (const auto& [key, cnt] : rhs)
                    if (!lhs.count(key)) {
                        std::ostringstream os;
                        os << "n=" << n << " (" << key.first << "," << key.second
                           << "): 0 vs " << cnt.get_str();
                        w = os.str();
                        break;
                    }
            }
        }
    }
    out.emplace_back("fdes-cdes-joint", w);

    return out;
}

} // namespace hslab
