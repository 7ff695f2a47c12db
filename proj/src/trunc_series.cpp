#include <hslab/trunc_series.hpp>

#include <sstream>

namespace hslab {

TruncSeries::TruncSeries(int nx, int ny, int nz, XNorm norm)
    : nx_(nx), ny_(ny), nz_(nz), norm_(norm) {
    if (nx < 0 || ny < 0 || nz < 0)
        throw std::invalid_argument("TruncSeries: negative truncation order");
    c_.assign(static_cast<size_t>(nx + 1) * (ny + 1) * (nz + 1), Rat(0));
}

Rat TruncSeries::plain_coeff(int n, int a, int b) const {
    return at(n, a, b) / Rat(factorial(n));
}

void TruncSeries::set_plain_coeff(int n, int a, int b, const Rat& v) {
    set(n, a, b, v * Rat(factorial(n)));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (!same_shape(o)) throw std::invalid_argument("TruncSeries +: shape mismatch");
    TruncSeries out(*this);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    if (!same_shape(o)) throw std::invalid_argument("TruncSeries -: shape mismatch");
    TruncSeries out(*this);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (!same_shape(o)) throw std::invalid_argument("TruncSeries *: shape mismatch");
    TruncSeries out(nx_, ny_, nz_, norm_);
    // binomial convolution in x (the storage is x^n/n!), ordinary in y, z
    for (int n1 = 0; n1 <= nx_; ++n1)
        for (int a1 = 0; a1 <= ny_; ++a1)
            for (int b1 = 0; b1 <= nz_; ++b1) {
                const Rat& v1 = at(n1, a1, b1);
                if (v1 == 0) continue;
                for (int n2 = 0; n2 + n1 <= nx_; ++n2) {
                    Rat binom = Rat(binomial(n1 + n2, n1));
                    for (int a2 = 0; a2 + a1 <= ny_; ++a2)
                        for (int b2 = 0; b2 + b1 <= nz_; ++b2) {
                            const Rat& v2 = o.at(n2, a2, b2);
                            if (v2 == 0) continue;
                            out.c_[out.index(n1 + n2, a1 + a2, b1 + b2)] += binom * v1 * v2;
                        }
                }
            }
    return out;
}

TruncSeries TruncSeries::operator*(const Rat& s) const {
    TruncSeries out(*this);
    for (auto& v : out.c_) v *= s;
    return out;
}

TruncSeries TruncSeries::expanded(int ny, int nz) const {
    if (ny < ny_ || nz < nz_)
        throw std::invalid_argument("TruncSeries::expanded: orders must not shrink");
    TruncSeries out(nx_, ny, nz, norm_);
    for (int n = 0; n <= nx_; ++n)
        for (int a = 0; a <= ny_; ++a)
            for (int b = 0; b <= nz_; ++b)
                out.set(n, a, b, at(n, a, b));
    return out;
}

TruncSeries TruncSeries::inverse() const {
    if (at(0, 0, 0) != 1)
        throw std::domain_error("TruncSeries::inverse: constant term must be 1");
    TruncSeries inv(nx_, ny_, nz_, norm_);
    // solve (this * inv) = 1 coefficientwise in increasing (n, a, b);
    // the x direction carries the binomial convolution weights
    for (int n = 0; n <= nx_; ++n)
        for (int a = 0; a <= ny_; ++a)
            for (int b = 0; b <= nz_; ++b) {
                Rat target = (n == 0 && a == 0 && b == 0) ? Rat(1) : Rat(0);
                Rat acc = 0;
                for (int j = 0; j <= n; ++j) {
                    Rat binom = Rat(binomial(n, j));
                    for (int u = 0; u <= a; ++u)
                        for (int v = 0; v <= b; ++v) {
                            if (j == n && u == a && v == b) continue;
                            const Rat& known = inv.at(j, u, v);
                            if (known == 0) continue;
                            const Rat& s = at(n - j, a - u, b - v);
                            if (s == 0) continue;
                            acc += binom * s * known;
                        }
                }
                // coefficient of inv(n,a,b) in the convolution is at(0,0,0) = 1
                inv.set(n, a, b, target - acc);
            }
    return inv;
}

TruncSeries TruncSeries::pow(long e) const {
    if (e < 0) throw std::invalid_argument("TruncSeries::pow: negative exponent");
    TruncSeries acc = monomial_series(nx_, ny_, nz_, norm_, Rat(1), 0, 0, 0);
    TruncSeries base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::string SeriesMismatch::to_string() const {
    std::ostringstream out;
    out << "x^" << n << " y^" << a << " z^" << b << ": " << lhs.get_str()
        << " vs " << rhs.get_str();
    return out.str();
}

std::optional<SeriesMismatch> first_mismatch(const TruncSeries& lhs,
                                             const TruncSeries& rhs) {
    if (!lhs.same_shape(rhs))
        throw std::invalid_argument("first_mismatch: shape mismatch");
    for (int n = 0; n <= lhs.nx(); ++n)
        for (int a = 0; a <= lhs.ny(); ++a)
            for (int b = 0; b <= lhs.nz(); ++b)
                if (lhs.at(n, a, b) != rhs.at(n, a, b))
                    return SeriesMismatch{n, a, b, lhs.at(n, a, b), rhs.at(n, a, b)};
    return std::nullopt;
}

TruncSeries monomial_series(int nx, int ny, int nz, XNorm norm, const Rat& coef,
                            int n, int a, int b) {
    TruncSeries s(nx, ny, nz, norm);
    s.set_plain_coeff(n, a, b, coef);
    return s;
}

TruncSeries exp_one_minus_z_yr_x(int r, int nx, int ny, int nz) {
    if (r < 1) throw std::invalid_argument("exp_one_minus_z_yr_x: need r >= 1");
    TruncSeries s(nx, ny, nz, XNorm::exponential);
    for (int m = 0; m <= nx; ++m) {
        if (static_cast<long>(r) * m > ny) break;
        for (int b = 0; b <= std::min(m, nz); ++b) {
            Rat coef = Rat(binomial(m, b));
            if (b % 2) coef = -coef;
            s.set(m, r * m, b, coef);
        }
    }
    return s;
}

TruncSeries ordinary_from_exponential(const TruncSeries& s) {
    if (s.norm() != XNorm::exponential)
        throw std::invalid_argument("ordinary_from_exponential: series is not exponential");
    TruncSeries out(s.nx(), s.ny(), s.nz(), XNorm::ordinary);
    for (int n = 0; n <= s.nx(); ++n) {
        Rat f = Rat(factorial(n));
        for (int a = 0; a <= s.ny(); ++a)
            for (int b = 0; b <= s.nz(); ++b) {
                const Rat& v = s.at(n, a, b);
                if (v != 0) out.set(n, a, b, v * f);
            }
    }
    return out;
}

} // namespace hslab
