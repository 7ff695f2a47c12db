#include <hslab/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace hslab {

IntPolynomial IntPolynomial::monomial(const Int& coeff, long deg) {
    if (deg < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Int> c(static_cast<size_t>(deg) + 1, Int(0));
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::add_to_coeff(long i, const Int& v) {
    if (i < 0) throw std::invalid_argument("add_to_coeff: negative exponent");
    if (i >= static_cast<long>(c_.size())) c_.resize(i + 1, Int(0));
    c_[i] += v;
    trim();
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPolynomial::sum_coeffs() const {
    Int s = 0;
    for (const auto& v : c_) s += v;
    return s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    std::vector<Int> c(c_);
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(long shift) const {
    if (shift < 0) throw std::invalid_argument("shifted: negative shift");
    if (is_zero()) return IntPolynomial();
    std::vector<Int> c(c_.size() + static_cast<size_t>(shift), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + shift] = c_[i];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        out << c_[i].get_str();
        if (i > 0) out << "*" << var << "^" << i;
        first = false;
    }
    return out.str();
}

RatPolynomial RatPolynomial::from_int(const IntPolynomial& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPolynomial(std::move(c));
}

Rat RatPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial RatPolynomial::to_int() const {
    std::vector<Int> c;
    c.reserve(c_.size());
    for (const auto& v : c_) {
        if (v.get_den() != 1)
            throw std::domain_error("to_int: non-integer coefficient " + v.get_str());
        c.push_back(v.get_num());
    }
    return IntPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& o) const {
    if (is_zero() || o.is_zero()) return RatPolynomial();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const Rat& s) const {
    std::vector<Rat> c(c_);
    for (auto& v : c) v *= s;
    return RatPolynomial(std::move(c));
}

std::string RatPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        out << c_[i].get_str();
        if (i > 0) out << "*" << var << "^" << i;
        first = false;
    }
    return out.str();
}

RatPolynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    const size_t m = points.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate node");

    std::vector<Rat> acc{Rat(0)};
    for (size_t i = 0; i < m; ++i) {
        // Lagrange basis numerator prod_{j != i} (x - x_j), then scale.
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * points[j].first;
            }
            basis = std::move(next);
            denom *= points[i].first - points[j].first;
        }
        Rat scale = points[i].second / denom;
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rat(0));
        for (size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * scale;
    }
    return RatPolynomial(std::move(acc));
}

IntPolynomial series_numerator(const std::vector<Int>& counts, long n) {
    if (n < 0) throw std::invalid_argument("series_numerator: negative dimension");
    if (counts.size() != static_cast<size_t>(n) + 2)
        throw std::invalid_argument("series_numerator: need counts for t = 0..n+1");
    std::vector<Int> c(static_cast<size_t>(n) + 2, Int(0));
    for (long m = 0; m <= n + 1; ++m) {
        Int v = 0;
        for (long i = 0; i <= m; ++i) {
            Int term = binomial(n + 1, i) * counts[m - i];
            if (i % 2) v -= term; else v += term;
        }
        c[m] = v;
    }
    return IntPolynomial(std::move(c));
}

} // namespace hslab
