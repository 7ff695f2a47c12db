#include <hslab/tableaux.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hslab {

YoungDiagram::YoungDiagram(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty())
        throw std::invalid_argument("YoungDiagram: need at least one part");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("YoungDiagram: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
    }
}

int YoungDiagram::size() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

std::string YoungDiagram::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

std::string StandardTableau::to_string() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out << " / ";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out << " ";
            out << rows[i][j];
        }
    }
    out << "]";
    return out.str();
}

Int hook_length_count(const YoungDiagram& shape) {
    const auto& parts = shape.parts;
    Int hooks(1);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = 0;
            for (size_t i2 = i + 1; i2 < parts.size() && parts[i2] > j; ++i2) ++leg;
            hooks *= arm + leg + 1;
        }
    Int total = factorial(shape.size());
    if (total % hooks != 0)
        throw std::logic_error("hook_length_count: hooks do not divide n!");
    return total / hooks;
}

std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape) {
    const auto& parts = shape.parts;
    const int n = shape.size();
    std::vector<StandardTableau> out;
    StandardTableau t;
    t.rows.resize(parts.size());
    std::vector<int> filled(parts.size(), 0);

    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            out.push_back(t);
            return;
        }
        for (size_t i = 0; i < parts.size(); ++i) {
            if (filled[i] >= parts[i]) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue;
            t.rows[i].push_back(v);
            ++filled[i];
            place(v + 1);
            --filled[i];
            t.rows[i].pop_back();
        }
    };
    place(1);

    if (Int(out.size()) != hook_length_count(shape))
        throw std::logic_error("enumerate_syt: count disagrees with hook lengths");
    return out;
}

int des_tableau(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> row_of(n + 2, 0);
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (int v : t.rows[i]) row_of[v] = static_cast<int>(i);
    int d = 0;
    for (int v = 1; v < n; ++v)
        if (row_of[v + 1] > row_of[v]) ++d;
    return d;
}

Int schur_ones(const YoungDiagram& shape, long t) {
    if (t < 0) throw std::invalid_argument("schur_ones: need t >= 0");
    const auto& parts = shape.parts;
    std::vector<std::vector<int>> vals(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) vals[i].assign(parts[i], 0);

    Int count(0);
    // fill bottom row first, left to right; each cell sees its left and
    // lower neighbors already set
    std::function<void(size_t, int)> fill = [&](size_t i, int j) {
        if (i == parts.size()) {
            ++count;
            return;
        }
        size_t ni = i;
        int nj = j + 1;
        if (nj == parts[i]) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, vals[i][j - 1]);
        if (i > 0) lo = std::max(lo, vals[i - 1][j] + 1);
        for (int v = lo; v <= t; ++v) {
            vals[i][j] = v;
            fill(ni, nj);
        }
        vals[i][j] = 0;
    };
    fill(0, 0);
    return count;
}

Int schur_ones_hook_content(const YoungDiagram& shape, long t) {
    if (t < 0) throw std::invalid_argument("schur_ones_hook_content: need t >= 0");
    const auto& parts = shape.parts;
    Rat prod(1);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = 0;
            for (size_t i2 = i + 1; i2 < parts.size() && parts[i2] > j; ++i2) ++leg;
            long content = j - static_cast<long>(i);
            prod *= make_rat(Int(t + content), Int(arm + leg + 1));
        }
    if (prod.get_den() != 1)
        throw std::logic_error("schur_ones_hook_content: non-integer product");
    return prod.get_num();
}

std::optional<std::string> verify_sytdes(const YoungDiagram& shape) {
    const int n = shape.size();

    std::vector<Int> counts;
    for (long t = 0; t <= n + 1; ++t) counts.push_back(schur_ones(shape, t));

    std::vector<std::pair<Rat, Rat>> points;
    for (long t = 0; t <= n; ++t) points.emplace_back(Rat(t), Rat(counts[t]));
    const RatPolynomial poly = interpolate(points);
    if (poly.eval(Rat(n + 1)) != Rat(counts[n + 1])) {
        std::ostringstream out;
        out << shape.to_string() << " count at t=" << n + 1
            << " is off the interpolated polynomial";
        return out.str();
    }

    const IntPolynomial lhs = series_numerator(counts, n);

    IntPolynomial rhs;
    for (const auto& t : enumerate_syt(shape))
        rhs.add_to_coeff(des_tableau(t) + 1, Int(1));

    if (lhs == rhs) return std::nullopt;
    for (long b = 0; b <= std::max(lhs.degree(), rhs.degree()); ++b)
        if (lhs.coeff(b) != rhs.coeff(b)) {
            std::ostringstream out;
            out << shape.to_string() << " z^" << b << ": " << lhs.coeff(b).get_str()
                << " vs " << rhs.coeff(b).get_str();
            return out.str();
        }
    return std::nullopt;
}

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: need n >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<IntPolynomial> syt_pair_bivariate(int n) {
    std::vector<IntPolynomial> out;
    for (const auto& parts : partitions_of(n)) {
        const YoungDiagram shape(parts);
        IntPolynomial dgen;
        for (const auto& t : enumerate_syt(shape))
            dgen.add_to_coeff(des_tableau(t) + 1, Int(1));
        for (long a = 0; a <= dgen.degree(); ++a) {
            if (dgen.coeff(a) == 0) continue;
            if (a >= static_cast<long>(out.size())) out.resize(a + 1);
            out[a] = out[a] + dgen * dgen.coeff(a);
        }
    }
    return out;
}

} // namespace hslab
