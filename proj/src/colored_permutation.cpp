#include <hslab/colored_permutation.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hslab {

ColoredPermutation::ColoredPermutation(std::vector<int> s, std::vector<int> c,
                                       int colors_count)
    : sigma(std::move(s)), colors(std::move(c)), r(colors_count) {
    validate(*this);
}

ColoredPermutation ColoredPermutation::inverse() const {
    const int n = size();
    ColoredPermutation inv;
    inv.r = r;
    inv.sigma.assign(n, 0);
    inv.colors.assign(n, 0);
    for (int i = 0; i < n; ++i) inv.sigma[sigma[i] - 1] = i + 1;
    return inv;
}

std::string ColoredPermutation::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < size(); ++i) {
        if (i) out << " ";
        out << sigma[i] << "^" << colors[i];
    }
    out << "]";
    return out.str();
}

void validate(const ColoredPermutation& p) {
    if (p.r < 1) throw std::invalid_argument("colored permutation: r must be >= 1");
    const int n = p.size();
    if (p.colors.size() != p.sigma.size())
        throw std::invalid_argument("colored permutation: sigma/colors length mismatch");
    std::vector<bool> seen(n, false);
    for (int v : p.sigma) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("colored permutation: sigma is not a permutation of 1..n");
        seen[v - 1] = true;
    }
    for (int c : p.colors)
        if (c < 0 || c >= p.r)
            throw std::invalid_argument("colored permutation: color out of range");
}

Int colored_count(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("colored_count: need n >= 0, r >= 1");
    return int_pow(Int(r), n) * factorial(n);
}

void for_each_colored_permutation(int n, int r,
                                  const std::function<void(const ColoredPermutation&)>& fn) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("for_each_colored_permutation: need n >= 0, r >= 1");
    ColoredPermutation p;
    p.r = r;
    p.sigma.resize(n);
    p.colors.assign(n, 0);
    std::iota(p.sigma.begin(), p.sigma.end(), 1);
    if (n == 0) {
        fn(p);
        return;
    }
    while (true) {
        std::fill(p.colors.begin(), p.colors.end(), 0);
        while (true) {
            fn(p);
            // next color vector in lexicographic order: bump from the right
            int i = n - 1;
            while (i >= 0 && p.colors[i] == r - 1) p.colors[i--] = 0;
            if (i < 0) break;
            ++p.colors[i];
        }
        if (!std::next_permutation(p.sigma.begin(), p.sigma.end())) break;
    }
}

std::vector<ColoredPermutation> all_colored_permutations(int n, int r) {
    std::vector<ColoredPermutation> out;
    for_each_colored_permutation(n, r,
                                 [&](const ColoredPermutation& p) { out.push_back(p); });
    return out;
}

} // namespace hslab
