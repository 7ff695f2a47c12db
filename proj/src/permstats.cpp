#include <hslab/permstats.hpp>

namespace hslab {

int des_perm(const std::vector<int>& sigma) {
    int d = 0;
    for (size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) ++d;
    return d;
}

int des(const ColoredPermutation& p) {
    int d = 0;
    for (int i = 0; i + 1 < p.size(); ++i) {
        if (p.colors[i] > p.colors[i + 1]) ++d;
        else if (p.colors[i] == p.colors[i + 1] && p.sigma[i] > p.sigma[i + 1]) ++d;
    }
    return d;
}

int fdes(const ColoredPermutation& p) {
    if (p.size() == 0) throw std::invalid_argument("fdes: empty permutation");
    return p.r * des(p) + p.colors.back();
}

int des_star(const ColoredPermutation& p) {
    int d = 0;
    for (int i = 0; i + 1 < p.size(); ++i) {
        if (p.colors[i] < p.colors[i + 1]) ++d;
        else if (p.colors[i] == p.colors[i + 1] && p.sigma[i] > p.sigma[i + 1]) ++d;
    }
    return d;
}

int fdes_star(const ColoredPermutation& p) {
    if (p.size() == 0) throw std::invalid_argument("fdes_star: empty permutation");
    return p.r * des_star(p) + p.colors.front();
}

int fexc(const ColoredPermutation& p) {
    int zero_exc = 0, color_sum = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (p.sigma[i] > i + 1 && p.colors[i] == 0) ++zero_exc;
        color_sum += p.colors[i];
    }
    return p.r * zero_exc + color_sum;
}

int cdes(const ColoredPermutation& p) {
    int color_sum = 0;
    for (int c : p.colors) color_sum += c;
    return des_perm(p.sigma) + color_sum;
}

int cover(const ColoredPermutation& p) {
    const int n = p.size();
    std::vector<int> inv(n + 1, 0);  // inv[0] = 0 by convention
    for (int i = 0; i < n; ++i) inv[p.sigma[i]] = i + 1;
    int c = 0;
    for (int i = 1; i <= n; ++i)
        if (inv[i - 1] + 1 < inv[i]) ++c;
    return c;
}

int cef(const ColoredPermutation& p) {
    int c = 0;
    int prev = 0;  // sigma_0 = 0 by convention
    for (int i = 0; i < p.size(); ++i) {
        if (p.colors[i] > 0 && prev + 1 == p.sigma[i]) ++c;
        prev = p.sigma[i];
    }
    return c;
}

const char* statistic_name(Statistic s) {
    switch (s) {
        case Statistic::inverse_descents: return "inverse-descents";
        case Statistic::des: return "des";
        case Statistic::fdes: return "fdes";
        case Statistic::des_star: return "des-star";
        case Statistic::fdes_star: return "fdes-star";
        case Statistic::fexc: return "fexc";
        case Statistic::cdes: return "cdes";
        case Statistic::cover: return "cover";
        case Statistic::cef: return "cef";
        case Statistic::ceil_fdes_r: return "ceil-fdes-r";
        case Statistic::ceil_fdes_star_r: return "ceil-fdes-star-r";
    }
    throw std::logic_error("statistic_name: unknown statistic");
}

std::optional<Statistic> parse_statistic(const std::string& name) {
    static const Statistic all[] = {
        Statistic::inverse_descents, Statistic::des, Statistic::fdes,
        Statistic::des_star, Statistic::fdes_star, Statistic::fexc,
        Statistic::cdes, Statistic::cover, Statistic::cef,
        Statistic::ceil_fdes_r, Statistic::ceil_fdes_star_r,
    };
    for (Statistic s : all)
        if (name == statistic_name(s)) return s;
    return std::nullopt;
}

long statistic_value(Statistic s, const ColoredPermutation& p) {
    if (p.size() == 0) return 0;
    switch (s) {
        case Statistic::inverse_descents: return des_perm(p.inverse().sigma);
        case Statistic::des: return des(p);
        case Statistic::fdes: return fdes(p);
        case Statistic::des_star: return des_star(p);
        case Statistic::fdes_star: return fdes_star(p);
        case Statistic::fexc: return fexc(p);
        case Statistic::cdes: return cdes(p);
        case Statistic::cover: return cover(p);
        case Statistic::cef: return cef(p);
        case Statistic::ceil_fdes_r: return ceil_div(fdes(p), p.r);
        case Statistic::ceil_fdes_star_r: return ceil_div(fdes_star(p), p.r);
    }
    throw std::logic_error("statistic_value: unknown statistic");
}

Int flag_eulerian(int n, int r, long k) {
    if (n < 0 || r < 1) throw std::invalid_argument("flag_eulerian: need n >= 0, r >= 1");
    if (n == 0) return k == 0 ? Int(1) : Int(0);
    if (k < 0 || k > static_cast<long>(r) * n) return 0;
    return flag_eulerian_row(n, r)[k];
}

std::vector<Int> flag_eulerian_row(int n, int r) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("flag_eulerian_row: need n >= 0, r >= 1");
    std::vector<Int> row(static_cast<size_t>(r) * n + 1, Int(0));
    if (n == 0) {
        row[0] = 1;
        return row;
    }
    for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
        row[static_cast<size_t>(fdes(p)) + 1] += 1;
    });
    return row;
}

JointDistribution joint_distribution(int n, int r, Statistic a, Statistic b) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("joint_distribution: need n >= 0, r >= 1");
    JointDistribution table;
    for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
        table[{statistic_value(a, p), statistic_value(b, p)}] += 1;
    });
    return table;
}

} // namespace hslab
