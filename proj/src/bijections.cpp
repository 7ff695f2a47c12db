#include <hslab/bijections.hpp>
#include <hslab/permstats.hpp>

namespace hslab {

ColoredPermutation cstd(const GridPoint& v) {
    validate(v);
    ColoredPermutation p;
    p.r = v.r;
    const int n = v.size();
    p.colors.resize(n);
    std::vector<Rat> frac(n);
    for (int i = 0; i < n; ++i) {
        if (v.coords[i] < 0 || v.coords[i] >= v.r)
            throw std::domain_error("cstd: coordinate outside [0, r)");
        Int fl = rat_floor(v.coords[i]);
        p.colors[i] = static_cast<int>(to_long(fl));
        frac[i] = v.coords[i] - Rat(fl);
    }
    p.sigma = standardization(frac);
    validate(p);
    return p;
}

Rat fdes_point(const GridPoint& v) {
    if (v.size() == 0) throw std::invalid_argument("fdes_point: empty point");
    int d = 0;
    for (int i = 0; i + 1 < v.size(); ++i)
        if (v.coords[i] > v.coords[i + 1]) ++d;
    return Rat(v.r) * d + v.coords.back();
}

GridPoint phi(const GridPoint& a) {
    validate(a);
    for (const Rat& c : a.coords)
        if (c < 0 || c >= a.r) throw std::domain_error("phi: coordinate outside [0, r)");
    GridPoint b;
    b.r = a.r;
    b.t = a.t;
    b.coords.resize(a.size());
    Rat prev = 0;
    for (int i = 0; i < a.size(); ++i) {
        Rat d = a.coords[i] - prev;
        if (prev > a.coords[i]) d += a.r;
        b.coords[i] = d;
        prev = a.coords[i];
    }
    return b;
}

GridPoint phi_inverse(const GridPoint& b) {
    validate(b);
    for (const Rat& c : b.coords)
        if (c < 0 || c >= b.r)
            throw std::domain_error("phi_inverse: coordinate outside [0, r)");
    GridPoint a;
    a.r = b.r;
    a.t = b.t;
    a.coords.resize(b.size());
    Rat run = 0;
    for (int i = 0; i < b.size(); ++i) {
        run += b.coords[i];
        a.coords[i] = rat_mod(run, b.r);
    }
    return a;
}

ColoredPermutation alpha(const ColoredPermutation& p) {
    validate(p);
    ColoredPermutation q;
    q.r = p.r;
    q.sigma = p.sigma;
    q.colors.resize(p.size());
    int color_sum = 0, prefix_des = 0;
    for (int i = 0; i < p.size(); ++i) {
        color_sum += p.colors[i];
        if (i > 0 && p.sigma[i - 1] > p.sigma[i]) ++prefix_des;
        q.colors[i] = static_cast<int>(((color_sum + prefix_des) % p.r + p.r) % p.r);
    }
    return q;
}

ColoredPermutation alpha_star(const ColoredPermutation& p) {
    validate(p);
    ColoredPermutation q;
    q.r = p.r;
    q.sigma = p.sigma;
    q.colors.resize(p.size());
    int color_sum = 0, suffix_des = 0;
    for (int i = p.size() - 1; i >= 0; --i) {
        color_sum += p.colors[i];
        if (i + 1 < p.size() && p.sigma[i] > p.sigma[i + 1]) ++suffix_des;
        q.colors[i] = static_cast<int>(((color_sum + suffix_des) % p.r + p.r) % p.r);
    }
    return q;
}

ColoredPermutation block_involution(const ColoredPermutation& p) {
    validate(p);
    const int n = p.size();
    ColoredPermutation q;
    q.r = p.r;
    q.sigma.reserve(n);
    q.colors.reserve(n);

    // maximal constant-color blocks as [start, end) index ranges
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && p.colors[j] == p.colors[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    auto emit_block = [&](const std::pair<int, int>& blk) {
        for (int i = blk.first; i < blk.second; ++i) {
            q.sigma.push_back(p.sigma[i]);
            q.colors.push_back(p.colors[i]);
        }
    };

    for (size_t b = 0; b < blocks.size();) {
        if (p.colors[blocks[b].first] == 0) {
            emit_block(blocks[b]);
            ++b;
            continue;
        }
        size_t e = b;
        while (e < blocks.size() && p.colors[blocks[e].first] != 0) ++e;
        for (size_t i = e; i-- > b;) emit_block(blocks[i]);
        b = e;
    }
    return q;
}

} // namespace hslab
