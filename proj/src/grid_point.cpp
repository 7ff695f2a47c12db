#include <hslab/grid_point.hpp>

#include <sstream>

namespace hslab {

GridPoint::GridPoint(std::vector<Rat> v, int cube, long denom)
    : coords(std::move(v)), r(cube), t(denom) {
    validate(*this);
}

std::string GridPoint::to_string() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < size(); ++i) {
        if (i) out << ", ";
        out << coords[i].get_str();
    }
    out << ")";
    return out.str();
}

void validate(const GridPoint& p) {
    if (p.t < 1) throw std::invalid_argument("grid point: t must be >= 1");
    if (p.r < 1) throw std::invalid_argument("grid point: r must be >= 1");
    for (const Rat& c : p.coords) {
        Rat scaled = c * p.t;
        if (scaled.get_den() != 1)
            throw std::invalid_argument("grid point: coordinate " + c.get_str() +
                                        " not on the 1/" + std::to_string(p.t) + " grid");
    }
}

void for_each_grid_point(int n, int r, long t,
                         const std::function<void(const GridPoint&)>& fn) {
    if (n < 0 || r < 1 || t < 1)
        throw std::invalid_argument("for_each_grid_point: need n >= 0, r >= 1, t >= 1");
    GridPoint p;
    p.r = r;
    p.t = t;
    p.coords.assign(n, Rat(0));
    std::vector<long> num(n, 0);  // numerators over t
    const long top = static_cast<long>(r) * t - 1;
    while (true) {
        fn(p);
        int i = n - 1;
        while (i >= 0 && num[i] == top) {
            num[i] = 0;
            p.coords[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++num[i];
        p.coords[i] = make_rat(Int(num[i]), Int(t));
    }
}

} // namespace hslab
