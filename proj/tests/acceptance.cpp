// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit if
// any criterion fails. argv[1] is the CLI binary.
#include <hslab/bijections.hpp>
#include <hslab/closedform.hpp>
#include <hslab/lattice.hpp>
#include <hslab/permstats.hpp>
#include <hslab/series.hpp>
#include <hslab/tableaux.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace hslab;
using nlohmann::json;

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult res;
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

using Detail = std::optional<std::string>;

std::vector<int> inverse_of(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

// ---- criterion 1 ----
Detail flag_table_baseline() {
    const RunResult r3 = run_cli("table --family flag-eulerian --n 3 --r 1 --format csv");
    if (r3.exit_code != 0) return "n=3 run exited " + std::to_string(r3.exit_code);
    if (r3.out != "1,4,1\n") return "n=3 emitted " + r3.out;
    const RunResult r2 = run_cli("table --family flag-eulerian --n 2 --r 1 --format csv");
    if (r2.exit_code != 0) return "n=2 run exited " + std::to_string(r2.exit_code);
    if (r2.out != "1,1\n") return "n=2 emitted " + r2.out;
    return std::nullopt;
}

// ---- criterion 2 ----
Detail cell_lemmas() {
    for (int n = 1; n <= 5; ++n)
        for (bool closed : {true, false}) {
            const auto all = std_cell_series_all(n, closed);
            if (Int(all.size()) != factorial(n))
                return "n=" + std::to_string(n) + ": missing cells";
            for (const auto& [sigma, series] : all) {
                const long d = des_perm(inverse_of(sigma)) + (closed ? 0 : 1);
                if (!(series == IntPolynomial::monomial(Int(1), d))) {
                    std::ostringstream os;
                    os << (closed ? "closed" : "half-open") << " cell at n=" << n
                       << ": " << series.to_string() << " vs z^" << d;
                    return os.str();
                }
            }
        }
    return std::nullopt;
}

// ---- criteria 3 and 4 ----
Detail fourway(int n, int r) {
    const long rn = static_cast<long>(r) * n;
    std::map<long, IntPolynomial> star, plain, li;
    for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
        star[rn - fexc(p)].add_to_coeff(ceil_div(fdes_star(p), r), Int(1));
        plain[rn - fexc(p)].add_to_coeff(ceil_div(fdes(p), r), Int(1));
        li[rn - cdes(p)].add_to_coeff(cover(p) + cef(p), Int(1));
    });
    for (long k = 1; k <= rn; ++k) {
        const IntPolynomial b = B_polynomial(n, r, k);
        const struct {
            const char* name;
            const std::map<long, IntPolynomial>* m;
        } sides[] = {{"fexc/ceil-fdes*", &star},
                     {"fexc/ceil-fdes", &plain},
                     {"cdes/cover+cef", &li}};
        for (const auto& s : sides) {
            const auto it = s.m->find(k);
            const IntPolynomial got = it == s.m->end() ? IntPolynomial() : it->second;
            if (!(b == got)) {
                std::ostringstream os;
                os << "n=" << n << " r=" << r << " k=" << k << ": lattice "
                   << b.to_string() << " vs " << s.name << " " << got.to_string();
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Detail fourway_r1() {
    for (int n = 1; n <= 5; ++n)
        if (auto d = fourway(n, 1)) return d;
    return std::nullopt;
}

Detail fourway_colored() {
    for (int r = 2; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n)
            if (auto d = fourway(n, r)) return d;
    return std::nullopt;
}

// ---- criterion 5 ----
Detail open_slice_descents() {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::map<long, IntPolynomial> by_k;
            for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                by_k[fdes(p) + 1].add_to_coeff(des_perm(inverse_of(p.sigma)) + 1,
                                               Int(1));
            });
            for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
                const auto it = by_k.find(k);
                const IntPolynomial rhs =
                    it == by_k.end() ? IntPolynomial() : it->second;
                if (!(A_polynomial(n, r, k) == rhs)) {
                    std::ostringstream os;
                    os << "n=" << n << " r=" << r << " k=" << k;
                    return os.str();
                }
            }
        }
    return std::nullopt;
}

// ---- criterion 6 ----
Detail closed_from_open() {
    const IntPolynomial one_minus_z{1, -1};
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for (long k = 0; k <= static_cast<long>(r) * n; ++k) {
                IntPolynomial rhs, pw{1};
                for (int j = 0; j <= n; ++j) {
                    rhs = rhs + pw * A_polynomial(n - j, r, k - static_cast<long>(r) * j) *
                                    binomial(n, j);
                    pw = pw * one_minus_z;
                }
                if (!(B_polynomial(n, r, k) == rhs)) {
                    std::ostringstream os;
                    os << "termwise identity fails at n=" << n << " r=" << r
                       << " k=" << k;
                    return os.str();
                }
            }
    for (int r = 1; r <= 3; ++r)
        if (auto w = verify_exp_relation(build_B(r, 4), build_A(r, 4), r))
            return "series relation r=" + std::to_string(r) + ": " + *w;
    return std::nullopt;
}

// ---- criterion 7 ----
Detail excedance_series_from_open() {
    for (int r = 1; r <= 3; ++r)
        if (auto w = verify_exp_relation(build_C(r, 4), build_A(r, 4), r))
            return "r=" + std::to_string(r) + ": " + *w;
    return std::nullopt;
}

// ---- criterion 8 ----
Detail generating_function_checks() {
    for (int r = 1; r <= 3; ++r) {
        if (auto w = verify_foata_han(r, 3, 3 * r + 4))
            return "excedance kernel r=" + std::to_string(r) + ": " + *w;
        if (auto w = verify_ogf(OgfSide::A, r, 3, 7))
            return "open-slice ogf r=" + std::to_string(r) + ": " + *w;
        if (auto w = verify_ogf(OgfSide::C, r, 3, 7))
            return "ceil-statistic ogf r=" + std::to_string(r) + ": " + *w;
    }
    return std::nullopt;
}

// ---- criterion 9 ----
Detail closed_forms() {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
                if (!(ehrhart_A_closed(n, r, k) ==
                      ehrhart_polynomial(SliceRegion::a_slice(n, r, k)))) {
                    std::ostringstream os;
                    os << "open slice n=" << n << " r=" << r << " k=" << k;
                    return os.str();
                }
                if (!(ehrhart_B_closed(n, r, k) ==
                      ehrhart_polynomial(SliceRegion::b_slice(n, r, k)))) {
                    std::ostringstream os;
                    os << "closed slice n=" << n << " r=" << r << " k=" << k;
                    return os.str();
                }
            }
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r)
            for (long k = -1; k <= static_cast<long>(r) * n + 1; ++k)
                if (flag_eulerian_closed(n, r, k) != flag_eulerian(n, r, k)) {
                    std::ostringstream os;
                    os << "flag count n=" << n << " r=" << r << " k=" << k;
                    return os.str();
                }
    const IntPolynomial s6 = eulerian_polynomial(6);
    for (long k = 1; k <= 6; ++k)
        if (eulerian_closed(6, k) != s6.coeff(k - 1))
            return "descent count closed form at n=6, k=" + std::to_string(k);
    return std::nullopt;
}

// ---- criterion 10 ----
Detail bijection_suite() {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (long t = 1; t <= 3; ++t) {
                std::map<Rat, long> levels, sums;
                Detail d;
                for_each_grid_point(n, r, t, [&](const GridPoint& a) {
                    if (d) return;
                    if (!(phi_inverse(phi(a)) == a) || !(phi(phi_inverse(a)) == a)) {
                        d = "round trip fails at " + a.to_string();
                        return;
                    }
                    const GridPoint b = phi(a);
                    Rat total(0);
                    for (const Rat& c : b.coords) total += c;
                    if (total != fdes_point(a)) {
                        d = "sum transport fails at " + a.to_string();
                        return;
                    }
                    levels[fdes_point(a)] += 1;
                    sums[total] += 1;
                });
                if (d) return d;
                if (levels != sums) {
                    std::ostringstream os;
                    os << "level sets differ on the n=" << n << " r=" << r
                       << " t=" << t << " grid";
                    return os.str();
                }
            }

    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::map<std::vector<int>, std::set<std::vector<int>>> im, im_star;
            std::map<std::vector<int>, long> sigma_count;
            Detail d;
            for_each_colored_permutation(n, r, [&](const ColoredPermutation& p) {
                if (d) return;
                sigma_count[p.sigma] += 1;
                const ColoredPermutation q = alpha(p);
                const ColoredPermutation s = alpha_star(p);
                if (q.sigma != p.sigma || s.sigma != p.sigma) {
                    d = "recoloring moved sigma at " + p.to_string();
                    return;
                }
                if (fdes(q) != cdes(p) || fdes_star(s) != cdes(p)) {
                    d = "statistic transport fails at " + p.to_string();
                    return;
                }
                im[p.sigma].insert(q.colors);
                im_star[p.sigma].insert(s.colors);

                const ColoredPermutation w = block_involution(p);
                if (!(block_involution(w) == p)) {
                    d = "not an involution at " + p.to_string();
                    return;
                }
                if (fexc(w) != fexc(p)) {
                    d = "fexc not preserved at " + p.to_string();
                    return;
                }
                if (ceil_div(fdes(p), r) != ceil_div(fdes_star(w), r)) {
                    d = "ceil swap fails at " + p.to_string();
                    return;
                }
            });
            if (d) return d;
            for (const auto& [sigma, count] : sigma_count)
                if (Int(im[sigma].size()) != count || Int(im_star[sigma].size()) != count) {
                    std::ostringstream os;
                    os << "recoloring not bijective at n=" << n << " r=" << r;
                    return os.str();
                }
        }

    const ColoredPermutation in({8, 2, 7, 1, 4, 3, 5, 6},
                                {1, 0, 2, 2, 1, 0, 1, 1}, 3);
    const ColoredPermutation want({8, 2, 4, 7, 1, 3, 5, 6},
                                  {1, 0, 1, 2, 2, 0, 1, 1}, 3);
    if (!(block_involution(in) == want))
        return "worked n=8 example maps to " + block_involution(in).to_string();
    return std::nullopt;
}

// ---- criterion 11 ----
Detail joint_split_witness(std::string& note) {
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto lhs = joint_distribution(n, r, Statistic::fexc, Statistic::fdes);
            const auto rhs =
                joint_distribution(n, r, Statistic::fexc, Statistic::fdes_star);
            if (lhs == rhs) continue;
            std::set<std::pair<long, long>> keys;
            for (const auto& [key, v] : lhs) keys.insert(key);
            for (const auto& [key, v] : rhs) keys.insert(key);
            for (const auto& key : keys) {
                const auto l = lhs.find(key), h = rhs.find(key);
                const Int lv = l == lhs.end() ? Int(0) : l->second;
                const Int rv = h == rhs.end() ? Int(0) : h->second;
                if (lv != rv) {
                    std::ostringstream os;
                    os << "witness n=" << n << " r=" << r << " at (fexc=" << key.first
                       << ", value=" << key.second << "): " << lv.get_str() << " vs "
                       << rv.get_str();
                    note = os.str();
                    return std::nullopt;
                }
            }
        }
    return "no split found for n <= 4, r <= 3";
}

// ---- criterion 12 ----
Detail tableau_checks() {
    for (int n = 1; n <= 7; ++n)
        for (const auto& parts : partitions_of(n))
            if (auto w = verify_sytdes(YoungDiagram(parts)))
                return "shape " + YoungDiagram(parts).to_string() + ": " + *w;
    for (int n = 1; n <= 5; ++n) {
        const auto lhs = syt_pair_bivariate(n);
        std::vector<IntPolynomial> rhs(n + 2);
        for_each_colored_permutation(n, 1, [&](const ColoredPermutation& p) {
            rhs[des_perm(p.sigma) + 1].add_to_coeff(
                des_perm(inverse_of(p.sigma)) + 1, Int(1));
        });
        for (size_t a = 0; a < rhs.size(); ++a) {
            const IntPolynomial l = a < lhs.size() ? lhs[a] : IntPolynomial();
            if (!(l == rhs[a]))
                return "bivariate mismatch at n=" + std::to_string(n) + " y^" +
                       std::to_string(a);
        }
    }
    return std::nullopt;
}

// ---- criterion 13 ----
Detail end_to_end() {
    const RunResult full = run_cli("verify all --max-n 4 --max-r 3");
    if (full.exit_code != 0)
        return "verify all --max-n 4 --max-r 3 exited " +
               std::to_string(full.exit_code);

    const std::string fixture = "acceptance_fixture.json";
    for (const std::string table_args :
         {std::string("table --family A --n 3 --r 2 --out ") + fixture,
          std::string("table --family flag-eulerian --n 3 --r 1 --out ") + fixture}) {
        if (run_cli(table_args).exit_code != 0) return "fixture generation failed";
        std::ifstream in(fixture);
        json doc;
        in >> doc;
        in.close();

        // flip every stored coefficient, one run per flip
        std::vector<json*> cells;
        if (doc.contains("rows"))
            for (auto& row : doc["rows"])
                for (auto& c : row["coeffs"]) cells.push_back(&c);
        else
            for (auto& c : doc["counts"]) cells.push_back(&c);
        if (cells.empty()) return "fixture has no coefficients";
        for (size_t i = 0; i < cells.size(); ++i) {
            const std::string original = cells[i]->get<std::string>();
            *cells[i] = "9" + original;
            std::ofstream(fixture, std::ios::binary) << doc.dump(2) << "\n";
            const RunResult r =
                run_cli("verify permstats --max-n 0 --max-r 1 --golden " + fixture);
            *cells[i] = original;
            if (r.exit_code != 1)
                return "flip " + std::to_string(i) + " exited " +
                       std::to_string(r.exit_code) + ", expected 1";
            const json report = json::parse(r.out);
            bool witnessed = false;
            for (const auto& item : report)
                if (item["id"] == "golden-table" && item.contains("witness"))
                    witnessed = true;
            if (!witnessed)
                return "flip " + std::to_string(i) + " produced no witness";
        }
    }
    std::remove(fixture.c_str());
    return std::nullopt;
}

struct Criterion {
    int number;
    const char* label;
    long limit_ms; // 0 = no stated ceiling
    std::function<Detail(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 1;
    }
    g_cli = argv[1];

    auto plain = [](Detail (*fn)()) {
        return [fn](std::string&) { return fn(); };
    };
    const std::vector<Criterion> criteria = {
        {1, "flag count table baseline", 1000, plain(flag_table_baseline)},
        {2, "cell series lemmas, n <= 5", 30000, plain(cell_lemmas)},
        {3, "closed slices match three statistics, r=1, n <= 5", 60000,
         plain(fourway_r1)},
        {4, "closed slices match three statistics, r=2,3, n <= 4", 120000,
         plain(fourway_colored)},
        {5, "open slices match flag descent distributions, n <= 5, r <= 3",
         60000, plain(open_slice_descents)},
        {6, "closed slices from open slices, termwise and as series", 0,
         plain(closed_from_open)},
        {7, "excedance series from open slices", 0,
         plain(excedance_series_from_open)},
        {8, "kernel and ordinary generating function checks", 0,
         plain(generating_function_checks)},
        {9, "closed forms match interpolation and enumeration", 0,
         plain(closed_forms)},
        {10, "bijection suite", 0, plain(bijection_suite)},
        {11, "joint distributions split over the pairing statistic", 0,
         joint_split_witness},
        {12, "tableau descent series and pair bivariate identity", 0,
         plain(tableau_checks)},
        {13, "end-to-end verification and tamper detection", 300000,
         plain(end_to_end)},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        Detail detail;
        try {
            detail = c.run(note);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (!detail && c.limit_ms > 0 && ms > c.limit_ms) {
            std::ostringstream os;
            os << "took " << ms << " ms, ceiling " << c.limit_ms << " ms";
            detail = os.str();
        }
        const bool ok = !detail.has_value();
        all_pass = all_pass && ok;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number
                  << ": " << c.label;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << " (" << ms << " ms)";
        if (detail) std::cout << ": " << *detail;
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}
