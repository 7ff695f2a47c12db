#include <CLI11.hpp>
#include <json.hpp>

#include <hslab/closedform.hpp>
#include <hslab/lattice.hpp>
#include <hslab/permstats.hpp>
#include <hslab/verify.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using ordered_json = nlohmann::ordered_json;
using hslab::Int;
using hslab::IntPolynomial;
using hslab::RatPolynomial;

constexpr int kMaxN = 6;
constexpr int kMaxR = 4;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return usage_error("cannot open output file " + out_path);
    out << text;
    if (!out.good()) return usage_error("write failed for " + out_path);
    return 0;
}

ordered_json coeff_strings(const IntPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

ordered_json coeff_rationals(const RatPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const hslab::Rat& c : p.coeffs())
        arr.push_back(ordered_json{{"num", c.get_num().get_str()},
                                   {"den", c.get_den().get_str()}});
    return arr;
}

ordered_json build_table(const std::string& family, int n, int r) {
    ordered_json out;
    out["family"] = family;
    out["n"] = n;
    out["r"] = r;
    if (family == "flag-eulerian") {
        ordered_json counts = ordered_json::array();
        for (long k = 1; k <= static_cast<long>(r) * n; ++k)
            counts.push_back(hslab::flag_eulerian(n, r, k).get_str());
        out["counts"] = std::move(counts);
        return out;
    }
    ordered_json rows = ordered_json::array();
    if (n == 0) {
        rows.push_back(ordered_json{{"k", 0}, {"coeffs", {"1"}}});
    } else {
        for (long k = 1; k <= static_cast<long>(r) * n; ++k) {
            const IntPolynomial p = family == "A" ? hslab::A_polynomial(n, r, k)
                                                  : hslab::B_polynomial(n, r, k);
            rows.push_back(ordered_json{{"k", k}, {"coeffs", coeff_strings(p)}});
        }
    }
    out["rows"] = std::move(rows);
    return out;
}

std::string table_csv(const ordered_json& table) {
    std::ostringstream out;
    if (table.contains("counts")) {
        const auto& counts = table["counts"];
        for (size_t i = 0; i < counts.size(); ++i)
            out << (i ? "," : "") << counts[i].get<std::string>();
        out << "\n";
        return out.str();
    }
    out << "k,coefficients\n";
    for (const auto& row : table["rows"]) {
        out << row["k"].get<long>() << ",";
        const auto& coeffs = row["coeffs"];
        for (size_t i = 0; i < coeffs.size(); ++i)
            out << (i ? ";" : "") << coeffs[i].get<std::string>();
        out << "\n";
    }
    return out.str();
}

ordered_json verdicts_json(const std::vector<hslab::VerdictReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json item;
        item["id"] = rep.id;
        item["suite"] = rep.suite;
        item["params"] = rep.params;
        item["pass"] = rep.pass;
        if (rep.witness) item["witness"] = *rep.witness;
        item["wall_ms"] = rep.wall_ms;
        arr.push_back(std::move(item));
    }
    return arr;
}

// Compares one stored table against a recomputation; returns the first
// difference, if any. Shape errors are reported via the int result:
// 0 = compared, 2 = malformed fixture.
int check_golden_table(const ordered_json& given,
                       std::optional<std::string>& witness) {
    if (!given.is_object() || !given.contains("family") ||
        !given["family"].is_string() || !given.contains("n") ||
        !given.contains("r"))
        return 2;
    const std::string family = given["family"].get<std::string>();
    if (family != "A" && family != "B" && family != "flag-eulerian") return 2;
    int n, r;
    try {
        n = given["n"].get<int>();
        r = given["r"].get<int>();
    } catch (const ordered_json::exception&) {
        return 2;
    }
    if (n < 0 || n > kMaxN || r < 1 || r > kMaxR) return 2;
    const ordered_json expected = build_table(family, n, r);
    std::ostringstream os;
    os << family << " n=" << n << " r=" << r;
    if (family == "flag-eulerian") {
        if (!given.contains("counts") || !given["counts"].is_array()) return 2;
        const auto& got = given["counts"];
        const auto& want = expected["counts"];
        if (got.size() != want.size()) {
            os << ": " << got.size() << " counts, expected " << want.size();
            witness = os.str();
            return 0;
        }
        for (size_t i = 0; i < want.size(); ++i)
            if (got[i] != want[i]) {
                os << " k=" << i + 1 << ": " << got[i].dump()
                   << " vs expected " << want[i].dump();
                witness = os.str();
                return 0;
            }
        return 0;
    }
    if (!given.contains("rows") || !given["rows"].is_array()) return 2;
    const auto& got = given["rows"];
    const auto& want = expected["rows"];
    if (got.size() != want.size()) {
        os << ": " << got.size() << " rows, expected " << want.size();
        witness = os.str();
        return 0;
    }
    for (size_t i = 0; i < want.size(); ++i) {
        if (!got[i].is_object() || !got[i].contains("k") ||
            !got[i].contains("coeffs"))
            return 2;
        if (got[i]["k"] != want[i]["k"]) {
            os << " row " << i << ": k=" << got[i]["k"].dump()
               << " vs expected " << want[i]["k"].dump();
            witness = os.str();
            return 0;
        }
        const auto& gc = got[i]["coeffs"];
        const auto& wc = want[i]["coeffs"];
        if (gc != wc) {
            os << " k=" << want[i]["k"].get<long>() << ": coeffs " << gc.dump()
               << " vs expected " << wc.dump();
            witness = os.str();
            return 0;
        }
    }
    return 0;
}

int run_table(const std::string& family, int n, int r,
              const std::string& format, const std::string& out_path) {
    if (family != "A" && family != "B" && family != "flag-eulerian")
        return usage_error("unknown family " + family);
    if (n < 0 || n > kMaxN)
        return usage_error("n must be in 0.." + std::to_string(kMaxN));
    if (r < 1 || r > kMaxR)
        return usage_error("r must be in 1.." + std::to_string(kMaxR));
    if (format != "json" && format != "csv")
        return usage_error("unknown format " + format);
    const ordered_json table = build_table(family, n, r);
    const std::string text =
        format == "json" ? table.dump(2) + "\n" : table_csv(table);
    return emit(text, out_path);
}

int run_verify(const std::string& suite, int max_n, int max_r,
               const std::string& golden_path, const std::string& out_path) {
    if (!hslab::suite_known(suite)) return usage_error("unknown suite " + suite);
    if (max_n < 0 || max_n > kMaxN)
        return usage_error("max-n must be in 0.." + std::to_string(kMaxN));
    if (max_r < 1 || max_r > kMaxR)
        return usage_error("max-r must be in 1.." + std::to_string(kMaxR));

    hslab::VerifyOptions opts;
    opts.suite = suite;
    opts.max_n = max_n;
    opts.max_r = max_r;
    std::vector<hslab::VerdictReport> reports = hslab::run_verification(opts);

    if (!golden_path.empty()) {
        std::ifstream in(golden_path, std::ios::binary);
        if (!in) return usage_error("cannot open golden file " + golden_path);
        ordered_json fixture;
        try {
            in >> fixture;
        } catch (const ordered_json::exception& ex) {
            return usage_error(std::string("golden file is not valid JSON: ") +
                               ex.what());
        }
        std::vector<ordered_json> tables;
        if (fixture.is_array())
            tables.assign(fixture.begin(), fixture.end());
        else
            tables.push_back(fixture);
        hslab::VerdictReport rep;
        rep.id = "golden-table";
        rep.suite = "golden";
        rep.params = golden_path;
        rep.pass = true;
        for (const auto& table : tables) {
            std::optional<std::string> witness;
            if (check_golden_table(table, witness) != 0)
                return usage_error("golden file has unexpected shape");
            if (witness) {
                rep.pass = false;
                rep.witness = witness;
                break;
            }
        }
        reports.push_back(std::move(rep));
    }

    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep.pass;
    const int rc = emit(verdicts_json(reports).dump(2) + "\n", out_path);
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

int run_ehrhart(const std::string& family, int n, int r, long k,
                const std::string& mode, const std::string& out_path) {
    if (family != "A" && family != "B")
        return usage_error("unknown family " + family);
    if (n < 1 || n > kMaxN)
        return usage_error("n must be in 1.." + std::to_string(kMaxN));
    if (r < 1 || r > kMaxR)
        return usage_error("r must be in 1.." + std::to_string(kMaxR));
    if (k < 1 || k > static_cast<long>(r) * n)
        return usage_error("k must be in 1..r*n");
    if (mode != "interpolate" && mode != "closed-form" && mode != "series")
        return usage_error("unknown mode " + mode);

    const hslab::SliceRegion region = family == "A"
                                          ? hslab::SliceRegion::a_slice(n, r, k)
                                          : hslab::SliceRegion::b_slice(n, r, k);
    ordered_json out;
    out["family"] = family;
    out["n"] = n;
    out["r"] = r;
    out["k"] = k;
    if (mode == "series") {
        out["variable"] = "z";
        out["coefficients"] = coeff_strings(hslab::ehrhart_series(region));
    } else {
        const RatPolynomial p = mode == "interpolate"
                                    ? hslab::ehrhart_polynomial(region)
                                    : (family == "A"
                                           ? hslab::ehrhart_A_closed(n, r, k)
                                           : hslab::ehrhart_B_closed(n, r, k));
        out["variable"] = "t";
        out["coefficients"] = coeff_rationals(p);
    }
    return emit(out.dump(2) + "\n", out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, Ehrhart data, and identity verification for "
                 "hypersimplex slices and colored permutations"};
    app.require_subcommand(1);

    std::string family, format = "json", out_path, mode = "interpolate";
    std::string suite = "all", golden_path;
    int n = 0, r = 1, max_n = 5, max_r = 3;
    long k = 0;

    CLI::App* table = app.add_subcommand("table", "Emit a polynomial or count table");
    table->add_option("--family", family, "A, B, or flag-eulerian")->required();
    table->add_option("--n", n, "size parameter")->required();
    table->add_option("--r", r, "number of colors (default 1)");
    table->add_option("--format", format, "json or csv (default json)");
    table->add_option("--out", out_path, "write output to a file");

    CLI::App* verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("--suite,suite", suite,
                       "all, permstats, bijections, lattice, closedform, "
                       "series, or tableaux (default all)");
    verify->add_option("--max-n", max_n, "size bound (default 5)");
    verify->add_option("--max-r", max_r, "color bound (default 3)");
    verify->add_option("--golden", golden_path,
                       "also check a stored table fixture (JSON)");
    verify->add_option("--out", out_path, "write the JSON report to a file");

    CLI::App* ehrhart =
        app.add_subcommand("ehrhart", "Emit one slice's counting polynomial");
    ehrhart->add_option("--family", family, "A or B")->required();
    ehrhart->add_option("--n", n, "dimension")->required();
    ehrhart->add_option("--r", r, "number of colors (default 1)");
    ehrhart->add_option("--k", k, "slice level, 1..r*n")->required();
    ehrhart->add_option("--mode", mode,
                        "interpolate, closed-form, or series (default interpolate)");
    ehrhart->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(table)) return run_table(family, n, r, format, out_path);
        if (app.got_subcommand(verify))
            return run_verify(suite, max_n, max_r, golden_path, out_path);
        if (app.got_subcommand(ehrhart))
            return run_ehrhart(family, n, r, k, mode, out_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return usage_error("no subcommand");
}
