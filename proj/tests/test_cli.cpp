#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return text;
}

std::string strip_wall_ms(const std::string& text) {
    std::string out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(pos, end - pos);
        if (line.find("\"wall_ms\"") == std::string::npos) out += line + "\n";
        pos = end + 1;
    }
    return out;
}

} // namespace

TEST_CASE("flag count tables as bare csv") {
    const RunResult r3 = run("table --family flag-eulerian --n 3 --format csv");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out == "1,4,1\n");
    const RunResult r2 = run("table --family flag-eulerian --n 2 --format csv");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == "1,1\n");
    const RunResult colored =
        run("table --family flag-eulerian --n 2 --r 2 --format csv");
    CHECK(colored.exit_code == 0);
    CHECK(colored.out == "1,3,3,1\n");
}

TEST_CASE("slice polynomial tables as json") {
    const RunResult r = run("table --family B --n 2");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["family"] == "B");
    CHECK(doc["n"] == 2);
    CHECK(doc["r"] == 1);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["k"] == 1);
    CHECK(doc["rows"][0]["coeffs"] == nlohmann::json({"0", "1"}));
    CHECK(doc["rows"][1]["k"] == 2);
    CHECK(doc["rows"][1]["coeffs"] == nlohmann::json({"1"}));
}

TEST_CASE("empty product conventions in tables") {
    const RunResult r = run("table --family A --n 0");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["k"] == 0);
    CHECK(doc["rows"][0]["coeffs"] == nlohmann::json({"1"}));

    const RunResult fe = run("table --family flag-eulerian --n 0");
    REQUIRE(fe.exit_code == 0);
    CHECK(nlohmann::json::parse(fe.out)["counts"].empty());
}

TEST_CASE("csv table with a header for polynomial families") {
    const RunResult r = run("table --family B --n 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k,coefficients\n1,0;1\n2,1\n");
}

TEST_CASE("table usage errors exit with 2") {
    CHECK(run("table --family X --n 2").exit_code == 2);
    CHECK(run("table --family A --n 7").exit_code == 2);
    CHECK(run("table --family A --n 2 --r 5").exit_code == 2);
    CHECK(run("table --family A --n 2 --format yaml").exit_code == 2);
    CHECK(run("table --n 2").exit_code == 2);
    CHECK(run("bogus").exit_code == 2);
}

TEST_CASE("ehrhart interpolate and closed-form agree byte for byte") {
    const RunResult a = run("ehrhart --family B --n 2 --k 1");
    const RunResult b = run("ehrhart --family B --n 2 --k 1 --mode closed-form");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["variable"] == "t");
    REQUIRE(doc["coefficients"].size() == 3);
    CHECK(doc["coefficients"][0] == nlohmann::json({{"num", "0"}, {"den", "1"}}));
    CHECK(doc["coefficients"][1] == nlohmann::json({{"num", "1"}, {"den", "2"}}));
    CHECK(doc["coefficients"][2] == nlohmann::json({{"num", "1"}, {"den", "2"}}));
}

TEST_CASE("ehrhart of the open segment is t") {
    const RunResult r = run("ehrhart --family A --n 1 --k 1");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["coefficients"].size() == 2);
    CHECK(doc["coefficients"][0] == nlohmann::json({{"num", "0"}, {"den", "1"}}));
    CHECK(doc["coefficients"][1] == nlohmann::json({{"num", "1"}, {"den", "1"}}));
}

TEST_CASE("ehrhart series mode emits integer numerators") {
    const RunResult r = run("ehrhart --family B --n 1 --r 2 --k 2 --mode series");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["variable"] == "z");
    CHECK(doc["coefficients"] == nlohmann::json({"1"}));
}

TEST_CASE("ehrhart range violations exit with 2") {
    CHECK(run("ehrhart --family B --n 2 --k 3").exit_code == 2);
    CHECK(run("ehrhart --family B --n 2 --k 0").exit_code == 2);
    CHECK(run("ehrhart --family C --n 2 --k 1").exit_code == 2);
    CHECK(run("ehrhart --family A --n 2 --k 1 --mode guess").exit_code == 2);
}

TEST_CASE("verify usage errors exit with 2") {
    CHECK(run("verify nosuch").exit_code == 2);
    CHECK(run("verify all --max-n 9").exit_code == 2);
    CHECK(run("verify all --max-r 0").exit_code == 2);
}

TEST_CASE("vacuous verification still reports every identity") {
    const RunResult r = run("verify all --max-n 0 --max-r 1");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.is_array());
    CHECK(doc.size() >= 15);
    for (const auto& item : doc) {
        CHECK(item["pass"] == true);
        CHECK(!item.contains("witness"));
    }
}

TEST_CASE("series suite covers the generating function relations") {
    const RunResult r = run("verify series --max-n 3 --max-r 3");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    std::vector<std::string> ids;
    for (const auto& item : doc) {
        CHECK(item["suite"] == "series");
        ids.push_back(item["id"].get<std::string>());
    }
    for (const char* want : {"series-b-from-a", "series-c-from-a", "ogf-a",
                             "ogf-c", "foata-han"})
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
}

TEST_CASE("suite selection filters and --out writes the report") {
    const RunResult r =
        run("verify permstats --max-n 2 --max-r 2 --out cli_report.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const auto doc = nlohmann::json::parse(slurp("cli_report.json"));
    CHECK(doc.size() >= 4);
    for (const auto& item : doc) CHECK(item["suite"] == "permstats");
    std::remove("cli_report.json");
}

TEST_CASE("reports are byte-deterministic apart from timings") {
    const RunResult a = run("verify lattice --max-n 2 --max-r 2");
    const RunResult b = run("verify lattice --max-n 2 --max-r 2");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_wall_ms(a.out) == strip_wall_ms(b.out));
}

TEST_CASE("golden fixtures pass clean and fail flipped") {
    CHECK(run("table --family flag-eulerian --n 3 --out cli_golden.json")
              .exit_code == 0);
    const RunResult clean =
        run("verify permstats --max-n 1 --max-r 1 --golden cli_golden.json");
    CHECK(clean.exit_code == 0);
    {
        const auto doc = nlohmann::json::parse(clean.out);
        bool seen = false;
        for (const auto& item : doc)
            if (item["id"] == "golden-table") {
                seen = true;
                CHECK(item["pass"] == true);
            }
        CHECK(seen);
    }

    std::string text = slurp("cli_golden.json");
    const size_t at = text.find("\"4\"");
    REQUIRE(at != std::string::npos);
    text.replace(at, 3, "\"5\"");
    std::ofstream(std::string("cli_golden.json"), std::ios::binary) << text;

    const RunResult flipped =
        run("verify permstats --max-n 1 --max-r 1 --golden cli_golden.json");
    CHECK(flipped.exit_code == 1);
    const auto doc = nlohmann::json::parse(flipped.out);
    bool seen = false;
    for (const auto& item : doc)
        if (item["id"] == "golden-table") {
            seen = true;
            CHECK(item["pass"] == false);
            REQUIRE(item.contains("witness"));
            const auto w = item["witness"].get<std::string>();
            CHECK(w.find("k=2") != std::string::npos);
        }
    CHECK(seen);
    std::remove("cli_golden.json");

    CHECK(run("verify permstats --max-n 1 --golden missing.json").exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli> [doctest args]\n");
        return 1;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
