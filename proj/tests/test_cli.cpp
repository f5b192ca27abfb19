#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "amt/io.hpp"
#include "support/fixtures.hpp"

using namespace amt;
using namespace amt::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(AMT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "amt-cli-tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_fixture(const std::string& name, const std::string& text) {
    fs::path p = temp_dir() / name;
    write_text_file(p, text);
    return p;
}

}  // namespace

TEST_CASE("validate: ok and violation listing") {
    fs::path good = write_fixture("simplex2.json", write_complex(simplex2()));
    CliResult ok = run_cli("validate " + good.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "ok\n");

    fs::path bad = write_fixture("corrupt.json", write_complex(simplex2_corrupt()));
    CliResult fail = run_cli("validate " + bad.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("d^2 != 0 at (v2, 012)") != std::string::npos);

    CHECK(run_cli("validate " + (temp_dir() / "missing.json").string()).exit_code == 2);
}

TEST_CASE("match: sizes and output file") {
    fs::path c = write_fixture("circle.json", write_complex(circle()));
    fs::path m = temp_dir() / "circle_matching.json";
    CliResult r = run_cli("match " + c.string() + " --seed 4 --out " + m.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "|M| = 2\n|M0| = 2\n");
    Matching parsed = read_matching_file(m);
    CHECK(parsed.size() == 2);
}

TEST_CASE("reduce: both engines, reduced output, maps output") {
    fs::path c = write_fixture("interval.json", write_complex(interval()));
    fs::path out = temp_dir() / "interval_reduced.json";
    fs::path maps = temp_dir() / "interval_maps.json";
    CliResult r = run_cli("reduce " + c.string() + " --engine both --seed 2 --out " + out.string() +
                          " --maps " + maps.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("reduced 3 cells -> 1 cells") != std::string::npos);
    CHECK(r.output.find("engines agree") != std::string::npos);
    BasedComplex reduced = read_complex_file(out);
    CHECK(reduced.cells().size() == 1);
    CHECK(read_text_file(maps).find("\"g\"") != std::string::npos);

    CHECK(run_cli("reduce " + c.string() + " --engine gamma").exit_code == 0);
    CHECK(run_cli("reduce " + c.string() + " --engine hpt").exit_code == 0);
    CHECK(run_cli("reduce " + c.string() + " --engine nope").exit_code == 2);
}

TEST_CASE("reduce rejects an invalid matching file with exit 1") {
    fs::path c = write_fixture("fourcycle.json", write_complex(four_cycle()));
    fs::path m = write_fixture("fourcycle_matching.json",
                               write_matching(Matching({{"a", "x"}, {"b", "y"}})));
    CliResult r = run_cli("reduce " + c.string() + " --matching " + m.string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify prints the identity report") {
    fs::path c = write_fixture("circle.json", write_complex(circle()));
    fs::path m = write_fixture("circle_m.json",
                               write_matching(Matching({{"01", "v1"}, {"02", "v2"}})));
    CliResult r = run_cli("verify " + c.string() + " --matching " + m.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("engines agree: ok") != std::string::npos);
    CHECK(r.output.find("fg = 1: ok") != std::string::npos);
    CHECK(r.output.find("gf = 1 + dh + hd: ok") != std::string::npos);
    CHECK(r.output.find("homology preserved: ok") != std::string::npos);
}

TEST_CASE("homology output") {
    fs::path c = write_fixture("rp2.json", write_complex(rp2()));
    CliResult r = run_cli("homology " + c.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "deg 0: Z^1\ndeg 1: Z/2\n");

    fs::path t = write_fixture("torus.json", write_complex(torus7()));
    CliResult rt = run_cli("homology " + t.string());
    CHECK(rt.output == "deg 0: Q^1\ndeg 1: Q^2\ndeg 2: Q^1\n");
}

TEST_CASE("from-simplicial pipes into the other commands") {
    fs::path facets = write_fixture("circle.txt", "0 1\n0 2\n1 2\n");
    fs::path out = temp_dir() / "circle_from_facets.json";
    CHECK(run_cli("from-simplicial " + facets.string() + " --ring F5 --out " + out.string())
              .exit_code == 0);
    BasedComplex c = read_complex_file(out);
    CHECK(c.ring_spec() == RingSpec::prime_field(5));
    CHECK(c.cells().size() == 6);
    CHECK(run_cli("reduce " + out.string()).exit_code == 0);
    CHECK(run_cli("from-simplicial " + facets.string() + " --ring F4").exit_code == 2);
}

TEST_CASE("export-dot writes to stdout") {
    fs::path c = write_fixture("interval.json", write_complex(interval()));
    CliResult plain = run_cli("export-dot " + c.string());
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("digraph G {") == 0);
    CHECK(plain.output.find("doublecircle") == std::string::npos);

    fs::path m = write_fixture("interval_m.json", write_matching(Matching({{"a", "y"}})));
    CliResult with = run_cli("export-dot " + c.string() + " --matching " + m.string());
    CHECK(with.output.find("[style=bold]") != std::string::npos);
    CHECK(with.output.find("doublecircle") != std::string::npos);
}

TEST_CASE("gen-random round trips through validate and reduce") {
    fs::path out = temp_dir() / "random.json";
    CliResult gen = run_cli(
        "gen-random --cells 18 --max-degree 4 --max-rank 2 --density 0.5 --ring F5 --seed 23 "
        "--out " +
        out.string());
    CHECK(gen.exit_code == 0);
    CHECK(run_cli("validate " + out.string()).output == "ok\n");
    CliResult red = run_cli("reduce " + out.string() + " --engine both");
    CHECK(red.exit_code == 0);
    CHECK(red.output.find("engines agree") != std::string::npos);

    CHECK(run_cli("gen-random --cells 5 --max-degree 2 --max-rank 1 --density 2.0 --ring Z "
                  "--seed 1")
              .exit_code == 2);
}

TEST_CASE("argument errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    CHECK(run_cli("reduce").exit_code == 2);  // missing required argument
}
