#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

/// Runs the built binary, capturing stdout; stderr is dropped.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(VCR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("vcr_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("gen emits exact matrix text") {
    const CliResult r = run_cli("gen matching:n=3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3 3\n100\n010\n001\n");

    const CliResult hg = run_cli("gen half_graph:n=2");
    CHECK(hg.out == "2 2\n11\n01\n");

    CHECK(run_cli("gen matching:n=oops").exit_code == 1);
    CHECK(run_cli("gen nosuch:n=3").exit_code == 1);
}

TEST_CASE("extract, verify and the exit code contract") {
    TempDir tmp;
    const std::string matrix = tmp.file("m.txt");
    const std::string cert = tmp.file("m.cert");
    REQUIRE(run_cli("gen matching:n=8 --out " + matrix).exit_code == 0);

    const CliResult ex = run_cli("extract " + matrix + " --out " + cert);
    CHECK(ex.exit_code == 0);
    CHECK(ex.out.find("final_size=4\n") != std::string::npos);
    CHECK(ex.out.find("vacuous=false\n") != std::string::npos);

    CHECK(run_cli("verify " + matrix + " " + cert).exit_code == 0);

    SUBCASE("tampering with the pattern is caught") {
        std::string tampered = slurp(cert);
        const auto pos = tampered.find("pattern 0 1 0");
        REQUIRE(pos != std::string::npos);
        tampered.replace(pos, 13, "pattern 1 0 1");
        spit(cert, tampered);
        const CliResult v = run_cli("verify " + matrix + " " + cert);
        CHECK(v.exit_code == 1);
        CHECK(v.out.find("verified=false\n") != std::string::npos);
    }

    SUBCASE("out-of-range index is caught") {
        std::string tampered = slurp(cert);
        const auto pos = tampered.find("rows");
        tampered.replace(pos, 6, "rows 9");
        spit(cert, tampered);
        CHECK(run_cli("verify " + matrix + " " + cert).exit_code == 1);
    }

    SUBCASE("vacuous witnesses exit with 2") {
        const std::string tiny = tmp.file("tiny.txt");
        spit(tiny, "1 2\n01\n");
        const CliResult v = run_cli("extract " + tiny);
        CHECK(v.exit_code == 2);
        CHECK(v.out.find("vacuous=true\n") != std::string::npos);
    }

    SUBCASE("parse errors exit with 1") {
        const std::string bad = tmp.file("bad.txt");
        spit(bad, "2 2\n10\n0\n");
        CHECK(run_cli("extract " + bad).exit_code == 1);
    }
}

TEST_CASE("extract is bit-stable across runs") {
    TempDir tmp;
    const std::string matrix = tmp.file("m.txt");
    REQUIRE(run_cli("gen interval:points=24,intervals=40,seed=3 --out " + matrix).exit_code == 0);
    const CliResult a = run_cli("extract " + matrix + " --out " + tmp.file("a.cert"));
    const CliResult b = run_cli("extract " + matrix + " --out " + tmp.file("b.cert"));
    CHECK(a.out == b.out);
    CHECK(slurp(tmp.file("a.cert")) == slurp(tmp.file("b.cert")));
}

TEST_CASE("vcdim command") {
    TempDir tmp;
    const std::string matrix = tmp.file("m.txt");
    REQUIRE(run_cli("gen matching:n=4 --out " + matrix).exit_code == 0);
    const CliResult r = run_cli("vcdim " + matrix);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "col_system=1\nrow_system=1\nvc_dim=1\n");
}

TEST_CASE("bench command") {
    TempDir tmp;
    const std::string csv1 = tmp.file("a.csv");
    const std::string csv2 = tmp.file("b.csv");
    const std::string flags = "bench --family interval --sizes 8,12 --seeds 1,2 --csv ";
    REQUIRE(run_cli(flags + csv1).exit_code == 0);
    REQUIRE(run_cli(flags + csv2).exit_code == 0);

    const std::string content = slurp(csv1);
    CHECK(content == slurp(csv2));

    std::size_t lines = 0;
    for (char c : content) lines += c == '\n';
    CHECK(lines == 5);  // header + 2 sizes x 2 seeds
    CHECK(content.rfind("family,n_cols,m_rows,", 0) == 0);

    CHECK(run_cli("bench --family nosuch --sizes 4 --seeds 0").exit_code == 1);
    CHECK(run_cli("bench --family interval --sizes x --seeds 0").exit_code == 1);
}

TEST_CASE("oracle command") {
    TempDir tmp;
    const std::string matrix = tmp.file("m.txt");
    REQUIRE(run_cli("gen matching:n=5 --out " + matrix).exit_code == 0);

    const CliResult r = run_cli("oracle " + matrix + " --pattern 0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("size=5\n") != std::string::npos);

    const CliResult co = run_cli("oracle " + matrix + " --pattern 1,0,1");
    CHECK(co.out.find("size=2\n") != std::string::npos);

    const std::string big = tmp.file("big.txt");
    REQUIRE(run_cli("gen matching:n=9 --out " + big).exit_code == 0);
    CHECK(run_cli("oracle " + big + " --pattern 0,1,0").exit_code == 1);
    CHECK(run_cli("oracle " + big + " --pattern 0,1,0 --cap 9").exit_code == 0);
    CHECK(run_cli("oracle " + matrix + " --pattern 0,1").exit_code == 1);
}
