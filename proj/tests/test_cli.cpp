// End-to-end checks against the installed command-line binary. The binary
// path arrives as the first program argument (wired up by CTest).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_bin;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& shell_command) {
    RunResult r;
    FILE* pipe = popen(shell_command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tn piped through wiener") {
    auto r = run(g_bin + " tn 10 | " + g_bin + " wiener -");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "72");

    auto r2 = run(g_bin + " tn 9 --format edgelist | " + g_bin + " wiener - --format edgelist");
    CHECK(r2.exit_code == 0);
    CHECK(trimmed(r2.out) == "54");

    auto r3 = run(g_bin + " min 12 | " + g_bin + " wiener -");
    CHECK(r3.exit_code == 0);
    CHECK(trimmed(r3.out) == "102");
}

TEST_CASE("tn/wiener agree with the closed form on sampled orders") {
    const long long expect[] = {3, 18, 94, 864, 30618, 451111};
    const int ns[] = {3, 6, 11, 24, 81, 200};
    for (size_t i = 0; i < 6; ++i) {
        auto r = run(g_bin + " tn " + std::to_string(ns[i]) + " | " + g_bin + " wiener -");
        CHECK(r.exit_code == 0);
        CHECK(trimmed(r.out) == std::to_string(expect[i]));
    }
}

TEST_CASE("enumerate count and stream fixed point") {
    auto r = run(g_bin + " enumerate 6 --count-only");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "2");

    // re-reading the stream and measuring gives one Wiener value per class
    auto w = run(g_bin + " enumerate 7 | " + g_bin + " wiener -");
    CHECK(w.exit_code == 0);
    CHECK(trimmed(w.out) == "27\n27\n27\n27\n27");
}

TEST_CASE("verify subcommands succeed") {
    CHECK(run(g_bin + " verify inequalities --n-max 100 2>/dev/null").exit_code == 0);
    CHECK(run(g_bin + " verify extremal 7 2>/dev/null").exit_code == 0);
    CHECK(run(g_bin + " verify min 6 2>/dev/null").exit_code == 0);
    CHECK(run(g_bin + " verify lemmas 6 2>/dev/null").exit_code == 0);
    CHECK(run(g_bin + " probe conjectures 6 2>/dev/null").exit_code == 0);
}

TEST_CASE("reports go to the requested file, not stdout") {
    const std::string path = "cli_report_test.jsonl";
    auto r = run(g_bin + " verify extremal 6 --report " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line.find("\"status\":\"pass\"") != std::string::npos);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run(g_bin + " 2>/dev/null").exit_code == 2);
    CHECK(run(g_bin + " frobnicate 2>/dev/null").exit_code == 2);
    CHECK(run(g_bin + " tn 2>/dev/null").exit_code == 2);
    CHECK(run(g_bin + " tn 2 2>/dev/null").exit_code == 2);          // below range
    CHECK(run(g_bin + " enumerate 99 2>/dev/null").exit_code == 2);  // above cap
    CHECK(run(g_bin + " wiener missing_file 2>/dev/null").exit_code == 2);
}

TEST_CASE("corrupted input exits with 2") {
    const std::string path = "cli_corrupt_test.bin";
    std::ofstream(path) << "this is not planar code";
    auto r = run(g_bin + " wiener " + path + " 2>/dev/null");
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());

    std::ofstream(path) << "3 2\n0 1\n0 1\n";
    auto r2 = run(g_bin + " wiener " + path + " --format edgelist 2>/dev/null");
    CHECK(r2.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("MPW_CAP environment override and --cap precedence") {
    CHECK(run("MPW_CAP=5 " + g_bin + " enumerate 6 --count-only 2>/dev/null").exit_code == 2);
    auto r = run("MPW_CAP=5 " + g_bin + " enumerate 6 --count-only --cap 6");
    CHECK(r.exit_code == 0);
    CHECK(trimmed(r.out) == "2");
    CHECK(run("MPW_CAP=junk " + g_bin + " enumerate 6 --count-only 2>/dev/null").exit_code == 2);
}

TEST_CASE("serial reference run matches the default") {
    auto a = run(g_bin + " enumerate 8 --jobs 1 | " + g_bin + " wiener -");
    auto b = run(g_bin + " enumerate 8 | " + g_bin + " wiener -");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
}

}  // TEST_SUITE

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-mpw-binary> [doctest args]\n", argv[0]);
        return 2;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
