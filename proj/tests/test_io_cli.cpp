#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qgabor/qf2_io.hpp"
#include "qgabor/qft.hpp"
#include "qgabor/window.hpp"
#include "test_util.hpp"

using namespace qgabor;

namespace {

std::string tmp_path(const std::string& name) {
    return std::string("qgabor_test_") + name;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QGABOR_CLI_PATH) + " " + args;
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("QF2 write/read round trip is bit exact") {
    const Grid2 g = make_square_grid(16, -2.0, 2.0);
    testutil::Rng rng(601);
    const QField f = testutil::random_field(g, rng);

    const std::string p1 = tmp_path("rt1.qf2"), p2 = tmp_path("rt2.qf2");
    write_qf2(p1, f);
    const QField back = read_qf2(p1);
    CHECK(back.grid() == f.grid());
    for (std::size_t k = 0; k < f.data().size(); ++k) CHECK(back.data()[k] == f.data()[k]);

    write_qf2(p2, back);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("QF2 rejects corrupted inputs") {
    const Grid2 g = make_square_grid(4, 0.0, 1.0);
    const std::string path = tmp_path("bad.qf2");
    write_qf2(path, QField(g));

    // corrupt the magic
    {
        std::fstream fs(path, std::ios::in | std::ios::out | std::ios::binary);
        fs.put('X');
    }
    CHECK_THROWS_WITH_AS(read_qf2(path), doctest::Contains("magic"), std::runtime_error);

    // bump the version
    write_qf2(path, QField(g));
    {
        std::fstream fs(path, std::ios::in | std::ios::out | std::ios::binary);
        fs.seekp(4);
        fs.put(2);
    }
    CHECK_THROWS_WITH_AS(read_qf2(path), doctest::Contains("version"), std::runtime_error);

    // truncate
    write_qf2(path, QField(g));
    {
        const std::string all = slurp(path);
        std::ofstream os(path, std::ios::binary | std::ios::trunc);
        os.write(all.data(), static_cast<std::streamsize>(all.size() / 2));
    }
    CHECK_THROWS_WITH_AS(read_qf2(path), doctest::Contains("truncated"), std::runtime_error);

    // non-finite payload
    QField nf(g);
    nf.at(1, 1).w = std::nan("");
    write_qf2(path, nf);
    CHECK_THROWS_WITH_AS(read_qf2(path), doctest::Contains("non-finite"), std::runtime_error);

    std::remove(path.c_str());
    CHECK_THROWS(read_qf2("no_such_file.qf2"));
}

TEST_CASE("cli: qft round trip through files") {
    const Grid2 g = make_square_grid(64, -6.0, 6.0);
    testutil::Rng rng(607);
    const QField f = testutil::random_field(g, rng);
    const std::string a = tmp_path("a.qf2"), b = tmp_path("b.qf2"), c = tmp_path("c.qf2");
    write_qf2(a, f);

    CHECK(run_cli("qft --in " + a + " --out " + b) == 0);
    CHECK(run_cli("qft --inverse --in " + b + " --out " + c) == 0);

    const QField back = read_qf2(c);
    CHECK(back.grid() == f.grid());
    CHECK(max_abs_diff(back, f) <= 1e-12);

    std::remove(a.c_str());
    std::remove(b.c_str());
    std::remove(c.c_str());
}

TEST_CASE("cli: exit codes and error channel") {
    CHECK(run_cli("qft --in missing.qf2 --out x.qf2 2>/dev/null") == 1);
    CHECK(run_cli("qft 2>/dev/null") == 2);                 // missing required flags
    CHECK(run_cli("no-such-command 2>/dev/null") == 2);
    CHECK(run_cli("--help >/dev/null") == 0);
    CHECK(run_cli("qft --in missing.qf2 --out x.qf2 2>stderr.txt") == 1);
    const std::string err = slurp("stderr.txt");
    CHECK(err.rfind("error:", 0) == 0);
    std::remove("stderr.txt");
}

TEST_CASE("cli: verify is deterministic byte for byte") {
    CHECK(run_cli("verify --seed 7 --out v1.txt >/dev/null") == 0);
    CHECK(run_cli("verify --seed 7 --out v2.txt >/dev/null") == 0);
    const std::string r1 = slurp("v1.txt"), r2 = slurp("v2.txt");
    CHECK(!r1.empty());
    CHECK(r1 == r2);
    std::remove("v1.txt");
    std::remove("v2.txt");
}

TEST_CASE("cli: density gauss-zero certificate") {
    CHECK(run_cli("density gauss-zero --alpha 1 --trunc 8 --out gz.json") == 0);
    const std::string out = slurp("gz.json");
    CHECK(out.find("\"paired_cancellation\": true") != std::string::npos);
    std::remove("gz.json");
}

TEST_CASE("cli: zak slice header") {
    CHECK(run_cli("zak slice --window gaussian --alpha 1 --x1 0.5 --x2 0.5 --s 4 --out zs.csv") == 0);
    const std::string out = slurp("zs.csv");
    CHECK(out.rfind("\xcf\x89\x31,\xcf\x89\x32,absZ2\n", 0) == 0);  // omega1,omega2,absZ2
    std::remove("zs.csv");
}

TEST_CASE("cli: framebounds json carries the certificate keys") {
    CHECK(run_cli("density framebounds --window box --param 1 --alpha 1 --r 8 --s 8 --trunc 3 "
                  "--out fb.json") == 0);
    const std::string out = slurp("fb.json");
    for (const char* key : {"\"A\"", "\"B\"", "\"window\"", "\"evidence\"", "\"min_location\""})
        CHECK(out.find(key) != std::string::npos);
    // identical invocation produces identical bytes
    CHECK(run_cli("density framebounds --window box --param 1 --alpha 1 --r 8 --s 8 --trunc 3 "
                  "--out fb2.json") == 0);
    CHECK(slurp("fb.json") == slurp("fb2.json"));
    std::remove("fb.json");
    std::remove("fb2.json");
}

TEST_CASE("cli: gabor analyze/synthesize round trip") {
    const Grid2 g = make_square_grid(32, 0.0, 1.0);
    const QField box = sample_window(WindowSpec{WindowKind::Box, 1.0}, g);
    const std::string in = tmp_path("gab.qf2");
    write_qf2(in, box);
    CHECK(run_cli("gabor analyze --in " + in +
                  " --window box --param 1 --alpha 1 --beta 1 --nrange 4 --mode quaternionic "
                  "--out gc.csv") == 0);
    CHECK(run_cli("gabor synthesize --coeffs gc.csv --window box --param 1 --alpha 1 --beta 1 "
                  "--nrange 4 --grid-n 32 --grid-min 0 --grid-max 1 --out gs.qf2") == 0);
    const QField back = read_qf2("gs.qf2");
    CHECK(max_abs_diff(back, box) <= 1e-9);
    std::remove(in.c_str());
    std::remove("gc.csv");
    std::remove("gs.qf2");
}
