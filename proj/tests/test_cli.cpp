#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hauptq/cli.hpp"

using namespace hauptq;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("coeff") {
    auto r = call({"coeff", "--series", "j6s", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "13015\n");
    CHECK(call({"coeff", "--series", "j6", "--n", "3"}).out == "-3\n");
    CHECK(call({"coeff", "--series", "j6", "--n", "3", "--mod", "2"}).out == "1\n");
    CHECK(call({"coeff", "--expr", "poch(1,1)^3", "--n", "1"}).out == "-3\n");
    CHECK(call({"coeff", "--expr", "poch(1,1)^3", "--n", "3"}).out == "5\n");
    CHECK(call({"coeff", "--series", "j6s", "--n", "5", "--mod", "7"}).out == std::to_string(13015 % 7) + "\n");
}

TEST_CASE("expand prints parseable series text") {
    auto r = call({"expand", "--series", "j10s", "--prec", "40"});
    CHECK(r.code == 0);
    CHECK(parse_series_text(r.out) == catalog_series("j10s", 40));
    auto e = call({"expand", "--expr", catalog_expression("j10s"), "--prec", "40"});
    CHECK(e.out == r.out);
    auto m = call({"expand", "--series", "j6", "--prec", "30", "--mod", "2"});
    CHECK(parse_series_text(m.out) == lift(reduce(catalog_series("j6", 30), 2)));
    auto em = call({"expand", "--expr", "(eta(2)*eta(3)^3/(eta(1)*eta(6)^3))^3-3", "--prec", "30", "--mod", "2"});
    CHECK(em.out == m.out);
    auto frac = call({"expand", "--expr", "eta(1)", "--prec", "5"});
    CHECK(frac.code == 0);
    CHECK(frac.out.rfind("# prefactor q^(1/24)\n", 0) == 0);
}

TEST_CASE("verify exit codes") {
    auto ok = call({"verify", "--claim", "even-j6-2n"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("status=verified checked=501") != std::string::npos);

    auto bad = call({"verify", "--claim", "reading-shift-j6s-m0-p3-k1-d0-printed"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("status=refuted@1 residues=1,0") != std::string::npos);

    auto big = call({"verify", "--claim", "even-j6-2n", "--nmax", "100000000"});
    CHECK(big.code == 3);
    CHECK(big.out.find("status=insufficientPrecision@200000001") != std::string::npos);

    auto list = call({"verify", "--all", "--list"});
    CHECK(list.code == 0);
    CHECK(list.out.find("j6s 72 33 mod=2 nMax=500 kind=vanishing # ") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"coeff", "--series", "j6s", "--n", "5", "--bogus"}).code == 2);
    CHECK(call({"coeff", "--series", "j4", "--n", "5"}).code == 2);
    CHECK(call({"coeff", "--n", "5"}).code == 2);
    CHECK(call({"coeff", "--series", "j6", "--expr", "q", "--n", "5"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"verify", "--claim", "nope"}).code == 2);
    CHECK(call({"dissect", "--id", "D9"}).code == 2);
    CHECK(call({"hecke", "--eta", "N=128; 8 * 16", "--p", "4"}).code == 2);
    CHECK(call({"expand", "--series", "j6", "--prec", "10", "--mod", "1"}).code == 2);
    auto perr = call({"expand", "--expr", "eta(2)^", "--prec", "5"});
    CHECK(perr.code == 2);
    CHECK(perr.err.find("position 7") != std::string::npos);
    CHECK(perr.out.empty());
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("dissect lines") {
    auto r = call({"dissect", "--id", "D1", "--prec", "100"});
    CHECK(r.code == 0);
    CHECK(r.out == "D1_f1_over_f3cubed\t100\tOK\n");
    auto all = call({"dissect", "--all", "--prec", "200"});
    CHECK(all.code == 0);
    CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 12);
}

TEST_CASE("density table") {
    auto r = call({"density", "--series", "j6", "--A", "24", "--B", "3", "--mod", "2", "--X", "1000,10000"});
    CHECK(r.code == 0);
    CHECK(r.out == "# series=j6 A=24 B=3 mod=2\n1000\t956/1000\t0.956000\n10000\t9860/10000\t0.986000\n");
}

TEST_CASE("cusps and hecke") {
    auto c = call({"cusps", "--eta", "N=128; 8^1 * 16^1"});
    CHECK(c.code == 0);
    CHECK(c.out.find("weight\t1\n") != std::string::npos);
    CHECK(c.out.find("character_kernel\t-2\n") != std::string::npos);
    CHECK(c.out.find("cusp\t1/128\t1\n") != std::string::npos);

    auto h = call({"hecke", "--eta", "N=128; 8 * 16", "--p", "17", "--check-eigen", "--bound", "500"});
    CHECK(h.code == 0);
    CHECK(h.out.find("lambda\t-2\n") != std::string::npos);
    CHECK(h.out.find("residuals\t0\n") != std::string::npos);
    // T_3 kills the form, T_17 multiplies it by -2
    auto t3 = call({"hecke", "--eta", "N=128; 8 * 16", "--p", "3", "--bound", "50"});
    CHECK(t3.code == 0);
    CHECK(parse_series_text(t3.out).is_zero());
    auto t17 = call({"hecke", "--eta", "N=128; 8 * 16", "--p", "17", "--bound", "50"});
    const auto f = expand_quotient(parse_eta_quotient("N=128; 8 * 16"), 50).to_laurent();
    CHECK(parse_series_text(t17.out) == scale(f, -2));
}

TEST_CASE("scan is deterministic and --out mirrors stdout") {
    const auto path = (std::filesystem::temp_directory_path() / "hauptq_scan_test.txt").string();
    std::vector<std::string> args{"--out", path, "scan", "--series", "j10s", "--mod", "2", "--Amod", "8", "--Bmod", "3",
                                  "--Amax", "80", "--nmax", "200"};
    auto a = call(args);
    auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::ifstream f(path, std::ios::binary);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == a.out);
    std::remove(path.c_str());
    auto s = call({"scan", "--series", "j10s", "--mod", "2", "--Amax", "4", "--Amod", "4", "--nmax", "200"});
    CHECK(s.out == "# series=j10s mod=2 Amax=4 nmax=200 Amod=4\n4\t0\n4\t1\n4\t2\n");
}
