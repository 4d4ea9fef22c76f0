// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hauptq/cli.hpp"
#include "hauptq/hauptq.hpp"
#include "oracles.hpp"

using namespace hauptq;

namespace {

struct Check {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs <= limit_s, "runtime " + std::to_string(secs) + "s over the limit");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, limit_s);
    std::cout << id << " " << (c.ok ? "PASS" : "FAIL") << " " << title << " [" << timing << "]";
    if (!c.ok) std::cout << " -- " << c.note;
    std::cout << std::endl;
    if (!c.ok) ++failures;
}

void prefix(Check& c, const std::string& name, std::int64_t first, const std::vector<long>& coeffs) {
    const auto s = catalog_series(name, first + static_cast<std::int64_t>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::int64_t n = first + static_cast<std::int64_t>(i);
        c.require(s[n] == coeffs[i], name + " coefficient at q^" + std::to_string(n));
    }
}

Rational ratio(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::int64_t isqrt(std::int64_t v) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

} // namespace

int main() {
    criterion("AC1", "printed expansions reproduced exactly", 1, [](Check& c) {
        prefix(c, "j6", -1, {1, 0, 6, 4, -3, -12, -8, 12, 30});
        prefix(c, "j6s", -1, {1, 0, 79, 352, 1431, 4160, 13015, 31968});
        prefix(c, "j10", -1, {1, 0, 1, 2, 2, -2, -1, 0, -4});
        prefix(c, "j10s", -1, {1, 0, 22, 56, 177, 352, 870});
        prefix(c, "F6", 0, {1, 3, 6, 4, -3, -12, -8, 12, 30});
        prefix(c, "F6s", 0, {1, -6, 15, -32, 87, -192, 343, -672});
        prefix(c, "F10", 0, {1, 1, 1, 2, 2, -2, -1, 0, -4});
        prefix(c, "F10s", 0, {1, -4, 6, -8, 17, -32, 54});
    });

    criterion("AC2", "dissections D1-D7 exact and B(k) mod 2 to precision 500", 10, [](Check& c) {
        for (const auto& id : identity_registry()) {
            const auto rep = verify(id, 500);
            c.require(rep.ok && rep.checked_upto == 500, to_string(id) + " failed");
        }
    });

    criterion("AC3", "eta-product bridges mod 2 (exponents < 16000 and < 8000)", 30, [](Check& c) {
        // independent of the claim engine: exact expansions on both sides
        const auto f6 = catalog_series_mod("F6", 2, 24 * 2000 + 4);
        const auto e816 = expand_quotient(parse_eta_quotient("N=128; 8 * 16"), 16000).to_laurent();
        for (std::int64_t e = 0; e < 16000; ++e) {
            const std::uint32_t lhs = (e % 8 == 1) ? f6[24 * ((e - 1) / 8) + 4] : 0;
            if (lhs != (mpz_odd_p(e816[e].get_mpz_t()) ? 1u : 0u)) {
                c.require(false, "F6 bridge at exponent " + std::to_string(e));
                break;
            }
        }
        const auto f10 = catalog_series_mod("F10", 2, 4 * 2000 + 2);
        const auto e420 = expand_quotient(parse_eta_quotient("N=80; 4 * 20"), 8000).to_laurent();
        for (std::int64_t e = 0; e < 8000; ++e) {
            const std::uint32_t lhs = (e % 4 == 1) ? f10[4 * ((e - 1) / 4) + 2] : 0;
            if (lhs != (mpz_odd_p(e420[e].get_mpz_t()) ? 1u : 0u)) {
                c.require(false, "F10 bridge at exponent " + std::to_string(e));
                break;
            }
        }
    });

    criterion("AC4", "Ligozat data and cusp orders for the two weight-one products", 1, [](Check& c) {
        const auto a = parse_eta_quotient("N=128; 8^1 * 16^1");
        const auto la = ligozat_check(a);
        c.require(la.weight == 1, "weight of the level-128 product");
        c.require(la.cond24_upper && la.cond24_lower, "24-conditions at level 128");
        c.require(la.character_kernel && *la.character_kernel == -2, "character kernel at level 128");
        for (const auto& cu : holomorphy_report(a).cusps) c.require(sgn(cu.order) > 0, "cusp order at level 128");

        const auto b = parse_eta_quotient("N=80; 4^1 * 20^1");
        const auto lb = ligozat_check(b);
        c.require(lb.weight == 1, "weight of the level-80 product");
        c.require(lb.cond24_upper && lb.cond24_lower, "24-conditions at level 80");
        for (const auto& cu : holomorphy_report(b).cusps) c.require(sgn(cu.order) > 0, "cusp order at level 80");
    });

    criterion("AC5", "Hecke eigenvalues to coefficient bound 5000", 60, [](Check& c) {
        const std::int64_t bound = 5000;
        const auto f = expand_quotient(parse_eta_quotient("N=128; 8 * 16"), 19 * bound).to_laurent();
        const HeckeContext c128{1, {-8}, 128};
        for (std::int64_t p : {3, 5, 7, 11, 13, 19}) {
            const auto rep = eigen_lambda(f.truncated(p * bound), p, c128);
            c.require(rep.lambda == 0 && rep.is_eigen() && rep.checked_below >= bound,
                      "lambda(" + std::to_string(p) + ") at level 128");
        }
        const auto r17 = eigen_lambda(f.truncated(17 * bound), 17, c128);
        c.require(r17.lambda == -2 && r17.is_eigen(), "lambda(17) at level 128");
        for (std::int64_t p : {3, 5}) c.require(eigen_vanishing_check(f, p, c128, 500).ok(), "vanishing relations");

        const auto g = expand_quotient(parse_eta_quotient("N=80; 4 * 20"), 19 * bound).to_laurent();
        const HeckeContext c80{1, {-20}, 80};
        for (std::int64_t p : {3, 7, 11, 19}) {
            const auto rep = eigen_lambda(g.truncated(p * bound), p, c80);
            c.require(rep.lambda == 0 && rep.is_eigen() && rep.checked_below >= bound,
                      "lambda(" + std::to_string(p) + ") at level 80");
        }
    });

    criterion("AC6", "verify --all exits 0 with every built-in claim verified", 300, [](Check& c) {
        std::ostringstream out, err;
        const int code = run(std::vector<std::string>{"verify", "--all"}, out, err);
        c.require(code == 0, "exit code " + std::to_string(code));
        const std::string text = out.str();
        c.require(text.find("status=refuted") == std::string::npos, "a claim was refuted");
        c.require(text.find("status=insufficient") == std::string::npos, "a claim lacked precision");
        const auto lines = std::count(text.begin(), text.end(), '\n');
        c.require(lines == static_cast<long>(builtin_claims().size()) + 2, "report line count");
    });

    criterion("AC7", "parity densities against the triangular count", 120, [](Check& c) {
        SeriesCache cache(std::numeric_limits<std::int64_t>::max());
        const std::int64_t X = 10000;
        const Rational closed = 1 - ratio((isqrt(8 * X + 1) - 1) / 2, X);
        c.require(closed == ratio(493, 500), "closed form");
        const auto a = density_profile("j6", {24, 3, {}}, 2, {1000, X, 100000}, cache);
        c.require(a[1].fraction == closed, "(a) j6(24n+3) at 10^4");
        const auto b = density_profile("j6s", {8, 1, {}}, 2, {1000, X, 100000}, cache);
        c.require(b[1].fraction == closed, "(b) j6*(8n+1) at 10^4");
        const auto b3 = density_profile("j6s", {24, 3, {}}, 2, {1000, X, 100000}, cache);
        const auto d = density_profile("j10", {4, 1, {}}, 2, {1000, X, 100000}, cache);
        c.require(d[1].fraction >= ratio(85, 100), "(c) j10(4n+1) at 10^4 below 0.85");
        for (const auto* prof : {&a, &b, &b3, &d})
            c.require((*prof)[2].fraction >= (*prof)[0].fraction - ratio(1, 100), "fraction fell from 10^3 to 10^5");
    });

    criterion("AC8", "property suites", 60, [](Check& c) {
        std::mt19937_64 rng(8);
        const auto rnd = [&](std::int64_t v, std::int64_t P, bool unit) {
            std::vector<BigInt> cs(static_cast<std::size_t>(P - v));
            for (auto& x : cs) x = static_cast<long>(rng() % 101) - 50;
            if (unit) cs[0] = 1;
            return LaurentSeries(v, std::move(cs), P);
        };
        for (int t = 0; t < 25; ++t) {
            const auto a = rnd(-1, 40, false), b = rnd(0, 40, false), u = rnd(1, 40, true);
            c.require(a * b == b * a && (a + b) - b == a, "ring axioms");
            c.require(((a * b) * u).truncated(30) == (a * (b * u)).truncated(30), "associativity");
            const auto prod = u * invert(u);
            for (std::int64_t n = 1; n < prod.precision(); ++n) c.require(prod[n] == 0, "invert round-trip");
            LaurentSeries total = LaurentSeries::zero(a.precision());
            for (std::int64_t r = 0; r < 3; ++r)
                total = total + shift(substitute_power(extract_progression(a, 3, r), 3), r);
            for (std::int64_t n = -1; n < 37; ++n) c.require(total[n] == a[n], "extract/reassemble");
        }
        for (std::int64_t k = 1; k <= 30; ++k) {
            const std::int64_t P = k <= 2 ? 2000 : 500;
            const auto ref = oracle::naive_pochhammer(k, k, P);
            const auto e = euler_series(k, P);
            for (std::int64_t n = 0; n < P; ++n) c.require(e[n] == ref[n], "euler_series vs naive product");
        }
        for (auto [x, y] : std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 7}}) {
            const auto ref = oracle::naive_pochhammer(x, y, 500);
            const auto s = pochhammer(x, y, 500);
            for (std::int64_t n = 0; n < 500; ++n) c.require(s[n] == ref[n], "pochhammer vs naive product");
        }
        for (std::int64_t p = 3; p < 50; ++p)
            if (is_prime(p))
                for (std::int64_t a = -2 * p; a <= 2 * p; ++a)
                    c.require(kronecker(a, p) == oracle::legendre(a, p), "Kronecker table");
        for (const auto& name : catalog_names()) {
            const auto text = catalog_expression(name);
            const auto e = parse_expr(text);
            c.require(same(parse_expr(format(e)), e), "parser round-trip " + name);
            c.require(evaluate(e, 150).to_laurent() == catalog_series(name, 150), "DSL vs catalog " + name);
        }
        const auto q = parse_eta_quotient("N=6; 2^3 * 3^9 * 1^-3 * 6^-9");
        c.require(parse_eta_quotient(to_text(q)) == q, "quotient text round-trip");
        const auto s = catalog_series("j6s", 50);
        c.require(parse_series_text(to_text(s)) == s, "series text round-trip");
    });

    criterion("AC9", "conjecture scan is byte-identical across two runs", 60, [](Check& c) {
        const std::vector<std::string> args{"scan", "--series", "j10s", "--mod", "2", "--Amod", "8",
                                            "--Bmod", "3", "--Amax", "80", "--nmax", "200"};
        std::ostringstream o1, o2, e1, e2;
        const int c1 = run(args, o1, e1);
        const int c2 = run(args, o2, e2);
        c.require(c1 == 0 && c2 == 0, "scan exit code");
        c.require(o1.str() == o2.str(), "outputs differ");
        c.require(o1.str().rfind("# series=j10s", 0) == 0, "missing header");
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
