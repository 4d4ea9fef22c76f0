#pragma once

// The hauptq command line: expand, coeff, verify, dissect, density, cusps,
// hecke, scan. Exit codes: 0 ok, 1 refutation, 2 usage or bad input,
// 3 insufficient precision.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hauptq/catalog.hpp"
#include "hauptq/claims.hpp"
#include "hauptq/dissections.hpp"
#include "hauptq/error.hpp"
#include "hauptq/eta.hpp"
#include "hauptq/expr.hpp"
#include "hauptq/hecke.hpp"
#include "hauptq/residue.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

enum ExitCode : int { exit_ok = 0, exit_refuted = 1, exit_usage = 2, exit_precision = 3 };

namespace detail {

// p/q rounded half up to 6 decimals.
inline std::string decimal6(const Rational& r) {
    BigInt scaled = r.get_num() * 1000000 * 2 + r.get_den();
    BigInt den = r.get_den() * 2;
    BigInt v;
    mpz_fdiv_q(v.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    const bool neg = sgn(v) < 0;
    if (neg) v = -v;
    std::string digits = v.get_str();
    if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
    return (neg ? "-" : "") + digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

inline std::string rational_text(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

struct SeriesChoice {
    std::string series;
    std::string expr;

    void add_to(CLI::App* cmd) {
        auto* s = cmd->add_option("--series", series, "catalog series name");
        auto* e = cmd->add_option("--expr", expr, "series in the expression language");
        s->excludes(e);
        e->excludes(s);
    }

    void require() const {
        if (series.empty() && expr.empty()) throw CLI::RequiredError("--series or --expr");
    }

    // Exact expansion with precision exactly prec.
    FractionalSeries exact(std::int64_t prec) const {
        if (!series.empty()) return FractionalSeries(catalog_series(series, prec));
        return evaluate(parse_expr(expr), prec);
    }
};

inline std::string series_text_mod(const FractionalSeries& f, std::optional<std::uint32_t> m) {
    std::string out;
    if (!f.is_integral()) out += "# prefactor q^(" + std::to_string(f.offset24()) + "/24)\n";
    out += to_text(m ? lift(reduce(f.body(), *m)) : f.body());
    return out;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-series toolkit for Hauptmoduln and their coefficient congruences", "hauptq"};
    app.require_subcommand(1, 1);
    std::string out_path;
    app.add_option("--out", out_path, "also write stdout to this file");

    std::ostringstream buf;
    int code = exit_ok;

    // expand
    auto* expand = app.add_subcommand("expand", "print a q-expansion in series text format");
    detail::SeriesChoice ex_src;
    std::int64_t ex_prec = 0;
    std::optional<std::uint32_t> ex_mod;
    ex_src.add_to(expand);
    expand->add_option("--prec", ex_prec, "precision P (coefficients below q^P)")->required();
    expand->add_option("--mod", ex_mod, "reduce coefficients into [0, m)");

    // coeff
    auto* coeff = app.add_subcommand("coeff", "print one coefficient");
    detail::SeriesChoice co_src;
    std::int64_t co_n = 0;
    std::optional<std::uint32_t> co_mod;
    co_src.add_to(coeff);
    coeff->add_option("--n", co_n, "exponent")->required();
    coeff->add_option("--mod", co_mod, "reduce into [0, m)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify catalog congruence claims");
    std::string ve_claim;
    bool ve_all = false, ve_list = false;
    std::optional<std::int64_t> ve_nmax;
    auto* ve_c = verify_cmd->add_option("--claim", ve_claim, "claim id");
    auto* ve_a = verify_cmd->add_flag("--all", ve_all, "every built-in claim");
    verify_cmd->add_flag("--list", ve_list, "print the claims without checking them");
    ve_c->excludes(ve_a);
    verify_cmd->add_option("--nmax", ve_nmax, "override the largest n checked");

    // dissect
    auto* dissect = app.add_subcommand("dissect", "verify product identities");
    std::string di_id;
    bool di_all = false;
    std::int64_t di_prec = 500;
    auto* di_i = dissect->add_option("--id", di_id, "identity id");
    auto* di_a = dissect->add_flag("--all", di_all, "every registered identity");
    di_i->excludes(di_a);
    dissect->add_option("--prec", di_prec, "precision");

    // density
    auto* density = app.add_subcommand("density", "fraction of n in [1, X] with c(An+B) = 0 mod m");
    std::string de_series;
    std::int64_t de_A = 1, de_B = 0;
    std::uint32_t de_mod = 2;
    std::vector<std::int64_t> de_X;
    density->add_option("--series", de_series, "catalog series name")->required();
    density->add_option("--A", de_A, "progression modulus")->required();
    density->add_option("--B", de_B, "progression offset")->required();
    density->add_option("--mod", de_mod, "modulus m");
    density->add_option("--X", de_X, "comma separated bounds")->required()->delimiter(',');

    // cusps
    auto* cusps = app.add_subcommand("cusps", "Ligozat conditions and cusp orders of an eta quotient");
    std::string cu_eta;
    cusps->add_option("--eta", cu_eta, "quotient text, e.g. 'N=128; 8^1 * 16^1'")->required();

    // hecke
    auto* hecke = app.add_subcommand("hecke", "apply T_p to an eta quotient");
    std::string he_eta;
    std::int64_t he_p = 0, he_bound = 5000;
    bool he_eigen = false;
    hecke->add_option("--eta", he_eta, "quotient text")->required();
    hecke->add_option("--p", he_p, "prime")->required();
    hecke->add_option("--bound", he_bound, "coefficient bound for T_p f");
    hecke->add_flag("--check-eigen", he_eigen, "report the eigenvalue and residual instead of the series");

    // scan
    auto* scan = app.add_subcommand("scan", "list progressions An+B on which coefficients vanish mod m");
    std::string sc_series;
    std::uint32_t sc_mod = 2;
    ScanOptions sc_opt;
    std::optional<std::int64_t> sc_bmod;
    scan->add_option("--series", sc_series, "catalog series name")->required();
    scan->add_option("--mod", sc_mod, "modulus m");
    scan->add_option("--Amax", sc_opt.a_max, "largest A")->required();
    scan->add_option("--nmax", sc_opt.n_max, "largest n checked")->required();
    scan->add_option("--Amod", sc_opt.a_mod, "keep A divisible by this");
    scan->add_option("--Bmod", sc_bmod, "keep B congruent to this modulo --Amod");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        if (expand->parsed()) {
            ex_src.require();
            if (ex_prec < 1) throw domain_error("--prec must be positive");
            if (ex_mod && *ex_mod < 2) throw domain_error("--mod must be at least 2");
            if (!ex_src.series.empty() && ex_mod)
                buf << to_text(lift(catalog_series_mod(ex_src.series, *ex_mod, ex_prec)));
            else
                buf << detail::series_text_mod(ex_src.exact(ex_prec), ex_mod);
        } else if (coeff->parsed()) {
            co_src.require();
            if (co_mod && *co_mod < 2) throw domain_error("--mod must be at least 2");
            const std::int64_t prec = std::max<std::int64_t>(co_n + 1, 2);
            if (!co_src.series.empty() && co_mod) {
                buf << catalog_series_mod(co_src.series, *co_mod, prec)[co_n] << "\n";
            } else {
                const auto f = co_src.exact(prec);
                if (!f.is_integral()) buf << "# prefactor q^(" << f.offset24() << "/24)\n";
                BigInt c = f.body()[co_n];
                if (co_mod) c = Modulus::of(*co_mod).reduce(c);
                buf << c.get_str() << "\n";
            }
        } else if (verify_cmd->parsed()) {
            std::vector<ProgressionClaim> claims;
            if (ve_all)
                claims = builtin_claims();
            else if (!ve_claim.empty())
                claims.push_back(find_claim(ve_claim));
            else
                throw CLI::RequiredError("--claim or --all");
            if (ve_nmax) {
                if (*ve_nmax < 0) throw domain_error("--nmax must be non-negative");
                for (auto& c : claims) c.n_max = *ve_nmax;
            }
            buf << "# claims=" << claims.size() << "\n";
            if (ve_list) {
                for (const auto& c : claims) buf << claim_line(c) << "\n";
            } else {
                SeriesCache cache;
                const auto reports = verify_claims(claims, cache);
                std::size_t refuted = 0, insufficient = 0;
                for (std::size_t i = 0; i < claims.size(); ++i) {
                    buf << claim_line(claims[i], &reports[i]) << "\n";
                    if (reports[i].status == ClaimStatus::refuted) ++refuted;
                    if (reports[i].status == ClaimStatus::insufficient) ++insufficient;
                }
                buf << "# verified=" << claims.size() - refuted - insufficient << " refuted=" << refuted
                    << " insufficient=" << insufficient << "\n";
                if (refuted)
                    code = exit_refuted;
                else if (insufficient)
                    code = exit_precision;
            }
        } else if (dissect->parsed()) {
            std::vector<IdentityId> ids;
            if (di_all)
                ids = identity_registry();
            else if (!di_id.empty())
                ids.push_back(parse_identity_id(di_id));
            else
                throw CLI::RequiredError("--id or --all");
            for (const auto& id : ids) {
                const auto rep = verify(id, di_prec);
                buf << to_string(id) << "\t" << rep.checked_upto << "\t";
                if (rep.ok)
                    buf << "OK\n";
                else {
                    buf << "FAIL@" << rep.mismatch->exponent << "\n";
                    code = exit_refuted;
                }
            }
        } else if (density->parsed()) {
            if (de_A < 1 || de_B < 0) throw domain_error("density needs A >= 1 and B >= 0");
            SeriesCache cache(std::numeric_limits<std::int64_t>::max());
            buf << "# series=" << de_series << " A=" << de_A << " B=" << de_B << " mod=" << de_mod << "\n";
            for (const auto& pt : density_profile(de_series, {de_A, de_B, {}}, de_mod, de_X, cache))
                buf << pt.X << "\t" << pt.count << "/" << pt.X << "\t" << detail::decimal6(pt.fraction) << "\n";
        } else if (cusps->parsed()) {
            const EtaQuotient f = parse_eta_quotient(cu_eta);
            const auto lig = ligozat_check(f);
            buf << "quotient\t" << to_text(f) << "\n";
            buf << "weight\t" << detail::rational_text(lig.weight) << "\n";
            buf << "sum_delta_r\t" << lig.sum_delta_r << "\t" << (lig.cond24_upper ? "0 mod 24" : "not 0 mod 24") << "\n";
            buf << "sum_N_over_delta_r\t" << lig.sum_n_over_delta_r << "\t"
                << (lig.cond24_lower ? "0 mod 24" : "not 0 mod 24") << "\n";
            if (lig.character_value) {
                buf << "character_value\t" << detail::rational_text(*lig.character_value) << "\n";
                buf << "character_kernel\t" << *lig.character_kernel << "\n";
                buf << "fundamental_discriminant\t" << *lig.fundamental_discriminant << "\n";
            }
            const auto hol = holomorphy_report(f);
            buf << "holomorphic\t" << (hol.holomorphic ? "yes" : "no") << "\n";
            buf << "cuspidal\t" << (hol.cuspidal ? "yes" : "no") << "\n";
            for (const auto& c : hol.cusps)
                buf << "cusp\t" << c.c << "/" << c.d << "\t" << detail::rational_text(c.order) << "\n";
        } else if (hecke->parsed()) {
            const EtaQuotient f = parse_eta_quotient(he_eta);
            const auto lig = ligozat_check(f);
            if (!lig.integral_weight || !lig.fundamental_discriminant)
                throw precondition_error("Hecke operators here need integral weight");
            if (he_bound < 2) throw domain_error("--bound must be at least 2");
            if (!is_prime(he_p)) throw domain_error(std::to_string(he_p) + " is not prime");
            const HeckeContext ctx{static_cast<std::int64_t>(lig.weight.get_num().get_si()),
                                   {*lig.character_kernel}, f.level()};
            const auto s = expand_quotient(f, he_p * he_bound).to_laurent();
            if (he_eigen) {
                const auto rep = eigen_lambda(s, he_p, ctx);
                buf << "p\t" << he_p << "\n";
                buf << "lambda\t" << rep.lambda.get_str() << "\n";
                buf << "checked_below\t" << rep.checked_below << "\n";
                buf << "residuals\t" << rep.residual_count << "\n";
                for (const auto& r : rep.residuals)
                    buf << "residual\t" << r.n << "\t" << r.got.get_str() << "\t" << r.expected.get_str() << "\n";
                if (!rep.is_eigen()) code = exit_refuted;
            } else {
                buf << to_text(hecke_Tp(s, he_p, ctx));
            }
        } else if (scan->parsed()) {
            if (sc_opt.a_max < 1 || sc_opt.n_max < 0) throw domain_error("scan needs Amax >= 1 and nmax >= 0");
            sc_opt.b_mod = sc_bmod;
            SeriesCache cache(std::numeric_limits<std::int64_t>::max());
            buf << "# series=" << sc_series << " mod=" << sc_mod << " Amax=" << sc_opt.a_max << " nmax=" << sc_opt.n_max
                << " Amod=" << sc_opt.a_mod;
            if (sc_bmod) buf << " Bmod=" << *sc_bmod;
            buf << "\n";
            for (const auto& [A, B] : scan_progressions(sc_series, sc_mod, sc_opt, cache)) buf << A << "\t" << B << "\n";
        }
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const insufficient_precision_error& e) {
        out << buf.str();
        err << "error: " << e.what() << "\n";
        return exit_precision;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    out << buf.str();
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return exit_usage;
        }
        file << buf.str();
    }
    return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace hauptq
