#pragma once

// Named series: the Hauptmoduln j_p, j_p* (p = 2, 3, 5, 7, 13), j6, j6*, j10,
// j10* and the power series F6, F6*, F10, F10* obtained by dropping the 1/q
// and the additive constants. Each is a short sum of Euler products.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hauptq/error.hpp"
#include "hauptq/residue.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

struct CatalogTerm {
    BigInt coefficient;
    std::int64_t shift; // multiplies the product by q^shift
    std::vector<EulerFactor> factors;
};

struct CatalogEntry {
    std::string name;
    std::vector<CatalogTerm> terms;
    BigInt constant;
    std::string expression; // the same series in the expression language
};

namespace detail {

inline std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    const std::int64_t primes[] = {2, 3, 5, 7, 13};
    for (std::int64_t p : primes) {
        const std::int64_t e = 24 / (p - 1);
        const std::string ps = std::to_string(p), es = std::to_string(e);
        BigInt cross;
        mpz_ui_pow_ui(cross.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(12 / (p - 1)));
        CatalogTerm main{1, -1, {{1, e}, {p, -e}}};
        CatalogTerm dual{cross, 1, {{p, e}, {1, -e}}};
        const std::string main_expr = "(eta(1)/eta(" + ps + "))^" + es + "+" + es;
        out.push_back({"j" + ps, {main}, e, main_expr});
        out.push_back({"j" + ps + "s", {main, dual}, e,
                       main_expr + "+" + cross.get_str() + "*(eta(" + ps + ")/eta(1))^" + es});
    }

    const std::vector<EulerFactor> f6{{2, 3}, {3, 9}, {1, -3}, {6, -9}};
    const std::vector<EulerFactor> f6s{{1, 6}, {3, 6}, {2, -6}, {6, -6}};
    const std::vector<EulerFactor> f6s_dual{{2, 6}, {6, 6}, {1, -6}, {3, -6}};
    const std::vector<EulerFactor> f10{{2, 1}, {5, 5}, {1, -1}, {10, -5}};
    const std::vector<EulerFactor> f10s{{1, 4}, {5, 4}, {2, -4}, {10, -4}};
    const std::vector<EulerFactor> f10s_dual{{2, 4}, {10, 4}, {1, -4}, {5, -4}};

    out.push_back({"j6", {{1, -1, f6}}, -3, "(eta(2)*eta(3)^3/(eta(1)*eta(6)^3))^3-3"});
    out.push_back({"j6s", {{1, -1, f6s}, {64, 1, f6s_dual}}, 6,
                   "(eta(1)*eta(3)/(eta(2)*eta(6)))^6+6+64*(eta(2)*eta(6)/(eta(1)*eta(3)))^6"});
    out.push_back({"j10", {{1, -1, f10}}, -1, "eta(2)*eta(5)^5/(eta(1)*eta(10)^5)-1"});
    out.push_back({"j10s", {{1, -1, f10s}, {16, 1, f10s_dual}}, 4,
                   "(eta(1)*eta(5)/(eta(2)*eta(10)))^4+4+16*(eta(2)*eta(10)/(eta(1)*eta(5)))^4"});

    out.push_back({"F6", {{1, 0, f6}}, 0, "(poch(2,2)*poch(3,3)^3/(poch(1,1)*poch(6,6)^3))^3"});
    out.push_back({"F6s", {{1, 0, f6s}}, 0, "(poch(1,1)*poch(3,3)/(poch(2,2)*poch(6,6)))^6"});
    out.push_back({"F10", {{1, 0, f10}}, 0, "poch(2,2)*poch(5,5)^5/(poch(1,1)*poch(10,10)^5)"});
    out.push_back({"F10s", {{1, 0, f10s}}, 0, "(poch(1,1)*poch(5,5)/(poch(2,2)*poch(10,10)))^4"});
    return out;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw catalog_error("unknown series '" + std::string(name) + "'");
}

inline bool is_hauptmodul_name(std::string_view name) { return !name.empty() && name[0] == 'j' && name.size() > 1; }

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
}

inline const std::string& catalog_expression(std::string_view name) { return catalog_entry(name).expression; }

// Exact expansion with precision exactly prec.
inline LaurentSeries catalog_series(std::string_view name, std::int64_t prec) {
    const auto& entry = catalog_entry(name);
    if (prec < 1) throw domain_error("catalog series need precision at least 1");
    LaurentSeries s = LaurentSeries::constant(entry.constant, prec);
    for (const auto& t : entry.terms) {
        const std::int64_t body_prec = std::max<std::int64_t>(0, prec - t.shift);
        const LaurentSeries body = shift(euler_product(t.factors, body_prec), t.shift);
        s = add(s, t.coefficient == 1 ? body : scale(body, t.coefficient));
    }
    return s;
}

inline LaurentSeries hauptmodul(std::string_view name, std::int64_t prec) {
    if (!is_hauptmodul_name(name)) throw catalog_error("'" + std::string(name) + "' is not a Hauptmodul");
    if (prec < 2) throw domain_error("Hauptmodul expansions need precision at least 2");
    return catalog_series(name, prec);
}

inline LaurentSeries f_series(std::string_view name, std::int64_t prec) {
    if (name.empty() || name[0] != 'F') throw catalog_error("'" + std::string(name) + "' is not an F-series");
    return catalog_series(name, prec);
}

// Residues of a catalog series mod m, precision exactly prec. Terms whose
// coefficient vanishes mod m are skipped entirely.
inline ResidueSeries catalog_series_mod(std::string_view name, std::uint32_t m, std::int64_t prec) {
    const auto& entry = catalog_entry(name);
    if (prec < 1) throw domain_error("catalog series need precision at least 1");
    const Modulus mod = Modulus::of(m);
    ResidueSeries s = constant_residue(entry.constant, prec, m);
    for (const auto& t : entry.terms) {
        if (sgn(mod.reduce(t.coefficient)) == 0) continue;
        const std::int64_t body_prec = std::max<std::int64_t>(0, prec - t.shift);
        ResidueSeries body = shift(euler_product_mod(t.factors, body_prec, m), t.shift);
        s = add(s, t.coefficient == 1 ? body : scale(body, t.coefficient));
    }
    return s;
}

} // namespace hauptq
