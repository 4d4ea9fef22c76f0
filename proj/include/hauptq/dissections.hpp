#pragma once

// Registry of product identities: 2-dissections of f1/f3^3, 1/(f1 f3),
// f3^3/f1, f1/f5, f1 f5, 1/(f1 f5), the Rogers-Ramanujan 5-dissection of f1,
// and f_{2k} = f_k^2 (mod 2). Here f_k = (q^k;q^k)_inf. Both sides are built
// independently from Euler products.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hauptq/error.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

struct IdentityId {
    enum class Kind { D1, D2, D3, D4, D5, D6, D7, Binomial };
    Kind kind;
    std::int64_t k = 0; // Binomial only

    friend bool operator==(const IdentityId&, const IdentityId&) = default;
};

inline std::string to_string(const IdentityId& id) {
    switch (id.kind) {
    case IdentityId::Kind::D1: return "D1_f1_over_f3cubed";
    case IdentityId::Kind::D2: return "D2_inv_f1f3";
    case IdentityId::Kind::D3: return "D3_f3cubed_over_f1";
    case IdentityId::Kind::D4: return "D4_f1_over_f5";
    case IdentityId::Kind::D5: return "D5_f1_times_f5";
    case IdentityId::Kind::D6: return "D6_inv_f1f5";
    case IdentityId::Kind::D7: return "D7_rr_five_dissection";
    case IdentityId::Kind::Binomial: return "B_binomial_mod2(" + std::to_string(id.k) + ")";
    }
    return {};
}

inline const std::vector<std::int64_t>& binomial_ks() {
    static const std::vector<std::int64_t> ks{1, 2, 3, 5, 10};
    return ks;
}

inline std::vector<IdentityId> identity_registry() {
    using K = IdentityId::Kind;
    std::vector<IdentityId> out{{K::D1}, {K::D2}, {K::D3}, {K::D4}, {K::D5}, {K::D6}, {K::D7}};
    for (auto k : binomial_ks()) out.push_back({K::Binomial, k});
    return out;
}

// Accepts the full registry names and the short forms D1..D7, B(k).
inline IdentityId parse_identity_id(std::string_view text) {
    for (const auto& id : identity_registry()) {
        const std::string full = to_string(id);
        if (text == full) return id;
        if (id.kind != IdentityId::Kind::Binomial && text == full.substr(0, 2)) return id;
        if (id.kind == IdentityId::Kind::Binomial && text == "B(" + std::to_string(id.k) + ")") return id;
    }
    throw catalog_error("unknown identity '" + std::string(text) + "'");
}

struct IdentitySides {
    LaurentSeries lhs;
    LaurentSeries rhs;
    Modulus modulus;
};

namespace detail {

inline LaurentSeries fprod(std::initializer_list<EulerFactor> fs, std::int64_t prec) {
    std::vector<EulerFactor> v(fs);
    return euler_product(v, prec);
}

// Right side of the Xia-Yao dissection of f5/f1, from which the f1/f5 form
// follows by q -> -q.
inline LaurentSeries xia_yao_rhs(std::int64_t prec) {
    return fprod({{8, 1}, {20, 2}, {2, -2}, {40, -1}}, prec) +
           shift(fprod({{4, 3}, {10, 1}, {40, 1}, {2, -3}, {8, -1}, {20, -1}}, prec - 1), 1);
}

inline LaurentSeries d5_rhs(std::int64_t prec) {
    return fprod({{4, 2}, {10, 5}, {2, -1}, {5, -2}, {20, -2}}, prec) -
           shift(fprod({{2, 5}, {20, 2}, {1, -2}, {4, -2}, {10, -1}}, prec - 1), 1);
}

} // namespace detail

// R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)).
inline LaurentSeries rr_R_series(std::int64_t prec) {
    if (prec < 1) throw domain_error("rr_R_series needs precision at least 1");
    return (pochhammer(2, 5, prec) * pochhammer(3, 5, prec)) / (pochhammer(1, 5, prec) * pochhammer(4, 5, prec));
}

// f1/f5 obtained from the f5/f1 dissection by q -> -q:
// negate_odd(rhs) * f2^3 f20 / (f4 f10^3).
inline LaurentSeries derive_d4_rhs(std::int64_t prec) {
    return negate_odd(detail::xia_yao_rhs(prec)) * detail::fprod({{2, 3}, {20, 1}, {4, -1}, {10, -3}}, prec);
}

// 1/(f1 f5) obtained from the f1 f5 dissection by q -> -q:
// negate_odd(rhs) * f4 f20 / (f2^3 f10^3).
inline LaurentSeries derive_d6_rhs(std::int64_t prec) {
    return negate_odd(detail::d5_rhs(prec)) * detail::fprod({{4, 1}, {20, 1}, {2, -3}, {10, -3}}, prec);
}

inline IdentitySides build_sides(const IdentityId& id, std::int64_t prec) {
    using K = IdentityId::Kind;
    using detail::fprod;
    if (prec < 2) throw domain_error("identities need precision at least 2");
    const auto exact = Modulus::exact();
    switch (id.kind) {
    case K::D1:
        return {fprod({{1, 1}, {3, -3}}, prec),
                fprod({{2, 1}, {4, 2}, {12, 2}, {6, -7}}, prec) -
                    shift(fprod({{2, 3}, {12, 6}, {4, -2}, {6, -9}}, prec - 1), 1),
                exact};
    case K::D2:
        return {fprod({{1, -1}, {3, -1}}, prec),
                fprod({{8, 2}, {12, 5}, {2, -2}, {4, -1}, {6, -4}, {24, -2}}, prec) +
                    shift(fprod({{4, 5}, {24, 2}, {2, -4}, {6, -2}, {8, -2}, {12, -1}}, prec - 1), 1),
                exact};
    case K::D3:
        return {fprod({{3, 3}, {1, -1}}, prec),
                fprod({{4, 3}, {6, 2}, {2, -2}, {12, -1}}, prec) + shift(fprod({{12, 3}, {4, -1}}, prec - 1), 1),
                exact};
    case K::D4:
        return {fprod({{1, 1}, {5, -1}}, prec),
                fprod({{2, 1}, {8, 1}, {20, 3}, {4, -1}, {10, -3}, {40, -1}}, prec) -
                    shift(fprod({{4, 2}, {40, 1}, {8, -1}, {10, -2}}, prec - 1), 1),
                exact};
    case K::D5: return {fprod({{1, 1}, {5, 1}}, prec), detail::d5_rhs(prec), exact};
    case K::D6:
        return {fprod({{1, -1}, {5, -1}}, prec),
                fprod({{4, 3}, {5, 2}, {20, 1}, {2, -4}, {10, -4}}, prec) +
                    shift(fprod({{1, 2}, {4, 1}, {20, 3}, {2, -4}, {10, -4}}, prec - 1), 1),
                exact};
    case K::D7: {
        const LaurentSeries r5 = substitute_power(rr_R_series(detail::ceil_div(prec, 5) + 1), 5);
        const LaurentSeries inner = r5 - LaurentSeries::monomial(1, 1, prec) - shift(invert(r5), 2);
        return {euler_series(1, prec), euler_series(25, prec) * inner, exact};
    }
    case K::Binomial:
        if (id.k < 1) throw domain_error("binomial identity needs k >= 1");
        return {euler_series(2 * id.k, prec), pow(euler_series(id.k, prec), 2), Modulus::of(2)};
    }
    throw catalog_error("unknown identity");
}

struct IdentityReport {
    bool ok = true;
    std::int64_t checked_upto = 0; // exponents below this were compared
    std::optional<Mismatch> mismatch;
};

inline IdentityReport verify(const IdentityId& id, std::int64_t prec) {
    const auto sides = build_sides(id, prec);
    const std::int64_t upto = std::min({sides.lhs.precision(), sides.rhs.precision(), prec});
    const auto rep = congruent_mod(sides.lhs, sides.rhs, sides.modulus, upto);
    return {rep.congruent, upto, rep.mismatch};
}

// True iff every coefficient of s at an exponent congruent to one of
// `residues` mod 5 vanishes within the precision.
inline bool five_dissect_check(const LaurentSeries& s, const std::set<std::int64_t>& residues) {
    for (std::int64_t n = s.valuation(); n < s.precision(); ++n)
        if (residues.count(detail::floor_mod(n, 5)) && sgn(s[n]) != 0) return false;
    return true;
}

} // namespace hauptq
