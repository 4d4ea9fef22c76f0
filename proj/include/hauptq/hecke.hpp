#pragma once

// Kronecker symbol and the prime Hecke operators T_p acting on q-expansions of
// weight-l forms with a quadratic character.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hauptq/error.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

// Kronecker symbol (a/n), following Cohen, Algorithm 1.4.10.
inline int kronecker(std::int64_t a, std::int64_t n) {
    if (a == 0 && n == 0) throw domain_error("Kronecker symbol (0/0) is undefined");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;

    int k = 1;
    while (n % 2 == 0) {
        n /= 2;
        const std::int64_t a8 = detail::floor_mod(a, 8);
        if (a8 == 3 || a8 == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd and positive: Jacobi symbol
    a = detail::floor_mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t n8 = n % 8;
            if (n8 == 3 || n8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct CharacterSpec {
    std::int64_t discriminant;

    int operator()(std::int64_t d) const { return kronecker(discriminant, d); }
};

struct HeckeContext {
    std::int64_t weight;
    CharacterSpec character;
    std::int64_t level;
};

// (T_p s)_n = s_{pn} + chi(p) p^(l-1) s_{n/p}, the second term only for p | n.
// Output precision ceil(P / p).
inline LaurentSeries hecke_Tp(const LaurentSeries& s, std::int64_t p, const HeckeContext& ctx) {
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    if (ctx.weight < 1) throw domain_error("Hecke operators here need positive integral weight");
    if (s.order() < 0) throw domain_error("Hecke operators act on power series (valuation >= 0)");
    const std::int64_t prec = detail::ceil_div(s.precision(), p);
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(ctx.weight - 1));
    factor *= ctx.character(p);
    std::vector<BigInt> cs(static_cast<std::size_t>(std::max<std::int64_t>(prec, 0)));
    for (std::int64_t n = 0; n < prec; ++n) {
        BigInt c = s[p * n];
        if (n % p == 0 && sgn(factor) != 0) c += factor * s[n / p];
        cs[static_cast<std::size_t>(n)] = std::move(c);
    }
    return {0, std::move(cs), prec};
}

struct EigenResidual {
    std::int64_t n;
    BigInt got;      // (T_p s)_n
    BigInt expected; // lambda * s_n
};

struct EigenReport {
    BigInt lambda;
    std::vector<EigenResidual> residuals; // at most `limit` entries
    std::int64_t residual_count = 0;
    std::int64_t checked_below = 0;

    bool is_eigen() const noexcept { return residual_count == 0; }
};

inline EigenReport eigen_lambda(const LaurentSeries& s, std::int64_t p, const HeckeContext& ctx,
                                std::size_t limit = 20) {
    if (s.precision() < 2 || s[1] != 1)
        throw precondition_error("eigenvalue extraction needs a normalized series with coefficient 1 at q^1");
    const LaurentSeries t = hecke_Tp(s, p, ctx);
    if (t.precision() < 2) throw insufficient_precision_error(2 * p, s.precision());
    EigenReport rep;
    rep.lambda = t[1];
    rep.checked_below = t.precision();
    for (std::int64_t n = 0; n < t.precision(); ++n) {
        BigInt expected = rep.lambda * s[n];
        if (t[n] != expected) {
            ++rep.residual_count;
            if (rep.residuals.size() < limit) rep.residuals.push_back({n, t[n], std::move(expected)});
        }
    }
    return rep;
}

struct VanishingViolation {
    std::int64_t n;
    std::int64_t r; // 0 for the relation A(p^2 n) + chi(p) p^(l-1) A(n) = 0
    BigInt value;
};

struct VanishingReport {
    std::vector<VanishingViolation> violations; // at most `limit` entries
    std::int64_t violation_count = 0;
    std::int64_t checked_n = 0;

    bool ok() const noexcept { return violation_count == 0; }
};

// For lambda(p) = 0: A(p^2 n + p r) = 0 for 0 < r < p, and
// A(p^2 n) + chi(p) p^(l-1) A(n) = 0, for 0 <= n <= n_max.
inline VanishingReport eigen_vanishing_check(const LaurentSeries& s, std::int64_t p, const HeckeContext& ctx,
                                             std::int64_t n_max, std::size_t limit = 20) {
    const auto eig = eigen_lambda(s, p, ctx, 0);
    if (eig.lambda != 0)
        throw precondition_error("vanishing relations need lambda(" + std::to_string(p) + ") = 0, got " +
                                 eig.lambda.get_str());
    const std::int64_t needed = p * p * n_max + p * (p - 1) + 1;
    if (needed > s.precision()) throw insufficient_precision_error(needed, s.precision());
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(ctx.weight - 1));
    factor *= ctx.character(p);

    VanishingReport rep;
    rep.checked_n = n_max + 1;
    auto record = [&](std::int64_t n, std::int64_t r, BigInt v) {
        ++rep.violation_count;
        if (rep.violations.size() < limit) rep.violations.push_back({n, r, std::move(v)});
    };
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (std::int64_t r = 1; r < p; ++r)
            if (sgn(s[p * p * n + p * r]) != 0) record(n, r, s[p * p * n + p * r]);
        BigInt rel = s[p * p * n] + factor * s[n];
        if (sgn(rel) != 0) record(n, 0, std::move(rel));
    }
    return rep;
}

} // namespace hauptq
