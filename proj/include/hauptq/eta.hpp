#pragma once

// Eta quotients prod eta(delta tau)^r_delta over divisors of a level N, their
// q-expansions, and the modularity data (weight, the two mod-24 conditions,
// character, orders at cusps) that decide whether such a quotient is a
// holomorphic modular form on Gamma_0(N).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hauptq/error.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

using Rational = mpq_class;

// q^(offset24/24) * body(q), kept with offset24 in [0, 24).
class FractionalSeries {
public:
    FractionalSeries() = default;

    FractionalSeries(std::int64_t offset24, LaurentSeries body) {
        const std::int64_t whole = detail::floor_div(offset24, 24);
        offset24_ = offset24 - 24 * whole;
        body_ = whole == 0 ? std::move(body) : shift(body, whole);
    }

    // An integral series (offset 0).
    explicit FractionalSeries(LaurentSeries body) : offset24_(0), body_(std::move(body)) {}

    std::int64_t offset24() const noexcept { return offset24_; }
    const LaurentSeries& body() const noexcept { return body_; }
    bool is_integral() const noexcept { return offset24_ == 0; }

    const LaurentSeries& to_laurent() const {
        if (!is_integral())
            throw evaluation_error("series carries a fractional prefactor q^(" + std::to_string(offset24_) +
                                   "/24) and is not an integral q-expansion");
        return body_;
    }

    friend bool operator==(const FractionalSeries&, const FractionalSeries&) = default;

private:
    std::int64_t offset24_ = 0;
    LaurentSeries body_;
};

inline FractionalSeries operator*(const FractionalSeries& a, const FractionalSeries& b) {
    return {a.offset24() + b.offset24(), mul(a.body(), b.body())};
}

inline FractionalSeries operator/(const FractionalSeries& a, const FractionalSeries& b) {
    return {a.offset24() - b.offset24(), divide(a.body(), b.body())};
}

inline FractionalSeries operator+(const FractionalSeries& a, const FractionalSeries& b) {
    if (a.offset24() != b.offset24())
        throw evaluation_error("cannot add series with prefactors q^(" + std::to_string(a.offset24()) + "/24) and q^(" +
                               std::to_string(b.offset24()) + "/24)");
    return {a.offset24(), add(a.body(), b.body())};
}

inline FractionalSeries operator-(const FractionalSeries& a, const FractionalSeries& b) {
    if (a.offset24() != b.offset24())
        throw evaluation_error("cannot subtract series with prefactors q^(" + std::to_string(a.offset24()) +
                               "/24) and q^(" + std::to_string(b.offset24()) + "/24)");
    return {a.offset24(), sub(a.body(), b.body())};
}

inline FractionalSeries operator-(const FractionalSeries& a) { return {a.offset24(), negate(a.body())}; }

inline FractionalSeries pow(const FractionalSeries& a, std::int64_t k) {
    return {a.offset24() * k, pow(a.body(), k)};
}

// eta(delta tau) = q^(delta/24) (q^delta; q^delta)_inf, body to precision prec.
inline FractionalSeries expand_eta(std::int64_t delta, std::int64_t prec) {
    if (delta < 1) throw domain_error("eta argument must be a positive multiple of tau");
    return {delta, euler_series(delta, prec)};
}

class EtaQuotient {
public:
    EtaQuotient(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents) : level_(level) {
        if (level < 1) throw construction_error("level must be positive, got " + std::to_string(level));
        for (const auto& [delta, r] : exponents) {
            if (delta < 1 || level % delta != 0)
                throw construction_error(std::to_string(delta) + " does not divide the level " + std::to_string(level));
            if (r != 0) exponents_[delta] = r;
        }
        if (exponents_.empty()) throw construction_error("eta quotient needs at least one nonzero exponent");
    }

    std::int64_t level() const noexcept { return level_; }
    const std::map<std::int64_t, std::int64_t>& exponents() const noexcept { return exponents_; }

    std::int64_t exponent(std::int64_t delta) const {
        auto it = exponents_.find(delta);
        return it == exponents_.end() ? 0 : it->second;
    }

    std::vector<EulerFactor> factors() const {
        std::vector<EulerFactor> out;
        for (const auto& [delta, r] : exponents_) out.push_back({delta, r});
        return out;
    }

    // Sum of delta * r_delta, i.e. 24 times the leading exponent.
    std::int64_t offset24() const {
        std::int64_t s = 0;
        for (const auto& [delta, r] : exponents_) s += delta * r;
        return s;
    }

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::int64_t level_;
    std::map<std::int64_t, std::int64_t> exponents_;
};

inline std::string to_text(const EtaQuotient& f) {
    std::string out = "N=" + std::to_string(f.level()) + ";";
    bool first = true;
    for (const auto& [delta, r] : f.exponents()) {
        out += first ? " " : " * ";
        out += std::to_string(delta) + "^" + std::to_string(r);
        first = false;
    }
    return out;
}

// Accepts `N=<level>; <delta>^<r> * <delta>^<r> ...`; a bare `<delta>` means
// exponent 1 and repeated deltas accumulate.
inline EtaQuotient parse_eta_quotient(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(pos >= text.size() ? "unexpected end of input" : std::string("unexpected character '") + text[pos] + "'",
                              pos, {std::string("'") + c + "'"});
        ++pos;
    };
    auto integer = [&](bool allow_sign) {
        skip_ws();
        const std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected an integer", start, {"integer"});
        const std::size_t from = text[start] == '+' ? start + 1 : start;
        return detail::parse_int64(text.substr(from, pos - from), start);
    };

    expect('N');
    expect('=');
    const std::int64_t level = integer(false);
    expect(';');
    std::map<std::int64_t, std::int64_t> exps;
    for (;;) {
        const std::int64_t delta = integer(false);
        std::int64_t r = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            r = integer(true);
        }
        exps[delta] += r;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '*') throw parse_error(std::string("unexpected character '") + text[pos] + "'", pos, {"'*'", "end of input"});
        ++pos;
    }
    try {
        return EtaQuotient(level, exps);
    } catch (const construction_error& e) {
        throw parse_error(e.what(), text.size());
    }
}

// prod eta(delta tau)^r; the body is computed to precision prec before the
// integral part of the prefactor is absorbed.
inline FractionalSeries expand_quotient(const EtaQuotient& f, std::int64_t prec) {
    const auto fs = f.factors();
    return {f.offset24(), euler_product(fs, prec)};
}

struct LigozatReport {
    Rational weight;
    std::int64_t sum_delta_r = 0;
    std::int64_t sum_n_over_delta_r = 0;
    bool cond24_upper = false;
    bool cond24_lower = false;
    bool integral_weight = false;
    // (-1)^l prod delta^r_delta, present only for integral weight.
    std::optional<Rational> character_value;
    // Sign times the primes occurring to an odd power in the value above.
    std::optional<std::int64_t> character_kernel;
    // The kernel, times 4 unless it is 1 mod 4.
    std::optional<std::int64_t> fundamental_discriminant;
};

namespace detail {

inline std::map<std::int64_t, std::int64_t> factorize(std::int64_t n) {
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline LigozatReport ligozat_check(const EtaQuotient& f) {
    LigozatReport rep;
    std::int64_t sum_r = 0;
    for (const auto& [delta, r] : f.exponents()) {
        sum_r += r;
        rep.sum_delta_r += delta * r;
        rep.sum_n_over_delta_r += (f.level() / delta) * r;
    }
    rep.weight = Rational(sum_r, 2);
    rep.weight.canonicalize();
    rep.integral_weight = sum_r % 2 == 0;
    rep.cond24_upper = rep.sum_delta_r % 24 == 0;
    rep.cond24_lower = rep.sum_n_over_delta_r % 24 == 0;
    if (rep.integral_weight) {
        const std::int64_t l = sum_r / 2;
        const int sign = (l % 2 == 0) ? 1 : -1;
        BigInt num = 1, den = 1;
        std::map<std::int64_t, std::int64_t> prime_exp;
        for (const auto& [delta, r] : f.exponents()) {
            BigInt pw;
            mpz_pow_ui(pw.get_mpz_t(), BigInt(static_cast<long>(delta)).get_mpz_t(), static_cast<unsigned long>(r < 0 ? -r : r));
            (r > 0 ? num : den) *= pw;
            for (const auto& [p, e] : detail::factorize(delta)) prime_exp[p] += e * r;
        }
        Rational value(num * sign, den);
        value.canonicalize();
        rep.character_value = value;
        std::int64_t kernel = sign;
        for (const auto& [p, e] : prime_exp)
            if (e % 2 != 0) kernel *= p;
        rep.character_kernel = kernel;
        rep.fundamental_discriminant = detail::floor_mod(kernel, 4) == 1 ? kernel : 4 * kernel;
    }
    return rep;
}

struct CuspOrder {
    std::int64_t c;
    std::int64_t d;
    Rational order;
};

// Order of vanishing at the cusp c/d of Gamma_0(N):
// (N/24) sum gcd(d,delta)^2 r / (gcd(d, N/d) d delta).
inline CuspOrder cusp_order(const EtaQuotient& f, std::int64_t c, std::int64_t d) {
    const std::int64_t n = f.level();
    if (d < 1 || n % d != 0) throw domain_error(std::to_string(d) + " does not divide the level " + std::to_string(n));
    if (std::gcd(c, d) != 1) throw domain_error("cusp numerator must be coprime to " + std::to_string(d));
    Rational sum = 0;
    for (const auto& [delta, r] : f.exponents()) {
        const std::int64_t g = std::gcd(d, delta);
        const BigInt den = BigInt(static_cast<long>(std::gcd(d, n / d))) * static_cast<long>(d) * static_cast<long>(delta);
        sum += Rational(BigInt(static_cast<long>(g * g * r)), den);
    }
    Rational order = sum * Rational(static_cast<long>(n), 24);
    order.canonicalize();
    return {c, d, order};
}

struct HolomorphyReport {
    std::vector<CuspOrder> cusps;
    bool holomorphic = true;
    bool cuspidal = true;
};

inline HolomorphyReport holomorphy_report(const EtaQuotient& f) {
    HolomorphyReport rep;
    for (std::int64_t d : detail::divisors(f.level())) {
        auto co = cusp_order(f, 1, d);
        if (sgn(co.order) < 0) rep.holomorphic = false;
        if (sgn(co.order) <= 0) rep.cuspidal = false;
        rep.cusps.push_back(std::move(co));
    }
    return rep;
}

} // namespace hauptq
