#pragma once

// Truncated formal Laurent series over the integers.
//
// A LaurentSeries stores coefficients of q^v, q^(v+1), ..., q^(P-1) where v is
// the valuation (least stored exponent) and P the precision: coefficients of
// q^n for n >= P are unknown, coefficients below v are zero. Every operation
// returns the tightest precision it can vouch for, and reading past it throws.

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hauptq/error.hpp"

namespace hauptq {

using BigInt = mpz_class;

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

inline const BigInt& zero_bigint() {
    static const BigInt z{0};
    return z;
}

} // namespace detail

// Comparison modulus: either exact integer comparison or residues mod m >= 2.
class Modulus {
public:
    static Modulus exact() noexcept { return Modulus{}; }

    static Modulus of(std::int64_t m) {
        if (m < 2) throw domain_error("modulus must be at least 2, got " + std::to_string(m));
        Modulus r;
        r.m_ = m;
        return r;
    }

    bool is_exact() const noexcept { return m_ == 0; }
    std::int64_t value() const noexcept { return m_; }

    // Canonical representative in [0, m) (identity when exact).
    BigInt reduce(const BigInt& c) const {
        if (is_exact()) return c;
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m_));
        return r;
    }

    std::string to_string() const { return is_exact() ? std::string("exact") : std::to_string(m_); }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t m_ = 0;
};

class LaurentSeries {
public:
    LaurentSeries() = default;

    LaurentSeries(std::int64_t valuation, std::vector<BigInt> coeffs, std::int64_t precision)
        : valuation_(valuation), precision_(precision), coeffs_(std::move(coeffs)) {
        if (precision < valuation)
            throw construction_error("precision " + std::to_string(precision) + " is below valuation " +
                                     std::to_string(valuation));
        if (static_cast<std::int64_t>(coeffs_.size()) != precision - valuation)
            throw construction_error("expected " + std::to_string(precision - valuation) +
                                     " coefficients, got " + std::to_string(coeffs_.size()));
    }

    static LaurentSeries zero(std::int64_t precision) {
        const std::int64_t v = std::min<std::int64_t>(0, precision);
        return {v, std::vector<BigInt>(static_cast<std::size_t>(precision - v)), precision};
    }

    static LaurentSeries monomial(const BigInt& c, std::int64_t exponent, std::int64_t precision) {
        if (exponent >= precision) return zero(precision);
        std::vector<BigInt> cs(static_cast<std::size_t>(precision - exponent));
        cs[0] = c;
        return {exponent, std::move(cs), precision};
    }

    static LaurentSeries constant(const BigInt& c, std::int64_t precision) { return monomial(c, 0, precision); }

    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t precision() const noexcept { return precision_; }
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    bool known(std::int64_t n) const noexcept { return n < precision_; }

    // Coefficient of q^n. Zero below the valuation; throws at or beyond the
    // precision.
    const BigInt& operator[](std::int64_t n) const {
        if (n >= precision_) throw insufficient_precision_error(n + 1, precision_);
        if (n < valuation_) return detail::zero_bigint();
        return coeffs_[static_cast<std::size_t>(n - valuation_)];
    }

    // Least exponent with a nonzero coefficient, or the precision if the
    // series vanishes on its whole known window.
    std::int64_t order() const noexcept {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return valuation_ + static_cast<std::int64_t>(i);
        return precision_;
    }

    std::size_t nonzero_count() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) != 0; }));
    }

    bool is_zero() const noexcept { return order() == precision_; }

    // Drops every coefficient at exponent >= p (p may not exceed the current
    // precision).
    LaurentSeries truncated(std::int64_t p) const {
        if (p > precision_) throw insufficient_precision_error(p, precision_);
        const std::int64_t v = std::min(valuation_, p);
        std::vector<BigInt> cs(static_cast<std::size_t>(p - v));
        for (std::int64_t n = std::max(v, valuation_); n < p; ++n)
            cs[static_cast<std::size_t>(n - v)] = coeffs_[static_cast<std::size_t>(n - valuation_)];
        return {v, std::move(cs), p};
    }

    // Same known window and the same coefficient at every known exponent.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.precision_ != b.precision_) return false;
        for (std::int64_t n = std::min(a.valuation_, b.valuation_); n < a.precision_; ++n)
            if (a[n] != b[n]) return false;
        return true;
    }

private:
    std::int64_t valuation_ = 0;
    std::int64_t precision_ = 0;
    std::vector<BigInt> coeffs_;
};

// -- construction ---------------------------------------------------------

inline LaurentSeries make_series(std::int64_t valuation, std::vector<BigInt> coeffs, std::int64_t precision) {
    return {valuation, std::move(coeffs), precision};
}

inline LaurentSeries make_series(std::int64_t valuation, std::initializer_list<long> coeffs, std::int64_t precision) {
    std::vector<BigInt> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.emplace_back(c);
    return {valuation, std::move(cs), precision};
}

// -- ring operations ------------------------------------------------------

inline LaurentSeries add(const LaurentSeries& s, const LaurentSeries& t) {
    const std::int64_t p = std::min(s.precision(), t.precision());
    const std::int64_t v = std::min({s.valuation(), t.valuation(), p});
    std::vector<BigInt> cs(static_cast<std::size_t>(p - v));
    for (std::int64_t n = v; n < p; ++n) cs[static_cast<std::size_t>(n - v)] = s[n] + t[n];
    return {v, std::move(cs), p};
}

inline LaurentSeries negate(const LaurentSeries& s) {
    std::vector<BigInt> cs(s.coefficients().begin(), s.coefficients().end());
    for (auto& c : cs) c = -c;
    return {s.valuation(), std::move(cs), s.precision()};
}

inline LaurentSeries sub(const LaurentSeries& s, const LaurentSeries& t) {
    const std::int64_t p = std::min(s.precision(), t.precision());
    const std::int64_t v = std::min({s.valuation(), t.valuation(), p});
    std::vector<BigInt> cs(static_cast<std::size_t>(p - v));
    for (std::int64_t n = v; n < p; ++n) cs[static_cast<std::size_t>(n - v)] = s[n] - t[n];
    return {v, std::move(cs), p};
}

inline LaurentSeries scale(const LaurentSeries& s, const BigInt& c) {
    std::vector<BigInt> cs(s.coefficients().begin(), s.coefficients().end());
    for (auto& x : cs) x *= c;
    return {s.valuation(), std::move(cs), s.precision()};
}

// Multiplication by q^e.
inline LaurentSeries shift(const LaurentSeries& s, std::int64_t e) {
    std::vector<BigInt> cs(s.coefficients().begin(), s.coefficients().end());
    return {s.valuation() + e, std::move(cs), s.precision() + e};
}

namespace detail {

struct SparseTerm {
    std::int64_t exponent;
    const BigInt* value;
    int unit; // +1, -1, or 0 for a non-unit coefficient
};

inline std::vector<SparseTerm> sparse_terms(const LaurentSeries& s) {
    std::vector<SparseTerm> out;
    const auto cs = s.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const int sg = sgn(cs[i]);
        if (sg == 0) continue;
        int unit = 0;
        if (mpz_cmpabs_ui(cs[i].get_mpz_t(), 1) == 0) unit = sg;
        out.push_back({s.valuation() + static_cast<std::int64_t>(i), &cs[i], unit});
    }
    return out;
}

// acc += term * b
inline void accumulate(mpz_t acc, const SparseTerm& term, const BigInt& b) {
    if (term.unit > 0)
        mpz_add(acc, acc, b.get_mpz_t());
    else if (term.unit < 0)
        mpz_sub(acc, acc, b.get_mpz_t());
    else
        mpz_addmul(acc, term.value->get_mpz_t(), b.get_mpz_t());
}

// acc -= term * b
inline void deduct(mpz_t acc, const SparseTerm& term, const BigInt& b) {
    if (term.unit > 0)
        mpz_sub(acc, acc, b.get_mpz_t());
    else if (term.unit < 0)
        mpz_add(acc, acc, b.get_mpz_t());
    else
        mpz_submul(acc, term.value->get_mpz_t(), b.get_mpz_t());
}

} // namespace detail

// Cauchy product. Precision min(P_s + ord_t, P_t + ord_s). The loop runs over
// the nonzero terms of the sparser factor, so products with Euler/Pochhammer
// factors cost O(P * nnz).
inline LaurentSeries mul(const LaurentSeries& s, const LaurentSeries& t) {
    const std::int64_t os = s.order();
    const std::int64_t ot = t.order();
    const std::int64_t p = std::min(s.precision() + ot, t.precision() + os);
    const std::int64_t v = std::min(os + ot, p);
    std::vector<BigInt> out(static_cast<std::size_t>(p - v));
    if (out.empty()) return {v, std::move(out), p};

    const bool s_sparser = s.nonzero_count() <= t.nonzero_count();
    const LaurentSeries& sparse = s_sparser ? s : t;
    const LaurentSeries& dense = s_sparser ? t : s;
    const std::int64_t od = s_sparser ? ot : os;
    const auto dense_cs = dense.coefficients();

    for (const auto& term : detail::sparse_terms(sparse)) {
        const std::int64_t hi = p - term.exponent;
        for (std::int64_t e = od; e < hi; ++e) {
            const BigInt& b = dense_cs[static_cast<std::size_t>(e - dense.valuation())];
            if (sgn(b) == 0) continue;
            detail::accumulate(out[static_cast<std::size_t>(term.exponent + e - v)].get_mpz_t(), term, b);
        }
    }
    return {v, std::move(out), p};
}

// s / t for t with leading coefficient +1 or -1. Computed by forward
// substitution over the nonzero terms of t.
inline LaurentSeries divide(const LaurentSeries& s, const LaurentSeries& t) {
    const std::int64_t ot = t.order();
    if (ot >= t.precision()) throw non_invertible_error("divisor vanishes within its precision");
    const BigInt& lead = t[ot];
    if (mpz_cmpabs_ui(lead.get_mpz_t(), 1) != 0)
        throw non_invertible_error("leading coefficient " + lead.get_str() + " is not a unit");
    const bool lead_negative = sgn(lead) < 0;

    const std::int64_t os = s.order();
    const std::int64_t rel = std::min(s.precision() - os, t.precision() - ot);
    const std::int64_t p = os - ot + rel;
    const std::int64_t v = std::min(os - ot, p);

    std::vector<detail::SparseTerm> tail;
    for (const auto& term : detail::sparse_terms(t))
        if (term.exponent > ot) tail.push_back(term);

    std::vector<BigInt> w(static_cast<std::size_t>(rel));
    for (std::int64_t k = 0; k < rel; ++k) {
        mpz_class acc = s[os + k];
        for (const auto& term : tail) {
            const std::int64_t i = term.exponent - ot;
            if (i > k) break;
            detail::deduct(acc.get_mpz_t(), term, w[static_cast<std::size_t>(k - i)]);
        }
        if (lead_negative) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
        w[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return {v, std::move(w), p};
}

// Multiplicative inverse; valuation -ord(s), precision P - 2 ord(s).
inline LaurentSeries invert(const LaurentSeries& s) {
    const std::int64_t o = s.order();
    if (o >= s.precision()) throw non_invertible_error("series vanishes within its precision");
    return divide(LaurentSeries::constant(1, s.precision() - o), s);
}

inline LaurentSeries pow(const LaurentSeries& s, std::int64_t k) {
    if (k < 0) return pow(invert(s), -k);
    if (k == 0) return LaurentSeries::constant(1, std::max<std::int64_t>(0, s.precision() - s.order()));
    if (k == 1) return s;

    // Sparse bases (Euler products and the like) stay cheap under repeated
    // multiplication; squaring would densify them immediately.
    const auto len = static_cast<std::size_t>(s.precision() - s.valuation());
    const std::size_t nnz = s.nonzero_count();
    if (nnz * nnz <= 4 * len) {
        LaurentSeries r = s;
        for (std::int64_t i = 1; i < k; ++i) r = mul(r, s);
        return r;
    }
    LaurentSeries result = s;
    LaurentSeries base = s;
    std::int64_t e = k - 1;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return divide(a, b); }

// -- exponent maps --------------------------------------------------------

// q -> q^k. Output precision k*(P-1)+1.
inline LaurentSeries substitute_power(const LaurentSeries& s, std::int64_t k) {
    if (k <= 0) throw domain_error("substitute_power needs k >= 1, got " + std::to_string(k));
    if (k == 1) return s;
    const std::int64_t p = k * (s.precision() - 1) + 1;
    const std::int64_t v = std::min(k * s.valuation(), p);
    std::vector<BigInt> cs(static_cast<std::size_t>(p - v));
    for (std::int64_t n = s.valuation(); n < s.precision(); ++n) {
        const std::int64_t e = k * n;
        if (e >= v && e < p) cs[static_cast<std::size_t>(e - v)] = s[n];
    }
    return {v, std::move(cs), p};
}

// t_n = s_{a n + r}; precision ceil((P - r) / a).
inline LaurentSeries extract_progression(const LaurentSeries& s, std::int64_t a, std::int64_t r) {
    if (a < 1) throw domain_error("progression step must be positive, got " + std::to_string(a));
    if (r < 0 || r >= a)
        throw domain_error("progression residue " + std::to_string(r) + " outside [0, " + std::to_string(a) + ")");
    const std::int64_t p = detail::ceil_div(s.precision() - r, a);
    const std::int64_t v = std::min(detail::ceil_div(s.valuation() - r, a), p);
    std::vector<BigInt> cs(static_cast<std::size_t>(p - v));
    for (std::int64_t n = v; n < p; ++n) cs[static_cast<std::size_t>(n - v)] = s[a * n + r];
    return {v, std::move(cs), p};
}

// The involution q -> -q.
inline LaurentSeries negate_odd(const LaurentSeries& s) {
    std::vector<BigInt> cs(s.coefficients().begin(), s.coefficients().end());
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (detail::floor_mod(s.valuation() + static_cast<std::int64_t>(i), 2) == 1) cs[i] = -cs[i];
    return {s.valuation(), std::move(cs), s.precision()};
}

// -- residues -------------------------------------------------------------

inline LaurentSeries reduce_mod(const LaurentSeries& s, const Modulus& m) {
    if (m.is_exact()) return s;
    std::vector<BigInt> cs;
    cs.reserve(s.coefficients().size());
    for (const auto& c : s.coefficients()) cs.push_back(m.reduce(c));
    return {s.valuation(), std::move(cs), s.precision()};
}

struct Mismatch {
    std::int64_t exponent;
    BigInt left;  // residue (or exact value) on the left side
    BigInt right;
};

struct CongruenceReport {
    bool congruent = true;
    std::int64_t checked_below = 0;
    std::optional<Mismatch> mismatch;

    explicit operator bool() const noexcept { return congruent; }
};

// Compares s and t coefficientwise (mod m, or exactly) for every exponent
// below `up_to`. Asking beyond either precision is an error, never an
// implicit zero.
inline CongruenceReport congruent_mod(const LaurentSeries& s, const LaurentSeries& t, const Modulus& m,
                                      std::int64_t up_to) {
    const std::int64_t avail = std::min(s.precision(), t.precision());
    if (up_to > avail) throw insufficient_precision_error(up_to, avail);
    CongruenceReport report;
    report.checked_below = up_to;
    for (std::int64_t n = std::min(s.valuation(), t.valuation()); n < up_to; ++n) {
        BigInt a = m.reduce(s[n]);
        BigInt b = m.reduce(t[n]);
        if (a != b) {
            report.congruent = false;
            report.mismatch = Mismatch{n, std::move(a), std::move(b)};
            return report;
        }
    }
    return report;
}

// -- products -------------------------------------------------------------

// (q^a; q^b)_inf = prod_{j>=0} (1 - q^(a + j b)) truncated at q^prec.
inline LaurentSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t prec) {
    if (a < 1 || b < 1)
        throw domain_error("pochhammer needs positive a and b, got (" + std::to_string(a) + ", " +
                           std::to_string(b) + ")");
    if (prec < 0) throw domain_error("negative precision");
    std::vector<BigInt> cs(static_cast<std::size_t>(prec));
    if (prec == 0) return {0, std::move(cs), 0};
    cs[0] = 1;
    std::int64_t degree = 0; // cs[n] == 0 for n > degree
    for (std::int64_t e = a; e < prec; e += b) {
        const std::int64_t top = std::min(prec - 1, degree + e);
        for (std::int64_t n = top; n >= e; --n) {
            const auto& src = cs[static_cast<std::size_t>(n - e)];
            if (sgn(src) != 0) cs[static_cast<std::size_t>(n)] -= src;
        }
        degree = top;
    }
    return {0, std::move(cs), prec};
}

// Exponents k*j(3j-1)/2, j = 0, 1, -1, 2, -2, ... below prec, with signs
// (-1)^j. Ascending.
inline std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t k, std::int64_t prec) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t j = 0;; ++j) {
        const std::int64_t e1 = k * (j * (3 * j - 1) / 2);
        const std::int64_t e2 = k * (j * (3 * j + 1) / 2);
        if (e1 >= prec) break;
        const int sign = (j % 2 == 0) ? 1 : -1;
        out.emplace_back(e1, sign);
        if (j > 0 && e2 < prec) out.emplace_back(e2, sign);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// (q^k; q^k)_inf via Euler's pentagonal number theorem.
inline LaurentSeries euler_series(std::int64_t k, std::int64_t prec) {
    if (k < 1) throw domain_error("euler_series needs k >= 1, got " + std::to_string(k));
    if (prec < 0) throw domain_error("negative precision");
    std::vector<BigInt> cs(static_cast<std::size_t>(prec));
    for (const auto& [e, sign] : pentagonal_terms(k, prec)) cs[static_cast<std::size_t>(e)] = sign;
    return {0, std::move(cs), prec};
}

// A factor (q^step; q^step)_inf ^ power.
struct EulerFactor {
    std::int64_t step;
    std::int64_t power;

    friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
};

// Merges repeated steps and drops zero powers; result sorted by step.
inline std::vector<EulerFactor> normalize_factors(std::span<const EulerFactor> factors) {
    std::vector<EulerFactor> out(factors.begin(), factors.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.step < y.step; });
    std::vector<EulerFactor> merged;
    for (const auto& f : out) {
        if (f.step < 1) throw domain_error("Euler factor step must be positive");
        if (!merged.empty() && merged.back().step == f.step)
            merged.back().power += f.power;
        else
            merged.push_back(f);
    }
    std::erase_if(merged, [](const auto& f) { return f.power == 0; });
    return merged;
}

// prod (q^step; q^step)^power, exact, to precision prec. Each factor is
// applied as repeated sparse multiplication or division.
inline LaurentSeries euler_product(std::span<const EulerFactor> factors, std::int64_t prec) {
    LaurentSeries s = LaurentSeries::constant(1, prec);
    for (const auto& f : normalize_factors(factors)) {
        const LaurentSeries e = euler_series(f.step, prec);
        for (std::int64_t i = 0; i < f.power; ++i) s = mul(s, e);
        for (std::int64_t i = 0; i < -f.power; ++i) s = divide(s, e);
    }
    return s;
}

// -- text format ----------------------------------------------------------
//
//   v=<valuation> P=<precision>
//   <n>\t<c_n>        one line per nonzero coefficient, ascending n
//
// Lines starting with '#' are comments.

inline std::string to_text(const LaurentSeries& s) {
    std::string out = "v=" + std::to_string(s.valuation()) + " P=" + std::to_string(s.precision()) + "\n";
    const auto cs = s.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (sgn(cs[i]) == 0) continue;
        out += std::to_string(s.valuation() + static_cast<std::int64_t>(i));
        out += '\t';
        out += cs[i].get_str();
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::int64_t parse_int64(std::string_view text, std::size_t at) {
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw parse_error("malformed integer '" + std::string(text) + "'", at, {"integer"});
    return value;
}

inline BigInt parse_bigint(std::string_view text, std::size_t at) {
    const std::string_view digits = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? text.substr(1) : text;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error("malformed integer '" + std::string(text) + "'", at, {"integer"});
    BigInt v;
    v.set_str(std::string(digits), 10);
    if (text[0] == '-') v = -v;
    return v;
}

} // namespace detail

inline LaurentSeries parse_series_text(std::string_view text) {
    std::size_t pos = 0;
    bool have_header = false;
    std::int64_t v = 0, p = 0;
    std::vector<BigInt> cs;
    std::int64_t last = 0;
    bool any = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t at = pos;
        pos = eol + 1;
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line.substr(0, 2) != "v=") throw parse_error("expected series header", at, {"v=<valuation>"});
            const std::size_t sp = line.find(" P=");
            if (sp == std::string_view::npos) throw parse_error("expected precision in header", at, {"P=<precision>"});
            v = detail::parse_int64(line.substr(2, sp - 2), at + 2);
            p = detail::parse_int64(line.substr(sp + 3), at + sp + 3);
            if (p < v) throw parse_error("precision below valuation", at);
            cs.assign(static_cast<std::size_t>(p - v), BigInt{});
            have_header = true;
            continue;
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) throw parse_error("expected '<n>\\t<c>'", at, {"TAB"});
        const std::int64_t n = detail::parse_int64(line.substr(0, tab), at);
        if (n < v || n >= p) throw parse_error("exponent " + std::to_string(n) + " outside [v, P)", at);
        if (any && n <= last) throw parse_error("exponents must be strictly increasing", at);
        cs[static_cast<std::size_t>(n - v)] = detail::parse_bigint(line.substr(tab + 1), at + tab + 1);
        last = n;
        any = true;
    }
    if (!have_header) throw parse_error("missing series header", text.size(), {"v=<valuation>"});
    return {v, std::move(cs), p};
}

} // namespace hauptq
