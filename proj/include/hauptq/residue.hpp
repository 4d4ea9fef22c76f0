#pragma once

// Truncated series with coefficients in Z/mZ. Used where only residues are
// needed (parity claims, density counts) and the exact coefficients would be
// far too large to carry at a few million terms.
//
// For m = 2 Euler products are computed on bit-packed words: the Frobenius
// congruence (q^k;q^k)^2 = (q^2k;q^2k) mod 2 rewrites any product of Euler
// factors as a product of distinct factors to the first power, each of which
// is a handful of shifted XORs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hauptq/error.hpp"
#include "hauptq/series.hpp"

namespace hauptq {

class ResidueSeries {
public:
    ResidueSeries() = default;

    ResidueSeries(std::int64_t valuation, std::vector<std::uint32_t> coeffs, std::int64_t precision, std::uint32_t m)
        : valuation_(valuation), precision_(precision), modulus_(m), coeffs_(std::move(coeffs)) {
        if (m < 2) throw domain_error("modulus must be at least 2");
        if (precision < valuation || static_cast<std::int64_t>(coeffs_.size()) != precision - valuation)
            throw construction_error("residue series window does not match coefficient count");
    }

    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t precision() const noexcept { return precision_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::span<const std::uint32_t> coefficients() const noexcept { return coeffs_; }

    std::uint32_t operator[](std::int64_t n) const {
        if (n >= precision_) throw insufficient_precision_error(n + 1, precision_);
        if (n < valuation_) return 0;
        return coeffs_[static_cast<std::size_t>(n - valuation_)];
    }

    friend bool operator==(const ResidueSeries&, const ResidueSeries&) = default;

private:
    std::int64_t valuation_ = 0;
    std::int64_t precision_ = 0;
    std::uint32_t modulus_ = 2;
    std::vector<std::uint32_t> coeffs_;
};

inline ResidueSeries reduce(const LaurentSeries& s, std::uint32_t m) {
    const Modulus mod = Modulus::of(m);
    std::vector<std::uint32_t> cs;
    cs.reserve(s.coefficients().size());
    for (const auto& c : s.coefficients()) cs.push_back(static_cast<std::uint32_t>(mod.reduce(c).get_ui()));
    return {s.valuation(), std::move(cs), s.precision(), m};
}

// Lifts residues back to integers in [0, m).
inline LaurentSeries lift(const ResidueSeries& s) {
    std::vector<BigInt> cs;
    cs.reserve(s.coefficients().size());
    for (auto c : s.coefficients()) cs.emplace_back(static_cast<unsigned long>(c));
    return {s.valuation(), std::move(cs), s.precision()};
}

inline ResidueSeries add(const ResidueSeries& s, const ResidueSeries& t) {
    if (s.modulus() != t.modulus()) throw domain_error("adding residue series with different moduli");
    const std::int64_t p = std::min(s.precision(), t.precision());
    const std::int64_t v = std::min({s.valuation(), t.valuation(), p});
    const std::uint64_t m = s.modulus();
    std::vector<std::uint32_t> cs(static_cast<std::size_t>(p - v));
    for (std::int64_t n = v; n < p; ++n)
        cs[static_cast<std::size_t>(n - v)] = static_cast<std::uint32_t>((std::uint64_t{s[n]} + t[n]) % m);
    return {v, std::move(cs), p, s.modulus()};
}

// c * s with c an arbitrary integer.
inline ResidueSeries scale(const ResidueSeries& s, const BigInt& c) {
    const std::uint64_t m = s.modulus();
    const std::uint64_t r = Modulus::of(static_cast<std::int64_t>(m)).reduce(c).get_ui();
    std::vector<std::uint32_t> cs(s.coefficients().begin(), s.coefficients().end());
    for (auto& x : cs) x = static_cast<std::uint32_t>(x * r % m);
    return {s.valuation(), std::move(cs), s.precision(), s.modulus()};
}

inline ResidueSeries shift(const ResidueSeries& s, std::int64_t e) {
    std::vector<std::uint32_t> cs(s.coefficients().begin(), s.coefficients().end());
    return {s.valuation() + e, std::move(cs), s.precision() + e, s.modulus()};
}

inline ResidueSeries constant_residue(const BigInt& c, std::int64_t prec, std::uint32_t m) {
    return reduce(LaurentSeries::constant(c, prec), m);
}

namespace detail {

// Rewrites prod E_k^{r_k} (E_k = (q^k;q^k)) mod 2 as a product of distinct
// E_k to the first power, discarding factors with k >= prec (they are 1 to
// that precision).
inline std::vector<std::int64_t> frobenius_reduce(std::span<const EulerFactor> factors, std::int64_t prec) {
    std::map<std::int64_t, std::int64_t> pending;
    for (const auto& f : normalize_factors(factors)) pending[f.step] += f.power;
    std::vector<std::int64_t> kept;
    while (!pending.empty()) {
        auto it = pending.begin();
        const auto [k, r] = *it;
        pending.erase(it);
        if (k >= prec) break; // the map is ordered, so every remaining step is also too large
        const std::int64_t a = floor_div(r, 2);
        if (r - 2 * a == 1) kept.push_back(k);
        if (a != 0) pending[2 * k] += a;
    }
    return kept;
}

class BitSeries {
public:
    explicit BitSeries(std::int64_t prec) : prec_(prec), words_(static_cast<std::size_t>((prec + 63) / 64), 0) {}

    std::int64_t precision() const noexcept { return prec_; }

    void set(std::int64_t n) { words_[static_cast<std::size_t>(n >> 6)] |= std::uint64_t{1} << (n & 63); }
    bool get(std::int64_t n) const { return (words_[static_cast<std::size_t>(n >> 6)] >> (n & 63)) & 1u; }

    // out ^= (*this) << e, truncated to the precision.
    void xor_shifted_into(BitSeries& out, std::int64_t e) const {
        const std::size_t nw = words_.size();
        const auto ws = static_cast<std::size_t>(e >> 6);
        const unsigned bs = static_cast<unsigned>(e & 63);
        if (ws >= nw) return;
        std::uint64_t* dst = out.words_.data();
        const std::uint64_t* src = words_.data();
        if (bs == 0) {
            for (std::size_t i = ws; i < nw; ++i) dst[i] ^= src[i - ws];
        } else {
            dst[ws] ^= src[0] << bs;
            for (std::size_t i = ws + 1; i < nw; ++i) dst[i] ^= (src[i - ws] << bs) | (src[i - ws - 1] >> (64 - bs));
        }
    }

    void clear_tail() {
        if (prec_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (prec_ % 64)) - 1;
    }

    void swap(BitSeries& other) noexcept { words_.swap(other.words_); }

    void reset() { std::fill(words_.begin(), words_.end(), 0); }

private:
    std::int64_t prec_;
    std::vector<std::uint64_t> words_;
};

inline ResidueSeries euler_product_gf2(std::span<const EulerFactor> factors, std::int64_t prec) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(prec), 0);
    if (prec == 0) return {0, std::move(out), 0, 2};
    const auto kept = frobenius_reduce(factors, prec);

    BitSeries acc(prec), tmp(prec);
    acc.set(0);
    for (std::int64_t k : kept) {
        tmp.reset();
        for (const auto& term : pentagonal_terms(k, prec)) acc.xor_shifted_into(tmp, term.first);
        acc.swap(tmp);
    }
    acc.clear_tail();
    for (std::int64_t n = 0; n < prec; ++n) out[static_cast<std::size_t>(n)] = acc.get(n) ? 1u : 0u;
    return {0, std::move(out), prec, 2};
}

inline ResidueSeries euler_product_generic(std::span<const EulerFactor> factors, std::int64_t prec, std::uint32_t m) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(prec), 0);
    if (prec > 0) c[0] = 1 % m;
    const std::uint64_t mm = m;
    for (const auto& f : normalize_factors(factors)) {
        auto terms = pentagonal_terms(f.step, prec);
        terms.erase(terms.begin()); // the constant 1
        for (std::int64_t i = 0; i < f.power; ++i) {
            // c *= E: descending so that c[n - e] is still the old value
            for (std::int64_t n = prec - 1; n > 0; --n) {
                std::uint64_t acc = c[static_cast<std::size_t>(n)];
                for (const auto& [e, sign] : terms) {
                    if (e > n) break;
                    const std::uint64_t x = c[static_cast<std::size_t>(n - e)];
                    acc += sign > 0 ? x : mm - x;
                }
                c[static_cast<std::size_t>(n)] = acc % mm;
            }
        }
        for (std::int64_t i = 0; i < -f.power; ++i) {
            // c /= E: ascending recurrence over the quotient
            for (std::int64_t n = 1; n < prec; ++n) {
                std::uint64_t acc = c[static_cast<std::size_t>(n)];
                for (const auto& [e, sign] : terms) {
                    if (e > n) break;
                    const std::uint64_t x = c[static_cast<std::size_t>(n - e)];
                    acc += sign > 0 ? mm - x : x;
                }
                c[static_cast<std::size_t>(n)] = acc % mm;
            }
        }
    }
    std::vector<std::uint32_t> out(c.begin(), c.end());
    return {0, std::move(out), prec, m};
}

} // namespace detail

// prod (q^step;q^step)^power mod m, to precision prec.
inline ResidueSeries euler_product_mod(std::span<const EulerFactor> factors, std::int64_t prec, std::uint32_t m) {
    if (m < 2) throw domain_error("modulus must be at least 2");
    if (prec < 0) throw domain_error("negative precision");
    if (m == 2) return detail::euler_product_gf2(factors, prec);
    return detail::euler_product_generic(factors, prec, m);
}

} // namespace hauptq
