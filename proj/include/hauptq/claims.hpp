#pragma once

// Congruence claims about coefficients of catalog series, stated on affine
// index maps n -> A n + B, and the engines that check them: claim
// verification, parity density profiles and progression scans.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hauptq/catalog.hpp"
#include "hauptq/error.hpp"
#include "hauptq/expr.hpp"
#include "hauptq/residue.hpp"

namespace hauptq {

// Largest coefficient index any built-in claim may touch (exclusive).
inline constexpr std::int64_t kClaimBudget = std::int64_t{1} << 22;

struct IndexMap {
    std::int64_t A = 1;
    std::int64_t B = 0;
    std::string provenance;

    std::int64_t operator()(std::int64_t n) const { return A * n + B; }
};

enum class ClaimKind { vanishing, parity_equal, series_congruence };

inline std::string to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::vanishing: return "vanishing";
    case ClaimKind::parity_equal: return "parityEqual";
    case ClaimKind::series_congruence: return "seriesCongruence";
    }
    return {};
}

// vanishing:          c(A n + B) = 0 (mod m)                       n_min <= n <= n_max
// parity_equal:       c(A n + B) = c2(A2 n + B2) (mod m)
// series_congruence:  sum_n c(A n + B) q^(s n + o) = rhs (mod m)   on exponents <= s n_max + o
struct ProgressionClaim {
    std::string id;
    std::string series;
    IndexMap map;
    std::uint32_t modulus = 2;
    ClaimKind kind = ClaimKind::vanishing;
    std::optional<IndexMap> second_map;
    std::string second_series; // parity_equal; empty means `series`
    std::string rhs;           // series_congruence, in the expression language
    std::int64_t embed_scale = 1;
    std::int64_t embed_offset = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 500;

    const std::string& other_series() const { return second_series.empty() ? series : second_series; }
};

enum class ClaimStatus { verified, refuted, insufficient };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::insufficient: return "insufficientPrecision";
    }
    return {};
}

struct ClaimReport {
    ClaimStatus status = ClaimStatus::verified;
    std::int64_t witness = 0;     // n (or the exponent, for series congruences) of the first failure
    std::uint32_t left = 0;       // residues at the witness
    std::uint32_t right = 0;
    std::int64_t checked = 0;     // number of n (or exponents) compared
    std::int64_t required = 0;    // coefficient bound needed, for insufficient
    std::int64_t available = 0;
};

// -- series cache ---------------------------------------------------------

// Residue expansions of catalog series keyed by (name, modulus). Readers
// share the lock; an extension recomputes at the larger precision under the
// exclusive lock.
class SeriesCache {
public:
    explicit SeriesCache(std::int64_t limit = kClaimBudget) : limit_(limit) {}

    std::int64_t limit() const noexcept { return limit_; }

    std::shared_ptr<const ResidueSeries> get(const std::string& name, std::uint32_t m, std::int64_t prec) {
        if (prec > limit_) throw insufficient_precision_error(prec, limit_);
        const auto key = std::make_pair(name, m);
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end() && it->second->precision() >= prec) return it->second;
        }
        std::unique_lock lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end() && it->second->precision() >= prec) return it->second;
        auto s = std::make_shared<const ResidueSeries>(catalog_series_mod(name, m, std::max<std::int64_t>(prec, 2)));
        entries_[key] = s;
        return s;
    }

private:
    std::int64_t limit_;
    std::shared_mutex mutex_;
    std::map<std::pair<std::string, std::uint32_t>, std::shared_ptr<const ResidueSeries>> entries_;
};

// Runs fn(0..count-1) on a small worker pool; fn must write its own slot.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard g(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

// -- verification ---------------------------------------------------------

// Coefficient bound (exclusive) per series that verifying c needs.
inline std::vector<std::pair<std::string, std::int64_t>> claim_requirements(const ProgressionClaim& c) {
    std::vector<std::pair<std::string, std::int64_t>> out{{c.series, c.map(c.n_max) + 1}};
    if (c.kind == ClaimKind::parity_equal && c.second_map) out.emplace_back(c.other_series(), (*c.second_map)(c.n_max) + 1);
    return out;
}

inline ClaimReport verify_claim(const ProgressionClaim& c, SeriesCache& cache) {
    if (c.map.A < 1) throw domain_error("claim " + c.id + ": index multiplier must be positive");
    if (c.kind == ClaimKind::parity_equal && !c.second_map)
        throw domain_error("claim " + c.id + ": parity comparison needs a second index map");
    ClaimReport rep;
    for (const auto& [name, need] : claim_requirements(c))
        if (need > cache.limit()) {
            rep.status = ClaimStatus::insufficient;
            rep.required = need;
            rep.available = cache.limit();
            return rep;
        }

    const auto s = cache.get(c.series, c.modulus, c.map(c.n_max) + 1);
    switch (c.kind) {
    case ClaimKind::vanishing:
        for (std::int64_t n = c.n_min; n <= c.n_max; ++n, ++rep.checked) {
            const auto v = (*s)[c.map(n)];
            if (v != 0) {
                rep.status = ClaimStatus::refuted;
                rep.witness = n;
                rep.left = v;
                return rep;
            }
        }
        return rep;
    case ClaimKind::parity_equal: {
        const auto t = cache.get(c.other_series(), c.modulus, (*c.second_map)(c.n_max) + 1);
        for (std::int64_t n = c.n_min; n <= c.n_max; ++n, ++rep.checked) {
            const auto a = (*s)[c.map(n)];
            const auto b = (*t)[(*c.second_map)(n)];
            if (a != b) {
                rep.status = ClaimStatus::refuted;
                rep.witness = n;
                rep.left = a;
                rep.right = b;
                return rep;
            }
        }
        return rep;
    }
    case ClaimKind::series_congruence: {
        const std::int64_t top = c.embed_scale * c.n_max + c.embed_offset; // last exponent compared
        const LaurentSeries rhs = evaluate(parse_expr(c.rhs), top + 1).to_laurent();
        if (rhs.precision() <= top) {
            rep.status = ClaimStatus::insufficient;
            rep.required = top + 1;
            rep.available = rhs.precision();
            return rep;
        }
        const Modulus mod = Modulus::of(c.modulus);
        for (std::int64_t e = std::min<std::int64_t>(0, rhs.valuation()); e <= top; ++e, ++rep.checked) {
            std::uint32_t lhs = 0;
            const std::int64_t d = e - c.embed_offset;
            if (d >= 0 && d % c.embed_scale == 0 && d / c.embed_scale >= c.n_min) lhs = (*s)[c.map(d / c.embed_scale)];
            const auto r = static_cast<std::uint32_t>(mod.reduce(rhs[e]).get_ui());
            if (lhs != r) {
                rep.status = ClaimStatus::refuted;
                rep.witness = e;
                rep.left = lhs;
                rep.right = r;
                return rep;
            }
        }
        return rep;
    }
    }
    return rep;
}

// Verifies every claim, warming the cache once per series first. Reports come
// back in input order.
inline std::vector<ClaimReport> verify_claims(const std::vector<ProgressionClaim>& claims, SeriesCache& cache) {
    std::map<std::pair<std::string, std::uint32_t>, std::int64_t> need;
    for (const auto& c : claims)
        for (const auto& [name, n] : claim_requirements(c))
            if (n <= cache.limit()) {
                auto& slot = need[{name, c.modulus}];
                slot = std::max(slot, n);
            }
    std::vector<std::pair<std::pair<std::string, std::uint32_t>, std::int64_t>> warm(need.begin(), need.end());
    parallel_for(warm.size(), [&](std::size_t i) { cache.get(warm[i].first.first, warm[i].first.second, warm[i].second); });

    std::vector<ClaimReport> out(claims.size());
    parallel_for(claims.size(), [&](std::size_t i) { out[i] = verify_claim(claims[i], cache); });
    return out;
}

// -- the catalog ----------------------------------------------------------

namespace detail {

inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::int64_t default_nmax(std::int64_t A) { return A <= 100 ? 500 : std::max<std::int64_t>(100, 50000 / A); }

inline bool fits(std::int64_t A, std::int64_t B, std::int64_t n_max) { return A * n_max + B < kClaimBudget; }

class ClaimBuilder {
public:
    std::vector<ProgressionClaim> claims;

    void vanishing(std::string id, std::string series, std::int64_t A, std::int64_t B, std::string prov,
                   std::int64_t n_min = 0) {
        const std::int64_t n_max = default_nmax(A);
        if (!fits(A, B, n_max)) return;
        ProgressionClaim c;
        c.id = std::move(id);
        c.series = std::move(series);
        c.map = {A, B, std::move(prov)};
        c.n_min = n_min;
        c.n_max = n_max;
        claims.push_back(std::move(c));
    }

    void parity(std::string id, std::string s1, std::int64_t A1, std::int64_t B1, std::string s2, std::int64_t A2,
                std::int64_t B2, std::string prov) {
        const std::int64_t n_max = default_nmax(std::max(A1, A2));
        if (!fits(A1, B1, n_max) || !fits(A2, B2, n_max)) return;
        ProgressionClaim c;
        c.id = std::move(id);
        c.series = std::move(s1);
        c.map = {A1, B1, prov};
        c.kind = ClaimKind::parity_equal;
        c.second_map = IndexMap{A2, B2, prov};
        if (s2 != c.series) c.second_series = std::move(s2);
        c.n_max = n_max;
        claims.push_back(std::move(c));
    }

    void congruence(std::string id, std::string series, std::int64_t A, std::int64_t B, std::string rhs,
                    std::string prov, std::int64_t n_max = 500, std::int64_t scale = 1, std::int64_t offset = 0) {
        ProgressionClaim c;
        c.id = std::move(id);
        c.series = std::move(series);
        c.map = {A, B, std::move(prov)};
        c.kind = ClaimKind::series_congruence;
        c.rhs = format(parse_expr(rhs));
        c.embed_scale = scale;
        c.embed_offset = offset;
        c.n_max = n_max;
        claims.push_back(std::move(c));
    }
};

inline std::string S(std::int64_t v) { return std::to_string(v); }

inline const std::vector<std::int64_t>& level6_primes() {
    static const std::vector<std::int64_t> ps{3, 5, 7, 11, 13, 19}; // 3, 5, 7 mod 8
    return ps;
}

inline const std::vector<std::int64_t>& level10_primes() {
    static const std::vector<std::int64_t> ps{3, 7, 11, 19}; // 3 mod 4
    return ps;
}

// Vanishing families from the eigenform relations: for the level-6 series
// c(3^m P^2 p (8pn + 8j + p)) with P a product of k primes, and for j10
// c(P^2 p (4pn + 4j + p)).
inline void hecke_families(ClaimBuilder& b) {
    struct Family {
        std::string series;
        std::vector<std::int64_t> ms; // powers of 3 in front
        std::int64_t step;            // 8 or 4
        const std::vector<std::int64_t>& primes;
    };
    const Family families[] = {{"j6s", {0, 1}, 8, level6_primes()},
                               {"j6", {1}, 8, level6_primes()},
                               {"j10", {0}, 4, level10_primes()}};
    for (const auto& f : families) {
        const std::string st = S(f.step);
        for (std::int64_t m : f.ms) {
            const std::int64_t t = ipow(3, m);
            // equal primes: P = p^k
            for (std::int64_t k = 0; k <= 2; ++k)
                for (std::int64_t p : f.primes)
                    for (std::int64_t j = 1; j < p; ++j) {
                        const std::int64_t pk = ipow(p, 2 * k + 1);
                        const std::int64_t A = t * pk * f.step * p, B = t * pk * (f.step * j + p);
                        b.vanishing("hecke-" + f.series + "-m" + S(m) + "-p" + S(p) + "-k" + S(k) + "-j" + S(j),
                                    f.series, A, B,
                                    (m ? "3 " : "") + std::string("p^(2k+1)(") + st + "pn+" + st + "j+p), p=" + S(p) +
                                        ", k=" + S(k) + ", j=" + S(j));
                    }
            // two distinct primes: P = p1
            for (std::int64_t p1 : f.primes)
                for (std::int64_t p2 : f.primes) {
                    if (p1 == p2) continue;
                    for (std::int64_t j = 1; j < p2; ++j) {
                        const std::int64_t A = t * p1 * p1 * p2 * f.step * p2;
                        const std::int64_t B = t * p1 * p1 * p2 * (f.step * j + p2);
                        b.vanishing("hecke-" + f.series + "-m" + S(m) + "-p" + S(p1) + "x" + S(p2) + "-j" + S(j),
                                    f.series, A, B,
                                    (m ? "3 " : "") + std::string("p1^2 p2(") + st + "p2 n+" + st + "j+p2), p1=" +
                                        S(p1) + ", p2=" + S(p2) + ", j=" + S(j));
                    }
                }
        }
    }
}

// delta in [0, p) with p | step*delta + i.
inline std::int64_t shift_delta(std::int64_t p, std::int64_t step, std::int64_t i) {
    for (std::int64_t d = 0; d < p; ++d)
        if ((step * d + i) % p == 0) return d;
    return -1;
}

inline void shift_families(ClaimBuilder& b) {
    for (std::int64_t p : level6_primes()) {
        const std::int64_t i = p % 8;
        for (std::int64_t k = 1; k <= 2; ++k) {
            const std::int64_t d0 = shift_delta(p, 8, i);
            for (std::int64_t d : {d0, d0 + p}) {
                const std::int64_t u = 8 * d + i, t = u / p;
                const std::string tag = "-p" + S(p) + "-k" + S(k) + "-d" + S(d);
                const std::string prov = "p=" + S(p) + ", k=" + S(k) + ", delta=" + S(d);
                b.parity("shift-j6" + tag, "j6", 24 * ipow(p, k + 1), 3 * p * u, "j6", 24 * ipow(p, k - 1), 3 * t,
                         "3p(8p^k n+8delta+i) vs 24p^(k-1)n+3(8delta+i)/p, " + prov);
                for (std::int64_t m : {0, 1}) {
                    const std::int64_t s = ipow(3, m);
                    b.parity("shift-j6s-m" + S(m) + tag, "j6s", s * 8 * ipow(p, k + 1), s * p * u, "j6s",
                             s * 8 * ipow(p, k - 1), s * t,
                             "3^m p(8p^k n+8delta+i) vs 3^m(8p^(k-1)n+(8delta+i)/p), m=" + S(m) + ", " + prov);
                }
            }
        }
        for (std::int64_t k = 1; k <= 2; ++k) {
            const std::int64_t p2k = ipow(p, 2 * k);
            const std::string tag = "-p" + S(p) + "-k" + S(k);
            b.parity("square-j6" + tag, "j6", 24, 3, "j6", 24 * p2k, 3 * p2k,
                     "24n+3 vs 3p^(2k)(8n+1), p=" + S(p) + ", k=" + S(k));
            for (std::int64_t m : {0, 1}) {
                const std::int64_t s = ipow(3, m);
                b.parity("square-j6s-m" + S(m) + tag, "j6s", 8 * s, s, "j6s", 8 * s * p2k, s * p2k,
                         "3^m(8n+1) vs 3^m p^(2k)(8n+1), m=" + S(m) + ", p=" + S(p) + ", k=" + S(k));
            }
        }
    }
    for (std::int64_t p : level10_primes()) {
        for (std::int64_t k = 1; k <= 2; ++k) {
            const std::int64_t d0 = shift_delta(p, 4, 3);
            for (std::int64_t d : {d0, d0 + p}) {
                const std::int64_t u = 4 * d + 3;
                b.parity("shift-j10-p" + S(p) + "-k" + S(k) + "-d" + S(d), "j10", 4 * ipow(p, k + 1), p * u, "j10",
                         4 * ipow(p, k - 1), u / p,
                         "p(4p^k n+4delta+3) vs 4p^(k-1)n+(4delta+3)/p, p=" + S(p) + ", k=" + S(k) +
                             ", delta=" + S(d));
            }
            const std::int64_t p2k = ipow(p, 2 * k);
            b.parity("square-j10-p" + S(p) + "-k" + S(k), "j10", 4, 1, "j10", 4 * p2k, p2k,
                     "4n+1 vs p^(2k)(4n+1), p=" + S(p) + ", k=" + S(k));
        }
    }
}

inline void direct_claims(ClaimBuilder& b) {
    b.vanishing("even-j6s-2n", "j6s", 2, 0, "2n");
    b.vanishing("even-j6-2n", "j6", 2, 0, "2n");
    b.vanishing("even-j6-4n+1", "j6", 4, 1, "4n+1");
    for (std::int64_t r : {11, 19}) {
        b.vanishing("even-j6s-24n+" + S(r), "j6s", 24, r, "24n+" + S(r));
        b.vanishing("even-j6-24n+" + S(r), "j6", 24, r, "24n+" + S(r));
    }
    b.parity("same-j6s-j6-4n+3", "j6s", 4, 3, "j6", 4, 3, "4n+3 in both");
    b.parity("same-j6s-8n+1-j6-24n+3", "j6s", 8, 1, "j6", 24, 3, "8n+1 vs 24n+3");
    for (std::int64_t r : {7, 23}) {
        b.vanishing("even-j10-40n+" + S(r), "j10", 40, r, "40n+" + S(r));
        b.vanishing("even-j10s-40n+" + S(r), "j10s", 40, r, "40n+" + S(r));
    }
    b.vanishing("even-j10-2n", "j10", 2, 0, "2n");
    b.vanishing("even-j10-8n+3", "j10", 8, 3, "8n+3");
    for (std::int64_t i : {0, 1, 2}) b.vanishing("even-j10s-4n+" + S(i), "j10s", 4, i, "4n+" + S(i));
    b.parity("same-j10s-8n+3-j10s-40n+15", "j10s", 8, 3, "j10s", 40, 15, "8n+3 vs 40n+15");
    b.parity("same-j10s-j10-40n+15", "j10s", 40, 15, "j10", 40, 15, "40n+15 in both");
}

inline void generating_function_claims(ClaimBuilder& b) {
    b.congruence("gf-F6-2n", "F6", 2, 0, "poch(2,2)^3/poch(6,6)^3", "F6(2n)");
    b.congruence("gf-F6-4n", "F6", 4, 0, "poch(1,1)*poch(2,2)/poch(3,3)^3", "F6(4n)");
    b.congruence("gf-F6-8n+4", "F6", 8, 4, "poch(3,3)^3", "F6(8n+4)");
    b.congruence("gf-F6-24n+4", "F6", 24, 4, "poch(1,1)*poch(2,2)", "F6(24n+4)");
    b.congruence("gf-F6s-4n", "F6s", 4, 0, "poch(1,1)^3/poch(3,3)^3", "F6*(4n)");
    b.congruence("gf-F6s-8n+2", "F6s", 8, 2, "poch(1,1)^3", "F6*(8n+2)");
    // index 1 carries the constant of the Hauptmodul, so n starts at 1
    b.vanishing("gf-F6-2n+1", "F6", 2, 1, "F6(2n+1), n >= 1", 1);
    b.vanishing("gf-F6-4n+2", "F6", 4, 2, "F6(4n+2)");
    b.vanishing("gf-F6s-2n+1", "F6s", 2, 1, "F6*(2n+1)");
    b.vanishing("gf-F6-24n+12", "F6", 24, 12, "F6(8(3n+1)+4)");
    b.vanishing("gf-F6-24n+20", "F6", 24, 20, "F6(8(3n+2)+4)");
    b.parity("gf-F6s-F6-4n", "F6s", 4, 0, "F6", 4, 0, "F6*(4n) vs F6(4n)");
    b.parity("gf-F6s-8n+2-F6-24n+4", "F6s", 8, 2, "F6", 24, 4, "F6*(8n+2) vs F6(24n+4)");

    b.congruence("gf-F10-4n+2", "F10", 4, 2, "poch(1,1)*poch(5,5)", "F10(4n+2)");
    b.congruence("gf-F10-4n", "F10", 4, 0, "poch(4,4)/poch(10,10)", "F10(4n)");
    b.vanishing("gf-F10-2n+1", "F10", 2, 1, "F10(2n+1), n >= 1", 1);
    b.vanishing("gf-F10-8n+4", "F10", 8, 4, "F10(8n+4)");
    b.congruence("gf-F10-8n", "F10", 8, 0, "poch(2,2)/poch(5,5)", "F10(8n)");
    b.congruence("gf-F10s-8n", "F10s", 8, 0, "poch(2,2)/poch(5,5)", "F10*(8n)");
    b.congruence("gf-F10s-n", "F10s", 1, 0, "1/(poch(4,4)*poch(20,20))", "F10*(n)");
    b.congruence("gf-F10s-4n", "F10s", 4, 0, "1/(poch(1,1)*poch(5,5))", "F10*(4n)");
    b.congruence("gf-F10s-4n-split", "F10s", 4, 0, "poch(4,4)/poch(10,10)+q*poch(20,20)/poch(2,2)",
                 "F10*(4n), 2-dissected");
    for (std::int64_t i : {1, 2, 3}) b.vanishing("gf-F10s-4n+" + S(i), "F10s", 4, i, "F10*(4n+" + S(i) + ")");
    for (std::int64_t i : {8, 24}) {
        b.vanishing("gf-F10-40n+" + S(i), "F10", 40, i, "F10(40n+" + S(i) + ")");
        b.vanishing("gf-F10s-40n+" + S(i), "F10s", 40, i, "F10*(40n+" + S(i) + ")");
    }
    b.parity("gf-F10s-8n+4-F10s-40n+16", "F10s", 8, 4, "F10s", 40, 16, "F10*(8n+4) vs F10*(40n+16)");
    b.parity("gf-F10s-F10-40n+16", "F10s", 40, 16, "F10", 40, 16, "F10*(40n+16) vs F10(40n+16)");

    // eta-product bridges: exponents below 16000 and 8000 respectively
    b.congruence("bridge-F6-eta8eta16", "F6", 24, 4, "eta(8)*eta(16)", "sum F6(24n+4) q^(8n+1)", 1999, 8, 1);
    b.congruence("bridge-F10-eta4eta20", "F10", 4, 2, "eta(4)*eta(20)", "sum F10(4n+2) q^(4n+1)", 1999, 4, 1);
}

} // namespace detail

inline const std::vector<ProgressionClaim>& builtin_claims() {
    static const std::vector<ProgressionClaim> claims = [] {
        detail::ClaimBuilder b;
        detail::direct_claims(b);
        detail::hecke_families(b);
        detail::shift_families(b);
        detail::generating_function_claims(b);
        return std::move(b.claims);
    }();
    return claims;
}

// Alternative readings of index formulas whose printed form is ambiguous.
// Not part of the gating catalog; each records what the computation says.
inline const std::vector<ProgressionClaim>& reading_claims() {
    static const std::vector<ProgressionClaim> claims = [] {
        using detail::S;
        detail::ClaimBuilder b;
        // Printed second index 3^m(8p^(k-1)n + (8delta+i-p)/p) + 3; differs from
        // the corrected form only when m = 0.
        for (std::int64_t p : detail::level6_primes()) {
            const std::int64_t i = p % 8, d = detail::shift_delta(p, 8, i), u = 8 * d + i, t = u / p;
            b.parity("reading-shift-j6s-m0-p" + S(p) + "-k1-d" + S(d) + "-printed", "j6s", 8 * p * p, p * u, "j6s", 8,
                     t + 2, "printed reading 8p^(k-1)n+(8delta+i-p)/p+3, m=0, p=" + S(p) + ", k=1, delta=" + S(d));
        }
        // The integrality witness (4delta+3-p)/(4p) gives 4(p^(k-1)n + w) + 1,
        // which coincides with the printed (4delta+3)/p.
        b.parity("reading-shift-j10-p3-k1-d0-witness", "j10", 36, 9, "j10", 4, 1,
                 "witness reading 4(p^(k-1)n+(4delta+3-p)/(4p))+1, p=3, k=1, delta=0");
        return std::move(b.claims);
    }();
    return claims;
}

inline const ProgressionClaim& find_claim(std::string_view id) {
    for (const auto* list : {&builtin_claims(), &reading_claims()})
        for (const auto& c : *list)
            if (c.id == id) return c;
    throw catalog_error("unknown claim '" + std::string(id) + "'");
}

// `name[,name2] A B [A2 B2] mod=m nMax=n kind=k [rhs=... embed=s,o] [status=...] # id: provenance`
inline std::string claim_line(const ProgressionClaim& c, const ClaimReport* rep = nullptr) {
    std::string out = c.series;
    if (c.kind == ClaimKind::parity_equal && !c.second_series.empty()) out += "," + c.second_series;
    out += " " + std::to_string(c.map.A) + " " + std::to_string(c.map.B);
    if (c.kind == ClaimKind::parity_equal && c.second_map)
        out += " " + std::to_string(c.second_map->A) + " " + std::to_string(c.second_map->B);
    out += " mod=" + std::to_string(c.modulus);
    if (c.n_min != 0) out += " nMin=" + std::to_string(c.n_min);
    out += " nMax=" + std::to_string(c.n_max) + " kind=" + to_string(c.kind);
    if (c.kind == ClaimKind::series_congruence)
        out += " rhs=" + c.rhs + " embed=" + std::to_string(c.embed_scale) + "," + std::to_string(c.embed_offset);
    if (rep) {
        out += " status=" + to_string(rep->status);
        if (rep->status == ClaimStatus::refuted) {
            out += "@" + std::to_string(rep->witness) + " residues=" + std::to_string(rep->left) + "," +
                   std::to_string(rep->right);
        } else if (rep->status == ClaimStatus::insufficient) {
            out += "@" + std::to_string(rep->required) + " available=" + std::to_string(rep->available);
        } else {
            out += " checked=" + std::to_string(rep->checked);
        }
    }
    out += " # " + c.id + ": " + c.map.provenance;
    return out;
}

// -- densities and scans --------------------------------------------------

struct DensityPoint {
    std::int64_t X;
    std::int64_t count; // n in [1, X] with c(A n + B) = 0 mod m
    Rational fraction;
};

inline std::vector<DensityPoint> density_profile(const std::string& series, const IndexMap& map, std::uint32_t m,
                                                 const std::vector<std::int64_t>& Xs, SeriesCache& cache) {
    std::vector<DensityPoint> out;
    std::int64_t top = 0;
    for (auto x : Xs) top = std::max(top, x);
    if (top <= 0) return out;
    const auto s = cache.get(series, m, map(top) + 1);
    std::vector<std::int64_t> sorted(Xs.begin(), Xs.end());
    std::int64_t count = 0, n = 0;
    std::map<std::int64_t, std::int64_t> at;
    std::sort(sorted.begin(), sorted.end());
    for (auto x : sorted) {
        if (x <= 0) continue;
        while (n < x) {
            ++n;
            if ((*s)[map(n)] == 0) ++count;
        }
        at[x] = count;
    }
    for (auto x : Xs) {
        if (x <= 0) continue;
        Rational f(BigInt(static_cast<long>(at[x])), BigInt(static_cast<long>(x)));
        f.canonicalize();
        out.push_back({x, at[x], f});
    }
    return out;
}

struct ScanOptions {
    std::int64_t a_max = 0;
    std::int64_t n_max = 0;
    std::int64_t a_mod = 1; // keep A = 0 (mod a_mod)
    std::optional<std::int64_t> b_mod; // and B = b_mod (mod a_mod)
};

// Every (A, B), 1 <= A <= a_max, 0 <= B < A, with c(A n + B) = 0 (mod m) for
// 0 <= n <= n_max; A ascending, then B.
inline std::vector<std::pair<std::int64_t, std::int64_t>> scan_progressions(const std::string& series, std::uint32_t m,
                                                                            const ScanOptions& opt, SeriesCache& cache) {
    if (opt.a_mod < 1) throw domain_error("A modulus must be positive");
    std::vector<std::int64_t> As;
    for (std::int64_t A = 1; A <= opt.a_max; ++A)
        if (A % opt.a_mod == 0) As.push_back(A);
    if (As.empty()) return {};
    const auto s = cache.get(series, m, As.back() * opt.n_max + As.back());
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> per(As.size());
    parallel_for(As.size(), [&](std::size_t i) {
        const std::int64_t A = As[i];
        for (std::int64_t B = 0; B < A; ++B) {
            if (opt.b_mod && detail::floor_mod(B - *opt.b_mod, opt.a_mod) != 0) continue;
            bool ok = true;
            for (std::int64_t n = 0; n <= opt.n_max && ok; ++n) ok = (*s)[A * n + B] == 0;
            if (ok) per[i].emplace_back(A, B);
        }
    });
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

} // namespace hauptq
