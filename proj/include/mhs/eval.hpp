#pragma once

/// Evaluators for the nested partial sums H(s;n) (strictly increasing
/// indices) and S(s;n) (weakly increasing), exact and modulo p^k, plus
/// Stirling numbers of the first kind and p-adic valuations of H(s;p-1).
///
/// Both evaluators run the same O(l*n) rolling-row DP; the exact variant
/// carries rationals, the modular one 64-bit residues with a shared
/// inverse table per ring.

#include "mhs/composition.hpp"
#include "mhs/integer.hpp"
#include "mhs/modular.hpp"
#include "mhs/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhs {

/// Raised when an exact evaluation would exceed the configured work bound.
struct WorkBoundError : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kDefaultWorkBound = 1'000'000;

namespace detail {
inline void check_work_bound(const Composition& s, std::uint64_t n,
                             std::uint64_t bound) {
    if (static_cast<std::uint64_t>(s.length()) * n > bound)
        throw WorkBoundError(
            "exact evaluation of length " + std::to_string(s.length()) + " at n = " +
            std::to_string(n) + " exceeds the work bound " + std::to_string(bound) +
            "; use modular mode");
}
} // namespace detail

/// H(s;n) = sum over 1 <= k_1 < ... < k_l <= n of prod k_i^{-s_i}.
/// H(empty;n) = 1; H(s;r) = 0 for r < l.
inline Rational H_exact(const Composition& s, std::uint64_t n,
                        std::uint64_t work_bound = kDefaultWorkBound) {
    const std::size_t l = s.length();
    if (l == 0) return Rational(1);
    if (n < l) return Rational(0);
    detail::check_work_bound(s, n, work_bound);
    std::vector<Rational> row(l + 1, Rational(0));
    row[0] = Rational(1);
    for (std::uint64_t m = 1; m <= n; ++m) {
        Integer mm(static_cast<long long>(m));
        for (std::size_t j = l; j >= 1; --j) {
            if (row[j - 1].is_zero()) continue;
            Rational pw(Integer(1), mm.pow(static_cast<std::uint64_t>(s.parts()[j - 1])));
            row[j] += row[j - 1] * pw;
        }
    }
    return row[l];
}

/// S(s;n): same but with weakly increasing indices.
inline Rational S_exact(const Composition& s, std::uint64_t n,
                        std::uint64_t work_bound = kDefaultWorkBound) {
    const std::size_t l = s.length();
    if (l == 0) return Rational(1);
    if (n < 1) return Rational(0);
    detail::check_work_bound(s, n, work_bound);
    std::vector<Rational> row(l + 1, Rational(0));
    row[0] = Rational(1);
    for (std::uint64_t m = 1; m <= n; ++m) {
        Integer mm(static_cast<long long>(m));
        for (std::size_t j = 1; j <= l; ++j) {
            if (row[j - 1].is_zero()) continue;
            Rational pw(Integer(1), mm.pow(static_cast<std::uint64_t>(s.parts()[j - 1])));
            row[j] += row[j - 1] * pw;
        }
    }
    return row[l];
}

/// Modular evaluator bound to one ring Z/p^k. Keeps the inverse table for
/// 1..p-1 and memoizes results per composition, so sweeps that revisit
/// coarsenings, splits and duals stay cheap. Requires n < p throughout.
class ModEvaluator {
public:
    explicit ModEvaluator(PrimePowerRing ring)
        : ring_(ring), inv_(inverse_table(ring, ring.p - 1)) {}

    const PrimePowerRing& ring() const { return ring_; }

    std::uint64_t H(const Composition& s, std::uint64_t n) {
        return eval(s, n, /*strict=*/true, memo_h_);
    }
    std::uint64_t S(const Composition& s, std::uint64_t n) {
        return eval(s, n, /*strict=*/false, memo_s_);
    }

    /// inv(m)^e for 1 <= m <= p-1.
    std::uint64_t inv_pow(std::uint64_t m, std::uint64_t e) const {
        return ring_.pow(inv_[m], e);
    }

private:
    using Memo = std::map<std::pair<std::vector<std::int64_t>, std::uint64_t>,
                          std::uint64_t>;

    std::uint64_t eval(const Composition& s, std::uint64_t n, bool strict,
                       Memo& memo) {
        if (n >= ring_.p)
            throw std::domain_error("ModEvaluator: requires n < p (denominators must be units)");
        const std::size_t l = s.length();
        if (l == 0) return 1 % ring_.modulus;
        if (strict && n < l) return 0;
        if (n < 1) return 0;
        auto key = std::make_pair(s.parts(), n);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        std::vector<std::uint64_t> row(l + 1, 0);
        row[0] = 1 % ring_.modulus;
        std::vector<std::pair<std::int64_t, std::uint64_t>> pw_cache;
        for (std::uint64_t m = 1; m <= n; ++m) {
            pw_cache.clear();
            auto power_of = [&](std::int64_t e) {
                for (auto& [pe, pv] : pw_cache)
                    if (pe == e) return pv;
                std::uint64_t v = ring_.pow(inv_[m], static_cast<std::uint64_t>(e));
                pw_cache.emplace_back(e, v);
                return v;
            };
            if (strict) {
                for (std::size_t j = l; j >= 1; --j) {
                    if (row[j - 1] == 0) continue;
                    row[j] = ring_.add(row[j], ring_.mul(row[j - 1], power_of(s.parts()[j - 1])));
                }
            } else {
                for (std::size_t j = 1; j <= l; ++j) {
                    if (row[j - 1] == 0) continue;
                    row[j] = ring_.add(row[j], ring_.mul(row[j - 1], power_of(s.parts()[j - 1])));
                }
            }
        }
        memo.emplace(std::move(key), row[l]);
        return row[l];
    }

    PrimePowerRing ring_;
    std::vector<std::uint64_t> inv_;
    Memo memo_h_;
    Memo memo_s_;
};

inline PrimePowerResidue H_mod(const Composition& s, std::uint64_t n,
                               const PrimePowerRing& ring) {
    ModEvaluator ev(ring);
    return PrimePowerResidue{ring, ev.H(s, n)};
}

inline PrimePowerResidue S_mod(const Composition& s, std::uint64_t n,
                               const PrimePowerRing& ring) {
    ModEvaluator ev(ring);
    return PrimePowerResidue{ring, ev.S(s, n)};
}

/// Stirling numbers of the first kind: x(x+1)...(x+n-1) = sum_j St(n,j) x^j.
inline Integer stirling1(std::uint64_t n, std::uint64_t j) {
    if (n < 1 || j < 1 || j > n)
        throw std::domain_error("stirling1: need 1 <= j <= n");
    // coeffs[i] = coefficient of x^i, truncated at degree j
    std::vector<Integer> coeffs(j + 1, Integer(0));
    coeffs[1] = Integer(1); // the polynomial x
    for (std::uint64_t k = 1; k < n; ++k) {
        Integer kk(static_cast<long long>(k));
        for (std::size_t i = j; i >= 1; --i) {
            Integer v = coeffs[i] * kk + coeffs[i - 1];
            coeffs[i] = std::move(v);
        }
        coeffs[0] *= kk;
    }
    return coeffs[j];
}

/// St(n, j) mod p^k via the same truncated expansion.
inline std::uint64_t stirling1_mod(std::uint64_t n, std::uint64_t j,
                                   const PrimePowerRing& ring) {
    if (n < 1 || j < 1 || j > n)
        throw std::domain_error("stirling1_mod: need 1 <= j <= n");
    std::vector<std::uint64_t> coeffs(j + 1, 0);
    coeffs[1] = 1 % ring.modulus;
    for (std::uint64_t k = 1; k < n; ++k) {
        std::uint64_t kk = k % ring.modulus;
        for (std::size_t i = j; i >= 1; --i)
            coeffs[i] = ring.add(ring.mul(coeffs[i], kk), coeffs[i - 1]);
        coeffs[0] = ring.mul(coeffs[0], kk);
    }
    return coeffs[j];
}

/// Outcome of a valuation probe at precision k_max: either the exact
/// p-adic valuation, or the statement "at least k_max".
struct ValuationResult {
    bool at_least = false;
    long long v = 0;

    static ValuationResult exact(long long value) { return {false, value}; }
    static ValuationResult lower_bound(long long value) { return {true, value}; }

    friend bool operator==(const ValuationResult& a, const ValuationResult& b) {
        return a.at_least == b.at_least && a.v == b.v;
    }
    std::string to_string() const {
        return at_least ? ">=" + std::to_string(v) : std::to_string(v);
    }
};

/// v_p(H(s;p-1)) read off the residue mod p^k_max.
inline ValuationResult valuation_H(const Composition& s, std::uint64_t p,
                                   unsigned k_max) {
    if (k_max < 1) throw std::invalid_argument("valuation_H: k_max must be >= 1");
    if (p <= s.length())
        throw std::invalid_argument("valuation_H: need p > length(s)");
    PrimePowerRing ring = PrimePowerRing::make(p, k_max);
    ModEvaluator ev(ring);
    std::uint64_t r = ev.H(s, p - 1);
    if (r == 0) return ValuationResult::lower_bound(k_max);
    long long v = 0;
    while (r % p == 0) {
        r /= p;
        ++v;
    }
    return ValuationResult::exact(v);
}

/// An evaluation request as the CLI sees it.
struct EvalRequest {
    enum class Kind { H, S };
    Kind kind = Kind::H;
    Composition s;
    std::uint64_t n = 0;
    bool modular = false;
    PrimePowerRing ring{}; // meaningful when modular
};

} // namespace mhs
