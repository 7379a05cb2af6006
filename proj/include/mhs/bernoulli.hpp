#pragma once

/// Bernoulli numbers four ways: exact rationals from the defining
/// recurrence, Bernoulli polynomials and power sums, a full residue table
/// B_0..B_{p-3} mod p built by series inversion, and an algorithmically
/// independent single-index oracle through power sums mod p^2. The two
/// modular routes never share code; every residue the table produces can
/// be re-derived by the oracle alone.

#include "mhs/integer.hpp"
#include "mhs/modular.hpp"
#include "mhs/rational.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mhs {

namespace detail {
class BernoulliCache {
public:
    Rational get(std::size_t m) {
        std::lock_guard<std::mutex> lock(mu_);
        if (vals_.empty()) vals_.push_back(Rational(1)); // B_0
        while (vals_.size() <= m) {
            std::size_t n = vals_.size();
            // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j)
                acc += Rational(binomial(n + 1, static_cast<long long>(j))) * vals_[j];
            vals_.push_back(-acc / Rational(Integer(static_cast<long long>(n + 1))));
        }
        return vals_[m];
    }

private:
    std::mutex mu_;
    std::vector<Rational> vals_;
};

inline BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}
} // namespace detail

/// Exact B_m. B_1 = -1/2; odd indices >= 3 vanish.
inline Rational bernoulli_exact(std::uint64_t m) {
    return detail::bernoulli_cache().get(m);
}

/// Coefficients of the degree-m Bernoulli polynomial, ascending powers:
/// coeff of x^i is C(m, i) B_{m-i}. Leading coefficient 1.
inline std::vector<Rational> bernoulli_poly_coeffs(std::uint64_t m) {
    std::vector<Rational> coeffs(m + 1);
    for (std::uint64_t i = 0; i <= m; ++i)
        coeffs[i] = Rational(binomial(m, static_cast<long long>(i))) *
                    bernoulli_exact(m - i);
    return coeffs;
}

/// sum_{i=1}^{n} i^d = (B_{d+1}(n+1) - B_{d+1}) / (d+1); always an integer.
inline Rational power_sum(std::uint64_t n, std::uint64_t d) {
    if (n < 1 || d < 1) throw std::invalid_argument("power_sum: need n, d >= 1");
    Rational acc(0);
    Integer x(n + 1);
    for (std::uint64_t a = 0; a <= d; ++a) {
        Rational term = Rational(binomial(d + 1, static_cast<long long>(a))) *
                        bernoulli_exact(a) * Rational(x.pow(d + 1 - a));
        acc += term;
    }
    return acc / Rational(Integer(d + 1));
}

/// Residues of B_0..B_{p-3} mod p, computed by schoolbook coefficient-wise
/// inversion of the series (e^x - 1)/x truncated at x^{p-2}. O(p^2).
class BernoulliModTable {
public:
    explicit BernoulliModTable(std::uint64_t p) : p_(p) {
        if (p < 5 || !is_prime_u64(p))
            throw std::invalid_argument("BernoulliModTable: need a prime p >= 5");
        if (p > 2'000'000)
            throw std::invalid_argument("BernoulliModTable: beyond desk scale");
        const std::size_t len = static_cast<std::size_t>(p - 2); // indices 0..p-3

        // factorials and inverse factorials up to p-2, all units mod p
        std::vector<std::uint64_t> fact(len + 1), inv_fact(len + 1);
        fact[0] = 1;
        for (std::size_t i = 1; i <= len; ++i) fact[i] = mulmod(fact[i - 1], i, p);
        inv_fact[len] = powmod(fact[len], p - 2, p);
        for (std::size_t i = len; i > 0; --i)
            inv_fact[i - 1] = mulmod(inv_fact[i], i, p);

        // c = 1 / sum_i x^i/(i+1)!  coefficient-wise; B_n = n! c_n
        std::vector<std::uint64_t> c(len, 0);
        c[0] = 1;
        for (std::size_t n = 1; n < len; ++n) {
            std::uint64_t acc = 0; // < p^3 < 2^63 for desk-scale p
            for (std::size_t i = 1; i <= n; ++i)
                acc += inv_fact[i + 1] * c[n - i];
            c[n] = (p - acc % p) % p;
        }
        residues_.resize(len);
        for (std::size_t n = 0; n < len; ++n)
            residues_[n] = mulmod(fact[n], c[n], p);
    }

    std::uint64_t p() const { return p_; }

    /// B_t mod p for 0 <= t <= p-2 (t = p-2 is odd for odd p, hence 0).
    std::uint64_t get(std::uint64_t t) const {
        if (t < residues_.size()) return residues_[t];
        if (t == p_ - 2) return 0;
        throw std::out_of_range("BernoulliModTable: index not p-integral");
    }

    /// B_t / t mod p, t in [1, p-2].
    std::uint64_t get_over_index(std::uint64_t t) const {
        return mulmod(get(t), powmod(t, p_ - 2, p_), p_);
    }

    /// Even 2 <= t <= p-3 with p | B_t, ascending.
    std::vector<std::uint64_t> zero_indices() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t t = 2; t + 2 < p_; t += 2)
            if (residues_[t] == 0) out.push_back(t);
        return out;
    }

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> residues_;
};

/// Independent single-index route: for even t with 4 <= t <= p-3,
/// sum_{k<p} k^t = p B_t (mod p^2) since B_{t-1} = 0, so dividing the
/// literal power sum by p recovers B_t mod p. Shares nothing with the
/// series-inversion table.
inline std::uint64_t bernoulli_single_mod(std::uint64_t t, std::uint64_t p) {
    if (!is_prime_u64(p) || p < 7)
        throw std::invalid_argument("bernoulli_single_mod: need a prime p >= 7");
    if (t % 2 != 0 || t < 4 || t > p - 3)
        throw std::domain_error("bernoulli_single_mod: t must be even in [4, p-3]");
    const std::uint64_t p2 = p * p;
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k < p; ++k) sum = addmod(sum, powmod(k, t, p2), p2);
    if (sum % p != 0)
        throw std::logic_error("bernoulli_single_mod: power sum not divisible by p");
    return (sum / p) % p;
}

struct KummerReduction {
    std::uint64_t m_prime;       // even representative in [2, p-3]
    std::uint64_t b_over_m_modp; // B_{m'} / m' mod p, the class of B_m / m
};

/// Kummer congruence: B_m/m mod p depends only on m mod p-1 when
/// (p-1) does not divide m.
inline KummerReduction kummer_reduce(std::uint64_t m, const BernoulliModTable& table) {
    const std::uint64_t p = table.p();
    if (m % 2 != 0) throw std::domain_error("kummer_reduce: m must be even");
    std::uint64_t mp = m % (p - 1);
    if (mp == 0) throw std::domain_error("kummer_reduce: inapplicable when (p-1) | m");
    return KummerReduction{mp, table.get_over_index(mp)};
}

inline KummerReduction kummer_reduce(std::uint64_t m, std::uint64_t p) {
    return kummer_reduce(m, BernoulliModTable(p));
}

/// B_m + sum over primes with (p-1) | m of 1/p is an integer.
inline bool von_staudt_check(std::uint64_t m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("von_staudt_check: m must be even >= 2");
    Rational acc = bernoulli_exact(m);
    for (std::uint64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        if (is_prime_u64(d + 1))
            acc += Rational(Integer(1), Integer(static_cast<long long>(d + 1)));
    }
    return acc.is_integer();
}

} // namespace mhs
