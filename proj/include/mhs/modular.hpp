#pragma once

/// Prime-power residue rings Z/p^k with 64-bit canonical residues,
/// deterministic primality testing, and prime enumeration.
///
/// Residues are always stored canonically in [0, p^k); any signed
/// presentation (-1 vs p^k-1) is a formatting concern for callers.

#include "mhs/integer.hpp"
#include "mhs/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhs {

/// Raised when a rational cannot be mapped into Z/p^k because p divides
/// its reduced denominator.
struct NonPIntegralError : std::domain_error {
    using std::domain_error::domain_error;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b; // both < m < 2^63, no wrap
    return s >= m ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// All primes in [lo, hi], ascending. Sieves when the range is dense,
/// falls back to per-candidate testing otherwise.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
    if (hi < 2) return out;
    if (lo < 2) lo = 2;
    if (hi <= (1ULL << 24)) {
        std::vector<bool> composite(hi + 1, false);
        for (std::uint64_t i = 2; i * i <= hi; ++i)
            if (!composite[i])
                for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (!composite[i]) out.push_back(i);
        return out;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

struct PrimePowerRing {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t modulus = 0;

    static PrimePowerRing make(std::uint64_t p, unsigned k) {
        if (k < 1) throw std::invalid_argument("PrimePowerRing: exponent must be >= 1");
        if (!is_prime_u64(p))
            throw std::invalid_argument("PrimePowerRing: " + std::to_string(p) +
                                        " is not prime");
        __uint128_t m = 1;
        for (unsigned i = 0; i < k; ++i) {
            m *= p;
            if (m >= (static_cast<__uint128_t>(1) << 63))
                throw std::overflow_error("PrimePowerRing: modulus p^k exceeds 2^63");
        }
        return PrimePowerRing{p, k, static_cast<std::uint64_t>(m)};
    }

    /// Order of the unit group when cyclic-compatible exponent reduction
    /// applies: lambda(p^k) = p^(k-1)(p-1), valid for all units here.
    std::uint64_t unit_order() const {
        std::uint64_t ord = p - 1;
        for (unsigned i = 1; i < k; ++i) ord *= p;
        return ord;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return addmod(a, b, modulus); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return submod(a, b, modulus); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, modulus); }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : modulus - a; }

    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
        std::uint64_t ord = unit_order();
        if (exp >= ord && base % p != 0) exp %= ord;
        return powmod(base, exp, modulus);
    }

    /// Inverse of a unit: a^(lambda-1), since a^lambda = 1 for every unit
    /// of Z/p^k. Throws when gcd(a, p) > 1.
    std::uint64_t inv(std::uint64_t a) const {
        a %= modulus;
        if (a % p == 0)
            throw std::domain_error("PrimePowerRing::inv: argument shares a factor with the modulus");
        return powmod(a, unit_order() - 1, modulus);
    }

    /// Reduce a possibly huge / negative exact integer into [0, p^k).
    std::uint64_t reduce(const Integer& v) const { return v.mod_u64(modulus); }

    friend bool operator==(const PrimePowerRing& a, const PrimePowerRing& b) {
        return a.p == b.p && a.k == b.k;
    }
    friend bool operator!=(const PrimePowerRing& a, const PrimePowerRing& b) {
        return !(a == b);
    }
};

struct PrimePowerResidue {
    PrimePowerRing ring;
    std::uint64_t value = 0;

    friend bool operator==(const PrimePowerResidue& a, const PrimePowerResidue& b) {
        return a.ring == b.ring && a.value == b.value;
    }
    friend bool operator!=(const PrimePowerResidue& a, const PrimePowerResidue& b) {
        return !(a == b);
    }
    std::string to_string() const { return std::to_string(value); }
};

/// a^{-1} mod p^k for a coprime to p.
inline PrimePowerResidue mod_inverse(const Integer& a, const PrimePowerRing& ring) {
    std::uint64_t av = ring.reduce(a);
    if (av % ring.p == 0)
        throw std::domain_error("mod_inverse: argument divisible by p");
    return PrimePowerResidue{ring, ring.inv(av)};
}

/// num * den^{-1} mod p^k; requires v_p(q) >= 0.
inline PrimePowerResidue to_residue(const Rational& q, const PrimePowerRing& ring) {
    std::uint64_t d = ring.reduce(q.den());
    if (d % ring.p == 0)
        throw NonPIntegralError("to_residue: denominator divisible by " +
                                std::to_string(ring.p));
    std::uint64_t n = ring.reduce(q.num());
    return PrimePowerResidue{ring, ring.mul(n, ring.inv(d))};
}

/// Inverses of 1..n mod p^k, n < p. inv[i] lives at index i; index 0 unused.
inline std::vector<std::uint64_t> inverse_table(const PrimePowerRing& ring,
                                                std::uint64_t n) {
    if (n >= ring.p)
        throw std::invalid_argument("inverse_table: range must stay below p");
    std::vector<std::uint64_t> inv(n + 1, 0);
    if (n >= 1) inv[1] = 1 % ring.modulus;
    const std::uint64_t m = ring.modulus;
    for (std::uint64_t i = 2; i <= n; ++i)
        inv[i] = mulmod(m - (m / i) % m, inv[m % i], m);
    return inv;
}

} // namespace mhs
