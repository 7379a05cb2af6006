#pragma once

/// Arbitrary-precision signed integer, a thin value-semantic wrapper
/// around GMP's mpz_t. All arithmetic is exact; there is no overflow
/// and no rounding anywhere in this library.

#include <gmp.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mhs {

class Integer {
public:
    Integer() { mpz_init(z_); }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    template <std::integral T>
    Integer(T v) { // NOLINT(google-explicit-constructor)
        mpz_init(z_);
        if constexpr (std::is_signed_v<T>)
            set_i64(static_cast<long long>(v));
        else
            set_u64(static_cast<unsigned long long>(v));
    }
    explicit Integer(std::string_view decimal) {
        mpz_init(z_);
        if (mpz_set_str(z_, std::string(decimal).c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Integer: bad decimal literal: " +
                                        std::string(decimal));
        }
    }
    ~Integer() { mpz_clear(z_); }

    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }

    // ---- queries ----
    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }
    bool is_even() const { return mpz_even_p(z_) != 0; }

    bool fits_u64() const {
        return mpz_sgn(z_) >= 0 && mpz_sizeinbase(z_, 2) <= 64;
    }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("Integer::to_u64: out of range");
        std::uint64_t lo = mpz_get_ui(z_);
        if (mpz_sizeinbase(z_, 2) > 8 * sizeof(unsigned long)) {
            // 32-bit long fallback; unused on LP64 but kept correct
            mpz_t hi;
            mpz_init(hi);
            mpz_fdiv_q_2exp(hi, z_, 32);
            lo |= static_cast<std::uint64_t>(mpz_get_ui(hi)) << 32;
            mpz_clear(hi);
        }
        return lo;
    }
    long long to_i64() const {
        if (!mpz_fits_slong_p(z_))
            throw std::overflow_error("Integer::to_i64: out of range");
        return mpz_get_si(z_);
    }

    /// Nonnegative remainder of this mod m, m > 0.
    std::uint64_t mod_u64(std::uint64_t m) const {
        if (m == 0) throw std::domain_error("Integer::mod_u64: zero modulus");
        mpz_t mm, r;
        mpz_init(r);
        mpz_init(mm);
        set_u64_raw(mm, m);
        mpz_fdiv_r(r, z_, mm);
        std::uint64_t out = get_u64_raw(r);
        mpz_clear(r);
        mpz_clear(mm);
        return out;
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    // ---- arithmetic ----
    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    /// Truncated quotient (C semantics).
    friend Integer operator/(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw std::domain_error("Integer: division by zero");
        Integer r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw std::domain_error("Integer: division by zero");
        Integer r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    Integer abs() const {
        Integer r;
        mpz_abs(r.z_, z_);
        return r;
    }
    /// Exact division; caller guarantees divisibility.
    Integer divexact(const Integer& d) const {
        Integer r;
        mpz_divexact(r.z_, z_, d.z_);
        return r;
    }
    bool divisible_by(const Integer& d) const {
        return mpz_divisible_p(z_, d.z_) != 0;
    }
    Integer pow(std::uint64_t e) const {
        Integer r;
        mpz_pow_ui(r.z_, z_, static_cast<unsigned long>(e));
        return r;
    }

    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer factorial(std::uint64_t n) {
        Integer r;
        mpz_fac_ui(r.z_, static_cast<unsigned long>(n));
        return r;
    }
    static Integer binom(std::uint64_t n, std::uint64_t r) {
        Integer out;
        mpz_bin_uiui(out.z_, static_cast<unsigned long>(n),
                     static_cast<unsigned long>(r));
        return out;
    }

    /// Removes all factors f from *this; returns how many were removed.
    /// f must be >= 2 and *this nonzero.
    long remove_factor(const Integer& f) {
        mpz_t tmp;
        mpz_init(tmp);
        long n = static_cast<long>(mpz_remove(tmp, z_, f.z_));
        mpz_swap(z_, tmp);
        mpz_clear(tmp);
        return n;
    }

    // ---- comparisons ----
    friend bool operator==(const Integer& a, const Integer& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) {
        return mpz_cmp(a.z_, b.z_) < 0;
    }
    friend bool operator<=(const Integer& a, const Integer& b) {
        return mpz_cmp(a.z_, b.z_) <= 0;
    }
    friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
    friend bool operator>=(const Integer& a, const Integer& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) {
        return os << v.to_string();
    }

private:
    void set_i64(long long v) {
        if (v >= std::numeric_limits<long>::min() &&
            v <= std::numeric_limits<long>::max()) {
            mpz_set_si(z_, static_cast<long>(v));
        } else {
            bool neg = v < 0;
            set_u64(neg ? 0ULL - static_cast<unsigned long long>(v)
                        : static_cast<unsigned long long>(v));
            if (neg) mpz_neg(z_, z_);
        }
    }
    void set_u64(unsigned long long v) { set_u64_raw(z_, v); }
    static void set_u64_raw(mpz_t out, unsigned long long v) {
        if (v <= std::numeric_limits<unsigned long>::max()) {
            mpz_set_ui(out, static_cast<unsigned long>(v));
        } else {
            mpz_set_ui(out, static_cast<unsigned long>(v >> 32));
            mpz_mul_2exp(out, out, 32);
            mpz_add_ui(out, out, static_cast<unsigned long>(v & 0xffffffffULL));
        }
    }
    static std::uint64_t get_u64_raw(const mpz_t v) {
        if (mpz_sizeinbase(v, 2) <= 8 * sizeof(unsigned long))
            return mpz_get_ui(v);
        mpz_t hi;
        mpz_init(hi);
        mpz_fdiv_q_2exp(hi, v, 32);
        std::uint64_t out = (static_cast<std::uint64_t>(mpz_get_ui(hi)) << 32) |
                            (mpz_get_ui(v) & 0xffffffffULL);
        mpz_clear(hi);
        return out;
    }

    mpz_t z_;
};

/// C(n, r) with the usual convention: 0 when r < 0 or r > n.
inline Integer binomial(std::uint64_t n, long long r) {
    if (r < 0 || static_cast<std::uint64_t>(r) > n) return Integer(0);
    return Integer::binom(n, static_cast<std::uint64_t>(r));
}

} // namespace mhs
