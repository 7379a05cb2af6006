#pragma once

/// Exact rational numbers, always stored reduced with positive denominator,
/// plus p-adic valuations. The valuation of 0 is a dedicated infinity
/// sentinel rather than an integer.

#include "mhs/integer.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mhs {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {} // NOLINT
    Rational(Integer v) : num_(std::move(v)), den_(1) {} // NOLINT
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == Integer(1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = Integer(1);
            return;
        }
        Integer g = Integer::gcd(num_.abs(), den_);
        if (g != Integer(1)) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }

    Integer num_;
    Integer den_;
};

/// Normal-form constructor mirroring the library's rational contract.
inline Rational reduce_rational(Integer num, Integer den) {
    return Rational(std::move(num), std::move(den));
}

/// p-adic valuation v_p(q): the exponent of p in q, negative when p divides
/// the denominator, infinite when q = 0.
struct Valuation {
    bool infinite = false;
    long long v = 0;

    static Valuation of(long long value) { return Valuation{false, value}; }
    static Valuation infinity() { return Valuation{true, 0}; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
};

inline Valuation vp(const Rational& q, std::uint64_t p) {
    if (p < 2) throw std::domain_error("vp: modulus base must be >= 2");
    if (q.is_zero()) return Valuation::infinity();
    Integer pf{p};
    Integer n = q.num();
    long long v = n.remove_factor(pf);
    Integer d = q.den();
    v -= d.remove_factor(pf);
    return Valuation::of(v);
}

} // namespace mhs
