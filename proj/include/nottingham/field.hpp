#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "nottingham/error.hpp"

namespace nottingham {

/// A prime characteristic in the supported range [2, 257].
class Prime {
public:
    static constexpr unsigned max_value = 257;

    explicit Prime(unsigned p) : value_(static_cast<std::uint16_t>(p))
    {
        if (p < 2 || p > max_value || !is_prime(p)) {
            throw error(errc::not_prime, std::to_string(p) + " is not a supported prime");
        }
    }

    unsigned value() const noexcept { return value_; }

    static constexpr bool is_prime(unsigned n) noexcept
    {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint16_t value_;
};

/// Residue modulo a small prime, always held in canonical form [0, p).
class FieldElement {
public:
    FieldElement(Prime p, long long v) : p_(p), v_(reduce(v, p.value())) {}

    static FieldElement zero(Prime p) { return {p, 0}; }
    static FieldElement one(Prime p) { return {p, 1}; }

    unsigned value() const noexcept { return v_; }
    Prime modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement& operator+=(const FieldElement& o)
    {
        check(o);
        unsigned s = v_ + o.v_;
        if (s >= p_.value()) s -= p_.value();
        v_ = static_cast<std::uint16_t>(s);
        return *this;
    }

    FieldElement& operator-=(const FieldElement& o)
    {
        check(o);
        unsigned s = v_ + p_.value() - o.v_;
        if (s >= p_.value()) s -= p_.value();
        v_ = static_cast<std::uint16_t>(s);
        return *this;
    }

    FieldElement& operator*=(const FieldElement& o)
    {
        check(o);
        v_ = static_cast<std::uint16_t>((unsigned{v_} * o.v_) % p_.value());
        return *this;
    }

    FieldElement operator-() const { return {p_, -static_cast<long long>(v_)}; }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept
    {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.v_; }

    static constexpr unsigned reduce(long long v, unsigned p) noexcept
    {
        long long r = v % static_cast<long long>(p);
        return static_cast<unsigned>(r < 0 ? r + p : r);
    }

private:
    void check(const FieldElement& o) const
    {
        if (!(p_ == o.p_)) throw error(errc::mismatched_context, "field elements over different primes");
    }

    Prime p_;
    std::uint16_t v_;
};

/// x^e by square-and-multiply; pow(0, 0) = 1.
inline FieldElement pow(FieldElement x, std::uint64_t e)
{
    FieldElement r = FieldElement::one(x.modulus());
    while (e != 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

/// Multiplicative inverse via the extended Euclidean algorithm.
inline FieldElement inv(const FieldElement& x)
{
    if (x.is_zero()) throw error(errc::zero_inverse, "zero has no inverse");
    long long a = x.value(), b = x.modulus().value();
    long long s0 = 1, s1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long r = a - q * b;
        a = b;
        b = r;
        long long s = s0 - q * s1;
        s0 = s1;
        s1 = s;
    }
    return {x.modulus(), s0};
}

namespace detail {

// Raw-residue helpers used by the series kernels, which store coefficients unboxed.
inline unsigned inv_mod(unsigned v, unsigned p) { return inv(FieldElement(Prime(p), v)).value(); }

} // namespace detail

} // namespace nottingham
