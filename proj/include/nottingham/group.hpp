#pragma once

// The Nottingham group modulo t^(N+1): series t + a_2 t^2 + ... under composition.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>

#include "nottingham/error.hpp"
#include "nottingham/field.hpp"
#include "nottingham/series.hpp"

namespace nottingham {

/// A series with constant term 0 and linear coefficient 1.
class GroupElement {
public:
    explicit GroupElement(Series body) : body_(std::move(body))
    {
        const auto c = body_.raw();
        if (body_.trunc() < 1 || c[0] != 0 || c[1] != 1) {
            throw error(errc::not_in_group, "group elements must be t + O(t^2) with N >= 1");
        }
    }

    const Series& body() const noexcept { return body_; }
    Prime prime() const noexcept { return body_.prime(); }
    std::size_t trunc() const noexcept { return body_.trunc(); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    Series body_;
};

/// Position in the congruence filtration: f(t) - t has valuation depth + 1.
/// The identity (to the working precision) has infinite depth.
class Depth {
public:
    static Depth finite(std::size_t d) { return Depth(d); }
    static Depth infinite() { return Depth(); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    std::size_t value() const
    {
        if (!value_) throw std::logic_error("infinite depth has no finite value");
        return *value_;
    }

    friend bool operator==(const Depth&, const Depth&) = default;

    /// Infinite compares above every finite depth.
    friend std::strong_ordering operator<=>(const Depth& a, const Depth& b)
    {
        if (a.is_infinite() != b.is_infinite()) {
            return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (a.is_infinite()) return std::strong_ordering::equal;
        return *a.value_ <=> *b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Depth& d)
    {
        if (d.is_infinite()) return os << "inf";
        return os << *d.value_;
    }

private:
    Depth() = default;
    explicit Depth(std::size_t d) : value_(d) {}

    std::optional<std::size_t> value_;
};

inline GroupElement identity(Prime p, std::size_t trunc)
{
    if (trunc < 1) throw error(errc::bad_precision, "group elements need N >= 1");
    return GroupElement(Series::variable(p, trunc));
}

/// t -> f(g(t)).
inline GroupElement gcompose(const GroupElement& f, const GroupElement& g)
{
    return GroupElement(compose(f.body(), g.body()));
}

inline GroupElement ginverse(const GroupElement& f) { return GroupElement(comp_inverse(f.body())); }

/// f composed with itself k times, by binary exponentiation.
inline GroupElement gpower(GroupElement f, std::uint64_t k)
{
    GroupElement r = identity(f.prime(), f.trunc());
    while (k != 0) {
        if (k & 1) r = gcompose(r, f);
        k >>= 1;
        if (k != 0) f = gcompose(f, f);
    }
    return r;
}

inline bool is_identity(const GroupElement& f)
{
    return f.body().valuation() == 1 && f.body().support().size() == 1;
}

inline Depth depth(const GroupElement& f)
{
    const auto c = f.body().raw();
    for (std::size_t i = 2; i < c.size(); ++i) {
        if (c[i] != 0) return Depth::finite(i - 1);
    }
    return Depth::infinite();
}

/// Default search bound for order_mod_truncation: p^6.
inline std::uint64_t default_order_cap(Prime p)
{
    std::uint64_t c = 1;
    for (int i = 0; i < 6; ++i) c *= p.value();
    return c;
}

/// Least p^j <= cap with f^(p^j) = id mod t^(N+1), if any.
///
/// This is the order of f in the finite quotient of the group by the elements
/// congruent to t mod t^(N+1). The order of the untruncated element can only
/// be larger.
inline std::optional<std::uint64_t> order_mod_truncation(const GroupElement& f, std::uint64_t cap)
{
    const std::uint64_t p = f.prime().value();
    GroupElement h = f;
    for (std::uint64_t k = 1; k <= cap; k *= p) {
        if (is_identity(h)) return k;
        if (k > cap / p) break;
        h = gpower(h, p);
    }
    return std::nullopt;
}

inline std::optional<std::uint64_t> order_mod_truncation(const GroupElement& f)
{
    return order_mod_truncation(f, default_order_cap(f.prime()));
}

/// Order-p representative t (1 - a t^m)^(-1/m), with the exponent realized as
/// inversion followed by an m-th root.
inline GroupElement klopsch_rep(Prime p, std::uint64_t m, const FieldElement& a, std::size_t trunc)
{
    if (m == 0 || m % p.value() == 0) {
        throw error(errc::not_coprime, "m = " + std::to_string(m) + " must be positive and prime to p");
    }
    if (!(a.modulus() == p)) throw error(errc::mismatched_context, "parameter a lives over a different prime");
    if (a.is_zero()) throw error(errc::zero_parameter, "parameter a must be nonzero");
    if (trunc < m + 1) throw error(errc::bad_precision, "need N >= m + 1 to see the leading correction");

    const Series base = Series::one(p, trunc) - scale(Series::monomial(p, trunc, m, 1), a);
    const Series u = nth_root_unit(inv_unit(base), m);
    return GroupElement(mul(Series::variable(p, trunc), u));
}

} // namespace nottingham
