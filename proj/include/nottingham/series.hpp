#pragma once

// Truncated formal power series over F_p: elements of F_p[t]/(t^(N+1)).
//
// Coefficients are stored densely for exponents 0..N. Exponents above N are
// unknown, not zero, so every binary operation requires both operands to carry
// the same prime and the same N. For p = 2 the multiplicative kernels run on the
// bit-packed representation in gf2.hpp; the dense kernels in `detail` are the
// reference they are tested against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nottingham/error.hpp"
#include "nottingham/field.hpp"
#include "nottingham/gf2.hpp"

namespace nottingham {

class Series {
public:
    using coeff_type = std::uint16_t;

    /// The zero series in F_p[t]/(t^(N+1)).
    Series(Prime p, std::size_t trunc) : p_(p), coeffs_(trunc + 1, 0) {}

    /// Coefficients c[0..N] (reduced mod p); missing trailing entries are zero.
    Series(Prime p, std::size_t trunc, std::span<const long long> c) : Series(p, trunc)
    {
        if (c.size() > coeffs_.size()) {
            throw error(errc::bad_truncation, "more coefficients than the truncation order allows");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            coeffs_[i] = static_cast<coeff_type>(FieldElement::reduce(c[i], p.value()));
        }
    }

    Series(Prime p, std::size_t trunc, std::initializer_list<long long> c)
        : Series(p, trunc, std::span<const long long>(c.begin(), c.size()))
    {
    }

    static Series zero(Prime p, std::size_t trunc) { return {p, trunc}; }

    static Series one(Prime p, std::size_t trunc) { return monomial(p, trunc, 0, 1); }

    /// The series t (or 0 when N = 0).
    static Series variable(Prime p, std::size_t trunc) { return monomial(p, trunc, 1, 1); }

    /// c t^e, silently zero when e > N.
    static Series monomial(Prime p, std::size_t trunc, std::size_t e, long long c)
    {
        Series s(p, trunc);
        if (e <= trunc) s.coeffs_[e] = static_cast<coeff_type>(FieldElement::reduce(c, p.value()));
        return s;
    }

    /// Sum of t^e over the given exponents (exponents above N are dropped).
    static Series from_exponents(Prime p, std::size_t trunc, std::span<const std::size_t> exps)
    {
        Series s(p, trunc);
        for (std::size_t e : exps) {
            if (e <= trunc) s.coeffs_[e] = static_cast<coeff_type>((s.coeffs_[e] + 1u) % p.value());
        }
        return s;
    }

    Prime prime() const noexcept { return p_; }
    unsigned characteristic() const noexcept { return p_.value(); }
    std::size_t trunc() const noexcept { return coeffs_.size() - 1; }

    FieldElement coeff(std::size_t i) const
    {
        if (i > trunc()) throw error(errc::bad_truncation, "coefficient index beyond truncation order");
        return {p_, coeffs_[i]};
    }

    void set_coeff(std::size_t i, long long v)
    {
        if (i > trunc()) throw error(errc::bad_truncation, "coefficient index beyond truncation order");
        coeffs_[i] = static_cast<coeff_type>(FieldElement::reduce(v, p_.value()));
    }

    std::span<const coeff_type> raw() const noexcept { return coeffs_; }
    std::span<coeff_type> raw() noexcept { return coeffs_; }

    bool is_zero() const noexcept
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](coeff_type c) { return c == 0; });
    }

    /// Least exponent with nonzero coefficient; N + 1 for the zero series.
    std::size_t valuation() const noexcept
    {
        auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](coeff_type c) { return c != 0; });
        return static_cast<std::size_t>(it - coeffs_.begin());
    }

    /// Exponents with nonzero coefficient, ascending.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) out.push_back(i);
        }
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) noexcept
    {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

private:
    Prime p_;
    std::vector<coeff_type> coeffs_;
};

namespace detail {

inline void require_same_context(const Series& f, const Series& g)
{
    if (!(f.prime() == g.prime())) throw error(errc::mismatched_context, "series over different primes");
    if (f.trunc() != g.trunc()) {
        throw error(errc::mismatched_context, "series truncated at different orders (" + std::to_string(f.trunc()) +
                                                  " vs " + std::to_string(g.trunc()) + ")");
    }
}

inline gf2::Packed pack(const Series& f)
{
    gf2::Packed out(f.trunc());
    const auto c = f.raw();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] & 1u) out.set(i);
    }
    return out;
}

inline Series unpack(const gf2::Packed& f)
{
    Series out(Prime(2), f.trunc());
    auto c = out.raw();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.get(i) ? 1 : 0;
    return out;
}

/// Schoolbook truncated product on the dense representation.
inline Series dense_mul(const Series& f, const Series& g)
{
    require_same_context(f, g);
    const std::size_t n = f.trunc();
    const std::uint64_t p = f.characteristic();
    const auto a = f.raw();
    const auto b = g.raw();
    std::vector<std::uint64_t> acc(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; i + j <= n; ++j) acc[i + j] += ai * b[j];
    }
    Series out(f.prime(), n);
    auto c = out.raw();
    for (std::size_t k = 0; k <= n; ++k) c[k] = static_cast<Series::coeff_type>(acc[k] % p);
    return out;
}

/// Reference inverse of a unit: g_k = -f_0^{-1} * sum_{i=1..k} f_i g_{k-i}.
inline Series dense_inv_unit(const Series& f)
{
    const unsigned p = f.characteristic();
    const auto a = f.raw();
    if (a[0] == 0) throw error(errc::not_a_unit, "constant term is zero");
    const std::uint64_t c0inv = inv_mod(a[0], p);
    Series out(f.prime(), f.trunc());
    auto g = out.raw();
    g[0] = static_cast<Series::coeff_type>(c0inv);
    for (std::size_t k = 1; k <= f.trunc(); ++k) {
        std::uint64_t s = 0;
        for (std::size_t i = 1; i <= k; ++i) s += std::uint64_t{a[i]} * g[k - i];
        s %= p;
        g[k] = static_cast<Series::coeff_type>(((p - s) % p) * c0inv % p);
    }
    return out;
}

/// Reference composition by Horner's rule.
inline Series dense_compose_horner(const Series& f, const Series& g)
{
    require_same_context(f, g);
    const std::size_t n = f.trunc();
    const unsigned p = f.characteristic();
    const auto a = f.raw();
    Series acc = Series::monomial(f.prime(), n, 0, a[n]);
    for (std::size_t k = n; k-- > 0;) {
        if (!acc.is_zero()) acc = dense_mul(acc, g);
        auto c = acc.raw();
        c[0] = static_cast<Series::coeff_type>((c[0] + a[k]) % p);
    }
    return acc;
}

} // namespace detail

/// Index of the first differing coefficient, or nullopt if f == g to their common order.
inline std::optional<std::size_t> first_difference(const Series& f, const Series& g)
{
    detail::require_same_context(f, g);
    const auto a = f.raw();
    const auto b = g.raw();
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin());
    if (ia == a.end()) return std::nullopt;
    return static_cast<std::size_t>(ia - a.begin());
}

inline Series operator+(const Series& f, const Series& g)
{
    detail::require_same_context(f, g);
    Series out = f;
    const unsigned p = f.characteristic();
    auto c = out.raw();
    const auto b = g.raw();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Series::coeff_type>((c[i] + b[i]) % p);
    return out;
}

inline Series operator-(const Series& f)
{
    Series out = f;
    const unsigned p = f.characteristic();
    for (auto& c : out.raw()) c = static_cast<Series::coeff_type>((p - c) % p);
    return out;
}

inline Series operator-(const Series& f, const Series& g) { return f + (-g); }

/// Scalar multiple.
inline Series scale(const Series& f, const FieldElement& a)
{
    if (!(a.modulus() == f.prime())) throw error(errc::mismatched_context, "scalar over a different prime");
    Series out = f;
    const unsigned p = f.characteristic();
    for (auto& c : out.raw()) c = static_cast<Series::coeff_type>((unsigned{c} * a.value()) % p);
    return out;
}

/// Product in F_p[t]/(t^(N+1)).
inline Series mul(const Series& f, const Series& g)
{
    detail::require_same_context(f, g);
    if (f.characteristic() == 2) return detail::unpack(gf2::mul(detail::pack(f), detail::pack(g)));
    return detail::dense_mul(f, g);
}

inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }

/// f^e under multiplication; pow_series(f, 0) = 1.
inline Series pow_series(Series f, std::uint64_t e)
{
    Series r = Series::one(f.prime(), f.trunc());
    while (e != 0) {
        if (e & 1) r = mul(r, f);
        e >>= 1;
        if (e != 0) f = mul(f, f);
    }
    return r;
}

/// Inverse of a series with nonzero constant term.
inline Series inv_unit(const Series& f)
{
    if (f.raw()[0] == 0) throw error(errc::not_a_unit, "constant term is zero");
    if (f.characteristic() == 2) return detail::unpack(gf2::inv_unit(detail::pack(f)));
    return detail::dense_inv_unit(f);
}

/// Same series viewed in F_p[t]/(t^(M+1)); raising the order is an error.
inline Series truncate(const Series& f, std::size_t m)
{
    if (m > f.trunc()) {
        throw error(errc::bad_truncation, "cannot raise precision from " + std::to_string(f.trunc()) + " to " +
                                              std::to_string(m));
    }
    Series out(f.prime(), m);
    std::copy_n(f.raw().begin(), m + 1, out.raw().begin());
    return out;
}

/// f(g(t)). Requires g to have zero constant term.
inline Series compose(const Series& f, const Series& g)
{
    detail::require_same_context(f, g);
    if (g.raw()[0] != 0) throw error(errc::nonzero_constant, "inner series of a composition must have g(0) = 0");
    if (f.characteristic() == 2) return detail::unpack(gf2::compose_horner(detail::pack(f), detail::pack(g)));
    return detail::dense_compose_horner(f, g);
}

/// Compositional inverse of f = f_1 t + ..., f_1 != 0.
///
/// Solves g(f(t)) = t degree by degree: the coefficient of t^k in
/// sum_j g_j f^j involves g_k only through f_1^k g_k, and the powers f^j are
/// known, so each g_k is one division. The left inverse is also a right inverse.
inline Series comp_inverse(const Series& f)
{
    const auto a = f.raw();
    const std::size_t n = f.trunc();
    if (a[0] != 0 || n < 1 || a[1] == 0) {
        throw error(errc::not_invertible, "compositional inverse needs f(0) = 0 and f'(0) != 0");
    }
    const unsigned p = f.characteristic();
    const Prime pr = f.prime();

    if (p == 2) {
        const gf2::Packed fp = detail::pack(f);
        gf2::Packed power = fp;
        gf2::Packed acc(n);
        Series g(pr, n);
        for (std::size_t j = 1; j <= n; ++j) {
            // f_1 = 1, so g_j = [j == 1] - acc_j.
            const bool gj = (j == 1) != acc.get(j);
            if (gj) {
                g.raw()[j] = 1;
                acc ^= power;
            }
            if (j < n) power = gf2::mul(power, fp);
        }
        return g;
    }

    const std::uint64_t f1inv = detail::inv_mod(a[1], p);
    Series power = f;
    std::vector<std::uint64_t> acc(n + 1, 0);
    std::uint64_t pivot_inv = f1inv;
    Series g(pr, n);
    for (std::size_t j = 1; j <= n; ++j) {
        const std::uint64_t target = (j == 1 ? 1u : 0u);
        const std::uint64_t have = acc[j] % p;
        const std::uint64_t gj = (target + p - have) % p * pivot_inv % p;
        g.raw()[j] = static_cast<Series::coeff_type>(gj);
        if (gj != 0) {
            const auto pw = power.raw();
            for (std::size_t k = j; k <= n; ++k) acc[k] = (acc[k] + gj * pw[k]) % p;
        }
        pivot_inv = pivot_inv * f1inv % p;
        if (j < n) power = mul(power, f);
    }
    return g;
}

/// The unique s with s(0) = 0 and s^2 + s = f, as the truncation of sum_i f^(2^i).
/// Characteristic 2 only.
inline Series artin_schreier_root(const Series& f)
{
    if (f.characteristic() != 2) throw error(errc::wrong_characteristic, "Artin-Schreier root needs p = 2");
    if (f.raw()[0] != 0) throw error(errc::nonzero_constant, "Artin-Schreier right-hand side must vanish at 0");
    const std::size_t n = f.trunc();
    const std::size_t v = f.valuation();
    gf2::Packed term = detail::pack(f);
    gf2::Packed s(n);
    // The i-th term has valuation 2^i v; stop once that exceeds N.
    for (std::size_t val = v; val <= n; val *= 2) {
        s ^= term;
        term = gf2::square(term);
    }
    return detail::unpack(s);
}

/// The unique u with u(0) = 1 and u^m = f, for f(0) = 1 and p not dividing m.
///
/// Undetermined coefficients: writing [t^k] u^j = j u_k + R_j(k), where R_j(k)
/// involves only u_1..u_{k-1}, gives u_k = (f_k - R_m(k)) / m. All powers
/// u^1..u^m are carried along one degree at a time, O(m N^2) overall.
inline Series nth_root_unit(const Series& f, std::uint64_t m)
{
    const unsigned p = f.characteristic();
    if (m == 0 || m % p == 0) {
        throw error(errc::not_coprime, "root index " + std::to_string(m) + " is not prime to " + std::to_string(p));
    }
    if (f.raw()[0] != 1) throw error(errc::bad_root, "root extraction needs constant term 1");
    if (m == 1) return f;

    const std::size_t n = f.trunc();
    const auto fc = f.raw();
    const std::uint64_t minv = detail::inv_mod(static_cast<unsigned>(m % p), p);
    // pw[j][k] = [t^k] u^j for j = 0..m.
    std::vector<std::vector<std::uint32_t>> pw(m + 1, std::vector<std::uint32_t>(n + 1, 0));
    for (auto& row : pw) row[0] = 1;
    std::vector<std::uint64_t> rest(m + 1, 0);
    Series u = Series::one(f.prime(), n);
    auto uc = u.raw();
    for (std::size_t k = 1; k <= n; ++k) {
        rest[0] = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            std::uint64_t r = rest[j - 1];
            const auto& prev = pw[j - 1];
            for (std::size_t i = 1; i < k; ++i) r += std::uint64_t{uc[i]} * prev[k - i];
            rest[j] = r % p;
        }
        const std::uint64_t uk = (fc[k] + p - rest[m]) % p * minv % p;
        uc[k] = static_cast<Series::coeff_type>(uk);
        for (std::size_t j = 1; j <= m; ++j) pw[j][k] = static_cast<std::uint32_t>((j % p * uk + rest[j]) % p);
    }
    return u;
}

} // namespace nottingham
