#pragma once

// An explicit automorphism of order 4 of k[[t]] in characteristic 2, built three
// ways and checked against the identities that define it.
//
// Background: let A = k[[t, w]] / (w + (1 + t) w^2 + t^3) and let sigma act on A by
//     sigma(t) = (t + w) / (1 + t),   sigma(w) = w / (1 + t).
// With v = w (1 + t) the relation becomes v^2 + v + t^3 + t^4 = 0, which is solved
// by the Artin-Schreier series s = sum_i (t^3 + t^4)^(2^i), so v = s and
// w = s / (1 + t) inside A = k[[t]]. Substituting gives sigma(t) as a single
// power series in t, with support
//     {1, 2} U {6 * 2^j + 2 l : j >= 0, 0 <= l < 2^j}.
//
// The ring A is the completed local ring at Q = (0:0:1) of the plane cubic
//     z^2 y + (z + x) y^2 + x^3 = 0
// in the chart t = x / z, v = (1 + x / z)(y / z); dehomogenizing at z = 1 and
// substituting y = w turns the cubic into the relation of A. Nothing here
// computes with the projective model; only the local relation is checked.

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nottingham/error.hpp"
#include "nottingham/group.hpp"
#include "nottingham/series.hpp"

namespace nottingham::order4 {

inline const Prime char2{2};

/// Exponents of sigma(t) up to N, ascending, read off the closed form.
inline std::vector<std::size_t> sigma_support(std::size_t trunc)
{
    std::vector<std::size_t> exps;
    for (std::size_t e : {std::size_t{1}, std::size_t{2}}) {
        if (e <= trunc) exps.push_back(e);
    }
    for (std::size_t block = 1, start = 6; start <= trunc; block *= 2, start *= 2) {
        for (std::size_t l = 0; l < block && start + 2 * l <= trunc; ++l) exps.push_back(start + 2 * l);
    }
    return exps;
}

/// sigma(t) from its closed-form support.
inline GroupElement sigma_closed(std::size_t trunc)
{
    if (trunc < 2) throw error(errc::bad_precision, "sigma needs N >= 2");
    const auto exps = sigma_support(trunc);
    return GroupElement(Series::from_exponents(char2, trunc, exps));
}

/// s = sum_i (t^3 + t^4)^(2^i), written down term by term: by Frobenius each
/// summand is t^(3 * 2^i) + t^(4 * 2^i).
inline Series s_series(std::size_t trunc)
{
    if (trunc < 3) {
        if (trunc == 0) throw error(errc::bad_precision, "s needs N >= 1");
        return Series::zero(char2, trunc);
    }
    std::vector<std::size_t> exps;
    for (std::size_t q = 1; 3 * q <= trunc; q *= 2) {
        exps.push_back(3 * q);
        if (4 * q <= trunc) exps.push_back(4 * q);
    }
    return Series::from_exponents(char2, trunc, exps);
}

/// t^3 + t^4, the right-hand side of the Artin-Schreier equation for s.
inline Series as_rhs(std::size_t trunc)
{
    return Series::monomial(char2, trunc, 3, 1) + Series::monomial(char2, trunc, 4, 1);
}

inline Series one_plus_t(std::size_t trunc) { return Series::one(char2, trunc) + Series::variable(char2, trunc); }

/// w = s / (1 + t).
inline Series w_series(std::size_t trunc)
{
    if (trunc < 3) throw error(errc::bad_precision, "w needs N >= 3");
    return mul(s_series(trunc), inv_unit(one_plus_t(trunc)));
}

/// sigma(t) = t / (1 + t) + s / (1 + t)^2.
inline GroupElement sigma_algebraic(std::size_t trunc)
{
    if (trunc < 2) throw error(errc::bad_precision, "sigma needs N >= 2");
    const Series u = one_plus_t(trunc);
    const Series t = Series::variable(char2, trunc);
    const Series s = artin_schreier_root(as_rhs(trunc));
    return GroupElement(mul(t, inv_unit(u)) + mul(s, inv_unit(mul(u, u))));
}

/// sigma(t) = (t + w) / (1 + t) with w eliminated as s / (1 + t).
inline GroupElement sigma_relation(std::size_t trunc)
{
    if (trunc < 2) throw error(errc::bad_precision, "sigma needs N >= 2");
    const Series uinv = inv_unit(one_plus_t(trunc));
    const Series w = mul(artin_schreier_root(as_rhs(trunc)), uinv);
    return GroupElement(mul(Series::variable(char2, trunc) + w, uinv));
}

struct SigmaBundle {
    GroupElement sigma_closed;
    GroupElement sigma_algebraic;
    Series s;
    Series w;
};

inline SigmaBundle make_bundle(std::size_t trunc)
{
    if (trunc < 3) throw error(errc::bad_precision, "bundle needs N >= 3");
    return {sigma_closed(trunc), sigma_algebraic(trunc), s_series(trunc), w_series(trunc)};
}

struct Check {
    std::string name;
    bool passed;
    std::optional<std::size_t> first_failure; ///< set iff !passed
};

struct VerificationReport {
    std::vector<Check> checks;
    std::size_t precision;

    bool all_passed() const
    {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }

    const Check* first_failed() const
    {
        for (const auto& c : checks) {
            if (!c.passed) return &c;
        }
        return nullptr;
    }
};

/// One line per check: `PASS <name>` or `FAIL <name> at t^<e>`.
inline std::ostream& operator<<(std::ostream& os, const VerificationReport& r)
{
    for (const auto& c : r.checks) {
        if (c.passed) {
            os << "PASS " << c.name << '\n';
        } else {
            os << "FAIL " << c.name << " at t^" << *c.first_failure << '\n';
        }
    }
    return os;
}

namespace detail {

inline Check equality_check(std::string name, const Series& lhs, const Series& rhs)
{
    auto diff = first_difference(lhs, rhs);
    return {std::move(name), !diff.has_value(), diff};
}

inline std::optional<std::size_t> min_opt(std::optional<std::size_t> a, std::optional<std::size_t> b)
{
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

// A polynomial c0 + c1 v + c2 v^2 in a formal variable v over the series ring.
using VPoly = std::array<Series, 3>;

inline VPoly mul_linear(const std::array<Series, 2>& a, const std::array<Series, 2>& b)
{
    return {mul(a[0], b[0]), mul(a[0], b[1]) + mul(a[1], b[0]), mul(a[1], b[1])};
}

} // namespace detail

/// Runs the six identity checks against a candidate sigma.
///
/// (a) s^2 + s = t^3 + t^4
/// (b) (v + s)(v + s + 1) = v^2 + v + t^3 + t^4 coefficientwise in v
/// (c) w + (1 + t) w^2 + t^3 = 0
/// (d) w(sigma(t)) = w / (1 + t), i.e. sigma respects the relation of A
/// (e) sigma^4 = id, sigma^2 != id, sigma != id
/// (f) candidate = closed form = t/(1+t) + s/(1+t)^2 = (t + w)/(1 + t)
///
/// For the two inequalities in (e) there is no differing coefficient to point
/// at; an unexpected agreement is reported at exponent N.
inline VerificationReport verify_sigma(const GroupElement& candidate)
{
    if (!(candidate.prime() == char2)) throw error(errc::wrong_characteristic, "sigma lives in characteristic 2");
    const std::size_t n = candidate.trunc();
    if (n < 8) throw error(errc::bad_precision, "verification needs N >= 8");

    const Series one = Series::one(char2, n);
    const Series t = Series::variable(char2, n);
    const Series u = one_plus_t(n);
    const Series uinv = inv_unit(u);
    const Series rhs = as_rhs(n);
    const Series s = s_series(n);
    const Series w = mul(s, uinv);
    const Series& sigma = candidate.body();

    VerificationReport report{{}, n};
    report.checks.reserve(6);

    report.checks.push_back(detail::equality_check("artin_schreier", mul(s, s) + s, rhs));

    {
        const detail::VPoly lhs = detail::mul_linear({s, one}, {s + one, one});
        const detail::VPoly expected = {rhs, one, one};
        std::optional<std::size_t> diff;
        for (std::size_t i = 0; i < 3; ++i) diff = detail::min_opt(diff, first_difference(lhs[i], expected[i]));
        report.checks.push_back({"factorization", !diff.has_value(), diff});
    }

    report.checks.push_back(
        detail::equality_check("relation", w + mul(u, mul(w, w)) + Series::monomial(char2, n, 3, 1), Series::zero(char2, n)));

    report.checks.push_back(detail::equality_check("automorphism", compose(w, sigma), mul(w, uinv)));

    {
        const GroupElement sq = gcompose(candidate, candidate);
        const GroupElement fourth = gcompose(sq, sq);
        std::optional<std::size_t> fail = first_difference(fourth.body(), t);
        if (!fail && (is_identity(sq) || is_identity(candidate))) fail = n;
        report.checks.push_back({"order", !fail.has_value(), fail});
    }

    {
        const Series closed = sigma_closed(n).body();
        const Series algebraic = sigma_algebraic(n).body();
        const Series relation = sigma_relation(n).body();
        std::optional<std::size_t> diff = first_difference(sigma, closed);
        diff = detail::min_opt(diff, first_difference(sigma, algebraic));
        diff = detail::min_opt(diff, first_difference(sigma, relation));
        report.checks.push_back({"route_agreement", !diff.has_value(), diff});
    }

    return report;
}

/// verify_sigma applied to the closed-form sigma at precision N.
inline VerificationReport verify_all(std::size_t trunc)
{
    if (trunc < 8) throw error(errc::bad_precision, "verification needs N >= 8");
    return verify_sigma(sigma_closed(trunc));
}

} // namespace nottingham::order4
