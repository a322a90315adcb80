#pragma once

// Brute-force reference arithmetic for the tests. Deliberately naive and
// independent of the library kernels: plain coefficient vectors, composition as
// an explicit sum of powers, and inverses/roots found by trial of every residue.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nottingham/series.hpp"

namespace oracle {

using Poly = std::vector<long long>; // coefficients 0..N, reduced mod p

inline Poly mul(const Poly& a, const Poly& b, long long p)
{
    Poly c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

inline Poly power(const Poly& a, std::uint64_t e, long long p)
{
    Poly r(a.size(), 0);
    r[0] = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a, p);
    return r;
}

inline Poly compose(const Poly& f, const Poly& g, long long p)
{
    Poly r(f.size(), 0);
    Poly gk(f.size(), 0);
    gk[0] = 1;
    for (std::size_t k = 0; k < f.size(); ++k) {
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (r[i] + f[k] * gk[i]) % p;
        gk = mul(gk, g, p);
    }
    return r;
}

/// u with u(0) = 1 and u^m = f, each coefficient found by trying all residues.
inline Poly root_by_trial(const Poly& f, std::uint64_t m, long long p)
{
    Poly u(f.size(), 0);
    u[0] = 1;
    for (std::size_t k = 1; k < f.size(); ++k) {
        for (long long v = 0; v < p; ++v) {
            u[k] = v;
            if (power(u, m, p)[k] == f[k]) break;
        }
    }
    return u;
}

inline Poly to_poly(const nottingham::Series& s)
{
    Poly out;
    for (auto c : s.raw()) out.push_back(c);
    return out;
}

inline nottingham::Series to_series(const Poly& a, unsigned p)
{
    return nottingham::Series(nottingham::Prime(p), a.size() - 1, a);
}

/// Random coefficients in [0, p), with optional fixed leading terms.
inline nottingham::Series random_series(std::mt19937_64& rng, unsigned p, std::size_t n)
{
    std::uniform_int_distribution<long long> d(0, p - 1);
    Poly a(n + 1);
    for (auto& c : a) c = d(rng);
    return to_series(a, p);
}

/// Random element of the form t + a_2 t^2 + ... .
inline nottingham::Series random_group_body(std::mt19937_64& rng, unsigned p, std::size_t n)
{
    auto s = random_series(rng, p, n);
    s.set_coeff(0, 0);
    if (n >= 1) s.set_coeff(1, 1);
    return s;
}

/// Random series with zero constant term.
inline nottingham::Series random_nonunit(std::mt19937_64& rng, unsigned p, std::size_t n)
{
    auto s = random_series(rng, p, n);
    s.set_coeff(0, 0);
    return s;
}

} // namespace oracle
