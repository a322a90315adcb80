#pragma once

// Bit-packed truncated power series over F_2.
//
// Bit i of the word array is the coefficient of t^i; bits above the truncation
// order are kept at zero. These routines back the p = 2 paths of series.hpp and
// are checked against the dense reference kernels there.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace nottingham::gf2 {

using word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

class Packed {
public:
    explicit Packed(std::size_t trunc) : trunc_(trunc), words_(trunc / word_bits + 1, 0) {}

    std::size_t trunc() const noexcept { return trunc_; }
    std::size_t size() const noexcept { return words_.size(); }

    bool get(std::size_t i) const noexcept { return i <= trunc_ && ((words_[i / word_bits] >> (i % word_bits)) & 1u); }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= word{1} << (i % word_bits); }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word{1} << (i % word_bits); }

    word* data() noexcept { return words_.data(); }
    const word* data() const noexcept { return words_.data(); }
    word& operator[](std::size_t w) noexcept { return words_[w]; }
    word operator[](std::size_t w) const noexcept { return words_[w]; }

    bool is_zero() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](word w) { return w == 0; });
    }

    /// Least exponent with a nonzero coefficient; trunc + 1 for zero.
    std::size_t valuation() const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return trunc_ + 1;
    }

    void clear_tail() noexcept
    {
        std::size_t used = trunc_ % word_bits + 1;
        if (used < word_bits) words_.back() &= (word{1} << used) - 1;
    }

    Packed& operator^=(const Packed& o) noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend bool operator==(const Packed&, const Packed&) = default;

private:
    std::size_t trunc_;
    std::vector<word> words_;
};

/// Carry-less 64x64 -> 128 bit product, returned as (low, high).
inline std::pair<word, word> clmul(word a, word b) noexcept
{
    // 4-bit window over b; the top three bits of a are patched in afterwards
    // because a << 1..3 overflows the table entries.
    word table[16];
    const word a61 = a & 0x1FFFFFFFFFFFFFFFull;
    table[0] = 0;
    table[1] = a61;
    table[2] = a61 << 1;
    table[3] = table[2] ^ a61;
    table[4] = a61 << 2;
    table[5] = table[4] ^ a61;
    table[6] = table[4] ^ table[2];
    table[7] = table[6] ^ a61;
    table[8] = a61 << 3;
    for (unsigned i = 9; i < 16; ++i) table[i] = table[8] ^ table[i - 8];

    word lo = 0, hi = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        word t = table[(b >> shift) & 0xF];
        lo ^= t << shift;
        if (shift != 0) hi ^= t >> (64 - shift);
    }
    for (unsigned bit = 61; bit < 64; ++bit) {
        if ((a >> bit) & 1u) {
            lo ^= b << bit;
            hi ^= b >> (64 - bit);
        }
    }
    return {lo, hi};
}

/// dst ^= src * t^shift, truncated to dst's order.
inline void xor_shifted(Packed& dst, const Packed& src, std::size_t shift) noexcept
{
    const std::size_t ws = shift / word_bits;
    const unsigned bs = static_cast<unsigned>(shift % word_bits);
    const std::size_t n = dst.size();
    for (std::size_t i = 0; i < src.size() && i + ws < n; ++i) {
        word s = src[i];
        if (s == 0) continue;
        dst[i + ws] ^= s << bs;
        if (bs != 0 && i + ws + 1 < n) dst[i + ws + 1] ^= s >> (word_bits - bs);
    }
    dst.clear_tail();
}

/// Product truncated to the common order of a and b.
inline Packed mul(const Packed& a, const Packed& b)
{
    Packed r(a.trunc());
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        const word ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            const word bj = b[j];
            if (bj == 0) continue;
            auto [lo, hi] = clmul(ai, bj);
            r[i + j] ^= lo;
            if (i + j + 1 < n) r[i + j + 1] ^= hi;
        }
    }
    r.clear_tail();
    return r;
}

namespace detail {

// Spreads the 32 bits of x into the even bit positions of a 64-bit word.
constexpr word spread_bits(std::uint32_t x) noexcept
{
    word v = x;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
}

// Inverse of spread_bits on the even positions; odd positions are ignored.
constexpr std::uint32_t gather_even_bits(word v) noexcept
{
    v &= 0x5555555555555555ull;
    v = (v | (v >> 1)) & 0x3333333333333333ull;
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FFull;
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFFull;
    v = (v | (v >> 16)) & 0x00000000FFFFFFFFull;
    return static_cast<std::uint32_t>(v);
}

} // namespace detail

/// Frobenius: f^2 = sum f_i t^(2i) in characteristic 2.
inline Packed square(const Packed& a)
{
    Packed r(a.trunc());
    const std::size_t n = r.size();
    for (std::size_t i = 0; 2 * i < n; ++i) {
        r[2 * i] = detail::spread_bits(static_cast<std::uint32_t>(a[i]));
        if (2 * i + 1 < n) r[2 * i + 1] = detail::spread_bits(static_cast<std::uint32_t>(a[i] >> 32));
    }
    r.clear_tail();
    return r;
}

/// Same series viewed at a different order (bits are dropped or zero-filled).
inline Packed resize(const Packed& a, std::size_t trunc)
{
    Packed r(trunc);
    std::copy_n(a.data(), std::min(a.size(), r.size()), r.data());
    r.clear_tail();
    return r;
}

/// Multiplicative inverse of a series with constant term 1, by bitwise long division.
inline Packed inv_unit(const Packed& f)
{
    Packed rem(f.trunc());
    rem.set(0);
    Packed g(f.trunc());
    for (std::size_t k = 0; k <= f.trunc(); ++k) {
        if (rem.get(k)) {
            g.set(k);
            xor_shifted(rem, f, k);
        }
    }
    return g;
}

/// f(g) by Horner's rule: acc = f_N; acc = acc * g + f_k for k = N-1 .. 0.
inline Packed compose_horner(const Packed& f, const Packed& g)
{
    const std::size_t n = f.trunc();
    Packed acc(n);
    if (f.get(n)) acc.set(0);
    for (std::size_t k = n; k-- > 0;) {
        if (!acc.is_zero()) acc = mul(acc, g);
        if (f.get(k)) acc.flip(0);
    }
    return acc;
}

/// f(g) via the Frobenius split f = A(t)^2 + t B(t)^2, so that
/// f(g) = A(g)^2 + g B(g)^2 with A, B of half the length.
inline Packed compose_split(const Packed& f, const Packed& g)
{
    constexpr std::size_t horner_cutoff = 256;
    const std::size_t n = f.trunc();
    if (n <= horner_cutoff) return compose_horner(f, g);

    const std::size_t na = n / 2;
    const std::size_t nb = (n - 1) / 2;
    Packed a(na), b(nb);
    for (std::size_t w = 0; w < f.size(); ++w) {
        const word x = f[w];
        const std::uint32_t even = detail::gather_even_bits(x);
        const std::uint32_t odd = detail::gather_even_bits(x >> 1);
        const std::size_t dst = w / 2;
        const unsigned shift = (w % 2) * 32;
        if (dst < a.size()) a[dst] |= word{even} << shift;
        if (dst < b.size()) b[dst] |= word{odd} << shift;
    }
    a.clear_tail();
    b.clear_tail();

    Packed r = square(resize(compose_split(a, resize(g, na)), n));
    r ^= mul(g, square(resize(compose_split(b, resize(g, nb)), n)));
    return r;
}

} // namespace nottingham::gf2
