#include "nottingham/gf2.hpp"

#include <random>

#include <gtest/gtest.h>

#include "nottingham/series.hpp"
#include "oracle.hpp"

namespace nottingham {
namespace {

std::pair<gf2::word, gf2::word> clmul_bitwise(gf2::word a, gf2::word b)
{
    gf2::word lo = 0, hi = 0;
    for (unsigned i = 0; i < 64; ++i) {
        if ((a >> i) & 1u) {
            lo ^= b << i;
            if (i != 0) hi ^= b >> (64 - i);
        }
    }
    return {lo, hi};
}

TEST(Gf2, ClmulMatchesBitwise)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5000; ++i) {
        gf2::word a = rng(), b = rng();
        if (i % 7 == 0) a |= 0xE000000000000000ull;
        ASSERT_EQ(gf2::clmul(a, b), clmul_bitwise(a, b)) << std::hex << a << " " << b;
    }
    EXPECT_EQ(gf2::clmul(~0ull, ~0ull), clmul_bitwise(~0ull, ~0ull));
}

TEST(Gf2, SpreadGatherRoundTrip)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        auto x = static_cast<std::uint32_t>(rng());
        ASSERT_EQ(gf2::detail::gather_even_bits(gf2::detail::spread_bits(x)), x);
    }
}

TEST(Gf2, ValuationAndTail)
{
    gf2::Packed f(70);
    EXPECT_EQ(f.valuation(), 71u);
    f.set(65);
    EXPECT_EQ(f.valuation(), 65u);
    f[1] = ~0ull;
    f.clear_tail();
    EXPECT_FALSE(f.get(71));
    EXPECT_TRUE(f.get(70));
}

class Gf2AgainstDense : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Gf2AgainstDense, KernelsMatchReference)
{
    const std::size_t n = GetParam();
    std::mt19937_64 rng(1000 + n);
    for (int rep = 0; rep < 20; ++rep) {
        const Series f = oracle::random_series(rng, 2, n);
        const Series g = oracle::random_series(rng, 2, n);
        const Series h = oracle::random_nonunit(rng, 2, n);
        const auto pf = detail::pack(f);
        EXPECT_EQ(detail::unpack(pf), f);
        EXPECT_EQ(detail::unpack(gf2::mul(pf, detail::pack(g))), detail::dense_mul(f, g));
        EXPECT_EQ(detail::unpack(gf2::square(pf)), detail::dense_mul(f, f));
        EXPECT_EQ(detail::unpack(gf2::compose_horner(pf, detail::pack(h))), detail::dense_compose_horner(f, h));
        Series unit = f;
        unit.set_coeff(0, 1);
        EXPECT_EQ(detail::unpack(gf2::inv_unit(detail::pack(unit))), detail::dense_inv_unit(unit));
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, Gf2AgainstDense, ::testing::Values(0, 1, 2, 5, 63, 64, 65, 127, 128, 200));

TEST(Gf2, SplitCompositionMatchesHorner)
{
    std::mt19937_64 rng(99);
    for (std::size_t n : {1u, 100u, 257u, 300u, 511u, 512u, 777u, 1500u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto f = detail::pack(oracle::random_series(rng, 2, n));
            const auto g = detail::pack(oracle::random_nonunit(rng, 2, n));
            ASSERT_EQ(gf2::compose_split(f, g), gf2::compose_horner(f, g)) << "n=" << n;
        }
    }
}

} // namespace
} // namespace nottingham
