#include "support.hpp"

#include <gtest/gtest.h>

using namespace codp;

TEST(Properties, MinimizePreservesExtOverKronecker)
{
    std::mt19937 rng(101);
    auto A = preset_algebra("Kr:q=2");
    for (int i = 0; i < 200; ++i) {
        auto x = fixtures::random_complex(A, rng), probe = fixtures::random_complex(A, rng, 2);
        EXPECT_EQ(fixtures::minimize_preserves_ext(x, probe), "");
    }
}

TEST(Properties, MinimizePreservesExtOverPolynomial)
{
    std::mt19937 rng(202);
    auto B = preset_algebra("B:q=2");
    for (int i = 0; i < 200; ++i) {
        auto x = fixtures::random_complex(B, rng), probe = fixtures::random_complex(B, rng, 2);
        EXPECT_EQ(fixtures::minimize_preserves_ext(x, probe), "");
    }
}

TEST(Properties, SmithRoundTrip)
{
    std::mt19937 rng(303);
    for (int q = 1; q <= 3; ++q) {
        auto B = preset_algebra("B:q=" + std::to_string(q));
        for (int i = 0; i < 40; ++i)
            EXPECT_EQ(fixtures::smith_round_trip(fixtures::random_complex(B, rng, 5)), "");
    }
}

TEST(Properties, MutationRoundTrip)
{
    for (int q = 1; q <= 4; ++q) {
        auto A = preset_algebra("Kr:q=" + std::to_string(q));
        for (int i = -2; i <= 2; ++i)
            EXPECT_EQ(fixtures::mutation_round_trip(A, i), "");
    }
}

TEST(Properties, SerreDualityOnEulerPairing)
{
    for (int q = 0; q <= 4; ++q)
        EXPECT_EQ(fixtures::serre_chi_duality(preset_algebra("Kr:q=" + std::to_string(q))), "") << q;
}

TEST(Properties, SerreDualityOnRandomComplexes)
{
    std::mt19937 rng(404);
    auto A = preset_algebra("Kr:q=3");
    for (int i = 0; i < 30; ++i) {
        auto x = fixtures::random_complex(A, rng, 3), y = fixtures::random_complex(A, rng, 3);
        PoincareSeries want(fixtures::reversed(ext(x, y).series.numerator()));
        EXPECT_EQ(ext(y, serre(x)).series, want) << x.describe() << " | " << y.describe();
    }
}

TEST(Properties, KapranovGramUnitriangular)
{
    for (int d = 1; d <= 6; ++d)
        EXPECT_TRUE(gram_kapranov(d).unitriangular) << d;
}
