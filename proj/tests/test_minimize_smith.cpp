#include "support.hpp"

#include <gtest/gtest.h>

using namespace codp;

TEST(Minimize, RemovesContractiblePairs)
{
    auto A = preset_algebra("Kr:q=2");
    TwistedComplex x(A, {Term{0, 1}, Term{0, 0}, Term{1, -1}});
    x.set_entry(0, 1, A->idempotent(0));
    ASSERT_NO_THROW(x.validate());
    auto m = minimize(x);
    EXPECT_TRUE(is_minimal(m));
    EXPECT_EQ(m.size(), 1);
    EXPECT_EQ(m.term(0).vertex, 1);
}

TEST(Minimize, KeepsMinimalComplexes)
{
    auto A = preset_algebra("Kr:q=2");
    auto k = builtin_object(A, "K-");
    EXPECT_TRUE(is_minimal(k));
    EXPECT_EQ(minimize(k).describe(), k.describe());
}

TEST(Minimize, CancelsIdentityNextToArrow)
{
    // P1[1] maps to P1[0] by the identity and to P2[0] by a0.
    auto A = preset_algebra("Kr:q=1");
    TwistedComplex x(A, {Term{0, 1}, Term{0, 0}, Term{1, 0}});
    x.set_entry(0, 1, A->idempotent(0));
    x.set_entry(0, 2, A->arrow(0));
    ASSERT_NO_THROW(x.validate());
    auto m = minimize(x);
    ASSERT_EQ(m.size(), 1);
    EXPECT_EQ(m.term(0), (Term{1, 0}));
    EXPECT_EQ(ext(m, m).series, ext(x, x).series);
}

TEST(Smith, TorsionAndFreeSummands)
{
    auto B = preset_algebra("B:q=2");
    auto kb = builtin_object(B, "kB");
    auto s = smith_decompose(kb);
    ASSERT_EQ(s.summands.size(), 1u);
    EXPECT_EQ(s.summands[0].str(), "torsion(m=1, s=0)");
    auto free = smith_decompose(projective(B, 0, 3));
    ASSERT_EQ(free.summands.size(), 1u);
    EXPECT_EQ(free.summands[0].str(), "free[3]");
}

TEST(Smith, HigherThetaPower)
{
    // B[-1] -> B with theta^2.
    auto B = preset_algebra("B:q=1");
    TwistedComplex x(B, {Term{0, -1}, Term{0, 0}});
    x.set_entry(0, 1, B->path(0, {0, 0}));
    auto s = smith_decompose(x);
    ASSERT_EQ(s.summands.size(), 1u);
    EXPECT_EQ(s.summands[0].power, 2);
    EXPECT_TRUE(s.summands[0].torsion);
}

TEST(Smith, CertificateIsClosedIsomorphism)
{
    std::mt19937 rng(11);
    auto B = preset_algebra("B:q=2");
    for (int i = 0; i < 30; ++i) {
        auto x = fixtures::random_complex(B, rng, 4);
        auto s = smith_decompose(x);
        EXPECT_TRUE(is_closed(s.certificate));
        EXPECT_EQ(ext(s.assembled, s.assembled).series, ext(x, x).series) << x.describe();
        auto again = smith_decompose(s.assembled);
        EXPECT_EQ(again.summands, s.summands) << x.describe();
    }
}

TEST(Smith, RequiresPolynomialPreset)
{
    auto A = preset_algebra("Kr:q=1");
    EXPECT_THROW(smith_decompose(projective(A, 0)), InputError);
}

TEST(Iso, DistinguishesShifts)
{
    auto A = preset_algebra("Kr:q=2");
    auto k = builtin_object(A, "K+");
    EXPECT_TRUE(isomorphic(k, k));
    EXPECT_FALSE(isomorphic(k, shift(k, 1)));
    EXPECT_FALSE(isomorphic(builtin_object(A, "K+"), builtin_object(A, "K-")));
    IsoResult r = iso_test(k, k);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(is_closed(*r.certificate));
}
