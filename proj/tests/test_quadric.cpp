#include <codp/quadric.hpp>

#include <gtest/gtest.h>

using namespace codp;

namespace {

Integer binom(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Monomials of degree m in d+2 variables modulo the quadric, for m >= 0.
Integer coordinate_ring_dim(int d, long m)
{
    return binom(m + d + 1, d + 1) - binom(m - 2 + d + 1, d + 1);
}

// Q^2 = P1 x P1 with O(1) = O(1,1), S = O(-1,0), S' = O(0,-1).
std::pair<long, long> p1p1(Bundle b)
{
    switch (b) {
    case Bundle::O:
        return {0, 0};
    case Bundle::S:
        return {-1, 0};
    default:
        return {0, -1};
    }
}

// Q^1 = conic in P2, isomorphic to P1 with O(1) = O_P1(2), S = O_P1(-1).
long conic(Bundle b) { return b == Bundle::O ? 0 : -1; }

} // namespace

TEST(Quadric, StructureSheafMatchesCoordinateRing)
{
    for (int d = 1; d <= 6; ++d)
        for (long m = 0; m <= 8; ++m)
            EXPECT_EQ(chi_o(d, m), coordinate_ring_dim(d, m)) << "d=" << d << " m=" << m;
}

TEST(Quadric, SerreDualityOnStructureSheaf)
{
    // omega = O(-d).
    for (int d = 1; d <= 6; ++d)
        for (long m = -8; m <= 8; ++m)
            EXPECT_EQ(chi_o(d, m), (d % 2 ? -1 : 1) * chi_o(d, -m - d));
}

TEST(Quadric, ProductOfLinesOracle)
{
    QuadricChi q(2);
    for (Bundle f : {Bundle::O, Bundle::S, Bundle::Sp})
        for (Bundle g : {Bundle::O, Bundle::S, Bundle::Sp})
            for (int m = -4; m <= 4; ++m) {
                auto [fa, fb] = p1p1(f);
                auto [ga, gb] = p1p1(g);
                long a = ga - fa + m, b = gb - fb + m;
                EXPECT_EQ(q.chi(f, g, m), Integer((a + 1) * (b + 1)))
                    << to_string(f) << " " << to_string(g) << " " << m;
            }
}

TEST(Quadric, ConicOracle)
{
    QuadricChi q(1);
    for (Bundle f : {Bundle::O, Bundle::S})
        for (Bundle g : {Bundle::O, Bundle::S})
            for (int m = -4; m <= 4; ++m) {
                long k = conic(g) - conic(f) + 2 * m;
                EXPECT_EQ(q.chi(f, g, m), Integer(k + 1));
            }
}

TEST(Quadric, SerreDualityOnSpinors)
{
    for (int d = 1; d <= 8; ++d) {
        QuadricChi q(d);
        std::vector<Bundle> all{Bundle::O, Bundle::S, Bundle::Sp};
        for (Bundle f : all)
            for (Bundle g : all)
                for (int a = -3; a <= 3; ++a)
                    for (int b = -3; b <= 3; ++b) {
                        Integer lhs = q.chi(Twisted{f, a}, Twisted{g, b});
                        Integer rhs = q.chi(Twisted{g, b}, Twisted{f, a - d});
                        EXPECT_EQ(lhs, (d % 2 ? -1 : 1) * rhs) << "d=" << d;
                    }
    }
}

TEST(Quadric, SpinorValues)
{
    for (int d = 1; d <= 6; ++d) {
        QuadricChi q(d);
        EXPECT_EQ(q.rank(), 1L << ((d - 1) / 2));
        EXPECT_EQ(q.chi(Bundle::S, Bundle::S, 0), 1);
        EXPECT_EQ(q.chi(Bundle::O, Bundle::S, 0), 0);
        EXPECT_EQ(q.round_trip(), 1);
        if (d % 2)
            EXPECT_EQ(q.chi(Bundle::S, Bundle::S, -1), -1);
        else {
            EXPECT_EQ(q.chi(Bundle::S, Bundle::Sp, -1), -1);
            EXPECT_EQ(q.chi(Bundle::S, Bundle::Sp, 0), 0);
        }
    }
}

TEST(Quadric, SpinorRank)
{
    EXPECT_EQ(spinor_rank(2), 1);
    EXPECT_EQ(spinor_rank(3), 1);
    EXPECT_EQ(spinor_rank(4), 2);
    EXPECT_EQ(spinor_rank(7), 4);
    EXPECT_THROW(spinor_rank(1), InputError);
}

TEST(Quadric, EtaTable)
{
    for (int d = 1; d <= 6; ++d) {
        QuadricChi q(d);
        Twisted s{Bundle::S, 0}, sp{Bundle::Sp, 0};
        EXPECT_EQ(eta_chi(q, s, s), d % 2 ? 2 : 1);
        if (d % 2 == 0)
            EXPECT_EQ(eta_chi(q, s, sp), 1);
        auto k = k_class(q);
        EXPECT_EQ(eta_chi_class(q, k, k), d % 2 ? 2 : 0);
        EtaTable t = eta_chi_table(q);
        EXPECT_EQ(t.values.size(), t.labels.size());
        EXPECT_EQ(t.chi_kk, eta_chi_class(q, k, k));
    }
}

TEST(Quadric, KapranovGram)
{
    for (int d = 1; d <= 6; ++d) {
        GramResult g = gram_kapranov(d);
        EXPECT_TRUE(g.unitriangular) << d;
        EXPECT_EQ(g.labels.size(), static_cast<std::size_t>(d % 2 ? d + 1 : d + 2));
    }
}
