#include "support.hpp"

#include <gtest/gtest.h>

using namespace codp;

namespace {

PoincareSeries poly(std::initializer_list<int> degrees)
{
    LaurentPoly p;
    for (int d : degrees)
        p.add_term(d, 1);
    return PoincareSeries(p);
}

// sum over term pairs and path degrees of (-1)^n, n the Hom degree; needs
// no differential.
long long euler_from_terms(const TwistedComplex& x, const TwistedComplex& y)
{
    const auto& A = x.algebra();
    long long sum = 0;
    for (const auto& s : x.terms())
        for (const auto& t : y.terms())
            for (int d : A.piece_degrees(s.vertex, t.vertex)) {
                int n = d - t.shift + s.shift;
                long long dim = static_cast<long long>(A.piece(s.vertex, t.vertex, d).dim());
                sum += (n % 2 == 0 ? 1 : -1) * dim;
            }
    return sum;
}

long long at_minus_one(const PoincareSeries& s)
{
    long long v = 0;
    for (auto [d, c] : s.numerator().terms())
        v += (d % 2 == 0 ? 1 : -1) * c;
    return v;
}

} // namespace

TEST(Ext, ProjectivesAreGradedPathSpaces)
{
    for (int q = 0; q <= 3; ++q) {
        auto A = preset_algebra("Kr:q=" + std::to_string(q));
        auto p1 = projective(A, 0), p2 = projective(A, 1);
        EXPECT_EQ(ext(p1, p2).series, PoincareSeries(LaurentPoly(1) + LaurentPoly::monomial(q)));
        EXPECT_TRUE(ext(p2, p1).series.is_zero());
        EXPECT_EQ(ext(p1, shift(p2, 2)).series, PoincareSeries(LaurentPoly::monomial(-2) + LaurentPoly::monomial(q - 2)));
    }
}

TEST(Ext, KroneckerSphericalObjects)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = preset_algebra("Kr:q=" + std::to_string(q));
        auto kp = builtin_object(A, "K+"), km = builtin_object(A, "K-");
        EXPECT_EQ(ext(kp, kp).series, poly({0, q + 1})) << q;
        EXPECT_EQ(ext(km, km).series, PoincareSeries(LaurentPoly(1) + LaurentPoly::monomial(1 - q))) << q;
        EXPECT_TRUE(ext(kp, km).series.is_zero());
        EXPECT_TRUE(ext(km, kp).series.is_zero());
    }
}

TEST(Ext, CocyclesSpanCohomology)
{
    auto A = preset_algebra("Kr:q=2");
    auto kp = builtin_object(A, "K+");
    ExtResult r = ext(kp, kp);
    for (auto [n, d] : r.dims) {
        const auto& reps = r.cocycles[n];
        EXPECT_EQ(static_cast<long long>(reps.size()), d);
        CohomologySpace h(kp, kp, n);
        for (const auto& z : reps) {
            EXPECT_TRUE(is_closed(z));
            EXPECT_FALSE(h.is_coboundary(z));
        }
    }
}

TEST(Ext, EulerPairingMatchesTermCount)
{
    std::mt19937 rng(7);
    auto A = preset_algebra("Kr:q=2");
    for (int i = 0; i < 40; ++i) {
        auto x = fixtures::random_complex(A, rng), y = fixtures::random_complex(A, rng);
        ExtResult r = ext(x, y, std::nullopt, false);
        ASSERT_TRUE(r.certified);
        EXPECT_EQ(at_minus_one(r.series), euler_from_terms(x, y)) << x.describe() << " | " << y.describe();
        EXPECT_EQ(euler_pairing(x, y), euler_from_terms(x, y));
    }
}

TEST(Ext, PolynomialAlgebraPeriodicTail)
{
    for (int q = 1; q <= 3; ++q) {
        auto B = preset_algebra("B:q=" + std::to_string(q));
        auto P = projective(B, 0);
        ExtResult r = ext(P, P);
        EXPECT_TRUE(r.certified);
        EXPECT_EQ(r.series, PoincareSeries::geometric(q));
        auto kb = builtin_object(B, "kB");
        EXPECT_EQ(ext(kb, kb).series, PoincareSeries(LaurentPoly(1) + LaurentPoly::monomial(1 - q)));
        EXPECT_TRUE(ext(kb, kb).finite());
    }
}

TEST(Ext, ExplicitWindowIsPartial)
{
    auto B = preset_algebra("B:q=2");
    auto P = projective(B, 0);
    ExtResult r = ext(P, P, std::make_pair(0, 3));
    EXPECT_FALSE(r.certified);
    EXPECT_EQ(r.dim(0), 1);
    EXPECT_EQ(r.dim(2), 1);
    EXPECT_EQ(r.dim(1), 0);
}

TEST(Ext, RejectsMixedAlgebras)
{
    auto A = preset_algebra("Kr:q=1"), B = preset_algebra("B:q=1");
    EXPECT_THROW(ext(projective(A, 0), projective(B, 0)), InputError);
}

TEST(Ext, ShiftMovesSeries)
{
    auto A = preset_algebra("Kr:q=3");
    auto e = builtin_object(A, "E"), k = builtin_object(A, "K+");
    auto base = ext(e, k).series;
    for (int s = -2; s <= 2; ++s) {
        auto moved = ext(e, shift(k, s)).series;
        for (int n = -8; n <= 8; ++n)
            EXPECT_EQ(moved.coefficient(n), base.coefficient(n + s));
    }
}
