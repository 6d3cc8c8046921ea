#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace codp;

namespace {

AlgebraPtr kr(int q) { return preset_algebra("Kr:q=" + std::to_string(q)); }

PoincareSeries one_plus(int n) { return PoincareSeries(LaurentPoly(1) + LaurentPoly::monomial(n)); }

// 1 -a-> 2 -b-> 3 with |b| = 1 and ab = 0.
AlgebraPtr zero_relation_chain()
{
    return load_algebra(json::parse(R"({"vertices": ["1", "2", "3"],
        "arrows": [{"name": "a", "src": "1", "tgt": "2", "deg": 0}, {"name": "b", "src": "2", "tgt": "3", "deg": 1}],
        "relations": [[{"coef": "1", "path": ["a", "b"]}]]})"));
}

} // namespace

TEST(Serre, DualityOnBuiltins)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        std::vector<TwistedComplex> objs;
        for (const char* n : {"E", "E'", "K+", "K-", "helix:-1", "helix:2"})
            objs.push_back(builtin_object(A, n));
        for (const auto& x : objs) {
            auto sx = serre(x);
            for (const auto& y : objs) {
                PoincareSeries want(fixtures::reversed(ext(x, y).series.numerator()));
                EXPECT_EQ(ext(y, sx).series, want) << "q=" << q << " " << x.describe() << " / " << y.describe();
            }
        }
    }
}

TEST(Serre, ProjectiveGoesToInjective)
{
    auto A = kr(2);
    auto p1 = projective(A, 0), p2 = projective(A, 1);
    EXPECT_EQ(ext(p1, serre(p1)).series, PoincareSeries(LaurentPoly(1)));
    EXPECT_EQ(ext(p2, serre(p1)).series, PoincareSeries(LaurentPoly(1) + LaurentPoly::monomial(-2)));
    EXPECT_TRUE(ext(p1, serre(p2)).series.is_zero());
    EXPECT_EQ(ext(p2, serre(p2)).series, PoincareSeries(LaurentPoly(1)));
}

TEST(Serre, SphericalObjects)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        auto kp = builtin_object(A, "K+"), km = builtin_object(A, "K-");
        EXPECT_TRUE(isomorphic(serre(kp), shift(kp, 1 + q)));
        EXPECT_TRUE(isomorphic(serre(km), shift(km, 1 - q)));
    }
}

TEST(Serre, AgreesWithArrowFunctor)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        std::mt19937 rng(40 + q);
        std::vector<TwistedComplex> objs;
        for (const char* n : {"E", "E'", "K+", "K-", "helix:-2", "helix:3"})
            objs.push_back(builtin_object(A, n));
        for (int i = 0; i < 15; ++i)
            objs.push_back(fixtures::random_complex(A, rng));
        for (const auto& x : objs)
            EXPECT_TRUE(isomorphic(serre(x), serre_by_functor(x))) << "q=" << q << " " << x.describe();
    }
}

TEST(Serre, DualityWithRelations)
{
    auto A = zero_relation_chain();
    std::mt19937 rng(9);
    std::vector<TwistedComplex> objs;
    for (int v = 0; v < 3; ++v)
        objs.push_back(projective(A, v));
    for (int i = 0; i < 12; ++i)
        objs.push_back(fixtures::random_complex(A, rng));
    for (const auto& x : objs) {
        auto sx = serre(x);
        for (const auto& y : objs) {
            PoincareSeries want(fixtures::reversed(ext(x, y).series.numerator()));
            EXPECT_EQ(ext(y, sx).series, want) << x.describe() << " / " << y.describe();
        }
    }
}

TEST(Serre, InjectivesOverRelationAlgebra)
{
    auto A = zero_relation_chain();
    // I_1 and I_2 are projective; I_3 needs a length-three resolution.
    EXPECT_TRUE(isomorphic(serre(projective(A, 0)), projective(A, 1)));
    EXPECT_TRUE(isomorphic(serre(projective(A, 1)), projective(A, 2, 1)));
    EXPECT_EQ(serre(projective(A, 2)).size(), 3);
    EXPECT_THROW(serre_by_functor(projective(A, 0)), ComputationError);
}

TEST(Serre, RejectsInfiniteAlgebras)
{
    auto B = preset_algebra("B:q=2");
    EXPECT_THROW(serre(projective(B, 0)), InputError);
}

TEST(Helix, ConsecutivePairsAreKronecker)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        for (int i = -2; i <= 2; ++i) {
            auto a = helix_object(A, i), b = helix_object(A, i + 1);
            EXPECT_EQ(check_exceptional(a).pass, true) << i;
            EXPECT_EQ(ext(a, b).series, one_plus(q)) << "q=" << q << " i=" << i;
            EXPECT_TRUE(ext(b, a).series.is_zero()) << "q=" << q << " i=" << i;
        }
    }
}

TEST(Helix, SerreShiftsByTwo)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        for (int i = -1; i <= 1; ++i)
            EXPECT_TRUE(isomorphic(serre(helix_object(A, i + 2)), shift(helix_object(A, i), 1 - q)))
                << "q=" << q << " i=" << i;
    }
}

TEST(Mutation, LeftUndoesRightOnOrthogonalPairs)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        for (int i = -1; i <= 1; ++i) {
            auto a = helix_object(A, i), b = helix_object(A, i + 1);
            // Ext(b, a) = 0, so a lies in the right orthogonal of b.
            EXPECT_TRUE(isomorphic(left_mutate(b, right_mutate(b, a)), a)) << "q=" << q << " i=" << i;
            EXPECT_TRUE(isomorphic(right_mutate(a, left_mutate(a, b)), b)) << "q=" << q << " i=" << i;
        }
    }
}

TEST(Mutation, LeftMutationIsOrthogonal)
{
    // L_E(E') is exceptional and right orthogonal to E.
    auto A = kr(2);
    auto e = builtin_object(A, "E"), ep = builtin_object(A, "E'");
    auto l = left_mutate(e, ep);
    EXPECT_TRUE(check_exceptional(l).pass);
    EXPECT_TRUE(ext(e, l).series.is_zero());
}

TEST(Twist, KroneckerTwists)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        auto e = builtin_object(A, "E"), ep = builtin_object(A, "E'"), kp = builtin_object(A, "K+");
        EXPECT_TRUE(isomorphic(spherical_twist(kp, e), ep)) << q;
        EXPECT_TRUE(isomorphic(spherical_twist(kp, kp), shift(kp, -q))) << q;
    }
}

TEST(Checks, ExceptionalAndSpherical)
{
    auto A = kr(2);
    EXPECT_TRUE(check_exceptional(builtin_object(A, "E")).pass);
    auto bad = check_exceptional(builtin_object(A, "K+"));
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.failure.empty());
    EXPECT_TRUE(check_spherical(builtin_object(A, "K+"), 3).pass);
    EXPECT_FALSE(check_spherical(builtin_object(A, "K+"), 2).pass);
    EXPECT_TRUE(check_spherical(builtin_object(A, "K-"), -1).pass);
}

TEST(Checks, AdherentAndOrthogonal)
{
    auto A = kr(2);
    auto e = builtin_object(A, "E"), kp = builtin_object(A, "K+"), km = builtin_object(A, "K-");
    EXPECT_TRUE(check_adherent(e, kp).pass);
    EXPECT_TRUE(check_orthogonal({kp, km}).pass);
    auto r = check_orthogonal({e, kp});
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.failure.find("Ext"), std::string::npos);
}

TEST(Checks, KroneckerRecognition)
{
    for (int q = 1; q <= 3; ++q) {
        auto A = kr(q);
        auto e = builtin_object(A, "E");
        KroneckerResult good = kronecker_recognition(e, builtin_object(A, "K+"));
        EXPECT_TRUE(good.report.pass) << good.report.failure;
        EXPECT_EQ(good.p, q - 1);
        ASSERT_TRUE(good.pair.has_value());
        EXPECT_EQ(ext(good.pair->first, good.pair->second).series, one_plus(q));
        // K- is (1-q)-spherical, so it is rejected with a witness.
        KroneckerResult bad = kronecker_recognition(e, builtin_object(A, "K-"));
        EXPECT_FALSE(bad.report.pass);
        EXPECT_FALSE(bad.report.failure.empty());
    }
}
