#include <codp/codp.hpp>

#include <gtest/gtest.h>

using namespace codp;

namespace {

// Counts paths v -> w of total degree d by depth-first search, for a quiver
// without relations.
long long count_paths(const QuiverSpec& s, const std::string& v, const std::string& w, int d, int depth)
{
    long long n = (v == w && d == 0) ? 1 : 0;
    if (depth == 0)
        return n;
    for (const auto& a : s.arrows)
        if (a.source == v)
            n += count_paths(s, a.target, w, d - a.degree, depth - 1);
    return n;
}

QuiverSpec square()
{
    QuiverSpec s;
    s.vertices = {"1", "2", "3", "4"};
    s.arrows = {{"a", "1", "2", 1}, {"b", "2", "4", 0}, {"c", "1", "3", 0}, {"d", "3", "4", 1}};
    return s;
}

} // namespace

TEST(Algebra, KroneckerPiecesMatchPathCount)
{
    for (int q = 0; q <= 4; ++q) {
        auto spec = preset_spec("Kr:q=" + std::to_string(q));
        auto A = build_algebra(spec);
        for (int v = 0; v < 2; ++v)
            for (int w = 0; w < 2; ++w)
                for (int d = -2; d <= 6; ++d)
                    EXPECT_EQ(static_cast<long long>(A->piece(v, w, d).dim()),
                              count_paths(spec, spec.vertices[v], spec.vertices[w], d, 3))
                        << "q=" << q << " v=" << v << " w=" << w << " d=" << d;
    }
}

TEST(Algebra, DualNumbersKillEpsilonSquared)
{
    auto A = preset_algebra("A:p=2");
    EXPECT_TRUE(A->finite_dimensional());
    EXPECT_EQ(A->piece(0, 0, 0).dim(), 1u);
    EXPECT_EQ(A->piece(0, 0, -2).dim(), 1u);
    EXPECT_EQ(A->piece(0, 0, -4).dim(), 0u);
    Element eps = A->arrow(0);
    EXPECT_TRUE(A->multiply(eps, eps).is_zero());
}

TEST(Algebra, PolynomialAlgebraIsInfinite)
{
    auto B = preset_algebra("B:q=3");
    EXPECT_FALSE(B->finite_dimensional());
    EXPECT_EQ(B->cycle_period(), 3);
    for (int k = 0; k < 6; ++k) {
        EXPECT_EQ(B->piece(0, 0, 3 * k).dim(), 1u);
        EXPECT_EQ(B->piece(0, 0, 3 * k + 1).dim(), 0u);
    }
}

TEST(Algebra, CommutativityRelationCollapsesPaths)
{
    auto free_spec = square();
    auto rel_spec = square();
    rel_spec.relations = {{{"1", {"a", "b"}}, {"-1", {"c", "d"}}}};
    auto F = build_algebra(free_spec), R = build_algebra(rel_spec);
    EXPECT_EQ(F->piece(0, 3, 1).dim(), 2u);
    EXPECT_EQ(R->piece(0, 3, 1).dim(), 1u);
    Element ab = R->path(0, {R->arrow_index("a"), R->arrow_index("b")});
    Element cd = R->path(0, {R->arrow_index("c"), R->arrow_index("d")});
    EXPECT_EQ(R->coords(ab, 0, 3, 1), R->coords(cd, 0, 3, 1));
    EXPECT_TRUE(R->directed());
}

TEST(Algebra, MultiplicationComposesLeftToRight)
{
    auto A = build_algebra(square());
    Element a = A->arrow(A->arrow_index("a")), b = A->arrow(A->arrow_index("b"));
    Element ab = A->multiply(a, b);
    EXPECT_EQ(ab.source, 0);
    EXPECT_EQ(ab.target, 3);
    EXPECT_EQ(ab.degree, 1);
    EXPECT_THROW(A->multiply(b, a), ComputationError);
}

TEST(Algebra, RejectsMalformedPresentations)
{
    QuiverSpec dup;
    dup.vertices = {"x", "x"};
    EXPECT_THROW(build_algebra(dup), InputError);
    QuiverSpec dangling;
    dangling.vertices = {"x"};
    dangling.arrows = {{"a", "x", "y", 0}};
    EXPECT_THROW(build_algebra(dangling), InputError);
    QuiverSpec empty;
    EXPECT_THROW(build_algebra(empty), InputError);
}

TEST(Algebra, PresetParsing)
{
    EXPECT_THROW(preset_algebra("Kr:q=x"), InputError);
    EXPECT_THROW(preset_algebra("Zz:q=1"), InputError);
    EXPECT_THROW(preset_algebra("B:q=0"), InputError);
    EXPECT_THROW(preset_algebra("A:q=1"), InputError);
    auto blocks = preset_algebra("Kr:q=2,r=3");
    EXPECT_EQ(blocks->num_vertices(), 6);
    EXPECT_EQ(kronecker_blocks(*blocks), 3);
    EXPECT_EQ(preset_param(*blocks, "Kr", "q"), 2);
}

TEST(Algebra, JsonRoundTrip)
{
    json j = json::parse(R"({"vertices":["u","v"],"arrows":[{"name":"x","src":"u","tgt":"v","deg":2}]})");
    auto A = load_algebra(j);
    EXPECT_EQ(A->piece(0, 1, 2).dim(), 1u);
    auto B = load_algebra(algebra_to_json(*A));
    EXPECT_TRUE(A->same_presentation(*B));
    EXPECT_THROW(load_algebra(json::parse(R"({"vertices":["u"]})")), InputError);
}
