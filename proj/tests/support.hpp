#pragma once

#include <codp/codp.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace codp::fixtures {

/// Random element of e_v A e_w in degree d, coefficients in {-2..2}.
inline Element random_element(const GradedQuiverAlgebra& A, int v, int w, int d, std::mt19937& rng)
{
    const Piece& pc = A.piece(v, w, d);
    std::uniform_int_distribution<int> coef(-2, 2);
    Vector c(pc.dim());
    for (auto& x : c)
        x = coef(rng);
    return A.from_coords(v, w, d, c);
}

/// A valid twisted complex with 1 to max_terms terms and shifts in [-2, 2];
/// entries are drawn at random and kept only when the result squares to zero.
inline TwistedComplex random_complex(const AlgebraPtr& A, std::mt19937& rng, int max_terms = 4)
{
    std::uniform_int_distribution<int> count(1, max_terms), vert(0, A->num_vertices() - 1), sh(-2, 2), keep(0, 2);
    for (;;) {
        int n = count(rng);
        std::vector<Term> terms;
        for (int i = 0; i < n; ++i)
            terms.push_back(Term{vert(rng), sh(rng)});
        TwistedComplex x(A, terms);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (keep(rng) == 0)
                    continue;
                int d = x.entry_degree(i, j);
                x.set_entry(i, j, random_element(*A, terms[i].vertex, terms[j].vertex, d, rng));
            }
        if (x.is_valid())
            return x;
    }
}

inline LaurentPoly reversed(const LaurentPoly& p)
{
    LaurentPoly out;
    for (auto [d, c] : p.terms())
        out.add_term(-d, c);
    return out;
}

/// Empty when minimize(x) has the same certified Ext as x, against itself
/// and against the probe.
inline std::string minimize_preserves_ext(const TwistedComplex& x, const TwistedComplex& probe)
{
    TwistedComplex m = minimize(x);
    if (!is_minimal(m))
        return "not minimal: " + m.describe();
    for (auto [a, b] : {std::pair{&x, &x}, std::pair{&x, &probe}, std::pair{&probe, &x}}) {
        const TwistedComplex& ma = a == &x ? m : *a;
        const TwistedComplex& mb = b == &x ? m : *b;
        ExtResult before = ext(*a, *b, std::nullopt, false), after = ext(ma, mb, std::nullopt, false);
        if (!before.certified || !after.certified)
            return "uncertified Ext for " + x.describe();
        if (before.series != after.series)
            return x.describe() + ": " + before.series.str() + " vs " + after.series.str();
    }
    return {};
}

/// Empty when the Smith summands reassemble to a complex with the same
/// self-Ext and the same decomposition.
inline std::string smith_round_trip(const TwistedComplex& x)
{
    SmithResult s = smith_decompose(x);
    if (!is_closed(s.certificate))
        return "certificate not closed for " + x.describe();
    if (ext(s.assembled, s.assembled, std::nullopt, false).series != ext(x, x, std::nullopt, false).series)
        return "self-Ext changed for " + x.describe();
    if (smith_decompose(s.assembled).summands != s.summands)
        return "decomposition not stable for " + x.describe();
    return {};
}

/// Empty when L_b R_b a = a and R_a L_a b = b for the helix pair (E_i, E_{i+1}).
inline std::string mutation_round_trip(const AlgebraPtr& A, int i)
{
    TwistedComplex a = helix_object(A, i), b = helix_object(A, i + 1);
    if (!isomorphic(left_mutate(b, right_mutate(b, a)), a))
        return "L R != id at " + A->preset() + " i=" + std::to_string(i);
    if (!isomorphic(right_mutate(a, left_mutate(a, b)), b))
        return "R L != id at " + A->preset() + " i=" + std::to_string(i);
    return {};
}

inline std::vector<std::string> kronecker_builtins() { return {"E", "E'", "K+", "K-", "helix:-1", "helix:2"}; }

/// Empty when chi(Y, S X) = chi(X, Y) for all built-in pairs over A.
inline std::string serre_chi_duality(const AlgebraPtr& A)
{
    std::vector<std::pair<std::string, TwistedComplex>> objs;
    for (const auto& n : kronecker_builtins())
        objs.emplace_back(n, builtin_object(A, n));
    for (const auto& [nx, x] : objs) {
        TwistedComplex sx = serre(x);
        for (const auto& [ny, y] : objs)
            if (euler_pairing(y, sx) != euler_pairing(x, y))
                return "chi(" + ny + ", S " + nx + ") = " + std::to_string(euler_pairing(y, sx)) + " but chi(" + nx +
                       ", " + ny + ") = " + std::to_string(euler_pairing(x, y)) + " over " + A->preset();
    }
    return {};
}

} // namespace codp::fixtures
