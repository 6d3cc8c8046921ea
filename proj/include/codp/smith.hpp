#pragma once

#include "complex.hpp"
#include "minimize.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace codp {

/// Indecomposable summand of a perfect complex over B_q: either the free
/// module B[shift] or the two-term complex B[shift + 1 - m q] -> B[shift]
/// with differential theta^m.
struct SmithSummand
{
    bool torsion = false;
    int power = 0;
    int shift = 0;

    friend bool operator==(const SmithSummand& a, const SmithSummand& b)
    {
        return a.torsion == b.torsion && a.power == b.power && a.shift == b.shift;
    }
    friend bool operator<(const SmithSummand& a, const SmithSummand& b)
    {
        if (a.torsion != b.torsion)
            return !a.torsion;
        if (a.power != b.power)
            return a.power < b.power;
        return a.shift < b.shift;
    }

    std::string str() const
    {
        if (!torsion)
            return "free[" + std::to_string(shift) + "]";
        return "torsion(m=" + std::to_string(power) + ", s=" + std::to_string(shift) + ")";
    }
};

struct SmithResult
{
    std::vector<SmithSummand> summands; // sorted
    TwistedComplex minimal;             // minimize(input)
    TwistedComplex assembled;           // direct sum of the summands, in order
    Morphism certificate;               // closed iso minimal -> assembled
};

inline TwistedComplex summand_complex(const AlgebraPtr& B, int q, const SmithSummand& s)
{
    if (!s.torsion)
        return projective(B, 0, s.shift);
    TwistedComplex out(B, {Term{0, s.shift + 1 - s.power * q}, Term{0, s.shift}});
    out.set_entry(0, 1, B->path(0, PathWord(static_cast<std::size_t>(s.power), 0)));
    return out;
}

inline TwistedComplex assemble(const AlgebraPtr& B, int q, const std::vector<SmithSummand>& summands)
{
    TwistedComplex out(B);
    for (const auto& s : summands)
        out = direct_sum(out, summand_complex(B, q, s));
    return out;
}

/// Graded Smith normal form of a perfect complex over the B:q preset.
inline SmithResult smith_decompose(const TwistedComplex& input)
{
    const auto& A = input.algebra();
    const int q = preset_param(A, "B", "q");
    SmithResult res;
    res.minimal = minimize(input);
    const TwistedComplex& x = res.minimal;
    const int n = x.size();

    // Entry (a, b) is C[a][b] * theta^m with m fixed by the shifts.
    auto theta_power = [&](int a, int b, int base) -> int {
        int deg = base + x.term(b).shift - x.term(a).shift;
        if (deg < 0 || deg % q != 0)
            return -1;
        return deg / q;
    };
    std::vector<std::vector<Rational>> C(n, std::vector<Rational>(n));
    for (const auto& [key, e] : x.entries()) {
        int m = theta_power(key.first, key.second, 1);
        C[key.first][key.second] = e.coefficient(PathWord(static_cast<std::size_t>(m), 0));
    }
    // Inverse of the accumulated base change, entries of degree-0 maps.
    std::vector<std::vector<Rational>> T(n, std::vector<Rational>(n));
    for (int a = 0; a < n; ++a)
        T[a][a] = 1;

    std::vector<bool> used(n, false);
    struct Pair
    {
        int i, j;
    };
    std::vector<Pair> pairs;
    while (true) {
        int bi = -1, bj = -1, best = -1;
        for (int a = 0; a < n; ++a) {
            if (used[a])
                continue;
            for (int b = 0; b < n; ++b) {
                if (used[b] || sgn(C[a][b]) == 0)
                    continue;
                int m = theta_power(a, b, 1);
                if (best < 0 || m < best) {
                    best = m;
                    bi = a;
                    bj = b;
                }
            }
        }
        if (bi < 0)
            break;
        const int i = bi, j = bj;
        const Rational c = C[i][j];
        // Clear row i: y_j = x_j + mu theta^r x_l.
        for (int l = 0; l < n; ++l) {
            if (l == j || used[l] || sgn(C[i][l]) == 0)
                continue;
            Rational mu = C[i][l] / c;
            for (int b = 0; b < n; ++b)
                if (sgn(C[l][b]) != 0)
                    C[j][b] += mu * C[l][b];
            for (int a = 0; a < n; ++a)
                if (sgn(C[a][j]) != 0)
                    C[a][l] -= mu * C[a][j];
            for (int a = 0; a < n; ++a)
                if (sgn(T[a][j]) != 0)
                    T[a][l] -= mu * T[a][j];
        }
        // Clear column j: y_k = x_k - lambda theta^r x_i.
        for (int k = 0; k < n; ++k) {
            if (k == i || used[k] || sgn(C[k][j]) == 0)
                continue;
            Rational lambda = C[k][j] / c;
            for (int b = 0; b < n; ++b)
                if (sgn(C[i][b]) != 0)
                    C[k][b] -= lambda * C[i][b];
            for (int a = 0; a < n; ++a)
                if (sgn(C[a][k]) != 0)
                    C[a][i] += lambda * C[a][k];
            for (int a = 0; a < n; ++a)
                if (sgn(T[a][k]) != 0)
                    T[a][i] += lambda * T[a][k];
        }
        for (int a = 0; a < n; ++a)
            if ((a != j && sgn(C[i][a]) != 0) || (a != i && sgn(C[a][j]) != 0) || sgn(C[j][a]) != 0 ||
                sgn(C[a][i]) != 0)
                throw ComputationError("Smith reduction did not split off a summand");
        used[i] = used[j] = true;
        pairs.push_back({i, j});
    }

    struct Placed
    {
        SmithSummand summand;
        std::vector<int> basis; // indices of x's (transformed) basis
    };
    std::vector<Placed> placed;
    for (const auto& p : pairs) {
        int m = theta_power(p.i, p.j, 1);
        if (m == 0)
            throw ComputationError("minimal complex has an invertible entry");
        placed.push_back({SmithSummand{true, m, x.term(p.j).shift}, {p.i, p.j}});
    }
    for (int a = 0; a < n; ++a)
        if (!used[a])
            placed.push_back({SmithSummand{false, 0, x.term(a).shift}, {a}});
    std::stable_sort(placed.begin(), placed.end(),
                     [](const Placed& a, const Placed& b) { return a.summand < b.summand; });

    std::vector<int> position(n, 0);
    int pos = 0;
    for (const auto& pl : placed) {
        res.summands.push_back(pl.summand);
        for (int b : pl.basis)
            position[b] = pos++;
    }
    res.assembled = assemble(input.algebra_ptr(), q, res.summands);

    // Normalize each torsion differential to theta^m by rescaling the source
    // basis vector.
    std::vector<Rational> scale(n, Rational(1));
    for (const auto& pl : placed)
        if (pl.summand.torsion)
            scale[pl.basis[0]] = 1 / C[pl.basis[0]][pl.basis[1]];

    res.certificate = Morphism{x, res.assembled, 0, {}};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (sgn(T[a][b]) == 0)
                continue;
            int m = theta_power(a, b, 0);
            if (m < 0)
                throw ComputationError("Smith base change has inconsistent degree");
            Rational coef = T[a][b] / scale[b];
            res.certificate.set_entry(a, position[b], A.path(0, PathWord(static_cast<std::size_t>(m), 0), coef));
        }
    return res;
}

} // namespace codp
