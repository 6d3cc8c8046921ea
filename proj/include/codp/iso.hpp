#pragma once

#include "hom.hpp"
#include "minimize.hpp"
#include "smith.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace codp {

struct IsoResult
{
    bool iso = false;
    std::string witness;                // summary of the deciding invariant
    std::optional<Morphism> certificate; // closed iso between minimal models
};

namespace detail {

inline std::string term_multiset(const TwistedComplex& x)
{
    std::vector<Term> t = x.terms();
    std::sort(t.begin(), t.end());
    std::string out = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            out += ", ";
        out += "P" + x.algebra().vertices()[t[i].vertex] + "[" + std::to_string(t[i].shift) + "]";
    }
    return out + "}";
}

inline std::string summand_list(const std::vector<SmithSummand>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += s[i].str();
    }
    return out + "}";
}

} // namespace detail

/// Matrix of idempotent coefficients of f between terms of equal type.
inline Matrix reduction_matrix(const Morphism& f)
{
    const int n = f.source.size();
    Matrix m(n, f.target.size());
    for (const auto& [key, e] : f.entries) {
        auto [i, j] = key;
        if (f.source.term(i) == f.target.term(j))
            m(i, j) = e.coefficient({});
    }
    return m;
}

/// Decides X = Y in the perfect derived category. Over B:q by comparing
/// Smith decompositions; over finite-dimensional graded-local algebras by
/// minimal models and a search for an invertible closed degree-0 map.
inline IsoResult iso_test(const TwistedComplex& x, const TwistedComplex& y)
{
    if (!x.algebra().same_presentation(y.algebra()))
        throw InputError("isomorphism test between complexes over different algebras");
    const auto& A = x.algebra();
    IsoResult res;

    if (is_family(A, "B")) {
        SmithResult sx = smith_decompose(x);
        SmithResult sy = smith_decompose(y);
        res.iso = sx.summands == sy.summands;
        res.witness = "smith " + detail::summand_list(sx.summands) + " vs " + detail::summand_list(sy.summands);
        return res;
    }
    if (!A.finite_dimensional())
        throw ComputationError("isomorphism test needs the B:q preset or a finite-dimensional algebra");

    TwistedComplex mx = minimize(x);
    TwistedComplex my = minimize(y);
    std::string tx = detail::term_multiset(mx), ty = detail::term_multiset(my);
    if (tx != ty) {
        res.iso = false;
        res.witness = "minimal terms " + tx + " vs " + ty;
        return res;
    }
    if (mx.empty()) {
        res.iso = true;
        res.witness = "both contractible";
        res.certificate = zero_morphism(mx, my, 0);
        return res;
    }

    HomSpace h0(mx, my, 0), h1(mx, my, 1);
    auto cycles = kernel(differential_matrix(h0, h1));
    std::vector<Matrix> reductions;
    for (const auto& z : cycles)
        reductions.push_back(reduction_matrix(h0.to_morphism(z)));

    std::mt19937 gen(20240611u);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (int trial = 0; trial < 16 && !cycles.empty(); ++trial) {
        Vector coeffs(cycles.size());
        for (auto& c : coeffs)
            c = trial == 0 ? 1 : dist(gen);
        Matrix r(mx.size(), my.size());
        for (std::size_t k = 0; k < cycles.size(); ++k)
            for (int i = 0; i < mx.size(); ++i)
                for (int j = 0; j < my.size(); ++j)
                    if (sgn(reductions[k](i, j)) != 0)
                        r(i, j) += coeffs[k] * reductions[k](i, j);
        if (sgn(determinant(r)) != 0) {
            Vector v(h0.dim());
            for (std::size_t k = 0; k < cycles.size(); ++k)
                for (std::size_t c = 0; c < v.size(); ++c)
                    if (sgn(cycles[k][c]) != 0)
                        v[c] += coeffs[k] * cycles[k][c];
            res.iso = true;
            res.witness = "invertible closed map between minimal models " + tx;
            res.certificate = h0.to_morphism(v);
            return res;
        }
    }
    res.iso = false;
    res.witness = "no invertible closed degree-0 map between minimal models " + tx;
    return res;
}

inline bool isomorphic(const TwistedComplex& x, const TwistedComplex& y)
{
    return iso_test(x, y).iso;
}

inline bool is_zero_object(const TwistedComplex& x)
{
    return minimize(x).empty();
}

} // namespace codp
