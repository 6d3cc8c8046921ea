#pragma once

#include "calculus.hpp"
#include "functor.hpp"
#include "hom.hpp"
#include "iso.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codp {

/// A degree-n morphism X -> Y viewed as a closed degree-0 map X -> Y[n].
inline Morphism as_degree_zero(const Morphism& f)
{
    return Morphism{f.source, shift(f.target, f.degree), 0, f.entries};
}

/// A_p^{(i)}: A^{(1)} = A_p and A^{(i+1)} = Cone(A_p[i(p+1) - 1] -> A^{(i)}),
/// the connecting class being the unique one that misses the augmentation.
inline TwistedComplex truncation(const AlgebraPtr& ap, int i)
{
    const int p = preset_param(*ap, "A", "p");
    if (i < 1)
        throw InputError("truncation index must be >= 1");
    TwistedComplex x = projective(ap, 0, 0);
    for (int k = 1; k < i; ++k) {
        TwistedComplex src = projective(ap, 0, k * (p + 1) - 1);
        CohomologySpace h(src, x, 0);
        const int last = x.size() - 1;
        auto reps = h.representatives();
        // Classes whose idempotent component into the last term vanishes.
        Matrix aug(1, reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c)
            aug(0, c) = reps[c].entry(0, last).coefficient({});
        auto combos = kernel(aug);
        if (combos.size() != 1)
            throw ComputationError("truncation step " + std::to_string(k + 1) + ": connecting class space has dimension " +
                                   std::to_string(combos.size()) + ", expected 1");
        Morphism f = zero_morphism(src, x, 0);
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (sgn(combos[0][c]) != 0)
                f = f + combos[0][c] * reps[c];
        x = cone(f);
    }
    return x;
}

struct ThickGenReport
{
    CheckReport report;
    TwistedComplex cone_minimal;
    TwistedComplex expected;
};

/// Cone of A^{(2)}[-1-p] -> A_p -> A^{(2)} against A_p[-p] + A_p[p+1].
inline ThickGenReport thick_gen_witness(const AlgebraPtr& ap)
{
    const int p = preset_param(*ap, "A", "p");
    ThickGenReport out;
    out.report.check = "thick-generation";
    TwistedComplex a = projective(ap, 0, 0);
    TwistedComplex a2 = truncation(ap, 2);
    // A^{(2)} = Cone(f: A[p] -> A); recover f from the complex.
    Morphism f{projective(ap, 0, p), a, 0, {}};
    f.set_entry(0, 0, a2.entry(0, 1));
    Morphism pi = shift(cone_projection(f), -1 - p);
    Morphism iota = cone_inclusion(f);
    Morphism composite = compose(iota, pi);
    out.cone_minimal = minimize(cone(composite));
    out.expected = direct_sum(projective(ap, 0, -p), projective(ap, 0, p + 1));
    IsoResult iso = iso_test(out.cone_minimal, out.expected);
    out.report.add("cone", out.cone_minimal.describe());
    out.report.add("expected", out.expected.describe());
    out.report.add("iso", iso.witness);
    if (!iso.iso)
        out.report.fail("cone is not A_p[-p] + A_p[p+1]: " + iso.witness);
    return out;
}

namespace detail {

/// The unique degree-q self-extension class of P.
inline Morphism theta_class(const TwistedComplex& pobj, int q)
{
    CohomologySpace h(pobj, pobj, q);
    if (h.dim() != 1)
        throw ComputationError("Ext^" + std::to_string(q) + "(P,P) has dimension " + std::to_string(h.dim()) +
                               ", expected a unique class");
    return h.representative(0);
}

inline Morphism power(const Morphism& c, int i)
{
    Morphism out = c;
    for (int k = 1; k < i; ++k)
        out = compose(c, out);
    return out;
}

} // namespace detail

struct SelfExtension
{
    TwistedComplex m;
    ExtResult ext_mp;
    ExtResult ext_mm;
    CheckReport report;
};

/// M^{(i)} = Cone(theta^i: P -> P[iq])[-1]; i = 1 gives the canonical
/// self-extension M.
inline TwistedComplex self_extension_object(const TwistedComplex& pobj, int i = 1)
{
    const int q = preset_param(pobj.algebra(), "B", "q");
    if (i < 1)
        throw InputError("self-extension power must be >= 1");
    Morphism c = detail::power(detail::theta_class(pobj, q), i);
    return minimize(shift(cone(as_degree_zero(c)), -1));
}

inline SelfExtension self_extension(const TwistedComplex& pobj, int i = 1)
{
    const int q = preset_param(pobj.algebra(), "B", "q");
    SelfExtension out;
    out.m = self_extension_object(pobj, i);
    out.report.check = "self-extension";
    out.ext_mp = ext(out.m, pobj);
    out.report.add("Ext(M,P)", detail::series_text(out.ext_mp));
    if (!out.ext_mp.finite() || out.ext_mp.total() != i)
        out.report.fail("Ext(M,P) = " + detail::series_text(out.ext_mp) + ", expected total dimension " +
                        std::to_string(i));
    if (i == 1) {
        out.ext_mm = ext(out.m, out.m);
        out.report.add("Ext(M,M)", detail::series_text(out.ext_mm));
        PoincareSeries want(LaurentPoly::monomial(0) + LaurentPoly::monomial(1 - q));
        if (!out.ext_mm.certified || !(out.ext_mm.series == want))
            out.report.fail("Ext(M,M) = " + detail::series_text(out.ext_mm) + ", expected " + want.str());
    }
    return out;
}

struct PinftyResult
{
    CheckReport report;
    std::optional<int> q;
};

/// Ext(X,X) = k[theta]: series 1/(1 - t^q) and theta, theta^2, theta^3
/// nonzero classes.
inline PinftyResult pinfty_check(const TwistedComplex& x)
{
    PinftyResult out;
    out.report.check = "pinfty";
    ExtResult r = ext(x, x);
    out.report.add("Ext(X,X)", detail::series_text(r));
    if (!r.certified)
        throw ComputationError("self-Ext of the candidate is not certified");
    const auto& den = r.series.denominator();
    const auto& num = r.series.numerator().terms();
    if (den.size() != 1 || num.size() != 1 || num.begin()->first != 0 || num.begin()->second != 1) {
        out.report.fail("Ext(X,X) = " + r.series.str() + " is not of the form 1/(1 - t^q)");
        return out;
    }
    const int q = den[0];
    Morphism c = detail::theta_class(x, q);
    for (int i = 2; i <= 3; ++i) {
        Morphism ci = detail::power(c, i);
        if (!is_closed(ci))
            throw ComputationError("power of a cocycle is not closed");
        CohomologySpace h(x, x, i * q);
        bool nonzero = !h.is_coboundary(ci);
        out.report.add("theta^" + std::to_string(i), nonzero ? "nonzero" : "zero");
        if (!nonzero) {
            out.report.fail("theta^" + std::to_string(i) + " vanishes in Ext^" + std::to_string(i * q));
            return out;
        }
    }
    out.q = q;
    return out;
}

struct AbsorptionReport
{
    int p = 0;
    std::vector<CheckReport> spherical;
    CheckReport orthogonal;
    std::vector<std::vector<long long>> adherence; // dim Ext(E_i, K_j)
    std::vector<CheckReport> recognition;
    std::vector<TwistedComplex> localized;
    std::vector<std::string> localized_series;
    std::vector<PinftyResult> pinfty;
    bool pass = true;
    std::string failure;

    void fail(const std::string& why)
    {
        if (pass)
            failure = why;
        pass = false;
    }
};

inline int block_of(const TwistedComplex& x)
{
    if (x.empty())
        throw InputError("empty object has no block");
    int b = x.term(0).vertex / 2;
    for (const auto& t : x.terms())
        if (t.vertex / 2 != b)
            throw InputError("object spans several Kronecker blocks");
    return b + 1;
}

/// The absorption pipeline on a block sum of Kr:q=p+1 presets.
inline AbsorptionReport absorption_report(const AlgebraPtr& alg, const std::vector<TwistedComplex>& es,
                                          const std::vector<TwistedComplex>& ks)
{
    AbsorptionReport rep;
    const int q = preset_param(*alg, "Kr", "q");
    if (q < 1)
        throw InputError("absorption needs Kr:q with q >= 1");
    rep.p = q - 1;
    if (es.size() != ks.size() || es.empty())
        throw InputError("absorption needs equally many E and K objects (at least one)");
    const int blocks = std::max(1, kronecker_blocks(*alg));
    for (const auto& x : es)
        if (block_of(x) > blocks)
            throw InputError("object outside the block structure");
    const std::size_t r = es.size();

    for (std::size_t i = 0; i < r; ++i) {
        rep.spherical.push_back(check_spherical(ks[i], rep.p + 2));
        if (!rep.spherical.back().pass)
            rep.fail("K" + std::to_string(i + 1) + " not spherical: " + rep.spherical.back().failure);
    }
    rep.orthogonal = check_orthogonal(ks);
    if (!rep.orthogonal.pass)
        rep.fail("K objects not orthogonal: " + rep.orthogonal.failure);

    rep.adherence.assign(r, std::vector<long long>(r, -1));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            ExtResult e = ext(es[i], ks[j]);
            rep.adherence[i][j] = e.finite() ? e.total() : -1;
            if (rep.adherence[i][j] != (i == j ? 1 : 0))
                rep.fail("dim Ext(E" + std::to_string(i + 1) + ",K" + std::to_string(j + 1) + ") = " +
                         (e.finite() ? std::to_string(rep.adherence[i][j]) : detail::series_text(e)));
        }

    for (std::size_t i = 0; i < r; ++i) {
        KroneckerResult kr = kronecker_recognition(es[i], ks[i]);
        kr.report.check = "kronecker " + std::to_string(i + 1);
        rep.recognition.push_back(kr.report);
        if (!kr.report.pass)
            rep.fail("index " + std::to_string(i + 1) + ": " + kr.report.failure);
    }

    const PoincareSeries want = PoincareSeries::geometric(q);
    for (std::size_t i = 0; i < r; ++i) {
        TwistedComplex pi = localize(es[i], kronecker_blocks(*alg) > 0 ? block_of(es[i]) : 0);
        rep.localized.push_back(pi);
        ExtResult self = ext(pi, pi, std::nullopt, false);
        rep.localized_series.push_back(detail::series_text(self));
        PinftyResult pc = pinfty_check(pi);
        rep.pinfty.push_back(pc);
        if (!pc.report.pass)
            rep.fail("P" + std::to_string(i + 1) + ": " + pc.report.failure);
        else if (!(self.series == want))
            rep.fail("P" + std::to_string(i + 1) + " has self-Ext " + self.series.str());
    }
    return rep;
}

} // namespace codp
