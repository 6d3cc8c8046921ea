#pragma once

#include "hom.hpp"
#include "iso.hpp"
#include "minimize.hpp"
#include "serre.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codp {

namespace detail {

inline ExtResult finite_ext(const TwistedComplex& x, const TwistedComplex& y, const char* what)
{
    ExtResult r = ext(x, y);
    if (!r.finite())
        throw ComputationError(std::string(what) + " needs a finite Ext, got " + r.series.str() +
                               (r.partial() ? " (partial)" : ""));
    return r;
}

} // namespace detail

/// L_E(F) = Cone(Ext(E,F) (x) E -> F), using the chosen cocycle basis.
inline TwistedComplex left_mutate(const TwistedComplex& e, const TwistedComplex& f)
{
    ExtResult r = detail::finite_ext(e, f, "left mutation");
    std::vector<TwistedComplex> parts;
    std::vector<const Morphism*> maps;
    for (const auto& [n, reps] : r.cocycles)
        for (const auto& c : reps) {
            parts.push_back(shift(e, -n));
            maps.push_back(&c);
        }
    TwistedComplex sum = direct_sum(parts, e.algebra_ptr());
    Morphism ev{sum, f, 0, {}};
    int offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (const auto& [key, el] : maps[k]->entries)
            ev.entries[{key.first + offset, key.second}] = el;
        offset += parts[k].size();
    }
    return minimize(cone(ev));
}

/// R_E(F) = Cone(F -> Ext(F,E)^* (x) E)[-1].
inline TwistedComplex right_mutate(const TwistedComplex& e, const TwistedComplex& f)
{
    ExtResult r = detail::finite_ext(f, e, "right mutation");
    std::vector<TwistedComplex> parts;
    std::vector<const Morphism*> maps;
    for (const auto& [n, reps] : r.cocycles)
        for (const auto& c : reps) {
            parts.push_back(shift(e, n));
            maps.push_back(&c);
        }
    TwistedComplex sum = direct_sum(parts, e.algebra_ptr());
    Morphism coev{f, sum, 0, {}};
    int offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (const auto& [key, el] : maps[k]->entries)
            coev.entries[{key.first, key.second + offset}] = el;
        offset += parts[k].size();
    }
    return minimize(shift(cone(coev), -1));
}

/// T_K(F) = Cone(Ext(K,F) (x) K -> F).
inline TwistedComplex spherical_twist(const TwistedComplex& k, const TwistedComplex& f)
{
    return left_mutate(k, f);
}

/// E_i over Kr:q: E_0 = P_1, E_1 = P_2, and the mutation recursions
/// E_{i+1} = R_{E_i}(E_{i-1})[1-q], E_{i-1} = L_{E_i}(E_{i+1})[q-1].
inline TwistedComplex helix_object(const AlgebraPtr& kr, int i)
{
    const int q = preset_param(*kr, "Kr", "q");
    if (kronecker_blocks(*kr) > 0)
        throw InputError("helix objects are defined over a single Kr:q preset");
    TwistedComplex a = projective(kr, 0, 0), b = projective(kr, 1, 0);
    if (i == 0)
        return a;
    if (i == 1)
        return b;
    if (i > 1) {
        for (int k = 2; k <= i; ++k) {
            TwistedComplex next = shift(right_mutate(b, a), 1 - q);
            a = b;
            b = next;
        }
        return b;
    }
    // Walk down: (a, b) = (E_k, E_{k+1}).
    for (int k = -1; k >= i; --k) {
        TwistedComplex prev = shift(left_mutate(a, b), q - 1);
        b = a;
        a = prev;
    }
    return a;
}

struct CheckReport
{
    std::string check;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> evidence;
    std::string failure; // concrete witness when pass is false

    void add(const std::string& key, const std::string& value) { evidence.emplace_back(key, value); }
    void fail(const std::string& why)
    {
        if (pass)
            failure = why;
        pass = false;
    }
};

namespace detail {

inline std::string series_text(const ExtResult& r)
{
    return r.series.str() + (r.partial() ? " (partial)" : "");
}

/// Lowest degree where two certified series differ, as a witness.
inline std::string first_difference(const PoincareSeries& got, const PoincareSeries& want)
{
    for (int n = -64; n <= 64; ++n)
        if (got.coefficient(n) != want.coefficient(n))
            return "degree " + std::to_string(n) + ": dim " + std::to_string(got.coefficient(n)) + ", expected " +
                   std::to_string(want.coefficient(n));
    return "series differ outside [-64, 64]";
}

inline bool serre_available(const GradedQuiverAlgebra& A)
{
    return A.finite_dimensional() && A.directed();
}

inline long long total_or_fail(const ExtResult& r, CheckReport& rep, const std::string& label)
{
    if (!r.finite()) {
        rep.fail(label + " is not finite: " + series_text(r));
        return -1;
    }
    return r.total();
}

} // namespace detail

inline CheckReport check_exceptional(const TwistedComplex& x)
{
    CheckReport rep{"exceptional", true, {}, {}};
    ExtResult r = ext(x, x);
    rep.add("Ext(X,X)", detail::series_text(r));
    PoincareSeries one(LaurentPoly::monomial(0));
    if (!r.certified)
        rep.fail("self-Ext not certified");
    else if (!(r.series == one))
        rep.fail("Ext(X,X) != k: " + detail::first_difference(r.series, one));
    return rep;
}

inline CheckReport check_spherical(const TwistedComplex& k, int r)
{
    CheckReport rep{"spherical", true, {}, {}};
    ExtResult e = ext(k, k);
    rep.add("Ext(K,K)", detail::series_text(e));
    PoincareSeries want(LaurentPoly::monomial(0) + LaurentPoly::monomial(r));
    if (!e.certified)
        rep.fail("self-Ext not certified");
    else if (!(e.series == want))
        rep.fail("Ext(K,K) != " + want.str() + ": " + detail::first_difference(e.series, want));
    if (!detail::serre_available(k.algebra())) {
        rep.add("serre", "not available for this algebra");
        return rep;
    }
    IsoResult iso = iso_test(serre(k), shift(k, r));
    rep.add("S(K) vs K[" + std::to_string(r) + "]", iso.witness);
    if (!iso.iso)
        rep.fail("S(K) is not isomorphic to K[" + std::to_string(r) + "]: " + iso.witness);
    return rep;
}

inline CheckReport check_adherent(const TwistedComplex& e, const TwistedComplex& k)
{
    CheckReport rep{"adherent", true, {}, {}};
    ExtResult ke = ext(k, e), ek = ext(e, k);
    rep.add("Ext(K,E)", detail::series_text(ke));
    rep.add("Ext(E,K)", detail::series_text(ek));
    long long a = detail::total_or_fail(ke, rep, "Ext(K,E)");
    long long b = detail::total_or_fail(ek, rep, "Ext(E,K)");
    if (a >= 0 && a != 1)
        rep.fail("dim Ext(K,E) = " + std::to_string(a));
    if (b >= 0 && b != 1)
        rep.fail("dim Ext(E,K) = " + std::to_string(b));
    return rep;
}

inline CheckReport check_orthogonal(const std::vector<TwistedComplex>& xs)
{
    CheckReport rep{"orthogonal", true, {}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j)
                continue;
            ExtResult r = ext(xs[i], xs[j]);
            std::string label = "Ext(X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + ")";
            rep.add(label, detail::series_text(r));
            if (!r.certified)
                rep.fail(label + " not certified");
            else if (!r.series.is_zero())
                rep.fail(label + " = " + r.series.str());
        }
    return rep;
}

struct KroneckerResult
{
    CheckReport report;
    std::optional<std::pair<TwistedComplex, TwistedComplex>> pair; // (E, T_K E)
    int p = -1;
};

/// Given an exceptional E and a (p+2)-spherical K adherent to it, builds
/// the pair (E, T_K E) and verifies Ext(E, T_K E) = k + k[-(p+1)].
inline KroneckerResult kronecker_recognition(const TwistedComplex& e, const TwistedComplex& k)
{
    KroneckerResult out;
    CheckReport& rep = out.report;
    rep.check = "kronecker";
    auto absorb = [&](const CheckReport& sub) {
        for (const auto& ev : sub.evidence)
            rep.add(sub.check + ": " + ev.first, ev.second);
        if (!sub.pass)
            rep.fail(sub.check + ": " + sub.failure);
        return sub.pass;
    };
    if (!absorb(check_exceptional(e)))
        return out;

    ExtResult kk = ext(k, k);
    const auto& num = kk.series.numerator().terms();
    int r = -1;
    if (kk.finite() && kk.total() == 2 && num.count(0) && num.at(0) == 1)
        for (auto [n, c] : num)
            if (n != 0)
                r = n;
    if (r < 2) {
        rep.add("Ext(K,K)", detail::series_text(kk));
        rep.fail("K is not (p+2)-spherical with p >= 0: Ext(K,K) = " + detail::series_text(kk));
        return out;
    }
    out.p = r - 2;
    rep.add("p", std::to_string(out.p));
    if (!absorb(check_spherical(k, r)) || !absorb(check_adherent(e, k)))
        return out;

    ExtResult ke = ext(k, e);
    int m = ke.dims.begin()->first;
    for (auto [n, d] : ke.dims)
        if (d != 0)
            m = n;
    TwistedComplex kn = shift(k, -m);
    rep.add("normalizing shift", std::to_string(-m));
    TwistedComplex te = spherical_twist(kn, e);
    ExtResult pair = ext(e, te);
    rep.add("Ext(E,T_K E)", detail::series_text(pair));
    PoincareSeries want(LaurentPoly::monomial(0) + LaurentPoly::monomial(out.p + 1));
    if (!pair.certified || !(pair.series == want))
        rep.fail("Ext(E,T_K E) = " + detail::series_text(pair) + ", expected " + want.str());
    else
        out.pair = std::make_pair(e, te);
    return out;
}

} // namespace codp
