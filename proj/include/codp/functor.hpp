#pragma once

#include "complex.hpp"
#include "hom.hpp"
#include "minimize.hpp"

#include <string>
#include <vector>

namespace codp {

/// A functor Perf(source) -> Perf(target) given by images of the
/// projectives and of the arrows; extended to twisted complexes blockwise.
class BimoduleFunctor
{
public:
    BimoduleFunctor(AlgebraPtr source, AlgebraPtr target, std::vector<TwistedComplex> objects,
                    std::vector<Morphism> arrows)
        : source_(std::move(source)), target_(std::move(target)), objects_(std::move(objects)),
          arrows_(std::move(arrows))
    {
        validate();
    }

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const TwistedComplex& object(int v) const { return objects_[v]; }
    const Morphism& arrow(int a) const { return arrows_[a]; }

    /// F of a path combination from v to w, as a morphism F(P_v) -> F(P_w).
    Morphism image(const Element& e, int v, int w, int degree) const
    {
        Morphism out = zero_morphism(objects_[v], objects_[w], degree);
        for (const auto& [path, coef] : e.terms) {
            Morphism f = identity_morphism(objects_[v]);
            for (int a : path)
                f = compose(arrows_[a], f);
            f.degree = degree;
            f.target = objects_[w];
            add_entries(out.entries, f.entries, coef);
        }
        return out;
    }

    TwistedComplex apply(const TwistedComplex& x) const
    {
        check_source(x);
        std::vector<int> offset;
        TwistedComplex out(target_);
        for (const auto& t : x.terms()) {
            offset.push_back(out.size());
            out = direct_sum(out, shift(objects_[t.vertex], t.shift));
        }
        for (const auto& [key, e] : x.entries()) {
            auto [i, j] = key;
            Morphism f = image(e, x.term(i).vertex, x.term(j).vertex, x.entry_degree(i, j));
            for (const auto& [k, g] : f.entries) {
                Element sum = out.entry(k.first + offset[i], k.second + offset[j]);
                sum += g;
                out.set_entry(k.first + offset[i], k.second + offset[j], sum);
            }
        }
        return out;
    }

    Morphism apply(const Morphism& f) const
    {
        TwistedComplex fx = apply(f.source);
        TwistedComplex fy = apply(f.target);
        std::vector<int> ox, oy;
        int acc = 0;
        for (const auto& t : f.source.terms()) {
            ox.push_back(acc);
            acc += objects_[t.vertex].size();
        }
        acc = 0;
        for (const auto& t : f.target.terms()) {
            oy.push_back(acc);
            acc += objects_[t.vertex].size();
        }
        Morphism out{fx, fy, f.degree, {}};
        for (const auto& [key, e] : f.entries) {
            auto [i, j] = key;
            Morphism g = image(e, f.source.term(i).vertex, f.target.term(j).vertex, f.entry_degree(i, j));
            EntryMap shifted;
            for (const auto& [k, el] : g.entries)
                shifted[{k.first + ox[i], k.second + oy[j]}] = el;
            add_entries(out.entries, shifted);
        }
        return out;
    }

private:
    void check_source(const TwistedComplex& x) const
    {
        if (!x.algebra().same_presentation(*source_))
            throw InputError("functor applied to a complex over the wrong algebra (expected " +
                             (source_->preset().empty() ? std::string("custom") : source_->preset()) + ")");
    }

    void validate() const
    {
        const auto& S = *source_;
        if (static_cast<int>(objects_.size()) != S.num_vertices() || arrows_.size() != S.arrows().size())
            throw ComputationError("functor data does not match the source quiver");
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
            const Arrow& arr = S.arrows()[a];
            const Morphism& f = arrows_[a];
            if (f.degree != arr.degree)
                throw ComputationError("image of arrow '" + arr.name + "' has the wrong degree");
            if (!is_closed(f))
                throw ComputationError("image of arrow '" + arr.name + "' is not closed");
        }
        for (const auto& rel : S.relations()) {
            int v = rel.front().path.empty() ? 0 : S.arrows()[rel.front().path.front()].source;
            int w = S.endpoint(v, rel.front().path);
            int d = S.path_degree(rel.front().path);
            Morphism sum = zero_morphism(objects_[v], objects_[w], d);
            for (const auto& term : rel) {
                std::map<PathWord, Rational> raw{{term.path, term.coef}};
                Element unreduced{v, w, d, raw};
                add_entries(sum.entries, image(unreduced, v, w, d).entries);
            }
            if (!sum.is_zero())
                throw ComputationError("functor does not kill a relation strictly");
        }
    }

    AlgebraPtr source_, target_;
    std::vector<TwistedComplex> objects_;
    std::vector<Morphism> arrows_;
};

inline Morphism scalar_map(const TwistedComplex& x, const TwistedComplex& y, int degree, int i, int j,
                           const Element& e)
{
    Morphism f = zero_morphism(x, y, degree);
    f.set_entry(i, j, e);
    return f;
}

/// The localization Perf(Kr_q) -> Perf(B_q): both projectives go to B,
/// a0 to the unit and aq to theta. For a block algebra only the chosen
/// block survives.
inline BimoduleFunctor localization_functor(const AlgebraPtr& kr, int block = 0)
{
    const int q = preset_param(*kr, "Kr", "q");
    if (q < 1)
        throw InputError("localization needs Kr:q with q >= 1");
    const int blocks = kronecker_blocks(*kr);
    if (blocks == 0 && block > 1)
        throw InputError("block index out of range");
    if (blocks > 0 && (block < 1 || block > blocks))
        throw InputError("localization of a block algebra needs a block index in 1.." + std::to_string(blocks));
    AlgebraPtr B = preset_algebra("B:q=" + std::to_string(q));
    TwistedComplex free = projective(B, 0, 0);
    TwistedComplex zero = empty_complex(B);
    std::vector<TwistedComplex> objects;
    std::vector<Morphism> arrows;
    for (int v = 0; v < kr->num_vertices(); ++v) {
        bool keep = blocks == 0 || v / 2 + 1 == block;
        objects.push_back(keep ? free : zero);
    }
    for (const auto& arr : kr->arrows()) {
        bool keep = blocks == 0 || arr.source / 2 + 1 == block;
        if (!keep) {
            arrows.push_back(zero_morphism(zero, zero, arr.degree));
            continue;
        }
        Element img = arr.degree == 0 ? B->idempotent(0) : B->arrow(0);
        arrows.push_back(scalar_map(free, free, arr.degree, 0, 0, img));
    }
    return BimoduleFunctor(kr, B, objects, arrows);
}

inline TwistedComplex localize(const TwistedComplex& x, int block = 0)
{
    if (!is_family(x.algebra(), "Kr"))
        throw InputError("localize expects a complex over a Kr:q preset");
    if (block == 0 && kronecker_blocks(x.algebra()) > 0)
        block = 1;
    return minimize(localization_functor(x.algebra_ptr(), block).apply(x));
}

/// The two-term complex B -> B[q-1] with differential theta: the image of
/// the free A_{q-1}-module, with Ext(-, B) = k in degree 0.
inline TwistedComplex koszul_point(const AlgebraPtr& B)
{
    const int q = preset_param(*B, "B", "q");
    TwistedComplex m(B, {Term{0, 0}, Term{0, q - 1}});
    m.set_entry(0, 1, B->arrow(0));
    return m;
}

/// Koszul duality D^b(A_p) = Perf(B_{p+1}) on perfect A_p-complexes.
inline BimoduleFunctor koszul_functor(const AlgebraPtr& ap)
{
    const int p = preset_param(*ap, "A", "p");
    AlgebraPtr B = preset_algebra("B:q=" + std::to_string(p + 1));
    TwistedComplex m = koszul_point(B);
    // Degree -p classes of End(M); pick the one that is not a unit and
    // normalize it to square zero.
    CohomologySpace coh(m, m, -p);
    Morphism id = identity_morphism(m);
    std::optional<Morphism> chosen;
    for (const auto& c : coh.representatives()) {
        if (p == 0) {
            // Skip classes proportional to the identity.
            Vector vc = coh.class_of(c), vi = coh.class_of(id);
            Matrix two(vc.size(), 2);
            two.set_column(0, vc);
            two.set_column(1, vi);
            if (rank(two) < 2)
                continue;
        }
        chosen = c;
        break;
    }
    if (!chosen)
        throw ComputationError("no nilpotent degree -p class on the Koszul point");
    Morphism c = *chosen;
    Morphism sq = compose(c, c);
    if (!sq.is_zero()) {
        // c^2 = alpha c + beta id forces the shift c - alpha/2 id.
        HomSpace h(m, m, -2 * p);
        Matrix basis(h.dim(), 2);
        basis.set_column(0, h.to_vector(c));
        basis.set_column(1, h.to_vector(id));
        auto sol = p == 0 ? solve(basis, h.to_vector(sq)) : std::nullopt;
        if (!sol)
            throw ComputationError("Koszul normalization failed: the chosen class does not square to zero");
        Rational lambda = -(*sol)[0] / 2;
        c = c + lambda * id;
        if (!compose(c, c).is_zero())
            throw ComputationError("Koszul normalization failed: no square-zero representative");
    }
    c.degree = -p;
    return BimoduleFunctor(ap, B, {m}, {c});
}

inline TwistedComplex koszul_dual(const TwistedComplex& x)
{
    if (!is_family(x.algebra(), "A"))
        throw InputError("koszul-dual expects a complex over an A:p preset");
    return minimize(koszul_functor(x.algebra_ptr()).apply(x));
}

} // namespace codp
