#pragma once

#include "functor.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace codp {

namespace serre_detail {

using Spot = std::pair<int, int>; // (vertex, internal degree)

/// A graded right module given by explicit spaces at each (vertex, degree)
/// and the action of arrows; an arrow a: x -> y maps the space at
/// (y, n) to the space at (x, n + deg a).
struct Ambient
{
    std::map<Spot, std::size_t> dims;
    std::function<Vector(int arrow, int n, const Vector&)> act;

    std::size_t dim(int x, int n) const
    {
        auto it = dims.find({x, n});
        return it == dims.end() ? 0 : it->second;
    }
};

/// The injective module I_v, dual to the paths starting at v.
inline Ambient injective(const GradedQuiverAlgebra& A, int v)
{
    Ambient amb;
    for (int u = 0; u < A.num_vertices(); ++u)
        for (int d : A.piece_degrees(v, u)) {
            std::size_t dim = A.piece(v, u, d).dim();
            if (dim)
                amb.dims[{u, -d}] = dim;
        }
    const GradedQuiverAlgebra* alg = &A;
    amb.act = [alg, v](int a, int n, const Vector& phi) {
        const Arrow& arr = alg->arrows()[a];
        const Piece& out = alg->piece(v, arr.source, -n - arr.degree);
        Vector res(out.dim());
        for (std::size_t i = 0; i < out.dim(); ++i) {
            PathWord p = out.basis[i];
            p.push_back(a);
            Element pa = alg->path(v, p);
            Vector c = alg->coords(pa, v, arr.target, -n);
            for (std::size_t k = 0; k < c.size(); ++k)
                if (sgn(c[k]) != 0)
                    res[i] += phi[k] * c[k];
        }
        return res;
    };
    return amb;
}

struct Generator
{
    int vertex = 0;
    int degree = 0;
    Vector vec; // in the coordinates of the ambient it generates
};

/// Free module on generators: the summand for generator h at (y, m) is
/// P_y[-m]; its space at (x, k) has the paths x -> y of degree k - m.
struct FreeModule
{
    const GradedQuiverAlgebra* alg = nullptr;
    std::vector<Generator> gens;

    struct Basis
    {
        std::size_t gen;
        PathWord path;
    };

    std::vector<Basis> basis(int x, int k) const
    {
        std::vector<Basis> out;
        for (std::size_t h = 0; h < gens.size(); ++h)
            for (const auto& p : alg->piece(x, gens[h].vertex, k - gens[h].degree).basis)
                out.push_back({h, p});
        return out;
    }

    std::size_t offset_of(int x, int k, std::size_t gen) const
    {
        std::size_t off = 0;
        for (std::size_t h = 0; h < gen; ++h)
            off += alg->piece(x, gens[h].vertex, k - gens[h].degree).dim();
        return off;
    }

    Ambient ambient() const
    {
        Ambient amb;
        for (int x = 0; x < alg->num_vertices(); ++x)
            for (const auto& g : gens)
                for (int d : alg->piece_degrees(x, g.vertex)) {
                    int k = g.degree + d;
                    if (!amb.dims.count({x, k}))
                        amb.dims[{x, k}] = basis(x, k).size();
                }
        const FreeModule* self = this;
        amb.act = [self](int a, int k, const Vector& v) { return self->prepend(a, k, v); };
        return amb;
    }

    /// Action of arrow a: x' -> x on an element at (x, k).
    Vector prepend(int a, int k, const Vector& v) const
    {
        const Arrow& arr = alg->arrows()[a];
        const int x = arr.target, xp = arr.source, kp = k + arr.degree;
        auto src = basis(x, k);
        Vector out(basis(xp, kp).size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (sgn(v[i]) == 0)
                continue;
            const Generator& g = gens[src[i].gen];
            PathWord p{a};
            p.insert(p.end(), src[i].path.begin(), src[i].path.end());
            Element e = alg->path(xp, p);
            Vector c = alg->coords(e, xp, g.vertex, kp - g.degree);
            std::size_t off = offset_of(xp, kp, src[i].gen);
            for (std::size_t j = 0; j < c.size(); ++j)
                if (sgn(c[j]) != 0)
                    out[off + j] += v[i] * c[j];
        }
        return out;
    }

    /// Element at (x, k) as a combination of paths into each generator.
    std::map<std::size_t, Element> split(int x, int k, const Vector& v) const
    {
        std::map<std::size_t, Element> out;
        auto b = basis(x, k);
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (sgn(v[i]) == 0)
                continue;
            auto it = out.find(b[i].gen);
            if (it == out.end())
                out.emplace(b[i].gen, alg->path(x, b[i].path, v[i]));
            else
                it->second += alg->path(x, b[i].path, v[i]);
        }
        return out;
    }
};

inline Vector act_path(const GradedQuiverAlgebra& A, const Ambient& amb, const PathWord& path, int n,
                       const Vector& v)
{
    // The path runs x -> ... -> y and the vector lives at (y, n); arrows act
    // from the end of the path backwards.
    Vector cur = v;
    int deg = n;
    for (std::size_t i = path.size(); i-- > 0;) {
        cur = amb.act(path[i], deg, cur);
        deg += A.arrows()[path[i]].degree;
    }
    return cur;
}

/// Image of every basis element of the free module at (x, k) under the
/// map sending generator h to its vector in the ambient.
inline Matrix cover_matrix(const FreeModule& fm, const Ambient& amb, int x, int k)
{
    auto b = fm.basis(x, k);
    Matrix m(amb.dim(x, k), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Generator& g = fm.gens[b[i].gen];
        m.set_column(i, act_path(*fm.alg, amb, b[i].path, g.degree, g.vec));
    }
    return m;
}

using Subspaces = std::map<Spot, std::vector<Vector>>;

/// Minimal generators of a submodule given by its spaces.
inline std::vector<Generator> top(const GradedQuiverAlgebra& A, const Ambient& amb, const Subspaces& sub)
{
    std::vector<Generator> gens;
    for (const auto& [spot, vecs] : sub) {
        auto [x, n] = spot;
        if (vecs.empty())
            continue;
        RowSpan span(amb.dim(x, n));
        for (std::size_t a = 0; a < A.arrows().size(); ++a) {
            const Arrow& arr = A.arrows()[a];
            if (arr.source != x)
                continue;
            auto it = sub.find({arr.target, n - arr.degree});
            if (it == sub.end())
                continue;
            for (const auto& w : it->second)
                span.add(amb.act(static_cast<int>(a), n - arr.degree, w));
        }
        for (const auto& v : vecs)
            if (span.add(v))
                gens.push_back(Generator{x, n, v});
    }
    return gens;
}

struct Resolution
{
    std::vector<FreeModule> levels; // Q_0, Q_1, ...
};

inline Resolution resolve(const GradedQuiverAlgebra& A, const Ambient& module)
{
    Resolution res;
    res.levels.reserve(static_cast<std::size_t>(A.path_bound()) + 2);
    Subspaces whole;
    for (const auto& [spot, dim] : module.dims) {
        auto& vecs = whole[spot];
        for (std::size_t i = 0; i < dim; ++i) {
            Vector v(dim);
            v[i] = 1;
            vecs.push_back(v);
        }
    }
    std::vector<Ambient> ambients{module};
    Subspaces current = whole;
    for (int level = 0; level <= A.path_bound(); ++level) {
        FreeModule fm{&A, top(A, ambients.back(), current)};
        if (fm.gens.empty())
            return res;
        res.levels.push_back(fm);
        const FreeModule& q = res.levels.back();
        Ambient qa = q.ambient();
        Subspaces kern;
        for (const auto& [spot, dim] : qa.dims) {
            auto [x, k] = spot;
            auto ker = kernel(cover_matrix(q, ambients.back(), x, k));
            if (!ker.empty())
                kern[spot] = ker;
        }
        ambients.push_back(qa);
        current = kern;
    }
    throw ComputationError("projective resolution did not terminate");
}

struct Indexed
{
    TwistedComplex complex;
    std::vector<std::vector<int>> index; // [level][gen] -> term index
};

inline Indexed to_complex(const AlgebraPtr& A, const Resolution& r)
{
    Indexed out{TwistedComplex(A), {}};
    out.index.resize(r.levels.size());
    for (std::size_t k = r.levels.size(); k-- > 0;)
        for (const auto& g : r.levels[k].gens) {
            out.index[k].push_back(out.complex.size());
            out.complex.add_term(Term{g.vertex, -g.degree + static_cast<int>(k)});
        }
    for (std::size_t k = 1; k < r.levels.size(); ++k)
        for (std::size_t gi = 0; gi < r.levels[k].gens.size(); ++gi) {
            const Generator& g = r.levels[k].gens[gi];
            for (const auto& [h, e] : r.levels[k - 1].split(g.vertex, g.degree, g.vec))
                out.complex.set_entry(out.index[k][gi], out.index[k - 1][h], e);
        }
    return out;
}

} // namespace serre_detail

/// The Serre functor of a finite-dimensional directed algebra, realized as
/// tensoring with the dual bimodule: P_v goes to a projective resolution of
/// the injective I_v, and arrows to lifts of the induced maps.
inline BimoduleFunctor serre_functor(const AlgebraPtr& Aptr)
{
    using namespace serre_detail;
    const auto& A = *Aptr;
    if (!A.finite_dimensional() || !A.directed())
        throw InputError("serre requires a finite-dimensional directed algebra");
    const int nv = A.num_vertices();
    std::vector<Ambient> inj;
    std::vector<Resolution> res;
    std::vector<Indexed> cx;
    for (int v = 0; v < nv; ++v)
        inj.push_back(injective(A, v));
    res.reserve(nv);
    for (int v = 0; v < nv; ++v)
        res.push_back(resolve(A, inj[v]));
    for (int v = 0; v < nv; ++v)
        cx.push_back(to_complex(Aptr, res[v]));

    std::vector<TwistedComplex> objects;
    for (auto& c : cx) {
        c.complex.validate();
        objects.push_back(c.complex);
    }

    std::vector<Morphism> arrows;
    for (std::size_t a = 0; a < A.arrows().size(); ++a) {
        const Arrow& arr = A.arrows()[a];
        const int v = arr.source, w = arr.target, d = arr.degree;
        const Resolution& rm = res[v];
        const Resolution& rn = res[w];
        // Map I_v -> I_w induced by left multiplication with the arrow.
        auto phi = [&](int u, int n, const Vector& x) {
            const Piece& out = A.piece(w, u, -n - d);
            Vector y(out.dim());
            for (std::size_t i = 0; i < out.dim(); ++i) {
                PathWord p{static_cast<int>(a)};
                p.insert(p.end(), out.basis[i].begin(), out.basis[i].end());
                Vector c = A.coords(A.path(v, p), v, u, -n);
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (sgn(c[k]) != 0)
                        y[i] += x[k] * c[k];
            }
            return y;
        };

        Morphism f = zero_morphism(objects[v], objects[w], d);
        // psi[k][g]: lift of generator g of level k into N's Q_k at (x, n + d).
        std::vector<std::vector<Vector>> psi(rm.levels.size());
        for (std::size_t k = 0; k < rm.levels.size(); ++k) {
            const FreeModule& qm = rm.levels[k];
            for (std::size_t gi = 0; gi < qm.gens.size(); ++gi) {
                const Generator& g = qm.gens[gi];
                Vector image;
                if (k == 0) {
                    image = phi(g.vertex, g.degree, g.vec);
                } else {
                    // Push the element of Q^M_{k-1} through psi[k-1].
                    const FreeModule& prev = rm.levels[k - 1];
                    auto parts = prev.basis(g.vertex, g.degree);
                    std::size_t dim_n = k - 1 < rn.levels.size()
                                            ? rn.levels[k - 1].basis(g.vertex, g.degree + d).size()
                                            : 0;
                    image = Vector(dim_n);
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        if (sgn(g.vec[i]) == 0 || dim_n == 0)
                            continue;
                        const Generator& h = prev.gens[parts[i].gen];
                        Vector lifted = psi[k - 1][parts[i].gen];
                        Vector moved = act_path(A, rn.levels[k - 1].ambient(), parts[i].path, h.degree + d, lifted);
                        for (std::size_t j = 0; j < dim_n; ++j)
                            image[j] += g.vec[i] * moved[j];
                    }
                }
                if (k >= rn.levels.size()) {
                    if (!is_zero(image))
                        throw ComputationError("comparison map does not lift");
                    psi[k].push_back(Vector());
                    continue;
                }
                const FreeModule& qn = rn.levels[k];
                Ambient target_amb = k == 0 ? inj[w] : rn.levels[k - 1].ambient();
                Matrix cover = cover_matrix(qn, target_amb, g.vertex, g.degree + d);
                auto sol = solve(cover, image);
                if (!sol)
                    throw ComputationError("comparison map does not lift");
                psi[k].push_back(*sol);
                Rational sign = sign_power(static_cast<long long>(d) * static_cast<long long>(k));
                for (const auto& [h, e] : qn.split(g.vertex, g.degree + d, *sol))
                    f.set_entry(cx[v].index[k][gi], cx[w].index[k][h], sign * e);
            }
        }
        arrows.push_back(f);
    }
    return BimoduleFunctor(Aptr, Aptr, objects, arrows);
}

namespace serre_detail {

/// nu(X)(y)^n, the dual of Hom(X, P_y)^{-n}: component i holds functionals
/// on the paths v_i -> y of degree -n - s_i. Arrows act by precomposition on
/// the argument, so the action is strict.
class Nakayama
{
public:
    explicit Nakayama(const TwistedComplex& x) : x_(x), A_(x.algebra()) {}

    const Piece& piece(int i, int y, int n) const
    {
        const Term& t = x_.term(i);
        return A_.piece(t.vertex, y, -n - t.shift);
    }

    std::size_t offset(int i, int y, int n) const
    {
        std::size_t off = 0;
        for (int j = 0; j < i; ++j)
            off += piece(j, y, n).dim();
        return off;
    }

    std::size_t dim(int y, int n) const { return offset(x_.size(), y, n); }

    /// phi . e for e: y' -> y of degree de, phi at (y, n).
    Vector act(const Element& e, int yp, int y, int n, const Vector& phi) const
    {
        const int de = e.is_zero() ? 0 : e.degree;
        Vector out(dim(yp, n + de));
        if (e.is_zero())
            return out;
        std::size_t in = 0, at = 0;
        for (int i = 0; i < x_.size(); ++i) {
            const Piece& src = piece(i, y, n);
            const Piece& dst = piece(i, yp, n + de);
            const int v = x_.term(i).vertex;
            for (std::size_t b = 0; b < dst.dim(); ++b) {
                Vector c = A_.coords(A_.multiply(A_.path(v, dst.basis[b]), e), v, y, -n - x_.term(i).shift);
                for (std::size_t r = 0; r < c.size(); ++r)
                    if (sgn(c[r]) != 0)
                        out[at + b] += phi[in + r] * c[r];
            }
            in += src.dim();
            at += dst.dim();
        }
        return out;
    }

    /// Differential (y, n) -> (y, n + 1): dual to f |-> delta_X then f.
    Vector d(int y, int n, const Vector& phi) const
    {
        Vector out(dim(y, n + 1));
        for (const auto& [key, e] : x_.entries()) {
            auto [i, j] = key;
            const Piece& dst = piece(j, y, n + 1);
            const std::size_t in = offset(i, y, n), at = offset(j, y, n + 1);
            const int vi = x_.term(i).vertex, vj = x_.term(j).vertex;
            for (std::size_t b = 0; b < dst.dim(); ++b) {
                Vector c = A_.coords(A_.multiply(e, A_.path(vj, dst.basis[b])), vi, y, -n - x_.term(i).shift);
                for (std::size_t r = 0; r < c.size(); ++r)
                    if (sgn(c[r]) != 0)
                        out[at + b] += phi[in + r] * c[r];
            }
        }
        return out;
    }

private:
    const TwistedComplex& x_;
    const GradedQuiverAlgebra& A_;
};

/// Hom(P_y, R)^n for a twisted complex R: per term t, the paths y -> v_t of
/// degree n + s_t.
class Representable
{
public:
    explicit Representable(const TwistedComplex& r) : r_(r), A_(r.algebra()) {}

    const Piece& piece(int t, int y, int n) const
    {
        const Term& term = r_.term(t);
        return A_.piece(y, term.vertex, n + term.shift);
    }

    std::size_t offset(int t, int y, int n) const
    {
        std::size_t off = 0;
        for (int u = 0; u < t; ++u)
            off += piece(u, y, n).dim();
        return off;
    }

    std::size_t dim(int y, int n) const { return offset(r_.size(), y, n); }

    Element component(int t, int y, int n, const Vector& v) const
    {
        const Piece& pc = piece(t, y, n);
        Vector c(v.begin() + static_cast<std::ptrdiff_t>(offset(t, y, n)),
                 v.begin() + static_cast<std::ptrdiff_t>(offset(t, y, n) + pc.dim()));
        return A_.from_coords(y, r_.term(t).vertex, n + r_.term(t).shift, c);
    }

    /// e . v for e: y' -> y of degree de, v at (y, n).
    Vector act(const Element& e, int yp, int y, int n, const Vector& v) const
    {
        const int de = e.is_zero() ? 0 : e.degree;
        Vector out(dim(yp, n + de));
        if (e.is_zero())
            return out;
        for (int t = 0; t < r_.size(); ++t) {
            Element c = A_.multiply(e, component(t, y, n, v));
            Vector cc = A_.coords(c, yp, r_.term(t).vertex, n + de + r_.term(t).shift);
            std::copy(cc.begin(), cc.end(), out.begin() + static_cast<std::ptrdiff_t>(offset(t, yp, n + de)));
        }
        return out;
    }

    /// Postcomposition with the differential of R.
    Vector d(int y, int n, const Vector& v) const
    {
        Vector out(dim(y, n + 1));
        for (const auto& [key, e] : r_.entries()) {
            auto [t, u] = key;
            Element c = A_.multiply(component(t, y, n, v), e);
            Vector cc = A_.coords(c, y, r_.term(u).vertex, n + 1 + r_.term(u).shift);
            const std::size_t at = offset(u, y, n + 1);
            for (std::size_t i = 0; i < cc.size(); ++i)
                out[at + i] += cc[i];
        }
        return out;
    }

private:
    const TwistedComplex& r_;
    const GradedQuiverAlgebra& A_;
};

} // namespace serre_detail

/// S(X) as a twisted complex resolving the Nakayama module nu(X), the dual
/// of Hom(X, A). Terms of X are absorbed from last to first: each adds the
/// resolution of an injective I_v in front, glued on by lifting through the
/// augmentation built so far.
inline TwistedComplex serre(const TwistedComplex& x)
{
    using namespace serre_detail;
    const auto& A = x.algebra();
    if (!A.finite_dimensional() || !A.directed())
        throw InputError("serre requires a finite-dimensional directed algebra");
    const Nakayama nu(x);
    TwistedComplex r(x.algebra_ptr());
    std::vector<Vector> tau; // augmentation on the generators of r, at (v_t, -s_t)

    for (int k = x.size(); k-- > 0;) {
        const Term& xt = x.term(k);
        Resolution res = resolve(A, injective(A, xt.vertex));
        Indexed block = to_complex(x.algebra_ptr(), res);
        const int nb = block.complex.size();
        TwistedComplex b(x.algebra_ptr());
        for (const auto& t : block.complex.terms())
            b.add_term(Term{t.vertex, t.shift + xt.shift});
        for (const auto& [key, e] : block.complex.entries())
            b.set_entry(key.first, key.second, e);

        std::vector<Vector> tau_b(nb);
        for (int t = 0; t < nb; ++t)
            tau_b[t] = Vector(nu.dim(b.term(t).vertex, -b.term(t).shift));
        for (std::size_t gi = 0; !res.levels.empty() && gi < res.levels[0].gens.size(); ++gi) {
            const int t = block.index[0][gi];
            const Vector& vec = res.levels[0].gens[gi].vec;
            const std::size_t off = nu.offset(k, b.term(t).vertex, -b.term(t).shift);
            for (std::size_t i = 0; i < vec.size(); ++i)
                tau_b[t][off + i] = vec[i];
        }

        const Representable rep(r);
        std::vector<Vector> kappa(nb);
        for (int g = nb; g-- > 0;) {
            const int y = b.term(g).vertex, m = -b.term(g).shift;
            // rhs1 = -kappa(d_b g), rhs2 = d_nu(tau_k g) - tau(d_b g)
            Vector rhs1(rep.dim(y, m + 2));
            Vector rhs2 = nu.d(y, m, tau_b[g]);
            for (const auto& [key, e] : b.entries()) {
                if (key.first != g)
                    continue;
                const int u = key.second, yu = b.term(u).vertex, mu = -b.term(u).shift;
                Vector kv = rep.act(e, y, yu, mu + 1, kappa[u]);
                for (std::size_t i = 0; i < kv.size(); ++i)
                    rhs1[i] -= kv[i];
                Vector tv = nu.act(e, y, yu, mu, tau_b[u]);
                for (std::size_t i = 0; i < tv.size(); ++i)
                    rhs2[i] -= tv[i];
            }
            const std::size_t nk = rep.dim(y, m + 1);
            const std::size_t s_lo = nu.offset(k + 1, y, m), s_hi = nu.dim(y, m);
            Matrix sys(rhs1.size() + rhs2.size(), nk + (s_hi - s_lo));
            for (std::size_t c = 0; c < nk; ++c) {
                Vector unit(nk);
                unit[c] = 1;
                Vector dk = rep.d(y, m + 1, unit);
                for (std::size_t i = 0; i < dk.size(); ++i)
                    sys(i, c) = dk[i];
                Vector pk(nu.dim(y, m + 1));
                for (int t = 0; t < r.size(); ++t) {
                    Element comp = rep.component(t, y, m + 1, unit);
                    if (comp.is_zero())
                        continue;
                    Vector pv = nu.act(comp, y, r.term(t).vertex, -r.term(t).shift, tau[t]);
                    for (std::size_t i = 0; i < pv.size(); ++i)
                        pk[i] += pv[i];
                }
                for (std::size_t i = 0; i < pk.size(); ++i)
                    sys(rhs1.size() + i, c) = pk[i];
            }
            for (std::size_t c = s_lo; c < s_hi; ++c) {
                Vector unit(s_hi);
                unit[c] = 1;
                Vector ds = nu.d(y, m, unit);
                for (std::size_t i = 0; i < ds.size(); ++i)
                    sys(rhs1.size() + i, nk + c - s_lo) = -ds[i];
            }
            Vector rhs(rhs1);
            rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
            auto sol = solve(sys, rhs);
            if (!sol)
                throw ComputationError("Nakayama module does not lift to a twisted complex");
            kappa[g] = Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nk));
            for (std::size_t c = s_lo; c < s_hi; ++c)
                tau_b[g][c] += (*sol)[nk + c - s_lo];
        }

        TwistedComplex next(x.algebra_ptr());
        for (const auto& t : b.terms())
            next.add_term(t);
        for (const auto& t : r.terms())
            next.add_term(t);
        for (const auto& [key, e] : b.entries())
            next.set_entry(key.first, key.second, e);
        for (int g = 0; g < nb; ++g) {
            const int y = b.term(g).vertex, m = -b.term(g).shift;
            for (int t = 0; t < r.size(); ++t)
                next.set_entry(g, nb + t, rep.component(t, y, m + 1, kappa[g]));
        }
        for (const auto& [key, e] : r.entries())
            next.set_entry(nb + key.first, nb + key.second, e);
        tau_b.insert(tau_b.end(), tau.begin(), tau.end());
        tau = std::move(tau_b);
        r = std::move(next);
    }
    r.validate();
    return minimize(r);
}

/// The same image through the arrow-level functor; only defined when the
/// lifted arrows kill every relation strictly, e.g. for path algebras.
inline TwistedComplex serre_by_functor(const TwistedComplex& x)
{
    return minimize(serre_functor(x.algebra_ptr()).apply(x));
}

} // namespace codp
