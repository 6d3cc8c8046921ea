#pragma once

#include "algebra.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace codp {

/// The shifted projective P_vertex[shift].
struct Term
{
    int vertex = 0;
    int shift = 0;

    friend bool operator==(const Term& a, const Term& b) { return a.vertex == b.vertex && a.shift == b.shift; }
    friend bool operator<(const Term& a, const Term& b)
    {
        return a.vertex != b.vertex ? a.vertex < b.vertex : a.shift < b.shift;
    }
};

using EntryKey = std::pair<int, int>; // (from, to)
using EntryMap = std::map<EntryKey, Element>;

/// One-sided twisted complex: terms in order, differential entries only
/// from earlier to later terms.
class TwistedComplex
{
public:
    TwistedComplex() = default;
    explicit TwistedComplex(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
    TwistedComplex(AlgebraPtr algebra, std::vector<Term> terms) : algebra_(std::move(algebra)), terms_(std::move(terms))
    {
    }

    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const GradedQuiverAlgebra& algebra() const { return *algebra_; }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& term(int i) const { return terms_[i]; }
    int size() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }
    const EntryMap& entries() const { return entries_; }

    Element entry(int from, int to) const
    {
        auto it = entries_.find({from, to});
        if (it != entries_.end())
            return it->second;
        return algebra_->zero(terms_[from].vertex, terms_[to].vertex, entry_degree(from, to));
    }

    int entry_degree(int from, int to) const { return 1 + terms_[to].shift - terms_[from].shift; }

    void add_term(Term t) { terms_.push_back(t); }

    void set_entry(int from, int to, const Element& e)
    {
        if (e.is_zero())
            entries_.erase({from, to});
        else
            entries_[{from, to}] = e;
    }

    /// Throws InputError describing the first violated invariant.
    void validate() const
    {
        const auto& A = *algebra_;
        for (const auto& t : terms_)
            if (t.vertex < 0 || t.vertex >= A.num_vertices())
                throw InputError("term vertex out of range");
        for (const auto& [key, e] : entries_) {
            auto [i, j] = key;
            if (i < 0 || j < 0 || i >= size() || j >= size())
                throw InputError("entry references a missing term");
            if (i >= j)
                throw InputError("entry " + std::to_string(i) + "->" + std::to_string(j) + " is not triangular");
            if (e.is_zero())
                continue;
            if (e.source != terms_[i].vertex || e.target != terms_[j].vertex)
                throw InputError("entry " + std::to_string(i) + "->" + std::to_string(j) +
                                 " has the wrong endpoints");
            if (e.degree != entry_degree(i, j))
                throw InputError("entry " + std::to_string(i) + "->" + std::to_string(j) + " has degree " +
                                 std::to_string(e.degree) + ", expected " + std::to_string(entry_degree(i, j)));
        }
        for (int i = 0; i < size(); ++i)
            for (int k = i + 2; k < size(); ++k) {
                Element sum;
                for (int j = i + 1; j < k; ++j) {
                    auto a = entries_.find({i, j});
                    auto b = entries_.find({j, k});
                    if (a != entries_.end() && b != entries_.end())
                        sum += A.multiply(a->second, b->second);
                }
                if (!sum.is_zero())
                    throw InputError("differential does not square to zero at " + std::to_string(i) + "->" +
                                     std::to_string(k));
            }
    }

    bool is_valid() const
    {
        try {
            validate();
            return true;
        } catch (const InputError&) {
            return false;
        }
    }

    std::string describe() const
    {
        std::string out = "[";
        for (int i = 0; i < size(); ++i) {
            if (i)
                out += ", ";
            out += "P" + algebra_->vertices()[terms_[i].vertex] + "[" + std::to_string(terms_[i].shift) + "]";
        }
        out += "]";
        for (const auto& [key, e] : entries_)
            out += " " + std::to_string(key.first) + "->" + std::to_string(key.second) + ":" + algebra_->format(e);
        return out;
    }

private:
    AlgebraPtr algebra_;
    std::vector<Term> terms_;
    EntryMap entries_;
};

/// Degree-n map of twisted complexes; entry (i, j) sends source term i to
/// target term j and has degree n + t_j - s_i.
struct Morphism
{
    TwistedComplex source;
    TwistedComplex target;
    int degree = 0;
    EntryMap entries;

    Element entry(int i, int j) const
    {
        auto it = entries.find({i, j});
        if (it != entries.end())
            return it->second;
        return Element{};
    }

    int entry_degree(int i, int j) const { return degree + target.term(j).shift - source.term(i).shift; }

    void set_entry(int i, int j, const Element& e)
    {
        if (e.is_zero())
            entries.erase({i, j});
        else
            entries[{i, j}] = e;
    }

    bool is_zero() const { return entries.empty(); }
};

inline Morphism zero_morphism(const TwistedComplex& x, const TwistedComplex& y, int degree)
{
    return Morphism{x, y, degree, {}};
}

inline Morphism identity_morphism(const TwistedComplex& x)
{
    Morphism id{x, x, 0, {}};
    for (int i = 0; i < x.size(); ++i)
        id.entries[{i, i}] = x.algebra().idempotent(x.term(i).vertex);
    return id;
}

/// Entry map of g after f (first f, then g).
inline EntryMap compose_entries(const GradedQuiverAlgebra& A, const EntryMap& f, const EntryMap& g)
{
    std::map<int, std::vector<std::pair<int, const Element*>>> g_from;
    for (const auto& [key, e] : g)
        g_from[key.first].push_back({key.second, &e});
    EntryMap out;
    for (const auto& [key, fe] : f) {
        auto it = g_from.find(key.second);
        if (it == g_from.end())
            continue;
        for (const auto& [k, ge] : it->second) {
            Element prod = A.multiply(fe, *ge);
            if (prod.is_zero())
                continue;
            auto slot = out.find({key.first, k});
            if (slot == out.end())
                out.emplace(EntryKey{key.first, k}, prod);
            else {
                slot->second += prod;
                if (slot->second.is_zero())
                    out.erase(slot);
            }
        }
    }
    return out;
}

inline void add_entries(EntryMap& into, const EntryMap& from, const Rational& scale = 1)
{
    for (const auto& [key, e] : from) {
        Element scaled = scale * e;
        auto slot = into.find(key);
        if (slot == into.end()) {
            if (!scaled.is_zero())
                into.emplace(key, scaled);
        } else {
            slot->second += scaled;
            if (slot->second.is_zero())
                into.erase(slot);
        }
    }
}

/// g after f.
inline Morphism compose(const Morphism& g, const Morphism& f)
{
    return Morphism{f.source, g.target, f.degree + g.degree,
                    compose_entries(f.source.algebra(), f.entries, g.entries)};
}

inline Morphism operator+(const Morphism& a, const Morphism& b)
{
    Morphism out = a;
    add_entries(out.entries, b.entries);
    return out;
}

inline Morphism operator*(const Rational& s, const Morphism& a)
{
    Morphism out = a;
    out.entries.clear();
    add_entries(out.entries, a.entries, s);
    return out;
}

/// d(f) = delta_Y f - (-1)^n f delta_X.
inline Morphism differential(const Morphism& f)
{
    const auto& A = f.source.algebra();
    Morphism out{f.source, f.target, f.degree + 1, {}};
    add_entries(out.entries, compose_entries(A, f.entries, f.target.entries()));
    add_entries(out.entries, compose_entries(A, f.source.entries(), f.entries), Rational(-sign_power(f.degree)));
    return out;
}

inline bool is_closed(const Morphism& f)
{
    return differential(f).is_zero();
}

inline TwistedComplex empty_complex(const AlgebraPtr& A)
{
    return TwistedComplex(A);
}

inline TwistedComplex projective(const AlgebraPtr& A, int vertex, int shift = 0)
{
    return TwistedComplex(A, {Term{vertex, shift}});
}

/// X[k]: every shift raised by k, differential scaled by (-1)^k.
inline TwistedComplex shift(const TwistedComplex& x, int k)
{
    TwistedComplex out(x.algebra_ptr());
    for (const auto& t : x.terms())
        out.add_term(Term{t.vertex, t.shift + k});
    for (const auto& [key, e] : x.entries())
        out.set_entry(key.first, key.second, Rational(sign_power(k)) * e);
    return out;
}

/// f[k]: same entries between the shifted complexes.
inline Morphism shift(const Morphism& f, int k)
{
    return Morphism{shift(f.source, k), shift(f.target, k), f.degree, f.entries};
}

inline TwistedComplex direct_sum(const TwistedComplex& x, const TwistedComplex& y)
{
    TwistedComplex out(x.algebra_ptr());
    for (const auto& t : x.terms())
        out.add_term(t);
    for (const auto& t : y.terms())
        out.add_term(t);
    for (const auto& [key, e] : x.entries())
        out.set_entry(key.first, key.second, e);
    for (const auto& [key, e] : y.entries())
        out.set_entry(key.first + x.size(), key.second + x.size(), e);
    return out;
}

inline TwistedComplex direct_sum(const std::vector<TwistedComplex>& parts, const AlgebraPtr& A)
{
    TwistedComplex out(A);
    for (const auto& p : parts)
        out = direct_sum(out, p);
    return out;
}

/// Cone(f) = X[1] followed by Y, with f as the connecting block.
inline TwistedComplex cone(const Morphism& f)
{
    if (f.degree != 0)
        throw ComputationError("cone of a morphism of nonzero degree");
    if (!is_closed(f))
        throw ComputationError("cone of a non-closed morphism");
    TwistedComplex out = direct_sum(shift(f.source, 1), f.target);
    const int n = f.source.size();
    for (const auto& [key, e] : f.entries)
        out.set_entry(key.first, key.second + n, e);
    return out;
}

/// Canonical Y -> Cone(f).
inline Morphism cone_inclusion(const Morphism& f)
{
    TwistedComplex c = cone(f);
    Morphism out{f.target, c, 0, {}};
    const int n = f.source.size();
    for (int j = 0; j < f.target.size(); ++j)
        out.entries[{j, j + n}] = f.target.algebra().idempotent(f.target.term(j).vertex);
    return out;
}

/// Canonical Cone(f) -> X[1].
inline Morphism cone_projection(const Morphism& f)
{
    TwistedComplex c = cone(f);
    Morphism out{c, shift(f.source, 1), 0, {}};
    for (int i = 0; i < f.source.size(); ++i)
        out.entries[{i, i}] = f.source.algebra().idempotent(f.source.term(i).vertex);
    return out;
}

/// Inclusion of the k-th summand and projection onto it, for a direct sum
/// assembled from parts.
inline Morphism summand_inclusion(const std::vector<TwistedComplex>& parts, const TwistedComplex& total, int k)
{
    int offset = 0;
    for (int i = 0; i < k; ++i)
        offset += parts[i].size();
    Morphism out{parts[k], total, 0, {}};
    for (int i = 0; i < parts[k].size(); ++i)
        out.entries[{i, i + offset}] = total.algebra().idempotent(parts[k].term(i).vertex);
    return out;
}

inline Morphism summand_projection(const std::vector<TwistedComplex>& parts, const TwistedComplex& total, int k)
{
    int offset = 0;
    for (int i = 0; i < k; ++i)
        offset += parts[i].size();
    Morphism out{total, parts[k], 0, {}};
    for (int i = 0; i < parts[k].size(); ++i)
        out.entries[{i + offset, i}] = total.algebra().idempotent(parts[k].term(i).vertex);
    return out;
}

inline TwistedComplex make_complex(const AlgebraPtr& A, const std::vector<Term>& terms,
                                   const std::vector<std::tuple<int, int, Element>>& entries)
{
    TwistedComplex out(A, terms);
    for (const auto& [i, j, e] : entries) {
        if (i < 0 || j < 0 || i >= out.size() || j >= out.size())
            throw InputError("entry references a missing term");
        if (i >= j)
            throw InputError("entry " + std::to_string(i) + "->" + std::to_string(j) + " is not triangular");
        if (!e.is_zero() && (e.source != terms[i].vertex || e.target != terms[j].vertex))
            throw InputError("entry " + std::to_string(i) + "->" + std::to_string(j) + " has the wrong endpoints");
        if (!e.is_zero() && e.degree != out.entry_degree(i, j))
            throw InputError("entry " + std::to_string(i) + "->" + std::to_string(j) + " has degree " +
                             std::to_string(e.degree) + ", expected " + std::to_string(out.entry_degree(i, j)));
        Element sum = out.entry(i, j);
        sum += e;
        out.set_entry(i, j, sum);
    }
    out.validate();
    return out;
}

} // namespace codp
