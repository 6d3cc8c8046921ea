#pragma once

#include "complex.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace codp {

/// Inverse of an endomorphism c*e + n of P_v with c != 0 and n nilpotent.
inline Element invert_local(const GradedQuiverAlgebra& A, const Element& b)
{
    if (b.is_zero() || b.source != b.target || b.degree != 0)
        throw ComputationError("element is not a degree-zero endomorphism");
    Rational c = b.coefficient({});
    if (sgn(c) == 0)
        throw ComputationError("element has no invertible idempotent component");
    Element e = A.idempotent(b.source);
    // b = c (e - u) with u = e - b/c, and (e - u)^{-1} = sum u^k.
    Element u = e - (Rational(1) / c) * b;
    Element sum = e;
    Element power = e;
    for (int k = 1; k <= A.path_bound(); ++k) {
        power = A.multiply(power, u);
        if (power.is_zero())
            return (Rational(1) / c) * sum;
        sum += power;
    }
    throw ComputationError("degree-zero radical is not nilpotent; the algebra is not graded-local");
}

inline bool has_invertible_component(const TwistedComplex& x, int i, int j, const Element& e)
{
    return !e.is_zero() && x.term(i).vertex == x.term(j).vertex && x.entry_degree(i, j) == 0 &&
           sgn(e.coefficient({})) != 0;
}

/// Gaussian elimination of every differential entry with an invertible
/// idempotent component; returns a homotopy equivalent minimal complex.
inline TwistedComplex minimize(const TwistedComplex& x)
{
    const auto& A = x.algebra();
    const int n = x.size();
    std::vector<bool> alive(n, true);
    EntryMap d = x.entries();

    auto pick = [&]() -> std::optional<EntryKey> {
        for (const auto& [key, e] : d)
            if (has_invertible_component(x, key.first, key.second, e))
                return key;
        return std::nullopt;
    };

    while (auto pivot = pick()) {
        auto [i, j] = *pivot;
        Element binv = invert_local(A, d.at(*pivot));
        std::vector<std::pair<int, Element>> into_j, out_of_i;
        for (const auto& [key, e] : d) {
            if (key.second == j && key.first != i)
                into_j.push_back({key.first, e});
            if (key.first == i && key.second != j)
                out_of_i.push_back({key.second, e});
        }
        for (const auto& [k, a] : into_j) {
            if (k == i || k == j)
                continue;
            Element left = A.multiply(a, binv);
            for (const auto& [l, c] : out_of_i) {
                if (l == i || l == j)
                    continue;
                Element correction = A.multiply(left, c);
                if (correction.is_zero())
                    continue;
                auto slot = d.find({k, l});
                if (slot == d.end())
                    d.emplace(EntryKey{k, l}, -correction);
                else {
                    slot->second += -correction;
                    if (slot->second.is_zero())
                        d.erase(slot);
                }
            }
        }
        for (auto it = d.begin(); it != d.end();) {
            auto [a, b] = it->first;
            if (a == i || a == j || b == i || b == j)
                it = d.erase(it);
            else
                ++it;
        }
        alive[i] = alive[j] = false;
    }

    // Stable topological order of the surviving terms.
    std::map<int, std::set<int>> preds;
    for (int k = 0; k < n; ++k)
        if (alive[k])
            preds[k];
    for (const auto& [key, e] : d)
        preds[key.second].insert(key.first);
    std::vector<int> order;
    std::set<int> placed;
    while (order.size() < preds.size()) {
        bool progressed = false;
        for (const auto& [k, ps] : preds) {
            if (placed.count(k))
                continue;
            bool ready = true;
            for (int p : ps)
                ready = ready && placed.count(p);
            if (ready) {
                order.push_back(k);
                placed.insert(k);
                progressed = true;
                break;
            }
        }
        if (!progressed)
            throw ComputationError("elimination produced a complex that is not one-sided");
    }
    std::map<int, int> position;
    TwistedComplex out(x.algebra_ptr());
    for (int k : order) {
        position[k] = out.size();
        out.add_term(x.term(k));
    }
    for (const auto& [key, e] : d)
        out.set_entry(position.at(key.first), position.at(key.second), e);
    return out;
}

inline bool is_minimal(const TwistedComplex& x)
{
    for (const auto& [key, e] : x.entries())
        if (has_invertible_component(x, key.first, key.second, e))
            return false;
    return true;
}

} // namespace codp
