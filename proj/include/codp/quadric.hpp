#pragma once

#include "rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace codp {

/// Binomial coefficient C(x, k) as a polynomial in x, for any integer x.
inline Integer binomial_poly(long x, int k)
{
    if (k < 0)
        return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= Integer(x - i);
        den *= Integer(i + 1);
    }
    return num / den;
}

/// chi(Q^d, O(m)) = C(m+d+1, d+1) - C(m+d-1, d+1).
inline Integer chi_o(int d, long m)
{
    if (d < 1)
        throw InputError("quadric dimension must be >= 1");
    return binomial_poly(m + d + 1, d + 1) - binomial_poly(m + d - 1, d + 1);
}

inline long spinor_rank(int n)
{
    if (n < 2)
        throw InputError("spinor rank needs n >= 2");
    return 1L << ((n - 2) / 2);
}

enum class Bundle { O, S, Sp };

inline std::string to_string(Bundle b)
{
    switch (b) {
    case Bundle::O:
        return "O";
    case Bundle::S:
        return "S";
    default:
        return "S'";
    }
}

/// A twisted bundle F(m) on the quadric.
struct Twisted
{
    Bundle bundle = Bundle::O;
    int twist = 0;
};

/// Euler characteristics chi(F(a), G(b)) on a smooth quadric Q^d for
/// F, G in {O, S, S'}, from the spinor sequences and the dual table.
class QuadricChi
{
public:
    explicit QuadricChi(int d) : d_(d), n_(spinor_rank(d + 1))
    {
        if (d < 1)
            throw InputError("quadric dimension must be >= 1");
    }

    int dimension() const { return d_; }
    bool odd() const { return d_ % 2 == 1; }
    long rank() const { return n_; }

    /// For odd d there is a single spinor bundle.
    Bundle canonical(Bundle b) const { return odd() && b == Bundle::Sp ? Bundle::S : b; }

    /// The other spinor bundle, i.e. the kernel in 0 -> X' -> O^2N -> X(1) -> 0.
    Bundle partner(Bundle b) const
    {
        if (odd())
            return Bundle::S;
        return b == Bundle::S ? Bundle::Sp : Bundle::S;
    }

    /// X^vee = dual(X)(1).
    Bundle dual(Bundle b) const
    {
        if (odd() || d_ % 4 == 0)
            return canonical(b);
        return b == Bundle::S ? Bundle::Sp : Bundle::S;
    }

    Integer chi(const Twisted& f, const Twisted& g) { return chi(f.bundle, g.bundle, g.twist - f.twist); }

    /// chi(Hom(F, G(m))).
    Integer chi(Bundle f, Bundle g, int m)
    {
        f = canonical(f);
        g = canonical(g);
        auto key = std::make_tuple(f, g, m);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        Integer v = compute(f, g, m);
        memo_[key] = v;
        return v;
    }

    /// Walks chi(Hom(S, S(m))) up 4 steps and back down 4 by the recursion
    /// alone, from the base value at m = 0.
    Integer round_trip() const
    {
        // values[(G, m)] of chi(Hom(S, G(m))), G spinor.
        std::map<std::pair<Bundle, int>, Integer> v;
        v[{Bundle::S, 0}] = 1;
        v[{partner(Bundle::S), 0}] = odd() ? Integer(1) : Integer(0);
        QuadricChi helper(d_);
        for (int m = 0; m < 4; ++m)
            for (Bundle g : spinors()) {
                // chi(S, G(m+1)) = 2N chi(S, O(m)) - chi(S, G'(m))
                v[{g, m + 1}] = 2 * n_ * helper.chi(Bundle::S, Bundle::O, m) - v.at({partner(g), m});
            }
        std::map<std::pair<Bundle, int>, Integer> w;
        for (Bundle g : spinors())
            w[{g, 4}] = v.at({g, 4});
        for (int m = 3; m >= 0; --m)
            for (Bundle g : spinors())
                w[{partner(g), m}] = 2 * n_ * helper.chi(Bundle::S, Bundle::O, m) - w.at({g, m + 1});
        return w.at({Bundle::S, 0});
    }

    std::vector<Bundle> spinors() const
    {
        if (odd())
            return {Bundle::S};
        return {Bundle::S, Bundle::Sp};
    }

private:
    Integer compute(Bundle f, Bundle g, int m)
    {
        if (f == Bundle::O && g == Bundle::O)
            return chi_o(d_, m);
        if (f == Bundle::O) {
            // chi(G(m)) with chi(G) = 0; G(m+1) from the sequence with kernel G'(m).
            if (m == 0)
                return 0;
            if (m > 0)
                return 2 * n_ * chi_o(d_, m - 1) - chi(Bundle::O, partner(g), m - 1);
            return 2 * n_ * chi_o(d_, m) - chi(Bundle::O, partner(g), m + 1);
        }
        if (g == Bundle::O) {
            // Hom(F, O(m)) = F^vee(m) = dual(F)(m+1).
            return chi(Bundle::O, dual(f), m + 1);
        }
        if (m == 0)
            return f == g ? 1 : 0;
        if (m > 0)
            return 2 * n_ * chi(f, Bundle::O, m - 1) - chi(f, partner(g), m - 1);
        // G'(m) sits in 0 -> G'(m) -> O(m)^2N -> G(m+1) -> 0.
        return 2 * n_ * chi(f, Bundle::O, m) - chi(f, partner(g), m + 1);
    }

    int d_;
    long n_;
    std::map<std::tuple<Bundle, Bundle, int>, Integer> memo_;
};

/// chi(eta_* F, eta_* G) = chi_E(F, G) - chi_E(F(1), G).
inline Integer eta_chi(QuadricChi& q, const Twisted& f, const Twisted& g)
{
    return q.chi(f, g) - q.chi(Twisted{f.bundle, f.twist + 1}, g);
}

/// The class of K as a combination of pushed-forward spinor bundles.
inline std::vector<std::pair<Integer, Twisted>> k_class(const QuadricChi& q)
{
    if (q.odd())
        return {{Integer(1), Twisted{Bundle::S, 0}}};
    return {{Integer(1), Twisted{Bundle::S, 0}}, {Integer(-1), Twisted{Bundle::Sp, 0}}};
}

inline Integer eta_chi_class(QuadricChi& q, const std::vector<std::pair<Integer, Twisted>>& x,
                             const std::vector<std::pair<Integer, Twisted>>& y)
{
    Integer sum = 0;
    for (const auto& [a, f] : x)
        for (const auto& [b, g] : y)
            sum += a * b * eta_chi(q, f, g);
    return sum;
}

struct EtaTable
{
    std::vector<std::string> labels;
    std::vector<std::vector<Integer>> values; // chi(eta_* row, eta_* col)
    Integer chi_kk;
};

/// chi(eta_* F, eta_* G) over F, G in {S, S', O(m) for lo <= m <= hi}.
inline EtaTable eta_chi_table(QuadricChi& q, int lo = -1, int hi = 1)
{
    std::vector<Twisted> objs;
    EtaTable t;
    for (Bundle b : q.spinors()) {
        objs.push_back(Twisted{b, 0});
        t.labels.push_back(to_string(b));
    }
    for (int m = lo; m <= hi; ++m) {
        objs.push_back(Twisted{Bundle::O, m});
        t.labels.push_back("O(" + std::to_string(m) + ")");
    }
    for (const auto& f : objs) {
        std::vector<Integer> row;
        for (const auto& g : objs)
            row.push_back(eta_chi(q, f, g));
        t.values.push_back(row);
    }
    auto k = k_class(q);
    t.chi_kk = eta_chi_class(q, k, k);
    return t;
}

struct GramResult
{
    std::vector<std::string> labels;
    std::vector<std::vector<Integer>> gram;
    bool unitriangular = false;
};

/// The exceptional collection O(1-d), ..., O(-1), S, O (d odd) or
/// O(1-d), ..., O(-2), S(-1), O(-1), S, O (d even).
inline std::vector<Twisted> kapranov_collection(int d)
{
    std::vector<Twisted> out;
    int stop = d % 2 == 1 ? -1 : -2;
    for (int m = 1 - d; m <= stop; ++m)
        out.push_back(Twisted{Bundle::O, m});
    if (d % 2 == 0) {
        out.push_back(Twisted{Bundle::S, -1});
        out.push_back(Twisted{Bundle::O, -1});
    }
    out.push_back(Twisted{Bundle::S, 0});
    out.push_back(Twisted{Bundle::O, 0});
    return out;
}

inline std::string twisted_label(const Twisted& t)
{
    return to_string(t.bundle) + (t.twist == 0 ? "" : "(" + std::to_string(t.twist) + ")");
}

inline GramResult gram_kapranov(int d)
{
    QuadricChi q(d);
    GramResult out;
    auto coll = kapranov_collection(d);
    out.unitriangular = true;
    for (std::size_t i = 0; i < coll.size(); ++i) {
        out.labels.push_back(twisted_label(coll[i]));
        std::vector<Integer> row;
        for (std::size_t j = 0; j < coll.size(); ++j) {
            Integer v = q.chi(coll[i], coll[j]);
            if ((i == j && v != 1) || (i > j && v != 0))
                out.unitriangular = false;
            row.push_back(v);
        }
        out.gram.push_back(row);
    }
    return out;
}

} // namespace codp
