#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace codp {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix int_identity(std::size_t n)
{
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    out[i][j] += a[i][l] * b[l][j];
    return out;
}

/// Rows = divisor classes, columns = curves (one per node).
struct LatticeMap
{
    IntMatrix matrix;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? col_labels.size() : matrix[0].size(); }

    void validate() const
    {
        for (const auto& r : matrix)
            if (r.size() != cols())
                throw InputError("lattice matrix is not rectangular");
        if (!row_labels.empty() && row_labels.size() != rows())
            throw InputError("row label count does not match the matrix");
        if (!col_labels.empty() && col_labels.size() != cols())
            throw InputError("column label count does not match the matrix");
    }
};

struct SmithForm
{
    IntMatrix U, D, V; // U * M * V = D
    std::vector<Integer> factors; // nonzero invariant factors, each dividing the next
};

/// Smith normal form over the integers with unimodular transforms.
inline SmithForm snf(const IntMatrix& m)
{
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    SmithForm s{int_identity(rows), m, int_identity(cols), {}};
    IntMatrix& D = s.D;
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        std::swap(s.U[a], s.U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& r : D)
            std::swap(r[a], r[b]);
        for (auto& r : s.V)
            std::swap(r[a], r[b]);
    };
    auto add_row = [&](std::size_t to, std::size_t from, const Integer& k) { // row_to += k row_from
        for (std::size_t j = 0; j < cols; ++j)
            D[to][j] += k * D[from][j];
        for (std::size_t j = 0; j < rows; ++j)
            s.U[to][j] += k * s.U[from][j];
    };
    auto add_col = [&](std::size_t to, std::size_t from, const Integer& k) { // col_to += k col_from
        for (std::size_t i = 0; i < rows; ++i)
            D[i][to] += k * D[i][from];
        for (std::size_t i = 0; i < cols; ++i)
            s.V[i][to] += k * s.V[i][from];
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the remaining block goes to (t, t).
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (D[i][j] != 0 && (bi == rows || abs(D[i][j]) < abs(D[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows)
                break;
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (D[i][t] != 0) {
                    Integer k = D[i][t] / D[t][t];
                    add_row(i, t, -k);
                    clean = clean && D[i][t] == 0;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (D[t][j] != 0) {
                    Integer k = D[t][j] / D[t][t];
                    add_col(j, t, -k);
                    clean = clean && D[t][j] == 0;
                }
            if (!clean)
                continue;
            // Divisibility: pull in a row whose entries the pivot does not divide.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            add_row(t, bad, 1);
        }
        if (t < rows && t < cols && D[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                D[t][j] = -D[t][j];
            for (std::size_t j = 0; j < rows; ++j)
                s.U[t][j] = -s.U[t][j];
        }
    }
    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
        if (D[t][t] != 0)
            s.factors.push_back(D[t][t]);
    return s;
}

enum class Nonfactoriality { Maximal, QMaximalOnly, Neither };

inline std::string to_string(Nonfactoriality n)
{
    switch (n) {
    case Nonfactoriality::Maximal:
        return "maximal";
    case Nonfactoriality::QMaximalOnly:
        return "Q-maximal-only";
    default:
        return "neither";
    }
}

/// Classifies the restriction map Z^rows -> Z^cols given by the matrix.
inline Nonfactoriality nonfactoriality(const LatticeMap& l)
{
    l.validate();
    const std::size_t r = l.cols();
    SmithForm s = snf(l.matrix);
    if (s.factors.size() != r)
        return Nonfactoriality::Neither;
    for (const auto& f : s.factors)
        if (f != 1)
            return Nonfactoriality::QMaximalOnly;
    return Nonfactoriality::Maximal;
}

namespace detail {

/// a . y >= b
struct Inequality
{
    std::vector<Rational> a;
    Rational b;

    bool operator<(const Inequality& o) const
    {
        if (a.size() != o.a.size())
            return a.size() < o.a.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != o.a[i])
                return a[i] < o.a[i];
        return b < o.b;
    }

    /// Scale so the largest absolute coefficient (or |b|) is 1.
    void normalize()
    {
        Rational m = 0;
        for (const auto& c : a)
            m = std::max(m, Rational(abs(c)));
        if (sgn(m) == 0)
            m = abs(b);
        if (sgn(m) == 0)
            return;
        for (auto& c : a)
            c /= m;
        b /= m;
    }
};

/// Fourier-Motzkin feasibility of a system of non-strict inequalities.
inline bool fm_feasible(std::vector<Inequality> system, std::size_t vars)
{
    for (std::size_t k = 0; k < vars; ++k) {
        std::vector<Inequality> pos, neg;
        std::set<Inequality> next;
        for (auto& in : system) {
            int s = sgn(in.a[k]);
            if (s > 0)
                pos.push_back(in);
            else if (s < 0)
                neg.push_back(in);
            else
                next.insert(in);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Rational cp = p.a[k], cn = -n.a[k];
                Inequality c{std::vector<Rational>(vars), p.b / cp + n.b / cn};
                for (std::size_t i = 0; i < vars; ++i)
                    c.a[i] = p.a[i] / cp + n.a[i] / cn;
                c.a[k] = 0;
                c.normalize();
                next.insert(c);
            }
        system.assign(next.begin(), next.end());
        for (const auto& in : system) {
            bool zero = std::all_of(in.a.begin(), in.a.end(), [](const Rational& c) { return sgn(c) == 0; });
            if (zero && sgn(in.b) > 0)
                return false;
        }
    }
    for (const auto& in : system)
        if (sgn(in.b) > 0)
            return false;
    return true;
}

} // namespace detail

/// Is there a vector v in the row space with s_j v_j > 0 for every column j?
inline bool pattern_feasible(const LatticeMap& l, const std::vector<int>& signs)
{
    const std::size_t rows = l.rows(), cols = l.cols();
    std::vector<detail::Inequality> system;
    for (std::size_t j = 0; j < cols; ++j) {
        detail::Inequality in{std::vector<Rational>(rows), Rational(1)};
        for (std::size_t i = 0; i < rows; ++i)
            in.a[i] = Rational(l.matrix[i][j]) * signs[j];
        in.normalize();
        system.push_back(in);
    }
    return detail::fm_feasible(system, rows);
}

struct SurveyResult
{
    std::vector<std::pair<std::vector<int>, bool>> patterns; // sign pattern -> projective
    std::size_t projective_count = 0;
    Nonfactoriality nonfactoriality = Nonfactoriality::Neither;

    bool all_projective() const { return projective_count == patterns.size(); }
};

inline std::string pattern_string(const std::vector<int>& s)
{
    std::string out;
    for (int v : s)
        out += v > 0 ? '+' : '-';
    return out;
}

/// All 2^r sign patterns, ordered with '+' before '-' lexicographically.
inline SurveyResult small_resolution_survey(const LatticeMap& l)
{
    l.validate();
    const std::size_t r = l.cols();
    if (r > 20)
        throw InputError("survey supports at most 20 nodes, got " + std::to_string(r));
    SurveyResult out;
    out.nonfactoriality = nonfactoriality(l);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        std::vector<int> s(r);
        for (std::size_t j = 0; j < r; ++j)
            s[j] = (mask >> (r - 1 - j)) & 1 ? -1 : 1;
        bool ok = pattern_feasible(l, s);
        out.projective_count += ok;
        out.patterns.emplace_back(s, ok);
    }
    return out;
}

struct DualGraph
{
    struct Edge
    {
        int u = 0, v = 0;
        int multiplicity = 1;
    };
    std::vector<std::string> labels;
    std::vector<bool> rational;
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(labels.size()); }

    void validate() const
    {
        if (rational.size() != labels.size())
            throw InputError("dual graph needs one rationality flag per component");
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= size() || e.v >= size())
                throw InputError("dual graph edge references a missing component");
            if (e.multiplicity < 1)
                throw InputError("edge multiplicity must be positive");
        }
    }
};

struct CurveTreeResult
{
    bool is_tree = false;
    std::vector<int> peel_order;
    int pinfty_count = 0;
    std::vector<int> residual; // components left after peeling
};

inline CurveTreeResult curve_tree_analysis(const DualGraph& g)
{
    g.validate();
    CurveTreeResult out;
    const int n = g.size();
    if (n == 0)
        return out;
    long long edge_count = 0;
    std::vector<std::vector<int>> adj(n);
    bool loop_or_multi = false;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges) {
        edge_count += e.multiplicity;
        if (e.u == e.v || e.multiplicity > 1 || !seen.insert(std::minmax(e.u, e.v)).second)
            loop_or_multi = true;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> visited(n, false);
    std::vector<int> stack{0};
    visited[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    out.is_tree = !loop_or_multi && reached == n && edge_count == n - 1;
    if (!out.is_tree)
        return out;

    // Peel rational leaves one at a time, smallest index first.
    std::vector<bool> alive(n, true);
    std::vector<int> degree(n, 0);
    for (int v = 0; v < n; ++v)
        degree[v] = static_cast<int>(adj[v].size());
    int remaining = n;
    while (remaining > 1) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (alive[v] && g.rational[v] && degree[v] == 1)
                leaf = v;
        if (leaf < 0)
            break;
        alive[leaf] = false;
        --remaining;
        for (int w : adj[leaf])
            if (alive[w])
                --degree[w];
        out.peel_order.push_back(leaf);
    }
    out.pinfty_count = static_cast<int>(out.peel_order.size());
    for (int v = 0; v < n; ++v)
        if (alive[v])
            out.residual.push_back(v);
    return out;
}

} // namespace codp
