#pragma once

#include "linalg.hpp"
#include "rational.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace codp {

using PathWord = std::vector<int>;

/// Homogeneous linear combination of paths with fixed source, target and
/// degree. Always kept in normal form: only standard monomials appear.
struct Element
{
    int source = 0;
    int target = 0;
    int degree = 0;
    std::map<PathWord, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    Rational coefficient(const PathWord& path) const
    {
        auto it = terms.find(path);
        return it == terms.end() ? Rational(0) : it->second;
    }

    Element& operator+=(const Element& o)
    {
        if (o.is_zero())
            return *this;
        if (is_zero()) {
            source = o.source;
            target = o.target;
            degree = o.degree;
        } else if (source != o.source || target != o.target || degree != o.degree) {
            throw ComputationError("adding algebra elements of different type");
        }
        for (const auto& [p, c] : o.terms) {
            auto& slot = terms[p];
            slot += c;
            if (sgn(slot) == 0)
                terms.erase(p);
        }
        return *this;
    }

    Element& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [p, c] : terms)
            c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator-(Element a) { return a *= Rational(-1); }
    friend Element operator-(Element a, const Element& b) { return a += -b; }

    friend bool operator==(const Element& a, const Element& b)
    {
        if (a.is_zero() || b.is_zero())
            return a.is_zero() && b.is_zero();
        return a.source == b.source && a.target == b.target && a.degree == b.degree && a.terms == b.terms;
    }
};

struct Arrow
{
    std::string name;
    int source = 0;
    int target = 0;
    int degree = 0;
};

struct RelationTerm
{
    Rational coef;
    PathWord path;
};

using Relation = std::vector<RelationTerm>;

/// Raw presentation with names, as read from JSON or a preset.
struct QuiverSpec
{
    struct ArrowSpec
    {
        std::string name;
        std::string source;
        std::string target;
        int degree = 0;
    };
    struct TermSpec
    {
        std::string coef;
        std::vector<std::string> path;
    };

    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    std::vector<std::vector<TermSpec>> relations;
    std::string preset;
};

/// Basis of one graded piece e_w A e_v in a fixed degree, with the
/// reduction of every non-standard path to standard coordinates.
struct Piece
{
    int source = 0;
    int target = 0;
    int degree = 0;
    std::vector<PathWord> basis;
    std::map<PathWord, Vector> reduction;

    std::size_t dim() const { return basis.size(); }
};

class GradedQuiverAlgebra
{
public:
    static constexpr int default_path_bound = 64;

    GradedQuiverAlgebra(const QuiverSpec& spec, int path_bound = default_path_bound) : path_bound_(path_bound)
    {
        preset_ = spec.preset;
        std::map<std::string, int> vertex_ids;
        for (const auto& v : spec.vertices) {
            if (v.empty())
                throw InputError("empty vertex label");
            if (!vertex_ids.emplace(v, static_cast<int>(vertices_.size())).second)
                throw InputError("duplicate vertex '" + v + "'");
            vertices_.push_back(v);
        }
        if (vertices_.empty())
            throw InputError("algebra has no vertices");
        for (const auto& a : spec.arrows) {
            if (a.name.empty())
                throw InputError("empty arrow name");
            auto s = vertex_ids.find(a.source);
            auto t = vertex_ids.find(a.target);
            if (s == vertex_ids.end() || t == vertex_ids.end())
                throw InputError("arrow '" + a.name + "' has a dangling endpoint");
            if (arrow_ids_.count(a.name))
                throw InputError("duplicate arrow '" + a.name + "'");
            arrow_ids_[a.name] = static_cast<int>(arrows_.size());
            arrows_.push_back(Arrow{a.name, s->second, t->second, a.degree});
        }
        for (const auto& rel : spec.relations)
            add_relation(rel);
        analyze();
    }

    GradedQuiverAlgebra(const GradedQuiverAlgebra&) = delete;
    GradedQuiverAlgebra& operator=(const GradedQuiverAlgebra&) = delete;

    const std::string& preset() const { return preset_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int path_bound() const { return path_bound_; }

    int vertex_index(const std::string& label) const
    {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertices_[i] == label)
                return i;
        throw InputError("unknown vertex '" + label + "'");
    }

    int arrow_index(const std::string& name) const
    {
        auto it = arrow_ids_.find(name);
        if (it == arrow_ids_.end())
            throw InputError("unknown arrow '" + name + "'");
        return it->second;
    }

    bool finite_dimensional() const { return finite_; }

    /// Degrees d with e_w A e_v nonzero in degree d; finite-dimensional only.
    const std::set<int>& piece_degrees(int v, int w) const
    {
        static const std::set<int> empty;
        auto it = piece_degrees_.find({v, w});
        return it == piece_degrees_.end() ? empty : it->second;
    }

    /// gcd of the degrees of arrows lying on oriented cycles (0 if acyclic).
    int cycle_period() const { return period_; }
    bool cycles_nonnegative() const { return cycles_nonnegative_; }

    /// True when the quiver has no oriented cycles.
    bool directed() const { return acyclic_; }

    bool reachable(int v, int w) const { return reach_[v][w]; }

    /// Smallest degree of a path v -> w; meaningful only when reachable,
    /// and unbounded below when a negative cycle intervenes.
    long long min_path_degree(int v, int w) const { return lo_[w][v]; }
    static constexpr long long unbounded = std::numeric_limits<long long>::max() / 4;

    int path_degree(const PathWord& p) const
    {
        int d = 0;
        for (int a : p)
            d += arrows_[a].degree;
        return d;
    }

    const Piece& piece(int v, int w, int d) const
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto key = std::make_tuple(v, w, d);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return *it->second;
        auto built = std::make_unique<Piece>(build_piece(v, w, d));
        const Piece& ref = *built;
        cache_.emplace(key, std::move(built));
        return ref;
    }

    Element idempotent(int v) const
    {
        Element e{v, v, 0, {}};
        e.terms[{}] = 1;
        return e;
    }

    Element zero(int v, int w, int d) const { return Element{v, w, d, {}}; }

    Element arrow(int a) const { return path(arrows_[a].source, {a}); }

    Element path(int source, const PathWord& word, const Rational& coef = 1) const
    {
        int target = endpoint(source, word);
        std::map<PathWord, Rational> raw;
        raw[word] = coef;
        return normalize(source, target, path_degree(word), raw);
    }

    Element normalize(int v, int w, int d, const std::map<PathWord, Rational>& raw) const
    {
        const Piece& pc = piece(v, w, d);
        Vector coords(pc.dim());
        for (const auto& [p, c] : raw) {
            if (sgn(c) == 0)
                continue;
            auto it = pc.reduction.find(p);
            if (it == pc.reduction.end())
                continue;
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (sgn(it->second[i]) != 0)
                    coords[i] += c * it->second[i];
        }
        return from_coords(v, w, d, coords);
    }

    Vector coords(const Element& e, int v, int w, int d) const
    {
        const Piece& pc = piece(v, w, d);
        Vector out(pc.dim());
        if (e.is_zero())
            return out;
        if (e.source != v || e.target != w || e.degree != d)
            throw ComputationError("element does not lie in the requested piece");
        for (std::size_t i = 0; i < pc.dim(); ++i)
            out[i] = e.coefficient(pc.basis[i]);
        return out;
    }

    Element from_coords(int v, int w, int d, const Vector& coords) const
    {
        const Piece& pc = piece(v, w, d);
        Element e{v, w, d, {}};
        for (std::size_t i = 0; i < pc.dim(); ++i)
            if (sgn(coords[i]) != 0)
                e.terms[pc.basis[i]] = coords[i];
        return e;
    }

    /// Product "a then b": a maps u to x, b maps x to y.
    Element multiply(const Element& a, const Element& b) const
    {
        if (a.is_zero() || b.is_zero())
            return Element{};
        if (a.target != b.source)
            throw ComputationError("multiplying non-composable algebra elements");
        std::map<PathWord, Rational> raw;
        for (const auto& [pa, ca] : a.terms)
            for (const auto& [pb, cb] : b.terms) {
                PathWord joined = pa;
                joined.insert(joined.end(), pb.begin(), pb.end());
                raw[joined] += ca * cb;
            }
        return normalize(a.source, b.target, a.degree + b.degree, raw);
    }

    std::string path_name(int v, const PathWord& p) const
    {
        if (p.empty())
            return num_vertices() == 1 ? "e" : "e_" + vertices_[v];
        std::string out;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i)
                out += "*";
            out += arrows_[p[i]].name;
        }
        return out;
    }

    std::string format(const Element& e) const
    {
        if (e.is_zero())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [p, c] : e.terms) {
            Rational mag = abs(c);
            if (first)
                out += sgn(c) < 0 ? "-" : "";
            else
                out += sgn(c) < 0 ? " - " : " + ";
            first = false;
            if (mag != 1)
                out += mag.get_str() + "*";
            out += path_name(e.source, p);
        }
        return out;
    }

    int endpoint(int source, const PathWord& word) const
    {
        int at = source;
        for (int a : word) {
            if (a < 0 || a >= static_cast<int>(arrows_.size()))
                throw InputError("arrow index out of range");
            if (arrows_[a].source != at)
                throw InputError("path is not composable at arrow '" + arrows_[a].name + "'");
            at = arrows_[a].target;
        }
        return at;
    }

    /// Structural equality of presentations.
    bool same_presentation(const GradedQuiverAlgebra& o) const
    {
        if (this == &o)
            return true;
        if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size() || relations_.size() != o.relations_.size())
            return false;
        for (std::size_t i = 0; i < arrows_.size(); ++i) {
            const auto &a = arrows_[i], &b = o.arrows_[i];
            if (a.name != b.name || a.source != b.source || a.target != b.target || a.degree != b.degree)
                return false;
        }
        for (std::size_t i = 0; i < relations_.size(); ++i) {
            if (relations_[i].size() != o.relations_[i].size())
                return false;
            for (std::size_t j = 0; j < relations_[i].size(); ++j)
                if (relations_[i][j].coef != o.relations_[i][j].coef || relations_[i][j].path != o.relations_[i][j].path)
                    return false;
        }
        return true;
    }

private:
    static constexpr long long inf = unbounded;

    void add_relation(const std::vector<QuiverSpec::TermSpec>& rel)
    {
        Relation out;
        int src = -1, tgt = -1, deg = 0;
        for (const auto& t : rel) {
            if (t.path.empty())
                throw InputError("relation term with an empty path");
            PathWord word;
            for (const auto& name : t.path)
                word.push_back(arrow_index(name));
            int s = arrows_[word.front()].source;
            int e = endpoint(s, word);
            int d = path_degree(word);
            if (src < 0) {
                src = s;
                tgt = e;
                deg = d;
            } else if (s != src || e != tgt || d != deg) {
                throw InputError("relation is not homogeneous");
            }
            Rational c = parse_rational(t.coef);
            if (sgn(c) == 0)
                continue;
            bool merged = false;
            for (auto& existing : out)
                if (existing.path == word) {
                    existing.coef += c;
                    merged = true;
                }
            if (!merged)
                out.push_back(RelationTerm{c, word});
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const RelationTerm& t) { return sgn(t.coef) == 0; }),
                  out.end());
        if (out.empty())
            return;
        if (out.size() == 1)
            monomials_.push_back(out.front().path);
        relations_.push_back(std::move(out));
    }

    bool ends_with_monomial(const PathWord& p) const
    {
        for (const auto& m : monomials_) {
            if (m.size() > p.size())
                continue;
            if (std::equal(m.begin(), m.end(), p.end() - static_cast<long>(m.size())))
                return true;
        }
        return false;
    }

    void analyze()
    {
        const int n = num_vertices();
        // Reachability closure.
        reach_.assign(n, std::vector<bool>(n, false));
        for (int v = 0; v < n; ++v)
            reach_[v][v] = true;
        for (const auto& a : arrows_)
            reach_[a.source][a.target] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (reach_[i][k])
                    for (int j = 0; j < n; ++j)
                        if (reach_[k][j])
                            reach_[i][j] = true;

        acyclic_ = true;
        cycles_nonnegative_ = true;
        period_ = 0;
        for (const auto& a : arrows_)
            if (reach_[a.target][a.source]) {
                acyclic_ = false;
                period_ = std::gcd(period_, std::abs(a.degree));
                if (a.degree < 0)
                    cycles_nonnegative_ = false;
            }

        // Degree bounds of paths x -> w, per target w.
        lo_.assign(n, std::vector<long long>(n, inf));
        hi_.assign(n, std::vector<long long>(n, -inf));
        for (int w = 0; w < n; ++w) {
            auto& lo = lo_[w];
            auto& hi = hi_[w];
            lo[w] = 0;
            hi[w] = 0;
            for (int round = 0; round < 2 * n + 2; ++round) {
                bool late = round >= n;
                for (const auto& a : arrows_) {
                    int x = a.source, y = a.target;
                    if (lo[y] != inf) {
                        long long cand = lo[y] == -inf ? -inf : lo[y] + a.degree;
                        if (cand < lo[x])
                            lo[x] = late ? -inf : cand;
                    }
                    if (hi[y] != -inf) {
                        long long cand = hi[y] == inf ? inf : hi[y] + a.degree;
                        if (cand > hi[x])
                            hi[x] = late ? inf : cand;
                    }
                }
            }
        }

        finite_ = !has_infinite_path_family();
        if (finite_) {
            for (int v = 0; v < n; ++v) {
                PathWord p;
                collect_degrees(v, v, 0, p);
            }
        }
    }

    bool has_infinite_path_family() const
    {
        std::size_t keep = 0;
        for (const auto& m : monomials_)
            keep = std::max(keep, m.size());
        keep = keep > 0 ? keep - 1 : 0;
        using State = std::pair<int, PathWord>;
        std::map<State, int> color;
        bool cyclic = false;
        // Iterative-enough recursion: state graphs here are tiny.
        std::function<void(const State&)> visit = [&](const State& s) {
            color[s] = 1;
            for (int a = 0; a < static_cast<int>(arrows_.size()) && !cyclic; ++a) {
                if (arrows_[a].source != s.first)
                    continue;
                PathWord ext = s.second;
                ext.push_back(a);
                if (ends_with_monomial(ext))
                    continue;
                if (ext.size() > keep)
                    ext.erase(ext.begin(), ext.end() - static_cast<long>(keep));
                State next{arrows_[a].target, ext};
                auto it = color.find(next);
                if (it == color.end())
                    visit(next);
                else if (it->second == 1)
                    cyclic = true;
            }
            color[s] = 2;
        };
        for (int v = 0; v < num_vertices() && !cyclic; ++v) {
            State s{v, {}};
            if (!color.count(s))
                visit(s);
        }
        return cyclic;
    }

    void collect_degrees(int v, int at, int deg, PathWord& p)
    {
        piece_degrees_[{v, at}].insert(deg);
        if (static_cast<int>(p.size()) >= path_bound_)
            throw ComputationError("path-length bound exceeded while enumerating the algebra");
        for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
            if (arrows_[a].source != at)
                continue;
            p.push_back(a);
            if (!ends_with_monomial(p))
                collect_degrees(v, arrows_[a].target, deg + arrows_[a].degree, p);
            p.pop_back();
        }
    }

    bool feasible(int x, int w, long long remaining) const
    {
        if (!reach_[x][w])
            return false;
        return lo_[w][x] <= remaining && remaining <= hi_[w][x];
    }

    void enumerate(int w, int d, int at, int deg, PathWord& p, std::vector<PathWord>& out) const
    {
        if (at == w && deg == d)
            out.push_back(p);
        bool extendable = false;
        for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
            const Arrow& arr = arrows_[a];
            if (arr.source != at)
                continue;
            p.push_back(a);
            if (!ends_with_monomial(p) && feasible(arr.target, w, static_cast<long long>(d) - deg - arr.degree)) {
                if (static_cast<int>(p.size()) > path_bound_) {
                    extendable = true;
                } else {
                    enumerate(w, d, arr.target, deg + arr.degree, p, out);
                }
            }
            p.pop_back();
        }
        if (extendable)
            throw ComputationError("path-length bound " + std::to_string(path_bound_) +
                                   " exceeded while enumerating a graded piece");
    }

    Piece build_piece(int v, int w, int d) const
    {
        Piece pc;
        pc.source = v;
        pc.target = w;
        pc.degree = d;
        if (v < 0 || w < 0 || v >= num_vertices() || w >= num_vertices())
            throw ComputationError("vertex index out of range");
        std::vector<PathWord> paths;
        if (feasible(v, w, d)) {
            PathWord p;
            enumerate(w, d, v, 0, p, paths);
        }
        // Columns ordered from largest to smallest so that pivots are the
        // leading terms and the standard monomials come out smallest.
        auto smaller = [](const PathWord& a, const PathWord& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        };
        std::sort(paths.begin(), paths.end(), [&](const PathWord& a, const PathWord& b) { return smaller(b, a); });
        std::map<PathWord, std::size_t> column;
        for (std::size_t i = 0; i < paths.size(); ++i)
            column[paths[i]] = i;

        std::vector<Vector> generators;
        for (const auto& path : paths)
            for (const auto& rel : relations_) {
                if (rel.size() < 2)
                    continue;
                for (const auto& term : rel) {
                    const auto& t = term.path;
                    if (t.size() > path.size())
                        continue;
                    for (std::size_t pos = 0; pos + t.size() <= path.size(); ++pos) {
                        if (!std::equal(t.begin(), t.end(), path.begin() + static_cast<long>(pos)))
                            continue;
                        Vector row(paths.size());
                        for (const auto& other : rel) {
                            PathWord full(path.begin(), path.begin() + static_cast<long>(pos));
                            full.insert(full.end(), other.path.begin(), other.path.end());
                            full.insert(full.end(), path.begin() + static_cast<long>(pos + t.size()), path.end());
                            auto c = column.find(full);
                            if (c != column.end())
                                row[c->second] += other.coef;
                        }
                        if (!is_zero(row))
                            generators.push_back(std::move(row));
                    }
                }
            }

        Matrix ideal(generators.size(), paths.size());
        for (std::size_t r = 0; r < generators.size(); ++r)
            for (std::size_t c = 0; c < paths.size(); ++c)
                ideal(r, c) = generators[r][c];
        auto pivots = rref(ideal);
        std::vector<int> pivot_row(paths.size(), -1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            pivot_row[pivots[r]] = static_cast<int>(r);

        std::vector<std::size_t> standard;
        for (std::size_t c = paths.size(); c-- > 0;)
            if (pivot_row[c] < 0)
                standard.push_back(c);
        for (auto c : standard)
            pc.basis.push_back(paths[c]);
        for (std::size_t c = 0; c < paths.size(); ++c) {
            Vector coords(standard.size());
            if (pivot_row[c] < 0) {
                for (std::size_t i = 0; i < standard.size(); ++i)
                    if (standard[i] == c)
                        coords[i] = 1;
            } else {
                for (std::size_t i = 0; i < standard.size(); ++i)
                    coords[i] = -ideal(static_cast<std::size_t>(pivot_row[c]), standard[i]);
            }
            pc.reduction[paths[c]] = std::move(coords);
        }
        return pc;
    }

    std::string preset_;
    int path_bound_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> arrow_ids_;
    std::vector<Relation> relations_;
    std::vector<PathWord> monomials_;
    std::vector<std::vector<bool>> reach_;
    std::vector<std::vector<long long>> lo_, hi_;
    bool finite_ = true;
    bool acyclic_ = true;
    bool cycles_nonnegative_ = true;
    int period_ = 0;
    std::map<std::pair<int, int>, std::set<int>> piece_degrees_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<int, int, int>, std::unique_ptr<Piece>> cache_;
};

using AlgebraPtr = std::shared_ptr<const GradedQuiverAlgebra>;

inline AlgebraPtr build_algebra(const QuiverSpec& spec, int path_bound = GradedQuiverAlgebra::default_path_bound)
{
    return std::make_shared<const GradedQuiverAlgebra>(spec, path_bound);
}

/// Parsed preset string such as "Kr:q=2" or "Kr:q=2,r=3".
struct PresetInfo
{
    std::string family;
    std::map<std::string, int> params;

    int param(const std::string& key) const
    {
        auto it = params.find(key);
        if (it == params.end())
            throw InputError("preset parameter '" + key + "' missing");
        return it->second;
    }
};

inline PresetInfo parse_preset(const std::string& name)
{
    PresetInfo info;
    auto colon = name.find(':');
    if (colon == std::string::npos)
        throw InputError("unknown preset '" + name + "'");
    info.family = name.substr(0, colon);
    std::stringstream rest(name.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("malformed preset parameter '" + item + "' in '" + name + "'");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        int parsed = 0;
        try {
            parsed = std::stoi(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw InputError("malformed preset parameter '" + item + "' in '" + name + "'");
        info.params[key] = parsed;
    }
    auto allowed = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : info.params) {
            bool ok = false;
            for (const char* key : keys)
                ok = ok || k == key;
            if (!ok)
                throw InputError("unexpected preset parameter '" + k + "' in '" + name + "'");
        }
    };
    if (info.family == "A") {
        allowed({"p"});
        if (info.param("p") < 0)
            throw InputError("A:p requires p >= 0");
    } else if (info.family == "B") {
        allowed({"q"});
        if (info.param("q") < 1)
            throw InputError("B:q requires q >= 1");
    } else if (info.family == "Kr") {
        allowed({"q", "r"});
        if (info.param("q") < 0)
            throw InputError("Kr:q requires q >= 0");
        if (info.params.count("r") && info.param("r") < 1)
            throw InputError("Kr:q,r requires r >= 1");
    } else {
        throw InputError("unknown preset '" + name + "'");
    }
    return info;
}

inline std::string block_suffix(int block) { return "@" + std::to_string(block); }

inline QuiverSpec preset_spec(const std::string& name)
{
    PresetInfo info = parse_preset(name);
    QuiverSpec spec;
    spec.preset = name;
    if (info.family == "A") {
        spec.vertices = {"*"};
        spec.arrows = {{"eps", "*", "*", -info.param("p")}};
        spec.relations = {{{"1", {"eps", "eps"}}}};
    } else if (info.family == "B") {
        spec.vertices = {"*"};
        spec.arrows = {{"theta", "*", "*", info.param("q")}};
    } else {
        int q = info.param("q");
        if (!info.params.count("r")) {
            spec.vertices = {"1", "2"};
            spec.arrows = {{"a0", "1", "2", 0}, {"aq", "1", "2", q}};
        } else {
            for (int b = 1; b <= info.param("r"); ++b) {
                std::string s = block_suffix(b);
                spec.vertices.push_back("1" + s);
                spec.vertices.push_back("2" + s);
                spec.arrows.push_back({"a0" + s, "1" + s, "2" + s, 0});
                spec.arrows.push_back({"aq" + s, "1" + s, "2" + s, q});
            }
        }
    }
    return spec;
}

inline AlgebraPtr preset_algebra(const std::string& name)
{
    return build_algebra(preset_spec(name));
}

inline int preset_param(const GradedQuiverAlgebra& a, const std::string& family, const std::string& key)
{
    if (a.preset().empty())
        throw InputError("expected a " + family + " preset algebra");
    PresetInfo info = parse_preset(a.preset());
    if (info.family != family)
        throw InputError("expected a " + family + " preset algebra, got '" + a.preset() + "'");
    return info.param(key);
}

inline bool is_family(const GradedQuiverAlgebra& a, const std::string& family)
{
    if (a.preset().empty())
        return false;
    return parse_preset(a.preset()).family == family;
}

/// Number of Kronecker blocks: 0 for the plain Kr:q preset.
inline int kronecker_blocks(const GradedQuiverAlgebra& a)
{
    PresetInfo info = parse_preset(a.preset());
    return info.params.count("r") ? info.param("r") : 0;
}

} // namespace codp
