#pragma once

#include "complex.hpp"
#include "linalg.hpp"
#include "series.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codp {

/// Hom^n(X, Y) as a direct sum of graded pieces, one block per term pair.
class HomSpace
{
public:
    struct Block
    {
        int i = 0; // source term
        int j = 0; // target term
        const Piece* piece = nullptr;
        std::size_t offset = 0;
    };

    HomSpace(const TwistedComplex& x, const TwistedComplex& y, int n) : x_(x), y_(y), n_(n)
    {
        const auto& A = x.algebra();
        for (int i = 0; i < x.size(); ++i)
            for (int j = 0; j < y.size(); ++j) {
                const Piece& pc = A.piece(x.term(i).vertex, y.term(j).vertex, n + y.term(j).shift - x.term(i).shift);
                if (pc.dim() == 0)
                    continue;
                index_[{i, j}] = blocks_.size();
                blocks_.push_back(Block{i, j, &pc, dim_});
                dim_ += pc.dim();
            }
    }

    std::size_t dim() const { return dim_; }
    int degree() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const TwistedComplex& source() const { return x_; }
    const TwistedComplex& target() const { return y_; }

    Vector to_vector(const EntryMap& entries) const
    {
        Vector v(dim_);
        for (const auto& [key, e] : entries) {
            if (e.is_zero())
                continue;
            auto it = index_.find(key);
            if (it == index_.end())
                throw ComputationError("morphism entry outside the Hom space");
            const Block& b = blocks_[it->second];
            for (std::size_t k = 0; k < b.piece->dim(); ++k)
                v[b.offset + k] = e.coefficient(b.piece->basis[k]);
        }
        return v;
    }

    Vector to_vector(const Morphism& f) const { return to_vector(f.entries); }

    EntryMap to_entries(const Vector& v) const
    {
        EntryMap out;
        const auto& A = x_.algebra();
        for (const auto& b : blocks_) {
            Vector coords(v.begin() + static_cast<long>(b.offset),
                          v.begin() + static_cast<long>(b.offset + b.piece->dim()));
            if (is_zero(coords))
                continue;
            out[{b.i, b.j}] = A.from_coords(b.piece->source, b.piece->target, b.piece->degree, coords);
        }
        return out;
    }

    Morphism to_morphism(const Vector& v) const { return Morphism{x_, y_, n_, to_entries(v)}; }

    Morphism basis_morphism(std::size_t k) const
    {
        Vector v(dim_);
        v[k] = 1;
        return to_morphism(v);
    }

private:
    TwistedComplex x_, y_;
    int n_;
    std::vector<Block> blocks_;
    std::map<EntryKey, std::size_t> index_;
    std::size_t dim_ = 0;
};

/// Matrix of d: Hom^n -> Hom^{n+1}, columns indexed by the basis of from.
inline Matrix differential_matrix(const HomSpace& from, const HomSpace& to)
{
    Matrix m(to.dim(), from.dim());
    for (std::size_t k = 0; k < from.dim(); ++k) {
        Morphism f = from.basis_morphism(k);
        Vector col = to.to_vector(differential(f));
        m.set_column(k, col);
    }
    return m;
}

/// Cohomology of the Hom complex in a single degree, with representatives.
class CohomologySpace
{
public:
    CohomologySpace(const TwistedComplex& x, const TwistedComplex& y, int n)
        : prev_(x, y, n - 1), here_(x, y, n), next_(x, y, n + 1), boundaries_(here_.dim())
    {
        Matrix d_in = differential_matrix(prev_, here_);
        for (std::size_t c = 0; c < d_in.cols(); ++c)
            boundaries_.add(d_in.column(c));
        Matrix d_out = differential_matrix(here_, next_);
        rank_out_ = rank(d_out);
        RowSpan span = boundaries_;
        for (auto& z : kernel(d_out))
            if (span.add(z))
                reps_.push_back(z);
    }

    std::size_t dim() const { return reps_.size(); }
    std::size_t rank_out() const { return rank_out_; }
    std::size_t rank_in() const { return boundaries_.size(); }
    const HomSpace& space() const { return here_; }
    const std::vector<Vector>& representative_vectors() const { return reps_; }

    Morphism representative(std::size_t k) const { return here_.to_morphism(reps_[k]); }

    std::vector<Morphism> representatives() const
    {
        std::vector<Morphism> out;
        for (std::size_t k = 0; k < reps_.size(); ++k)
            out.push_back(representative(k));
        return out;
    }

    bool is_coboundary(const Morphism& f) const { return boundaries_.contains(here_.to_vector(f)); }

    /// Coordinates of the class of a cocycle f in the representative basis.
    Vector class_of(const Morphism& f) const
    {
        Vector target = here_.to_vector(f);
        // Columns: representatives, then a spanning set of boundaries.
        Matrix m(here_.dim(), reps_.size() + boundary_vectors().size());
        for (std::size_t c = 0; c < reps_.size(); ++c)
            m.set_column(c, reps_[c]);
        const auto& bv = boundary_vectors();
        for (std::size_t c = 0; c < bv.size(); ++c)
            m.set_column(reps_.size() + c, bv[c]);
        auto sol = solve(m, target);
        if (!sol)
            throw ComputationError("morphism is not a cocycle");
        return Vector(sol->begin(), sol->begin() + static_cast<long>(reps_.size()));
    }

private:
    const std::vector<Vector>& boundary_vectors() const
    {
        if (!boundary_cache_) {
            boundary_cache_.emplace();
            Matrix d_in = differential_matrix(prev_, here_);
            for (std::size_t c = 0; c < d_in.cols(); ++c)
                boundary_cache_->push_back(d_in.column(c));
        }
        return *boundary_cache_;
    }

    HomSpace prev_, here_, next_;
    RowSpan boundaries_;
    std::size_t rank_out_ = 0;
    std::vector<Vector> reps_;
    mutable std::optional<std::vector<Vector>> boundary_cache_;
};

struct ExtTail
{
    int period = 0;
    int start = 0;
};

struct ExtResult
{
    int lo = 0;
    int hi = -1;
    std::map<int, long long> dims;
    std::map<int, std::vector<Morphism>> cocycles;
    std::optional<ExtTail> tail;
    PoincareSeries series;
    bool certified = false;

    bool partial() const { return !certified; }

    long long dim(int n) const
    {
        if (certified)
            return series.coefficient(n);
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }

    /// Total dimension; only finite for polynomial series.
    long long total() const
    {
        if (certified && !series.is_polynomial())
            throw ComputationError("total dimension of an infinite Ext");
        long long sum = 0;
        for (auto [n, d] : dims)
            sum += d;
        return sum;
    }

    bool finite() const { return certified && series.is_polynomial(); }
};

inline std::optional<std::pair<int, int>> window_from_env()
{
    const char* env = std::getenv("CODP_WINDOW");
    if (!env || !*env)
        return std::nullopt;
    std::string s(env);
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos)
            throw InputError("");
        std::size_t a = 0, b = 0;
        int lo = std::stoi(s.substr(0, colon), &a);
        int hi = std::stoi(s.substr(colon + 1), &b);
        if (a != colon || b != s.size() - colon - 1 || lo > hi)
            throw InputError("");
        return std::make_pair(lo, hi);
    } catch (const std::exception&) {
        throw InputError("CODP_WINDOW must look like 'lo:hi', got '" + s + "'");
    }
}

namespace detail {

inline int max_entry_degree(const TwistedComplex& x)
{
    int m = 0;
    for (const auto& [key, e] : x.entries())
        m = std::max(m, x.entry_degree(key.first, key.second));
    return m;
}

/// Degree range [lo, hi] outside which Hom^n(X, Y) vanishes, for a
/// finite-dimensional algebra.
inline std::optional<std::pair<int, int>> finite_support(const TwistedComplex& x, const TwistedComplex& y)
{
    const auto& A = x.algebra();
    std::optional<std::pair<int, int>> range;
    for (const auto& s : x.terms())
        for (const auto& t : y.terms())
            for (int d : A.piece_degrees(s.vertex, t.vertex)) {
                int n = d - t.shift + s.shift;
                if (!range)
                    range = std::make_pair(n, n);
                range->first = std::min(range->first, n);
                range->second = std::max(range->second, n);
            }
    return range;
}

} // namespace detail

/// Graded Ext between twisted complexes over a common algebra.
inline ExtResult ext(const TwistedComplex& x, const TwistedComplex& y,
                     std::optional<std::pair<int, int>> window = std::nullopt, bool with_cocycles = true)
{
    if (!x.algebra().same_presentation(y.algebra()))
        throw InputError("ext between complexes over different algebras");
    const auto& A = x.algebra();
    if (!window)
        window = window_from_env();

    ExtResult res;
    bool finite = A.finite_dimensional();
    int period = 0;
    if (!window) {
        if (finite) {
            auto support = detail::finite_support(x, y);
            if (!support) {
                res.lo = 0;
                res.hi = -1;
                res.certified = true;
                return res;
            }
            window = support;
        } else {
            if (!A.cycles_nonnegative() || A.cycle_period() <= 0)
                throw ComputationError("no automatic Ext window for this algebra; set CODP_WINDOW");
            period = A.cycle_period();
            std::optional<int> lo, hi;
            for (const auto& s : x.terms())
                for (const auto& t : y.terms()) {
                    if (!A.reachable(s.vertex, t.vertex))
                        continue;
                    long long low = A.min_path_degree(s.vertex, t.vertex);
                    int cand_lo = static_cast<int>(low) - t.shift + s.shift;
                    int cand_hi = s.shift - t.shift;
                    lo = lo ? std::min(*lo, cand_lo) : cand_lo;
                    hi = hi ? std::max(*hi, cand_hi) : cand_hi;
                }
            if (!lo) {
                res.certified = true;
                return res;
            }
            int margin = std::max(detail::max_entry_degree(x), detail::max_entry_degree(y)) + 2;
            window = std::make_pair(*lo - 1, *hi + margin + 3 * period + 1);
        }
    } else if (!finite && A.cycles_nonnegative() && A.cycle_period() > 0) {
        period = A.cycle_period();
    }

    const int lo = window->first;
    const int hi = window->second;
    res.lo = lo;
    res.hi = hi;

    // Hom spaces and differentials for degrees lo-1 .. hi+1.
    std::map<int, HomSpace> spaces;
    for (int n = lo - 1; n <= hi + 1; ++n)
        spaces.emplace(n, HomSpace(x, y, n));
    std::map<int, Matrix> dmat;
    for (int n = lo - 1; n <= hi; ++n)
        dmat.emplace(n, differential_matrix(spaces.at(n), spaces.at(n + 1)));

    struct Data
    {
        std::size_t hom = 0, rank = 0;
        long long h = 0;
        bool operator==(const Data& o) const { return hom == o.hom && rank == o.rank && h == o.h; }
    };
    std::map<int, Data> data;
    for (int n = lo; n <= hi; ++n) {
        const Matrix& din = dmat.at(n - 1);
        const Matrix& dout = dmat.at(n);
        Data dd;
        dd.hom = spaces.at(n).dim();
        std::size_t rin = rank(din);
        dd.rank = rank(dout);
        dd.h = static_cast<long long>(dd.hom) - static_cast<long long>(dd.rank) - static_cast<long long>(rin);
        data[n] = dd;
        res.dims[n] = dd.h;
        if (with_cocycles && dd.h > 0) {
            RowSpan span(spaces.at(n).dim());
            for (std::size_t c = 0; c < din.cols(); ++c)
                span.add(din.column(c));
            auto& reps = res.cocycles[n];
            for (auto& z : kernel(dout))
                if (span.add(z))
                    reps.push_back(spaces.at(n).to_morphism(z));
        }
    }

    if (finite) {
        auto support = detail::finite_support(x, y);
        bool covered = !support || (support->first >= lo && support->second <= hi);
        LaurentPoly poly;
        for (auto [n, d] : res.dims)
            poly.add_term(n, d);
        res.series = PoincareSeries(poly);
        res.certified = covered;
        return res;
    }

    if (period > 0) {
        // Smallest start from which the data repeats with the period up to hi.
        int start = hi - period + 1;
        while (start - 1 >= lo && start - 1 + period <= hi && data[start - 1] == data[start - 1 + period])
            --start;
        if (hi - period - start + 1 >= 2 * period) {
            LaurentPoly head, cycle;
            for (int n = lo; n < start; ++n)
                head.add_term(n, data[n].h);
            for (int n = start; n < start + period; ++n)
                cycle.add_term(n, data[n].h);
            res.tail = ExtTail{period, start};
            res.series = PoincareSeries(head) + PoincareSeries(cycle, {period});
            res.certified = true;
            return res;
        }
    }
    LaurentPoly poly;
    for (auto [n, d] : res.dims)
        poly.add_term(n, d);
    res.series = PoincareSeries(poly);
    res.certified = false;
    return res;
}

/// Euler pairing sum (-1)^n dim Ext^n, for finite Ext.
inline long long euler_pairing(const TwistedComplex& x, const TwistedComplex& y)
{
    ExtResult r = ext(x, y, std::nullopt, false);
    if (!r.finite())
        throw ComputationError("Euler pairing of an infinite or uncertified Ext");
    long long chi = 0;
    for (auto [n, c] : r.series.numerator().terms())
        chi += sign_power(n) * c;
    return chi;
}

} // namespace codp
