#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace codp {

/// Finite Laurent polynomial in t with integer coefficients.
class LaurentPoly
{
public:
    LaurentPoly() = default;
    LaurentPoly(long long constant) { add_term(0, constant); }

    static LaurentPoly monomial(int degree, long long coef = 1)
    {
        LaurentPoly p;
        p.add_term(degree, coef);
        return p;
    }

    void add_term(int degree, long long coef)
    {
        if (coef == 0)
            return;
        auto& slot = terms_[degree];
        slot += coef;
        if (slot == 0)
            terms_.erase(degree);
    }

    long long coef(int degree) const
    {
        auto it = terms_.find(degree);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }
    int min_degree() const { return terms_.begin()->first; }
    int max_degree() const { return terms_.rbegin()->first; }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (auto [d, c] : o.terms_)
            add_term(d, c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly out = a;
        for (auto [d, c] : b.terms_)
            out.add_term(d, -c);
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly out;
        for (auto [da, ca] : a.terms_)
            for (auto [db, cb] : b.terms_)
                out.add_term(da + db, ca * cb);
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Exact division by (1 - t^q); false if not divisible.
    bool divide_one_minus(int q, LaurentPoly& quotient) const
    {
        quotient = LaurentPoly();
        if (is_zero())
            return true;
        std::map<int, long long> b;
        const int lo = min_degree();
        const int hi = max_degree();
        for (int n = lo; n <= hi; ++n) {
            long long value = coef(n);
            auto prev = b.find(n - q);
            if (prev != b.end())
                value += prev->second;
            if (n > hi - q) {
                if (value != 0)
                    return false;
                continue;
            }
            if (value != 0)
                b[n] = value;
        }
        for (auto [d, c] : b)
            quotient.add_term(d, c);
        return true;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto [d, c] : terms_) {
            long long mag = c < 0 ? -c : c;
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;
            if (d == 0) {
                out += std::to_string(mag);
                continue;
            }
            if (mag != 1)
                out += std::to_string(mag);
            out += "t";
            if (d != 1)
                out += "^" + std::to_string(d);
        }
        return out;
    }

private:
    std::map<int, long long> terms_;
};

/// numerator / prod (1 - t^q) over the denominator exponents.
class PoincareSeries
{
public:
    PoincareSeries() = default;
    PoincareSeries(LaurentPoly numerator, std::vector<int> denominator = {})
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        canonicalize();
    }

    static PoincareSeries geometric(int q) { return PoincareSeries(LaurentPoly(1), {q}); }

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<int>& denominator() const { return den_; }
    bool is_polynomial() const { return den_.empty(); }
    bool is_zero() const { return num_.is_zero(); }

    LaurentPoly denominator_poly() const
    {
        LaurentPoly d(1);
        for (int q : den_)
            d = d * (LaurentPoly(1) - LaurentPoly::monomial(q));
        return d;
    }

    friend PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b)
    {
        std::vector<int> den = a.den_;
        den.insert(den.end(), b.den_.begin(), b.den_.end());
        return PoincareSeries(a.num_ * b.denominator_poly() + b.num_ * a.denominator_poly(), den);
    }

    friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b)
    {
        std::vector<int> den = a.den_;
        den.insert(den.end(), b.den_.begin(), b.den_.end());
        return PoincareSeries(a.num_ * b.num_, den);
    }

    friend bool operator==(const PoincareSeries& a, const PoincareSeries& b)
    {
        return a.num_ * b.denominator_poly() == b.num_ * a.denominator_poly();
    }

    friend bool operator!=(const PoincareSeries& a, const PoincareSeries& b) { return !(a == b); }

    /// Coefficients of t^lo .. t^hi.
    std::vector<long long> window(int lo, int hi) const
    {
        std::vector<long long> out(hi >= lo ? hi - lo + 1 : 0, 0);
        if (num_.is_zero() || out.empty())
            return out;
        const int base = num_.min_degree();
        const int len = hi - base + 1;
        if (len <= 0)
            return out;
        std::vector<long long> expansion(len, 0);
        expansion[0] = 1;
        for (int q : den_)
            for (int n = q; n < len; ++n)
                expansion[n] += expansion[n - q];
        for (auto [d, c] : num_.terms())
            for (int n = std::max(lo, d); n <= hi; ++n)
                if (n - d < len)
                    out[n - lo] += c * expansion[n - d];
        return out;
    }

    long long coefficient(int degree) const { return window(degree, degree)[0]; }

    /// Sum of all coefficients; only meaningful for polynomials.
    long long total() const
    {
        long long sum = 0;
        for (auto [d, c] : num_.terms())
            sum += c;
        return sum;
    }

    std::string str() const
    {
        if (den_.empty())
            return num_.str();
        std::string numer = num_.str();
        if (num_.terms().size() > 1)
            numer = "(" + numer + ")";
        std::string denom;
        for (int q : den_)
            denom += "(1 - t" + (q == 1 ? std::string() : "^" + std::to_string(q)) + ")";
        if (den_.size() > 1)
            denom = "(" + denom + ")";
        return numer + "/" + denom;
    }

private:
    void canonicalize()
    {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::sort(den_.begin(), den_.end());
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < den_.size(); ++i) {
                LaurentPoly quotient;
                if (num_.divide_one_minus(den_[i], quotient)) {
                    num_ = quotient;
                    den_.erase(den_.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    }

    LaurentPoly num_;
    std::vector<int> den_;
};

namespace detail {

struct SeriesParser
{
    const std::string& s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && s[pos] == ' ')
            ++pos;
    }

    bool eat(char c)
    {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long number()
    {
        skip();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-')
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos || (pos == start + 1 && s[start] == '-'))
            throw InputError("bad number in series '" + s + "'");
        return std::stoll(s.substr(start, pos - start));
    }

    bool at_digit()
    {
        skip();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    // term := [digits] ['t' ['^' int]]
    void term(LaurentPoly& p, long long sign)
    {
        long long c = 1;
        bool has_coef = false;
        if (at_digit()) {
            c = number();
            has_coef = true;
        }
        int degree = 0;
        if (eat('t')) {
            degree = 1;
            if (eat('^'))
                degree = static_cast<int>(number());
        } else if (!has_coef) {
            throw InputError("bad term in series '" + s + "'");
        }
        p.add_term(degree, sign * c);
    }

    LaurentPoly poly()
    {
        LaurentPoly p;
        long long sign = eat('-') ? -1 : 1;
        term(p, sign);
        while (true) {
            if (eat('+'))
                term(p, 1);
            else if (eat('-'))
                term(p, -1);
            else
                break;
        }
        return p;
    }

    int one_minus()
    {
        if (!eat('(') || number() != 1 || !eat('-') || !eat('t'))
            throw InputError("bad denominator in series '" + s + "'");
        int q = 1;
        if (eat('^'))
            q = static_cast<int>(number());
        if (!eat(')') || q <= 0)
            throw InputError("bad denominator in series '" + s + "'");
        return q;
    }
};

} // namespace detail

/// Parses the format produced by PoincareSeries::str.
inline PoincareSeries parse_series(const std::string& text)
{
    detail::SeriesParser p{text};
    LaurentPoly num;
    if (p.eat('(')) {
        num = p.poly();
        if (!p.eat(')'))
            throw InputError("unbalanced parenthesis in series '" + text + "'");
    } else {
        num = p.poly();
    }
    std::vector<int> den;
    if (p.eat('/')) {
        p.skip();
        bool grouped = p.pos + 1 < text.size() && text[p.pos] == '(' && text[p.pos + 1] == '(';
        if (grouped)
            p.eat('(');
        den.push_back(p.one_minus());
        while (true) {
            p.skip();
            if (p.pos < text.size() && text[p.pos] == '(')
                den.push_back(p.one_minus());
            else
                break;
        }
        if (grouped && !p.eat(')'))
            throw InputError("unbalanced parenthesis in series '" + text + "'");
    }
    p.skip();
    if (p.pos != text.size())
        throw InputError("trailing characters in series '" + text + "'");
    return PoincareSeries(num, den);
}

} // namespace codp
