#pragma once

#include "calculus.hpp"
#include "io.hpp"
#include "koszul.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace codp {

/// K_+ = [P1[0], P2[-1]] with a0 and K_- = [P1[0], P2[q-1]] with aq, in
/// the given Kronecker block (0 for the plain preset).
inline TwistedComplex kronecker_k(const AlgebraPtr& kr, bool plus, int block = 0)
{
    const int q = preset_param(*kr, "Kr", "q");
    const int off = block > 0 ? 2 * (block - 1) : 0;
    TwistedComplex k(kr, {Term{off, 0}, Term{off + 1, plus ? -1 : q - 1}});
    k.set_entry(0, 1, kr->arrow(off + (plus ? 0 : 1)));
    return k;
}

/// The torsion complex B[1-q] -> B with differential theta.
inline TwistedComplex k_b(const AlgebraPtr& B)
{
    const int q = preset_param(*B, "B", "q");
    TwistedComplex k(B, {Term{0, 1 - q}, Term{0, 0}});
    k.set_entry(0, 1, B->arrow(0));
    return k;
}

namespace detail {

inline int parse_int(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("expected an integer for " + what + ", got '" + s + "'");
    }
}

inline std::string names_for(const GradedQuiverAlgebra& A)
{
    if (is_family(A, "Kr"))
        return kronecker_blocks(A) > 0 ? "E@b, E'@b, K+@b, K-@b, P:<vertex>"
                                       : "E, E', K+, K-, helix:<i>, P:<vertex>";
    if (is_family(A, "B"))
        return "freeB, kB, M, M:<i>, P:<vertex>";
    if (is_family(A, "A"))
        return "A, trunc:<i>, P:<vertex>";
    return "P:<vertex>";
}

} // namespace detail

/// A named object over the algebra; `block` is the "@b" suffix or 0.
inline TwistedComplex builtin_object(const AlgebraPtr& A, const std::string& name, int block = 0)
{
    const auto& alg = *A;
    auto unknown = [&]() {
        return InputError("unknown object '" + name + "' over " +
                          (alg.preset().empty() ? std::string("a custom algebra") : alg.preset()) +
                          " (known: " + detail::names_for(alg) + ")");
    };
    if (name.rfind("P:", 0) == 0) {
        if (block > 0)
            throw InputError("P:<vertex> takes the vertex label directly");
        return projective(A, alg.vertex_index(name.substr(2)), 0);
    }
    if (alg.preset().empty())
        throw unknown();
    if (is_family(alg, "Kr")) {
        const int blocks = kronecker_blocks(alg);
        if (blocks > 0 && (block < 1 || block > blocks))
            throw InputError("object '" + name + "' over " + alg.preset() + " needs a block suffix @1..@" +
                             std::to_string(blocks));
        if (blocks == 0 && block > 0)
            throw InputError("block suffix on a single Kronecker preset");
        const int off = block > 0 ? 2 * (block - 1) : 0;
        if (name == "E")
            return projective(A, off, 0);
        if (name == "E'")
            return projective(A, off + 1, 0);
        if (name == "K+")
            return kronecker_k(A, true, block);
        if (name == "K-")
            return kronecker_k(A, false, block);
        if (name.rfind("helix:", 0) == 0) {
            if (blocks > 0)
                throw InputError("helix objects are defined over a single Kr:q preset");
            return helix_object(A, detail::parse_int(name.substr(6), "helix index"));
        }
        throw unknown();
    }
    if (block > 0)
        throw InputError("block suffix is only meaningful over Kr:q,r=<n>");
    if (is_family(alg, "B")) {
        if (name == "freeB")
            return projective(A, 0, 0);
        if (name == "kB")
            return k_b(A);
        if (name == "M")
            return self_extension_object(projective(A, 0, 0), 1);
        if (name.rfind("M:", 0) == 0)
            return self_extension_object(projective(A, 0, 0), detail::parse_int(name.substr(2), "M index"));
        throw unknown();
    }
    if (is_family(alg, "A")) {
        if (name == "A")
            return projective(A, 0, 0);
        if (name.rfind("trunc:", 0) == 0)
            return truncation(A, detail::parse_int(name.substr(6), "truncation index"));
        throw unknown();
    }
    throw unknown();
}

namespace detail {

class ObjectParser
{
public:
    ObjectParser(const std::string& text, const AlgebraPtr& A, const std::string& base_dir)
        : text_(text), A_(A), base_(base_dir)
    {
    }

    TwistedComplex parse()
    {
        TwistedComplex x = expr();
        if (pos_ != text_.size())
            throw InputError("unexpected '" + text_.substr(pos_) + "' in object expression '" + text_ + "'");
        return x;
    }

private:
    TwistedComplex expr()
    {
        TwistedComplex x = atom();
        while (pos_ < text_.size() && text_[pos_] == '[') {
            auto close = text_.find(']', pos_);
            if (close == std::string::npos)
                throw InputError("unterminated shift in '" + text_ + "'");
            int k = parse_int(text_.substr(pos_ + 1, close - pos_ - 1), "shift");
            pos_ = close + 1;
            x = shift(x, k);
        }
        return x;
    }

    TwistedComplex atom()
    {
        if (text_.compare(pos_, 4, "sum(") == 0) {
            pos_ += 4;
            TwistedComplex out(A_);
            while (true) {
                out = direct_sum(out, expr());
                if (pos_ >= text_.size())
                    throw InputError("unterminated sum in '" + text_ + "'");
                if (text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (text_[pos_] == ')') {
                    ++pos_;
                    return out;
                }
                throw InputError("expected ',' or ')' in '" + text_ + "'");
            }
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != '[')
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name.empty())
            throw InputError("empty object name in '" + text_ + "'");
        if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
            std::string path = resolve_path(name, base_);
            json j = read_json_file(path);
            return complex_from_json(j, A_, std::filesystem::path(path).parent_path().string());
        }
        int block = 0;
        auto at = name.rfind('@');
        if (at != std::string::npos && name.rfind("P:", 0) != 0) {
            block = parse_int(name.substr(at + 1), "block index");
            if (block < 1)
                throw InputError("block index must be >= 1");
            name = name.substr(0, at);
        }
        return builtin_object(A_, name, block);
    }

    std::string text_;
    AlgebraPtr A_;
    std::string base_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Object expressions: name["@"b]["[" k "]"], "sum(x,y,...)"["[" k "]"] or
/// a path to a complex JSON file.
inline TwistedComplex resolve_object(const std::string& text, const AlgebraPtr& A, const std::string& base_dir = "")
{
    return detail::ObjectParser(text, A, base_dir).parse();
}

} // namespace codp
