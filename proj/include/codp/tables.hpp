#pragma once

#include "builtins.hpp"
#include "lattice.hpp"
#include "quadric.hpp"
#include "smith.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace codp {

namespace tables {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string smith_text(const TwistedComplex& x)
{
    SmithResult s = smith_decompose(x);
    if (s.summands.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < s.summands.size(); ++i)
        out += (i ? " + " : "") + s.summands[i].str();
    return out;
}

inline std::string exts_tcap(int q)
{
    auto A = preset_algebra("Kr:q=" + std::to_string(q));
    const std::vector<std::string> names{"K-", "E", "E'", "K+"};
    std::ostringstream out;
    for (const auto& a : names)
        for (const auto& b : names) {
            ExtResult r = ext(builtin_object(A, a), builtin_object(A, b), std::nullopt, false);
            out << "Ext(" << a << ", " << b << ") = " << r.series.str() << (r.certified ? "" : " (partial)") << "\n";
        }
    return out.str();
}

inline std::string sphericity(int q)
{
    auto A = preset_algebra("Kr:q=" + std::to_string(q));
    auto kp = builtin_object(A, "K+"), km = builtin_object(A, "K-");
    std::ostringstream out;
    out << "S(K+) = K+[" << 1 + q << "]: " << yes_no(isomorphic(serre(kp), shift(kp, 1 + q))) << "\n";
    out << "S(K-) = K-[" << 1 - q << "]: " << yes_no(isomorphic(serre(km), shift(km, 1 - q))) << "\n";
    out << "S(helix:2) = helix:0[" << 1 - q << "]: "
        << yes_no(isomorphic(serre(helix_object(A, 2)), shift(helix_object(A, 0), 1 - q))) << "\n";
    return out.str();
}

inline std::string localization(int p)
{
    auto A = preset_algebra("Kr:q=" + std::to_string(p + 1));
    auto ap = preset_algebra("A:p=" + std::to_string(p));
    std::ostringstream out;
    for (const char* n : {"E", "E'", "K+", "K-"})
        out << "localize(" << n << ") = " << smith_text(localize(builtin_object(A, n))) << "\n";
    out << "localize(K-) = koszul-dual(A): "
        << yes_no(isomorphic(localize(builtin_object(A, "K-")), koszul_dual(projective(ap, 0, 0)))) << "\n";
    return out.str();
}

inline std::string koszul(int p)
{
    auto ap = preset_algebra("A:p=" + std::to_string(p));
    auto B = preset_algebra("B:q=" + std::to_string(p + 1));
    std::ostringstream out;
    for (int i = 1; i <= 4; ++i) {
        ExtResult r = ext(koszul_dual(truncation(ap, i)), projective(B, 0, 0), std::nullopt, false);
        out << "Ext(kappa(A^(" << i << ")), freeB) = " << r.series.str() << "\n";
    }
    out << "cone = A[" << -p << "] + A[" << p + 1 << "]: " << yes_no(thick_gen_witness(ap).report.pass) << "\n";
    return out.str();
}

inline std::string self_ext(int q)
{
    auto B = preset_algebra("B:q=" + std::to_string(q));
    auto P = projective(B, 0, 0);
    std::ostringstream out;
    SelfExtension se = self_extension(P, 1);
    out << "Ext(M, P) = " << se.ext_mp.series.str() << "\n";
    out << "Ext(M, M) = " << se.ext_mm.series.str() << "\n";
    for (int i = 2; i <= 3; ++i)
        out << "Ext(M^(" << i << "), P) = " << ext(self_extension_object(P, i), P, std::nullopt, false).series.str()
            << "\n";
    return out.str();
}

inline std::string spinor_chi(int d)
{
    QuadricChi q(d);
    std::ostringstream out;
    out << "rank(S) = " << q.rank() << "\n";
    out << "chi(S, S) = " << q.chi(Bundle::S, Bundle::S, 0) << "\n";
    if (q.odd())
        out << "chi(S(1), S) = " << q.chi(Bundle::S, Bundle::S, -1) << "\n";
    else {
        out << "chi(S', S') = " << q.chi(Bundle::Sp, Bundle::Sp, 0) << "\n";
        out << "chi(S, S') = " << q.chi(Bundle::S, Bundle::Sp, 0) << "\n";
        out << "chi(S', S) = " << q.chi(Bundle::Sp, Bundle::S, 0) << "\n";
        out << "chi(S(1), S') = " << q.chi(Bundle::S, Bundle::Sp, -1) << "\n";
        out << "chi(S'(1), S) = " << q.chi(Bundle::Sp, Bundle::S, -1) << "\n";
    }
    out << "chi(O, S) = " << q.chi(Bundle::O, Bundle::S, 0) << "\n";
    return out.str();
}

inline std::string eta_chi(int d)
{
    QuadricChi q(d);
    std::ostringstream out;
    Twisted s{Bundle::S, 0}, sp{Bundle::Sp, 0};
    out << "chi(eta S, eta S) = " << codp::eta_chi(q, s, s) << "\n";
    if (!q.odd())
        out << "chi(eta S, eta S') = " << codp::eta_chi(q, s, sp) << "\n";
    auto k = k_class(q);
    out << "chi(K, K) = " << eta_chi_class(q, k, k) << "\n";
    return out.str();
}

inline IntMatrix delta_matrix(int r)
{
    // (H - D_i).C_j with H.C_j = 1 and D_i.C_j = 1 - delta_ij.
    IntMatrix m(r, std::vector<Integer>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m[i][j] = 1 - (i == j ? 0 : 1);
    return m;
}

inline std::string lattice()
{
    std::vector<std::pair<std::string, IntMatrix>> cases{{"[[1]]", {{1}}}, {"[[2]]", {{2}}}, {"[[0]]", {{0}}}};
    for (int r = 1; r <= 3; ++r)
        cases.push_back({"quintic del Pezzo r=" + std::to_string(r), delta_matrix(r)});
    std::ostringstream out;
    for (const auto& [label, m] : cases) {
        LatticeMap l{m, {}, {}};
        SurveyResult s = small_resolution_survey(l);
        out << label << ": " << to_string(s.nonfactoriality) << ", projective " << s.projective_count << "/"
            << s.patterns.size() << "\n";
    }
    return out.str();
}

struct TableId
{
    std::string family;
    std::map<std::string, int> params;
};

inline TableId parse_table_id(const std::string& id)
{
    TableId t;
    auto colon = id.find(':');
    t.family = id.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream ss(id.substr(colon + 1));
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos)
                throw InputError("malformed table id '" + id + "'");
            try {
                std::size_t used = 0;
                t.params[part.substr(0, eq)] = std::stoi(part.substr(eq + 1), &used);
                if (used != part.size() - eq - 1)
                    throw InputError("");
            } catch (const std::exception&) {
                throw InputError("malformed table id '" + id + "'");
            }
        }
    }
    return t;
}

/// Every table id with a bundled golden file.
inline std::vector<std::string> table_ids()
{
    std::vector<std::string> ids;
    for (int q = 1; q <= 4; ++q)
        ids.push_back("exts-tcap:q=" + std::to_string(q));
    for (int q = 1; q <= 3; ++q)
        ids.push_back("sphericity:q=" + std::to_string(q));
    for (int p = 0; p <= 2; ++p)
        ids.push_back("localization:p=" + std::to_string(p));
    for (int p = 0; p <= 2; ++p)
        ids.push_back("koszul:p=" + std::to_string(p));
    for (int q = 1; q <= 3; ++q)
        ids.push_back("self-ext:q=" + std::to_string(q));
    for (int d = 1; d <= 6; ++d)
        ids.push_back("spinor-chi:d=" + std::to_string(d));
    for (int d = 1; d <= 6; ++d)
        ids.push_back("eta-chi:d=" + std::to_string(d));
    ids.push_back("lattice");
    return ids;
}

inline std::string render(const std::string& id)
{
    TableId t = parse_table_id(id);
    auto param = [&](const char* key, int lo, int hi) {
        auto it = t.params.find(key);
        if (it == t.params.end() || t.params.size() != 1)
            throw InputError("table '" + t.family + "' takes exactly the parameter '" + key + "'");
        if (it->second < lo || it->second > hi)
            throw InputError("parameter " + std::string(key) + " out of range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
        return it->second;
    };
    if (t.family == "exts-tcap")
        return exts_tcap(param("q", 1, 12));
    if (t.family == "sphericity")
        return sphericity(param("q", 1, 8));
    if (t.family == "localization")
        return localization(param("p", 0, 8));
    if (t.family == "koszul")
        return koszul(param("p", 0, 8));
    if (t.family == "self-ext")
        return self_ext(param("q", 1, 8));
    if (t.family == "spinor-chi")
        return spinor_chi(param("d", 1, 40));
    if (t.family == "eta-chi")
        return eta_chi(param("d", 1, 40));
    if (t.family == "lattice") {
        if (!t.params.empty())
            throw InputError("table 'lattice' takes no parameters");
        return lattice();
    }
    throw InputError("unknown table '" + id + "'");
}

/// File name of the golden copy: ':' and ',' become '_', '=' is dropped.
inline std::string golden_name(const std::string& id)
{
    std::string out;
    for (char c : id) {
        if (c == ':' || c == ',')
            out += '_';
        else if (c != '=')
            out += c;
    }
    return out + ".txt";
}

} // namespace tables

} // namespace codp
