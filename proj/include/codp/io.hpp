#pragma once

#include "algebra.hpp"
#include "complex.hpp"
#include "hom.hpp"
#include "lattice.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace codp {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

inline json parse_json_text(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON for " + what + ": " + e.what());
    }
}

namespace detail {

template <class T>
T field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(where + ": field '" + key + "' has the wrong type");
    }
}

inline std::string coef_text(const json& c, const std::string& where)
{
    if (c.is_string())
        return c.get<std::string>();
    if (c.is_number_integer())
        return std::to_string(c.get<long long>());
    throw InputError(where + ": coefficient must be a rational string or an integer");
}

inline std::string resolve_path(const std::string& path, const std::string& base_dir)
{
    std::filesystem::path p(path);
    if (p.is_relative() && !base_dir.empty() && !std::filesystem::exists(p))
        return (std::filesystem::path(base_dir) / p).string();
    return path;
}

} // namespace detail

inline QuiverSpec spec_from_json(const json& j)
{
    const std::string where = "algebra";
    QuiverSpec spec;
    spec.vertices = detail::field<std::vector<std::string>>(j, "vertices", where);
    for (const auto& a : detail::field<json>(j, "arrows", where)) {
        QuiverSpec::ArrowSpec as;
        as.name = detail::field<std::string>(a, "name", where + " arrow");
        as.source = detail::field<std::string>(a, "src", where + " arrow '" + as.name + "'");
        as.target = detail::field<std::string>(a, "tgt", where + " arrow '" + as.name + "'");
        as.degree = detail::field<int>(a, "deg", where + " arrow '" + as.name + "'");
        spec.arrows.push_back(as);
    }
    if (j.contains("relations"))
        for (const auto& rel : j.at("relations")) {
            std::vector<QuiverSpec::TermSpec> terms;
            for (const auto& t : rel)
                terms.push_back({detail::coef_text(detail::field<json>(t, "coef", "relation term"), "relation term"),
                                 detail::field<std::vector<std::string>>(t, "path", "relation term")});
            spec.relations.push_back(terms);
        }
    return spec;
}

inline bool looks_like_preset(const std::string& ref)
{
    auto colon = ref.find(':');
    if (colon == std::string::npos)
        return false;
    std::string fam = ref.substr(0, colon);
    return fam == "A" || fam == "B" || fam == "Kr";
}

/// A preset string, an algebra JSON file, or an inline JSON object.
inline AlgebraPtr load_algebra(const json& ref, const std::string& base_dir = "")
{
    if (ref.is_object())
        return build_algebra(spec_from_json(ref));
    if (!ref.is_string())
        throw InputError("algebra must be a preset string, a file path or an object");
    std::string s = ref.get<std::string>();
    if (looks_like_preset(s))
        return preset_algebra(s);
    std::string path = detail::resolve_path(s, base_dir);
    if (!std::filesystem::exists(path))
        throw InputError("unknown preset or missing algebra file '" + s + "'");
    return build_algebra(spec_from_json(read_json_file(path)));
}

inline json algebra_to_json(const GradedQuiverAlgebra& A)
{
    if (!A.preset().empty())
        return A.preset();
    json j;
    j["vertices"] = A.vertices();
    j["arrows"] = json::array();
    for (const auto& a : A.arrows())
        j["arrows"].push_back({{"name", a.name}, {"src", A.vertices()[a.source]}, {"tgt", A.vertices()[a.target]},
                               {"deg", a.degree}});
    j["relations"] = json::array();
    for (const auto& rel : A.relations()) {
        json r = json::array();
        for (const auto& t : rel) {
            std::vector<std::string> names;
            for (int a : t.path)
                names.push_back(A.arrows()[a].name);
            r.push_back({{"coef", to_string(t.coef)}, {"path", names}});
        }
        j["relations"].push_back(r);
    }
    return j;
}

inline json element_to_json(const GradedQuiverAlgebra& A, const Element& e)
{
    json out = json::array();
    for (const auto& [path, coef] : e.terms) {
        std::vector<std::string> names;
        for (int a : path)
            names.push_back(A.arrows()[a].name);
        out.push_back({{"coef", to_string(coef)}, {"path", names}});
    }
    return out;
}

inline Element element_from_json(const GradedQuiverAlgebra& A, int source, const json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": 'elem' must be a list of terms");
    std::optional<Element> sum;
    for (const auto& t : j) {
        Rational c = parse_rational(detail::coef_text(detail::field<json>(t, "coef", where), where));
        PathWord word;
        for (const auto& name : detail::field<std::vector<std::string>>(t, "path", where))
            word.push_back(A.arrow_index(name));
        for (std::size_t k = 0; k + 1 < word.size(); ++k)
            if (A.arrows()[word[k]].target != A.arrows()[word[k + 1]].source)
                throw InputError(where + ": path is not composable");
        if (!word.empty() && A.arrows()[word.front()].source != source)
            throw InputError(where + ": path does not start at the source term's vertex");
        Element e = A.path(source, word, c);
        if (!sum)
            sum = e;
        else {
            if (sum->target != e.target || sum->degree != e.degree)
                throw InputError(where + ": terms with different endpoints or degrees");
            *sum += e;
        }
    }
    if (!sum)
        throw InputError(where + ": empty element");
    return *sum;
}

inline int vertex_from_json(const GradedQuiverAlgebra& A, const json& v, const std::string& where)
{
    if (v.is_string())
        return A.vertex_index(v.get<std::string>());
    if (v.is_number_integer()) {
        int k = v.get<int>();
        if (k < 0 || k >= A.num_vertices())
            throw InputError(where + ": vertex index out of range");
        return k;
    }
    throw InputError(where + ": vertex must be a label or an index");
}

/// Reads a complex; when `context` is given, the complex's own algebra must
/// agree with it.
inline TwistedComplex complex_from_json(const json& j, const AlgebraPtr& context = nullptr,
                                        const std::string& base_dir = "")
{
    const std::string where = "complex";
    AlgebraPtr A = context;
    if (j.contains("algebra")) {
        AlgebraPtr own = load_algebra(j.at("algebra"), base_dir);
        if (context && !own->same_presentation(*context))
            throw InputError("complex is over a different algebra than requested");
        if (!A)
            A = own;
    }
    if (!A)
        throw InputError("complex does not name its algebra");
    std::vector<Term> terms;
    for (const auto& t : detail::field<json>(j, "terms", where))
        terms.push_back(Term{vertex_from_json(*A, detail::field<json>(t, "vertex", "term"), "term"),
                             detail::field<int>(t, "shift", "term")});
    std::vector<std::tuple<int, int, Element>> entries;
    if (j.contains("entries"))
        for (const auto& e : j.at("entries")) {
            int from = detail::field<int>(e, "from", "entry");
            int to = detail::field<int>(e, "to", "entry");
            if (from < 0 || to < 0 || from >= static_cast<int>(terms.size()) || to >= static_cast<int>(terms.size()))
                throw InputError("entry references a missing term");
            std::string w = "entry " + std::to_string(from) + "->" + std::to_string(to);
            entries.emplace_back(from, to, element_from_json(*A, terms[from].vertex, detail::field<json>(e, "elem", w), w));
        }
    return make_complex(A, terms, entries);
}

inline json complex_to_json(const TwistedComplex& x)
{
    const auto& A = x.algebra();
    json j;
    j["algebra"] = algebra_to_json(A);
    j["terms"] = json::array();
    for (const auto& t : x.terms())
        j["terms"].push_back({{"vertex", A.vertices()[t.vertex]}, {"shift", t.shift}});
    j["entries"] = json::array();
    for (const auto& [key, e] : x.entries())
        j["entries"].push_back({{"from", key.first}, {"to", key.second}, {"elem", element_to_json(A, e)}});
    return j;
}

inline json morphism_to_json(const Morphism& f)
{
    const auto& A = f.source.algebra();
    json j;
    j["degree"] = f.degree;
    j["entries"] = json::array();
    for (const auto& [key, e] : f.entries)
        j["entries"].push_back({{"from", key.first}, {"to", key.second}, {"elem", element_to_json(A, e)}});
    return j;
}

inline json ext_to_json(const ExtResult& r)
{
    json j;
    j["series"] = r.series.str();
    j["certified"] = r.certified;
    j["window"] = {r.lo, r.hi};
    json dims = json::object();
    for (auto [n, d] : r.dims)
        if (d != 0)
            dims[std::to_string(n)] = d;
    j["dims"] = dims;
    if (r.tail)
        j["tail"] = {{"period", r.tail->period}, {"start", r.tail->start}};
    else
        j["tail"] = nullptr;
    return j;
}

inline IntMatrix int_matrix_from_json(const json& j)
{
    if (!j.is_array())
        throw InputError("matrix must be a list of rows");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array())
            throw InputError("matrix row must be a list");
        std::vector<Integer> r;
        for (const auto& v : row) {
            if (v.is_number_integer())
                r.emplace_back(std::to_string(v.get<long long>()));
            else if (v.is_string()) {
                Integer z;
                if (z.set_str(v.get<std::string>(), 10) != 0)
                    throw InputError("matrix entry is not an integer");
                r.push_back(z);
            } else
                throw InputError("matrix entry is not an integer");
        }
        m.push_back(r);
    }
    return m;
}

inline LatticeMap lattice_from_json(const json& j)
{
    LatticeMap l;
    if (j.is_array())
        l.matrix = int_matrix_from_json(j);
    else {
        l.matrix = int_matrix_from_json(detail::field<json>(j, "matrix", "lattice"));
        if (j.contains("rows"))
            l.row_labels = j.at("rows").get<std::vector<std::string>>();
        if (j.contains("cols"))
            l.col_labels = j.at("cols").get<std::vector<std::string>>();
    }
    l.validate();
    return l;
}

namespace detail {

inline bool parse_integer(const std::string& s, Integer& out)
{
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r')
            t.push_back(c);
    return !t.empty() && out.set_str(t, 10) == 0;
}

inline std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace detail

/// CSV with an optional header row of column labels and an optional first
/// column of row labels.
inline LatticeMap lattice_from_csv(const std::string& text)
{
    LatticeMap l;
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> cells;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty())
            continue;
        std::vector<std::string> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(detail::trim(cell));
        cells.push_back(row);
    }
    if (cells.empty())
        throw InputError("empty CSV matrix");
    Integer z;
    bool header = false;
    for (std::size_t c = 1; c < cells[0].size(); ++c)
        header = header || !detail::parse_integer(cells[0][c], z);
    if (cells[0].size() == 1)
        header = !detail::parse_integer(cells[0][0], z);
    std::size_t first = header ? 1 : 0;
    bool row_labels = first < cells.size() && !detail::parse_integer(cells[first][0], z);
    if (header)
        for (std::size_t c = row_labels ? 1 : 0; c < cells[0].size(); ++c)
            l.col_labels.push_back(cells[0][c]);
    for (std::size_t r = first; r < cells.size(); ++r) {
        std::vector<Integer> row;
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            if (c == 0 && row_labels) {
                l.row_labels.push_back(cells[r][c]);
                continue;
            }
            Integer v;
            if (!detail::parse_integer(cells[r][c], v))
                throw InputError("CSV entry '" + cells[r][c] + "' is not an integer");
            row.push_back(v);
        }
        l.matrix.push_back(row);
    }
    if (l.matrix.empty())
        throw InputError("CSV matrix has a header but no rows");
    l.validate();
    return l;
}

/// {"components": [labels], "rational": [bools], "adjacency": [[mult]]}
/// or an "edges" list of {"u", "v", "mult"}.
inline DualGraph dual_graph_from_json(const json& j)
{
    DualGraph g;
    g.labels = detail::field<std::vector<std::string>>(j, "components", "dual graph");
    if (j.contains("rational"))
        g.rational = j.at("rational").get<std::vector<bool>>();
    else
        g.rational.assign(g.labels.size(), true);
    auto index = [&](const json& v) {
        if (v.is_number_integer())
            return v.get<int>();
        auto s = v.get<std::string>();
        for (int i = 0; i < g.size(); ++i)
            if (g.labels[i] == s)
                return i;
        throw InputError("unknown component '" + s + "'");
    };
    if (j.contains("adjacency")) {
        const auto& adj = j.at("adjacency");
        if (!adj.is_array() || static_cast<int>(adj.size()) != g.size())
            throw InputError("adjacency must be a square matrix over the components");
        for (int u = 0; u < g.size(); ++u) {
            if (!adj[u].is_array() || static_cast<int>(adj[u].size()) != g.size())
                throw InputError("adjacency must be a square matrix over the components");
            for (int v = u; v < g.size(); ++v) {
                int m = adj[u][v].get<int>();
                if (adj[v][u].get<int>() != m)
                    throw InputError("adjacency matrix is not symmetric");
                if (m > 0)
                    g.edges.push_back({u, v, m});
                else if (m < 0)
                    throw InputError("negative edge multiplicity");
            }
        }
    }
    if (j.contains("edges"))
        for (const auto& e : j.at("edges"))
            g.edges.push_back({index(e.at("u")), index(e.at("v")), e.contains("mult") ? e.at("mult").get<int>() : 1});
    g.validate();
    return g;
}

} // namespace codp
