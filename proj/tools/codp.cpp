#include <codp/codp.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace codp;

namespace {

struct Report
{
    json j = json::object();
    std::vector<std::pair<std::string, std::string>> rows;
    std::string raw; // printed verbatim instead of rows when set
    int code = 0;

    void row(const std::string& key, const std::string& value) { rows.emplace_back(key, value); }
};

void print(const Report& r, bool as_json)
{
    if (as_json) {
        std::cout << r.j.dump(2) << "\n";
        return;
    }
    if (!r.raw.empty()) {
        std::cout << r.raw;
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : r.rows)
        width = std::max(width, k.size());
    for (const auto& [k, v] : r.rows)
        std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

json check_json(const CheckReport& c)
{
    json ev = json::object();
    for (const auto& [k, v] : c.evidence)
        ev[k] = v;
    json j{{"check", c.check}, {"pass", c.pass}, {"evidence", ev}};
    j["failure"] = c.pass ? json(nullptr) : json(c.failure);
    return j;
}

void add_check(Report& r, const CheckReport& c)
{
    for (const auto& [k, v] : c.evidence)
        r.row(k, v);
    r.row("verdict", c.pass ? "pass" : "fail");
    if (!c.pass)
        r.row("failure", c.failure);
}

void add_object(Report& r, const std::string& key, const TwistedComplex& x)
{
    r.j[key] = complex_to_json(x);
    r.row(key, x.describe());
}

std::string cwd() { return std::filesystem::current_path().string(); }

AlgebraPtr algebra(const std::string& ref) { return load_algebra(json(ref), cwd()); }

TwistedComplex object(const std::string& text, const AlgebraPtr& A) { return resolve_object(text, A, cwd()); }

/// Splits at commas outside parentheses.
std::vector<std::string> split_top(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else
            cur.push_back(c);
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LatticeMap lattice_input(const std::string& matrix, const std::string& file)
{
    if (matrix.empty() == file.empty())
        throw InputError("give exactly one of --matrix or --file");
    if (!matrix.empty())
        return lattice_from_json(parse_json_text(matrix, "--matrix"));
    if (file.size() > 4 && file.substr(file.size() - 4) == ".csv")
        return lattice_from_csv(read_text(file));
    return lattice_from_json(read_json_file(file));
}

std::string matrix_text(const IntMatrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t k = 0; k < m[i].size(); ++k)
            out += (k ? ", " : "") + m[i][k].get_str();
        out += "]";
    }
    return out + "]";
}

json matrix_json(const IntMatrix& m)
{
    json j = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()));
        j.push_back(r);
    }
    return j;
}

Twisted parse_twisted(const std::string& s)
{
    Twisted t;
    std::string name = s;
    auto open = s.find('(');
    if (open != std::string::npos) {
        if (s.back() != ')')
            throw InputError("malformed bundle '" + s + "'");
        name = s.substr(0, open);
        t.twist = detail::parse_int(s.substr(open + 1, s.size() - open - 2), "twist");
    }
    if (name == "O")
        t.bundle = Bundle::O;
    else if (name == "S")
        t.bundle = Bundle::S;
    else if (name == "S'")
        t.bundle = Bundle::Sp;
    else
        throw InputError("unknown bundle '" + name + "' (expected O, S or S')");
    return t;
}

std::string golden_dir(const std::string& override_dir)
{
    if (!override_dir.empty())
        return override_dir;
    if (const char* env = std::getenv("CODP_GOLDEN_DIR"); env && *env)
        return env;
    return CODP_GOLDEN_DIR;
}

std::string to_text(const Integer& z) { return z.get_str(); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Categorical ordinary double points: Ext, mutations, localization and lattice checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string window;
    app.add_flag("--json", as_json, "Emit JSON instead of aligned text");
    app.add_option("--window", window, "Ext window lo:hi (overrides CODP_WINDOW)");

    std::function<Report()> run;

    // ext
    std::string alg_ref, x_text, y_text;
    auto* c_ext = app.add_subcommand("ext", "Graded Ext between two objects");
    c_ext->add_option("--algebra", alg_ref, "Preset or algebra JSON")->required();
    c_ext->add_option("--x", x_text)->required();
    c_ext->add_option("--y", y_text)->required();
    c_ext->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            auto x = object(x_text, A), y = object(y_text, A);
            ExtResult r = ext(x, y);
            Report out;
            out.j = ext_to_json(r);
            out.row("Ext(" + x_text + ", " + y_text + ")", r.series.str());
            out.row("certified", r.certified ? "yes" : "no (partial window)");
            out.row("window", "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
            return out;
        };
    });

    // mutate
    std::string e_text, f_text, side = "left";
    auto* c_mut = app.add_subcommand("mutate", "Left or right mutation across an exceptional object");
    c_mut->add_option("--algebra", alg_ref)->required();
    c_mut->add_option("--e", e_text)->required();
    c_mut->add_option("--f", f_text)->required();
    c_mut->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    c_mut->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            auto e = object(e_text, A), f = object(f_text, A);
            TwistedComplex m = side == "left" ? left_mutate(e, f) : right_mutate(e, f);
            Report out;
            out.j["side"] = side;
            add_object(out, "result", m);
            return out;
        };
    });

    // twist
    std::string k_text;
    auto* c_tw = app.add_subcommand("twist", "Spherical twist T_K(F)");
    c_tw->add_option("--algebra", alg_ref)->required();
    c_tw->add_option("--k", k_text)->required();
    c_tw->add_option("--f", f_text)->required();
    c_tw->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            Report out;
            add_object(out, "result", spherical_twist(object(k_text, A), object(f_text, A)));
            return out;
        };
    });

    // serre
    auto* c_serre = app.add_subcommand("serre", "Serre functor of an object over a finite-dimensional algebra");
    c_serre->add_option("--algebra", alg_ref)->required();
    c_serre->add_option("--x", x_text)->required();
    c_serre->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            Report out;
            add_object(out, "result", serre(object(x_text, A)));
            return out;
        };
    });

    // helix
    int q = 1, index = 0;
    auto* c_hel = app.add_subcommand("helix", "Helix object E_i over Kr_q");
    c_hel->add_option("--q", q)->required()->check(CLI::Range(1, 64));
    c_hel->add_option("--i", index)->required();
    c_hel->callback([&] {
        run = [&] {
            auto A = preset_algebra("Kr:q=" + std::to_string(q));
            Report out;
            out.j["index"] = index;
            add_object(out, "result", helix_object(A, index));
            return out;
        };
    });

    // localize
    int block = 0;
    auto* c_loc = app.add_subcommand("localize", "Localization Kr_{p+1} -> B_{p+1}");
    c_loc->add_option("--algebra", alg_ref)->required();
    c_loc->add_option("--x", x_text)->required();
    c_loc->add_option("--block", block, "Kronecker block (1-based) for block algebras");
    c_loc->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            auto x = object(x_text, A);
            TwistedComplex l = localize(x, block);
            Report out;
            add_object(out, "result", l);
            out.j["smith"] = tables::smith_text(l);
            out.row("smith", tables::smith_text(l));
            return out;
        };
    });

    // koszul-dual
    auto* c_kd = app.add_subcommand("koszul-dual", "Koszul duality A_p -> B_{p+1}");
    c_kd->add_option("--algebra", alg_ref)->required();
    c_kd->add_option("--x", x_text)->required();
    c_kd->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            TwistedComplex k = koszul_dual(object(x_text, A));
            Report out;
            add_object(out, "result", k);
            out.j["smith"] = tables::smith_text(k);
            out.row("smith", tables::smith_text(k));
            return out;
        };
    });

    // trunc
    int p = 0;
    auto* c_tr = app.add_subcommand("trunc", "Truncation A_p^(i)");
    c_tr->add_option("--p", p)->required()->check(CLI::Range(0, 64));
    c_tr->add_option("--i", index)->required();
    c_tr->callback([&] {
        run = [&] {
            auto ap = preset_algebra("A:p=" + std::to_string(p));
            TwistedComplex t = truncation(ap, index);
            auto B = preset_algebra("B:q=" + std::to_string(p + 1));
            ExtResult r = ext(koszul_dual(t), projective(B, 0, 0), std::nullopt, false);
            Report out;
            add_object(out, "result", t);
            out.j["ext_koszul_free"] = ext_to_json(r);
            out.row("Ext(kappa(A^(" + std::to_string(index) + ")), freeB)", r.series.str());
            return out;
        };
    });

    // self-ext
    auto* c_se = app.add_subcommand("self-ext", "Self-extension M of the free B_q-module");
    c_se->add_option("--q", q)->required()->check(CLI::Range(1, 64));
    c_se->add_option("--i", index, "Iteration index (default 1)");
    c_se->callback([&] {
        run = [&] {
            auto B = preset_algebra("B:q=" + std::to_string(q));
            SelfExtension se = self_extension(projective(B, 0, 0), index < 1 ? 1 : index);
            Report out;
            add_object(out, "M", se.m);
            const bool canonical = index < 2;
            out.j["ext_m_p"] = ext_to_json(se.ext_mp);
            out.j["ext_m_m"] = canonical ? ext_to_json(se.ext_mm) : json(nullptr);
            out.j["report"] = check_json(se.report);
            out.row("Ext(M, P)", se.ext_mp.series.str());
            if (canonical)
                out.row("Ext(M, M)", se.ext_mm.series.str());
            out.row("verdict", se.report.pass ? "pass" : "fail");
            if (!se.report.pass)
                out.row("failure", se.report.failure);
            out.code = se.report.pass ? 0 : 1;
            return out;
        };
    });

    // pinfty
    auto* c_pi = app.add_subcommand("pinfty", "Test Ext(X,X) = k[theta]");
    c_pi->add_option("--algebra", alg_ref)->required();
    c_pi->add_option("--x", x_text)->required();
    c_pi->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            PinftyResult r = pinfty_check(object(x_text, A));
            Report out;
            out.j = check_json(r.report);
            out.j["q"] = r.q ? json(*r.q) : json(nullptr);
            add_check(out, r.report);
            if (r.q)
                out.row("q", std::to_string(*r.q));
            out.code = r.report.pass ? 0 : 1;
            return out;
        };
    });

    // absorb
    std::string es_text, ks_text;
    auto* c_ab = app.add_subcommand("absorb", "Absorption pipeline on Kronecker blocks");
    c_ab->add_option("--algebra", alg_ref)->required();
    c_ab->add_option("--es", es_text, "Comma-separated exceptional objects")->required();
    c_ab->add_option("--ks", ks_text, "Comma-separated spherical objects")->required();
    c_ab->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            std::vector<TwistedComplex> es, ks;
            for (const auto& s : split_top(es_text))
                es.push_back(object(s, A));
            for (const auto& s : split_top(ks_text))
                ks.push_back(object(s, A));
            AbsorptionReport r = absorption_report(A, es, ks);
            Report out;
            out.j["p"] = r.p;
            out.j["spherical"] = json::array();
            for (const auto& c : r.spherical)
                out.j["spherical"].push_back(check_json(c));
            out.j["orthogonal"] = check_json(r.orthogonal);
            out.j["adherence"] = r.adherence;
            out.j["recognition"] = json::array();
            for (const auto& c : r.recognition)
                out.j["recognition"].push_back(check_json(c));
            out.j["localized_series"] = r.localized_series;
            out.j["pinfty_q"] = json::array();
            for (const auto& c : r.pinfty)
                out.j["pinfty_q"].push_back(c.q ? json(*c.q) : json(nullptr));
            out.j["pass"] = r.pass;
            out.j["failure"] = r.pass ? json(nullptr) : json(r.failure);
            out.row("p", std::to_string(r.p));
            for (std::size_t i = 0; i < r.spherical.size(); ++i)
                out.row("K" + std::to_string(i + 1) + " spherical", r.spherical[i].pass ? "yes" : "no");
            out.row("K orthogonal", r.orthogonal.pass ? "yes" : "no");
            for (std::size_t i = 0; i < r.adherence.size(); ++i) {
                std::string line;
                for (std::size_t k = 0; k < r.adherence[i].size(); ++k)
                    line += (k ? " " : "") + std::to_string(r.adherence[i][k]);
                out.row("dim Ext(E" + std::to_string(i + 1) + ", K*)", line);
            }
            for (std::size_t i = 0; i < r.recognition.size(); ++i)
                out.row("Kronecker pair " + std::to_string(i + 1), r.recognition[i].pass ? "yes" : "no");
            for (std::size_t i = 0; i < r.localized_series.size(); ++i)
                out.row("Ext(P" + std::to_string(i + 1) + ", P" + std::to_string(i + 1) + ")",
                        r.localized_series[i]);
            out.row("verdict", r.pass ? "pass" : "fail");
            if (!r.pass)
                out.row("failure", r.failure);
            out.code = r.pass ? 0 : 1;
            return out;
        };
    });

    // check
    std::string kind;
    std::vector<std::string> xs;
    int r_sph = 0;
    auto* c_chk = app.add_subcommand("check", "Exceptional, spherical, adherent, orthogonal or Kronecker checks");
    c_chk->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"exceptional", "spherical", "adherent", "orthogonal", "kronecker"}));
    c_chk->add_option("--algebra", alg_ref)->required();
    c_chk->add_option("--x", xs, "Object (repeat for adherent/orthogonal/kronecker: E then K)")->required();
    c_chk->add_option("--r", r_sph, "Sphericity degree");
    c_chk->callback([&] {
        run = [&] {
            auto A = algebra(alg_ref);
            std::vector<TwistedComplex> objs;
            for (const auto& s : xs)
                objs.push_back(object(s, A));
            auto need = [&](std::size_t n) {
                if (objs.size() != n)
                    throw InputError("check " + kind + " takes " + std::to_string(n) + " object(s)");
            };
            CheckReport c;
            Report out;
            if (kind == "exceptional") {
                need(1);
                c = check_exceptional(objs[0]);
            } else if (kind == "spherical") {
                need(1);
                c = check_spherical(objs[0], r_sph);
            } else if (kind == "adherent") {
                need(2);
                c = check_adherent(objs[0], objs[1]);
            } else if (kind == "orthogonal") {
                c = check_orthogonal(objs);
            } else {
                need(2);
                KroneckerResult k = kronecker_recognition(objs[0], objs[1]);
                c = k.report;
                if (k.pair) {
                    out.j["pair"] = {complex_to_json(k.pair->first), complex_to_json(k.pair->second)};
                    out.row("T_K E", k.pair->second.describe());
                }
            }
            json cj = check_json(c);
            for (auto& [key, v] : cj.items())
                out.j[key] = v;
            add_check(out, c);
            out.code = c.pass ? 0 : 1;
            return out;
        };
    });

    // nonfact
    std::string matrix, file;
    auto* c_nf = app.add_subcommand("nonfact", "Nonfactoriality class of a lattice map");
    c_nf->add_option("--matrix", matrix, "JSON integer matrix");
    c_nf->add_option("--file", file, "JSON or CSV matrix file");
    c_nf->callback([&] {
        run = [&] {
            LatticeMap l = lattice_input(matrix, file);
            SmithForm s = snf(l.matrix);
            Nonfactoriality n = nonfactoriality(l);
            Report out;
            out.j["class"] = to_string(n);
            json factors = json::array();
            std::string ftext;
            for (const auto& f : s.factors) {
                factors.push_back(f.fits_slong_p() ? json(f.get_si()) : json(f.get_str()));
                ftext += (ftext.empty() ? "" : " ") + f.get_str();
            }
            out.j["invariant_factors"] = factors;
            out.j["U"] = matrix_json(s.U);
            out.j["D"] = matrix_json(s.D);
            out.j["V"] = matrix_json(s.V);
            out.row("class", to_string(n));
            out.row("invariant factors", ftext.empty() ? "(none)" : ftext);
            out.row("D", matrix_text(s.D));
            return out;
        };
    });

    // survey
    auto* c_sv = app.add_subcommand("survey", "Projectivity of all small resolutions");
    c_sv->add_option("--matrix", matrix, "JSON integer matrix");
    c_sv->add_option("--file", file, "JSON or CSV matrix file");
    c_sv->callback([&] {
        run = [&] {
            LatticeMap l = lattice_input(matrix, file);
            SurveyResult s = small_resolution_survey(l);
            Report out;
            out.j["class"] = to_string(s.nonfactoriality);
            json pats = json::object();
            for (const auto& [sig, ok] : s.patterns) {
                pats[pattern_string(sig)] = ok;
                out.row(pattern_string(sig), ok ? "projective" : "not projective");
            }
            out.j["patterns"] = pats;
            out.j["projective_count"] = s.projective_count;
            out.row("class", to_string(s.nonfactoriality));
            out.row("projective", std::to_string(s.projective_count) + "/" + std::to_string(s.patterns.size()));
            return out;
        };
    });

    // curve-tree
    std::string graph;
    auto* c_ct = app.add_subcommand("curve-tree", "Tree test and rational-leaf peeling of a dual graph");
    c_ct->add_option("--graph", graph, "Inline JSON dual graph");
    c_ct->add_option("--file", file, "Dual graph JSON file");
    c_ct->callback([&] {
        run = [&] {
            if (graph.empty() == file.empty())
                throw InputError("give exactly one of --graph or --file");
            DualGraph g = dual_graph_from_json(graph.empty() ? read_json_file(file) : parse_json_text(graph, "--graph"));
            CurveTreeResult r = curve_tree_analysis(g);
            auto names = [&](const std::vector<int>& v) {
                std::vector<std::string> out;
                for (int i : v)
                    out.push_back(g.labels[i]);
                return out;
            };
            auto join = [](const std::vector<std::string>& v) {
                std::string s;
                for (const auto& x : v)
                    s += (s.empty() ? "" : " ") + x;
                return s.empty() ? std::string("(none)") : s;
            };
            Report out;
            out.j["is_tree"] = r.is_tree;
            out.j["peel_order"] = names(r.peel_order);
            out.j["pinfty_count"] = r.pinfty_count;
            out.j["residual"] = names(r.residual);
            out.row("tree", r.is_tree ? "yes" : "no");
            out.row("peel order", join(names(r.peel_order)));
            out.row("P-infinity objects", std::to_string(r.pinfty_count));
            out.row("residual", join(names(r.residual)));
            return out;
        };
    });

    // quadric-chi
    int d = 1;
    std::string f_b = "S", g_b = "S";
    bool eta = false, table = false;
    auto* c_qc = app.add_subcommand("quadric-chi", "Euler characteristics on a smooth quadric Q^d");
    c_qc->add_option("--d", d)->required()->check(CLI::Range(1, 200));
    c_qc->add_option("--f", f_b, "First bundle: O(m), S(m) or S'(m)");
    c_qc->add_option("--g", g_b, "Second bundle");
    c_qc->add_flag("--eta", eta, "Pairing of the pushforwards to the nodal variety");
    c_qc->add_flag("--table", table, "Full pushforward table with the class K");
    c_qc->callback([&] {
        run = [&] {
            QuadricChi qc(d);
            Report out;
            if (table) {
                EtaTable t = eta_chi_table(qc);
                out.j["labels"] = t.labels;
                json vals = json::array();
                for (std::size_t i = 0; i < t.values.size(); ++i) {
                    json row = json::array();
                    std::string line;
                    for (const auto& v : t.values[i]) {
                        row.push_back(v.get_si());
                        line += (line.empty() ? "" : " ") + to_text(v);
                    }
                    vals.push_back(row);
                    out.row("eta " + t.labels[i], line);
                }
                out.j["values"] = vals;
                out.j["chi_KK"] = t.chi_kk.get_si();
                out.row("chi(K, K)", to_text(t.chi_kk));
                return out;
            }
            Twisted f = parse_twisted(f_b), g = parse_twisted(g_b);
            Integer v = eta ? eta_chi(qc, f, g) : qc.chi(f, g);
            out.j["chi"] = v.fits_slong_p() ? json(v.get_si()) : json(v.get_str());
            out.row(std::string("chi(") + (eta ? "eta " : "") + f_b + ", " + (eta ? "eta " : "") + g_b + ")",
                    to_text(v));
            return out;
        };
    });

    // gram
    auto* c_gr = app.add_subcommand("gram", "Gram matrix of the Kapranov collection on Q^d");
    c_gr->add_option("--d", d)->required()->check(CLI::Range(1, 200));
    c_gr->callback([&] {
        run = [&] {
            GramResult g = gram_kapranov(d);
            Report out;
            out.j["labels"] = g.labels;
            IntMatrix m;
            for (const auto& row : g.gram)
                m.push_back(row);
            out.j["gram"] = matrix_json(m);
            out.j["unitriangular"] = g.unitriangular;
            for (std::size_t i = 0; i < g.gram.size(); ++i) {
                std::string line;
                for (const auto& v : g.gram[i])
                    line += (line.empty() ? "" : " ") + to_text(v);
                out.row(g.labels[i], line);
            }
            out.row("unitriangular", g.unitriangular ? "yes" : "no");
            out.code = g.unitriangular ? 0 : 1;
            return out;
        };
    });

    // spinor-rank
    int n = 2;
    auto* c_sr = app.add_subcommand("spinor-rank", "Rank of the spinor bundle on Q^{n-1}");
    c_sr->add_option("--n", n)->required()->check(CLI::Range(2, 62));
    c_sr->callback([&] {
        run = [&] {
            Report out;
            out.j["rank"] = spinor_rank(n);
            out.row("rank", std::to_string(spinor_rank(n)));
            return out;
        };
    });

    // reproduce
    std::string table_id, gdir;
    bool list = false;
    auto* c_rep = app.add_subcommand("reproduce", "Regenerate a table and diff it against its golden copy");
    c_rep->add_option("id", table_id, "Table id, e.g. exts-tcap:q=2");
    c_rep->add_flag("--list", list, "List the table ids");
    c_rep->add_option("--golden-dir", gdir, "Directory of golden files");
    c_rep->callback([&] {
        run = [&] {
            Report out;
            if (list) {
                out.j["tables"] = tables::table_ids();
                for (const auto& id : tables::table_ids())
                    out.row(id, tables::golden_name(id));
                return out;
            }
            if (table_id.empty())
                throw InputError("reproduce needs a table id (see --list)");
            std::string got = tables::render(table_id);
            std::filesystem::path golden = std::filesystem::path(golden_dir(gdir)) / tables::golden_name(table_id);
            std::string want = std::filesystem::exists(golden) ? read_text(golden.string()) : std::string();
            std::vector<std::string> gl, wl;
            std::string line;
            for (std::istringstream in(got); std::getline(in, line);)
                gl.push_back(line);
            for (std::istringstream in(want); std::getline(in, line);)
                wl.push_back(line);
            json diff = json::array();
            for (std::size_t i = 0; i < std::max(gl.size(), wl.size()); ++i) {
                std::string a = i < gl.size() ? gl[i] : "", b = i < wl.size() ? wl[i] : "";
                if (a != b)
                    diff.push_back({{"line", i + 1}, {"got", a}, {"golden", b}});
            }
            bool match = std::filesystem::exists(golden) && diff.empty();
            out.j["id"] = table_id;
            out.j["golden"] = golden.string();
            out.j["lines"] = gl;
            out.j["match"] = match;
            out.j["diff"] = diff;
            out.raw = got;
            if (!std::filesystem::exists(golden))
                std::cerr << "codp: no golden file " << golden.string() << "\n";
            for (const auto& dl : diff)
                std::cerr << "codp: line " << dl["line"].get<int>() << ": got '" << dl["got"].get<std::string>()
                          << "', golden '" << dl["golden"].get<std::string>() << "'\n";
            if (!match)
                std::cerr << "codp: " << table_id << " does not match its golden copy\n";
            out.code = match ? 0 : 1;
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!window.empty())
            setenv("CODP_WINDOW", window.c_str(), 1);
        window_from_env();
        Report r = run();
        print(r, as_json);
        return r.code;
    } catch (const InputError& e) {
        std::cerr << "codp: input error: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        std::cerr << "codp: computation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "codp: " << e.what() << "\n";
        return 2;
    }
}
