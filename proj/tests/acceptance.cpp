#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace codp;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
    int checks = 0;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

/// Poincare polynomial of k[a] + k[b] + ...: k[n] contributes t^{-n}.
PoincareSeries ks(std::initializer_list<int> shifts)
{
    LaurentPoly p;
    for (int n : shifts)
        p.add_term(-n, 1);
    return PoincareSeries(p);
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void expect_golden(Outcome& o, const std::string& id)
{
    auto path = std::filesystem::path(CODP_GOLDEN_DIR) / tables::golden_name(id);
    o.expect(std::filesystem::exists(path), "missing golden " + path.string());
    o.expect(tables::render(id) == read_file(path), id + " differs from its golden copy");
}

Outcome kronecker_ext_table()
{
    Outcome o;
    const std::vector<std::string> names{"K-", "E", "E'", "K+"};
    for (int q = 1; q <= 4; ++q) {
        auto A = preset_algebra("Kr:q=" + std::to_string(q));
        const std::vector<std::vector<PoincareSeries>> want{
            {ks({0, q - 1}), ks({0}), ks({0}), ks({})},
            {ks({q - 1}), ks({0}), ks({0, -q}), ks({-q - 1})},
            {ks({q - 1}), ks({}), ks({0}), ks({-1})},
            {ks({}), ks({0}), ks({-q}), ks({0, -q - 1})},
        };
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                ExtResult r = ext(builtin_object(A, names[a]), builtin_object(A, names[b]), std::nullopt, false);
                o.expect(r.certified && r.series == want[a][b],
                         "q=" + std::to_string(q) + " Ext(" + names[a] + ", " + names[b] + ") = " + r.series.str() +
                             ", expected " + want[a][b].str());
            }
        expect_golden(o, "exts-tcap:q=" + std::to_string(q));
    }
    return o;
}

Outcome sphericality()
{
    Outcome o;
    for (int q = 1; q <= 3; ++q) {
        auto A = preset_algebra("Kr:q=" + std::to_string(q));
        auto kp = builtin_object(A, "K+"), km = builtin_object(A, "K-");
        auto tag = "q=" + std::to_string(q);
        o.expect(iso_test(serre(kp), shift(kp, 1 + q)).iso, tag + ": S(K+) != K+[1+q]");
        o.expect(iso_test(serre(km), shift(km, 1 - q)).iso, tag + ": S(K-) != K-[1-q]");
        o.expect(iso_test(serre(helix_object(A, 2)), shift(helix_object(A, 0), 1 - q)).iso,
                 tag + ": S(helix 2) != helix 0 [1-q]");
        expect_golden(o, "sphericity:" + tag);
    }
    return o;
}

Outcome localization()
{
    Outcome o;
    for (int p = 0; p <= 2; ++p) {
        auto A = preset_algebra("Kr:q=" + std::to_string(p + 1));
        auto B = preset_algebra("B:q=" + std::to_string(p + 1));
        auto ap = preset_algebra("A:p=" + std::to_string(p));
        auto tag = "p=" + std::to_string(p);
        o.expect(iso_test(localize(builtin_object(A, "E")), projective(B, 0)).iso, tag + ": localize(E) != B");
        o.expect(iso_test(localize(builtin_object(A, "E'")), projective(B, 0)).iso, tag + ": localize(E') != B");
        o.expect(is_zero_object(localize(builtin_object(A, "K+"))), tag + ": localize(K+) != 0");
        auto lk = localize(builtin_object(A, "K-"));
        auto point = koszul_dual(projective(ap, 0));
        o.expect(iso_test(lk, point).iso, tag + ": localize(K-) is not the Koszul image of A_p");
        o.expect(ext(point, projective(B, 0)).series == ks({0}), tag + ": Koszul point has Ext(-, B) != k");
        expect_golden(o, "localization:" + tag);
    }
    return o;
}

Outcome koszul_truncation()
{
    Outcome o;
    for (int p = 0; p <= 2; ++p) {
        auto ap = preset_algebra("A:p=" + std::to_string(p));
        auto B = preset_algebra("B:q=" + std::to_string(p + 1));
        for (int i = 1; i <= 4; ++i) {
            ExtResult r = ext(koszul_dual(truncation(ap, i)), projective(B, 0), std::nullopt, false);
            LaurentPoly want;
            for (int k = 0; k < i; ++k)
                want.add_term(k * (p + 1), 1);
            o.expect(r.finite() && r.total() == i && r.series == PoincareSeries(want),
                     "p=" + std::to_string(p) + " i=" + std::to_string(i) + ": " + r.series.str());
        }
        auto w = thick_gen_witness(ap);
        o.expect(w.report.pass, "p=" + std::to_string(p) + ": " + w.report.failure);
        expect_golden(o, "koszul:p=" + std::to_string(p));
    }
    return o;
}

Outcome pinfty_pipeline()
{
    Outcome o;
    for (int p = 0; p <= 2; ++p)
        for (int r = 1; r <= 3; ++r) {
            auto A = preset_algebra("Kr:q=" + std::to_string(p + 1) + ",r=" + std::to_string(r));
            std::vector<TwistedComplex> es, kss;
            for (int b = 1; b <= r; ++b) {
                es.push_back(resolve_object("E@" + std::to_string(b), A));
                kss.push_back(resolve_object("K+@" + std::to_string(b), A));
            }
            auto rep = absorption_report(A, es, kss);
            auto tag = "p=" + std::to_string(p) + " r=" + std::to_string(r);
            o.expect(rep.pass, tag + ": " + rep.failure);
            for (std::size_t i = 0; i < rep.localized.size(); ++i) {
                ExtResult self = ext(rep.localized[i], rep.localized[i], std::nullopt, false);
                o.expect(self.certified && self.series == PoincareSeries::geometric(p + 1),
                         tag + ": localized P" + std::to_string(i + 1) + " has self-Ext " + self.series.str());
                o.expect(rep.pinfty[i].q == p + 1, tag + ": theta powers not verified");
            }
        }
    return o;
}

Outcome self_extension_values()
{
    Outcome o;
    for (int q = 1; q <= 3; ++q) {
        auto B = preset_algebra("B:q=" + std::to_string(q));
        auto se = self_extension(projective(B, 0));
        auto tag = "q=" + std::to_string(q);
        o.expect(se.ext_mp.finite() && se.ext_mp.total() == 1, tag + ": Ext(M,P) = " + se.ext_mp.series.str());
        o.expect(se.ext_mm.series == ks({0, q - 1}), tag + ": Ext(M,M) = " + se.ext_mm.series.str());
        expect_golden(o, "self-ext:" + tag);
    }
    return o;
}

Outcome spinor_chi()
{
    Outcome o;
    for (int d = 1; d <= 6; ++d) {
        QuadricChi q(d);
        auto tag = "d=" + std::to_string(d);
        o.expect(q.chi(Bundle::S, Bundle::S, 0) == 1, tag + ": chi(S,S) != 1");
        if (d % 2)
            o.expect(q.chi(Bundle::S, Bundle::S, -1) == -1, tag + ": chi(S(1),S) != -1");
        else
            o.expect(q.chi(Bundle::S, Bundle::Sp, -1) == -1, tag + ": chi(S(1),S') != -1");
        expect_golden(o, "spinor-chi:" + tag);
    }
    return o;
}

Outcome nodal_chi()
{
    Outcome o;
    for (int d = 1; d <= 6; ++d) {
        QuadricChi q(d);
        Twisted s{Bundle::S, 0}, sp{Bundle::Sp, 0};
        auto tag = "d=" + std::to_string(d);
        o.expect(eta_chi(q, s, s) == (d % 2 ? 2 : 1), tag + ": chi(eta S, eta S) = " + eta_chi(q, s, s).get_str());
        if (d % 2 == 0)
            o.expect(eta_chi(q, s, sp) == 1, tag + ": chi(eta S, eta S') = " + eta_chi(q, s, sp).get_str());
        // X has dimension d + 1.
        auto k = k_class(q);
        Integer kk = eta_chi_class(q, k, k);
        o.expect(kk == ((d + 1) % 2 == 0 ? 2 : 0), tag + ": chi(K,K) = " + kk.get_str());
        expect_golden(o, "eta-chi:" + tag);
    }
    return o;
}

Outcome lattice_criteria()
{
    Outcome o;
    auto one = [](long v) { return IntMatrix{{Integer(v)}}; };
    auto check = [&](const std::string& label, const IntMatrix& m, Nonfactoriality cls, std::size_t proj) {
        SurveyResult s = small_resolution_survey(LatticeMap{m, {}, {}});
        o.expect(s.nonfactoriality == cls, label + ": " + to_string(s.nonfactoriality));
        o.expect(s.projective_count == proj, label + ": " + std::to_string(s.projective_count) + " projective");
    };
    check("[[1]]", one(1), Nonfactoriality::Maximal, 2);
    check("[[2]]", one(2), Nonfactoriality::QMaximalOnly, 2);
    check("[[0]]", one(0), Nonfactoriality::Neither, 0);
    for (int r = 1; r <= 3; ++r) {
        IntMatrix m(r, std::vector<Integer>(r));
        for (int i = 0; i < r; ++i)
            m[i][i] = 1; // (H - D_i).C_j = delta_ij
        SurveyResult s = small_resolution_survey(LatticeMap{m, {}, {}});
        o.expect(s.nonfactoriality == Nonfactoriality::Maximal, "del Pezzo r=" + std::to_string(r));
    }
    expect_golden(o, "lattice");
    return o;
}

Outcome property_suites()
{
    Outcome o;
    std::mt19937 rng(2024);
    for (const char* name : {"Kr:q=2", "B:q=2"}) {
        auto A = preset_algebra(name);
        for (int i = 0; i < 200; ++i) {
            auto x = fixtures::random_complex(A, rng), probe = fixtures::random_complex(A, rng, 2);
            auto f = fixtures::minimize_preserves_ext(x, probe);
            o.expect(f.empty(), std::string("(a) ") + name + ": " + f);
        }
    }
    for (int q = 1; q <= 3; ++q) {
        auto B = preset_algebra("B:q=" + std::to_string(q));
        for (int i = 0; i < 20; ++i) {
            auto f = fixtures::smith_round_trip(fixtures::random_complex(B, rng, 5));
            o.expect(f.empty(), "(b) " + f);
        }
    }
    for (int q = 1; q <= 3; ++q) {
        auto A = preset_algebra("Kr:q=" + std::to_string(q));
        for (int i = -2; i <= 2; ++i) {
            auto f = fixtures::mutation_round_trip(A, i);
            o.expect(f.empty(), "(c) " + f);
        }
    }
    for (int q = 0; q <= 4; ++q) {
        auto f = fixtures::serre_chi_duality(preset_algebra("Kr:q=" + std::to_string(q)));
        o.expect(f.empty(), "(d) " + f);
    }
    for (int d = 1; d <= 6; ++d)
        o.expect(gram_kapranov(d).unitriangular, "(e) Gram matrix not unitriangular for d=" + std::to_string(d));
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Kronecker Ext table", kronecker_ext_table},
        {"sphericality", sphericality},
        {"localization", localization},
        {"Koszul truncations", koszul_truncation},
        {"P-infinity pipeline", pinfty_pipeline},
        {"self-extension", self_extension_values},
        {"spinor chi", spinor_chi},
        {"nodal chi table", nodal_chi},
        {"lattice criteria", lattice_criteria},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
                  << o.checks << " checks)";
        if (!o.pass)
            std::cout << " - " << o.detail;
        std::cout << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
