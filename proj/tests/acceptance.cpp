/* Acceptance suite: one pass/fail line per criterion, nonzero exit on
   any failure.  Runs the full pushout pipeline over the instance corpus
   and checks it against independent Smith-normal-form oracles. */

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eh/descriptions.hpp"
#include "eh/pipeline.hpp"
#include "support.hpp"

using namespace eh;
using namespace eh::testing;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int criterion, const std::string& label, bool ok) {
    std::printf("%s criterion-%d: %s\n", ok ? "PASS" : "FAIL", criterion, label.c_str());
    if (!ok)
        ++failures;
    for (const std::string& n : notes)
        std::printf("       %s\n", n.c_str());
    notes.clear();
}

void note(const std::string& s) {
    if (notes.size() < 12)
        notes.push_back(s);
}

struct Instance {
    std::string name;
    Span span;
};

std::vector<Instance> corpus() {
    std::vector<Instance> all;
    {
        SpacePtr e = space_empty();
        SimplicialMorphism f = SimplicialMorphism::make(e, space_circle(1),
                                                        [](int, const std::string&) -> SimplexWord {
                                                            throw InputError("empty source");
                                                        });
        SimplicialMorphism g = SimplicialMorphism::make(e, space_sphere(2),
                                                        [](int, const std::string&) -> SimplexWord {
                                                            throw InputError("empty source");
                                                        });
        all.push_back({"empty-gluing", Span{f, g}});
    }
    {
        SimplicialMorphism id = SimplicialMorphism::identity(space_circle(3));
        all.push_back({"identity-span", Span{id, id}});
    }
    all.push_back({"suspension-S0", suspension_span(space_sphere(0))});
    all.push_back({"suspension-S1", suspension_span(space_sphere(1))});
    all.push_back({"suspension-S2", suspension_span(space_sphere(2))});
    all.push_back({"suspension-circle3", suspension_span(space_circle(3))});
    all.push_back({"wedge-S1-S1", wedge_span(space_circle(1), space_circle(1), "v", "v")});
    all.push_back({"wedge-S1-S2", wedge_span(space_circle(1), space_sphere(2), "v", "v")});
    all.push_back({"wedge-circle3-point", wedge_span(space_circle(3), space_point(), "v0", "v")});
    all.push_back({"join-S0-S0", join_span(space_sphere(0), space_sphere(0))});
    all.push_back({"join-S1-S0", join_span(space_circle(1), space_sphere(0))});
    all.push_back({"join-S1-S1", join_span(space_circle(1), space_circle(1))});
    for (int k = 2; k <= 5; ++k)
        all.push_back({"cofiber-degree-" + std::to_string(k), mapping_cone_span(degree_map(k))});
    return all;
}

/* criterion 1: homology through the equivalence equals direct SNF
   homology of C(P) on every corpus instance, every degree. */
void criterion_1(const std::vector<Instance>& instances, std::vector<PushoutEfhm>& runs) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const Instance& inst : instances) {
        try {
            PushoutEfhm p = pushout_efhm(inst.span.f, inst.span.g);
            for (int n = p.complex_p->lo() - 1; n <= p.complex_p->hi() + 1; ++n) {
                AbelianGroup via = homology_via_equivalence(p.equivalence, n);
                AbelianGroup direct = homology_effective(*p.complex_p, n);
                if (!(via == direct)) {
                    ok = false;
                    note(inst.name + ": H_" + std::to_string(n) + " via equivalence " + via.str() +
                         " != direct " + direct.str());
                }
            }
            runs.push_back(std::move(p));
        } catch (const std::exception& e) {
            ok = false;
            note(inst.name + ": exception: " + e.what());
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (ms.count() > 10000) {
        ok = false;
        note("corpus runtime " + std::to_string(ms.count()) + " ms exceeds 10 s");
    }
    report(1, "oracle equivalence on the pushout corpus (" + std::to_string(ms.count()) + " ms)", ok);
}

/* criterion 2: classical homology values through the pipeline. */
void criterion_2() {
    bool ok = true;
    auto expect = [&](const std::string& what, const Span& span, int degree, const AbelianGroup& want) {
        PushoutEfhm p = pushout_efhm(span.f, span.g);
        AbelianGroup via = homology_via_equivalence(p.equivalence, degree);
        AbelianGroup direct = homology_effective(*p.complex_p, degree);
        if (!(via == want) || !(direct == want)) {
            ok = false;
            note(what + ": got " + via.str() + " (direct " + direct.str() + "), want " + want.str());
        }
    };
    for (int n = 0; n <= 3; ++n)
        expect("suspension S" + std::to_string(n) + " in degree " + std::to_string(n + 1),
               suspension_span(space_sphere(n)), n + 1, group(1));
    Span w11 = wedge_span(space_circle(1), space_circle(1), "v", "v");
    expect("wedge S1 S1 in degree 1", w11, 1, group(2));
    Span w12 = wedge_span(space_circle(1), space_sphere(2), "v", "v");
    expect("wedge S1 S2 in degree 1", w12, 1, group(1));
    expect("wedge S1 S2 in degree 2", w12, 2, group(1));
    Span j11 = join_span(space_circle(1), space_circle(1));
    expect("join S1 S1 in degree 3", j11, 3, group(1));
    expect("join S1 S1 in degree 1", j11, 1, group(0));
    expect("join S1 S1 in degree 2", j11, 2, group(0));
    for (int k = 2; k <= 5; ++k)
        expect("cofiber of degree " + std::to_string(k) + " in degree 1",
               mapping_cone_span(degree_map(k)), 1, group(0, {k}));
    report(2, "classical homology values", ok);
}

/* criterion 3: reduction axioms on every produced reduction, plus a
   seeded mutation test with guaranteed-visible perturbations. */
void criterion_3(const std::vector<PushoutEfhm>& runs) {
    bool ok = true;
    for (const PushoutEfhm& p : runs) {
        if (!verify_reduction(p.equivalence.lrdct()).ok || !verify_reduction(p.equivalence.rrdct()).ok) {
            ok = false;
            note("final equivalence leg failed re-verification");
        }
    }

    std::mt19937 rng(0xABCDu);
    int detected = 0;
    const int total = 50;
    for (int trial = 0; trial < total; ++trial) {
        const PushoutEfhm& p = runs[trial % runs.size()];
        const Reduction& r = trial % 2 == 0 ? p.equivalence.lrdct() : p.equivalence.rrdct();
        int which = trial % 3;  // 0: f, 1: g, 2: h
        const GradedMorphism& target = which == 0 ? r.f : which == 1 ? r.g : r.h;

        std::vector<Generator> sources;
        const ChainComplex& src = *target.source();
        for (int n = src.lo(); n <= src.hi(); ++n)
            for (const std::string& id : src.basis(n))
                sources.push_back(Generator{n, id});
        bool mutated = false;
        for (std::size_t attempt = 0; attempt < 4 * sources.size() && !mutated; ++attempt) {
            Generator s = sources[rng() % sources.size()];
            int out_degree = s.degree + target.degree();
            const auto& outs = target.target()->basis(out_degree);
            if (outs.empty())
                continue;
            std::string out = outs[rng() % outs.size()];
            if (which == 2 && r.f(out_degree, out).is_zero())
                continue;  // keep h-mutations visible through f∘h = 0
            Int coeff = 1 + static_cast<int>(rng() % 2);
            GradedMorphism perturbed = GradedMorphism::make(
                target.source(), target.target(), target.degree(),
                [&](const Generator& g) {
                    Chain image = target(g.degree, g.id);
                    if (g.degree == s.degree && g.id == s.id)
                        image.add_term(coeff, out);
                    return image;
                },
                false, "mutated");
            Reduction bad{which == 0 ? perturbed : r.f, which == 1 ? perturbed : r.g,
                          which == 2 ? perturbed : r.h};
            if (!verify_reduction(bad).ok)
                ++detected;
            else
                note("mutation survived on trial " + std::to_string(trial));
            mutated = true;
        }
        if (!mutated)
            note("no mutation site found on trial " + std::to_string(trial));
    }
    if (detected != total) {
        ok = false;
        note("detected " + std::to_string(detected) + "/" + std::to_string(total) + " mutations");
    }
    report(3, "reduction axioms and 50-mutation detection", ok);
}

/* criterion 4: structural identities on every corpus run. */
void criterion_4(const std::vector<Instance>& instances, const std::vector<PushoutEfhm>& runs) {
    bool ok = true;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        const PushoutEfhm& p = runs[k];
        for (const ComplexPtr& c : {p.complex_p, p.rc, p.ds, p.sds, p.cone2_chi, p.equivalence.top(),
                                    p.equivalence.right()}) {
            if (auto w = c->d_squared_witness()) {
                ok = false;
                note(instances[k].name + ": d^2 != 0 at '" + w->id + "' in " + c->name());
            }
        }
        if (p.chi.chain_map_witness()) {
            ok = false;
            note(instances[k].name + ": chi is not a chain map");
        }
        try {
            PushoutSes ps = ses_from_pushout(instances[k].span.f, instances[k].span.g);
            VerifyReport rep = verify_ses(ps.ses);
            if (!rep.ok) {
                ok = false;
                note(instances[k].name + ": SES identities: " + rep.str());
            }
            Suspension sds = suspension(ps.ds.complex);
            GradedMorphism chi = connecting_morphism(ps.ses, sds.shift);
            ConeComparison cmp = cone2_comparison(ps.ses, chi);  // verifies the round trips
            (void)cmp;
        } catch (const std::exception& e) {
            ok = false;
            note(instances[k].name + ": " + std::string(e.what()));
        }
    }
    report(4, "structural identities (d^2, SES, chi, comparison)", ok);
}

/* criterion 5: SES1/SES2 on randomized split SESs. */
void criterion_5() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::mt19937 rng(0x5E55u);
    for (int trial = 0; trial < 25; ++trial) {
        ComplexPtr a = random_complex(rng, "a", 0, 4, 6);
        ComplexPtr c = random_complex(rng, "c", 0, 4, 6);
        try {
            EffectiveSES ses = twisted_split_ses(rng, a, c);
            HomotopyEquivalence e1 = ses1(ses, trivial_equivalence(ses.B), trivial_equivalence(ses.C));
            for (int n = a->lo() - 1; n <= a->hi() + 1; ++n)
                if (!(homology_via_equivalence(e1, n) == homology_effective(*a, n))) {
                    ok = false;
                    note("trial " + std::to_string(trial) + ": ses1 wrong at degree " + std::to_string(n));
                }
            HomotopyEquivalence e2 = ses2(ses, trivial_equivalence(a), trivial_equivalence(c));
            for (int n = ses.B->lo() - 1; n <= ses.B->hi() + 1; ++n)
                if (!(homology_via_equivalence(e2, n) == homology_effective(*ses.B, n))) {
                    ok = false;
                    note("trial " + std::to_string(trial) + ": ses2 wrong at degree " + std::to_string(n));
                }
        } catch (const std::exception& e) {
            ok = false;
            note("trial " + std::to_string(trial) + ": exception: " + e.what());
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (ms.count() > 5000) {
        ok = false;
        note("runtime " + std::to_string(ms.count()) + " ms exceeds 5 s");
    }
    report(5, "SES1/SES2 on 25 randomized split SESs (" + std::to_string(ms.count()) + " ms)", ok);
}

/* criterion 6: Smith normal form unit suite. */
void criterion_6() {
    bool ok = true;
    std::mt19937 rng(0x51F7u);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<int>(rng() % 19) - 9;
        SmithResult r = smith_normal_form(m);
        for (std::size_t k = 0; k + 1 < r.diag.size(); ++k) {
            bool chain_ok = r.diag[k] == 0 ? r.diag[k + 1] == 0 : r.diag[k + 1] % r.diag[k] == 0;
            if (!chain_ok) {
                ok = false;
                note("divisibility chain violated on trial " + std::to_string(trial));
            }
        }
        if (rows <= 6 && cols <= 6) {
            Int product = 1;
            for (int k = 1; k <= std::min(rows, cols); ++k) {
                Int mg = minor_gcd(m, k);
                Int want = 0;
                if (k <= r.rank) {
                    product *= r.diag[static_cast<std::size_t>(k - 1)];
                    want = product;
                }
                if (mg != want) {
                    ok = false;
                    note("minor-gcd identity failed on trial " + std::to_string(trial) + " at k=" +
                         std::to_string(k));
                }
            }
        }
    }
    report(6, "Smith normal form: divisibility and minor-gcd oracle", ok);
}

/* criterion 7: CLI golden output and exit codes. */
std::string capture(const std::string& cmd, int& exit_code) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[512];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_7() {
    bool ok = true;
    const std::string bin = EHP_BINARY;
    const std::string src = EHP_SOURCE_DIR;

    int code = 0;
    std::string out = capture(bin + " " + src + "/descriptions/join_s1_s1.ehp homology jn 0..3", code);
    std::ifstream golden(src + "/descriptions/join_s1_s1.golden", std::ios::binary);
    std::stringstream want;
    want << golden.rdbuf();
    if (code != 0 || out != want.str()) {
        ok = false;
        note("golden mismatch (exit " + std::to_string(code) + ")");
    }

    std::string tmp = "/tmp/ehp_acceptance_";
    {
        std::ofstream f(tmp + "parse.ehp");
        f << "space = broken\n";
    }
    capture(bin + " " + tmp + "parse.ehp homology x 0..1", code);
    if (code != 2) {
        ok = false;
        note("parse error exit code " + std::to_string(code) + ", want 2");
    }
    {
        std::ofstream f(tmp + "ok.ehp");
        f << "space p = point\n";
    }
    capture(bin + " " + tmp + "ok.ehp homology unknown_name 0..1", code);
    if (code != 2) {
        ok = false;
        note("unknown name exit code " + std::to_string(code) + ", want 2");
    }
    {
        std::ofstream f(tmp + "table.ehp");
        f << "space c2 = circle 2\nspace c1 = circle 1\n"
          << "morphism t = table c2 c1 {\n  v0 -> v\n  v1 -> v\n  e0 -> s\n}\n";
    }
    capture(bin + " " + tmp + "table.ehp verify t", code);
    if (code != 1) {
        ok = false;
        note("invalid table exit code " + std::to_string(code) + ", want 1");
    }
    capture(bin + " " + tmp + "ok.ehp homology p 0..0", code);
    if (code != 0) {
        ok = false;
        note("success exit code " + std::to_string(code) + ", want 0");
    }

    // the shipped description corpus runs to completion
    struct Sample {
        const char* file;
        const char* name;
        const char* range;
        const char* expect;  // substring of the report
    } samples[] = {
        {"rp2.ehp", "rp2", "1..1", "Component Z/2Z"},
        {"suspension_s2.ehp", "su", "3..3", "Component Z"},
        {"join_s1_s1.ehp", "jn", "3..3", "Component Z"},
    };
    for (const Sample& s : samples) {
        std::string report_out =
            capture(bin + " " + src + "/descriptions/" + s.file + " homology " + s.name + " " + s.range, code);
        if (code != 0 || report_out.find(s.expect) == std::string::npos) {
            ok = false;
            note(std::string(s.file) + ": exit " + std::to_string(code) + ", output '" + report_out + "'");
        }
        capture(bin + " " + src + "/descriptions/" + s.file + " verify " + s.name, code);
        if (code != 0) {
            ok = false;
            note(std::string(s.file) + ": verify exited " + std::to_string(code));
        }
    }
    report(7, "CLI golden output and exit-code contract", ok);
}

}  // namespace

int main() {
    std::vector<Instance> instances = corpus();
    std::vector<PushoutEfhm> runs;
    criterion_1(instances, runs);
    criterion_2();
    criterion_3(runs);
    criterion_4(instances, runs);
    criterion_5();
    criterion_6();
    criterion_7();
    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
