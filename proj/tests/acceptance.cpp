#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "deg/io.hpp"
#include "deg/structure.hpp"
#include "support.hpp"

using namespace deg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string compact(const SignedColoredGraph& g) {
    auto e = expand_in_schur(generating_function(g));
    return format_schur_compact(e) + (e.exact() ? "" : " + residual");
}

Outcome standard_suite() {
    Outcome out;
    int graphs = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            auto g = build_standard_deg(lambda);
            ++graphs;
            std::string tag = "G_(" + lambda.str() + ")";
            for (int k = 1; k <= 6; ++k)
                if (!check_axiom(g, k).holds) out.fail(tag + " fails axiom " + std::to_string(k));
            for (int m = 4; m <= 6; ++m) {
                if (!check_lsf(g, m).holds) out.fail(tag + " fails LSF_" + std::to_string(m));
                if (!check_lsp(g, m).holds) out.fail(tag + " fails LSP_" + std::to_string(m));
            }
            auto e = expand_in_schur(generating_function(g));
            if (!e.exact() || e.coeffs.size() != 1 || e.coeffs.begin()->first != lambda || e.coeffs.begin()->second != 1)
                out.fail(tag + " expands to " + format_schur_compact(e));
        }
    }
    if (out.pass) out.detail = std::to_string(graphs) + " standard graphs";
    return out;
}

Outcome figure1() {
    Outcome out;
    auto g = build_standard_deg({3, 2});
    std::set<std::string> sigs;
    for (int v = 0; v < g.size(); ++v) sigs.insert(g.sigma(v));
    std::set<std::string> expected{"+-++", "-+-+", "-++-", "+-+-", "++-+"};
    if (sigs != expected || g.size() != 5) out.fail("signatures differ");
    std::map<std::string, std::string> name{{"+-++", "a"}, {"-+-+", "b"}, {"-++-", "c"}, {"+-+-", "d"}, {"++-+", "e"}};
    std::vector<std::string> ids(g.size());
    for (int v = 0; v < g.size(); ++v) ids[v] = name.count(g.sigma(v)) ? name[g.sigma(v)] : g.id(v);
    auto labeled = relabel(g, ids);
    std::set<std::string> edges;
    for (const auto& e : labeled.edges()) edges.insert(e.u + e.v + std::to_string(e.color));
    std::set<std::string> pattern{"ab2", "ab3", "bc4", "cd2", "de3", "de4"};
    if (edges != pattern) out.fail("edge pattern differs");
    if (write_graph(labeled) != write_graph(fixture_graph("fig1"))) out.fail("serialization differs from the transcription");
    if (out.pass) out.detail = "5 signatures, 6 edges, identical serialization";
    return out;
}

Outcome classification() {
    Outcome out;
    struct Want {
        std::string fixture, form;
        long long k;
        std::string expansion;
    };
    std::vector<Want> wants{{"fig4a", "s[3,1]+k*s[2,2]", 1, "s[3,1]+s[2,2]"},
                            {"fig4b", "s[2,1,1]+k*s[2,2]", 1, "s[2,2]+s[2,1,1]"},
                            {"fig4c", "k*s[2,2]", 2, "2*s[2,2]"},
                            {"fig5a", "s[3,2]+k*s[3,1,1]", 1, "s[3,2]+s[3,1,1]"},
                            {"fig5b", "s[2,2,1]+k*s[3,1,1]", 1, "s[3,1,1]+s[2,2,1]"},
                            {"fig5c", "k*s[3,1,1]", 2, "2*s[3,1,1]"}};
    for (const auto& w : wants) {
        auto g = fixture_graph(w.fixture);
        auto comps = components(g, color_range(2, g.n() - 1));
        if (comps.size() != 1) {
            out.fail(w.fixture + " is not connected");
            continue;
        }
        auto c = classify_small_component(g, comps.front(), g.n());
        if (!c.ok || c.form != w.form || c.k != w.k) out.fail(w.fixture + " classified as " + c.form + " k=" + std::to_string(c.k));
        if (compact(g) != w.expansion) out.fail(w.fixture + " expands to " + compact(g));
    }
    if (out.pass) out.detail = "6 fixtures";
    return out;
}

Outcome axiom6_counterexample() {
    Outcome out;
    auto g = fixture_graph("fig6");
    for (int k = 1; k <= 5; ++k)
        if (!check_axiom(g, k).holds) out.fail("axiom " + std::to_string(k) + " fails");
    if (check_axiom(g, 6).holds) out.fail("axiom 6 holds");
    if (compact(g) != "2*s[3,2,1]") out.fail("generating function " + compact(g));
    int i = g.n() - 1;
    bool applied = false;
    for (const auto& h : components(g, color_range(2, i))) {
        auto c = negatively_dominant(g, h, i);
        if (!c) continue;
        auto next = apply_theta(g, *c, i);
        applied = true;
        auto parts = components(next, color_range(2, i));
        if (parts.size() != 2) out.fail(std::to_string(parts.size()) + " components after theta");
        for (const auto& p : parts) {
            auto id = identify_component(next, p);
            if (!id || id->shape != Partition{3, 2, 1}) out.fail("a component after theta is not G_(3,2,1)");
        }
        if (!(generating_function(next) == generating_function(g))) out.fail("theta changed the generating function");
        break;
    }
    if (!applied) out.fail("no negatively dominant component");
    if (out.pass) out.detail = "theta splits the cover into two copies of G_(3,2,1)";
    return out;
}

void golden(Outcome& out, const std::string& name, const std::string& expansion, std::multiset<std::string> shapes) {
    auto g = fixture_graph(name);
    auto r = full_pipeline(g);
    if (!r.certified) {
        out.fail(name + ": " + r.log.diagnostic);
        return;
    }
    if (!is_dual_equivalence_graph(r.graph).holds) out.fail(name + ": result is not a dual equivalence graph");
    if (format_schur_compact(r.expansion) != expansion || !r.expansion.exact())
        out.fail(name + ": expansion " + format_schur_compact(r.expansion));
    std::multiset<std::string> got;
    for (const auto& s : r.shapes) got.insert(s.shape ? s.shape->str() : "?");
    if (got != shapes) out.fail(name + ": component shapes differ");
    auto gf = generating_function(g);
    auto cur = g;
    for (const auto& step : r.log.steps) {
        cur = apply_step(cur, step);
        if (!(generating_function(cur) == gf)) out.fail(name + ": generating function changed at a " + step.kind + " step");
    }
    if (!(cur == r.graph)) out.fail(name + ": replay differs from the result");
}

Outcome golden_runs() {
    Outcome out;
    golden(out, "fig8", "s[3,2]+s[3,1,1]+s[2,2,1]", {"3,2", "3,1,1", "2,2,1"});
    golden(out, "fig12", "s[4,1]+s[3,2]+s[3,1,1]", {"4,1", "3,2", "3,1,1"});
    if (out.pass) out.detail = "fig8 and fig12 certified";
    return out;
}

Outcome negative_controls() {
    Outcome out;
    auto g19 = fixture_graph("fig19");
    if (check_axiom4a(g19).holds) out.fail("fig19 satisfies 4'a");
    if (check_lsp(g19, 6).holds) out.fail("fig19 has LSP_6");
    auto g21 = fixture_graph("fig21");
    if (!check_axiom4a(g21).holds) out.fail("fig21 fails 4'a");
    if (check_axiom4b(g21).holds) out.fail("fig21 satisfies 4'b");
    if (check_lsp(g21, 6).holds) out.fail("fig21 has LSP_6");
    for (const auto& [name, g] : {std::pair{"fig19", g19}, std::pair{"fig21", g21}}) {
        auto r = full_pipeline(g);
        if (r.certified || !r.log.aborted || r.log.diagnostic.empty()) out.fail(std::string(name) + " was not aborted");
    }
    if (out.pass) out.detail = "both pipelines abort with a diagnostic";
    return out;
}

struct PropertyStats {
    int instances = 0, phi = 0, psi = 0, gamma = 0, theta = 0;
};

void check_common(Outcome& out, const SignedColoredGraph& g, const SignedColoredGraph& h, const TransformStep& s,
                  const std::string& tag) {
    if (g.size() != h.size()) out.fail(tag + ": vertex count changed");
    for (int v = 0; v < g.size(); ++v)
        if (g.id(v) != h.id(v) || g.sigma(v) != h.sigma(v)) out.fail(tag + ": vertices or signatures changed");
    for (int c = 2; c < g.n(); ++c)
        if (c != s.color && g.partners(c) != h.partners(c)) out.fail(tag + ": color " + std::to_string(c) + " changed");
    if (!(generating_function(g) == generating_function(h))) out.fail(tag + ": generating function changed");
    if (!(apply_step(h, s) == g)) out.fail(tag + ": applying twice is not the identity");
}

bool strict_subset(const std::set<int>& a, const std::set<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Every transform applicable at some color of g; returns whether any applied under the progress hypotheses.
bool exercise(Outcome& out, const SignedColoredGraph& g, PropertyStats& st, const std::string& name) {
    bool qualified = false;
    for (int i = 3; i < g.n(); ++i) {
        bool hyp = support::termination_hypotheses(g, i);
        auto d = defect_sets(g, i);
        for (int w : d.W0) {
            TransformStep s;
            try {
                s = plan_phi(g, w, i);
            } catch (const PreconditionError&) {
                continue;
            }
            auto h = apply_step(g, s);
            std::string tag = name + " phi_" + std::to_string(i) + " at " + g.id(w);
            check_common(out, g, h, s, tag);
            ++st.phi;
            if (hyp) {
                qualified = true;
                if (!strict_subset(defect_sets(h, i).W, d.W)) out.fail(tag + ": W did not strictly shrink");
            }
        }
        for (int x : d.C0) {
            TransformStep s;
            try {
                s = plan_psi(g, x, i);
            } catch (const PreconditionError&) {
                continue;
            }
            auto h = apply_step(g, s);
            std::string tag = name + " psi_" + std::to_string(i) + " at " + g.id(x);
            check_common(out, g, h, s, tag);
            ++st.psi;
            if (hyp) {
                qualified = true;
                auto e = defect_sets(h, i);
                if (!strict_subset(e.C, d.C)) out.fail(tag + ": C did not strictly shrink");
                if (e.W != d.W) out.fail(tag + ": W changed");
            }
        }
        for (int z = 0; z < g.size(); ++z) {
            if (!gamma_applies(g, z, i)) continue;
            TransformStep s;
            try {
                s = plan_gamma(g, z, i);
            } catch (const PreconditionError&) {
                continue;
            }
            auto h = apply_step(g, s);
            std::string tag = name + " gamma_" + std::to_string(i) + " at " + g.id(z);
            check_common(out, g, h, s, tag);
            ++st.gamma;
            if (hyp && set_U(g, i).empty()) {
                qualified = true;
                auto e = defect_sets(h, i);
                if (e.W != d.W || e.C != d.C) out.fail(tag + ": W or C changed");
            }
        }
    }
    for (int i = 3; i < g.n(); ++i) {
        auto super = component_labels(g, color_range(2, i - 1));
        for (const auto& h : components(g, color_range(2, i))) {
            std::set<int> pieces;
            for (int v : h.vertices) pieces.insert(super[v]);
            if (pieces.size() < 3) continue;
            TransformStep s;
            try {
                auto c = negatively_dominant(g, h, i);
                if (!c) continue;
                s = plan_theta(g, *c, i);
            } catch (const std::exception&) {
                continue;
            }
            if (s.removed.empty()) continue;
            check_common(out, g, apply_step(g, s), s, name + " theta_" + std::to_string(i) + " at " + g.id(h.anchor()));
            ++st.theta;
        }
    }
    return qualified;
}

Outcome property_suite() {
    Outcome out;
    PropertyStats st;
    std::mt19937 rng(20240531);
    for (const auto& f : fixtures()) exercise(out, fixture_graph(f), st, f.name);
    std::vector<SignedColoredGraph> pool5;
    for (const char* name : {"fig1", "fig5a", "fig5b", "fig5c", "fig8", "fig12", "fig9", "fig13"})
        pool5.push_back(fixture_graph(name));
    for (const auto& p : enumerate_partitions(5)) pool5.push_back(build_standard_deg(p));
    int attempts = 0;
    while (st.instances < 200 && attempts < 4000) {
        ++attempts;
        int parts = 1 + static_cast<int>(rng() % 3);
        std::vector<SignedColoredGraph> pick;
        std::vector<std::string> prefixes;
        for (int k = 0; k < parts; ++k) {
            pick.push_back(pool5[rng() % pool5.size()]);
            prefixes.push_back("p" + std::to_string(k) + "_");
        }
        auto whole = support::disjoint_union(pick, prefixes);
        auto comps = components(whole, color_range(2, whole.n() - 1));
        std::vector<int> keep;
        for (const auto& c : comps)
            if (rng() % 3 != 0) keep.insert(keep.end(), c.vertices.begin(), c.vertices.end());
        if (keep.empty()) keep = comps.front().vertices;
        std::sort(keep.begin(), keep.end());
        auto base = support::shuffled_ids(induced_subgraph(whole, keep), rng);
        std::vector<SignedColoredGraph> snapshots{base};
        auto r = full_pipeline(base, parse_policy(rng() % 2 ? "default" : "short"));
        auto cur = base;
        for (const auto& s : r.log.steps) {
            cur = apply_step(cur, s);
            snapshots.push_back(cur);
        }
        bool any = false;
        for (std::size_t k = 0; k < snapshots.size(); ++k)
            any = exercise(out, snapshots[k], st, "instance " + std::to_string(attempts) + "." + std::to_string(k)) || any;
        if (any) ++st.instances;
    }
    auto six = enumerate_partitions(6);
    for (int k = 0; k < 20; ++k) {
        auto g = support::disjoint_union({fixture_graph("fig6"), build_standard_deg(six[rng() % six.size()])}, {"a_", "b_"});
        exercise(out, support::shuffled_ids(g, rng), st, "cover " + std::to_string(k));
    }
    if (st.instances < 200) out.fail("only " + std::to_string(st.instances) + " qualifying instances");
    std::ostringstream os;
    os << st.instances << " instances, " << st.phi << " phi, " << st.psi << " psi, " << st.gamma << " gamma, " << st.theta << " theta";
    if (out.pass) out.detail = os.str();
    else out.detail += " (" + os.str() + ")";
    return out;
}

Outcome equivalences() {
    Outcome out;
    auto corpus = support::standard_graphs(1, 8);
    for (const auto& g : support::fixture_graphs()) corpus.push_back(g);
    int agreeA = 0, agreeB = 0, agreeC = 0, agreeD = 0, hypB = 0, hypD = 0, outside = 0;
    for (const auto& g : corpus) {
        std::string tag = "a graph with " + std::to_string(g.size()) + " vertices";
        bool ax[7];
        for (int k = 1; k <= 6; ++k) ax[k] = check_axiom(g, k).holds;
        bool lsf4 = check_lsf(g, 4).holds, lsf5 = check_lsf(g, 5).holds, lsf6 = check_lsf(g, 6).holds;
        if (ax[4] == (lsf4 && lsf5)) ++agreeA;
        else out.fail("axiom 4 and LSF_4, LSF_5 disagree on " + tag);
        if (ax[1] && ax[2] && ax[3] && ax[5]) {
            ++hypD;
            if ((ax[4] && ax[6]) == (lsf4 && lsf5 && lsf6)) ++agreeD;
            else out.fail("axioms 4, 6 and LSF_4,5,6 disagree on " + tag);
            if (ax[4]) {
                ++hypB;
                if (ax[6] == lsf6) ++agreeB;
                else out.fail("axiom 6 and LSF_6 disagree on " + tag);
            }
        }
        if (ax[6] != lsf6) ++outside;
        bool empty = true;
        for (int i = 3; i < g.n(); ++i) {
            auto d = defect_sets(g, i);
            if (!d.W.empty() || !d.C.empty()) empty = false;
        }
        if (empty == ax[4]) ++agreeC;
        else out.fail("defect sets and axiom 4 disagree on " + tag);
    }
    std::ostringstream os;
    os << corpus.size() << " graphs; axiom 4 " << agreeA << "/" << corpus.size() << ", axiom 6 " << agreeB << "/" << hypB
       << " under axioms 1-5, axioms 4 and 6 " << agreeD << "/" << hypD << " under axioms 1,2,3,5, defect sets " << agreeC
       << "/" << corpus.size() << "; axiom 6 and LSF_6 differ on " << outside << " graphs failing axiom 4";
    if (out.pass) out.detail = os.str();
    else out.detail += " (" + os.str() + ")";
    return out;
}

Outcome schur_oracle() {
    Outcome out;
    std::mt19937 rng(7);
    int recovered = 0, rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto parts = enumerate_partitions(n);
        QSymFunction f(n);
        std::map<Partition, long long> want;
        for (const auto& p : parts) {
            long long c = static_cast<long long>(rng() % 6);
            if (rng() % 2) c = 0;
            if (c == 0) continue;
            want[p] = c;
            for (const auto& [s, k] : oracle::schur(p)) f.add(s, c * k);
        }
        auto e = expand_in_schur(f);
        std::map<Partition, long long> got(e.coeffs.begin(), e.coeffs.end());
        if (e.exact() && got == want) ++recovered;
        else out.fail("combination of degree " + std::to_string(n) + " not recovered");
    }
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        QSymFunction f(n);
        for (const auto& p : enumerate_partitions(n)) {
            long long c = rng() % 2 ? static_cast<long long>(rng() % 6) : 0;
            for (const auto& [s, k] : oracle::schur(p)) f.add(s, c * k);
        }
        Signature s;
        do {
            s.clear();
            for (int k = 1; k < n; ++k) s += rng() % 2 ? '+' : '-';
        } while (s.find('+') == std::string::npos || s.find('-') == std::string::npos);
        QSymFunction g = f;
        g.add(s, (rng() % 2 || f.coefficient(s) == 0) ? 1 : -1);
        auto pe = is_schur_positive(g);
        if (!pe.positive) ++rejected;
        else out.fail("perturbation at " + s + " reported Schur positive");
    }
    std::ostringstream os;
    os << recovered << " recovered, " << rejected << " perturbations rejected";
    if (out.pass) out.detail = os.str();
    return out;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"standard graph suite", standard_suite},
        {"standard graph of shape (3,2)", figure1},
        {"small component classification", classification},
        {"axiom 6 counterexample", axiom6_counterexample},
        {"transformation golden runs", golden_runs},
        {"negative controls", negative_controls},
        {"defect set monotonicity", property_suite},
        {"equivalence cross checks", equivalences},
        {"Schur expansion oracle", schur_oracle},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first;
        if (!o.detail.empty()) line << "  [" << o.detail << "]";
        line << "  (" << secs << "s)";
        std::cout << line.str() << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
