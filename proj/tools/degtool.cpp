#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "deg/axioms.hpp"
#include "deg/fixtures.hpp"
#include "deg/io.hpp"
#include "deg/standard.hpp"
#include "deg/structure.hpp"
#include "deg/symfunc.hpp"
#include "deg/transform.hpp"

using nlohmann::ordered_json;
using namespace deg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SignedColoredGraph load(const std::string& path) {
    std::string text;
    try {
        text = read_text(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    try {
        return parse_graph(text);
    } catch (const std::exception& e) {
        throw UsageError("invalid graph in " + path + ": " + e.what());
    }
}

void emit(const std::string& path, const std::string& text) { write_text(path, text); }

ordered_json report_json(const AxiomReport& r) {
    return ordered_json{{"check", r.axiom}, {"holds", r.holds}, {"witnesses", r.witnesses}};
}

std::string report_text(const AxiomReport& r) {
    std::string out = r.axiom + ": " + (r.holds ? "holds" : "FAILS") + "\n";
    for (const auto& w : r.witnesses) out += "  " + w + "\n";
    return out;
}

ordered_json expansion_json(const SchurExpansion& e) {
    ordered_json terms = ordered_json::array();
    for (const auto& [p, c] : e.coeffs) terms.push_back({{"partition", p.parts}, {"coefficient", c}});
    ordered_json residual = ordered_json::object();
    for (const auto& [s, c] : e.residual.coeffs) residual[s] = c;
    return ordered_json{{"degree", e.degree},
                        {"schur", terms},
                        {"residual", residual},
                        {"exact", e.exact()},
                        {"schur_positive", e.exact() && e.nonnegative()}};
}

std::string ids(const SignedColoredGraph& g, const std::set<int>& vs) {
    std::string out;
    for (int v : vs) out += (out.empty() ? "" : " ") + g.id(v);
    return out.empty() ? "-" : out;
}

std::vector<std::string> id_list(const SignedColoredGraph& g, const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(g.id(v));
    return out;
}

int cmd_check(const std::string& file, std::vector<int> axioms, const std::vector<int>& lsp, const std::vector<int>& lsf,
              bool a4a, bool a4b, bool structured) {
    auto g = load(file);
    for (int k : axioms)
        if (k < 1 || k > 6) throw UsageError("--axiom expects 1..6");
    for (int m : lsp)
        if (m < 4 || m > 6) throw UsageError("--lsp expects 4, 5 or 6");
    for (int m : lsf)
        if (m < 4 || m > 6) throw UsageError("--lsf expects 4, 5 or 6");
    if (axioms.empty() && lsp.empty() && lsf.empty() && !a4a && !a4b) axioms = {1, 2, 3, 4, 5, 6};
    std::vector<AxiomReport> reports;
    for (int k : axioms) reports.push_back(check_axiom(g, k));
    for (int m : lsf) reports.push_back(check_lsf(g, m));
    for (int m : lsp) reports.push_back(check_lsp(g, m));
    if (a4a) reports.push_back(check_axiom4a(g));
    if (a4b) reports.push_back(check_axiom4b(g));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.holds; });
    if (structured) {
        ordered_json doc{{"holds", ok}, {"reports", ordered_json::array()}};
        for (const auto& r : reports) doc["reports"].push_back(report_json(r));
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << report_text(r);
    }
    return ok ? 0 : 1;
}

int cmd_expand(const std::string& file, bool lines, bool structured) {
    auto g = load(file);
    auto e = expand_in_schur(generating_function(g));
    if (structured) {
        std::cout << expansion_json(e).dump(2) << "\n";
    } else if (lines) {
        std::cout << format_schur_lines(e);
    } else {
        std::cout << format_schur_compact(e) << (e.exact() ? "" : " + residual") << "\n";
    }
    return 0;
}

int cmd_standard(const std::string& shape, const std::string& out) {
    Partition lambda;
    try {
        lambda = parse_partition(shape);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (lambda.size() < 1) throw UsageError("partition must be nonempty");
    emit(out, write_graph(build_standard_deg(lambda)));
    return 0;
}

int cmd_transform(const std::string& in, const std::string& out, const std::string& policyName, const std::string& logPath,
                  const std::string& replayPath, int stopAt, const std::string& offendingPath, bool structured) {
    auto g = load(in);
    if (!replayPath.empty()) {
        TransformLog log;
        try {
            log = parse_log(read_text(replayPath));
        } catch (const std::exception& e) {
            throw UsageError("invalid log " + replayPath + ": " + e.what());
        }
        auto result = replay(g, log);
        emit(out, write_graph(result));
        return log.aborted ? 1 : 0;
    }
    Policy policy;
    try {
        policy = parse_policy(policyName);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (stopAt < 0) throw UsageError("--stop-at must be nonnegative");
    auto r = full_pipeline(g, policy, stopAt);
    if (!logPath.empty()) emit(logPath, write_log(r.log));
    if (r.log.aborted) {
        std::cerr << "aborted";
        if (r.log.abortColor) std::cerr << " at color " << r.log.abortColor;
        std::cerr << ": " << r.log.diagnostic << "\n";
        if (r.log.offending) {
            if (!offendingPath.empty()) {
                emit(offendingPath, write_graph(*r.log.offending));
            } else {
                std::cerr << "offending component:\n" << write_graph(*r.log.offending);
            }
        }
        return 1;
    }
    emit(out, write_graph(r.graph));
    if (structured) {
        ordered_json doc{{"certified", r.certified}, {"steps", r.log.steps.size()}, {"expansion", expansion_json(r.expansion)}};
        ordered_json shapes = ordered_json::array();
        for (const auto& s : r.shapes)
            shapes.push_back({{"anchor", s.anchor}, {"shape", s.shape ? ordered_json(s.shape->parts) : ordered_json()}});
        doc["components"] = shapes;
        std::cerr << doc.dump(2) << "\n";
    } else {
        std::cerr << (r.certified ? "certified: " : "transformed: ") << format_schur_compact(r.expansion) << " after "
                  << r.log.steps.size() << " steps\n";
    }
    return 0;
}

void analyze_color(const SignedColoredGraph& g, int i, bool structured) {
    auto d = defect_sets(g, i);
    auto u = set_U(g, i);
    ordered_json doc;
    std::ostringstream os;
    doc["color"] = i;
    os << "color " << i << "\n";
    ordered_json types = ordered_json::object();
    os << "i-types:\n";
    for (int v = 0; v < g.size(); ++v) {
        if (!g.has_edge(v, i)) continue;
        std::string t;
        try {
            t = to_string(i_type(g, v, i));
        } catch (const HypothesisError& e) {
            t = std::string("undefined (") + e.what() + ")";
        }
        std::string flat = i >= 3 ? (is_flat_edge(g, v, i) ? "flat" : "non-flat") : "flat";
        types[g.id(v)] = {{"type", t}, {"edge", flat}};
        os << "  " << g.id(v) << " " << t << " " << flat << "\n";
    }
    doc["types"] = types;
    auto chains = [&](const std::vector<Chain>& cs, const char* title) {
        ordered_json arr = ordered_json::array();
        os << title << ":\n";
        for (const auto& c : cs) {
            arr.push_back(id_list(g, c.vertices));
            os << " ";
            for (int v : c.vertices) os << " " << g.id(v);
            os << "\n";
        }
        return arr;
    };
    doc["nonflat_chains"] = chains(nonflat_chains(g, i), "non-flat chains");
    doc["flat_chains"] = chains(i >= 4 ? flat_chains(g, i) : std::vector<Chain>{}, "flat chains");
    os << "W: " << ids(g, d.W) << "\nW0: " << ids(g, d.W0) << "\nC: " << ids(g, d.C) << "\nC0: " << ids(g, d.C0) << "\n";
    doc["W"] = id_list(g, {d.W.begin(), d.W.end()});
    doc["W0"] = id_list(g, {d.W0.begin(), d.W0.end()});
    doc["C"] = id_list(g, {d.C.begin(), d.C.end()});
    doc["C0"] = id_list(g, {d.C0.begin(), d.C0.end()});
    ordered_json uj = ordered_json::array();
    os << "U:";
    for (const auto& e : u) {
        uj.push_back({{"kind", e.kind == 'p' ? "phi" : "psi"}, {"anchor", g.id(e.anchor)}});
        os << " " << (e.kind == 'p' ? "phi@" : "psi@") << g.id(e.anchor);
    }
    if (u.empty()) os << " -";
    os << "\n";
    doc["U"] = uj;
    ordered_json trees = ordered_json::array();
    if (i >= 4 && (!d.W.empty() || !d.C.empty())) {
        std::set<int> defect(d.W.begin(), d.W.end());
        defect.insert(d.C.begin(), d.C.end());
        for (const auto& c : components(g, color_range(i - 2, i))) {
            if (std::none_of(c.vertices.begin(), c.vertices.end(), [&](int v) { return defect.count(v); })) continue;
            auto t = build_rlc_tree(g, c, i);
            auto text = format_rlc_tree(g, t);
            os << text;
            trees.push_back(text);
        }
    }
    doc["rlc_trees"] = trees;
    if (structured) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << os.str();
    }
}

int cmd_analyze(const std::string& file, int color, bool conjecture, bool structured) {
    if (conjecture) {
        ordered_json doc = ordered_json::array();
        int counter = 0;
        for (const auto& f : fixtures()) {
            auto g = fixture_graph(f);
            bool lsp6 = is_locally_schur_positive(g).holds;
            bool a = check_axiom4a(g).holds, b = check_axiom4b(g).holds;
            bool ce = lsp6 && !(a && b);
            counter += ce;
            doc.push_back({{"fixture", f.name}, {"locally_schur_positive", lsp6}, {"axiom4a", a}, {"axiom4b", b},
                           {"counterexample", ce}});
            if (!structured)
                std::cout << f.name << ": locally Schur positive " << (lsp6 ? "yes" : "no") << ", 4'a " << (a ? "yes" : "no")
                          << ", 4'b " << (b ? "yes" : "no") << (ce ? "  COUNTEREXAMPLE" : "") << "\n";
        }
        if (structured) std::cout << doc.dump(2) << "\n";
        else std::cout << counter << " counterexamples among " << fixtures().size() << " fixtures\n";
        return counter ? 1 : 0;
    }
    if (file.empty()) throw UsageError("analyze needs a graph file or --conjecture-4prime");
    auto g = load(file);
    if (color != 0 && !g.is_color(color)) throw UsageError("--color must satisfy 1 < i < n");
    if (color != 0) {
        analyze_color(g, color, structured);
    } else {
        for (int i = 2; i < g.n(); ++i) analyze_color(g, i, structured);
    }
    return 0;
}

int cmd_iso(const std::string& a, const std::string& b, bool structured) {
    auto g = load(a), h = load(b);
    auto m = find_isomorphism(g, h);
    if (structured) {
        ordered_json doc{{"isomorphic", m.has_value()}};
        if (m) {
            ordered_json map = ordered_json::object();
            for (int v = 0; v < g.size(); ++v) map[g.id(v)] = h.id((*m)[v]);
            doc["map"] = map;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (m) {
        std::cout << "isomorphic\n";
        for (int v = 0; v < g.size(); ++v) std::cout << "  " << g.id(v) << " -> " << h.id((*m)[v]) << "\n";
    } else {
        std::cout << "not isomorphic\n";
    }
    return m ? 0 : 1;
}

int cmd_fixtures(const std::string& action, const std::string& name, bool skipLarge, bool structured) {
    if (action == "list") {
        for (const auto& f : fixtures())
            std::cout << f.name << (f.large ? " (large)" : "") << "  " << f.caption << "\n";
        return 0;
    }
    if (action == "show") {
        if (name.empty()) throw UsageError("fixtures show needs a fixture name");
        const auto* f = find_fixture(name);
        if (!f) throw UsageError("unknown fixture '" + name + "'");
        std::cout << write_graph(fixture_graph(*f));
        return 0;
    }
    if (action == "verify") {
        bool ok = true;
        ordered_json doc = ordered_json::array();
        for (const auto& f : fixtures()) {
            if (!name.empty() && f.name != name) continue;
            if (skipLarge && f.large) continue;
            for (const auto& c : verify_fixture(f)) {
                ok = ok && c.ok;
                doc.push_back({{"fixture", f.name}, {"expectation", c.expectation}, {"ok", c.ok}, {"detail", c.detail}});
                if (!structured)
                    std::cout << (c.ok ? "ok   " : "FAIL ") << f.name << " " << c.expectation
                              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
            }
        }
        if (!name.empty() && !find_fixture(name)) throw UsageError("unknown fixture '" + name + "'");
        if (structured) std::cout << doc.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    throw UsageError("fixtures expects list, show or verify");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual equivalence graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "human";
    app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"human", "structured"}));

    std::string file, file2, out = "-", policy = "default", logPath, replayPath, offending, shape, action, name;
    std::vector<int> axioms, lsp, lsf;
    bool a4a = false, a4b = false, lines = false, conjecture = false, skipLarge = false;
    int stopAt = 0, color = 0;

    auto* check = app.add_subcommand("check", "Check axioms and local Schur conditions");
    check->add_option("file", file, "Graph file or -")->required();
    check->add_option("--axiom", axioms, "Axiom number 1..6");
    check->add_option("--lsp", lsp, "Check LSP_m");
    check->add_option("--lsf", lsf, "Check LSF_m");
    check->add_flag("--axiom4a", a4a, "Check axiom 4'a");
    check->add_flag("--axiom4b", a4b, "Check axiom 4'b");

    auto* expand = app.add_subcommand("expand", "Schur expansion of the generating function");
    expand->add_option("file", file, "Graph file or -")->required();
    expand->add_flag("--lines", lines, "One term per line with the residual block");

    auto* standard = app.add_subcommand("standard", "Emit the standard graph of a partition");
    standard->add_option("partition", shape, "Partition such as 3,2")->required();
    standard->add_option("--out", out, "Output file or -");

    auto* transform = app.add_subcommand("transform", "Transform a locally Schur positive graph");
    transform->add_option("file", file, "Graph file or -")->required();
    transform->add_option("--out", out, "Output file or -");
    transform->add_option("--policy", policy, "default, short or reverse");
    transform->add_option("--log", logPath, "Write the step log");
    transform->add_option("--replay", replayPath, "Replay a step log instead of transforming");
    transform->add_option("--stop-at", stopAt, "Last color to resolve");
    transform->add_option("--offending", offending, "Write the offending component on abort");

    auto* analyze = app.add_subcommand("analyze", "Types, chains, defect sets and trees for a color");
    analyze->add_option("file", file, "Graph file or -");
    analyze->add_option("--color", color, "Color i");
    analyze->add_flag("--conjecture-4prime", conjecture, "Search the fixtures for LSP graphs failing axiom 4'");

    auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
    iso->add_option("first", file, "Graph file or -")->required();
    iso->add_option("second", file2, "Graph file or -")->required();

    auto* dot = app.add_subcommand("export-dot", "Write a DOT rendering");
    dot->add_option("file", file, "Graph file or -")->required();
    dot->add_option("--out", out, "Output file or -");

    auto* fix = app.add_subcommand("fixtures", "Built-in example graphs");
    fix->add_option("action", action, "list, show or verify")->required();
    fix->add_option("name", name, "Fixture name");
    fix->add_flag("--skip-large", skipLarge, "Skip the large fixtures when verifying");

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
    bool structured = format == "structured";
    try {
        if (*check) return cmd_check(file, axioms, lsp, lsf, a4a, a4b, structured);
        if (*expand) return cmd_expand(file, lines, structured);
        if (*standard) return cmd_standard(shape, out);
        if (*transform) return cmd_transform(file, out, policy, logPath, replayPath, stopAt, offending, structured);
        if (*analyze) return cmd_analyze(file, color, conjecture, structured);
        if (*iso) return cmd_iso(file, file2, structured);
        if (*dot) {
            emit(out, write_dot(load(file)));
            return 0;
        }
        if (*fix) return cmd_fixtures(action, name, skipLarge, structured);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
