#include "deg/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "deg/structure.hpp"

namespace deg {

namespace {

std::string edge_text(const SignedColoredGraph& g, int v, int w, int i) {
    return g.id(v) + "-" + g.id(w) + " (color " + std::to_string(i) + ")";
}

void check_ax1(const SignedColoredGraph& g, AxiomReport& r) {
    for (int i = 2; i < g.n(); ++i) {
        for (int v = 0; v < g.size(); ++v) {
            bool want = g.sign(v, i - 1) == -g.sign(v, i);
            bool have = g.has_edge(v, i);
            if (want && !have) r.fail(g.id(v) + " has sigma_" + std::to_string(i - 1) + " = -sigma_" + std::to_string(i) +
                                      " but no " + std::to_string(i) + "-edge");
            if (!want && have) r.fail(g.id(v) + " has a " + std::to_string(i) + "-edge but sigma_" + std::to_string(i - 1) +
                                      " = sigma_" + std::to_string(i));
        }
    }
}

void check_ax2(const SignedColoredGraph& g, AxiomReport& r) {
    for (int i = 2; i < g.n(); ++i) {
        for (int v = 0; v < g.size(); ++v) {
            int w = g.neighbor(v, i);
            if (w < v) continue;
            for (int h = 1; h < g.N(); ++h) {
                bool flip = g.sign(v, h) == -g.sign(w, h);
                if ((h == i - 1 || h == i) && !flip)
                    r.fail(edge_text(g, v, w, i) + ": sigma_" + std::to_string(h) + " does not flip");
                if ((h < i - 2 || h > i + 1) && flip)
                    r.fail(edge_text(g, v, w, i) + ": sigma_" + std::to_string(h) + " changes");
            }
        }
    }
}

void check_ax3(const SignedColoredGraph& g, AxiomReport& r) {
    for (int i = 2; i < g.n(); ++i) {
        for (int v = 0; v < g.size(); ++v) {
            int w = g.neighbor(v, i);
            if (w < 0) continue;
            if (i - 2 >= 1 && g.sign(v, i - 2) != g.sign(w, i - 2) && g.sign(v, i - 2) != -g.sign(v, i - 1))
                r.fail(edge_text(g, v, w, i) + ": sigma_" + std::to_string(i - 2) + " changes but sigma(" + g.id(v) +
                       ")_" + std::to_string(i - 2) + " = sigma_" + std::to_string(i - 1));
            if (i + 1 <= g.N() - 1 && g.sign(v, i + 1) != g.sign(w, i + 1) && g.sign(v, i + 1) != -g.sign(v, i))
                r.fail(edge_text(g, v, w, i) + ": sigma_" + std::to_string(i + 1) + " changes but sigma(" + g.id(v) +
                       ")_" + std::to_string(i + 1) + " = sigma_" + std::to_string(i));
        }
    }
}

// Edge offsets: 0 is color i, 1 is i-1, 2 is i-2. Signatures cover the window ending at position i.
struct Template {
    std::string name;
    std::vector<std::string> sigs;
    std::vector<std::tuple<int, int, int>> edges;
};

const std::vector<Template>& two_color_templates() {
    static const std::vector<Template> t = {
        {"singleton", {"+++"}, {}},
        {"path", {"-++", "+-+", "++-"}, {{0, 1, 1}, {1, 2, 0}}},
        {"double", {"+-+", "-+-"}, {{0, 1, 1}, {0, 1, 0}}},
    };
    return t;
}

const std::vector<Template>& three_color_templates() {
    static const std::vector<Template> t = {
        {"singleton", {"++++"}, {}},
        {"path", {"-+++", "+-++", "++-+", "+++-"}, {{0, 1, 2}, {1, 2, 1}, {2, 3, 0}}},
        {"five", {"+-++", "-+-+", "-++-", "+-+-", "++-+"},
         {{0, 1, 2}, {0, 1, 1}, {1, 2, 0}, {2, 3, 2}, {3, 4, 1}, {3, 4, 0}}},
        {"six", {"++--", "+-+-", "-++-", "+--+", "-+-+", "--++"},
         {{0, 1, 1}, {1, 2, 2}, {1, 3, 0}, {2, 4, 0}, {3, 4, 2}, {4, 5, 1}}},
    };
    return t;
}

SignedColoredGraph template_graph(const Template& t, int i, bool negated) {
    int width = static_cast<int>(t.sigs.front().size());
    std::vector<VertexSpec> vs;
    for (std::size_t k = 0; k < t.sigs.size(); ++k) {
        std::string s(i, '+');
        std::string w = negated ? negate(t.sigs[k]) : t.sigs[k];
        s.replace(i - width, width, w);
        vs.push_back({"t" + std::to_string(k), s, std::nullopt});
    }
    std::vector<EdgeSpec> es;
    for (auto [a, b, off] : t.edges) es.push_back({i - off, "t" + std::to_string(a), "t" + std::to_string(b)});
    return SignedColoredGraph::build(i + 1, i + 1, vs, es);
}

bool matches_template(const SignedColoredGraph& g, const Component& c, const std::vector<Template>& templates, int i) {
    int width = static_cast<int>(templates.front().sigs.front().size());
    auto positions = position_range(i - width + 1, i);
    for (const auto& t : templates) {
        if (t.sigs.size() != c.vertices.size()) continue;
        for (bool neg : {false, true}) {
            auto tg = template_graph(t, i, neg);
            for (int y = 0; y < tg.size(); ++y) {
                auto m = propagate_map(g, tg, {{c.anchor(), y}}, c.colors, positions);
                if (m && m->size() == c.vertices.size()) return true;
            }
        }
    }
    return false;
}

void check_ax4(const SignedColoredGraph& g, AxiomReport& r) {
    for (int i = 3; i < g.n(); ++i) {
        for (const auto& c : components(g, {i - 1, i})) {
            if (!matches_template(g, c, two_color_templates(), i))
                r.fail("component of colors " + std::to_string(i - 1) + "," + std::to_string(i) + " at " +
                       g.id(c.anchor()) + " (" + std::to_string(c.vertices.size()) + " vertices) matches no two-color template");
        }
    }
    for (int i = 4; i < g.n(); ++i) {
        for (const auto& c : components(g, {i - 2, i - 1, i})) {
            if (!matches_template(g, c, three_color_templates(), i))
                r.fail("component of colors " + std::to_string(i - 2) + ".." + std::to_string(i) + " at " +
                       g.id(c.anchor()) + " (" + std::to_string(c.vertices.size()) +
                       " vertices) matches no three-color template");
        }
    }
}

void check_ax5(const SignedColoredGraph& g, AxiomReport& r) {
    for (int i = 2; i < g.n(); ++i) {
        for (int j = 2; j < g.n(); ++j) {
            if (std::abs(i - j) < 3) continue;
            for (int w = 0; w < g.size(); ++w) {
                int x = g.neighbor(w, i);
                if (x < 0) continue;
                int y = g.neighbor(x, j);
                if (y < 0) continue;
                int v = g.neighbor(w, j);
                if (v < 0 || g.neighbor(v, i) != y)
                    r.fail(g.id(w) + " -" + std::to_string(i) + "- " + g.id(x) + " -" + std::to_string(j) + "- " + g.id(y) +
                           " has no completion through E_" + std::to_string(j) + "(" + g.id(w) + ")");
            }
        }
    }
}

void check_ax6(const SignedColoredGraph& g, AxiomReport& r) {
    for (int i = 2; i < g.n(); ++i) {
        auto super = component_labels(g, color_range(2, i - 1));
        for (const auto& c : components(g, color_range(2, i))) {
            std::set<int> nodes;
            std::set<std::pair<int, int>> adjacent;
            std::map<int, int> rep;
            for (int v : c.vertices) {
                nodes.insert(super[v]);
                rep.emplace(super[v], v);
                int w = g.neighbor(v, i);
                if (w >= 0) adjacent.insert({super[v], super[w]});
            }
            for (int a : nodes)
                for (int b : nodes) {
                    if (a >= b || adjacent.count({a, b})) continue;
                    r.fail("color " + std::to_string(i) + ": " + g.id(rep[a]) + " and " + g.id(rep[b]) +
                           " need more than one " + std::to_string(i) + "-edge crossing");
                }
        }
    }
}

}  // namespace

AxiomReport check_axiom(const SignedColoredGraph& g, int k) {
    AxiomReport r;
    r.axiom = std::to_string(k);
    switch (k) {
        case 1: check_ax1(g, r); break;
        case 2: check_ax2(g, r); break;
        case 3: check_ax3(g, r); break;
        case 4: check_ax4(g, r); break;
        case 5: check_ax5(g, r); break;
        case 6: check_ax6(g, r); break;
        default: throw std::invalid_argument("axiom number must be 1..6");
    }
    return r;
}

std::vector<WindowedComponent> windowed_components(const SignedColoredGraph& g, int m) {
    std::vector<WindowedComponent> out;
    for (int i = m - 1; i < g.n(); ++i) {
        for (auto& c : components(g, color_range(i - (m - 3), i))) {
            auto gf = generating_function(g, c.vertices, i - (m - 2), i);
            out.push_back({i, std::move(c), std::move(gf)});
        }
    }
    return out;
}

AxiomReport check_lsf(const SignedColoredGraph& g, int m) {
    if (m < 3) throw std::invalid_argument("LSF degree must be at least 3");
    AxiomReport r;
    r.axiom = "LSF_" + std::to_string(m);
    for (const auto& wc : windowed_components(g, m)) {
        if (!is_single_schur(wc.gf)) {
            r.fail("i=" + std::to_string(wc.i) + " component at " + g.id(wc.comp.anchor()) + ": " +
                   format_schur_compact(expand_in_schur(wc.gf)) + (expand_in_schur(wc.gf).exact() ? "" : " + residual"));
        }
    }
    return r;
}

AxiomReport check_lsp(const SignedColoredGraph& g, int m) {
    if (m < 3) throw std::invalid_argument("LSP degree must be at least 3");
    AxiomReport r;
    r.axiom = "LSP_" + std::to_string(m);
    for (const auto& wc : windowed_components(g, m)) {
        auto p = is_schur_positive(wc.gf);
        if (!p.positive) r.fail("i=" + std::to_string(wc.i) + " component at " + g.id(wc.comp.anchor()) + ": " + p.witness);
    }
    return r;
}

AxiomReport check_axiom4a(const SignedColoredGraph& g) {
    AxiomReport r;
    r.axiom = "4a";
    for (int i = 4; i < g.n(); ++i) {
        auto d = defect_sets(g, i);
        for (int w : d.W) {
            if (!g.has_edge(w, i - 1) || is_flat_edge(g, w, i - 1)) continue;
            auto low = component_of(g, w, {i - 2, i - 1});
            auto high = component_of(g, w, {i - 1, i});
            auto a = generating_function(g, low.vertices, i - 3, i - 1);
            auto b = generating_function(g, high.vertices, i - 2, i);
            std::set<Signature> sa, sb;
            for (const auto& [s, c] : a.coeffs) sa.insert(s);
            for (const auto& [s, c] : b.coeffs) sb.insert(s);
            if (sa != sb) {
                r.fail("i=" + std::to_string(i) + " at " + g.id(w) + ": colors " + std::to_string(i - 2) + "," +
                       std::to_string(i - 1) + " and " + std::to_string(i - 1) + "," + std::to_string(i) +
                       " components have different degree 4 supports");
            }
        }
    }
    return r;
}

AxiomReport check_axiom4b(const SignedColoredGraph& g) {
    AxiomReport r;
    r.axiom = "4b";
    for (int i = 4; i < g.n(); ++i) {
        auto d = defect_sets(g, i);
        if (d.C.empty()) continue;
        auto chains = flat_chains(g, i);
        for (int x : d.C) {
            if (!has_i_type_w(g, x, i + 1)) continue;
            bool ok = false;
            for (const auto& c : chains) {
                auto it = std::find(c.vertices.begin(), c.vertices.end(), x);
                if (it == c.vertices.end()) continue;
                bool before = std::all_of(c.vertices.begin(), it, [&](int v) { return has_i_type_w(g, v, i + 1); });
                bool after = std::all_of(it + 1, c.vertices.end(), [&](int v) { return has_i_type_w(g, v, i + 1); });
                ok = ok || before || after;
            }
            if (!ok) {
                r.fail("i=" + std::to_string(i) + " at " + g.id(x) + ": no maximal flat chain has all vertices on one side of " +
                       "type W for color " + std::to_string(i + 1));
            }
        }
    }
    return r;
}

namespace {

void merge(AxiomReport& into, const AxiomReport& part) {
    for (const auto& w : part.witnesses) into.fail(part.axiom + ": " + w);
}

}  // namespace

AxiomReport is_locally_schur_positive(const SignedColoredGraph& g) {
    AxiomReport r;
    r.axiom = "LSP";
    for (int k : {1, 2, 3, 5}) merge(r, check_axiom(g, k));
    for (int m : {4, 5, 6}) merge(r, check_lsp(g, m));
    return r;
}

AxiomReport is_dual_equivalence_graph(const SignedColoredGraph& g) {
    AxiomReport r;
    r.axiom = "DEG";
    for (int k = 1; k <= 6; ++k) merge(r, check_axiom(g, k));
    return r;
}

Classification classify_small_component(const SignedColoredGraph& g, const Component& c, int degree) {
    Classification out;
    if (degree < 4 || degree > 6) {
        out.diagnostic = "classification covers degrees 4, 5 and 6";
        return out;
    }
    int hi = c.colors.empty() ? g.N() - 1 : *std::max_element(c.colors.begin(), c.colors.end());
    int lo = hi - degree + 2;
    if (lo < 1) {
        out.diagnostic = "component colors too low for degree " + std::to_string(degree);
        return out;
    }
    auto sub = induced_subgraph(g, c.vertices);
    AxiomReport pre;
    pre.axiom = "hypotheses";
    merge(pre, check_axiom(sub, 1));
    merge(pre, check_axiom(sub, 2));
    if (!pre.holds) {
        out.diagnostic = "hypotheses fail: " + pre.witnesses.front();
        return out;
    }
    out.expansion = expand_in_schur(generating_function(g, c.vertices, lo, hi));
    if (!out.expansion.exact() || !out.expansion.nonnegative()) {
        out.diagnostic = "generating function " + format_schur_compact(out.expansion) + " is not Schur positive";
        return out;
    }
    const auto& co = out.expansion.coeffs;
    if (co.size() == 1 && co.begin()->second == 1) {
        out.ok = true;
        out.form = "s[" + co.begin()->first.str() + "]";
        return out;
    }
    struct Form {
        std::optional<Partition> base;
        Partition mult;
    };
    std::vector<Form> forms;
    if (degree == 4) forms = {{Partition{3, 1}, {2, 2}}, {Partition{2, 1, 1}, {2, 2}}, {std::nullopt, {2, 2}}};
    if (degree == 5) forms = {{Partition{3, 2}, {3, 1, 1}}, {Partition{2, 2, 1}, {3, 1, 1}}, {std::nullopt, {3, 1, 1}}};
    if (degree == 6) forms = {{std::nullopt, {3, 2, 1}}};
    for (const auto& f : forms) {
        auto it = co.find(f.mult);
        if (it == co.end()) continue;
        std::size_t expected = f.base ? 2 : 1;
        if (co.size() != expected) continue;
        if (f.base && (!co.count(*f.base) || co.at(*f.base) != 1)) continue;
        out.ok = true;
        out.k = it->second;
        out.form = (f.base ? "s[" + f.base->str() + "]+" : std::string()) + "k*s[" + f.mult.str() + "]";
        return out;
    }
    out.diagnostic = "generating function " + format_schur_compact(out.expansion) + " is outside the classification";
    return out;
}

}  // namespace deg
