#include "deg/transform.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "deg/standard.hpp"

namespace deg {

namespace {

std::vector<std::pair<std::string, std::string>> edge_list(const SignedColoredGraph& g, const std::vector<int>& p) {
    std::vector<std::pair<std::string, std::string>> out;
    for (int v = 0; v < g.size(); ++v)
        if (p[v] > v) out.emplace_back(g.id(v), g.id(p[v]));
    return out;
}

TransformStep make_step(const SignedColoredGraph& g, std::string kind, int i, std::vector<int> anchors, int param,
                        const std::vector<int>& touched, const std::vector<int>& next) {
    TransformStep s;
    s.kind = std::move(kind);
    s.color = i;
    for (int a : anchors) s.anchors.push_back(g.id(a));
    s.param = param;
    for (int t : touched) s.touched.push_back(g.id(t));
    const auto& old = g.partners(i);
    std::vector<int> removed(g.size(), -1), added(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (old[v] != next[v]) {
            removed[v] = old[v];
            added[v] = next[v];
        }
    }
    s.removed = edge_list(g, removed);
    s.added = edge_list(g, added);
    return s;
}

void validate_matching(const SignedColoredGraph& g, int i, const std::vector<int>& next, const std::string& what) {
    const auto& old = g.partners(i);
    for (int v = 0; v < g.size(); ++v) {
        int w = next[v];
        if ((w >= 0) != (old[v] >= 0)) throw PreconditionError(what + ": " + g.id(v) + " would gain or lose its i-edge");
        if (w >= 0 && (w == v || next[w] != v)) throw PreconditionError(what + ": result is not a matching at " + g.id(v));
    }
}

// phi/psi: new E_i(v) = Phi(v) on the packages, E_i Phi E_i(v) one step out.
// gamma: new E_i(v) = E_i Phi(v) on the packages, Phi E_i(v) one step out.
std::vector<int> package_rewire(const SignedColoredGraph& g, int i, const VertexMap& phi, bool gammaStyle,
                                std::vector<int>& touched, const std::string& what) {
    std::map<int, int> Phi;
    for (auto [a, b] : phi) {
        auto put = [&](int x, int y) {
            auto [it, fresh] = Phi.emplace(x, y);
            if (!fresh && it->second != y) throw PreconditionError(what + ": packages overlap inconsistently at " + g.id(x));
        };
        put(a, b);
        put(b, a);
    }
    const auto& old = g.partners(i);
    std::vector<int> next = old;
    for (int v = 0; v < g.size(); ++v) {
        auto self = Phi.find(v);
        if (self != Phi.end()) {
            next[v] = gammaStyle ? old[self->second] : self->second;
            continue;
        }
        if (old[v] < 0) continue;
        auto out = Phi.find(old[v]);
        if (out != Phi.end()) next[v] = gammaStyle ? out->second : old[out->second];
    }
    for (auto [x, y] : Phi) touched.push_back(x);
    std::sort(touched.begin(), touched.end());
    validate_matching(g, i, next, what);
    return next;
}

bool in_w0(const DefectSets& d, int v) { return d.W0.count(v) > 0; }

}  // namespace

SignedColoredGraph apply_step(const SignedColoredGraph& g, const TransformStep& step) {
    if (!g.is_color(step.color)) throw std::invalid_argument("step color outside the graph");
    std::vector<int> p = g.partners(step.color);
    auto present = [&](const std::vector<std::pair<std::string, std::string>>& es) {
        for (const auto& [a, b] : es) {
            int x = g.index_of(a), y = g.index_of(b);
            if (p[x] != y) return false;
        }
        return true;
    };
    bool forward = present(step.removed);
    bool backward = !forward && present(step.added);
    if (!forward && !backward) throw std::invalid_argument(step.kind + " step does not match the graph");
    const auto& drop = forward ? step.removed : step.added;
    const auto& put = forward ? step.added : step.removed;
    for (const auto& [a, b] : drop) {
        p[g.index_of(a)] = -1;
        p[g.index_of(b)] = -1;
    }
    for (const auto& [a, b] : put) {
        int x = g.index_of(a), y = g.index_of(b);
        if (p[x] >= 0 || p[y] >= 0) throw std::invalid_argument(step.kind + " step creates a conflicting edge");
        p[x] = y;
        p[y] = x;
    }
    SignedColoredGraph out = g;
    out.set_partners(step.color, std::move(p));
    return out;
}

std::optional<VertexMap> package_isomorphism(const SignedColoredGraph& g, int a, int b, int i) {
    std::vector<int> positions;
    for (int p = 1; p <= i - 3; ++p) positions.push_back(p);
    for (int p = i + 2; p <= g.N() - 1; ++p) positions.push_back(p);
    auto colors = package_colors(g, i);
    auto m = propagate_map(g, g, {{a, b}}, colors, positions);
    if (!m) return std::nullopt;
    auto pa = component_of(g, a, colors);
    auto pb = component_of(g, b, colors);
    if (m->size() != pa.vertices.size() || pa.vertices.size() != pb.vertices.size()) return std::nullopt;
    return m;
}

std::vector<int> phi_path(const SignedColoredGraph& g, int w, int i, int r) {
    std::vector<int> path{w};
    int v = w;
    for (int k = 0; k < 2 * r + 1; ++k) {
        int c = (k % 2 == 0) ? i - 1 : i;
        int y = g.neighbor(v, c);
        if (y < 0) throw PreconditionError("phi path from " + g.id(w) + " stops at " + g.id(v));
        path.push_back(y);
        v = y;
    }
    return path;
}

int max_phi_length(const SignedColoredGraph& g, int w, int i) {
    auto d = defect_sets(g, i);
    int best = 0;
    for (int r = 1; r <= g.size(); ++r) {
        std::vector<int> path;
        try {
            path = phi_path(g, w, i, r);
        } catch (const PreconditionError&) {
            break;
        }
        std::set<int> distinct(path.begin(), path.end());
        if (distinct.size() != path.size()) break;
        if (!std::all_of(path.begin(), path.end(), [&](int v) { return in_w0(d, v); })) break;
        best = r;
    }
    return best;
}

TransformStep plan_phi(const SignedColoredGraph& g, int w, int i, int r, bool strict) {
    if (!g.is_color(i) || i < 3) throw PreconditionError("phi needs 3 <= i < n");
    auto path = phi_path(g, w, i, r);
    if (strict) {
        auto d = defect_sets(g, i);
        for (int v : path) {
            if (!in_w0(d, v)) {
                throw PreconditionError("phi_" + std::to_string(i) + " at " + g.id(w) + ": " + g.id(v) + " is not in W_" +
                                        std::to_string(i) + "^0");
            }
        }
    }
    int u = path.back();
    if (u == w) throw PreconditionError("phi at " + g.id(w) + ": partner equals anchor");
    auto phi = package_isomorphism(g, w, u, i);
    if (!phi) throw PreconditionError("phi at " + g.id(w) + ": packages of " + g.id(w) + " and " + g.id(u) + " are not isomorphic");
    std::vector<int> touched;
    auto next = package_rewire(g, i, *phi, false, touched, "phi_" + std::to_string(i) + " at " + g.id(w));
    return make_step(g, "phi", i, {w, u}, r, touched, next);
}

int max_psi_length(const SignedColoredGraph& g, int x, int i) {
    int best = 0;
    for (int r = 1; r <= g.size(); ++r) {
        std::vector<int> path;
        try {
            path = psi_path(g, x, i, r);
        } catch (const PreconditionError&) {
            break;
        }
        std::set<int> distinct(path.begin(), path.end());
        if (distinct.size() != path.size()) break;
        bool flat = true;
        for (int v : path) {
            if (!g.has_edge(v, i - 2)) flat = false;
            else
                for (int p : i_package(g, v, i - 2).vertices)
                    if (!g.has_edge(p, i - 2) || !is_flat_edge(g, p, i - 2)) flat = false;
        }
        if (!flat) break;
        best = r;
    }
    return best;
}

TransformStep plan_psi(const SignedColoredGraph& g, int x, int i, int r, bool strict) {
    if (!g.is_color(i) || i < 4) throw PreconditionError("psi needs 4 <= i < n");
    if (strict) {
        auto d = defect_sets(g, i);
        if (!d.C0.count(x)) throw PreconditionError("psi_" + std::to_string(i) + " at " + g.id(x) + ": not in C_" + std::to_string(i) + "^0");
    }
    auto path = psi_path(g, x, i, r);
    int u = path.back();
    int a = g.neighbor(x, i - 2), b = g.neighbor(u, i - 2);
    if (a < 0 || b < 0) throw PreconditionError("psi at " + g.id(x) + ": missing " + std::to_string(i - 2) + "-edge");
    if (a == b) throw PreconditionError("psi at " + g.id(x) + ": packages coincide");
    auto phi = package_isomorphism(g, a, b, i);
    if (!phi) throw PreconditionError("psi at " + g.id(x) + ": packages of " + g.id(a) + " and " + g.id(b) + " are not isomorphic");
    std::vector<int> touched;
    auto next = package_rewire(g, i, *phi, false, touched, "psi_" + std::to_string(i) + " at " + g.id(x));
    return make_step(g, "psi", i, {x, u}, r, touched, next);
}

namespace {

bool gamma_endpoint(const SignedColoredGraph& g, int y, int i) {
    return g.has_edge(y, i - 2) && is_flat_edge(g, y, i - 2) && !has_i_type_w(g, y, i - 1);
}

std::optional<std::pair<int, int>> gamma_partner(const SignedColoredGraph& g, int z, int i, int m) {
    int y = z;
    for (int k = 1; k <= g.size(); ++k) {
        int a = g.neighbor(y, i);
        if (a < 0) return std::nullopt;
        y = g.neighbor(a, i - 1);
        if (y < 0 || y == z) return std::nullopt;
        if (m > 0 && k < m) continue;
        if (gamma_endpoint(g, y, i)) return std::make_pair(y, k);
        if (m > 0) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

bool gamma_applies(const SignedColoredGraph& g, int z, int i) {
    if (i < 4 || !g.is_color(i) || !g.has_edge(z, i) || is_flat_edge(g, z, i)) return false;
    if (!gamma_endpoint(g, z, i)) return false;
    return gamma_partner(g, z, i, 0).has_value();
}

TransformStep plan_gamma(const SignedColoredGraph& g, int z, int i, int m, bool strict) {
    if (!g.is_color(i) || i < 4) throw PreconditionError("gamma needs 4 <= i < n");
    if (strict) {
        if (!g.has_edge(z, i) || is_flat_edge(g, z, i))
            throw PreconditionError("gamma at " + g.id(z) + ": needs a non-flat " + std::to_string(i) + "-edge");
        if (!gamma_endpoint(g, z, i))
            throw PreconditionError("gamma at " + g.id(z) + ": needs a flat " + std::to_string(i - 2) +
                                    "-edge and no type W for color " + std::to_string(i - 1));
    }
    auto partner = gamma_partner(g, z, i, m);
    if (!partner) throw PreconditionError("gamma at " + g.id(z) + ": no admissible partner");
    int u = partner->first;
    int a = g.neighbor(z, i - 2), b = g.neighbor(u, i - 2);
    if (a < 0 || b < 0 || a == b) throw PreconditionError("gamma at " + g.id(z) + ": bad " + std::to_string(i - 2) + "-edges");
    auto phi = package_isomorphism(g, a, b, i);
    if (!phi) throw PreconditionError("gamma at " + g.id(z) + ": packages are not isomorphic");
    std::vector<int> touched;
    auto next = package_rewire(g, i, *phi, true, touched, "gamma_" + std::to_string(i) + " at " + g.id(z));
    return make_step(g, "gamma", i, {z, u}, partner->second, touched, next);
}

TransformStep plan_theta(const SignedColoredGraph& g, const Component& c, int i) {
    if (!g.is_color(i)) throw PreconditionError("theta needs 1 < i < n");
    auto h = component_of(g, c.anchor(), color_range(2, i));
    auto lower = color_range(2, i - 1);
    auto positions = position_range(1, i - 1);
    struct Piece {
        Component comp;
        Partition shape;
    };
    std::vector<Piece> pieces;
    std::vector<int> pieceOf(g.size(), -1);
    for (int v : h.vertices) {
        if (pieceOf[v] >= 0) continue;
        auto comp = component_of(g, v, lower);
        auto id = identify_component(g, comp, i);
        if (!id) throw HypothesisError("theta: component at " + g.id(comp.anchor()) + " is not a standard graph");
        for (int x : comp.vertices) pieceOf[x] = static_cast<int>(pieces.size());
        pieces.push_back({comp, id->shape});
    }
    int home = pieceOf[c.anchor()];
    for (int v : c.vertices)
        if (pieceOf[v] != home) throw PreconditionError("theta: C is not a component of colors 2.." + std::to_string(i - 1));
    std::set<int> adjacent;
    for (int v : c.vertices) {
        int w = g.neighbor(v, i);
        if (w >= 0 && pieceOf[w] != home) adjacent.insert(pieceOf[w]);
    }
    std::map<int, VertexMap> phi;  // piece B' -> isomorphism onto its twin in E_i(C)
    for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
        if (k == home || adjacent.count(k)) continue;
        std::vector<int> twins;
        for (int b : adjacent)
            if (pieces[b].shape == pieces[k].shape) twins.push_back(b);
        if (twins.empty()) continue;
        if (twins.size() > 1) throw HypothesisError("theta: several components adjacent to C match " + g.id(pieces[k].comp.anchor()));
        const auto& bp = pieces[k].comp;
        const auto& b = pieces[twins.front()].comp;
        if (count_component_isomorphisms(g, bp, g, b, positions, 2) != 1)
            throw HypothesisError("theta: isomorphism from " + g.id(bp.anchor()) + " is not unique");
        phi[k] = *component_isomorphism(g, bp, g, b, positions);
    }
    const auto& old = g.partners(i);
    std::vector<int> next = old;
    std::vector<int> touched;
    for (int u : h.vertices) {
        int e = old[u];
        if (e < 0) continue;
        if (adjacent.count(pieceOf[u]) && phi.count(pieceOf[e])) {
            next[u] = phi[pieceOf[e]].at(e);
            touched.push_back(u);
        } else if (adjacent.count(pieceOf[e]) && phi.count(pieceOf[u])) {
            next[u] = old[phi[pieceOf[u]].at(u)];
            touched.push_back(u);
        }
    }
    validate_matching(g, i, next, "theta_" + std::to_string(i) + " at " + g.id(c.anchor()));
    return make_step(g, "theta", i, {c.anchor()}, 0, touched, next);
}

SignedColoredGraph apply_phi(const SignedColoredGraph& g, int w, int i, int r) { return apply_step(g, plan_phi(g, w, i, r)); }
SignedColoredGraph apply_psi(const SignedColoredGraph& g, int x, int i, int r) { return apply_step(g, plan_psi(g, x, i, r)); }
SignedColoredGraph apply_gamma(const SignedColoredGraph& g, int z, int i, int m) { return apply_step(g, plan_gamma(g, z, i, m)); }
SignedColoredGraph apply_theta(const SignedColoredGraph& g, const Component& c, int i) {
    return apply_step(g, plan_theta(g, c, i));
}

std::vector<UElement> set_U(const SignedColoredGraph& g, int i) {
    std::vector<UElement> out;
    if (!g.is_color(i) || i < 3) return out;
    auto d = defect_sets(g, i);
    bool lsp4 = check_lsp(g, 4).holds, lsp5 = check_lsp(g, 5).holds;
    auto keeps = [&](const TransformStep& step) {
        auto next = apply_step(g, step);
        if (!colors_schur_positive(next, i)) return false;
        if (lsp4 && !check_lsp(next, 4).holds) return false;
        return !(lsp5 && !check_lsp(next, 5).holds);
    };
    for (int w : d.W0) {
        try {
            if (keeps(plan_phi(g, w, i, 0, false))) out.push_back({'p', w});
        } catch (const PreconditionError&) {
        }
    }
    for (int x : d.C0) {
        try {
            if (keeps(plan_psi(g, x, i, 0, false))) out.push_back({'s', x});
        } catch (const PreconditionError&) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Policy parse_policy(const std::string& name) {
    Policy p;
    p.name = name;
    if (name == "default") return p;
    if (name == "short") {
        p.preferLong = false;
        return p;
    }
    if (name == "reverse") {
        p.reverse = true;
        return p;
    }
    throw std::invalid_argument("unknown policy '" + name + "' (expected default, short or reverse)");
}

namespace {

struct LspState {
    std::map<std::string, bool> parts;
};

LspState lsp_state(const SignedColoredGraph& g) {
    LspState s;
    for (int k : {1, 2, 3, 5}) s.parts["axiom " + std::to_string(k)] = check_axiom(g, k).holds;
    for (int m : {4, 5, 6}) s.parts["LSP_" + std::to_string(m)] = check_lsp(g, m).holds;
    return s;
}

std::string broken_parts(const LspState& before, const LspState& after) {
    std::string out;
    for (const auto& [k, held] : before.parts) {
        if (held && !after.parts.at(k)) out += (out.empty() ? "" : ", ") + k;
    }
    return out;
}

struct Runner {
    SignedColoredGraph g;
    TransformLog log;
    Policy policy;
    QSymFunction gf;
    LspState lsp;
    int budget = 0;
    int used = 0;

    void abort(int i, const std::string& why, int focus) {
        log.aborted = true;
        log.abortColor = i;
        log.diagnostic = why;
        if (focus >= 0) {
            auto comp = component_of(g, focus, color_range(2, std::min(i, g.n() - 1)));
            log.offending = induced_subgraph(g, comp.vertices);
        }
    }

    bool commit(const TransformStep& step, int i, int focus) {
        if (++used > budget) {
            abort(i, "step budget of " + std::to_string(budget) + " exhausted", focus);
            return false;
        }
        auto next = apply_step(g, step);
        if (!(generating_function(next) == gf)) {
            abort(i, step.kind + " changed the generating function", focus);
            return false;
        }
        auto after = lsp_state(next);
        std::string broken = broken_parts(lsp, after);
        g = std::move(next);
        log.steps.push_back(step);
        std::string anchors;
        for (const auto& a : step.anchors) anchors += (anchors.empty() ? "" : ",") + a;
        log.checkpoints.push_back(step.kind + "_" + std::to_string(i) + " at " + anchors + ": " +
                                  (broken.empty() ? "locally Schur positive parts preserved" : "breaks " + broken));
        if (!broken.empty()) {
            abort(i, step.kind + "_" + std::to_string(i) + " at " + anchors + " breaks " + broken, focus);
            return false;
        }
        return true;
    }

    std::optional<TransformStep> choose_u(int i) {
        auto u = set_U(g, i);
        if (u.empty()) return std::nullopt;
        if (policy.reverse) {
            std::stable_sort(u.begin(), u.end(), [](const UElement& a, const UElement& b) {
                return a.kind != b.kind ? a.kind < b.kind : a.anchor > b.anchor;
            });
        }
        const auto& e = u.front();
        auto d = defect_sets(g, i);
        if (policy.preferLong) {
            int rmax = e.kind == 'p' ? max_phi_length(g, e.anchor, i) : max_psi_length(g, e.anchor, i);
            for (int r = rmax; r >= 1; --r) {
                try {
                    auto step = e.kind == 'p' ? plan_phi(g, e.anchor, i, r, false) : plan_psi(g, e.anchor, i, r, false);
                    auto next = apply_step(g, step);
                    if (!colors_schur_positive(next, i)) continue;
                    auto nd = defect_sets(next, i);
                    const auto& before = e.kind == 'p' ? d.W : d.C;
                    const auto& after = e.kind == 'p' ? nd.W : nd.C;
                    if (after.size() < before.size() && std::includes(before.begin(), before.end(), after.begin(), after.end()))
                        return step;
                } catch (const PreconditionError&) {
                }
            }
        }
        return e.kind == 'p' ? plan_phi(g, e.anchor, i, 0, false) : plan_psi(g, e.anchor, i, 0, false);
    }

    std::optional<TransformStep> choose_gamma(int i) {
        std::vector<int> order(g.size());
        for (int v = 0; v < g.size(); ++v) order[v] = policy.reverse ? g.size() - 1 - v : v;
        for (int z : order) {
            if (!gamma_applies(g, z, i)) continue;
            try {
                auto step = plan_gamma(g, z, i);
                if (!set_U(apply_step(g, step), i).empty()) return step;
            } catch (const PreconditionError&) {
            }
        }
        return std::nullopt;
    }

    bool resolve_axiom4(int i) {
        while (true) {
            auto d = defect_sets(g, i);
            if (d.W.empty() && d.C.empty()) return true;
            int focus = !d.W.empty() ? *d.W.begin() : *d.C.begin();
            std::optional<TransformStep> step;
            try {
                step = choose_u(i);
                if (!step) step = choose_gamma(i);
            } catch (const std::exception& e) {
                abort(i, e.what(), focus);
                return false;
            }
            if (!step) {
                abort(i, "U_" + std::to_string(i) + " is empty and no gamma_" + std::to_string(i) + " makes it nonempty", focus);
                return false;
            }
            if (!commit(*step, i, focus)) return false;
        }
    }

    // Component of colors 2..i whose E_i super-graph is not complete, if any.
    std::optional<Component> axiom6_failure(int i) {
        auto super = component_labels(g, color_range(2, i - 1));
        for (const auto& c : components(g, color_range(2, i))) {
            std::set<int> nodes;
            std::set<std::pair<int, int>> adj;
            for (int v : c.vertices) {
                nodes.insert(super[v]);
                int w = g.neighbor(v, i);
                if (w >= 0) adj.insert({super[v], super[w]});
            }
            for (int a : nodes)
                for (int b : nodes)
                    if (a < b && !adj.count({a, b})) return c;
        }
        return std::nullopt;
    }

    bool repair(int i, const DefectSets& w1, const DefectSets& c2) {
        for (int guard = 0; guard <= budget; ++guard) {
            bool progressed = false;
            if (g.is_color(i + 1)) {
                auto d = defect_sets(g, i + 1);
                for (int w : d.W0) {
                    if (w1.W.count(w)) continue;
                    try {
                        if (!commit(plan_phi(g, w, i + 1, 0, false), i + 1, w)) return false;
                        progressed = true;
                        break;
                    } catch (const PreconditionError&) {
                    }
                }
            }
            if (!progressed && g.is_color(i + 2)) {
                auto d = defect_sets(g, i + 2);
                for (int x : d.C0) {
                    if (c2.C.count(x)) continue;
                    try {
                        if (!commit(plan_psi(g, x, i + 2, 0, false), i + 2, x)) return false;
                        progressed = true;
                        break;
                    } catch (const PreconditionError&) {
                    }
                }
            }
            if (!progressed) return true;
        }
        return true;
    }

    bool resolve_axiom6(int i) {
        while (auto h = axiom6_failure(i)) {
            std::optional<Component> c;
            try {
                c = negatively_dominant(g, *h, i);
            } catch (const HypothesisError& e) {
                abort(i, e.what(), h->anchor());
                return false;
            }
            if (!c) {
                abort(i, "no negatively dominant component", h->anchor());
                return false;
            }
            auto w1 = defect_sets(g, i + 1);
            auto c2 = defect_sets(g, i + 2);
            try {
                if (!commit(plan_theta(g, *c, i), i, c->anchor())) return false;
            } catch (const std::exception& e) {
                abort(i, e.what(), c->anchor());
                return false;
            }
            if (!repair(i, w1, c2)) return false;
        }
        return true;
    }

    bool run(int i) {
        if (!g.is_color(i)) return true;
        if (!resolve_axiom4(i) || !resolve_axiom6(i)) return false;
        auto restricted = restrict(g, i + 1);
        auto r = is_dual_equivalence_graph(restricted);
        if (!r.holds) {
            int focus = 0;
            abort(i, "the restriction to colors 2.." + std::to_string(i) + " is not a dual equivalence graph: " + r.witnesses.front(),
                  focus);
            return false;
        }
        return true;
    }
};

}  // namespace

StepResult one_step(const SignedColoredGraph& g, int i, const Policy& policy) {
    Runner run{g, {}, policy, generating_function(g), lsp_state(g), 4 * g.size() * g.n(), 0};
    run.log.policy = policy.name;
    run.run(i);
    return {run.g, run.log};
}

PipelineResult full_pipeline(const SignedColoredGraph& g, const Policy& policy, int stopAt) {
    int last = stopAt > 0 ? std::min(stopAt, g.n() - 1) : g.n() - 1;
    Runner run{g, {}, policy, generating_function(g), lsp_state(g), 4 * g.size() * g.n(), 0};
    run.log.policy = policy.name;
    for (int i = 2; i <= last; ++i) {
        if (!run.run(i)) break;
    }
    PipelineResult out{run.g, run.log, expand_in_schur(generating_function(run.g)), {}, false};
    if (!run.log.aborted && last == g.n() - 1) {
        auto deg = is_dual_equivalence_graph(run.g);
        if (!deg.holds) {
            out.log.aborted = true;
            out.log.diagnostic = "result is not a dual equivalence graph: " + deg.witnesses.front();
        } else {
            out.certified = true;
            for (const auto& c : components(run.g, color_range(2, run.g.n() - 1))) {
                auto id = identify_component(run.g, c);
                out.shapes.push_back({run.g.id(c.anchor()), id ? std::optional<Partition>(id->shape) : std::nullopt});
                if (!id) out.certified = false;
            }
            if (!out.certified) {
                out.log.aborted = true;
                out.log.diagnostic = "a component of the result is not a standard graph";
            }
        }
    }
    return out;
}

SignedColoredGraph replay(const SignedColoredGraph& g, const TransformLog& log) {
    SignedColoredGraph out = g;
    for (const auto& s : log.steps) out = apply_step(out, s);
    return out;
}

std::string write_log(const TransformLog& log) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["policy"] = log.policy;
    doc["aborted"] = log.aborted;
    if (log.aborted) {
        doc["abort_color"] = log.abortColor;
        doc["diagnostic"] = log.diagnostic;
    }
    ordered_json steps = ordered_json::array();
    for (const auto& s : log.steps) {
        ordered_json js;
        js["kind"] = s.kind;
        js["color"] = s.color;
        js["anchors"] = s.anchors;
        js["param"] = s.param;
        js["touched"] = s.touched;
        ordered_json rem = ordered_json::array(), add = ordered_json::array();
        for (const auto& [a, b] : s.removed) rem.push_back({a, b});
        for (const auto& [a, b] : s.added) add.push_back({a, b});
        js["removed"] = rem;
        js["added"] = add;
        steps.push_back(js);
    }
    doc["steps"] = steps;
    doc["checkpoints"] = log.checkpoints;
    return doc.dump(2) + "\n";
}

TransformLog parse_log(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    TransformLog log;
    log.policy = doc.value("policy", std::string("default"));
    log.aborted = doc.value("aborted", false);
    log.abortColor = doc.value("abort_color", 0);
    log.diagnostic = doc.value("diagnostic", std::string());
    for (const auto& js : doc.at("steps")) {
        TransformStep s;
        s.kind = js.at("kind").get<std::string>();
        s.color = js.at("color").get<int>();
        s.anchors = js.value("anchors", std::vector<std::string>{});
        s.param = js.value("param", 0);
        s.touched = js.value("touched", std::vector<std::string>{});
        for (const auto& e : js.at("removed")) s.removed.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        for (const auto& e : js.at("added")) s.added.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        log.steps.push_back(std::move(s));
    }
    if (doc.contains("checkpoints")) log.checkpoints = doc.at("checkpoints").get<std::vector<std::string>>();
    return log;
}

}  // namespace deg
