#include "deg/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "deg/standard.hpp"

namespace deg {

std::string to_string(IType t) {
    switch (t) {
        case IType::W: return "W";
        case IType::A: return "A";
        case IType::B: return "B";
        case IType::C: return "C";
        default: return "none";
    }
}

bool has_i_type_w(const SignedColoredGraph& g, int v, int i) {
    if (i < 3 || !g.has_edge(v, i)) return false;
    int y = g.neighbor(v, i - 1);
    return y >= 0 && g.sign(v, i) == -g.sign(y, i);
}

IType i_type(const SignedColoredGraph& g, int v, int i) {
    if (!g.has_edge(v, i)) return IType::None;
    if (has_i_type_w(g, v, i)) return IType::W;
    if (i < 4) return IType::None;
    int y = g.neighbor(v, i - 2);
    if (y < 0) return IType::A;
    if (g.has_edge(v, i - 1)) {
        return g.sign(v, i - 1) == -g.sign(y, i - 1) ? IType::B : IType::C;
    }
    int z = g.neighbor(y, i - 1);
    if (z < 0) {
        throw HypothesisError("i-type of " + g.id(v) + " at color " + std::to_string(i) + ": " + g.id(y) +
                              " has no " + std::to_string(i - 1) + "-neighbor (axiom 3 fails)");
    }
    return g.sign(v, i) == -g.sign(z, i) ? IType::B : IType::C;
}

bool is_flat_edge(const SignedColoredGraph& g, int v, int i) {
    int x = g.neighbor(v, i);
    if (x < 0) throw std::invalid_argument("is_flat_edge: " + g.id(v) + " has no " + std::to_string(i) + "-edge");
    if (i < 3) return true;
    return g.sign(v, i - 2) == g.sign(x, i - 2);
}

std::optional<std::pair<int, int>> flat_step(const SignedColoredGraph& g, int x, int i) {
    int y = x;
    for (int m = 0; m <= g.size(); ++m) {
        int a = g.neighbor(y, i - 2);
        if (a < 0) return std::nullopt;
        if (!has_i_type_w(g, y, i - 1)) return std::make_pair(a, m);
        int b = g.neighbor(a, i - 1);
        if (b < 0) return std::nullopt;
        y = b;
        if (y == x) return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Greedy forward growth: x1 -E_i-> x2 -step-> x3 -E_i-> x4 ...
Chain grow_flat(const SignedColoredGraph& g, int start, int i) {
    Chain c{i, true, {}, {}};
    if (g.neighbor(start, i - 2) < 0) return c;
    std::vector<bool> used(g.size(), false);
    int cur = start;
    std::vector<int> seq{start};
    used[start] = true;
    std::vector<int> offs;
    while (true) {
        int x2 = g.neighbor(cur, i);
        if (x2 < 0 || used[x2] || g.neighbor(x2, i - 2) < 0) break;
        seq.push_back(x2);
        used[x2] = true;
        auto nx = flat_step(g, x2, i);
        if (!nx || used[nx->first] || !g.has_edge(nx->first, i)) break;
        int x3 = nx->first;
        int x4 = g.neighbor(x3, i);
        if (used[x4] || x4 == x3 || g.neighbor(x4, i - 2) < 0) break;
        seq.push_back(x3);
        used[x3] = true;
        offs.push_back(nx->second);
        cur = x3;
    }
    if (seq.size() % 2 == 1) seq.pop_back();
    if (seq.size() < 2) return c;
    c.vertices = seq;
    offs.resize(seq.size() / 2 - 1);
    c.offsets = offs;
    return c;
}

bool contains_segment(const std::vector<int>& big, const std::vector<int>& small) {
    if (small.size() >= big.size()) return false;
    for (std::size_t k = 0; k + small.size() <= big.size(); k += 2) {
        if (std::equal(small.begin(), small.end(), big.begin() + static_cast<long>(k))) return true;
    }
    return false;
}

std::vector<Chain> keep_maximal(std::vector<Chain> chains, const SignedColoredGraph& g) {
    std::vector<Chain> out;
    for (std::size_t a = 0; a < chains.size(); ++a) {
        bool inside = false;
        for (std::size_t b = 0; b < chains.size() && !inside; ++b) {
            if (a == b) continue;
            std::vector<int> rev(chains[b].vertices.rbegin(), chains[b].vertices.rend());
            inside = contains_segment(chains[b].vertices, chains[a].vertices) ||
                     contains_segment(rev, chains[a].vertices);
        }
        if (inside) continue;
        // record a chain and its reversal once, keyed by the lexicographically least endpoint
        std::vector<int> rev(chains[a].vertices.rbegin(), chains[a].vertices.rend());
        bool dup = false;
        for (const auto& o : out) dup = dup || o.vertices == chains[a].vertices || o.vertices == rev;
        if (dup) continue;
        if (g.id(chains[a].vertices.back()) < g.id(chains[a].vertices.front())) {
            bool revValid = false;
            for (const auto& o : chains) revValid = revValid || o.vertices == rev;
            if (revValid) continue;
        }
        out.push_back(chains[a]);
    }
    return out;
}

}  // namespace

std::vector<Chain> flat_chains(const SignedColoredGraph& g, int i) {
    std::vector<Chain> all;
    if (i < 4 || !g.is_color(i)) return all;
    for (int v = 0; v < g.size(); ++v) {
        auto c = grow_flat(g, v, i);
        if (!c.vertices.empty()) all.push_back(std::move(c));
    }
    return keep_maximal(std::move(all), g);
}

std::vector<Chain> nonflat_chains(const SignedColoredGraph& g, int i) {
    std::vector<Chain> all;
    if (i < 3 || !g.is_color(i)) return all;
    for (int v = 0; v < g.size(); ++v) {
        if (!g.has_edge(v, i)) continue;
        std::vector<bool> used(g.size(), false);
        std::vector<int> seq{v};
        used[v] = true;
        int cur = v;
        while (true) {
            int x2 = g.neighbor(cur, i);
            if (x2 < 0 || used[x2]) break;
            seq.push_back(x2);
            used[x2] = true;
            int x3 = g.neighbor(x2, i - 1);
            if (x3 < 0 || used[x3] || !g.has_edge(x3, i) || used[g.neighbor(x3, i)]) break;
            seq.push_back(x3);
            used[x3] = true;
            cur = x3;
        }
        if (seq.size() % 2 == 1) seq.pop_back();
        if (seq.size() >= 2) all.push_back(Chain{i, false, seq, {}});
    }
    return keep_maximal(std::move(all), g);
}

namespace {

bool package_flat(const SignedColoredGraph& g, int v, int c) {
    if (!g.is_color(c)) return false;
    for (int p : i_package(g, v, c).vertices) {
        if (!g.has_edge(p, c) || !is_flat_edge(g, p, c)) return false;
    }
    return true;
}

}  // namespace

std::vector<int> psi_path(const SignedColoredGraph& g, int x, int i, int r) {
    std::vector<int> path{x};
    auto step = [&](int v, int c) {
        int y = g.neighbor(v, c);
        if (y < 0) throw PreconditionError("psi path from " + g.id(x) + " leaves the graph at " + g.id(v));
        path.push_back(y);
        return y;
    };
    int v = x;
    for (int k = 0; k < r; ++k) {
        v = step(v, i);
        v = step(v, i - 2);
        v = step(v, i);
        v = step(v, i - 2);
    }
    v = step(v, i);
    for (int guard = 0; has_i_type_w(g, v, i - 1); ++guard) {
        if (guard > g.size()) throw PreconditionError("psi path from " + g.id(x) + " does not terminate");
        v = step(v, i - 2);
        v = step(v, i - 1);
    }
    return path;
}

DefectSets defect_sets(const SignedColoredGraph& g, int i) {
    DefectSets d;
    if (!g.is_color(i)) return d;
    for (int v = 0; v < g.size(); ++v) {
        if (has_i_type_w(g, v, i) && g.neighbor(v, i - 1) != g.neighbor(v, i)) d.W.insert(v);
    }
    for (int w : d.W) {
        if (package_flat(g, w, i - 1)) d.W0.insert(w);
    }
    for (const auto& c : flat_chains(g, i)) {
        int len = static_cast<int>(c.vertices.size());
        if (len <= 4) continue;
        for (int j = 3; j <= len - 2; ++j) d.C.insert(c.vertices[j - 1]);
    }
    for (int x : d.C) {
        bool ok = true;
        try {
            for (int p : psi_path(g, x, i)) {
                if (!g.has_edge(p, i - 2) || !package_flat(g, p, i - 2)) {
                    ok = false;
                    break;
                }
            }
        } catch (const PreconditionError&) {
            ok = false;
        }
        if (ok) d.C0.insert(x);
    }
    return d;
}

bool colors_schur_positive(const SignedColoredGraph& g, int i) {
    int lo = std::max(2, i - 2);
    int wlo = std::max(1, i - 3);
    for (const auto& c : components(g, color_range(lo, i))) {
        if (!is_schur_positive(generating_function(g, c.vertices, wlo, i)).positive) return false;
    }
    return true;
}

std::optional<Component> negatively_dominant(const SignedColoredGraph& g, const Component& h, int i) {
    struct Piece {
        Component comp;
        Partition shape;
        int sign;
    };
    std::vector<Piece> pieces;
    auto lower = color_range(2, i - 1);
    std::set<int> seen;
    for (int v : h.vertices) {
        if (seen.count(v)) continue;
        auto c = component_of(g, v, lower);
        for (int x : c.vertices) seen.insert(x);
        auto id = identify_component(g, c, i);
        if (!id) {
            throw HypothesisError("restricted component at " + g.id(c.anchor()) + " is not a standard graph of degree " +
                                  std::to_string(i));
        }
        int s = 1;
        if (i + 1 <= g.N() - 1) {
            s = g.sign(c.anchor(), i + 1);
            for (int x : c.vertices) {
                if (g.sign(x, i + 1) != s) {
                    throw HypothesisError("sigma_" + std::to_string(i + 1) + " not constant on component at " +
                                          g.id(c.anchor()));
                }
            }
        }
        pieces.push_back({c, id->shape, s});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.comp.anchor() < b.comp.anchor(); });
    bool anyNegative = std::any_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.sign < 0; });
    int want = anyNegative ? -1 : 1;
    for (const auto& p : pieces) {
        if (p.sign != want) continue;
        bool dominant = true;
        for (const auto& q : pieces)
            if (q.sign == want && !dominance_ge(p.shape, q.shape)) dominant = false;
        if (dominant) return p.comp;
    }
    return std::nullopt;
}

int RLCTree::count(char label, char sign) const {
    int k = 0;
    for (const auto& nd : nodes) k += (nd.label == label && nd.sign == sign) ? 1 : 0;
    return k;
}

RLCTree build_rlc_tree(const SignedColoredGraph& g, const Component& c, int i) {
    RLCTree t;
    t.color = i;
    if (i < 4 || !g.is_color(i)) {
        t.diagnostics.push_back("RLC trees need 4 <= i < n");
        return t;
    }
    auto two = color_range(i - 2, i - 1);
    std::map<int, int> nodeOf;
    for (int v : c.vertices) {
        if (nodeOf.count(v)) continue;
        auto piece = component_of(g, v, two);
        int id = static_cast<int>(t.nodes.size());
        RLCNode nd;
        nd.vertices = piece.vertices;
        for (int x : piece.vertices) nodeOf[x] = id;
        t.nodes.push_back(nd);
    }
    for (auto& nd : t.nodes) {
        for (int v : nd.vertices) {
            IType ty;
            try {
                ty = i_type(g, v, i);
            } catch (const HypothesisError& e) {
                t.diagnostics.push_back(e.what());
                continue;
            }
            std::string win = window(g.sigma(v), i - 3, i);
            if (ty == IType::C && nd.label == '?') {
                nd.label = 'C';
                for (int x : nd.vertices) {
                    if (!g.has_edge(x, i - 2) && !g.has_edge(x, i)) nd.sign = window(g.sigma(x), i - 3, i) == "++--" ? '+' : '-';
                }
            } else if (ty == IType::B && g.neighbor(v, i - 2) == g.neighbor(v, i - 1)) {
                nd.label = 'L';
                nd.sign = win == "-+-+" ? '+' : '-';
            } else if (ty == IType::B && has_i_type_w(g, g.neighbor(v, i - 2), i)) {
                nd.label = 'R';
                nd.sign = win == "-++-" ? '+' : '-';
            }
        }
    }
    for (int v : c.vertices) {
        if (g.has_edge(v, i - 2) || !g.has_edge(v, i) || g.neighbor(v, i - 1) != g.neighbor(v, i)) continue;
        if (t.rootVertex >= 0) t.diagnostics.push_back("second root candidate " + g.id(v));
        else t.rootVertex = v;
    }
    if (t.rootVertex < 0) {
        t.diagnostics.push_back("no root: no vertex without an " + std::to_string(i - 2) + "-neighbor has E_" +
                                std::to_string(i - 1) + " = E_" + std::to_string(i));
        return t;
    }
    t.root = nodeOf[t.rootVertex];
    if (t.nodes[t.root].label == '?') t.nodes[t.root].label = 'R';
    std::vector<int> order{t.root};
    std::vector<bool> visited(t.nodes.size(), false);
    visited[t.root] = true;
    int loops = 0;
    std::set<std::pair<int, int>> seenEdges;
    for (std::size_t k = 0; k < order.size(); ++k) {
        int node = order[k];
        for (int v : t.nodes[node].vertices) {
            int w = g.neighbor(v, i);
            if (w < 0 || !seenEdges.insert({std::min(v, w), std::max(v, w)}).second) continue;
            int other = nodeOf.count(w) ? nodeOf[w] : -1;
            if (other == node) {
                ++loops;
                continue;
            }
            if (visited[other]) {
                t.diagnostics.push_back("cycle through " + g.id(v) + "-" + g.id(w));
                continue;
            }
            visited[other] = true;
            t.nodes[other].parent = node;
            t.edges.push_back({node, other, v, w, is_flat_edge(g, v, i)});
            order.push_back(other);
        }
    }
    if (loops != 1) t.diagnostics.push_back("expected exactly one root loop, found " + std::to_string(loops));
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
        if (t.nodes[k].label == '?') t.diagnostics.push_back("unlabeled node at " + g.id(t.nodes[k].vertices.front()));
        if (!visited[k]) t.diagnostics.push_back("node unreachable from root at " + g.id(t.nodes[k].vertices.front()));
    }
    return t;
}

std::string format_rlc_tree(const SignedColoredGraph& g, const RLCTree& t) {
    std::ostringstream os;
    os << "rlc-tree color " << t.color;
    if (t.rootVertex >= 0) os << " root " << g.id(t.rootVertex);
    os << '\n';
    for (std::size_t k = 0; k < t.nodes.size(); ++k) {
        const auto& nd = t.nodes[k];
        os << "  node " << k << ' ' << nd.label << nd.sign << " {";
        for (std::size_t j = 0; j < nd.vertices.size(); ++j) os << (j ? "," : "") << g.id(nd.vertices[j]);
        os << "}";
        if (nd.parent >= 0) os << " parent " << nd.parent;
        os << '\n';
    }
    for (const auto& e : t.edges) {
        os << "  edge " << e.from << " -> " << e.to << " via " << g.id(e.u) << '-' << g.id(e.v)
           << (e.flat ? " flat" : " non-flat") << '\n';
    }
    for (const auto& d : t.diagnostics) os << "  diagnostic: " << d << '\n';
    return os.str();
}

}  // namespace deg
