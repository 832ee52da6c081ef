#include "deg/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace deg {

SignedColoredGraph SignedColoredGraph::build(int n, int N, std::vector<VertexSpec> vertices,
                                             const std::vector<EdgeSpec>& edges) {
    if (n < 1) throw std::invalid_argument("graph type needs n >= 1");
    if (N < n) throw std::invalid_argument("graph type needs n <= N");
    SignedColoredGraph g;
    g.n_ = n;
    g.N_ = N;
    std::sort(vertices.begin(), vertices.end(), [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
    for (auto& v : vertices) {
        if (v.id.empty()) throw std::invalid_argument("empty vertex id");
        Signature s = parse_signature(v.sigma);
        if (static_cast<int>(s.size()) != N - 1) {
            throw std::invalid_argument("vertex " + v.id + " has signature of length " + std::to_string(s.size()) +
                                        ", expected " + std::to_string(N - 1));
        }
        if (!g.index_.emplace(v.id, static_cast<int>(g.ids_.size())).second) {
            throw std::invalid_argument("duplicate vertex id " + v.id);
        }
        g.ids_.push_back(v.id);
        g.sig_.push_back(s);
        g.q_.push_back(v.q);
    }
    g.nbr_.assign(n, std::vector<int>(g.ids_.size(), -1));
    for (const auto& e : edges) {
        if (e.color < 2 || e.color >= n) {
            throw std::invalid_argument("edge color " + std::to_string(e.color) + " outside 2.." + std::to_string(n - 1));
        }
        int a = g.index_of(e.u), b = g.index_of(e.v);
        if (a == b) throw std::invalid_argument("loop edge at " + e.u);
        auto& p = g.nbr_[e.color];
        if (p[a] == b && p[b] == a) throw std::invalid_argument("duplicate " + std::to_string(e.color) + "-edge " + e.u + "-" + e.v);
        if (p[a] >= 0) throw std::invalid_argument("vertex " + e.u + " has two " + std::to_string(e.color) + "-edges");
        if (p[b] >= 0) throw std::invalid_argument("vertex " + e.v + " has two " + std::to_string(e.color) + "-edges");
        p[a] = b;
        p[b] = a;
    }
    return g;
}

std::optional<int> SignedColoredGraph::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int SignedColoredGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex id " + id);
    return it->second;
}

int SignedColoredGraph::neighbor(int v, int i) const {
    if (i < 2 || i >= n_) return -1;
    return nbr_[i][v];
}

std::vector<EdgeSpec> SignedColoredGraph::edges() const {
    std::vector<EdgeSpec> out;
    for (int c = 2; c < n_; ++c) {
        for (int v = 0; v < size(); ++v) {
            int w = nbr_[c][v];
            if (w > v) out.push_back({c, ids_[v], ids_[w]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void SignedColoredGraph::set_partners(int i, std::vector<int> partner) {
    if (!is_color(i)) throw std::invalid_argument("set_partners: bad color");
    if (static_cast<int>(partner.size()) != size()) throw std::invalid_argument("set_partners: size mismatch");
    for (int v = 0; v < size(); ++v) {
        int w = partner[v];
        if (w < -1 || w >= size() || w == v || (w >= 0 && partner[w] != v)) {
            throw std::invalid_argument("set_partners: not a matching at " + ids_[v]);
        }
    }
    nbr_[i] = std::move(partner);
}

bool SignedColoredGraph::operator==(const SignedColoredGraph& o) const {
    return n_ == o.n_ && N_ == o.N_ && ids_ == o.ids_ && sig_ == o.sig_ && q_ == o.q_ && nbr_ == o.nbr_;
}

SignedColoredGraph restrict(const SignedColoredGraph& g, int m) {
    if (m < 2 || m > g.n()) throw std::invalid_argument("restrict: m out of range");
    std::vector<VertexSpec> vs;
    for (int v = 0; v < g.size(); ++v) vs.push_back(g.vertex(v));
    std::vector<EdgeSpec> es;
    for (const auto& e : g.edges())
        if (e.color < m) es.push_back(e);
    return SignedColoredGraph::build(m, g.N(), vs, es);
}

SignedColoredGraph restrict_full(const SignedColoredGraph& g, int m) {
    if (m < 2 || m > g.n()) throw std::invalid_argument("restrict_full: m out of range");
    std::vector<VertexSpec> vs;
    for (int v = 0; v < g.size(); ++v) vs.push_back({g.id(v), g.sigma(v).substr(0, m - 1), g.q(v)});
    std::vector<EdgeSpec> es;
    for (const auto& e : g.edges())
        if (e.color < m) es.push_back(e);
    return SignedColoredGraph::build(m, m, vs, es);
}

SignedColoredGraph induced_subgraph(const SignedColoredGraph& g, const std::vector<int>& vertices) {
    std::vector<bool> in(g.size(), false);
    for (int v : vertices) in[v] = true;
    std::vector<VertexSpec> vs;
    for (int v : vertices) vs.push_back(g.vertex(v));
    std::vector<EdgeSpec> es;
    for (int c = 2; c < g.n(); ++c)
        for (int v : vertices) {
            int w = g.neighbor(v, c);
            if (w > v && in[w]) es.push_back({c, g.id(v), g.id(w)});
        }
    return SignedColoredGraph::build(g.n(), g.N(), vs, es);
}

SignedColoredGraph relabel(const SignedColoredGraph& g, const std::vector<std::string>& newIds) {
    if (static_cast<int>(newIds.size()) != g.size()) throw std::invalid_argument("relabel: size mismatch");
    std::vector<VertexSpec> vs;
    for (int v = 0; v < g.size(); ++v) vs.push_back({newIds[v], g.sigma(v), g.q(v)});
    std::vector<EdgeSpec> es;
    for (int c = 2; c < g.n(); ++c)
        for (int v = 0; v < g.size(); ++v) {
            int w = g.neighbor(v, c);
            if (w > v) es.push_back({c, newIds[v], newIds[w]});
        }
    return SignedColoredGraph::build(g.n(), g.N(), vs, es);
}

std::vector<int> color_range(int lo, int hi) {
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c) out.push_back(c);
    return out;
}

bool Component::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::vector<int> component_labels(const SignedColoredGraph& g, const std::vector<int>& colors) {
    std::vector<int> label(g.size(), -1);
    int next = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int c : colors) {
                int y = g.neighbor(x, c);
                if (y >= 0 && label[y] < 0) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<Component> components(const SignedColoredGraph& g, const std::vector<int>& colors) {
    auto label = component_labels(g, colors);
    int count = 0;
    for (int l : label) count = std::max(count, l + 1);
    std::vector<Component> out(count);
    for (auto& c : out) c.colors = colors;
    for (int v = 0; v < g.size(); ++v) out[label[v]].vertices.push_back(v);
    return out;
}

Component component_of(const SignedColoredGraph& g, int v, const std::vector<int>& colors) {
    Component c;
    c.colors = colors;
    std::set<int> seen{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int col : colors) {
            int y = g.neighbor(x, col);
            if (y >= 0 && seen.insert(y).second) stack.push_back(y);
        }
    }
    c.vertices.assign(seen.begin(), seen.end());
    return c;
}

Signature window(const Signature& s, int lo, int hi) {
    if (lo < 1 || hi > static_cast<int>(s.size()) || lo > hi + 1) throw std::out_of_range("bad signature window");
    return s.substr(lo - 1, hi - lo + 1);
}

QSymFunction generating_function(const SignedColoredGraph& g, const std::vector<int>& vertices, int lo, int hi) {
    QSymFunction f(hi - lo + 2);
    for (int v : vertices) f.add(window(g.sigma(v), lo, hi), 1);
    return f;
}

QSymFunction generating_function(const SignedColoredGraph& g) {
    std::vector<int> all(g.size());
    for (int v = 0; v < g.size(); ++v) all[v] = v;
    return generating_function(g, all, 1, g.N() - 1);
}

std::vector<int> package_colors(const SignedColoredGraph& g, int i) {
    std::vector<int> out;
    for (int c = 2; c < g.n(); ++c)
        if (c < i - 2 || c > i + 2) out.push_back(c);
    return out;
}

Component i_package(const SignedColoredGraph& g, int v, int i) { return component_of(g, v, package_colors(g, i)); }

std::vector<int> all_positions(const SignedColoredGraph& g) { return position_range(1, g.N() - 1); }

std::vector<int> position_range(int lo, int hi) {
    std::vector<int> out;
    for (int p = lo; p <= hi; ++p) out.push_back(p);
    return out;
}

namespace {

bool same_at(const SignedColoredGraph& g, int x, const SignedColoredGraph& h, int y, const std::vector<int>& positions) {
    for (int p : positions)
        if (g.sigma(x)[p - 1] != h.sigma(y)[p - 1]) return false;
    return true;
}

std::string restricted(const SignedColoredGraph& g, int v, const std::vector<int>& positions) {
    std::string s;
    for (int p : positions) s += g.sigma(v)[p - 1];
    return s;
}

}  // namespace

std::optional<VertexMap> propagate_map(const SignedColoredGraph& g, const SignedColoredGraph& h,
                                       const std::vector<std::pair<int, int>>& seeds, const std::vector<int>& colors,
                                       const std::vector<int>& positions) {
    VertexMap fwd, back;
    std::deque<std::pair<int, int>> queue;
    auto assign = [&](int x, int y) {
        auto f = fwd.find(x);
        auto b = back.find(y);
        if (f != fwd.end() || b != back.end()) {
            return f != fwd.end() && b != back.end() && f->second == y && b->second == x;
        }
        if (!same_at(g, x, h, y, positions)) return false;
        fwd[x] = y;
        back[y] = x;
        queue.emplace_back(x, y);
        return true;
    };
    for (auto [x, y] : seeds)
        if (!assign(x, y)) return std::nullopt;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int c : colors) {
            int a = g.neighbor(x, c), b = h.neighbor(y, c);
            if ((a < 0) != (b < 0)) return std::nullopt;
            if (a >= 0 && !assign(a, b)) return std::nullopt;
        }
    }
    return fwd;
}

std::optional<VertexMap> component_isomorphism(const SignedColoredGraph& g, const Component& a,
                                               const SignedColoredGraph& h, const Component& b,
                                               const std::vector<int>& positions) {
    if (a.vertices.size() != b.vertices.size()) return std::nullopt;
    std::map<std::string, int> ca, cb;
    for (int v : a.vertices) ++ca[restricted(g, v, positions)];
    for (int v : b.vertices) ++cb[restricted(h, v, positions)];
    if (ca != cb) return std::nullopt;
    int anchor = a.vertices.front();
    int best = -1;
    for (int v : a.vertices) {
        int k = ca[restricted(g, v, positions)];
        if (best < 0 || k < best) {
            best = k;
            anchor = v;
        }
    }
    std::string key = restricted(g, anchor, positions);
    for (int y : b.vertices) {
        if (restricted(h, y, positions) != key) continue;
        auto m = propagate_map(g, h, {{anchor, y}}, a.colors, positions);
        if (m && m->size() == a.vertices.size()) return m;
    }
    return std::nullopt;
}

int count_component_isomorphisms(const SignedColoredGraph& g, const Component& a, const SignedColoredGraph& h,
                                 const Component& b, const std::vector<int>& positions, int limit) {
    if (a.vertices.size() != b.vertices.size()) return 0;
    int anchor = a.vertices.front();
    int count = 0;
    for (int y : b.vertices) {
        auto m = propagate_map(g, h, {{anchor, y}}, a.colors, positions);
        if (m && m->size() == a.vertices.size()) {
            bool inside = true;
            for (auto [x, z] : *m) inside = inside && b.contains(z);
            if (inside && ++count >= limit) break;
        }
    }
    return count;
}

std::optional<std::vector<int>> seeded_isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h,
                                                   const std::vector<std::pair<int, int>>& seeds,
                                                   const std::vector<int>& colors, const std::vector<int>& positions) {
    if (g.size() != h.size()) return std::nullopt;
    std::vector<int> map(g.size(), -1);
    std::vector<bool> usedH(h.size(), false);
    if (!seeds.empty()) {
        auto m = propagate_map(g, h, seeds, colors, positions);
        if (!m) return std::nullopt;
        for (auto [x, y] : *m) {
            map[x] = y;
            usedH[y] = true;
        }
    }
    auto cg = components(g, colors);
    auto ch = components(h, colors);
    std::vector<bool> usedComp(ch.size(), false);
    for (std::size_t k = 0; k < ch.size(); ++k)
        if (usedH[ch[k].anchor()]) usedComp[k] = true;
    for (const auto& a : cg) {
        if (map[a.anchor()] >= 0) continue;
        bool found = false;
        for (std::size_t k = 0; k < ch.size() && !found; ++k) {
            if (usedComp[k]) continue;
            auto m = component_isomorphism(g, a, h, ch[k], positions);
            if (!m) continue;
            for (auto [x, y] : *m) map[x] = y;
            usedComp[k] = true;
            found = true;
        }
        if (!found) return std::nullopt;
    }
    for (int v = 0; v < g.size(); ++v)
        if (map[v] < 0) return std::nullopt;
    return map;
}

std::optional<std::vector<int>> find_isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h) {
    if (g.n() != h.n() || g.N() != h.N()) return std::nullopt;
    return seeded_isomorphism(g, h, {}, color_range(2, g.n() - 1), all_positions(g));
}

}  // namespace deg
