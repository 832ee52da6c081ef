#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "deg/axioms.hpp"
#include "deg/combinatorics.hpp"
#include "deg/fixtures.hpp"
#include "deg/graph.hpp"
#include "deg/standard.hpp"
#include "deg/symfunc.hpp"
#include "deg/transform.hpp"

namespace oracle {

using deg::Partition;
using deg::Signature;

inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            if (std::is_sorted(cur.rbegin(), cur.rend())) out.push_back(Partition(cur));
            return;
        }
        for (int k = 1; k <= left; ++k) {
            cur.push_back(k);
            self(self, left - k);
            cur.pop_back();
        }
    };
    rec(rec, n);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts > b.parts; });
    return out;
}

inline bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    for (int k = 0; k < std::max(a.length(), b.length()); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa < sb) return false;
    }
    return true;
}

/// Row of each entry for every filling of the shape by a permutation that is standard.
inline std::vector<std::vector<std::vector<int>>> syt_rows(const Partition& shape) {
    int n = shape.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<std::vector<int>>> out;
    do {
        std::vector<std::vector<int>> rows;
        int k = 0;
        for (int len : shape.parts) {
            rows.emplace_back(perm.begin() + k, perm.begin() + k + len);
            k += len;
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r)
            for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
                if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
                if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) ok = false;
            }
        if (ok) out.push_back(rows);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline Signature descents(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    std::vector<int> rowOf(n + 2);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int x : rows[r]) rowOf[x] = static_cast<int>(r);
    Signature s;
    for (int i = 1; i < n; ++i) s += rowOf[i + 1] > rowOf[i] ? '-' : '+';
    return s;
}

inline std::map<Signature, long long> schur(const Partition& lambda) {
    std::map<Signature, long long> out;
    for (const auto& t : syt_rows(lambda)) ++out[descents(t)];
    return out;
}

/// Elementary dual equivalence on the reading word (top row first).
inline std::vector<std::vector<int>> elementary(std::vector<std::vector<int>> rows, int i) {
    std::vector<int> word;
    for (auto r = rows.rbegin(); r != rows.rend(); ++r) word.insert(word.end(), r->begin(), r->end());
    auto pos = [&](int x) { return static_cast<int>(std::find(word.begin(), word.end(), x) - word.begin()); };
    int a = pos(i - 1), b = pos(i), c = pos(i + 1);
    if ((a < b && b < c) || (c < b && b < a)) return rows;
    int other = std::abs(a - b) > std::abs(c - b) ? i - 1 : i + 1;
    for (auto& r : rows)
        for (int& x : r) {
            if (x == i) x = other;
            else if (x == other) x = i;
        }
    return rows;
}

/// Exhaustive signature and edge preserving bijection search.
inline bool isomorphic(const deg::SignedColoredGraph& g, const deg::SignedColoredGraph& h) {
    if (g.size() != h.size() || g.n() != h.n() || g.N() != h.N()) return false;
    std::vector<int> img(g.size(), -1);
    std::vector<bool> used(h.size(), false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.size()) return true;
        for (int w = 0; w < h.size(); ++w) {
            if (used[w] || g.sigma(v) != h.sigma(w)) continue;
            bool ok = true;
            for (int i = 2; i < g.n() && ok; ++i) {
                int a = g.neighbor(v, i), b = h.neighbor(w, i);
                if ((a < 0) != (b < 0)) ok = false;
                else if (a >= 0 && a < v && img[a] != b) ok = false;
            }
            if (!ok) continue;
            img[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            img[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Axiom 1 read directly off the signatures.
inline bool axiom1(const deg::SignedColoredGraph& g) {
    for (int v = 0; v < g.size(); ++v)
        for (int i = 2; i < g.n(); ++i) {
            bool should = g.sign(v, i - 1) == -g.sign(v, i);
            if (should != g.has_edge(v, i)) return false;
        }
    return true;
}

inline int component_count(const deg::SignedColoredGraph& g) {
    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) parent[find(g.index_of(e.u))] = find(g.index_of(e.v));
    std::set<int> roots;
    for (int v = 0; v < g.size(); ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

}  // namespace oracle

namespace support {

inline deg::SignedColoredGraph disjoint_union(const std::vector<deg::SignedColoredGraph>& parts,
                                              const std::vector<std::string>& prefixes) {
    std::vector<deg::VertexSpec> vs;
    std::vector<deg::EdgeSpec> es;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& g = parts[k];
        for (int v = 0; v < g.size(); ++v) {
            auto spec = g.vertex(v);
            spec.id = prefixes[k] + spec.id;
            vs.push_back(spec);
        }
        for (auto e : g.edges()) es.push_back({e.color, prefixes[k] + e.u, prefixes[k] + e.v});
    }
    return deg::SignedColoredGraph::build(parts.front().n(), parts.front().N(), vs, es);
}

inline deg::SignedColoredGraph shuffled_ids(const deg::SignedColoredGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> ids(g.size());
    for (int v = 0; v < g.size(); ++v) ids[v] = "v" + std::to_string(perm[v]);
    return deg::relabel(g, ids);
}

/// Hypotheses under which phi, psi and gamma are known to make progress at color i.
inline bool termination_hypotheses(const deg::SignedColoredGraph& g, int i) {
    if (!deg::is_locally_schur_positive(g).holds) return false;
    if (i - 2 >= 2 && !deg::is_dual_equivalence_graph(deg::restrict(g, i - 2)).holds) return false;
    return deg::check_axiom(deg::restrict(g, i), 4).holds;
}

inline std::vector<deg::SignedColoredGraph> standard_graphs(int lo, int hi) {
    std::vector<deg::SignedColoredGraph> out;
    for (int n = lo; n <= hi; ++n)
        for (const auto& p : deg::enumerate_partitions(n)) out.push_back(deg::build_standard_deg(p));
    return out;
}

inline std::vector<deg::SignedColoredGraph> fixture_graphs() {
    std::vector<deg::SignedColoredGraph> out;
    for (const auto& f : deg::fixtures()) out.push_back(deg::fixture_graph(f));
    return out;
}

}  // namespace support
