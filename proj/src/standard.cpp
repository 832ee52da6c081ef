#include "deg/standard.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace deg {

SignedColoredGraph build_standard_deg(const Partition& lambda) {
    int n = lambda.size();
    if (n < 1) throw std::invalid_argument("build_standard_deg needs a nonempty partition");
    auto tableaux = enumerate_syt(lambda);
    std::vector<VertexSpec> vs;
    for (const auto& t : tableaux) vs.push_back({t.str(), descent_signature(t), std::nullopt});
    std::vector<EdgeSpec> es;
    for (int i = 2; i < n; ++i) {
        for (const auto& t : tableaux) {
            auto u = dual_equiv_involution(t, i);
            if (t.str() < u.str()) es.push_back({i, t.str(), u.str()});
        }
    }
    return SignedColoredGraph::build(n, n, vs, es);
}

const SignedColoredGraph& standard_deg(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, SignedColoredGraph> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, build_standard_deg(lambda)).first;
    return it->second;
}

namespace {

StandardTableau combine(const StandardTableau& t, const AugmentingTableau& a) {
    std::vector<std::vector<int>> rows(a.outer.length());
    for (int r = 0; r < a.outer.length(); ++r) {
        if (r < t.shape.length()) rows[r] = t.rows[r];
        if (r < static_cast<int>(a.cells.size())) rows[r].insert(rows[r].end(), a.cells[r].begin(), a.cells[r].end());
    }
    StandardTableau full{a.outer, rows};
    return full;
}

}  // namespace

SignedColoredGraph build_augmented_deg(const Partition& lambda, const AugmentingTableau& a) {
    if (!(a.inner == lambda)) throw std::invalid_argument("augmenting tableau inner shape differs from lambda");
    int n = lambda.size(), N = a.outer.size();
    std::vector<int> seen;
    for (int r = 0; r < a.outer.length(); ++r) {
        int expect = a.outer[r] - lambda[r];
        int have = r < static_cast<int>(a.cells.size()) ? static_cast<int>(a.cells[r].size()) : 0;
        if (expect < 0 || expect != have) throw std::invalid_argument("augmenting cells do not fill outer/inner");
        if (have) seen.insert(seen.end(), a.cells[r].begin(), a.cells[r].end());
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (seen[k] != n + 1 + static_cast<int>(k)) throw std::invalid_argument("augmenting entries must be n+1..N");
    auto tableaux = enumerate_syt(lambda);
    std::vector<VertexSpec> vs;
    std::vector<StandardTableau> fulls;
    for (const auto& t : tableaux) {
        auto full = combine(t, a);
        if (!is_standard(full)) throw std::invalid_argument("augmenting tableau inconsistent with " + t.str());
        vs.push_back({full.str(), descent_signature(full), std::nullopt});
        fulls.push_back(full);
    }
    std::vector<EdgeSpec> es;
    for (int i = 2; i < n; ++i) {
        for (std::size_t k = 0; k < tableaux.size(); ++k) {
            auto u = combine(dual_equiv_involution(tableaux[k], i), a);
            if (fulls[k].str() < u.str()) es.push_back({i, fulls[k].str(), u.str()});
        }
    }
    return SignedColoredGraph::build(n, N, vs, es);
}

AugmentingTableau single_cell_augmentation(const Partition& lambda, int row) {
    std::vector<int> outer = lambda.parts;
    if (row == lambda.length()) outer.push_back(1);
    else if (row < lambda.length()) ++outer[row];
    else throw std::invalid_argument("augmentation row out of range");
    AugmentingTableau a{Partition(outer), lambda, std::vector<std::vector<int>>(outer.size())};
    a.cells[row].push_back(lambda.size() + 1);
    return a;
}

std::optional<Identification> identify_component(const SignedColoredGraph& g, const Component& c, int m) {
    auto positions = position_range(1, m - 1);
    std::map<std::string, int> sigs;
    for (int v : c.vertices) ++sigs[window(g.sigma(v), 1, m - 1)];
    Component restricted = c;
    restricted.colors = color_range(2, m - 1);
    for (const auto& mu : enumerate_partitions(m)) {
        if (count_syt(mu) != static_cast<long long>(c.vertices.size())) continue;
        const auto& s = schur_to_fundamental(mu);
        std::map<std::string, int> want;
        for (const auto& [sig, k] : s.coeffs) want[sig] = static_cast<int>(k);
        if (want != sigs) continue;
        const auto& gm = standard_deg(mu);
        Component all{color_range(2, m - 1), {}};
        for (int v = 0; v < gm.size(); ++v) all.vertices.push_back(v);
        auto iso = component_isomorphism(g, restricted, gm, all, positions);
        if (iso) return Identification{mu, *iso};
    }
    return std::nullopt;
}

std::optional<Identification> identify_component(const SignedColoredGraph& g, const Component& c) {
    return identify_component(g, c, g.n());
}

}  // namespace deg
