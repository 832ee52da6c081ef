#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deg/combinatorics.hpp"
#include "deg/symfunc.hpp"

namespace deg {

struct VertexSpec {
    std::string id;
    Signature sigma;
    std::optional<int> q;  // statistic carried along for q-graded expansions
};

struct EdgeSpec {
    int color = 0;
    std::string u;
    std::string v;
    auto operator<=>(const EdgeSpec&) const = default;
};

/// Vertices carry signatures of length N-1; each color 1 < i < n is a partial matching.
/// Vertex indices follow lexicographic id order.
class SignedColoredGraph {
public:
    SignedColoredGraph() = default;
    static SignedColoredGraph build(int n, int N, std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges);

    int n() const { return n_; }
    int N() const { return N_; }
    int size() const { return static_cast<int>(ids_.size()); }

    const std::string& id(int v) const { return ids_[v]; }
    const Signature& sigma(int v) const { return sig_[v]; }
    std::optional<int> q(int v) const { return q_[v]; }
    VertexSpec vertex(int v) const { return {ids_[v], sig_[v], q_[v]}; }
    int sign(int v, int pos) const { return sign_at(sig_[v], pos); }
    std::optional<int> find(const std::string& id) const;
    int index_of(const std::string& id) const;

    /// -1 when v has no i-neighbor or i is not an edge color.
    int neighbor(int v, int i) const;
    bool has_edge(int v, int i) const { return neighbor(v, i) >= 0; }
    bool is_color(int i) const { return i >= 2 && i < n_; }

    std::vector<EdgeSpec> edges() const;
    const std::vector<int>& partners(int i) const { return nbr_.at(i); }
    /// Replaces the matching of color i. partner[v] = -1 or the partner index; must be an involution.
    void set_partners(int i, std::vector<int> partner);

    bool operator==(const SignedColoredGraph& o) const;

private:
    int n_ = 2;
    int N_ = 2;
    std::vector<std::string> ids_;
    std::vector<Signature> sig_;
    std::vector<std::optional<int>> q_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> nbr_;  // indexed by color
};

/// Keeps colors 2..m-1; signatures untouched (type (m,N)).
SignedColoredGraph restrict(const SignedColoredGraph& g, int m);
/// Keeps colors 2..m-1 and truncates signatures to length m-1 (type (m,m)).
SignedColoredGraph restrict_full(const SignedColoredGraph& g, int m);

SignedColoredGraph induced_subgraph(const SignedColoredGraph& g, const std::vector<int>& vertices);
SignedColoredGraph relabel(const SignedColoredGraph& g, const std::vector<std::string>& newIds);

std::vector<int> color_range(int lo, int hi);

struct Component {
    std::vector<int> colors;
    std::vector<int> vertices;  // ascending

    int anchor() const { return vertices.front(); }
    bool contains(int v) const;
};

std::vector<Component> components(const SignedColoredGraph& g, const std::vector<int>& colors);
Component component_of(const SignedColoredGraph& g, int v, const std::vector<int>& colors);
/// Component id per vertex, numbered in component order.
std::vector<int> component_labels(const SignedColoredGraph& g, const std::vector<int>& colors);

/// Signature positions lo..hi (inclusive, 1-based).
Signature window(const Signature& s, int lo, int hi);
QSymFunction generating_function(const SignedColoredGraph& g, const std::vector<int>& vertices, int lo, int hi);
QSymFunction generating_function(const SignedColoredGraph& g);

/// Colors excluding i-2..i+2.
std::vector<int> package_colors(const SignedColoredGraph& g, int i);
Component i_package(const SignedColoredGraph& g, int v, int i);

using VertexMap = std::map<int, int>;

/// Forced propagation from seed pairs over the given colors, checking signatures at the given positions.
/// Returns the map on everything reachable from the seeds, or nothing on any inconsistency.
std::optional<VertexMap> propagate_map(const SignedColoredGraph& g, const SignedColoredGraph& h,
                                       const std::vector<std::pair<int, int>>& seeds, const std::vector<int>& colors,
                                       const std::vector<int>& positions);

/// Bijection V(g) -> V(h) extending the seeds; unseeded when seeds is empty.
std::optional<std::vector<int>> seeded_isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h,
                                                   const std::vector<std::pair<int, int>>& seeds,
                                                   const std::vector<int>& colors, const std::vector<int>& positions);

/// Isomorphism between a component of g and a component of h, optionally forcing a seed image.
std::optional<VertexMap> component_isomorphism(const SignedColoredGraph& g, const Component& a,
                                               const SignedColoredGraph& h, const Component& b,
                                               const std::vector<int>& positions);

/// Number of isomorphisms a -> b (stops counting at limit).
int count_component_isomorphisms(const SignedColoredGraph& g, const Component& a, const SignedColoredGraph& h,
                                 const Component& b, const std::vector<int>& positions, int limit = 2);

std::optional<std::vector<int>> find_isomorphism(const SignedColoredGraph& g, const SignedColoredGraph& h);

std::vector<int> all_positions(const SignedColoredGraph& g);
std::vector<int> position_range(int lo, int hi);

}  // namespace deg
