#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "deg/errors.hpp"
#include "deg/graph.hpp"

namespace deg {

enum class IType { None, W, A, B, C };

std::string to_string(IType t);

/// Throws HypothesisError when the B/C discriminator needs an i-1-neighbor of E_{i-2}(v) that is missing.
IType i_type(const SignedColoredGraph& g, int v, int i);
bool has_i_type_w(const SignedColoredGraph& g, int v, int i);

/// Requires an i-edge at v. Flat means sigma_{i-2} agrees across it; color 2 edges are flat.
bool is_flat_edge(const SignedColoredGraph& g, int v, int i);

struct Chain {
    int color = 0;
    bool flat = false;
    std::vector<int> vertices;
    std::vector<int> offsets;  // m_j per step (flat chains)
};

/// x -> E_{i-2}(E_{i-1}E_{i-2})^m(x) with m the least offset whose intermediate vertex lacks i-1-type W.
std::optional<std::pair<int, int>> flat_step(const SignedColoredGraph& g, int x, int i);

std::vector<Chain> nonflat_chains(const SignedColoredGraph& g, int i);
/// Maximal flat i-chains, each recorded once.
std::vector<Chain> flat_chains(const SignedColoredGraph& g, int i);

struct DefectSets {
    std::set<int> W, W0, C, C0;
};

DefectSets defect_sets(const SignedColoredGraph& g, int i);

/// Vertices strictly between x and u = (E_{i-1}E_{i-2})^m E_i(x) together with the endpoints.
std::vector<int> psi_path(const SignedColoredGraph& g, int x, int i, int r = 0);

struct UElement {
    char kind = 'p';  // 'p' for phi, 's' for psi
    int anchor = -1;
    bool operator<(const UElement& o) const { return std::tie(kind, anchor) < std::tie(o.kind, o.anchor); }
};

/// True when every E_{i-2} u E_{i-1} u E_i component is Schur positive on the window i-3..i.
bool colors_schur_positive(const SignedColoredGraph& g, int i);

/// Elements of W_i^0 and C_i^0 whose phi or psi keeps colors i-2..i Schur positive without breaking LSP_4 or LSP_5.
std::vector<UElement> set_U(const SignedColoredGraph& g, int i);

/// H is a component of colors 2..i. Returns the negatively dominant (i,i)-restricted component.
std::optional<Component> negatively_dominant(const SignedColoredGraph& g, const Component& h, int i);

struct RLCNode {
    char label = '?';  // 'R', 'L', 'C'
    char sign = '?';
    std::vector<int> vertices;
    int parent = -1;
};

struct RLCEdge {
    int from = -1;
    int to = -1;
    int u = -1;
    int v = -1;
    bool flat = true;
};

struct RLCTree {
    int color = 0;
    int root = -1;
    int rootVertex = -1;
    std::vector<RLCNode> nodes;
    std::vector<RLCEdge> edges;
    std::vector<std::string> diagnostics;

    bool ok() const { return diagnostics.empty(); }
    int count(char label, char sign) const;
};

RLCTree build_rlc_tree(const SignedColoredGraph& g, const Component& c, int i);
std::string format_rlc_tree(const SignedColoredGraph& g, const RLCTree& t);

}  // namespace deg
