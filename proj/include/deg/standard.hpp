#pragma once

#include <optional>

#include "deg/graph.hpp"

namespace deg {

/// Cells of outer/inner filled with n+1..N; cells[r] lists the entries of row r beyond inner[r].
struct AugmentingTableau {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> cells;
};

SignedColoredGraph build_standard_deg(const Partition& lambda);
/// Cached copy, shared across callers.
const SignedColoredGraph& standard_deg(const Partition& lambda);

SignedColoredGraph build_augmented_deg(const Partition& lambda, const AugmentingTableau& a);

/// The single-cell augmentation placing n+1 at the end of the given row (row == length means a new row).
AugmentingTableau single_cell_augmentation(const Partition& lambda, int row);

struct Identification {
    Partition shape;
    VertexMap map;  // component vertex -> vertex of the standard graph
};

/// Identifies a component as G_mu of degree m: colors 2..m-1 and signature positions 1..m-1.
std::optional<Identification> identify_component(const SignedColoredGraph& g, const Component& c, int m);
/// Degree n of the graph.
std::optional<Identification> identify_component(const SignedColoredGraph& g, const Component& c);

}  // namespace deg
