#pragma once

#include <string>
#include <vector>

#include "deg/graph.hpp"
#include "deg/standard.hpp"

namespace deg {

struct AxiomReport {
    std::string axiom;
    bool holds = true;
    std::vector<std::string> witnesses;

    void fail(std::string w) {
        holds = false;
        witnesses.push_back(std::move(w));
    }
};

AxiomReport check_axiom(const SignedColoredGraph& g, int k);
AxiomReport check_lsf(const SignedColoredGraph& g, int m);
AxiomReport check_lsp(const SignedColoredGraph& g, int m);
AxiomReport check_axiom4a(const SignedColoredGraph& g);
AxiomReport check_axiom4b(const SignedColoredGraph& g);

/// Axioms 1, 2, 3, 5 and LSP_4, LSP_5, LSP_6; the report lists failing parts.
AxiomReport is_locally_schur_positive(const SignedColoredGraph& g);
/// Axioms 1 through 6.
AxiomReport is_dual_equivalence_graph(const SignedColoredGraph& g);

/// Component of colors i-(m-3)..i with its window i-(m-2)..i.
struct WindowedComponent {
    int i = 0;
    Component comp;
    QSymFunction gf;
};
std::vector<WindowedComponent> windowed_components(const SignedColoredGraph& g, int m);

struct Classification {
    bool ok = false;
    std::string form;  // e.g. "s[3,1]+k*s[2,2]"
    long long k = 0;
    SchurExpansion expansion;
    std::string diagnostic;
};

/// Classifies a connected component of degree 4, 5 or 6 against the allowed small forms.
Classification classify_small_component(const SignedColoredGraph& g, const Component& c, int degree);

}  // namespace deg
