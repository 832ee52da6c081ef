#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deg/axioms.hpp"
#include "deg/graph.hpp"
#include "deg/structure.hpp"

namespace deg {

/// One rewiring of a single color class, stored as the edges it removes and adds.
/// Replaying a step on its own output restores the input.
struct TransformStep {
    std::string kind;  // phi, psi, gamma, theta
    int color = 0;
    std::vector<std::string> anchors;
    int param = 0;  // r for phi/psi, m for gamma
    std::vector<std::string> touched;
    std::vector<std::pair<std::string, std::string>> removed;
    std::vector<std::pair<std::string, std::string>> added;
};

SignedColoredGraph apply_step(const SignedColoredGraph& g, const TransformStep& step);

/// Isomorphism of the i-packages of a and b seeded by a -> b; positions 1..i-3 and i+2..N-1 are preserved.
std::optional<VertexMap> package_isomorphism(const SignedColoredGraph& g, int a, int b, int i);

/// u = E_{i-1}(E_i E_{i-1})^r(w) and the vertices passed on the way.
std::vector<int> phi_path(const SignedColoredGraph& g, int w, int i, int r);
int max_phi_length(const SignedColoredGraph& g, int w, int i);
int max_psi_length(const SignedColoredGraph& g, int x, int i);

TransformStep plan_phi(const SignedColoredGraph& g, int w, int i, int r = 0, bool strict = true);
TransformStep plan_psi(const SignedColoredGraph& g, int x, int i, int r = 0, bool strict = true);
/// m = 0 picks the least admissible offset.
TransformStep plan_gamma(const SignedColoredGraph& g, int z, int i, int m = 0, bool strict = true);
TransformStep plan_theta(const SignedColoredGraph& g, const Component& c, int i);

SignedColoredGraph apply_phi(const SignedColoredGraph& g, int w, int i, int r = 0);
SignedColoredGraph apply_psi(const SignedColoredGraph& g, int x, int i, int r = 0);
SignedColoredGraph apply_gamma(const SignedColoredGraph& g, int z, int i, int m = 0);
SignedColoredGraph apply_theta(const SignedColoredGraph& g, const Component& c, int i);

bool gamma_applies(const SignedColoredGraph& g, int z, int i);

struct Policy {
    std::string name = "default";
    bool preferLong = true;
    bool reverse = false;  // greatest anchor first
};

Policy parse_policy(const std::string& name);

struct TransformLog {
    std::string policy = "default";
    std::vector<TransformStep> steps;
    std::vector<std::string> checkpoints;
    bool aborted = false;
    int abortColor = 0;
    std::string diagnostic;
    std::optional<SignedColoredGraph> offending;
};

struct StepResult {
    SignedColoredGraph graph;
    TransformLog log;
};

StepResult one_step(const SignedColoredGraph& g, int i, const Policy& policy = {});

struct ComponentShape {
    std::string anchor;
    std::optional<Partition> shape;
};

struct PipelineResult {
    SignedColoredGraph graph;
    TransformLog log;
    SchurExpansion expansion;
    std::vector<ComponentShape> shapes;
    bool certified = false;
};

/// Runs one_step for i = 2..stopAt (default n-1).
PipelineResult full_pipeline(const SignedColoredGraph& g, const Policy& policy = {}, int stopAt = 0);

SignedColoredGraph replay(const SignedColoredGraph& g, const TransformLog& log);
std::string write_log(const TransformLog& log);
TransformLog parse_log(const std::string& text);

}  // namespace deg
