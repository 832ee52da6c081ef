#pragma once

#include <string>
#include <vector>

#include "deg/graph.hpp"

namespace deg {

/// A transcribed example graph with the properties it is expected to have.
struct FixtureEntry {
    std::string name;
    std::string caption;
    std::string vertices;  // "id:sigma id:sigma ..."
    std::string edges;     // "a-b 3, c-d 2/3, ..."
    std::string expansion;  // compact Schur expansion, empty when not Schur positive
    std::vector<std::string> expectations;
    bool large = false;
};

const std::vector<FixtureEntry>& fixtures();
const FixtureEntry* find_fixture(const std::string& name);
SignedColoredGraph fixture_graph(const FixtureEntry& f);
SignedColoredGraph fixture_graph(const std::string& name);

struct FixtureCheck {
    std::string expectation;
    bool ok = false;
    std::string detail;
};

/// Evaluates every expectation of the fixture.
std::vector<FixtureCheck> verify_fixture(const FixtureEntry& f);

}  // namespace deg
