#include <doctest.h>

#include "support.hpp"

using namespace deg;

TEST_SUITE("structure") {
    TEST_CASE("standard graphs have no defects") {
        for (const auto& g : support::standard_graphs(4, 7)) {
            for (int i = 3; i < g.n(); ++i) {
                auto d = defect_sets(g, i);
                CHECK(d.W.empty());
                CHECK(d.C.empty());
                CHECK(d.W0.empty());
                CHECK(d.C0.empty());
            }
        }
    }

    TEST_CASE("defect sets vanish exactly when axiom 4 holds") {
        for (const auto& g : support::fixture_graphs()) {
            bool empty = true;
            for (int i = 3; i < g.n(); ++i) {
                auto d = defect_sets(g, i);
                empty = empty && d.W.empty() && d.C.empty();
                for (int v : d.W0) CHECK(d.W.count(v));
                for (int v : d.C0) CHECK(d.C.count(v));
            }
            CHECK(empty == check_axiom(g, 4).holds);
        }
    }

    TEST_CASE("fig8 has defects at color 4 and a nonempty U") {
        auto g = fixture_graph("fig8");
        auto d = defect_sets(g, 4);
        CHECK_FALSE(d.W.empty());
        CHECK_FALSE(d.W0.empty());
        CHECK_FALSE(set_U(g, 4).empty());
        CHECK(colors_schur_positive(g, 4));
    }

    TEST_CASE("flat chains alternate i-edges and flat steps") {
        for (const auto& g : support::fixture_graphs()) {
            for (int i = 4; i < g.n(); ++i) {
                std::set<std::vector<int>> seen;
                for (const auto& c : flat_chains(g, i)) {
                    CHECK(c.flat);
                    const auto& v = c.vertices;
                    REQUIRE(v.size() % 2 == 0);
                    CHECK(c.offsets.size() == v.size() / 2 - 1);
                    for (std::size_t k = 0; k + 1 < v.size(); k += 2) {
                        CHECK(g.neighbor(v[k], i) == v[k + 1]);
                        if (k + 2 < v.size()) {
                            auto step = flat_step(g, v[k + 1], i);
                            REQUIRE(step.has_value());
                            CHECK(step->first == v[k + 2]);
                            CHECK(step->second == c.offsets[k / 2]);
                        }
                    }
                    CHECK(seen.insert(v).second);
                    CHECK(seen.insert(std::vector<int>(v.rbegin(), v.rend())).second);
                }
            }
        }
    }

    TEST_CASE("color 2 edges are flat") {
        auto g = build_standard_deg({2, 1});
        for (int v = 0; v < g.size(); ++v)
            if (g.has_edge(v, 2)) CHECK(is_flat_edge(g, v, 2));
    }

    TEST_CASE("negatively dominant components and RLC trees on standard graphs") {
        for (const auto& p : enumerate_partitions(6)) {
            const auto& g = standard_deg(p);
            auto h = components(g, color_range(2, 5)).front();
            auto nd = negatively_dominant(g, h, 5);
            CHECK(nd.has_value());
            auto t = build_rlc_tree(g, h, 5);
            CHECK(t.color == 5);
            CHECK_FALSE(format_rlc_tree(g, t).empty());
        }
    }

    TEST_CASE("type names") {
        CHECK(to_string(IType::W) == "W");
        CHECK(to_string(IType::None) == "none");
    }
}
