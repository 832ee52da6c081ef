#include <doctest.h>

#include "deg/io.hpp"
#include "support.hpp"

using namespace deg;

namespace {

SignedColoredGraph small() {
    return SignedColoredGraph::build(4, 4, {{"x", "+-+", std::nullopt}, {"y", "-+-", std::nullopt}, {"z", "++-", std::nullopt}},
                                     {{2, "x", "y"}, {3, "x", "y"}});
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("construction validates the data") {
        CHECK_THROWS(SignedColoredGraph::build(4, 4, {{"a", "++", std::nullopt}}, {}));
        CHECK_THROWS(SignedColoredGraph::build(4, 4, {{"a", "+++", std::nullopt}, {"a", "+++", std::nullopt}}, {}));
        CHECK_THROWS(SignedColoredGraph::build(4, 4, {{"a", "+-+", std::nullopt}, {"b", "-+-", std::nullopt}}, {{4, "a", "b"}}));
        CHECK_THROWS(SignedColoredGraph::build(4, 4, {{"a", "+-+", std::nullopt}}, {{2, "a", "a"}}));
        CHECK_THROWS(SignedColoredGraph::build(
            4, 4, {{"a", "+-+", std::nullopt}, {"b", "-+-", std::nullopt}, {"c", "-+-", std::nullopt}}, {{2, "a", "b"}, {2, "a", "c"}}));
        CHECK_THROWS(SignedColoredGraph::build(4, 4, {{"a", "+-+", std::nullopt}}, {{2, "a", "q"}}));
        auto g = small();
        CHECK(g.size() == 3);
        CHECK(g.neighbor(g.index_of("x"), 2) == g.index_of("y"));
        CHECK(g.neighbor(g.index_of("z"), 2) == -1);
        CHECK(g.neighbor(g.index_of("x"), 7) == -1);
    }

    TEST_CASE("serialization is canonical and round trips byte for byte") {
        for (const auto& g : support::fixture_graphs()) {
            auto text = write_graph(g);
            auto back = parse_graph(text);
            CHECK(back == g);
            CHECK(write_graph(back) == text);
        }
        auto text = write_graph(small());
        CHECK(text.find("{\"color\": 2, \"u\": \"x\", \"v\": \"y\"}") != std::string::npos);
        CHECK_THROWS(parse_graph("{\"n\": 4}"));
        CHECK_THROWS(parse_graph("not json"));
    }

    TEST_CASE("vertex statistic survives a round trip") {
        auto g = SignedColoredGraph::build(3, 3, {{"a", "+-", 2}, {"b", "-+", std::nullopt}}, {{2, "a", "b"}});
        auto back = parse_graph(write_graph(g));
        CHECK(back.q(back.index_of("a")) == 2);
        CHECK_FALSE(back.q(back.index_of("b")).has_value());
    }

    TEST_CASE("DOT export lists every edge once with its color") {
        auto dot = write_dot(small());
        CHECK(dot.find("graph") == 0);
        CHECK(dot.find("label=\"2\"") != std::string::npos);
        CHECK(dot.find("label=\"3\"") != std::string::npos);
        CHECK(dot.find("x\\n+-+") != std::string::npos);
    }

    TEST_CASE("components agree with union find") {
        for (const auto& g : support::fixture_graphs()) {
            auto comps = components(g, color_range(2, g.n() - 1));
            CHECK(static_cast<int>(comps.size()) == oracle::component_count(g));
            for (std::size_t k = 0; k + 1 < comps.size(); ++k) CHECK(comps[k].anchor() < comps[k + 1].anchor());
        }
    }

    TEST_CASE("restrictions and windows") {
        auto g = fixture_graph("fig8");
        auto r = restrict(g, 4);
        CHECK(r.n() == 4);
        CHECK(r.N() == 5);
        CHECK_FALSE(r.is_color(4));
        auto f = restrict_full(g, 4);
        CHECK(f.sigma(0).size() == 3);
        CHECK(window("+-+-", 2, 3) == "-+");
        CHECK(components(g, {2, 3, 4}).size() == 1);
    }

    TEST_CASE("isomorphism search agrees with exhaustive search") {
        std::mt19937 rng(11);
        std::vector<SignedColoredGraph> graphs = support::standard_graphs(3, 5);
        for (const char* name : {"fig4a", "fig4b", "fig4c", "fig5a", "fig5b", "fig5c", "fig8", "fig9"})
            graphs.push_back(fixture_graph(name));
        for (const auto& g : graphs) {
            auto h = support::shuffled_ids(g, rng);
            auto m = find_isomorphism(g, h);
            REQUIRE(m.has_value());
            for (int v = 0; v < g.size(); ++v) CHECK(g.sigma(v) == h.sigma((*m)[v]));
            for (const auto& other : graphs) {
                if (other.size() != g.size() || other.n() != g.n()) continue;
                CHECK(find_isomorphism(g, other).has_value() == oracle::isomorphic(g, other));
            }
        }
        CHECK_FALSE(find_isomorphism(fixture_graph("fig8"), fixture_graph("fig9")).has_value());
    }

    TEST_CASE("packages") {
        auto g = build_standard_deg({3, 2, 1});
        for (int v = 0; v < g.size(); ++v) CHECK(i_package(g, v, 5).vertices.size() >= 1);
        CHECK(package_colors(g, 5) == std::vector<int>{2});
        CHECK(package_colors(fixture_graph("fig8"), 4).empty());
        for (int v = 0; v < 5; ++v) CHECK(i_package(fixture_graph("fig8"), v, 4).vertices == std::vector<int>{v});
    }
}
