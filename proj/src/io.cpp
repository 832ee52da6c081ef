#include "deg/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace deg {

using nlohmann::json;

SignedColoredGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("graph file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("N") || !doc.contains("vertices")) {
        throw std::invalid_argument("graph file needs fields n, N, vertices, edges");
    }
    std::vector<VertexSpec> vs;
    for (const auto& v : doc.at("vertices")) {
        VertexSpec spec{v.at("id").get<std::string>(), v.at("sigma").get<std::string>(), std::nullopt};
        if (v.contains("q")) spec.q = v.at("q").get<int>();
        vs.push_back(std::move(spec));
    }
    std::vector<EdgeSpec> es;
    if (doc.contains("edges")) {
        for (const auto& e : doc.at("edges")) {
            es.push_back({e.at("color").get<int>(), e.at("u").get<std::string>(), e.at("v").get<std::string>()});
        }
    }
    return SignedColoredGraph::build(doc.at("n").get<int>(), doc.at("N").get<int>(), std::move(vs), es);
}

std::string write_graph(const SignedColoredGraph& g) {
    std::ostringstream os;
    os << "{\n  \"n\": " << g.n() << ",\n  \"N\": " << g.N() << ",\n  \"vertices\": [";
    for (int v = 0; v < g.size(); ++v) {
        os << (v ? ",\n" : "\n") << "    {\"id\": " << json(g.id(v)).dump() << ", \"sigma\": " << json(g.sigma(v)).dump();
        if (g.q(v)) os << ", \"q\": " << *g.q(v);
        os << "}";
    }
    os << (g.size() ? "\n  ],\n" : "],\n") << "  \"edges\": [";
    auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        os << (k ? ",\n" : "\n") << "    {\"color\": " << e.color << ", \"u\": " << json(e.u).dump()
           << ", \"v\": " << json(e.v).dump() << "}";
    }
    os << (edges.empty() ? "]\n" : "\n  ]\n") << "}\n";
    return os.str();
}

std::string write_dot(const SignedColoredGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << json(name).dump() << " {\n";
    for (int v = 0; v < g.size(); ++v) {
        os << "  " << json(g.id(v)).dump() << " [label=\"" << g.id(v) << "\\n" << g.sigma(v) << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        os << "  " << json(e.u).dump() << " -- " << json(e.v).dump() << " [label=\"" << e.color << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace deg
