#include "nzflow/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nzflow {

namespace {

Multigraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<Edge> edges;
    for (const auto& pair : j["edges"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("each edge must be a [tail, head] pair");
        edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    try {
        return Multigraph(j["vertices"].get<int>(), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty graph input");
    if (text[first] == '{') return parse_graph_json(text);

    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"");
    if (n < 0 || m < 0) throw ParseError("negative counts in header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long t, h;
        if (!(in >> t >> h)) throw ParseError("expected " + std::to_string(m) +
                                              " edge lines \"t h\"");
        edges.push_back({static_cast<int>(t), static_cast<int>(h)});
    }
    try {
        return Multigraph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Multigraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string dump_graph_text(const Multigraph& g) {
    std::ostringstream os;
    os << g.vertex_count << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges) os << e.tail << " " << e.head << "\n";
    return os.str();
}

std::string dump_graph_json(const Multigraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count;
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges) j["edges"].push_back({e.tail, e.head});
    return j.dump();
}

Multigraph example_graph(const std::string& name) {
    if (name == "k3") return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}});
    if (name == "2k2") return Multigraph(2, {{0, 1}, {0, 1}});
    if (name == "3k2") return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
    if (name == "k4")
        return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "prism")
        return Multigraph(
            6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "bridge")
        return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    throw ParseError("unknown example graph: " + name);
}

std::vector<std::string> example_names() {
    return {"k3", "2k2", "3k2", "k4", "prism", "bridge"};
}

}  // namespace nzflow
