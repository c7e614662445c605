#include "shadowchi/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "shadowchi/errors.hpp"

namespace shadowchi {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

FiniteGraph graph_from_json(const json& j) {
    const int n = field<int>(j, "vertices");
    const auto raw = field<std::vector<std::vector<int>>>(j, "edges");
    std::vector<Edge> edges;
    for (const auto& e : raw) {
        if (e.size() != 2) throw InputError("each edge must be a pair");
        edges.emplace_back(e[0], e[1]);
    }
    auto g = FiniteGraph::from_edges(n, edges);
    if (j.contains("labels") && !j.at("labels").is_null()) {
        const auto rows = field<std::vector<std::vector<std::int64_t>>>(j, "labels");
        std::vector<GroupElement> labels;
        for (const auto& r : rows) {
            if (r.size() != 3) throw InputError("each label must be [a, b, n]");
            labels.push_back({static_cast<int>(r[0]), static_cast<int>(r[1]), r[2]});
        }
        g.set_element_labels(std::move(labels));
    }
    return g;
}

json graph_to_json(const FiniteGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json j{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.element_labels().empty()) {
        json labels = json::array();
        for (const auto& e : g.element_labels()) labels.push_back({e.a, e.b, e.n});
        j["labels"] = std::move(labels);
    }
    return j;
}

FiniteGraph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long m = 0;
            if (!(ls >> kind >> n >> m) || n < 0) throw InputError("bad DIMACS header on line " + std::to_string(lineno));
        } else if (tag == "e") {
            int u = 0;
            int v = 0;
            if (n < 0) throw InputError("DIMACS edge before header on line " + std::to_string(lineno));
            if (!(ls >> u >> v)) throw InputError("bad DIMACS edge on line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw InputError("unexpected DIMACS line " + std::to_string(lineno));
        }
    }
    if (n < 0) throw InputError("DIMACS input has no 'p' line");
    return FiniteGraph::from_edges(n, edges);
}

void write_dimacs(std::ostream& out, const FiniteGraph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

FiniteGraph parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("malformed JSON graph: ") + e.what());
        }
        return graph_from_json(j);
    }
    std::istringstream in(text);
    return read_dimacs(in);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FiniteGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

LineInstance instance_from_json(const json& j) {
    auto g = graph_from_json(j);
    const auto blocks = field<std::vector<std::vector<int>>>(j, "blocks");
    std::vector<int> block_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) {
            if (!g.valid(v)) throw InputError("block member " + std::to_string(v) + " out of range");
            if (block_of[static_cast<std::size_t>(v)] >= 0) throw InputError("vertex in two blocks");
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    for (int b : block_of)
        if (b < 0) throw InputError("some vertex is in no block");
    auto mode = j.contains("mode") ? parse_line_mode(field<std::string>(j, "mode")) : LineMode::Segment;
    int chi = j.contains("chi") && !j.at("chi").is_null() ? field<int>(j, "chi") : 0;
    return LineInstance(std::move(g), std::move(block_of), mode, chi);
}

json instance_to_json(const LineInstance& inst) {
    json j = graph_to_json(inst.graph());
    json blocks = json::array();
    for (const auto& b : inst.blocks()) blocks.push_back(b.members());
    j["blocks"] = std::move(blocks);
    j["mode"] = to_string(inst.mode());
    if (inst.chi() > 0) j["chi"] = inst.chi();
    return j;
}

AnchoredTower tower_from_json(const json& j) {
    AnchoredTower t;
    if (j.contains("k")) t.k = field<int>(j, "k");
    t.extent = field<int>(j, "extent");
    if (j.contains("mode")) t.mode = parse_line_mode(field<std::string>(j, "mode"));
    if (!j.contains("anchors") || !j.at("anchors").is_array()) throw InputError("missing 'anchors' array");
    for (const auto& a : j.at("anchors")) {
        Anchor anchor;
        anchor.position = field<std::int64_t>(a, "position");
        if (a.contains("offset")) {
            auto off = field<std::vector<int>>(a, "offset");
            if (off.size() != 2) throw InputError("anchor offset must be [a0, b0]");
            anchor.a0 = off[0];
            anchor.b0 = off[1];
        }
        t.anchors.push_back(anchor);
    }
    return t;
}

json tower_to_json(const AnchoredTower& t) {
    json anchors = json::array();
    for (const auto& a : t.anchors) anchors.push_back({{"position", a.position}, {"offset", {a.a0, a.b0}}});
    return {{"k", t.k}, {"extent", t.extent}, {"mode", to_string(t.mode)}, {"anchors", std::move(anchors)}};
}

json coloring_to_json(const Coloring& c) {
    return {{"palette", c.palette}, {"colors_used", c.colors_used()}, {"colors", c.colors}};
}

}  // namespace shadowchi
