#include "pursuit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pursuit {

namespace {

Graph from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "n" && key != "edges" && key != "labels" && key != "comment" &&
            key != "manifest") {
            throw ParseError("unknown key \"" + key + "\"");
        }
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("missing integer field \"n\"");
    }
    Graph g(j["n"].get<int>());
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw ParseError("missing array field \"edges\"");
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw ParseError("each edge must be a pair of integers");
        }
        try {
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        } catch (const Error& err) {
            throw ParseError(err.what());
        }
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) throw ParseError("\"labels\" must be an object");
        for (const auto& [key, value] : j["labels"].items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (...) {
                throw ParseError("label key \"" + key + "\" is not a vertex index");
            }
            if (!g.has_vertex(v)) throw ParseError("label index " + key + " out of range");
            if (!value.is_string()) throw ParseError("label values must be strings");
            g.labels[v] = value.get<std::string>();
        }
    }
    if (j.contains("comment")) {
        if (!j["comment"].is_string()) throw ParseError("\"comment\" must be a string");
        g.comment = j["comment"].get<std::string>();
    }
    return g;
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) throw ParseError("first line must be the vertex count");
            std::string rest;
            if (ls >> rest) throw ParseError("first line must contain only the vertex count");
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        std::string rest;
        if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        try {
            g.add_edge(u, v);
        } catch (const Error& err) {
            throw ParseError("line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    if (n < 0) throw ParseError("empty graph file");
    return g;
}

}  // namespace

Graph load_graph(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return from_json(text);
        return from_edge_list(text);
    }
    throw ParseError("empty graph file");
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string dump_graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) {
        j["edges"].push_back({u, v});
    }
    if (!g.labels.empty()) {
        nlohmann::ordered_json labels;
        for (const auto& [v, name] : g.labels) labels[std::to_string(v)] = name;
        j["labels"] = labels;
    }
    if (!g.comment.empty()) j["comment"] = g.comment;
    return j.dump(2) + "\n";
}

std::string dump_graph_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph make_path(int n) {
    if (n < 1) throw Error("path graph needs at least one vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw Error("cycle graph needs at least three vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error("grid needs positive dimensions");
    Graph g(rows * cols);
    for (int x = 0; x < rows; ++x) {
        for (int y = 0; y < cols; ++y) {
            if (x + 1 < rows) g.add_edge(x * cols + y, (x + 1) * cols + y);
            if (y + 1 < cols) g.add_edge(x * cols + y, x * cols + y + 1);
        }
    }
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw Error("complete graph needs at least one vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

}  // namespace pursuit
