#include "plsrd/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plsrd/errors.hpp"

namespace plsrd {

// Insertion-ordered objects keep the canonical emit byte-stable.
using json = nlohmann::ordered_json;

std::string graph_to_canonical_json(const Graph& g) {
    json j;
    j["n"] = g.order();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    const int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidGraph& e) {
        throw ParseError(std::string("bad graph: ") + e.what());
    }
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list needs an \"n m\" header");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("edge list ended early");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidGraph& e) {
        throw ParseError(std::string("bad graph: ") + e.what());
    }
}

Graph parse_graph(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? graph_from_json(text) : graph_from_edge_list(text);
    }
    throw ParseError("empty graph input");
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string labeling_to_json(const Labeling& f) {
    json j;
    json labels = json::array();
    for (Label l : f.labels) labels.push_back(static_cast<int>(l));
    j["labels"] = std::move(labels);
    return j.dump();
}

Labeling labeling_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad labeling JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        throw ParseError("labeling JSON needs a \"labels\" array");
    Labeling f;
    for (const auto& entry : j["labels"]) {
        if (!entry.is_number_integer()) throw ParseError("labels must be integers");
        const int value = entry.get<int>();
        if (value != -1 && value != 1 && value != 2)
            throw ParseError("labels must be -1, 1 or 2");
        f.labels.push_back(static_cast<Label>(value));
    }
    return f;
}

Labeling read_labeling_file(const std::string& path) {
    return labeling_from_json(read_text_file(path));
}

std::string report_to_json(const ValidationReport& report) {
    json arr = json::array();
    for (const Violation& v : report.violations) {
        json item;
        item["kind"] = to_string(v.kind);
        item["vertices"] = v.vertices;
        item["detail"] = v.detail;
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

std::string solve_result_to_json(const SolveResult& result) {
    json j;
    j["optimum"] = result.optimum;
    json witness = json::array();
    for (Label l : result.witness.labels) witness.push_back(static_cast<int>(l));
    j["witness"] = std::move(witness);
    j["nodes"] = result.nodes_explored;
    j["proven"] = result.proven_optimal;
    j["algorithm"] =
        result.algorithm == Algorithm::BruteForce ? "brute_force" : "backtracking";
    return j.dump();
}

std::string bounds_record_to_json(const BoundsRecord& record) {
    json j;
    j["lower"] = record.lower ? json(*record.lower) : json(nullptr);
    j["upper"] = record.upper ? json(*record.upper) : json(nullptr);
    j["exact"] = record.exact ? json(*record.exact) : json(nullptr);
    j["provenance"] = record.provenance;
    return j.dump();
}

std::string packing_to_json(const PackingSet& s) {
    json j;
    j["vertices"] = s.vertices;
    return j.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading " + path);
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace plsrd
