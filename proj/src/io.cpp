#include "equitree/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace equitree {

namespace {

std::runtime_error format_error(const std::string& what) {
    return std::runtime_error("format error: " + what);
}

}  // namespace

Graph read_dimacs(std::istream& in) {
    std::string line;
    int vertex_count = -1;
    long declared_edges = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "p") {
            if (vertex_count >= 0) throw format_error("duplicate problem line");
            std::string kind;
            row >> kind >> vertex_count >> declared_edges;
            if (row.fail() || kind != "edge")
                throw format_error("bad problem line: " + line);
            if (vertex_count < 1) throw format_error("graph needs at least one vertex");
            if (declared_edges < 0) throw format_error("negative edge count");
        } else if (tag == "e") {
            if (vertex_count < 0) throw format_error("edge before problem line");
            int u = 0, v = 0;
            row >> u >> v;
            if (row.fail()) throw format_error("bad edge line: " + line);
            if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
                throw format_error("edge endpoint out of range: " + line);
            if (u == v) throw format_error("self-loop rejected: " + line);
            edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
        } else {
            throw format_error("unknown line: " + line);
        }
    }
    if (vertex_count < 0) throw format_error("missing problem line");
    if (static_cast<long>(edges.size()) != declared_edges)
        throw format_error("edge count mismatch");
    {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw format_error("duplicate edge rejected");
    }
    return Graph(vertex_count, std::move(edges));
}

std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

ColoringFile read_coloring_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw format_error("missing coloring header");
    std::istringstream header(line);
    std::string qtag, ttag, tvalue;
    int q = 0;
    header >> qtag >> q >> ttag >> tvalue;
    if (header.fail() || qtag != "q" || ttag != "t" || q < 1)
        throw format_error("bad coloring header: " + line);
    const auto t = DegreeBound::parse(tvalue);
    if (!t) throw format_error("bad degree bound: " + tvalue);

    std::vector<std::pair<int, int>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int v = 0, c = 0;
        row >> v >> c;
        if (row.fail()) throw format_error("bad coloring line: " + line);
        if (c < 1 || c > q) throw format_error("color out of range: " + line);
        rows.emplace_back(v, c);
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> assignment(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first != static_cast<int>(i) + 1)
            throw format_error("vertices must cover 1..N exactly once");
        assignment[i] = rows[i].second - 1;
    }
    return ColoringFile{Coloring(q, std::move(assignment)), *t};
}

std::string write_coloring_text(const ColoringFile& file) {
    std::string out =
        "q " + std::to_string(file.coloring.q) + " t " + file.t.str() + "\n";
    for (size_t v = 0; v < file.coloring.assignment.size(); ++v)
        out += std::to_string(v + 1) + " " +
               std::to_string(file.coloring.assignment[v] + 1) + "\n";
    return out;
}

nlohmann::ordered_json coloring_to_json(const ColoringFile& file) {
    nlohmann::ordered_json j;
    j["q"] = file.coloring.q;
    if (file.t.is_unbounded())
        j["t"] = "inf";
    else
        j["t"] = file.t.value();
    auto classes = nlohmann::ordered_json::array();
    for (const auto& cls : file.coloring.classes()) {
        auto arr = nlohmann::ordered_json::array();
        for (int v : cls) arr.push_back(v + 1);
        classes.push_back(std::move(arr));
    }
    j["classes"] = std::move(classes);
    return j;
}

ColoringFile coloring_from_json(const nlohmann::ordered_json& j) {
    if (!j.contains("q") || !j.contains("t") || !j.contains("classes"))
        throw format_error("coloring JSON needs q, t, classes");
    const int q = j.at("q").get<int>();
    if (q < 1) throw format_error("coloring JSON: q must be >= 1");
    std::optional<DegreeBound> t;
    if (j.at("t").is_string())
        t = DegreeBound::parse(j.at("t").get<std::string>());
    else
        t = DegreeBound::parse(std::to_string(j.at("t").get<long>()));
    if (!t) throw format_error("coloring JSON: bad degree bound");
    const auto& classes = j.at("classes");
    if (!classes.is_array() || static_cast<int>(classes.size()) != q)
        throw format_error("coloring JSON: classes must have exactly q entries");
    std::vector<std::pair<int, int>> rows;  // (vertex, color)
    for (int c = 0; c < q; ++c)
        for (const auto& entry : classes.at(c)) rows.emplace_back(entry.get<int>(), c);
    std::sort(rows.begin(), rows.end());
    std::vector<int> assignment(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first != static_cast<int>(i) + 1)
            throw format_error("coloring JSON: vertices must cover 1..N exactly once");
        assignment[i] = rows[i].second;
    }
    return ColoringFile{Coloring(q, std::move(assignment)), *t};
}

nlohmann::ordered_json certificate_json(const Verdict& verdict,
                                        DegreeBound coloring_t,
                                        bool include_coloring) {
    nlohmann::ordered_json j;
    j["feasible"] = verdict.feasible;
    j["orientation"] =
        verdict.orientation == Orientation::as_given ? "as-given" : "swapped";
    j["clause"] = clause_str(verdict.clause);
    j["a"] = verdict.a;
    j["r"] = verdict.r;
    if (verdict.k4) {
        auto arr = nlohmann::ordered_json::array();
        for (int v : *verdict.k4) arr.push_back(v);
        j["k"] = std::move(arr);
    } else if (verdict.k8) {
        auto arr = nlohmann::ordered_json::array();
        for (int v : *verdict.k8) arr.push_back(v);
        j["k"] = std::move(arr);
    }
    if (include_coloring && verdict.coloring)
        j["coloring"] = coloring_to_json(ColoringFile{*verdict.coloring, coloring_t});
    return j;
}

std::string gadget_kind_str(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::npt: return "npt";
        case GadgetKind::npi: return "npi";
        case GadgetKind::pad: return "pad";
    }
    return "npt";
}

nlohmann::ordered_json gadget_sidecar_json(const GadgetOutput& gadget,
                                           GadgetKind kind, int q,
                                           std::optional<int> t) {
    nlohmann::ordered_json j;
    j["kind"] = gadget_kind_str(kind);
    j["q"] = q;
    if (t) j["t"] = *t;
    j["source_vertex_count"] = static_cast<int>(gadget.source_vertex_map.size());
    j["vertex_count"] = gadget.graph.vertex_count();
    j["source_vertex_map"] = gadget.source_vertex_map;
    auto regions = nlohmann::ordered_json::array();
    for (const auto& region : gadget.regions) {
        nlohmann::ordered_json r;
        r["name"] = region.name;
        r["vertices"] = region.vertices;
        regions.push_back(std::move(r));
    }
    j["regions"] = std::move(regions);
    return j;
}

}  // namespace equitree
