#include "lm/serialize.hpp"

#include <map>
#include <sstream>

namespace lm {

namespace {

nlohmann::json cells_json(const CellComplex& cx) {
    auto cells = nlohmann::json::array();
    for (const auto& c : cx.cells()) {
        auto faces = nlohmann::json::array();
        for (int f : c.facets) faces.push_back(cx[static_cast<std::size_t>(f)].key);
        cells.push_back({{"dim", c.dim}, {"key", c.key}, {"faces", faces}});
    }
    return cells;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void dot_edges(std::ostringstream& os, const CellComplex& cx) {
    for (const auto& c : cx.cells())
        if (c.dim == 1)
            os << "  " << quoted(cx[static_cast<std::size_t>(c.vertices[0])].key) << " -- "
               << quoted(cx[static_cast<std::size_t>(c.vertices[1])].key) << ";\n";
}

}  // namespace

nlohmann::json complex_json(const CellComplex& cx) {
    return {{"format", kJsonFormat}, {"counts", cx.counts()}, {"euler", cx.euler()}, {"cells", cells_json(cx)}};
}

nlohmann::json cluster_json(const Cluster& c) {
    auto j = complex_json(c.complex);
    j["n"] = c.arrangement.n();
    j["diagonals"] = c.arrangement.diagonals();
    for (std::size_t i = 0; i < c.signs.size(); ++i) j["cells"][i]["signvector"] = c.signs[i].key();
    return j;
}

nlohmann::json xcomplex_json(const XComplex& cx) {
    auto j = complex_json(cx.complex);
    j["tag"] = tag_name(cx.tag);
    const auto values = morse_values(cx);
    for (std::size_t v = 0; v < cx.vertex_count(); ++v) {
        auto& cell = j["cells"][v];
        cell["label"] = cx.labels[v].str();
        cell["coset"] = cx.keys[v];
        cell["h"] = values[v].h;
        cell["f"] = values[v].f;
    }
    return j;
}

nlohmann::json homology_json(const std::vector<HomologyGroup>& groups) {
    auto arr = nlohmann::json::array();
    for (const auto& g : groups) arr.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", g.torsion}});
    return {{"format", kJsonFormat}, {"reduced_homology", arr}};
}

std::string complex_dot(const CellComplex& cx) {
    std::ostringstream os;
    os << "graph complex {\n";
    for (const auto& c : cx.cells())
        if (c.dim == 0) os << "  " << quoted(c.key) << ";\n";
    dot_edges(os, cx);
    os << "}\n";
    return os.str();
}

std::string xcomplex_dot(const XComplex& cx) {
    const auto values = morse_values(cx);
    std::map<long, std::vector<std::size_t>> by_height;
    for (std::size_t v = 0; v < cx.vertex_count(); ++v) by_height[values[v].h].push_back(v);
    std::ostringstream os;
    os << "graph X {\n  rankdir=BT;\n";
    for (const auto& [h, vs] : by_height) {
        os << "  { rank=same;";
        for (auto v : vs) os << " " << quoted(cx.complex[v].key) << " [h=" << h << "];";
        os << " }\n";
    }
    dot_edges(os, cx.complex);
    os << "}\n";
    return os.str();
}

}  // namespace lm
