#include "metricdim/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace metricdim {

Graph read_edge_list(std::istream& in)
{
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "c" || line.rfind("c ", 0) == 0)
            continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (have_header)
                throw parse_error("line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> n >> m) || n < 1 || m < 0)
                throw parse_error("line " + std::to_string(lineno) + ": bad header");
            have_header = true;
        } else if (tag == 'e') {
            if (!have_header)
                throw parse_error("line " + std::to_string(lineno) + ": edge before header");
            int u, v;
            if (!(ls >> u >> v))
                throw parse_error("line " + std::to_string(lineno) + ": bad edge line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error("line " + std::to_string(lineno) + ": vertex id out of range");
            if (u == v)
                throw parse_error("line " + std::to_string(lineno) + ": self-loop");
            edges.emplace_back(u, v);
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown record '" + std::string(1, tag) + "'");
        }
        std::string rest;
        if (ls >> rest)
            throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (!have_header)
        throw parse_error("missing 'p <n> <m>' header");
    if (static_cast<int>(edges.size()) != m)
        throw parse_error("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    try {
        return Graph::from_edges(n, std::move(edges));
    } catch (const invalid_parameter& e) {
        throw parse_error(e.what()); // duplicate edges surface here
    }
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out, std::span<const std::string> comments)
{
    for (const auto& c : comments)
        out << "c " << c << '\n';
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path, std::span<const std::string> comments)
{
    std::ofstream out(path);
    if (!out)
        throw parse_error("cannot open " + path + " for writing");
    write_edge_list(g, out, comments);
}

} // namespace metricdim
