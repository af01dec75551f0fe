#include "metricdim/amalgam.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace metricdim {

int AmalgamLabeling::shared_vertex() const
{
    if (mode_ != AmalgamMode::vertex)
        throw invalid_parameter("shared_vertex on an edge-mode labeling");
    return 0;
}

std::pair<int, int> AmalgamLabeling::shared_edge() const
{
    if (mode_ != AmalgamMode::edge)
        throw invalid_parameter("shared_edge on a vertex-mode labeling");
    return {0, 1};
}

int AmalgamLabeling::global_of(int block, int local) const
{
    if (block < 0 || block >= block_count())
        throw invalid_parameter("block index out of range: " + std::to_string(block));
    const auto& m = block_to_global_[block];
    if (local < 0 || local >= static_cast<int>(m.size()))
        throw invalid_parameter("local id out of range: " + std::to_string(local));
    return m[local];
}

std::span<const std::pair<int, int>> AmalgamLabeling::preimages(int global) const
{
    if (global < 0 || global >= static_cast<int>(global_to_block_.size()))
        throw invalid_parameter("global id out of range: " + std::to_string(global));
    return global_to_block_[global];
}

namespace {

std::string block_tag(std::size_t i)
{
    return "block " + std::to_string(i + 1);
}

void validate_block(const BlockSpec& b, AmalgamMode mode, std::size_t i)
{
    const int n = b.graph.vertex_count();
    if (!is_connected(b.graph))
        throw invalid_parameter(block_tag(i) + ": graph not connected");
    if (mode == AmalgamMode::vertex) {
        if (n < 2)
            throw invalid_parameter(block_tag(i) + ": vertex-mode block needs >= 2 vertices");
        const int* t = std::get_if<int>(&b.terminal);
        if (!t)
            throw invalid_parameter(block_tag(i) + ": expected a terminal vertex");
        if (*t < 0 || *t >= n)
            throw invalid_parameter(block_tag(i) + ": terminal vertex out of range");
    } else {
        if (n < 3)
            throw invalid_parameter(block_tag(i) + ": edge-mode block needs >= 3 vertices");
        const auto* t = std::get_if<std::pair<int, int>>(&b.terminal);
        if (!t)
            throw invalid_parameter(block_tag(i) + ": expected a terminal edge");
        auto [a, c] = *t;
        if (a < 0 || a >= n || c < 0 || c >= n || a == c)
            throw invalid_parameter(block_tag(i) + ": terminal edge endpoints invalid");
        if (!b.graph.has_edge(a, c))
            throw invalid_parameter(block_tag(i) + ": terminal endpoints not adjacent");
    }
}

} // namespace

struct AmalgamBuilder {
    static Amalgam build(std::span<const BlockSpec> blocks, AmalgamMode mode)
    {
        if (blocks.empty())
            throw invalid_parameter("amalgamation needs at least one block");
        for (std::size_t i = 0; i < blocks.size(); ++i)
            validate_block(blocks[i], mode, i);

        AmalgamLabeling lab;
        lab.mode_ = mode;
        lab.block_to_global_.resize(blocks.size());

        const int shared = mode == AmalgamMode::vertex ? 1 : 2;
        int next = shared;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            const int nb = b.graph.vertex_count();
            auto& map = lab.block_to_global_[i];
            map.assign(nb, -1);
            if (mode == AmalgamMode::vertex) {
                map[std::get<int>(b.terminal)] = 0;
            } else {
                auto [a, c] = std::get<std::pair<int, int>>(b.terminal);
                map[a] = 0;
                map[c] = 1;
            }
            for (int local = 0; local < nb; ++local)
                if (map[local] < 0)
                    map[local] = next++;
        }

        std::vector<std::pair<int, int>> edges;
        if (mode == AmalgamMode::edge)
            edges.emplace_back(0, 1); // the shared edge, exactly once
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& map = lab.block_to_global_[i];
            for (auto [u, v] : blocks[i].graph.edges()) {
                int gu = map[u], gv = map[v];
                if (mode == AmalgamMode::edge && ((gu == 0 && gv == 1) || (gu == 1 && gv == 0)))
                    continue; // each block's copy of the terminal edge
                edges.emplace_back(gu, gv);
            }
        }

        lab.global_to_block_.resize(next);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (int local = 0; local < blocks[i].graph.vertex_count(); ++local)
                lab.global_to_block_[lab.block_to_global_[i][local]].emplace_back(static_cast<int>(i), local);

        Amalgam result{Graph::from_edges(next, std::move(edges)), std::move(lab)};
        assert(is_connected(result.graph));
        return result;
    }
};

Amalgam vertex_amalgamate(std::span<const BlockSpec> blocks)
{
    return AmalgamBuilder::build(blocks, AmalgamMode::vertex);
}

Amalgam edge_amalgamate(std::span<const BlockSpec> blocks)
{
    return AmalgamBuilder::build(blocks, AmalgamMode::edge);
}

Terminal canonical_terminal(Family family, int size, AmalgamMode mode)
{
    switch (family) {
    case Family::complete:
        if (mode == AmalgamMode::vertex) {
            if (size < 2)
                throw invalid_parameter("complete block needs k >= 2");
            return size - 1;
        }
        if (size < 3)
            throw invalid_parameter("edge-mode complete block needs k >= 3");
        return std::pair{size - 2, size - 1};
    case Family::cycle:
        if (size < 3)
            throw invalid_parameter("cycle block needs n >= 3");
        if (mode == AmalgamMode::vertex)
            return 0;
        return std::pair{0, size - 1};
    case Family::prism:
        if (size < 3)
            throw invalid_parameter("prism block needs p >= 3");
        if (mode == AmalgamMode::vertex)
            return size;
        return std::pair{size, 2 * size - 1};
    case Family::path:
        break;
    }
    throw invalid_parameter("no canonical terminal for this family");
}

} // namespace metricdim
