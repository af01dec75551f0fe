#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

enum class AmalgamMode { vertex, edge };

using Terminal = std::variant<int, std::pair<int, int>>;

/// One block of an amalgamation: a connected graph plus the terminal that
/// gets identified across blocks. Edge terminals are ordered pairs; all
/// first endpoints merge together, all second endpoints merge together.
struct BlockSpec {
    Graph graph;
    Terminal terminal;

    static BlockSpec with_terminal_vertex(Graph g, int v) { return {std::move(g), v}; }
    static BlockSpec with_terminal_edge(Graph g, int a, int b) { return {std::move(g), std::pair{a, b}}; }
};

/// Block-local -> global vertex naming of an amalgam.
///
/// Global ids are assigned shared-first (c = 0, or c1 = 0 / c2 = 1), then
/// block by block in input order with local order preserved, so identical
/// inputs always yield identical graphs.
class AmalgamLabeling {
public:
    AmalgamMode mode() const { return mode_; }
    int block_count() const { return static_cast<int>(block_to_global_.size()); }
    int block_order(int block) const { return static_cast<int>(block_to_global_.at(block).size()); }

    int shared_vertex() const;              // c, vertex mode
    std::pair<int, int> shared_edge() const; // (c1, c2), edge mode

    int global_of(int block, int local) const;
    /// All (block, local) preimages; shared vertices have one per block.
    std::span<const std::pair<int, int>> preimages(int global) const;

private:
    friend struct AmalgamBuilder;

    AmalgamMode mode_ = AmalgamMode::vertex;
    std::vector<std::vector<int>> block_to_global_;
    std::vector<std::vector<std::pair<int, int>>> global_to_block_;
};

struct Amalgam {
    Graph graph;
    AmalgamLabeling labeling;
};

Amalgam vertex_amalgamate(std::span<const BlockSpec> blocks);
Amalgam edge_amalgamate(std::span<const BlockSpec> blocks);

/// The fixed terminal a family block uses when amalgamated: complete graphs
/// anchor at their last vertex (edge: the last two), cycles at vertex 0
/// (edge: {0, n-1}), prisms at second-rim vertex p (edge: {p, 2p-1}).
Terminal canonical_terminal(Family family, int size, AmalgamMode mode);

} // namespace metricdim
