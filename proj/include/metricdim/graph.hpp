#pragma once

#include <span>
#include <utility>
#include <vector>

#include "metricdim/errors.hpp"

namespace metricdim {

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction; safe to share across threads. Edges are
/// normalized to u < v and kept sorted lexicographically.
class Graph {
public:
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> d);

    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    std::span<const int> row(int u) const {
        return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
    }

private:
    int n_;
    std::vector<int> d_;
};

enum class Family { complete, cycle, prism, path };

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int k);

/// Prism on 2p vertices: two p-cycles 0..p-1 and p..2p-1 joined by spokes
/// (i, p+i). 3-regular for every p >= 3.
Graph make_prism(int p);

Graph make_family(Family family, int size);

bool is_connected(const Graph& g);

/// Per-source BFS. Throws not_connected when some vertex is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

} // namespace metricdim
