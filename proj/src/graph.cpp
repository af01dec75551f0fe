#include "metricdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace metricdim {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges)
{
    if (n < 1)
        throw invalid_parameter("graph needs at least one vertex");

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_parameter("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw invalid_parameter("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw invalid_parameter("duplicate edge");

    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_)
        std::sort(a.begin(), a.end());
    g.edges_ = std::move(edges);
    return g;
}

std::span<const int> Graph::neighbors(int v) const
{
    if (v < 0 || v >= n_)
        throw invalid_parameter("vertex id out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d))
{
    if (n_ < 1 || d_.size() != static_cast<std::size_t>(n_) * n_)
        throw invalid_parameter("distance matrix shape mismatch");
}

Graph make_path(int n)
{
    if (n < 1)
        throw invalid_parameter("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw invalid_parameter("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int k)
{
    if (k < 1)
        throw invalid_parameter("complete graph needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(k, std::move(edges));
}

Graph make_prism(int p)
{
    if (p < 3)
        throw invalid_parameter("prism needs p >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i) {
        int j = (i + 1) % p;
        edges.emplace_back(i, j);         // first rim
        edges.emplace_back(p + i, p + j); // second rim
        edges.emplace_back(i, p + i);     // spoke
    }
    return Graph::from_edges(2 * p, std::move(edges));
}

Graph make_family(Family family, int size)
{
    switch (family) {
    case Family::complete: return make_complete(size);
    case Family::cycle: return make_cycle(size);
    case Family::prism: return make_prism(size);
    case Family::path: return make_path(size);
    }
    throw invalid_parameter("unknown family");
}

namespace {

// BFS distances from src; unreachable vertices stay -1.
void bfs(const Graph& g, int src, std::span<int> dist)
{
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
}

} // namespace

bool is_connected(const Graph& g)
{
    std::vector<int> dist(g.vertex_count());
    bfs(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix all_pairs_distances(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * n);
    for (int src = 0; src < n; ++src) {
        std::span<int> row{d.data() + static_cast<std::size_t>(src) * n, static_cast<std::size_t>(n)};
        bfs(g, src, row);
        for (int v = 0; v < n; ++v)
            if (row[v] < 0)
                throw not_connected("vertex " + std::to_string(v) + " unreachable from " + std::to_string(src));
    }
    return DistanceMatrix(n, std::move(d));
}

} // namespace metricdim
