#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

/// Ordered set of distinct vertex ids. Ascending id order fixes the
/// coordinate order of representations taken against the set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);        // sorts; rejects duplicates
    static VertexSet from_sorted(std::vector<int> ids);

    const std::vector<int>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> ids_;
};

/// Distance vector of one vertex against an ordered set.
using Representation = std::vector<int>;

Representation representation(const DistanceMatrix& dm, int v, const VertexSet& s);

struct ResolveCheck {
    bool resolving = false;
    /// Lexicographically smallest pair with equal representations, when any.
    std::optional<std::pair<int, int>> collision;
};

ResolveCheck check_resolving(const DistanceMatrix& dm, const VertexSet& s);
bool is_resolving(const DistanceMatrix& dm, const VertexSet& s);

/// Partition of V into maximal classes of vertices u, v with
/// d(u,x) = d(v,x) for every x outside {u,v}.
struct DistanceSimilarPartition {
    std::vector<std::vector<int>> classes; // sorted by smallest member, members ascending
    int class_count() const { return static_cast<int>(classes.size()); }
};

DistanceSimilarPartition distance_similar_partition(const DistanceMatrix& dm);

/// |V| - (number of classes): every resolving set has at least this size.
int class_lower_bound(const DistanceSimilarPartition& p);

/// From each class, every member except the largest id. Any minimum
/// resolving set can be rewritten (by swapping within classes) to contain
/// this set, so the search only has to extend it.
VertexSet forced_vertices(const DistanceSimilarPartition& p);

} // namespace metricdim
