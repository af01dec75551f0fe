#include "metricdim/resolving.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace metricdim {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw invalid_parameter("duplicate vertex id in set");
}

VertexSet VertexSet::from_sorted(std::vector<int> ids)
{
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i - 1] >= ids[i])
            throw invalid_parameter("vertex ids not strictly increasing");
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

namespace {

void require_valid_ids(const DistanceMatrix& dm, const VertexSet& s)
{
    if (!s.empty() && (s.ids().front() < 0 || s.ids().back() >= dm.n()))
        throw invalid_parameter("vertex id out of range for this graph");
}

} // namespace

Representation representation(const DistanceMatrix& dm, int v, const VertexSet& s)
{
    if (s.empty())
        throw invalid_parameter("representation against an empty set");
    if (v < 0 || v >= dm.n())
        throw invalid_parameter("vertex id out of range: " + std::to_string(v));
    require_valid_ids(dm, s);

    Representation r;
    r.reserve(s.ids().size());
    for (int w : s.ids())
        r.push_back(dm.at(v, w));
    return r;
}

ResolveCheck check_resolving(const DistanceMatrix& dm, const VertexSet& s)
{
    if (s.empty())
        throw invalid_parameter("resolving check against an empty set");
    require_valid_ids(dm, s);

    const int n = dm.n();
    const auto& ids = s.ids();
    // Scanning u < v in order means the first collision found is the
    // lexicographically smallest one.
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool equal = true;
            for (int w : ids) {
                if (dm.at(u, w) != dm.at(v, w)) {
                    equal = false;
                    break;
                }
            }
            if (equal)
                return {false, std::pair{u, v}};
        }
    }
    return {true, std::nullopt};
}

bool is_resolving(const DistanceMatrix& dm, const VertexSet& s)
{
    return check_resolving(dm, s).resolving;
}

DistanceSimilarPartition distance_similar_partition(const DistanceMatrix& dm)
{
    const int n = dm.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool similar = true;
            for (int x = 0; x < n && similar; ++x)
                if (x != u && x != v)
                    similar = dm.at(u, x) == dm.at(v, x);
            if (similar)
                parent[find(v)] = find(u);
        }
    }

    std::vector<std::vector<int>> classes(n);
    for (int v = 0; v < n; ++v)
        classes[find(v)].push_back(v);
    std::erase_if(classes, [](const auto& c) { return c.empty(); });
    // Roots are class minima, so the classes already come out sorted by
    // smallest member with members ascending.
    return {std::move(classes)};
}

int class_lower_bound(const DistanceSimilarPartition& p)
{
    int total = 0;
    for (const auto& c : p.classes)
        total += static_cast<int>(c.size()) - 1;
    return total;
}

VertexSet forced_vertices(const DistanceSimilarPartition& p)
{
    std::vector<int> ids;
    for (const auto& c : p.classes)
        ids.insert(ids.end(), c.begin(), c.end() - 1); // members ascend; drop the max
    std::sort(ids.begin(), ids.end());
    return VertexSet::from_sorted(std::move(ids));
}

} // namespace metricdim
