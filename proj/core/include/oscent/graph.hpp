#pragma once

#include <utility>
#include <vector>

namespace oscent::model {

/// Finite simple interaction graph on sites 0..size-1.
class Graph {
public:
    /// Edges are unordered pairs of distinct sites; duplicates are rejected.
    Graph(int size, std::vector<std::pair<int, int>> edges);

    static Graph path(int size);

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int site) const { return adjacency_[site]; }
    int degree(int site) const { return static_cast<int>(adjacency_[site].size()); }

    /// Largest vertex degree (0 for an edgeless graph).
    int degree_bound() const { return degree_bound_; }

    /// BFS distances from a site; -1 marks unreachable sites.
    std::vector<int> distances_from(int site) const;

private:
    int size_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    int degree_bound_ = 0;
};

/// Strictly increasing subset of site indices inside a parent of given size.
class Region {
public:
    Region(int parent_size, std::vector<int> indices);

    /// Contiguous block [first, first + count).
    static Region range(int parent_size, int first, int count);

    /// Contiguous block of the given size centered in the parent.
    static Region centered(int parent_size, int count);

    int parent_size() const { return parent_size_; }
    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }

    bool is_full() const { return size() == parent_size_; }
    bool is_proper() const { return !is_full(); }

    bool contains(int site) const;

    /// Sites of the parent not in this region; throws BipartitionError if full.
    Region complement() const;

private:
    int parent_size_ = 0;
    std::vector<int> indices_;
};

/// Sites of the region with at least one neighbor outside it.
std::vector<int> boundary_sites(const Region& region, const Graph& graph);

} // namespace oscent::model
