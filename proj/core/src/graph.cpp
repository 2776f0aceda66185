#include "oscent/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "oscent/errors.hpp"

namespace oscent::model {

Graph::Graph(int size, std::vector<std::pair<int, int>> edges)
    : size_(size), edges_(std::move(edges)) {
    if (size < 1) {
        throw DimensionError("graph needs at least one site, got " + std::to_string(size));
    }
    adjacency_.assign(size, {});
    std::set<std::pair<int, int>> seen;
    for (auto& [x, y] : edges_) {
        if (x < 0 || x >= size || y < 0 || y >= size) {
            throw DimensionError("edge endpoint out of range: (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ")");
        }
        if (x == y) {
            throw DomainError("self-loop at site " + std::to_string(x));
        }
        auto key = std::minmax(x, y);
        if (!seen.insert(key).second) {
            throw DomainError("duplicate edge (" + std::to_string(x) + ", " + std::to_string(y) +
                              ")");
        }
        adjacency_[x].push_back(y);
        adjacency_[y].push_back(x);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        degree_bound_ = std::max(degree_bound_, static_cast<int>(nbrs.size()));
    }
}

Graph Graph::path(int size) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size > 0 ? size - 1 : 0);
    for (int i = 0; i + 1 < size; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(size, std::move(edges));
}

std::vector<int> Graph::distances_from(int site) const {
    if (site < 0 || site >= size_) {
        throw DimensionError("BFS source out of range");
    }
    std::vector<int> dist(size_, -1);
    dist[site] = 0;
    std::deque<int> queue{site};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : adjacency_[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

Region::Region(int parent_size, std::vector<int> indices)
    : parent_size_(parent_size), indices_(std::move(indices)) {
    if (parent_size < 1) {
        throw BipartitionError("region parent must have at least one site");
    }
    if (indices_.empty()) {
        throw BipartitionError("region is empty");
    }
    for (size_t t = 0; t < indices_.size(); ++t) {
        if (indices_[t] < 0 || indices_[t] >= parent_size) {
            throw BipartitionError("region index " + std::to_string(indices_[t]) +
                                   " out of range for parent of size " +
                                   std::to_string(parent_size));
        }
        if (t > 0 && indices_[t] <= indices_[t - 1]) {
            throw BipartitionError("region indices must be strictly increasing");
        }
    }
}

Region Region::range(int parent_size, int first, int count) {
    std::vector<int> idx(count > 0 ? count : 0);
    for (int i = 0; i < count; ++i) {
        idx[i] = first + i;
    }
    return Region(parent_size, std::move(idx));
}

Region Region::centered(int parent_size, int count) {
    return range(parent_size, (parent_size - count) / 2, count);
}

bool Region::contains(int site) const {
    return std::binary_search(indices_.begin(), indices_.end(), site);
}

Region Region::complement() const {
    if (is_full()) {
        throw BipartitionError("complement of the full region is empty");
    }
    std::vector<int> rest;
    rest.reserve(parent_size_ - size());
    for (int i = 0; i < parent_size_; ++i) {
        if (!contains(i)) {
            rest.push_back(i);
        }
    }
    return Region(parent_size_, std::move(rest));
}

std::vector<int> boundary_sites(const Region& region, const Graph& graph) {
    if (region.parent_size() != graph.size()) {
        throw DimensionError("region and graph sizes disagree");
    }
    std::vector<int> result;
    for (int x : region.indices()) {
        for (int y : graph.neighbors(x)) {
            if (!region.contains(y)) {
                result.push_back(x);
                break;
            }
        }
    }
    return result;
}

} // namespace oscent::model
