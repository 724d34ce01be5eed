#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tuttecover/matroid.hpp"

namespace tuttecover {

struct Edge {
    std::string label;
    std::string u;
    std::string v;

    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

/// Undirected multigraph: loops and parallel edges allowed.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    /// Vertex set inferred from endpoints, in first-appearance order.
    static Multigraph from_edges(std::vector<Edge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::size_t> edge_index(const std::string& label) const;

    bool operator==(const Multigraph&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

/// K_k with vertices v0..v{k-1} and edges labeled "e{i}_{j}".
Multigraph complete_graph(std::size_t k);

/// Ground = edge labels; independent = cycle-free edge subsets. Bases are
/// collected by enumerating subsets of size V − #components and keeping
/// the forests.
Matroid graphic_matroid(const Multigraph& g);

Multigraph graph_delete(const Multigraph& g, const std::vector<std::string>& edge_labels);

/// Non-loop edges merge their endpoints (processed in ascending label
/// order); loop edges just disappear. Parallels and fresh loops survive.
Multigraph graph_contract(const Multigraph& g, const std::vector<std::string>& edge_labels);

}  // namespace tuttecover
