#include "tuttecover/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tuttecover {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // False when x and y were already connected.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        return true;
    }
};

}  // namespace

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::unordered_set<std::string> vertex_set;
    for (const auto& v : vertices_) {
        if (!vertex_set.insert(v).second) {
            throw InvalidParameters("duplicate vertex \"" + v + "\"");
        }
    }
    std::unordered_set<std::string> edge_labels;
    for (const auto& e : edges_) {
        if (!edge_labels.insert(e.label).second) {
            throw InvalidParameters("duplicate edge label \"" + e.label + "\"");
        }
        if (!vertex_set.count(e.u) || !vertex_set.count(e.v)) {
            throw UnknownElement("edge \"" + e.label + "\" touches an undeclared vertex");
        }
    }
}

Multigraph Multigraph::from_edges(std::vector<Edge> edges) {
    std::vector<std::string> vertices;
    std::unordered_set<std::string> seen;
    for (const auto& e : edges) {
        if (seen.insert(e.u).second) vertices.push_back(e.u);
        if (seen.insert(e.v).second) vertices.push_back(e.v);
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

std::optional<std::size_t> Multigraph::edge_index(const std::string& label) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].label == label) return i;
    }
    return std::nullopt;
}

Multigraph complete_graph(std::size_t k) {
    std::vector<std::string> vertices;
    vertices.reserve(k);
    for (std::size_t i = 0; i < k; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j),
                             vertices[i], vertices[j]});
        }
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

Matroid graphic_matroid(const Multigraph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    if (m > kMaxGroundSize) {
        throw CapacityExceeded("graph has " + std::to_string(m) + " > 64 edges");
    }

    std::unordered_map<std::string, std::size_t> vertex_index;
    for (const auto& v : g.vertices()) vertex_index.emplace(v, vertex_index.size());
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    ends.reserve(m);
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& e : edges) {
        ends.emplace_back(vertex_index.at(e.u), vertex_index.at(e.v));
        labels.push_back(e.label);
    }

    // Rank = V - #components; bases are the forests of exactly that size.
    UnionFind components(g.vertices().size());
    std::size_t rank = 0;
    for (const auto& [u, v] : ends) {
        if (components.unite(u, v)) ++rank;
    }

    std::vector<Mask> bases;
    for (Mask subset : k_subsets(m, rank)) {
        UnionFind uf(g.vertices().size());
        bool forest = true;
        for (std::size_t i : bits_of(subset)) {
            if (!uf.unite(ends[i].first, ends[i].second)) {
                forest = false;
                break;
            }
        }
        if (forest) bases.push_back(subset);
    }
    return Matroid::trusted(GroundSet(std::move(labels)), std::move(bases));
}

Multigraph graph_delete(const Multigraph& g, const std::vector<std::string>& edge_labels) {
    std::unordered_set<std::size_t> doomed;
    for (const auto& label : edge_labels) {
        auto idx = g.edge_index(label);
        if (!idx) throw UnknownElement("no edge \"" + label + "\" in the graph");
        doomed.insert(*idx);
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!doomed.count(i)) kept.push_back(g.edges()[i]);
    }
    return Multigraph(g.vertices(), std::move(kept));
}

Multigraph graph_contract(const Multigraph& g, const std::vector<std::string>& edge_labels) {
    std::vector<std::string> order = edge_labels;
    std::sort(order.begin(), order.end());

    Multigraph current = g;
    for (const auto& label : order) {
        auto idx = current.edge_index(label);
        if (!idx) throw UnknownElement("no edge \"" + label + "\" in the graph");
        const Edge target = current.edges()[*idx];

        if (target.is_loop()) {
            current = graph_delete(current, {label});
            continue;
        }
        // Merge the later vertex into the earlier one.
        auto pos = [&](const std::string& v) {
            return std::find(current.vertices().begin(), current.vertices().end(), v) -
                   current.vertices().begin();
        };
        std::string keep = target.u, drop = target.v;
        if (pos(keep) > pos(drop)) std::swap(keep, drop);

        std::vector<std::string> vertices;
        for (const auto& v : current.vertices()) {
            if (v != drop) vertices.push_back(v);
        }
        std::vector<Edge> edges;
        for (const auto& e : current.edges()) {
            if (e.label == label) continue;
            Edge mapped = e;
            if (mapped.u == drop) mapped.u = keep;
            if (mapped.v == drop) mapped.v = keep;
            edges.push_back(std::move(mapped));
        }
        current = Multigraph(std::move(vertices), std::move(edges));
    }
    return current;
}

}  // namespace tuttecover
