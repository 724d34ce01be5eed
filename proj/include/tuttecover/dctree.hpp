#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tuttecover/matroid.hpp"

namespace tuttecover {

enum class MinorOp { Delete, Contract, Pass };

std::string to_string(MinorOp op);

/// Annotation on a parent→child edge of a deletion-contraction tree.
struct DCLink {
    MinorOp op = MinorOp::Pass;
    std::string element;  // unused for Pass

    bool operator==(const DCLink&) const = default;
};

/// Rooted tree of matroids connected by single-element minor steps.
/// A branching node splits into M\e and M/e at a non-degenerate e; a
/// Pass node repeats its matroid. Stored as an index arena with node 0
/// the root; node ids are stable under expansion.
class DCTree {
public:
    struct Child {
        DCLink link;
        std::size_t node = 0;

        bool operator==(const Child&) const = default;
    };
    struct Node {
        Matroid matroid;
        std::vector<Child> children;

        bool operator==(const Node&) const = default;
    };

    static constexpr std::size_t kRoot = 0;

    explicit DCTree(Matroid root) { nodes_.push_back({std::move(root), {}}); }

    /// Assembles a parsed arena. Checks shape only (indices in range,
    /// every non-root node has exactly one parent); semantic checks
    /// live in validate_tree.
    explicit DCTree(std::vector<Node> nodes);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(std::size_t id) const;
    const Matroid& matroid_at(std::size_t id) const { return node(id).matroid; }
    const Matroid& root_matroid() const { return nodes_.front().matroid; }
    bool is_leaf(std::size_t id) const { return node(id).children.empty(); }

    /// Leaf ids in depth-first order, children visited in stored order.
    std::vector<std::size_t> leaf_ids() const;

    /// parent[id] for every non-root node; parent[0] = 0.
    std::vector<std::size_t> parents() const;

    bool operator==(const DCTree&) const = default;

private:
    std::vector<Node> nodes_;
};

enum class ExpandOrder { DeleteFirst, ContractFirst };

DCTree trivial_tree(Matroid m);

/// Splits the leaf on a non-degenerate element, attaching M\e and M/e.
DCTree expand_leaf(const DCTree& t, std::size_t leaf, const std::string& element,
                   ExpandOrder order = ExpandOrder::DeleteFirst);

/// Replaces a leaf by a whole tree rooted at an equal matroid.
DCTree graft(const DCTree& t, std::size_t leaf, const DCTree& subtree);

struct TreeValidation {
    bool ok = true;
    std::vector<std::string> problems;

    explicit operator bool() const { return ok; }
};

/// Re-derives every child matroid and checks the branching rules.
TreeValidation validate_tree(const DCTree& t);

}  // namespace tuttecover
