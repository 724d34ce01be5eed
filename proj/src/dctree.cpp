#include "tuttecover/dctree.hpp"

namespace tuttecover {

std::string to_string(MinorOp op) {
    switch (op) {
        case MinorOp::Delete: return "delete";
        case MinorOp::Contract: return "contract";
        case MinorOp::Pass: return "pass";
    }
    return "?";
}

DCTree::DCTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw InvalidTree("a tree needs at least one node");
    std::vector<int> referenced(nodes_.size(), 0);
    for (const auto& node : nodes_) {
        for (const auto& child : node.children) {
            if (child.node >= nodes_.size()) {
                throw InvalidTree("child index " + std::to_string(child.node) +
                                  " out of range");
            }
            ++referenced[child.node];
        }
    }
    if (referenced[kRoot] != 0) throw InvalidTree("the root cannot be a child");
    for (std::size_t id = 1; id < nodes_.size(); ++id) {
        if (referenced[id] != 1) {
            throw InvalidTree("node " + std::to_string(id) + " has " +
                              std::to_string(referenced[id]) + " parents");
        }
    }
    // Single root + unique parents on a finite index set rules out cycles
    // only if everything is reachable from the root; check that too.
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::size_t> stack{kRoot};
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        if (seen[id]) continue;
        seen[id] = 1;
        ++reached;
        for (const auto& child : nodes_[id].children) stack.push_back(child.node);
    }
    if (reached != nodes_.size()) {
        throw InvalidTree("tree has nodes unreachable from the root");
    }
}

const DCTree::Node& DCTree::node(std::size_t id) const {
    if (id >= nodes_.size()) {
        throw InvalidTree("node id " + std::to_string(id) + " out of range");
    }
    return nodes_[id];
}

std::vector<std::size_t> DCTree::leaf_ids() const {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{kRoot};
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        const auto& children = nodes_[id].children;
        if (children.empty()) {
            out.push_back(id);
            continue;
        }
        for (auto it = children.rbegin(); it != children.rend(); ++it) {
            stack.push_back(it->node);
        }
    }
    return out;
}

std::vector<std::size_t> DCTree::parents() const {
    std::vector<std::size_t> parent(nodes_.size(), kRoot);
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        for (const auto& child : nodes_[id].children) parent[child.node] = id;
    }
    return parent;
}

DCTree trivial_tree(Matroid m) { return DCTree(std::move(m)); }

DCTree expand_leaf(const DCTree& t, std::size_t leaf, const std::string& element,
                   ExpandOrder order) {
    if (!t.is_leaf(leaf)) {
        throw NotALeaf("node " + std::to_string(leaf) + " already has children");
    }
    const Matroid& m = t.matroid_at(leaf);
    if (m.classify(element) != ElementClass::NonDegenerate) {
        throw DegenerateElement("cannot branch on \"" + element + "\": it is a " +
                                to_string(m.classify(element)));
    }

    auto nodes = t.nodes();
    const std::size_t deleted_id = nodes.size();
    const std::size_t contracted_id = nodes.size() + 1;
    nodes.push_back({m.deletion({element}), {}});
    nodes.push_back({m.contraction({element}), {}});

    DCTree::Child del{{MinorOp::Delete, element}, deleted_id};
    DCTree::Child con{{MinorOp::Contract, element}, contracted_id};
    nodes[leaf].children = order == ExpandOrder::DeleteFirst
                               ? std::vector<DCTree::Child>{del, con}
                               : std::vector<DCTree::Child>{con, del};
    return DCTree(std::move(nodes));
}

DCTree graft(const DCTree& t, std::size_t leaf, const DCTree& subtree) {
    if (!t.is_leaf(leaf)) {
        throw NotALeaf("node " + std::to_string(leaf) + " already has children");
    }
    if (!(t.matroid_at(leaf) == subtree.root_matroid())) {
        throw InvalidTree("grafted root matroid differs from the leaf matroid");
    }
    auto nodes = t.nodes();
    const std::size_t offset = nodes.size();
    // The subtree root merges into the leaf; its other nodes shift by
    // offset - 1.
    auto mapped = [&](std::size_t sub_id) {
        return sub_id == DCTree::kRoot ? leaf : offset + sub_id - 1;
    };
    nodes[leaf].children.clear();
    for (const auto& child : subtree.node(DCTree::kRoot).children) {
        nodes[leaf].children.push_back({child.link, mapped(child.node)});
    }
    for (std::size_t sub_id = 1; sub_id < subtree.size(); ++sub_id) {
        DCTree::Node copy = subtree.node(sub_id);
        for (auto& child : copy.children) child.node = mapped(child.node);
        nodes.push_back(std::move(copy));
    }
    return DCTree(std::move(nodes));
}

TreeValidation validate_tree(const DCTree& t) {
    TreeValidation report;
    auto flag = [&](std::string problem) {
        report.ok = false;
        report.problems.push_back(std::move(problem));
    };

    for (std::size_t id = 0; id < t.size(); ++id) {
        const auto& node = t.node(id);
        const auto& children = node.children;
        const std::string where = "node " + std::to_string(id);

        if (children.empty()) continue;

        if (children.size() == 1) {
            const auto& child = children.front();
            if (child.link.op != MinorOp::Pass) {
                flag(where + ": a single child must be a pass link");
            } else if (!(t.matroid_at(child.node) == node.matroid)) {
                flag(where + ": pass child does not repeat the matroid");
            }
            continue;
        }

        if (children.size() != 2) {
            flag(where + ": has " + std::to_string(children.size()) + " children");
            continue;
        }

        const auto& first = children[0];
        const auto& second = children[1];
        const bool ops_pair = (first.link.op == MinorOp::Delete &&
                               second.link.op == MinorOp::Contract) ||
                              (first.link.op == MinorOp::Contract &&
                               second.link.op == MinorOp::Delete);
        if (!ops_pair || first.link.element != second.link.element) {
            flag(where + ": branching must pair delete and contract on one element");
            continue;
        }
        const std::string& e = first.link.element;
        if (!node.matroid.ground().contains(e)) {
            flag(where + ": branches on \"" + e + "\" outside its ground set");
            continue;
        }
        if (node.matroid.classify(e) != ElementClass::NonDegenerate) {
            flag(where + ": branches on degenerate element \"" + e + "\"");
            continue;
        }
        for (const auto& child : children) {
            const Matroid expected = child.link.op == MinorOp::Delete
                                         ? node.matroid.deletion({e})
                                         : node.matroid.contraction({e});
            if (!(t.matroid_at(child.node) == expected)) {
                flag(where + ": " + to_string(child.link.op) + " child at \"" + e +
                     "\" does not match the recomputed minor");
            }
        }
    }
    return report;
}

}  // namespace tuttecover
