#include "tuttecover/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace tuttecover {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw ParseError("input is not valid JSON");
    return parsed;
}

std::vector<std::string> string_array(const json& j, const std::string& key) {
    if (!j.is_array()) throw ParseError("\"" + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw ParseError("\"" + key + "\" must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

json matroid_json(const Matroid& m) {
    json bases = json::array();
    for (Mask b : m.bases()) bases.push_back(m.ground().labels_of(b));
    return json{{"ground", m.ground().labels()}, {"bases", std::move(bases)}};
}

Matroid matroid_from(const json& j) {
    if (!j.is_object()) throw ParseError("a matroid must be a JSON object");
    if (!j.contains("ground")) throw ParseError("missing \"ground\"");
    GroundSet ground(string_array(j.at("ground"), "ground"));

    const bool has_bases = j.contains("bases");
    const bool has_independent = j.contains("independent");
    if (has_bases == has_independent) {
        throw ParseError("need exactly one of \"bases\" or \"independent\"");
    }
    const std::string key = has_bases ? "bases" : "independent";
    const json& family_json = j.at(key);
    if (!family_json.is_array()) throw ParseError("\"" + key + "\" must be an array");
    std::vector<std::vector<std::string>> family;
    for (const auto& subset : family_json) family.push_back(string_array(subset, key));

    return has_bases ? Matroid::from_bases(std::move(ground), family)
                     : Matroid::from_independent_sets(std::move(ground), family);
}

}  // namespace

std::string matroid_to_json(const Matroid& m) { return matroid_json(m).dump(2) + "\n"; }

Matroid matroid_from_json(const std::string& text) { return matroid_from(parse_json(text)); }

std::string polynomial_to_json(const TuttePolynomial& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
        terms.push_back(json{{"x", key.first}, {"y", key.second}, {"c", c.str()}});
    }
    return json{{"terms", std::move(terms)}}.dump(2) + "\n";
}

TuttePolynomial polynomial_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        throw ParseError("a polynomial needs a \"terms\" array");
    }
    TuttePolynomial p;
    for (const auto& term : j.at("terms")) {
        if (!term.is_object() || !term.contains("x") || !term.contains("y") ||
            !term.contains("c") || !term.at("x").is_number_unsigned() ||
            !term.at("y").is_number_unsigned() || !term.at("c").is_string()) {
            throw ParseError("each term needs unsigned \"x\", \"y\" and a string \"c\"");
        }
        BigInt c;
        try {
            c = BigInt(term.at("c").get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("\"c\" is not a decimal integer");
        }
        p.add_term(term.at("x").get<unsigned>(), term.at("y").get<unsigned>(), c);
    }
    return p;
}

std::string k0_to_json(const KZeroElement& a) {
    json classes = json::array();
    for (const auto& [cls, coeff] : a.coefficients()) {
        classes.push_back(
            json{{"loops", cls.loops}, {"coloops", cls.coloops}, {"coeff", coeff}});
    }
    return json{{"classes", std::move(classes)}}.dump(2) + "\n";
}

KZeroElement k0_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array()) {
        throw ParseError("a K0 element needs a \"classes\" array");
    }
    KZeroElement out;
    for (const auto& entry : j.at("classes")) {
        if (!entry.is_object() || !entry.contains("loops") || !entry.contains("coloops") ||
            !entry.contains("coeff") || !entry.at("loops").is_number_unsigned() ||
            !entry.at("coloops").is_number_unsigned() ||
            !entry.at("coeff").is_number_integer()) {
            throw ParseError(
                "each class needs unsigned \"loops\", \"coloops\" and integer \"coeff\"");
        }
        out.add({entry.at("loops").get<std::size_t>(), entry.at("coloops").get<std::size_t>()},
                entry.at("coeff").get<long long>());
    }
    return out;
}

std::string dctree_to_json(const DCTree& t) {
    json matroids = json::array();
    std::unordered_map<std::string, std::size_t> matroid_refs;
    auto ref_of = [&](const Matroid& m) {
        std::string dumped = matroid_json(m).dump();
        auto [it, inserted] = matroid_refs.emplace(std::move(dumped), matroids.size());
        if (inserted) matroids.push_back(matroid_json(m));
        return it->second;
    };

    json nodes = json::array();
    for (std::size_t id = 0; id < t.size(); ++id) {
        const auto& node = t.node(id);
        json children = json::array();
        for (const auto& child : node.children) {
            json link{{"op", to_string(child.link.op)}, {"node", child.node}};
            if (child.link.op != MinorOp::Pass) link["element"] = child.link.element;
            children.push_back(std::move(link));
        }
        nodes.push_back(json{{"id", id},
                             {"matroid", ref_of(node.matroid)},
                             {"children", std::move(children)}});
    }
    return json{{"matroids", std::move(matroids)}, {"nodes", std::move(nodes)}}.dump(2) +
           "\n";
}

LoadedTree dctree_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("matroids") || !j.contains("nodes") ||
        !j.at("matroids").is_array() || !j.at("nodes").is_array()) {
        throw ParseError("a tree needs \"matroids\" and \"nodes\" arrays");
    }
    std::vector<Matroid> matroids;
    for (const auto& m : j.at("matroids")) matroids.push_back(matroid_from(m));
    if (matroids.empty()) throw ParseError("\"matroids\" must not be empty");

    const auto& nodes_json = j.at("nodes");
    const std::size_t count = nodes_json.size();
    if (count == 0) throw ParseError("\"nodes\" must not be empty");

    struct ParsedNode {
        std::size_t matroid_ref = 0;
        std::vector<DCTree::Child> children;
        bool present = false;
    };
    std::vector<ParsedNode> parsed(count);
    for (const auto& node : nodes_json) {
        if (!node.is_object() || !node.contains("id") || !node.contains("matroid") ||
            !node.at("id").is_number_unsigned() || !node.at("matroid").is_number_unsigned()) {
            throw ParseError("each node needs unsigned \"id\" and \"matroid\"");
        }
        const std::size_t id = node.at("id").get<std::size_t>();
        if (id >= count) throw ParseError("node \"id\" " + std::to_string(id) + " out of range");
        if (parsed[id].present) throw ParseError("duplicate node \"id\" " + std::to_string(id));
        parsed[id].present = true;
        const std::size_t ref = node.at("matroid").get<std::size_t>();
        if (ref >= matroids.size()) {
            throw ParseError("node " + std::to_string(id) + " references matroid " +
                             std::to_string(ref) + " out of range");
        }
        parsed[id].matroid_ref = ref;
        if (!node.contains("children")) continue;
        if (!node.at("children").is_array()) {
            throw ParseError("\"children\" must be an array");
        }
        for (const auto& child : node.at("children")) {
            if (!child.is_object() || !child.contains("op") || !child.contains("node") ||
                !child.at("op").is_string() || !child.at("node").is_number_unsigned()) {
                throw ParseError("each child needs a string \"op\" and an unsigned \"node\"");
            }
            const std::string op_name = child.at("op").get<std::string>();
            DCLink link;
            if (op_name == "delete") {
                link.op = MinorOp::Delete;
            } else if (op_name == "contract") {
                link.op = MinorOp::Contract;
            } else if (op_name == "pass") {
                link.op = MinorOp::Pass;
            } else {
                throw ParseError("unknown \"op\" \"" + op_name + "\"");
            }
            if (link.op != MinorOp::Pass) {
                if (!child.contains("element") || !child.at("element").is_string()) {
                    throw ParseError("\"" + op_name + "\" child needs a string \"element\"");
                }
                link.element = child.at("element").get<std::string>();
            }
            parsed[id].children.push_back({std::move(link), child.at("node").get<std::size_t>()});
        }
    }
    for (std::size_t id = 0; id < count; ++id) {
        if (!parsed[id].present) throw ParseError("missing node \"id\" " + std::to_string(id));
    }

    // Normalize to elementary form: re-derive each child matroid as the
    // literal minor of its (already normalized) parent; a child that
    // arrived as a positional relabeling of that minor is replaced, and
    // the replacement recorded.
    std::vector<DCTree::Node> nodes;
    nodes.reserve(count);
    for (const auto& p : parsed) nodes.push_back({matroids[p.matroid_ref], p.children});

    LoadedTree result{DCTree(std::move(nodes)), {}};
    std::vector<DCTree::Node> normalized = result.tree.nodes();
    std::vector<std::size_t> stack{DCTree::kRoot};
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        const Matroid& parent = normalized[id].matroid;
        for (const auto& child : normalized[id].children) {
            const Matroid& given = normalized[child.node].matroid;
            Matroid literal = [&] {
                switch (child.link.op) {
                    case MinorOp::Delete: return parent.deletion({child.link.element});
                    case MinorOp::Contract: return parent.contraction({child.link.element});
                    case MinorOp::Pass: return parent;
                }
                return parent;
            }();
            if (!(given == literal) && given.bases() == literal.bases() &&
                given.size() == literal.size()) {
                result.notes.push_back("node " + std::to_string(child.node) +
                                       " arrived relabeled; restored the literal minor");
                normalized[child.node].matroid = literal;
            }
            stack.push_back(child.node);
        }
    }
    result.tree = DCTree(std::move(normalized));
    return result;
}

std::string refinement_to_json(const CommonRefinement& r) {
    json legs = json::array();
    for (std::size_t i = 0; i < r.covering.legs().size(); ++i) {
        const auto cls = r.covering.legs()[i].source().indecomposable_class();
        legs.push_back(json{{"class", {{"loops", cls.loops}, {"coloops", cls.coloops}}},
                            {"into_first", r.into_first[i].through},
                            {"into_second", r.into_second[i].through}});
    }
    return json{{"witness", parse_json(dctree_to_json(r.covering.witness()))},
                {"legs", std::move(legs)}}
               .dump(2) +
           "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string dctree_to_dot(const DCTree& t) {
    std::ostringstream out;
    out << "digraph dctree {\n";
    for (std::size_t id = 0; id < t.size(); ++id) {
        const Matroid& m = t.matroid_at(id);
        std::string label = "n=" + std::to_string(m.size()) + " r=" + std::to_string(m.rank());
        if (m.is_indecomposable()) {
            const auto cls = m.indecomposable_class();
            label += " (" + std::to_string(cls.loops) + "," + std::to_string(cls.coloops) + ")";
        }
        out << "  n" << id << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (std::size_t id = 0; id < t.size(); ++id) {
        for (const auto& child : t.node(id).children) {
            std::string label = "=";
            if (child.link.op == MinorOp::Delete) label = "\\\\" + child.link.element;
            if (child.link.op == MinorOp::Contract) label = "/" + child.link.element;
            out << "  n" << id << " -> n" << child.node << " [label=\"" << dot_escape(label)
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

Multigraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::string label, u, v, extra;
        if (!(tokens >> label)) continue;  // blank line
        if (label.front() == '#') continue;
        if (!(tokens >> u >> v) || (tokens >> extra)) {
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected \"label u v\"");
        }
        edges.push_back({std::move(label), std::move(u), std::move(v)});
    }
    return Multigraph::from_edges(std::move(edges));
}

std::string graph_to_text(const Multigraph& g) {
    std::ostringstream out;
    out << "# " << g.vertices().size() << " vertices, " << g.edges().size() << " edges\n";
    for (const auto& e : g.edges()) out << e.label << " " << e.u << " " << e.v << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Matroid load_matroid(const std::string& path, InputKind kind) {
    if (kind == InputKind::Auto) {
        kind = ends_with(path, ".graph") ? InputKind::GraphFile : InputKind::MatroidFile;
    }
    if (kind == InputKind::GraphFile) return graphic_matroid(load_graph(path));
    return matroid_from_json(read_file(path));
}

Multigraph load_graph(const std::string& path) { return graph_from_text(read_file(path)); }

LoadedTree load_dctree(const std::string& path) { return dctree_from_json(read_file(path)); }

}  // namespace tuttecover
