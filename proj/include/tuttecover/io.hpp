#pragma once

#include <string>
#include <vector>

#include "tuttecover/dctree.hpp"
#include "tuttecover/kzero.hpp"
#include "tuttecover/multigraph.hpp"
#include "tuttecover/tutte.hpp"

namespace tuttecover {

/// Serialized forms. JSON text in, JSON text out; the underlying
/// library never leaks through the interface.

/// {"ground": [labels], "bases": [[labels], ...]}
std::string matroid_to_json(const Matroid& m);
/// Accepts "bases" or "independent" (exactly one); errors name the key.
Matroid matroid_from_json(const std::string& text);

/// {"terms": [{"x": 2, "y": 0, "c": "1"}, ...]}, ascending (x, y).
std::string polynomial_to_json(const TuttePolynomial& p);
TuttePolynomial polynomial_from_json(const std::string& text);

/// {"classes": [{"loops": m, "coloops": n, "coeff": c}, ...]}, sorted.
std::string k0_to_json(const KZeroElement& a);
KZeroElement k0_from_json(const std::string& text);

/// {"matroids": [...], "nodes": [{"id", "matroid", "children"}, ...]}
/// with node matroids stored once and referenced by index.
std::string dctree_to_json(const DCTree& t);

struct LoadedTree {
    DCTree tree;
    /// Nodes whose matroids arrived as relabelings and were replaced by
    /// the literal minors during normalization.
    std::vector<std::string> notes;
};
LoadedTree dctree_from_json(const std::string& text);

/// Edges annotated "\\e" (delete), "/e" (contract), "=" (pass).
std::string dctree_to_dot(const DCTree& t);

/// {"witness": tree, "legs": [{"class", "into_first", "into_second"}]}
std::string refinement_to_json(const CommonRefinement& r);

/// One edge per line: "label u v" ("label u u" is a loop). Lines
/// starting with '#' are comments.
Multigraph graph_from_text(const std::string& text);
std::string graph_to_text(const Multigraph& g);

enum class InputKind { Auto, MatroidFile, GraphFile };

/// Reads a matroid from disk. Auto keys on the extension: ".graph" is
/// edge-list text (loaded through the graphic matroid), anything else
/// is matroid JSON.
Matroid load_matroid(const std::string& path, InputKind kind = InputKind::Auto);
Multigraph load_graph(const std::string& path);
LoadedTree load_dctree(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace tuttecover
