#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tuttecover/covering.hpp"
#include "tuttecover/io.hpp"
#include "tuttecover/isomorphism.hpp"
#include "tuttecover/kzero.hpp"
#include "tuttecover/multigraph.hpp"
#include "tuttecover/tutte.hpp"

namespace py = pybind11;
using namespace tuttecover;

namespace {

py::int_ py_bigint(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

PivotStrategy strategy_from(const std::string& name, std::uint64_t seed) {
    if (name == "min-index") return PivotStrategy::min_index();
    if (name == "max-index") return PivotStrategy::max_index();
    if (name == "random") return PivotStrategy::seeded(seed);
    throw InvalidParameters("unknown strategy \"" + name + "\"");
}

py::dict poly_terms(const TuttePolynomial& p) {
    py::dict out;
    for (const auto& [key, c] : p.terms()) {
        out[py::make_tuple(key.first, key.second)] = py_bigint(c);
    }
    return out;
}

KZeroElement k0_from_dict(const py::dict& d) {
    KZeroElement out;
    for (const auto& item : d) {
        const auto key = item.first.cast<std::pair<std::size_t, std::size_t>>();
        out.add({key.first, key.second}, item.second.cast<long long>());
    }
    return out;
}

py::dict k0_to_dict(const KZeroElement& a) {
    py::dict out;
    for (const auto& [cls, coeff] : a.coefficients()) {
        out[py::make_tuple(cls.loops, cls.coloops)] = coeff;
    }
    return out;
}

Multigraph graph_from_triples(
    const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    std::vector<Edge> parsed;
    parsed.reserve(edges.size());
    for (const auto& [label, u, v] : edges) parsed.push_back({label, u, v});
    return Multigraph::from_edges(std::move(parsed));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact matroid minors, Tutte polynomials, and K0 classes";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapacityExceeded>(m, "CapacityExceeded", PyExc_OverflowError);
    static py::exception<Error> base_error(m, "MatroidError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError&) {
            throw;  // handled by the dedicated translator
        } catch (const CapacityExceeded&) {
            throw;
        } catch (const Error& e) {
            PyErr_SetString(base_error.ptr(), e.what());
        }
    });

    py::class_<TuttePolynomial>(m, "TuttePolynomial")
        .def("terms", &poly_terms, "Dict mapping (x_exp, y_exp) to coefficient")
        .def(
            "evaluate",
            [](const TuttePolynomial& p, long long x, long long y) {
                const BigRational v = p.evaluate(BigRational(x), BigRational(y));
                return py_bigint(numerator(v));  // integer arguments give integers
            },
            py::arg("x"), py::arg("y"))
        .def("__eq__", [](const TuttePolynomial& a, const TuttePolynomial& b) { return a == b; })
        .def("__str__", &TuttePolynomial::to_string)
        .def("__repr__", [](const TuttePolynomial& p) {
            return "TuttePolynomial(" + p.to_string() + ")";
        });

    py::class_<Matroid>(m, "Matroid")
        .def_static(
            "from_bases",
            [](const std::vector<std::string>& ground,
               const std::vector<std::vector<std::string>>& bases) {
                return Matroid::from_bases(GroundSet(ground), bases);
            },
            py::arg("ground"), py::arg("bases"))
        .def_static(
            "from_independent_sets",
            [](const std::vector<std::string>& ground,
               const std::vector<std::vector<std::string>>& family) {
                return Matroid::from_independent_sets(GroundSet(ground), family);
            },
            py::arg("ground"), py::arg("independent"))
        .def_static("uniform", &Matroid::uniform, py::arg("k"), py::arg("n"))
        .def_static("empty", &Matroid::empty)
        .def_property_readonly("labels",
                               [](const Matroid& m) { return m.ground().labels(); })
        .def_property_readonly("rank", &Matroid::rank)
        .def_property_readonly("size", &Matroid::size)
        .def("bases",
             [](const Matroid& m) {
                 std::vector<std::vector<std::string>> out;
                 for (Mask b : m.bases()) out.push_back(m.ground().labels_of(b));
                 return out;
             })
        .def("is_independent",
             py::overload_cast<const std::vector<std::string>&>(&Matroid::is_independent,
                                                                py::const_),
             py::arg("subset"))
        .def("rank_of",
             py::overload_cast<const std::vector<std::string>&>(&Matroid::rank_of,
                                                                py::const_),
             py::arg("subset"))
        .def(
            "classify",
            [](const Matroid& m, const std::string& label) {
                return to_string(m.classify(label));
            },
            py::arg("element"))
        .def("is_indecomposable", &Matroid::is_indecomposable)
        .def("indecomposable_class",
             [](const Matroid& m) {
                 const auto cls = m.indecomposable_class();
                 return py::make_tuple(cls.loops, cls.coloops);
             })
        .def("dual", &Matroid::dual)
        .def("deletion",
             py::overload_cast<const std::vector<std::string>&>(&Matroid::deletion,
                                                                py::const_),
             py::arg("elements"))
        .def("contraction",
             py::overload_cast<const std::vector<std::string>&>(&Matroid::contraction,
                                                                py::const_),
             py::arg("elements"))
        .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
        .def("__repr__", [](const Matroid& m) {
            return "Matroid(n=" + std::to_string(m.size()) + ", r=" +
                   std::to_string(m.rank()) + ", bases=" + std::to_string(m.bases().size()) +
                   ")";
        });

    m.def("direct_sum", &direct_sum, py::arg("left"), py::arg("right"));
    m.def(
        "graphic_matroid",
        [](const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
            return graphic_matroid(graph_from_triples(edges));
        },
        py::arg("edges"), "Matroid of cycle-free edge subsets; edges are (label, u, v)");

    m.def("tutte_direct", &tutte_direct, py::arg("matroid"));
    m.def(
        "tutte_dc",
        [](const Matroid& m, const std::string& strategy, std::uint64_t seed, bool memo) {
            return tutte_dc(m, strategy_from(strategy, seed),
                            memo ? MemoPolicy::Exact : MemoPolicy::None);
        },
        py::arg("matroid"), py::arg("strategy") = "min-index", py::arg("seed") = 0,
        py::arg("memo") = true);

    m.def(
        "are_isomorphic",
        [](const Matroid& a, const Matroid& b) -> py::object {
            const auto iso = are_isomorphic(a, b);
            if (!iso) return py::none();
            py::dict out;
            for (const auto& label : a.ground().labels()) {
                out[py::str(label)] = iso->image_label(label);
            }
            return out;
        },
        py::arg("a"), py::arg("b"),
        "A witnessing label bijection, or None");
    m.def(
        "automorphism_count",
        [](const Matroid& m, std::size_t bound) {
            return py_bigint(automorphism_count(m, bound));
        },
        py::arg("matroid"), py::arg("bound") = 8);

    m.def(
        "k0_class", [](const Matroid& m) { return k0_to_dict(k0_class(m)); },
        py::arg("matroid"), "Dict mapping (loops, coloops) to multiplicity");
    m.def(
        "k0_convolve",
        [](const py::dict& a, const py::dict& b) {
            return k0_to_dict(k0_convolve(k0_from_dict(a), k0_from_dict(b)));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "duality_involution",
        [](const py::dict& a) { return k0_to_dict(duality_involution(k0_from_dict(a))); },
        py::arg("a"));
    m.def(
        "tutte_from_class",
        [](const py::dict& a) { return tutte_from_class(k0_from_dict(a)); }, py::arg("a"));

    m.def(
        "leaf_classes",
        [](const Matroid& m, const std::string& strategy, std::uint64_t seed) {
            py::dict out;
            const auto multiset =
                leaf_class_multiset(indecomposable_covering(m, strategy_from(strategy, seed)));
            for (const auto& [cls, count] : multiset) {
                out[py::make_tuple(cls.loops, cls.coloops)] = count;
            }
            return out;
        },
        py::arg("matroid"), py::arg("strategy") = "min-index", py::arg("seed") = 0,
        "Leaf class multiset of the indecomposable covering");

    m.def("matroid_to_json", &matroid_to_json, py::arg("matroid"));
    m.def("matroid_from_json", &matroid_from_json, py::arg("text"));
}
