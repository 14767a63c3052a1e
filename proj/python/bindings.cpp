#include "fatdelta/error.hpp"
#include "fatdelta/faces.hpp"
#include "fatdelta/factorize.hpp"
#include "fatdelta/literals.hpp"
#include "fatdelta/oracle.hpp"
#include "fatdelta/relations.hpp"
#include "fatdelta/render.hpp"
#include "fatdelta/rewrite.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fatdelta;

namespace {

RenderFormat format_of(const std::string& name)
{
    const std::optional<RenderFormat> f = parse_render_format(name);
    if (!f) {
        throw Error("unknown render format '" + name + "' (expected dot or tikz)");
    }
    return *f;
}

Word word_of(const py::object& w)
{
    if (py::isinstance<py::str>(w)) {
        return parse_word(w.cast<std::string>());
    }
    return w.cast<Word>();
}

py::dict rule_report(const RuleReport& r)
{
    py::dict d;
    d["rule"] = to_string(r.rule);
    d["instances"] = r.instances;
    d["failures"] = r.failures;
    return d;
}

} // namespace

PYBIND11_MODULE(_fatdelta, m)
{
    m.doc() = "Fat simplex category: objects, morphisms, words and normal forms";

    py::register_exception<Error>(m, "FatDeltaError", PyExc_ValueError);

    py::class_<MonotoneMap>(m, "MonotoneMap")
        .def(py::init<int, int, std::vector<int>>(), py::arg("dom_size"), py::arg("cod_size"), py::arg("images"))
        .def_static("parse", &parse_map)
        .def_static("identity", &MonotoneMap::identity)
        .def_property_readonly("dom_size", &MonotoneMap::dom_size)
        .def_property_readonly("cod_size", &MonotoneMap::cod_size)
        .def_property_readonly("images", &MonotoneMap::images)
        .def("is_mono", &MonotoneMap::is_mono)
        .def("is_epi", &MonotoneMap::is_epi)
        .def("is_identity", &MonotoneMap::is_identity)
        .def("__call__", &MonotoneMap::operator())
        .def("__matmul__", [](const MonotoneMap& g, const MonotoneMap& f) { return compose_maps(g, f); })
        .def(py::self == py::self)
        .def("__hash__", [](const MonotoneMap& f) { return py::hash(py::str(to_string(f))); })
        .def("__str__", [](const MonotoneMap& f) { return to_string(f); })
        .def("__repr__", [](const MonotoneMap& f) { return "MonotoneMap('" + to_string(f) + "')"; });

    py::class_<FatObject>(m, "FatObject")
        .def(py::init([](const std::string& text) { return parse_object(text); }), py::arg("text") = "")
        .def_static("from_fibres", [](const std::vector<int>& sizes) { return FatObject::from_fibres(sizes); })
        .def_static("empty", &FatObject::empty)
        .def_property_readonly("m", &FatObject::m)
        .def_property_readonly("n", &FatObject::n)
        .def_property_readonly("eta", &FatObject::eta)
        .def_property_readonly("fibre_sizes", &FatObject::fibre_sizes)
        .def_property_readonly("edges", [](const FatObject& o) { return format_object(o); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const FatObject& o) { return py::hash(py::str(format_object(o))); })
        .def("__str__", [](const FatObject& o) { return format_object(o); })
        .def("__repr__", [](const FatObject& o) { return "FatObject('" + format_object(o) + "')"; });

    py::class_<FatMorphism>(m, "FatMorphism")
        .def(py::init([](const FatObject& dom, const FatObject& cod, std::vector<int> top, std::vector<int> bot) {
                 const MonotoneMap t(dom.m(), cod.m(), std::move(top));
                 const MonotoneMap b(dom.n(), cod.n(), std::move(bot));
                 return FatMorphism(dom, cod, t, b);
             }),
             py::arg("dom"), py::arg("cod"), py::arg("top"), py::arg("bot"))
        .def_static("parse", &parse_morphism, py::arg("json"))
        .def_static("identity", &FatMorphism::identity)
        .def_property_readonly("dom", &FatMorphism::dom)
        .def_property_readonly("cod", &FatMorphism::cod)
        .def_property_readonly("top", &FatMorphism::top)
        .def_property_readonly("bot", &FatMorphism::bot)
        .def_property_readonly("classes", [](const FatMorphism& f) {
            const unsigned c = class_of(f);
            std::vector<std::string> out;
            if (c & Diagonal) {
                out.emplace_back("D");
            }
            if (c & Vertical) {
                out.emplace_back("V");
            }
            if (c & Horizontal) {
                out.emplace_back("H");
            }
            return out;
        })
        .def("__matmul__", [](const FatMorphism& g, const FatMorphism& f) { return compose(g, f); })
        .def(py::self == py::self)
        .def("__hash__", [](const FatMorphism& f) { return py::hash(py::str(format_morphism(f))); })
        .def("__str__", &format_morphism)
        .def("__repr__", [](const FatMorphism& f) { return "FatMorphism.parse('" + format_morphism(f) + "')"; });

    py::class_<Letter>(m, "Letter")
        .def(py::init([](const std::string& text) { return parse_letter(text); }))
        .def_static("d", &Letter::d)
        .def_static("s", &Letter::s)
        .def_static("v", &Letter::v)
        .def_static("b", &Letter::b)
        .def_readonly("index", &Letter::index)
        .def_readonly("eps", &Letter::eps)
        .def("step", [](const Letter& l, const FatObject& o) { return step(o, l); })
        .def(py::self == py::self)
        .def("__hash__", [](const Letter& l) { return py::hash(py::str(to_string(l))); })
        .def("__str__", [](const Letter& l) { return to_string(l); })
        .def("__repr__", [](const Letter& l) { return "Letter('" + to_string(l) + "')"; });

    py::class_<Word>(m, "Word")
        .def(py::init([](const FatObject& anchor, std::vector<Letter> letters) {
                 return Word{anchor, std::move(letters)};
             }),
             py::arg("anchor"), py::arg("letters"))
        .def_static("parse", &parse_word)
        .def_readonly("anchor", &Word::anchor)
        .def_readonly("letters", &Word::letters)
        .def("eval", &eval_word)
        .def(py::self == py::self)
        .def("__str__", [](const Word& w) { return to_string(w); })
        .def("__repr__", [](const Word& w) { return "Word.parse('" + to_string(w) + "')"; });

    py::class_<NormalForm>(m, "NormalForm")
        .def_readonly("anchor", &NormalForm::anchor)
        .def_readonly("sigma", &NormalForm::sigma)
        .def_readonly("phi", &NormalForm::phi)
        .def_readonly("nu", &NormalForm::nu)
        .def_readonly("delta", &NormalForm::delta)
        .def_readonly("psi", &NormalForm::psi)
        .def_readonly("tau", &NormalForm::tau)
        .def_property_readonly("word", &NormalForm::word)
        .def("eval", [](const NormalForm& nf) { return eval(nf); })
        .def(py::self == py::self)
        .def("__str__", [](const NormalForm& nf) { return to_string(nf); })
        .def("__repr__", [](const NormalForm& nf) { return "<NormalForm " + to_string(nf.word()) + ">"; });

    m.def("factor", &factor_full, py::arg("f"), "Normal form of a morphism");
    m.def("ternary", [](const FatMorphism& f) {
        const Ternary t = ternary_factor(f);
        return py::make_tuple(t.d, t.v, t.h);
    }, py::arg("f"), "(diagonal, vertical, horizontal) with f = h @ v @ d");
    m.def("normalize", [](const py::object& w) { return normalize_word(word_of(w)); }, py::arg("word"));
    m.def("words_equal", [](const py::object& a, const py::object& b) { return words_equal(word_of(a), word_of(b)); },
          py::arg("a"), py::arg("b"));
    m.def("hom", [](const FatObject& a, const FatObject& b) { return enum_hom(a, b).morphisms; }, py::arg("dom"),
          py::arg("cod"));
    m.def("objects", &enum_objects, py::arg("m"));
    m.def("check_relations", [](int max_m) {
        py::list out;
        for (const RuleReport& r : check_all(max_m)) {
            out.append(rule_report(r));
        }
        return out;
    }, py::arg("max_size"));
    m.def("audit", [](int max_m, int max_word) {
        AuditOptions o;
        o.max_m = max_m;
        o.max_word = max_word;
        return audit(o).to_json();
    }, py::arg("max_size") = 3, py::arg("max_word") = 3, "Audit report as JSON text");
    m.def("render", [](const FatMorphism& f, const std::string& fmt) { return render(f, format_of(fmt)); },
          py::arg("f"), py::arg("format") = "dot");
    m.def("render", [](const NormalForm& nf, const std::string& fmt) { return render(nf, format_of(fmt)); },
          py::arg("nf"), py::arg("format") = "dot");
}
