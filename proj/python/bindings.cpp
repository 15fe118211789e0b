#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "platknot/braid.hpp"
#include "platknot/commands.hpp"
#include "platknot/covering.hpp"
#include "platknot/document.hpp"
#include "platknot/errors.hpp"
#include "platknot/moves.hpp"
#include "platknot/plat.hpp"
#include "platknot/render.hpp"

namespace py = pybind11;
using namespace platknot;

PYBIND11_MODULE(_platknot, m) {
    m.doc() = "Plat presentations of links: braid words, component tracing, "
              "normalization to special form, and cyclic branched covering "
              "classification";
    m.attr("__version__") = "0.1.0";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    // ---- braids ----------------------------------------------------------

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("images"))
        .def_static("identity", &Permutation::identity, py::arg("degree"))
        .def_property_readonly("degree", &Permutation::degree)
        .def("__call__", &Permutation::operator(), py::arg("k"))
        .def_property_readonly("images", &Permutation::images)
        .def("then", &Permutation::then, py::arg("next"))
        .def("inverse", &Permutation::inverse)
        .def("is_identity", &Permutation::is_identity)
        .def("cycle_count", &Permutation::cycle_count)
        .def(py::self == py::self)
        .def("__repr__", [](const Permutation& p) {
            std::string out = "Permutation([";
            const auto& images = p.images();
            for (std::size_t i = 0; i < images.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(images[i]);
            }
            return out + "])";
        });

    py::class_<BraidWord>(m, "BraidWord")
        .def(py::init<int, std::vector<int>>(), py::arg("strand_count"), py::arg("letters"))
        .def_property_readonly("strand_count", &BraidWord::strand_count)
        .def_property_readonly("letters", &BraidWord::letters)
        .def("__len__", &BraidWord::length)
        .def(py::self == py::self)
        .def("__repr__", [](const BraidWord& w) {
            std::string out = "BraidWord(" + std::to_string(w.strand_count()) + ", [";
            const auto& letters = w.letters();
            for (std::size_t i = 0; i < letters.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(letters[i]);
            }
            return out + "])";
        });

    m.def("induced_permutation", &induced_permutation, py::arg("word"));
    m.def("compose_words", &compose_words, py::arg("w1"), py::arg("w2"));
    m.def("invert_word", &invert_word, py::arg("word"));

    // ---- plats -----------------------------------------------------------

    py::class_<PlatPresentation>(m, "PlatPresentation")
        .def(py::init<BraidWord>(), py::arg("braid"))
        .def_property_readonly("braid", &PlatPresentation::braid)
        .def_property_readonly("strand_count", &PlatPresentation::strand_count)
        .def_property_readonly("bridge_count", &PlatPresentation::bridge_count)
        .def(py::self == py::self)
        .def("__repr__", [](const PlatPresentation& plat) {
            std::string out =
                "PlatPresentation(BraidWord(" + std::to_string(plat.strand_count()) + ", [";
            const auto& letters = plat.braid().letters();
            for (std::size_t i = 0; i < letters.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(letters[i]);
            }
            return out + "]))";
        });

    py::enum_<ArcDirection>(m, "ArcDirection")
        .value("AtoB", ArcDirection::AtoB)
        .value("BtoA", ArcDirection::BtoA);

    py::enum_<StrandDirection>(m, "StrandDirection")
        .value("Down", StrandDirection::Down)
        .value("Up", StrandDirection::Up);

    py::class_<LinkTrace>(m, "LinkTrace")
        .def_readonly("mu", &LinkTrace::mu)
        .def_readonly("component_of_top_arc", &LinkTrace::component_of_top_arc)
        .def_readonly("component_of_bottom_arc", &LinkTrace::component_of_bottom_arc)
        .def_readonly("top_arc_count", &LinkTrace::top_arc_count)
        .def_readonly("top_arc_direction", &LinkTrace::top_arc_direction)
        .def_readonly("bottom_arc_direction", &LinkTrace::bottom_arc_direction)
        .def_readonly("strand_direction", &LinkTrace::strand_direction)
        .def("component_of_strand", &LinkTrace::component_of_strand, py::arg("top_position"))
        .def(py::self == py::self);

    py::class_<LinkingMatrix>(m, "LinkingMatrix")
        .def_readonly("mu", &LinkingMatrix::mu)
        .def_readonly("entries", &LinkingMatrix::entries)
        .def("linking", &LinkingMatrix::linking, py::arg("j"), py::arg("k"))
        .def(py::self == py::self);

    py::class_<DecompositionData>(m, "DecompositionData")
        .def_readonly("bridge_count", &DecompositionData::bridge_count)
        .def_readonly("gluing_word", &DecompositionData::gluing_word)
        .def(py::self == py::self);

    m.def("trace_components", &trace_components, py::arg("plat"));
    m.def("is_condition_1", &is_condition_1, py::arg("plat"), py::arg("trace"));
    m.def("is_condition_2", &is_condition_2, py::arg("plat"));
    m.def("is_condition_2prime", &is_condition_2prime, py::arg("plat"), py::arg("trace"));
    m.def("is_special", py::overload_cast<const PlatPresentation&>(&is_special),
          py::arg("plat"));
    m.def("linking_matrix", &linking_matrix, py::arg("plat"), py::arg("trace"));
    m.def("decomposition_data", &decomposition_data, py::arg("plat"));

    // ---- moves -----------------------------------------------------------

    py::enum_<MoveKind>(m, "MoveKind")
        .value("I", MoveKind::I)
        .value("IPrime", MoveKind::IPrime)
        .value("II", MoveKind::II)
        .value("IIPrime", MoveKind::IIPrime);

    py::class_<Move>(m, "Move")
        .def(py::init([](MoveKind kind, int position) {
                 return Move{kind, position};
             }),
             py::arg("kind"), py::arg("position"))
        .def_readonly("kind", &Move::kind)
        .def_readonly("position", &Move::position)
        .def("__repr__", [](const Move& move) { return to_string(move); });

    py::class_<NormalizationResult>(m, "NormalizationResult")
        .def_readonly("plat", &NormalizationResult::plat)
        .def_readonly("moves", &NormalizationResult::moves);

    m.def("apply_move", &apply_move, py::arg("plat"), py::arg("move"));
    m.def("apply_moves", &apply_moves, py::arg("plat"), py::arg("moves"));
    m.def("normalize_to_special", &normalize_to_special, py::arg("plat"));

    // ---- coverings -------------------------------------------------------

    py::enum_<CoveringClass>(m, "CoveringClass")
        .value("StrictlyCyclic", CoveringClass::StrictlyCyclic)
        .value("AlmostStrictlyCyclic", CoveringClass::AlmostStrictlyCyclic)
        .value("MeridianCyclic", CoveringClass::MeridianCyclic)
        .value("SinglyCyclic", CoveringClass::SinglyCyclic)
        .value("MonodromyCyclic", CoveringClass::MonodromyCyclic);

    py::class_<CoveringSpec>(m, "CoveringSpec")
        .def(py::init<int, std::vector<int>>(), py::arg("degree"), py::arg("coefficients"))
        .def_property_readonly("degree", &CoveringSpec::degree)
        .def_property_readonly("coefficients", &CoveringSpec::coefficients)
        .def_property_readonly("component_count", &CoveringSpec::component_count)
        .def("coefficient", &CoveringSpec::coefficient, py::arg("j"))
        .def(py::self == py::self)
        .def("__repr__", [](const CoveringSpec& spec) {
            std::string out = "CoveringSpec(" + std::to_string(spec.degree()) + ", [";
            const auto& cs = spec.coefficients();
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(cs[i]);
            }
            return out + "])";
        });

    py::class_<ReorientResult>(m, "ReorientResult")
        .def_readonly("spec", &ReorientResult::spec)
        .def_readonly("flipped_components", &ReorientResult::flipped_components);

    m.def("classify", &classify, py::arg("spec"));
    m.def("satisfies", &satisfies, py::arg("spec"), py::arg("cls"));
    m.def("classes_satisfied", &classes_satisfied, py::arg("spec"));
    m.def("unit_multiply", &unit_multiply, py::arg("spec"), py::arg("unit"));
    m.def("reorient_to_strict", &reorient_to_strict, py::arg("spec"));
    m.def("cycle_power", &cycle_power, py::arg("p"), py::arg("c"));
    m.def("monodromy_permutation", &monodromy_permutation, py::arg("spec"), py::arg("j"));
    m.def("preimage_component_count",
          py::overload_cast<int, int>(&preimage_component_count), py::arg("p"), py::arg("c"));
    m.def("preimage_component_count",
          py::overload_cast<const CoveringSpec&, int>(&preimage_component_count),
          py::arg("spec"), py::arg("j"));
    m.def("heegaard_genus_bound", &heegaard_genus_bound, py::arg("bridge_count"),
          py::arg("spec"));
    m.def("bridge_from_genus", &bridge_from_genus, py::arg("genus"), py::arg("p"));
    m.def("symmetry_exponent_ok", &symmetry_exponent_ok, py::arg("p0"), py::arg("p"));

    // ---- documents, commands, rendering ----------------------------------

    py::class_<Document>(m, "Document")
        .def(py::init<>())
        .def_readwrite("plat", &Document::plat)
        .def_readwrite("covering", &Document::covering);

    m.def("parse_document", &parse_document, py::arg("text"));
    m.def("emit_document", &emit_document, py::arg("doc"));

    py::enum_<OutputFormat>(m, "OutputFormat")
        .value("Text", OutputFormat::Text)
        .value("Structured", OutputFormat::Structured);

    py::class_<CommandOptions>(m, "CommandOptions")
        .def(py::init<>())
        .def_readwrite("format", &CommandOptions::format)
        .def_readwrite("svg", &CommandOptions::svg)
        .def_readwrite("emit_normalized", &CommandOptions::emit_normalized);

    m.def("run_command", &run_command, py::arg("command"), py::arg("doc"),
          py::arg("options") = CommandOptions{});

    m.def("render_ascii", &render_ascii, py::arg("plat"));
    m.def("render_svg", &render_svg, py::arg("plat"));
}
