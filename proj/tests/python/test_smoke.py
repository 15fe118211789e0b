"""Smoke tests for the python bindings: one pass over each main operation."""

import pytest

import platknot as pk


def test_braid_and_permutation():
    word = pk.BraidWord(4, [1, 2, 3])
    assert word.strand_count == 4
    assert word.letters == [1, 2, 3]
    assert len(word) == 3

    pi = pk.induced_permutation(word)
    assert pi == pk.Permutation([4, 1, 2, 3])
    assert pi(1) == 4
    assert pi.then(pi.inverse()).is_identity()
    assert pi.cycle_count() == 1

    cancelled = pk.compose_words(word, pk.invert_word(word))
    assert pk.induced_permutation(cancelled).is_identity()


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError):
        pk.BraidWord(3, [])
    with pytest.raises(pk.DomainError):
        pk.BraidWord(4, [9])
    with pytest.raises(pk.ParseError):
        pk.parse_document("plat 4\nword what\n")


def test_trace_and_linking():
    hopf = pk.PlatPresentation(pk.BraidWord(4, [2, 2]))
    trace = pk.trace_components(hopf)
    assert trace.mu == 2
    assert trace.top_arc_count == [1, 1]
    assert trace.component_of_top_arc == [1, 2]
    assert pk.is_special(hopf)

    matrix = pk.linking_matrix(hopf, trace)
    assert abs(matrix.linking(1, 2)) == 1

    data = pk.decomposition_data(hopf)
    assert data.bridge_count == 2
    assert data.gluing_word == hopf.braid


def test_normalization():
    plat = pk.PlatPresentation(pk.BraidWord(4, [1]))
    result = pk.normalize_to_special(plat)
    assert [repr(m) for m in result.moves] == ["II'@1"]
    assert result.plat.braid.letters == [1, 1]
    assert pk.is_special(result.plat)
    assert pk.apply_moves(plat, result.moves) == result.plat

    again = pk.normalize_to_special(result.plat)
    assert again.moves == []
    assert again.plat == result.plat


def test_coverings():
    spec = pk.CoveringSpec(5, [7, -2])
    assert spec.coefficients == [2, 3]
    assert pk.classify(spec) == pk.CoveringClass.AlmostStrictlyCyclic

    reoriented = pk.reorient_to_strict(spec)
    assert reoriented.spec == pk.CoveringSpec(5, [2, 2])
    assert reoriented.flipped_components == [2]

    assert pk.classify(pk.unit_multiply(spec, 3)) == pk.classify(spec)
    assert pk.monodromy_permutation(pk.CoveringSpec(4, [1, 2]), 2) == pk.Permutation(
        [3, 4, 1, 2]
    )
    assert pk.preimage_component_count(6, 2) == 2
    assert pk.heegaard_genus_bound(2, pk.CoveringSpec(5, [2, 2])) == 4
    assert pk.bridge_from_genus(4, 5) == 2
    assert pk.symmetry_exponent_ok(4, 5)
    assert not pk.symmetry_exponent_ok(2, 5)

    with pytest.raises(pk.DomainError):
        pk.CoveringSpec(6, [2, 4])


def test_documents_and_commands():
    doc = pk.parse_document("plat 4\nword 2 2\ncovering 5 2 2\n")
    assert doc.plat.strand_count == 4
    assert doc.covering.degree == 5
    assert pk.emit_document(doc) == "plat 4\nword 2 2\ncovering 5 2 2\n"

    assert (
        pk.run_command("trace", doc)
        == "mu=2; n=[1,1]; top arcs: [1,2]; bottom arcs: [1,2]\n"
    )
    assert pk.run_command("genus", doc) == "g ≤ (2-1)(5-1) = 4\n"

    options = pk.CommandOptions()
    options.format = pk.OutputFormat.Structured
    assert pk.run_command("genus", doc, options) == "genus_bound: 4\np: 5\n"

    ascii_art = pk.render_ascii(doc.plat)
    assert ascii_art.startswith(" ___     ___\n")
    svg = pk.render_svg(doc.plat)
    assert svg.startswith("<svg xmlns=") and svg.endswith("</svg>\n")
