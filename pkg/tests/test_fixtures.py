"""Fixture grammar: parsing, canonical serialization, realization."""

import pytest

from grouplab.corpus import corpus_fixture, corpus_text
from grouplab.errors import (
    DuplicateName,
    FixtureSyntaxError,
    MalformedSpec,
    UnresolvedReference,
)
from grouplab.fixtures import (
    CheckRequest,
    parse_fixture,
    realize_automorphism,
    realize_automorphisms,
    realize_groups,
    serialize_fixture,
    word_element,
)
from grouplab.groups import PcPresentation, PermutationGenSet, build_group

C2_TEXT = """\
group C2
backend pc
prime 2
ngens 1
end
"""

D8_TEXT = """\
group D8
backend pc
prime 2
ngens 3
pow 2 = 3^1
comm 2 1 = 3^1
end
"""

S3_TEXT = """\
group S3
backend perm
degree 3
gen a = (1 2 3)
gen b = (1 2)
end
"""


# -- parsing happy paths --------------------------------------------------


def test_minimal_pc_group():
    fx = parse_fixture(C2_TEXT)
    assert len(fx.groups) == 1
    entry = fx.group("C2")
    assert entry.backend == "pc"
    assert isinstance(entry.presentation, PcPresentation)
    assert build_group(entry.presentation).order == 2


def test_pc_group_with_relations():
    fx = parse_fixture(D8_TEXT)
    pres = fx.group("D8").presentation
    assert pres.powers == {2: ((3, 1),)}
    assert pres.commutators == {(2, 1): ((3, 1),)}
    assert build_group(pres).order == 8


def test_perm_group():
    fx = parse_fixture(S3_TEXT)
    pres = fx.group("S3").presentation
    assert isinstance(pres, PermutationGenSet)
    assert pres.degree == 3
    assert [name for name, _ in pres.generators] == ["a", "b"]
    assert build_group(pres).order == 6


def test_comments_and_blank_lines_ignored():
    text = "# header comment\n\ngroup C2  # trailing comment\nbackend pc\n\nprime 2\nngens 1\nend\n"
    fx = parse_fixture(text)
    assert fx.group("C2").backend == "pc"


def test_bare_generator_index_means_exponent_one():
    text = "group G\nbackend pc\nprime 2\nngens 2\npow 1 = 2\nend\n"
    fx = parse_fixture(text)
    assert fx.group("G").presentation.powers == {1: ((2, 1),)}


def test_empty_relation_rhs_is_dropped():
    # "pow 1 =" declares the identity, which the canonical form records by omission
    text = "group G\nbackend pc\nprime 2\nngens 1\npow 1 =\nend\n"
    fx = parse_fixture(text)
    assert fx.group("G").presentation.powers == {}


def test_aut_block_pc():
    text = C2_TEXT + "\naut flip on C2\nimage 1 = 1^1\nend\n"
    fx = parse_fixture(text)
    entry = fx.aut("flip")
    assert entry.group == "C2"
    assert entry.images == ((1, ((1, 1),)),)


def test_aut_block_perm_with_cycles_and_words():
    text = S3_TEXT + "\naut conj on S3\nimage a = (1 3 2)\nimage b = b\nend\n"
    fx = parse_fixture(text)
    entry = fx.aut("conj")
    kinds = [expr[0] for _, expr in entry.images]
    assert kinds == ["cycles", "word"]


def test_action_line_and_trivial_action():
    text = C2_TEXT + "\naut idmap on C2\nimage 1 = 1\nend\naction triv on C2 =\naction one on C2 = idmap\n"
    fx = parse_fixture(text)
    assert fx.action("triv").auts == ()
    assert fx.action("one").auts == ("idmap",)


def test_check_line_params_sorted():
    text = C2_TEXT + "check collection on C2 n=2 budget=50\n"
    fx = parse_fixture(text)
    req = fx.checks[0]
    assert req == CheckRequest("collection", "C2", (("budget", "50"), ("n", "2")))
    assert fx.params_for("collection", "C2") == {"n": "2", "budget": "50"}
    assert fx.params_for("collection", "nope") == {}


# -- parse errors ----------------------------------------------------------


def _line_of(excinfo) -> int:
    return excinfo.value.line


def test_unknown_directive_reports_line():
    with pytest.raises(FixtureSyntaxError) as exc:
        parse_fixture("group G\nbackend pc\nprime 2\nngens 1\nend\nwibble x\n")
    assert _line_of(exc) == 6


def test_backend_must_come_first():
    with pytest.raises(FixtureSyntaxError, match="backend"):
        parse_fixture("group G\nprime 2\nngens 1\nend\n")


def test_bad_word_factor():
    with pytest.raises(FixtureSyntaxError, match="bad word factor"):
        parse_fixture("group G\nbackend pc\nprime 2\nngens 2\npow 1 = x^2\nend\n")


def test_word_indices_must_increase():
    with pytest.raises(FixtureSyntaxError, match="increase"):
        parse_fixture(
            "group G\nbackend pc\nprime 2\nngens 3\npow 1 = 3^1 2^1\nend\n"
        )


def test_unclosed_cycle_reports_column():
    with pytest.raises(FixtureSyntaxError, match="unclosed") as exc:
        parse_fixture("group G\nbackend perm\ndegree 3\ngen a = (1 2 3\nend\n")
    assert exc.value.line == 4


def test_degree_must_come_before_gen():
    with pytest.raises(FixtureSyntaxError, match="degree"):
        parse_fixture("group G\nbackend perm\ngen a = (1 2)\nend\n")


def test_missing_end_in_group_block():
    with pytest.raises(FixtureSyntaxError, match="missing end"):
        parse_fixture("group G\nbackend pc\nprime 2\nngens 1\n")


def test_missing_end_in_aut_block():
    with pytest.raises(FixtureSyntaxError, match="missing end"):
        parse_fixture(C2_TEXT + "aut f on C2\nimage 1 = 1\n")


def test_pc_directive_rejected_in_perm_block():
    with pytest.raises(FixtureSyntaxError, match="not valid"):
        parse_fixture("group G\nbackend perm\ndegree 2\nprime 2\nend\n")


def test_relation_validation_blames_group_header_line():
    # index 0 breaks the presentation constraint; the block opened on line 1
    with pytest.raises(FixtureSyntaxError) as exc:
        parse_fixture("group G\nbackend pc\nprime 2\nngens 1\npow 0 = 1^1\nend\n")
    assert exc.value.line == 1


def test_duplicate_group_name():
    with pytest.raises(DuplicateName):
        parse_fixture(C2_TEXT + C2_TEXT)


def test_names_share_one_namespace_across_kinds():
    text = C2_TEXT + "aut C2 on C2\nimage 1 = 1\nend\n"
    with pytest.raises(DuplicateName):
        parse_fixture(text)


def test_duplicate_pow_line():
    with pytest.raises(DuplicateName):
        parse_fixture(
            "group G\nbackend pc\nprime 2\nngens 2\npow 1 = 2\npow 1 = 2\nend\n"
        )


def test_duplicate_check_pair():
    text = C2_TEXT + "check fitting on C2\ncheck fitting on C2\n"
    with pytest.raises(DuplicateName):
        parse_fixture(text)


def test_same_check_on_two_targets_is_fine():
    text = C2_TEXT + D8_TEXT + "check fitting on C2\ncheck fitting on D8\n"
    assert len(parse_fixture(text).checks) == 2


def test_duplicate_check_param_key():
    with pytest.raises(DuplicateName):
        parse_fixture(C2_TEXT + "check collection on C2 n=1 n=2\n")


def test_aut_on_unknown_group():
    with pytest.raises(UnresolvedReference) as exc:
        parse_fixture("aut f on Ghost\nimage 1 = 1\nend\n")
    assert exc.value.line == 1


def test_aut_image_index_out_of_range():
    with pytest.raises(UnresolvedReference):
        parse_fixture(C2_TEXT + "aut f on C2\nimage 2 = 1\nend\n")


def test_aut_must_cover_every_generator():
    text = D8_TEXT + "aut f on D8\nimage 1 = 1\nend\n"
    with pytest.raises(FixtureSyntaxError, match="missing image"):
        parse_fixture(text)


def test_perm_aut_unknown_generator_name():
    with pytest.raises(UnresolvedReference):
        parse_fixture(S3_TEXT + "aut f on S3\nimage z = (1 2)\nend\n")


def test_action_with_unknown_aut():
    with pytest.raises(UnresolvedReference):
        parse_fixture(C2_TEXT + "action x on C2 = ghost\n")


def test_action_aut_group_mismatch():
    text = C2_TEXT + D8_TEXT + "aut f on C2\nimage 1 = 1\nend\naction x on D8 = f\n"
    with pytest.raises(UnresolvedReference, match="acts on"):
        parse_fixture(text)


def test_check_on_unknown_target():
    with pytest.raises(UnresolvedReference):
        parse_fixture(C2_TEXT + "check fitting on Ghost\n")


def test_lookup_failures():
    fx = parse_fixture(C2_TEXT)
    with pytest.raises(UnresolvedReference):
        fx.group("nope")
    with pytest.raises(UnresolvedReference):
        fx.aut("nope")
    with pytest.raises(UnresolvedReference):
        fx.action("nope")


# -- canonical serialization ----------------------------------------------


def test_round_trip_on_bundled_corpus():
    fx = corpus_fixture()
    text = serialize_fixture(fx)
    again = parse_fixture(text)
    assert again == fx
    assert serialize_fixture(again) == text


def test_round_trip_normalizes_noise():
    noisy = "# noise\ngroup G\nbackend pc\nprime 2\nngens 2\npow 1 = 2\nend\n"
    fx = parse_fixture(noisy)
    canonical = serialize_fixture(fx)
    assert "pow 1 = 2^1" in canonical
    assert "#" not in canonical
    assert parse_fixture(canonical) == fx


def test_serializer_emits_cycles_for_perm_groups():
    fx = parse_fixture(S3_TEXT)
    text = serialize_fixture(fx)
    assert "gen a = (1 2 3)" in text
    assert "gen b = (1 2)" in text


def test_bundled_corpus_matches_its_own_text():
    # comments aside, the shipped file and its canonical form describe
    # the same fixtures
    assert parse_fixture(corpus_text()) == corpus_fixture()
    canonical = serialize_fixture(corpus_fixture())
    assert "#" not in canonical
    assert parse_fixture(canonical) == corpus_fixture()


# -- realization -----------------------------------------------------------


def test_realize_groups_orders():
    groups = realize_groups(corpus_fixture())
    expected = {
        "C2": 2, "C3": 3, "C4": 4, "C9": 9, "C3xC3": 9,
        "D8pc": 8, "D8perm": 8, "Q8pc": 8, "Q8perm": 8,
        "Heis27": 27, "ES27": 27, "D16": 16,
        "S3": 6, "S4": 24, "A4": 12, "D8xC3": 24,
    }
    assert {name: G.order for name, G in groups.items()} == expected


def test_word_element_normal_form():
    fx = parse_fixture(D8_TEXT)
    G = build_group(fx.group("D8").presentation)
    g1, g2, g3 = G.generators
    x = word_element(G, ((1, 1), (3, 1)))
    assert x == G.multiply(g1, g3)
    assert word_element(G, ()) == G.identity


def test_realize_pc_automorphism_is_involution():
    fx = corpus_fixture()
    groups = realize_groups(fx)
    phi = realize_automorphism(fx.aut("c9inv"), groups["C9"])
    G = groups["C9"]
    g1 = G.generators[0]
    # inversion: g1 has order 9 so phi(g1) = g1^-1, and phi has order 2
    assert phi(g1) == G.inverse(g1)
    assert all(phi(phi(x)) == x for x in G.elements())


def test_realize_perm_automorphism_both_image_kinds():
    text = S3_TEXT + "\naut conj on S3\nimage a = (1 3 2)\nimage b = b\nend\n"
    fx = parse_fixture(text)
    groups = realize_groups(fx)
    phi = realize_automorphism(fx.aut("conj"), groups["S3"])
    G = groups["S3"]
    a = G.generator_by_name("a")
    assert phi(a) == G.inverse(a)


def test_realize_rejects_non_automorphism_images():
    # g1 and g2 generate C3xC3; sending both to g1 is not injective
    text = "group V\nbackend pc\nprime 3\nngens 2\nend\naut bad on V\nimage 1 = 1\nimage 2 = 1\nend\n"
    fx = parse_fixture(text)
    groups = realize_groups(fx)
    with pytest.raises(MalformedSpec):
        realize_automorphism(fx.aut("bad"), groups["V"])


def test_realize_automorphisms_bulk():
    fx = corpus_fixture()
    groups = realize_groups(fx)
    auts = realize_automorphisms(fx, groups)
    assert set(auts) == {"c33invx", "c33invy", "c33inv", "h27invx", "h27invy", "c9inv"}
    assert all(a.order() in (2,) for a in auts.values())
