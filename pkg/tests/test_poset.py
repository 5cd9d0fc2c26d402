import json

import pytest

from starorder.errors import OrthoMissing, ParseError, PosetInvalid, UnknownElement
from starorder.models import (
    enumerate_random_variables,
    rv_le,
    rv_meet,
    rv_perp,
    rv_skew_meet,
)
from starorder.poset import (
    FinitePoset,
    boolean_cube,
    bowtie,
    load_poset,
    mo2,
    o6,
    poset_from_json,
    poset_to_json,
    trivial_poset,
    v_poset,
)


# ---------------------------------------------------------------------------
# construction and validation


def test_closure_is_computed_and_validated():
    p = FinitePoset(["0", "a", "b"], [("0", "a"), ("a", "b")], "0")
    assert p.le("0", "b")  # transitive closure
    with pytest.raises(PosetInvalid, match="antisymmetry"):
        FinitePoset(["0", "a", "b"], [("0", "a"), ("a", "b"), ("b", "a")], "0")
    with pytest.raises(PosetInvalid, match="least"):
        FinitePoset(["0", "a", "b"], [("0", "a")], "0")
    with pytest.raises(PosetInvalid, match="unknown"):
        FinitePoset(["0"], [("0", "x")], "0")


@pytest.mark.parametrize(
    "ortho, axiom",
    [
        ([("a", "b")], "⊥1"),  # not symmetric (and missing zero pairs)
        ([("0", x) for x in "0ab"] + [(x, "0") for x in "ab"] + [("b", "b")], "⊥2"),
        ([("0", "0")], "⊥3"),
    ],
)
def test_ortho_validation_names_axiom(ortho, axiom):
    with pytest.raises(PosetInvalid, match=axiom):
        FinitePoset(["0", "a", "b"], [("0", "a"), ("0", "b"), ("a", "b")], "0", ortho_pairs=ortho)


def test_unknown_element_queries():
    p = v_poset()
    with pytest.raises(UnknownElement):
        p.le("a", "nope")
    with pytest.raises(UnknownElement):
        p.brute_glb("nope", "a")


def test_ortho_missing():
    with pytest.raises(OrthoMissing):
        bowtie().perp("a", "b")
    with pytest.raises(OrthoMissing):
        bowtie().brute_skew_meet("a", "b")


# ---------------------------------------------------------------------------
# brute-force oracles


def test_glb_lub_examples():
    cube = boolean_cube(2)
    assert cube.brute_glb("10", "01") == "00"  # two atoms meet at bottom
    ring = o6()
    assert ring.brute_lub("b", "d") == "1"
    assert v_poset().brute_lub("a", "b") is None


def test_has_ubp():
    assert boolean_cube(3).has_ubp() == (True, None)
    ok, witness = bowtie().has_ubp()
    assert not ok and set(witness) == {"a", "b"}
    assert trivial_poset().has_ubp() == (True, None)


def test_skew_meet_examples():
    cube = boolean_cube(3)
    # x = {1,2} -> "110", y = {2,3} -> "011": in a Boolean algebra overriding
    # coincides with the order, so the skew meet is the meet {2} -> "010"
    assert cube.brute_skew_meet("110", "011") == "010"
    assert cube.brute_skew_meet("101", "101") == "101"
    assert mo2().brute_skew_meet("a", "b") == "0"


def test_overriding_in_cube_is_order():
    cube = boolean_cube(2)
    for x in cube.elements:
        for y in cube.elements:
            assert cube.overriding(x, y) == cube.le(x, y)


# ---------------------------------------------------------------------------
# oracle consistency against the random-variable model


def test_poset_oracle_matches_rv_model():
    elements = enumerate_random_variables(3, (0, 1, 2))
    labels = {f.values: str(f.values) for f in elements}
    le_pairs = [
        (labels[f.values], labels[g.values]) for f in elements for g in elements if rv_le(f, g)
    ]
    ortho = [
        (labels[f.values], labels[g.values]) for f in elements for g in elements if rv_perp(f, g)
    ]
    poset = FinitePoset(
        list(labels.values()), le_pairs, labels[(0, 0, 0)], ortho_pairs=ortho
    )
    by_label = {labels[f.values]: f for f in elements}
    for f in elements:
        for g in elements:
            glb = poset.brute_glb(labels[f.values], labels[g.values])
            assert glb is not None and by_label[glb] == rv_meet(f, g)
            skew = poset.brute_skew_meet(labels[f.values], labels[g.values])
            assert skew is not None and by_label[skew] == rv_skew_meet(f, g)


# ---------------------------------------------------------------------------
# fixture suite outcomes


def test_fixture_structures_summary():
    from starorder.axioms import SUITE_NAMES, run_suite

    def verdicts(structure, suite):
        return {r.axiom: r.verdict for r in run_suite(structure, suite)}

    cube = boolean_cube(3).as_structure()
    for suite in SUITE_NAMES:
        for r in run_suite(cube, suite):
            assert r.verdict in ("pass", "skipped"), (suite, r.axiom)

    assert verdicts(mo2().as_structure(), "riesz")["⊕6"] == "fail"
    assert verdicts(o6().as_structure(), "qom")["⊥6"] == "fail"
    assert verdicts(trivial_poset().as_structure(), "qom")["⊥6"] == "pass"


# ---------------------------------------------------------------------------
# wire format


def test_poset_json_round_trip(tmp_path):
    p = o6()
    doc = poset_to_json(p)
    q = poset_from_json(doc)
    assert q.elements == p.elements
    assert q.ortho_pairs == p.ortho_pairs
    assert all(q.le(x, y) == p.le(x, y) for x in p.elements for y in p.elements)

    path = tmp_path / "o6.json"
    path.write_text(json.dumps(doc))
    r = load_poset(path)
    assert r.elements == p.elements


def test_poset_json_errors(tmp_path):
    with pytest.raises(ParseError):
        poset_from_json({"elements": ["0"]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_poset(bad)
    with pytest.raises(ParseError):
        load_poset(tmp_path / "missing.json")
