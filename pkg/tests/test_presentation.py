import re
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hfl.labels import FusionVector, TwoDim, label_count
from hfl.linalg import integer_determinant
from hfl.presentation import (
    WORKED_EXAMPLES,
    IntPoly,
    basis_matrix,
    eval_in_fusion,
    fibonacci_closed_form,
    fibonacci_poly,
    normalize,
    parse_poly,
    presentation_relations,
    reduced_relations,
    s0_expansion,
    verify_presentation,
)

SOURCE = Path(__file__).resolve().parents[1] / "paper.md"


def _source_relation_sets():
    """n -> list of relation strings, as written in the source document."""
    text = SOURCE.read_text(encoding="utf-8")
    out = {}
    for hit in re.finditer(r"r\(H_\{(?:2\\cdot (\d)\^2|(8))\}\)\\cong", text):
        n = int(hit[1]) if hit[1] else 2
        start = text.index(r"\dlr{", hit.end()) + len(r"\dlr{")
        depth, pos = 1, start
        while depth:
            depth += {"{": 1, "}": -1}.get(text[pos], 0)
            pos += 1
        body = re.sub(r"\^\{(\d+)\}", r"^\1", text[start:pos - 1])
        out[n] = [p.strip() for p in re.sub(r"\s+", " ", body).split(",")]
    return out


def test_worked_examples_match_source_text():
    found = _source_relation_sets()
    assert sorted(found) == list(range(2, 9))
    for n, rels in found.items():
        assert [parse_poly(r) for r in rels] == [parse_poly(r) for r in WORKED_EXAMPLES[n]]


@pytest.mark.parametrize("t,text", [(0, "0"), (1, "1"), (2, "z"), (3, "z^2 - y"), (4, "z^3 - 2zy")])
def test_fibonacci_values(t, text):
    assert str(fibonacci_poly(t)) == text


@pytest.mark.parametrize("t", range(1, 31))
def test_fibonacci_closed_form(t):
    assert fibonacci_closed_form(t) == fibonacci_poly(t)


def test_s0_expansion_values():
    assert s0_expansion(5, 1) == parse_poly("z^3-3zy")
    assert s0_expansion(5, 0) == parse_poly("z^2-y^6-y")
    assert s0_expansion(7, 0) == parse_poly("z^2-y^8-y")
    assert s0_expansion(4, 0) == parse_poly("z^2-y-x")
    with pytest.raises(ValueError):
        s0_expansion(4, 2)


@pytest.mark.parametrize("n", range(3, 9))
def test_s0_expansion_hits_the_right_class(n):
    for m in range(n - 2):
        assert eval_in_fusion(s0_expansion(n, m), n) == FusionVector.of(n, TwoDim(0, m + 2))


def test_sign_flipped_s02_expansion_misses():
    for n in (3, 5, 7):
        flipped = parse_poly(f"z^2+y^{n + 1}+y")
        assert eval_in_fusion(flipped, n) != FusionVector.of(n, TwoDim(0, 2))


@pytest.mark.parametrize("n", range(2, 9))
def test_relations_vanish(n):
    for p in presentation_relations(n) + [parse_poly(s) for s in WORKED_EXAMPLES[n]]:
        assert eval_in_fusion(p, n).is_zero(), str(p)


def test_known_relations_vanish():
    assert eval_in_fusion(parse_poly("y^6-1"), 3).is_zero()
    assert eval_in_fusion(parse_poly("z^2-zy^2-y^4-y"), 3).is_zero()
    assert eval_in_fusion(parse_poly("z^2-x-y-xy-1"), 2).is_zero()
    assert not eval_in_fusion(parse_poly("z^2-x-y-xy"), 2).is_zero()


def test_reduced_relations_read_like_the_examples():
    assert [str(p) for p in reduced_relations(7)] == ["y^14 - 1", "zy^7 - z", "z^4 - z^3y^4 - 4z^2y + 3zy^5 + y^9 + y^2"]
    assert reduced_relations(3) == [parse_poly(s) for s in WORKED_EXAMPLES[3]]
    assert reduced_relations(2) == [parse_poly(s) for s in WORKED_EXAMPLES[2]]


@pytest.mark.parametrize("n", range(2, 9))
def test_basis_matrix_is_unimodular(n):
    m = basis_matrix(n)
    assert len(m) == label_count(n) and all(len(r) == label_count(n) for r in m)
    assert integer_determinant(m) in (1, -1)


def test_determinant_helper():
    assert integer_determinant([[2, 1], [1, 1]]) == 1
    assert integer_determinant([[0, 1], [1, 0]]) == -1
    assert integer_determinant([[1, 2], [2, 4]]) == 0
    assert integer_determinant([[0, 0, 1], [0, 3, 0], [2, 0, 0]]) == -6


def test_x_rejected_for_odd_n():
    with pytest.raises(ValueError):
        eval_in_fusion(parse_poly("x"), 3)
    with pytest.raises(ValueError):
        normalize(parse_poly("xz"), 5)


@pytest.mark.parametrize("text", ["", "z^", "3+", "zq"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_poly(text)


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 4), st.integers(0, 3)), st.integers(-5, 5), max_size=6
).map(IntPoly)


@given(polys)
def test_str_parse_round_trip(p):
    assert parse_poly(str(p)) == p


@given(polys, polys, polys)
def test_polynomial_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPoly()


@pytest.mark.parametrize("n", range(2, 9))
def test_verify_presentation(n):
    report = verify_presentation(n)
    assert report.ok, report.summary()
