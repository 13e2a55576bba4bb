import pytest

from hfl.cyclotomic import CycNum, ParameterMismatch
from hfl.hopf import algebra
from hfl.labels import FusionVector, InvalidLabel, OneDim, TwoDim, simple_labels
from hfl.linalg import identity, mat_add, mat_mul, mat_scale
from hfl.repr import (
    ModuleAxiomError,
    Rep,
    build_simple,
    decompose,
    rep_of_element,
    tensor_rep,
    verify_module,
    verify_simples,
)


def fv(n, *labels):
    out = {}
    for lab in labels:
        out[lab] = out.get(lab, 0) + 1
    return FusionVector(n, out)


def test_trivial_module():
    rep = build_simple(2, OneDim(0))
    assert rep.x == rep.y == rep.z == ((CycNum.one(2),),)


def test_sign_twisted_module_n2():
    rep = build_simple(2, OneDim(3))
    assert rep.x == rep.y == ((CycNum.rational(2, -1),),)
    assert rep.z == ((-CycNum.root(2, 1),),)


def test_two_dim_module_n3():
    rep = build_simple(3, TwoDim(0, 1))
    zero, one = CycNum.zero(3), CycNum.one(3)
    assert rep.z == ((zero, one), (one, zero))


def test_labels_from_strings():
    assert build_simple(4, "S_{1,3}").label == TwoDim(1, 3)
    with pytest.raises(InvalidLabel):
        build_simple(3, OneDim(6))
    with pytest.raises(InvalidLabel):
        build_simple(3, "S_{1,3}")


def test_unit_element_acts_as_identity(n):
    for lab in simple_labels(n)[-2:]:
        rep = build_simple(n, lab)
        assert rep_of_element(rep, algebra(n).one()) == identity(n, rep.dim)


def test_trivial_tensor_is_neutral(n):
    unit = build_simple(n, OneDim(0))
    for lab in simple_labels(n):
        m = build_simple(n, lab)
        t = tensor_rep(unit, m)
        assert (t.x, t.y, t.z) == (m.x, m.y, m.z)


def test_known_tensor_decompositions():
    assert decompose(tensor_rep(build_simple(2, OneDim(1)), build_simple(2, OneDim(1)))) == fv(2, OneDim(0))
    s01 = build_simple(2, TwoDim(0, 1))
    assert decompose(tensor_rep(s01, s01)) == fv(2, *map(OneDim, range(4)))
    s01 = build_simple(3, TwoDim(0, 1))
    assert decompose(tensor_rep(s01, s01)) == fv(3, OneDim(1), OneDim(4), TwoDim(0, 2))
    t = tensor_rep(build_simple(4, TwoDim(0, 2)), build_simple(4, TwoDim(1, 3)))
    assert decompose(t) == fv(4, OneDim(1), OneDim(3), OneDim(5), OneDim(7))


def test_s1_squared_n2_z_value():
    # z acts on S_1 (x) S_1 by 1, the same scalar as on S_0 and unlike S_2
    t = tensor_rep(build_simple(2, OneDim(1)), build_simple(2, OneDim(1)))
    assert t.z == ((CycNum.one(2),),)
    assert build_simple(2, OneDim(2)).z != t.z


def test_tensor_modules_satisfy_relations():
    for n in (2, 3, 4):
        labels = simple_labels(n)
        for a in labels[::2]:
            for b in labels[1::3]:
                assert verify_module(tensor_rep(build_simple(n, a), build_simple(n, b))).ok


def _unipotent(n, d):
    """I + N with N strictly upper triangular, and its inverse."""
    one = CycNum.one(n)
    zero = CycNum.zero(n)
    N = tuple(tuple(CycNum.root(n, r + c) if c > r else zero for c in range(d)) for r in range(d))
    P = mat_add(identity(n, d), N)
    inv, power = identity(n, d), identity(n, d)
    for k in range(1, d):
        power = mat_mul(power, N)
        inv = mat_add(inv, mat_scale(power, one if k % 2 == 0 else -one))
    assert mat_mul(P, inv) == identity(n, d)
    return P, inv


@pytest.mark.parametrize("n", [2, 3, 4])
def test_decompose_general_path_on_conjugated_module(n):
    # conjugating by a non-diagonal matrix forces the general trace path
    t = tensor_rep(build_simple(n, TwoDim(0, 1)), build_simple(n, TwoDim(0, n - 1)))
    P, inv = _unipotent(n, t.dim)
    conj = lambda m: mat_mul(mat_mul(P, m), inv)  # noqa: E731
    twisted = Rep(n, conj(t.x), conj(t.y), conj(t.z))
    assert verify_module(twisted).ok
    assert decompose(twisted) == decompose(t)


def test_decompose_rejects_non_modules():
    n = 3
    one, zero = CycNum.one(n), CycNum.zero(n)
    bogus = Rep(n, ((one, zero), (zero, one)), ((one, zero), (zero, one)), ((one, zero), (zero, zero)))
    assert not verify_module(bogus).ok
    with pytest.raises(ModuleAxiomError):
        decompose(bogus)


def test_mixed_n_rejected():
    with pytest.raises(ParameterMismatch):
        tensor_rep(build_simple(2, OneDim(0)), build_simple(3, OneDim(0)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verify_simples(n):
    report = verify_simples(n)
    assert report.ok, report.summary()
