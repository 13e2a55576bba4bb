from collections import Counter
from fractions import Fraction

import pytest

from hfl.center import (
    OneDimBlock,
    TwoDimBlock,
    center_basis,
    center_dimension,
    e_idem,
    f_idem,
    is_central,
    primitive_central_idempotents,
    verify_idempotents,
)
from hfl.fourier import from_fourier, to_fourier
from hfl.hopf import algebra
from hfl.linalg import identity, zeros
from hfl.repr import block_label, build_simple, rep_of_element
from hfl.labels import OneDim, simple_labels


def test_e_idem_values_n2():
    H = algebra(2)
    half = Fraction(1, 2)
    assert e_idem(2, 0) == (H.one() + H.x()).scale(half)
    assert e_idem(2, 1) == (H.one() - H.x()).scale(half)


def test_e_and_f_resolve_identity(n):
    H = algebra(n)
    assert sum((e_idem(n, j) for j in range(n)), H.zero()) == H.one()
    assert sum((f_idem(n, j) for j in range(n)), H.zero()) == H.one()


def test_e_idem_index_range():
    with pytest.raises(IndexError):
        e_idem(3, 3)
    with pytest.raises(IndexError):
        f_idem(3, -1)


@pytest.mark.parametrize("n,count", [(2, 5), (3, 9)])
def test_idempotent_counts(n, count):
    idems = primitive_central_idempotents(n)
    assert len(idems) == count
    kinds = Counter(type(c.kind) for c in idems)
    assert kinds[OneDimBlock] == 2 * n and kinds[TwoDimBlock] == (n * n - n) // 2


def test_ideal_dimension_multiset(n):
    dims = Counter(c.ideal_dimension() for c in primitive_central_idempotents(n))
    assert dims == Counter({1: 2 * n, 4: (n * n - n) // 2})


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verify_idempotents(n):
    report = verify_idempotents(n)
    assert report.ok, report.summary()


def test_idempotents_act_on_their_own_simple(n):
    for c in primitive_central_idempotents(n):
        target = block_label(n, c.kind)
        for label in simple_labels(n):
            rep = build_simple(n, label)
            expected = identity(n, rep.dim) if label == target else zeros(n, rep.dim)
            assert rep_of_element(rep, c.element) == expected


def test_e_idem_on_one_dim_simples(n):
    for m in range(2 * n):
        rep = build_simple(n, OneDim(m))
        for j in range(n):
            assert rep_of_element(rep, e_idem(n, j)) == ((int(j == m % n),),)


def test_center_basis_is_central_and_has_the_right_size(n):
    basis = center_basis(n)
    assert len(basis) == (n * n + 3 * n) // 2
    assert all(is_central(b) for b in basis)


def test_center_dimension_from_commutators(n):
    assert center_dimension(n) == (n * n + 3 * n) // 2


def test_non_central_element_detected():
    H = algebra(3)
    assert not is_central(H.x())
    assert is_central(H.x() * H.y())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fourier_coordinates_are_multiplicative(n):
    H = algebra(n)
    basis = [H.monomial(*b) for b in H.basis()]
    for a in basis:
        fa = to_fourier(a)
        assert from_fourier(fa) == a
        for b in basis:
            assert to_fourier(a * b) == fa * to_fourier(b)
