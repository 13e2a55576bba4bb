"""Acceptance suite: one PASS/FAIL line per criterion, n = 2..8, exact arithmetic."""

import time
from collections import Counter

import pytest

from hfl.center import center_dimension, primitive_central_idempotents, verify_idempotents
from hfl.fusion import verify_fusion_against_oracle
from hfl.hopf import verify_hopf_axioms, verify_integral, verify_quasitriangular
from hfl.labels import FusionVector, TwoDim, simple_labels
from hfl.linalg import integer_determinant
from hfl.presentation import (
    WORKED_EXAMPLES,
    basis_matrix,
    eval_in_fusion,
    fibonacci_closed_form,
    fibonacci_poly,
    parse_poly,
    presentation_relations,
    s0_expansion,
)
from hfl.repr import build_simple

ALL_N = range(2, 9)


@pytest.fixture
def verdict(capsys):
    def emit(number, title, failures, detail=""):
        line = f"criterion {number} [{title}]: {'PASS' if not failures else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += " -- " + "; ".join(map(str, failures[:5]))
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def test_hopf_axiom_suite(verdict):
    failures = []
    for n in ALL_N:
        for report in (verify_hopf_axioms(n), verify_quasitriangular(n), verify_integral(n)):
            failures += [f"n={n} {c.axiom}: {c.witness}" for c in report.failures]
    verdict(1, "Hopf, quasi-triangular and integral axioms", failures, "n=2..8")


def test_idempotent_suite(verdict):
    failures = []
    for n in ALL_N:
        report = verify_idempotents(n)
        failures += [f"n={n} {c.axiom}: {c.witness}" for c in report.failures]
        idems = primitive_central_idempotents(n)
        if len(idems) != 2 * n + (n * n - n) // 2:
            failures.append(f"n={n} count {len(idems)}")
        dims = Counter(c.ideal_dimension() for c in idems)
        if dims != Counter({1: 2 * n, 4: (n * n - n) // 2}):
            failures.append(f"n={n} ideal dimensions {dict(dims)}")
        if sum(d * k for d, k in dims.items()) != 2 * n * n:
            failures.append(f"n={n} total dimension")
    verdict(2, "primitive central idempotents", failures, "n=2..8")


def test_oracle_equivalence(verdict):
    failures, pairs, last = [], 0, 0.0
    for n in ALL_N:
        start = time.perf_counter()
        report = verify_fusion_against_oracle(n)
        last = time.perf_counter() - start
        pairs += report.checks[0].cases
        failures += [note for note in report.notes if ": closed form" in note or ": residue/sign law" in note]
        if not report.ok:
            failures.append(f"n={n} mismatch")
        summary = next(note for note in report.notes if "disagreements" in note)
        if ", 0 disagreements" not in summary:
            failures.append(f"n={n}: {summary}")
    if last >= 60:
        failures.append(f"n=8 sweep took {last:.1f}s")
    verdict(3, "closed-form fusion equals trace oracle", failures, f"{pairs} ordered pairs, n=8 in {last:.1f}s")


def test_presentation_suite(verdict):
    failures = []
    for n in ALL_N:
        polys = presentation_relations(n) + [parse_poly(s) for s in WORKED_EXAMPLES[n]]
        for p in polys:
            value = eval_in_fusion(p, n)
            if not value.is_zero():
                failures.append(f"n={n}: {p} -> {value}")
    if not eval_in_fusion(parse_poly("z^4-z^3y^4+3zy^5-4z^2y+y^9+y^2"), 7).is_zero():
        failures.append("n=7 literal example")
    verdict(4, "presentation generators and worked examples vanish", failures, "n=2..8")


def test_z_basis_certificate(verdict):
    failures = []
    for n in ALL_N:
        m = basis_matrix(n)
        size = 2 * n + n * (n - 1) // 2
        if len(m) != size or any(len(r) != size for r in m):
            failures.append(f"n={n} not {size}x{size}")
            continue
        det = integer_determinant(m)
        if det not in (1, -1):
            failures.append(f"n={n} det {det}")
    verdict(5, "monomial family is a Z-basis", failures, "determinants +-1, up to 44x44")


def test_fibonacci_identity(verdict):
    failures = [t for t in range(2, 31) if fibonacci_closed_form(t) != fibonacci_poly(t)]
    checked = 0
    for n in ALL_N:
        for m in range(n - 2):
            checked += 1
            if eval_in_fusion(s0_expansion(n, m), n) != FusionVector.of(n, TwoDim(0, m + 2)):
                failures.append(f"s0 n={n} m={m}")
    verdict(6, "Fibonacci closed form and [S_{0,m+2}] expansions", failures,
            f"t=2..30, {checked} (n, m) pairs")


def test_structural_counts(verdict):
    failures = []
    for n in ALL_N:
        labels = simple_labels(n)
        simples = len(labels)
        squares = sum(build_simple(n, lab).dim ** 2 for lab in labels)
        center = center_dimension(n)
        if simples != 2 * n + n * (n - 1) // 2:
            failures.append(f"n={n} simples {simples}")
        if squares != 2 * n * n:
            failures.append(f"n={n} sum of squares {squares}")
        if center != (n * n + 3 * n) // 2:
            failures.append(f"n={n} center {center}")
    verdict(7, "simple count, sum of squares, center dimension", failures, "n=2..8")
