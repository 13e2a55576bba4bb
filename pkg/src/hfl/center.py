"""Idempotents e_j, f_j, the center, and the primitive central idempotents.

    e_j = (1/n) sum_i q^{-ij} x^i,      f_j = (1/n) sum_i q^{-ij} y^i.

The center is spanned by e_i f_j + e_j f_i (i < j), e_i f_i and e_i f_i z.
Its primitive idempotents are

    e_i f_j + e_j f_i                               (2x2 matrix blocks),
    (1/2) e_i f_i +- (1/2) s_i^{-1} e_i f_i z        (1-dim blocks),

where s_i is the square root of q^{i^2} fixed by
:func:`hfl.cyclotomic.half_root_exponent`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycNum, half_root_exponent
from .fourier import to_fourier
from .hopf import AlgElem, algebra
from .linalg import rank
from .report import VerificationReport

__all__ = [
    "CentralIdempotent",
    "OneDimBlock",
    "TwoDimBlock",
    "center_basis",
    "center_dimension",
    "e_idem",
    "f_idem",
    "ideal_dimension",
    "is_central",
    "primitive_central_idempotents",
    "verify_idempotents",
]


def _check_index(n: int, j: int):
    if not isinstance(j, int) or not 0 <= j < n:
        raise IndexError(f"idempotent index must lie in 0..{n - 1}, got {j!r}")


def e_idem(n, j: int) -> AlgElem:
    H = algebra(n)
    _check_index(H.n, j)
    return H.element({(i, 0, 0): H.q_power(-i * j) * Fraction(1, H.n) for i in range(H.n)})


def f_idem(n, j: int) -> AlgElem:
    H = algebra(n)
    _check_index(H.n, j)
    return H.element({(0, i, 0): H.q_power(-i * j) * Fraction(1, H.n) for i in range(H.n)})


def _ef(n, i, j) -> AlgElem:
    return e_idem(n, i) * f_idem(n, j)


def center_basis(n) -> list[AlgElem]:
    """e_i f_j + e_j f_i (i < j), then e_i f_i, then e_i f_i z."""
    H = algebra(n)
    n = H.n
    out = [_ef(H, i, j) + _ef(H, j, i) for i in range(n) for j in range(i + 1, n)]
    diag = [_ef(H, i, i) for i in range(n)]
    out.extend(diag)
    out.extend(d * H.z() for d in diag)
    return out


def is_central(a: AlgElem) -> bool:
    H = a.algebra
    return all(a * g == g * a for g in (H.x(), H.y(), H.z()))


@dataclass(frozen=True)
class OneDimBlock:
    i: int
    sign: int  # +1 or -1

    @property
    def dim(self) -> int:
        return 1


@dataclass(frozen=True)
class TwoDimBlock:
    i: int
    j: int

    @property
    def dim(self) -> int:
        return 2


@dataclass(frozen=True, eq=False)
class CentralIdempotent:
    kind: OneDimBlock | TwoDimBlock
    element: AlgElem

    @property
    def simple_dim(self) -> int:
        """Dimension of the simple module the block belongs to."""
        return self.kind.dim

    def ideal_dimension(self) -> int:
        return ideal_dimension(self.element)


def ideal_dimension(E: AlgElem) -> int:
    """Rank of a -> a*E on H, i.e. dim H E.

    The rows are b*E for the basis words b = x^i y^j z^e; left multiplication
    by x^i y^j only shifts exponents, so only z*E needs a real product.
    """
    H = E.algebra
    n = H.n
    zE = H.z() * E

    def shifted(elem, i, j):
        return {((k + i) % n, (l + j) % n, d): v for (k, l, d), v in elem.coeffs.items()}

    rows = (shifted(zE if e else E, i, j) for i, j, e in H.basis())
    return rank(rows, n)


def center_dimension(n) -> int:
    """dim Z(H) as the kernel of a -> ([a, x], [a, y], [a, z]), by rank-nullity.

    Uses no knowledge of the block structure.
    """
    H = algebra(n)
    gens = (H.x(), H.y(), H.z())
    rows = []
    for b in H.basis():
        m = H.monomial(*b)
        row = {}
        for g, gen in enumerate(gens):
            for k, v in (m * gen - gen * m).coeffs.items():
                row[(g, k)] = v
        rows.append(row)
    return H.dim - rank(rows, H.n)


def _inverse_half_root(n: int, i: int) -> CycNum:
    return CycNum.root(n, -half_root_exponent(n) * i * i)


@lru_cache(maxsize=None)
def _idempotents(n: int) -> tuple[CentralIdempotent, ...]:
    H = algebra(n)
    out = []
    half = Fraction(1, 2)
    for i in range(n):
        d = _ef(H, i, i)
        dz = d * H.z() * _inverse_half_root(n, i)
        for sign in (1, -1):
            out.append(CentralIdempotent(OneDimBlock(i, sign), (d + dz * sign) * half))
    for i in range(n):
        for j in range(i + 1, n):
            out.append(CentralIdempotent(TwoDimBlock(i, j), _ef(H, i, j) + _ef(H, j, i)))
    return tuple(out)


def primitive_central_idempotents(n) -> list[CentralIdempotent]:
    """2n one-dimensional blocks (i = 0.., sign +, -) then the (n^2-n)/2 matrix blocks."""
    return list(_idempotents(algebra(n).n))


def verify_idempotents(n) -> VerificationReport:
    H = algebra(n)
    n = H.n
    idems = primitive_central_idempotents(n)
    report = VerificationReport(f"primitive central idempotents of H_{{2*{n}^2}}")
    expected = 2 * n + (n * n - n) // 2
    report.add("count = 2n + (n^2-n)/2", len(idems) == expected, None if len(idems) == expected else len(idems), 1)

    bad = next((c.kind for c in idems if not is_central(c.element)), None)
    report.add("central", bad is None, bad, len(idems))
    bad = next((c.kind for c in idems if c.element * c.element != c.element), None)
    report.add("idempotent", bad is None, bad, len(idems))

    # dense pairwise products are cheap in the idempotent basis
    fourier = [to_fourier(c.element) for c in idems]
    bad, pairs = None, 0
    for a in range(len(idems)):
        for b in range(a + 1, len(idems)):
            pairs += 1
            if not (fourier[a] * fourier[b]).is_zero() or not (fourier[b] * fourier[a]).is_zero():
                bad = (idems[a].kind, idems[b].kind)
                break
        if bad:
            break
    report.add("pairwise orthogonal", bad is None, bad, pairs)

    total = H.zero()
    for c in idems:
        total = total + c.element
    report.add("sum = 1", total == H.one(), None if total == H.one() else str(total), 1)

    dims = [c.ideal_dimension() for c in idems]
    bad = next((c.kind for c, d in zip(idems, dims) if d != c.simple_dim ** 2), None)
    report.add("ideal dimension = dim(simple)^2", bad is None, bad, len(idems))
    report.add("sum of ideal dimensions = 2n^2", sum(dims) == 2 * n * n, None if sum(dims) == 2 * n * n else sum(dims), 1)

    basis = center_basis(n)
    bad = next((k for k, c in enumerate(basis) if not is_central(c)), None)
    report.add("center basis is central", bad is None, bad, len(basis))
    size = (n * n + 3 * n) // 2
    report.add("center dimension = (n^2+3n)/2 = number of blocks",
               len(basis) == size == len(idems) and rank((c.coeffs for c in basis), n) == size, None, 1)
    kernel = center_dimension(n)
    report.add("commutant kernel dimension = (n^2+3n)/2", kernel == size, kernel, 1)
    return report
