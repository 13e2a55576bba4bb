"""Coordinates of H_{2n^2} in the idempotent basis {e_a f_b z^e}.

Since x^i y^j = sum_{a,b} q^{ia+jb} e_a f_b, moving to this basis is a 2-d
discrete Fourier transform on each z-sector.  There the product is nearly
diagonal:

    (e_a f_b z^s)(e_c f_d z^t) = [(c, d) = (a, b) or (b, a) if s = 1] e_a f_b z^{s+t},
    e_a f_b z^2 = tau(a, b) e_a f_b,

with tau(a, b) = q^{ab} for the standard z^2.  This gives a second, much
cheaper multiplication used for the dense idempotent checks; it is tested
against the PBW product.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Accumulator, CycNum
from .hopf import AlgElem, HopfAlgebra

__all__ = ["FourierElem", "from_fourier", "to_fourier"]


class FourierElem:
    """Sparse map (a, b, e) -> coefficient of e_a f_b z^e."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: HopfAlgebra, coeffs: dict):
        self.algebra = algebra
        self.coeffs = coeffs

    def __mul__(self, other: "FourierElem") -> "FourierElem":
        H = self.algebra
        H._own(other)
        tau = _tau(H)
        acc = Accumulator(H.n)
        get = other.coeffs.get
        for (a, b, s), u in self.coeffs.items():
            c, d = (b, a) if s else (a, b)
            for t in (0, 1):
                v = get((c, d, t))
                if v is None:
                    continue
                if s and t:
                    acc.add_product((a, b, 0), u * v, tau[a, b])
                else:
                    acc.add_product((a, b, s + t), u, v)
        return FourierElem(H, acc.result())

    def __add__(self, other: "FourierElem") -> "FourierElem":
        acc = Accumulator(self.algebra.n)
        for k, v in self.coeffs.items():
            acc.add(k, v)
        for k, v in other.coeffs.items():
            acc.add(k, v)
        return FourierElem(self.algebra, acc.result())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, FourierElem):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    __hash__ = None


def _tau(H: HopfAlgebra) -> dict:
    """tau(a, b): the scalar by which z^2 acts on e_a f_b."""
    hit = getattr(H, "_fourier_tau", None)
    if hit is None:
        z2 = to_fourier(H.z_squared_element()).coeffs
        zero = CycNum.zero(H.n)
        hit = {(a, b): z2.get((a, b, 0), zero) for a in range(H.n) for b in range(H.n)}
        H._fourier_tau = hit
    return hit


def _dft(n: int, coeffs: dict, sign: int, scale) -> dict:
    """Separable transform: out[a,b,e] = scale * sum_{i,j} c[i,j,e] q^{sign(ia+jb)}."""
    stage = Accumulator(n)
    for (i, j, e), c in coeffs.items():
        for a in range(n):
            stage.add((a, j, e), c, 2 * sign * i * a)
    mid = stage.result()
    out = Accumulator(n)
    for (a, j, e), c in mid.items():
        for b in range(n):
            out.add((a, b, e), c, 2 * sign * j * b, scale)
    return out.result()


def to_fourier(a: AlgElem) -> FourierElem:
    return FourierElem(a.algebra, _dft(a.n, a.coeffs, 1, 1))


def from_fourier(f: FourierElem) -> AlgElem:
    n = f.algebra.n
    return AlgElem(f.algebra, _dft(n, f.coeffs, -1, Fraction(1, n * n)), _canonical=True)
