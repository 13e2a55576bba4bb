"""Labels of simple H_{2n^2}-modules and integer combinations of them.

``OneDim(m)`` is S_m with 0 <= m < 2n; ``TwoDim(i, j)`` is S_{i,j} with
0 <= i < j < n.  Labels sort one-dimensional first (by m), then
two-dimensional lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cyclotomic import ParameterMismatch

__all__ = [
    "FusionVector",
    "InvalidLabel",
    "OneDim",
    "SimpleLabel",
    "TwoDim",
    "label_count",
    "one_dim",
    "parse_label",
    "simple_labels",
    "two_dim",
]


class InvalidLabel(ValueError):
    pass


@dataclass(frozen=True)
class OneDim:
    m: int

    @property
    def dim(self) -> int:
        return 1

    @property
    def sort_key(self):
        return (0, self.m, 0)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return f"S_{self.m}"

    def validate(self, n: int) -> "OneDim":
        if not 0 <= self.m < 2 * n:
            raise InvalidLabel(f"{self} is not a label for n={n}: need 0 <= m < {2 * n}")
        return self


@dataclass(frozen=True)
class TwoDim:
    i: int
    j: int

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise InvalidLabel(f"S_{{{self.i},{self.j}}} needs 0 <= i < j")

    @property
    def dim(self) -> int:
        return 2

    @property
    def sort_key(self):
        return (1, self.i, self.j)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return f"S_{{{self.i},{self.j}}}"

    def validate(self, n: int) -> "TwoDim":
        if self.j >= n:
            raise InvalidLabel(f"{self} is not a label for n={n}: need j < {n}")
        return self


SimpleLabel = OneDim | TwoDim


def one_dim(n: int, m: int) -> OneDim:
    """S_m with m read in Z_2n."""
    return OneDim(m % (2 * n))


def two_dim(n: int, a: int, b: int) -> TwoDim:
    """S_{a,b} with residues mod n, re-sorted; a = b mod n is rejected."""
    a, b = a % n, b % n
    if a == b:
        raise InvalidLabel(f"S_{{{a},{b}}} is not simple: indices agree mod {n}")
    return TwoDim(min(a, b), max(a, b))


def label_count(n: int) -> int:
    return 2 * n + n * (n - 1) // 2


def simple_labels(n: int) -> list[SimpleLabel]:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need an integer n >= 2, got {n!r}")
    return [OneDim(m) for m in range(2 * n)] + [TwoDim(i, j) for i in range(n) for j in range(i + 1, n)]


_LABEL = re.compile(r"^S_(?:(\d+)|\{(\d+),(\d+)\})$")


def parse_label(text: str, n: int | None = None) -> SimpleLabel:
    """Inverse of ``str``: "S_3" or "S_{0,2}"."""
    hit = _LABEL.match(text.strip())
    if not hit:
        raise InvalidLabel(f"cannot parse simple label {text!r}")
    label = OneDim(int(hit[1])) if hit[1] is not None else TwoDim(int(hit[2]), int(hit[3]))
    return label if n is None else label.validate(n)


class FusionVector:
    """A Z-combination of simple classes: an element of r(H_{2n^2}).

    Sums, differences and integer multiples are plain vector operations;
    products go through the fusion rules in :mod:`hfl.fusion`.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        out = {}
        for label, c in dict(coeffs or {}).items():
            if isinstance(label, str):
                label = parse_label(label)
            label.validate(n)
            c = out.get(label, 0) + int(c)
            out[label] = c
        self.coeffs = {k: v for k, v in out.items() if v}

    @classmethod
    def unit(cls, n: int) -> "FusionVector":
        return cls(n, {OneDim(0): 1})

    @classmethod
    def of(cls, n: int, label: SimpleLabel) -> "FusionVector":
        return cls(n, {label: 1})

    def __getitem__(self, label) -> int:
        return self.coeffs.get(label, 0)

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def dimension(self) -> int:
        return sum(c * label.dim for label, c in self.coeffs.items())

    def _same(self, other):
        if not isinstance(other, FusionVector):
            return False
        if other.n != self.n:
            raise ParameterMismatch(f"fusion vectors for n={self.n} and n={other.n}")
        return True

    def __add__(self, other):
        if isinstance(other, int):
            other = FusionVector.unit(self.n) * other
        if not self._same(other):
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return FusionVector(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return FusionVector(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = FusionVector.unit(self.n) * other
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FusionVector(self.n, {k: v * other for k, v in self.coeffs.items()})
        if not self._same(other):
            return NotImplemented
        from .fusion import ring_mul

        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        from .fusion import ring_pow

        return ring_pow(self, e)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == FusionVector.unit(self.n) * other
        if not isinstance(other, FusionVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def to_dict(self) -> dict:
        return {str(k): v for k, v in self}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for label, c in self:
            parts.append(str(label) if c == 1 else f"{c}*{label}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"FusionVector(n={self.n}, {self})"
