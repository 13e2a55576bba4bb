"""Exact arithmetic in the cyclotomic field Q(zeta_N), N = 2n.

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) as a
tuple of integer numerators over one positive common denominator, reduced
modulo the N-th cyclotomic polynomial.  The pair (numerators, denominator)
is kept in lowest terms, so equality is tuple comparison.

The algebra parameter ``n`` rides along on every value; mixing values built
for different ``n`` raises :class:`ParameterMismatch`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "Accumulator",
    "CycNum",
    "ParameterMismatch",
    "cyclotomic_polynomial",
    "cyc_from_root_power",
    "half_root_exponent",
]


class ParameterMismatch(ValueError):
    """Operands were built for different algebra parameters n."""


def _poly_divexact(num, den):
    # integer polynomials, lowest degree first; den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, lowest degree first.

    Phi_N = (x^N - 1) / prod(Phi_d for d | N, d < N).
    """
    if N < 1:
        raise ValueError("N must be positive")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _Field:
    """Per-n lookup tables shared by every CycNum with that parameter."""

    def __init__(self, n: int):
        self.n = n
        self.N = N = 2 * n
        phi = cyclotomic_polynomial(N)
        self.degree = d = len(phi) - 1
        # zeta^d = -sum(phi[i] zeta^i)
        self.tail = tuple((i, -c) for i, c in enumerate(phi[:-1]) if c)
        # power-basis vectors of zeta^k for 0 <= k < max(N, 2d - 1)
        powers = []
        v = [1] + [0] * (d - 1)
        for _ in range(max(N, 2 * d - 1)):
            powers.append(tuple(v))
            top = v[-1]
            v = [0] + v[:-1]
            if top:
                for i, c in self.tail:
                    v[i] += top * c
        self.powers = tuple(powers)
        self.zero = (0,) * d


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    if n < 1:
        raise ValueError(f"algebra parameter must be positive, got n={n}")
    return _Field(n)


def half_root_exponent(n: int) -> int:
    """Exponent h with zeta^h the square root of q used for q^(1/2).

    For even n this is zeta itself.  For odd n it is zeta^(n+1) = q^((n+1)/2),
    the square root of q lying in the group generated by q; with that choice
    q^(m^2/2) only depends on m mod n, which keeps S_m and S_(m+n) distinct.
    """
    return 1 if n % 2 == 0 else n + 1


class CycNum:
    """An element of Q(zeta_2n).  Immutable."""

    __slots__ = ("n", "num", "den", "_field")

    def __init__(self, n: int, coeffs=()):
        field = _field(n)
        self.n = n
        self._field = field
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        self.num, self.den = _normalize(_reduce(field, ints), den)

    # -- constructors -----------------------------------------------------

    @classmethod
    def _make(cls, field, num, den):
        obj = object.__new__(cls)
        obj.n = field.n
        obj._field = field
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls, n: int) -> "CycNum":
        f = _field(n)
        return cls._make(f, f.zero, 1)

    @classmethod
    def one(cls, n: int) -> "CycNum":
        return cls.rational(n, 1)

    @classmethod
    def rational(cls, n: int, value) -> "CycNum":
        f = _field(n)
        value = Fraction(value)
        num = (value.numerator,) + f.zero[1:]
        return cls._make(f, num, value.denominator)

    @classmethod
    def root(cls, n: int, k: int) -> "CycNum":
        """zeta^k, with zeta a primitive 2n-th root of unity."""
        f = _field(n)
        return cls._make(f, f.powers[k % f.N], 1)

    # -- views ------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.n == other.n and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.n, self.num, self.den))

    def __repr__(self):
        return f"CycNum(n={self.n}, {self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mag = abs(c)
                power = "z1" if k == 1 else f"z1^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise ParameterMismatch(f"cannot combine n={self.n} with n={other.n}")
            return other
        if isinstance(other, (int, Rational)):
            return CycNum.rational(self.n, other)
        raise TypeError(f"cannot combine CycNum with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        da, db = self.den, other.den
        if da == db:
            num = [a + b for a, b in zip(self.num, other.num)]
            return CycNum._make(self._field, *_normalize(num, da))
        num = [a * db + b * da for a, b in zip(self.num, other.num)]
        return CycNum._make(self._field, *_normalize(num, da * db))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._make(self._field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return CycNum._make(self._field, self._field.zero, 1)
            return CycNum._make(self._field, *_normalize([a * other for a in self.num], self.den))
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        field = self._field
        a, b = self.num, other.num
        d = field.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycNum._make(field, *_normalize(_reduce(field, prod), self.den * other.den))

    __rmul__ = __mul__

    def times_root(self, k: int) -> "CycNum":
        """self * zeta^k."""
        return self * CycNum.root(self.n, k)

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycNum.rational(self.n, Fraction(self.den, self.num[0]))
        # solve (multiplication-by-self) v = 1 over Q
        d = self._field.degree
        cols = []
        for k in range(d):
            cols.append((self * CycNum.root(self.n, k)).coeffs)
        rows = [[cols[c][r] for c in range(d)] + [Fraction(int(r == 0))] for r in range(d)]
        for c in range(d):
            p = next(r for r in range(c, d) if rows[r][c])
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [v / piv for v in rows[c]]
            for r in range(d):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        return CycNum(self.n, [rows[r][d] for r in range(d)])

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def _reduce(field: _Field, coeffs):
    """Reduce an integer coefficient list (any length) modulo Phi_N."""
    d = field.degree
    if len(coeffs) <= d:
        return list(coeffs) + [0] * (d - len(coeffs))
    coeffs = list(coeffs)
    tail = field.tail
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c:
            base = k - d
            for i, t in tail:
                coeffs[base + i] += c * t
    return coeffs[:d]


def _normalize(num, den):
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = gcd(den, *num)
    if g > 1:
        return tuple(a // g for a in num), den // g
    return tuple(num), den


class Accumulator:
    """Keyed sums of terms ``value * scale * zeta^k``.

    Terms are collected in the group ring Q[Z_2n] (one integer slot per
    power of zeta) and reduced modulo Phi_N once, in :meth:`result`.  This
    is the hot path for convolutions whose structure constants are roots of
    unity times rationals.
    """

    __slots__ = ("n", "_field", "_slots")

    def __init__(self, n: int):
        self.n = n
        self._field = _field(n)
        self._slots = {}

    def _slot(self, key, den):
        """The slot for ``key`` rescaled to a multiple of ``den``, plus the factor for den."""
        slot = self._slots.get(key)
        if slot is None:
            slot = self._slots[key] = [[0] * self._field.N, den]
            return slot, 1
        cur = slot[1]
        if cur == den:
            return slot, 1
        g = gcd(cur, den)
        lcm = cur // g * den
        if lcm != cur:
            up = lcm // cur
            slot[0] = [a * up for a in slot[0]]
            slot[1] = lcm
        return slot, lcm // den

    def add(self, key, value: CycNum, k: int = 0, scale=1):
        if value.n != self.n:
            raise ParameterMismatch(f"cannot combine n={self.n} with n={value.n}")
        if isinstance(scale, int):
            p, s = scale, 1
        else:
            p, s = scale.numerator, scale.denominator
        if not p:
            return
        slot, up = self._slot(key, value.den * s)
        self._spread(slot[0], value.num, k, p * up)

    def add_product(self, key, value: CycNum, coef: CycNum, k: int = 0, scale=1):
        """Accumulate value * coef * scale * zeta^k."""
        if coef.n != self.n or value.n != self.n:
            raise ParameterMismatch(f"cannot combine n={self.n} with n={coef.n}")
        if isinstance(scale, int):
            p, s = scale, 1
        else:
            p, s = scale.numerator, scale.denominator
        if not p:
            return
        slot, up = self._slot(key, value.den * coef.den * s)
        arr = slot[0]
        p *= up
        for l, c in enumerate(coef.num):
            if c:
                self._spread(arr, value.num, k + l, c * p)

    def _spread(self, arr, num, k, mult):
        N = self._field.N
        k %= N
        for idx, c in enumerate(num):
            if c:
                pos = idx + k
                if pos >= N:
                    pos -= N
                arr[pos] += c * mult

    def __len__(self):
        return len(self._slots)

    def result(self) -> dict:
        """Canonical nonzero sums, keyed as added."""
        field = self._field
        d = field.degree
        powers = field.powers
        out = {}
        for key, (arr, den) in self._slots.items():
            vec = arr[:d]
            for pos in range(d, field.N):
                c = arr[pos]
                if c:
                    for i, p in enumerate(powers[pos]):
                        if p:
                            vec[i] += c * p
            if any(vec):
                out[key] = CycNum._make(field, *_normalize(vec, den))
        return out


def cyc_from_root_power(n: int, k: int) -> CycNum:
    """zeta_2n^k; with q = zeta^2 this gives q^(k/2)."""
    if n < 2:
        raise ValueError(f"algebra parameter must satisfy n >= 2, got n={n}")
    return CycNum.root(n, k)
