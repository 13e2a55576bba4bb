"""Generators and relations for the Grothendieck ring r(H_{2n^2}).

Polynomials live in Z[x, y, z] and are evaluated at

    x -> a = [S_1],   y -> b = [S_{n+1}],   z -> c = [S_{0,1}].

Odd n needs only y and z; even n uses all three.  The generalized Fibonacci
polynomials F_0 = 0, F_1 = 1, F_{t+2} = z F_{t+1} - y F_t give the classes
of the S_{0,k}:

    [S_{0,k}] = F_{k+1} - y^{n+1} F_{k-1}   (n odd),
    [S_{0,k}] = F_{k+1} - x F_{k-1}         (n even).
"""

from __future__ import annotations

import re
from functools import lru_cache

from .fusion import ring_mul, ring_pow
from .labels import FusionVector, OneDim, TwoDim, label_count, simple_labels, two_dim
from .linalg import integer_determinant
from .report import VerificationReport

__all__ = [
    "IntPoly",
    "WORKED_EXAMPLES",
    "basis_family",
    "basis_matrix",
    "binomial",
    "eval_in_fusion",
    "fibonacci_closed_form",
    "fibonacci_poly",
    "identity_relation",
    "normalize",
    "parse_poly",
    "presentation_relations",
    "reduced_relations",
    "s0_expansion",
    "verify_presentation",
]


class IntPoly:
    """Commutative polynomial in x, y, z with integer coefficients.

    Terms map exponent triples (ex, ey, ez) to nonzero ints.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for key, c in dict(terms or {}).items():
            if c:
                out[tuple(key)] = out.get(tuple(key), 0) + int(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, x=0, y=0, z=0, coeff=1) -> "IntPoly":
        return cls({(x, y, z): coeff})

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return parse_poly(text)

    def _lift(self, other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for (a, b, c), u in self.terms.items():
            for (d, e, f), v in other.terms.items():
                key = (a + d, b + e, c + f)
                out[key] = out.get(key, 0) + u * v
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def uses_x(self) -> bool:
        return any(k[0] for k in self.terms)

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def sorted_terms(self):
        """Lex with z > x > y, highest powers first."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][2], -kv[0][0], -kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (ex, ey, ez), c in self.sorted_terms():
            word = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("z", ez), ("x", ex), ("y", ey)) if e
            )
            mag = abs(c)
            body = word if mag == 1 and word else f"{mag}{word}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {s} {b}" for s, b in out[1:])

    def __repr__(self):
        return f"IntPoly({self})"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*((?:[xyz](?:\^\d+)?\s*\*?\s*)*)")
_FACTOR = re.compile(r"([xyz])(?:\^(\d+))?")


def parse_poly(text: str) -> IntPoly:
    """Read "z^4-z^3y^4+3zy^5" style input (also accepts '*' and spaces)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    pos, terms = 0, {}
    while pos < len(s):
        hit = _TERM.match(s, pos)
        if not hit or hit.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, digits, word = hit.groups()
        if not digits and not word:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        exps = {"x": 0, "y": 0, "z": 0}
        for var, e in _FACTOR.findall(word):
            exps[var] += int(e) if e else 1
        key = (exps["x"], exps["y"], exps["z"])
        terms[key] = terms.get(key, 0) + coeff
        pos = hit.end()
    return IntPoly(terms)


X = IntPoly.monomial(x=1)
Y = IntPoly.monomial(y=1)
Z = IntPoly.monomial(z=1)


@lru_cache(maxsize=None)
def _pascal_row(r: int) -> tuple[int, ...]:
    if r == 0:
        return (1,)
    prev = _pascal_row(r - 1)
    return (1,) + tuple(prev[k] + prev[k + 1] for k in range(r - 1)) + (1,)


def binomial(r: int, k: int) -> int:
    """C(r, k) from Pascal's rule; zero outside 0 <= k <= r."""
    if r < 0 or k < 0 or k > r:
        return 0
    return _pascal_row(r)[k]


@lru_cache(maxsize=None)
def fibonacci_poly(t: int) -> IntPoly:
    if not isinstance(t, int) or t < 0:
        raise ValueError(f"Fibonacci index must be a non-negative integer, got {t!r}")
    if t == 0:
        return IntPoly()
    if t == 1:
        return IntPoly.const(1)
    return Z * fibonacci_poly(t - 1) - Y * fibonacci_poly(t - 2)


def fibonacci_closed_form(t: int) -> IntPoly:
    """sum_i (-1)^i C(t-1-i, i) y^i z^{t-1-2i}, for t >= 1."""
    if t < 1:
        raise ValueError("the closed form starts at t = 1")
    return IntPoly({(0, i, t - 1 - 2 * i): (-1) ** i * binomial(t - 1 - i, i) for i in range((t - 1) // 2 + 1)})


def _fib(t: int) -> IntPoly:
    # F_{-1} only appears multiplied by zero-index neighbours; treat as 0.
    return fibonacci_poly(t) if t >= 0 else IntPoly()


def normalize(p: IntPoly, n: int) -> IntPoly:
    """Reduce exponents by relations that hold in r(H_{2n^2}).

    Odd n: y^{2n} = 1, and z y^n = z.  Even n: x^n = y^n = 1, and z x = z y.
    x^2 = y^2 is deliberately not applied, so the result matches the way
    relations are usually written.
    """
    out = {}
    for (ex, ey, ez), c in p.terms.items():
        if n % 2:
            if ex:
                raise ValueError(f"x does not occur in the presentation for odd n={n}")
            key = (0, ey % (n if ez else 2 * n), ez)
        elif ez:
            key = (0, (ey + ex) % n, ez)
        else:
            key = (ex % n, ey % n, 0)
        out[key] = out.get(key, 0) + c
    return IntPoly(out)


def s0_expansion(n: int, m: int) -> IntPoly:
    """Normalised polynomial for [S_{0,m+2}], 0 <= m < n - 2."""
    if not isinstance(m, int) or not 0 <= m < n - 2:
        raise ValueError(f"need 0 <= m < n - 2 = {n - 2}, got m={m}")
    k = m + 2
    tail = Y ** (n + 1) if n % 2 else X
    return normalize(fibonacci_poly(k + 1) - tail * fibonacci_poly(k - 1), n)


def _sum_term(top: int, count: int, y_shift: int, z_top: int) -> IntPoly:
    """sum_{i=1}^{count} (-1)^i C(top-i, i) y^{y_shift+i} z^{z_top-2i}."""
    return IntPoly({(0, y_shift + i, z_top - 2 * i): (-1) ** i * binomial(top - i, i) for i in range(1, count + 1)})


def _odd_relation(n: int) -> IntPoly:
    """The third generator for odd n, transcribed term by term."""
    m = (n - 1) // 2
    return (
        Z ** (m + 1)
        - Z ** m * Y ** (m + 1)
        + _sum_term(m + 1, (m + 1) // 2, 0, m + 1)
        - _sum_term(m, m // 2, m + 1, m)
        - Y ** (n + 1) * _fib(m)
        + Y ** (m + n + 2) * _fib(m - 1)
    )


def _even_relations(n: int) -> tuple[IntPoly, IntPoly]:
    m = n // 2
    first = (
        Z ** m
        - Z ** m * Y ** m
        + _sum_term(m, m // 2, 0, m)
        - _sum_term(m, m // 2, m, m)
        - X * _fib(m - 1)
        + X * Y ** m * _fib(m - 1)
    )
    second = (
        Z ** (m + 1)
        - Z ** (m - 1) * Y ** (m + 1)
        + _sum_term(m + 1, (m + 1) // 2, 0, m + 1)
        - _sum_term(m - 1, (m - 1) // 2, m + 1, m - 1)
        - X * _fib(m)
        + X * Y ** (m + 1) * _fib(m - 2)
    )
    return first, second


def identity_relation(n: int) -> IntPoly:
    """The Fibonacci identity behind the last generator(s), as a difference.

    Odd n, m = (n-1)/2: F_{m+2} - y^{n+1} F_m - y^{m+1} F_{m+1} + y^{m+n+2} F_{m-1}.
    """
    if n % 2 == 0:
        raise ValueError("defined for odd n")
    m = (n - 1) // 2
    return _fib(m + 2) - Y ** (n + 1) * _fib(m) - Y ** (m + 1) * _fib(m + 1) + Y ** (m + n + 2) * _fib(m - 1)


def presentation_relations(n: int) -> list[IntPoly]:
    """Generators of the relation ideal, in the order they are usually listed."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"need an integer n >= 2, got {n!r}")
    if n == 2:
        return [Y ** 2 - 1, X ** 2 - Y ** 2, Z * X - Z * Y, Z - Z * Y, Z ** 2 - X - Y - X * Y - 1]
    if n % 2:
        return [Y ** (2 * n) - 1, Z * Y ** n - Z, _odd_relation(n)]
    return [X ** n - 1, X ** 2 - Y ** 2, Z * X - Z * Y, *_even_relations(n)]


def reduced_relations(n: int) -> list[IntPoly]:
    """Generators with exponents reduced; ones that reduce to 0 are kept as given."""
    return [normalize(p, n) or p for p in presentation_relations(n)]


WORKED_EXAMPLES = {
    2: ["y^2-1", "x^2-y^2", "zx-zy", "z-zy", "z^2-x-y-xy-1"],
    3: ["y^6-1", "zy^3-z", "z^2-zy^2-y^4-y"],
    4: ["y^4-1", "x^2-y^2", "zx-zy", "z^2-z^2y^2-y+y^3-x+xy^2", "z^3-zy^3-3yz"],
    5: ["y^10-1", "zy^5-z", "z^3-z^2y^3-3zy+y^4+y^9"],
    6: ["y^6-1", "x^2-y^2", "zx-zy", "z^3-z^3y^3-3yz+3y^4z", "z^4-z^2y^4-4yz^2+y^2+y^5+xy+xy^4"],
    7: ["y^14-1", "zy^7-z", "z^4-z^3y^4+3zy^5-4z^2y+y^9+y^2"],
    8: ["y^8-1", "x^2-y^2", "zx-zy", "z^4-z^4y^4-4z^2y+4z^2y^5-xy^5-y^6+xy+y^2", "z^5-z^3y^5-5z^3y+5zy^2+3zy^6"],
}


@lru_cache(maxsize=None)
def _generators(n: int) -> tuple[FusionVector, FusionVector, FusionVector]:
    return (
        FusionVector.of(n, OneDim(1)),
        FusionVector.of(n, OneDim(n + 1)),
        FusionVector.of(n, two_dim(n, 0, 1)),
    )


def eval_in_fusion(p: IntPoly, n: int) -> FusionVector:
    if n % 2 and p.uses_x():
        raise ValueError(f"x is not a generator for odd n={n}")
    a, b, c = _generators(n)
    powers = {}

    def power(base, which, e):
        key = (which, e)
        if key not in powers:
            powers[key] = ring_pow(base, e)
        return powers[key]

    total = FusionVector(n)
    for (ex, ey, ez), coeff in p.terms.items():
        term = ring_mul(ring_mul(power(a, "a", ex), power(b, "b", ey)), power(c, "c", ez))
        total = total + term * coeff
    return total


def basis_family(n: int) -> list[IntPoly]:
    """The monomials claimed to map onto a Z-basis of r(H_{2n^2})."""
    if n % 2:
        family = [Y ** k for k in range(2 * n)]
        family += [Z ** i * Y ** j for i in range(1, (n - 1) // 2 + 1) for j in range(n)]
    else:
        family = [X ** i * Y ** j for i in range(n) for j in (0, 1)]
        family += [Z ** i * Y ** j for i in range(1, n // 2) for j in range(n)]
        family += [Z ** (n // 2) * Y ** j for j in range(n // 2)]
    return family


def basis_matrix(n: int) -> list[list[int]]:
    """Rows: family members; columns: simple classes in label order."""
    labels = simple_labels(n)
    return [[eval_in_fusion(p, n)[lab] for lab in labels] for p in basis_family(n)]


def verify_presentation(n: int) -> VerificationReport:
    report = VerificationReport(f"presentation of r(H_{{2*{n}^2}})")

    def vanish(name, polys):
        for p in polys:
            value = eval_in_fusion(p, n)
            if not value.is_zero():
                report.add(name, False, f"{p} -> {value}", len(polys))
                return
        report.add(name, True, None, len(polys))

    relations = presentation_relations(n)
    vanish("generators of the relation ideal map to 0", relations)
    if n in WORKED_EXAMPLES:
        examples = [parse_poly(s) for s in WORKED_EXAMPLES[n]]
        vanish("worked-example relations map to 0", examples)
        ours = [normalize(p, n) for p in relations]
        theirs = [normalize(p, n) for p in examples]
        diff = next((f"{a} vs {b}" for a, b in zip(ours, theirs) if a != b), None)
        report.add("generators agree with the worked example after reduction",
                   diff is None and len(ours) == len(theirs), diff, len(ours))
    if n % 2 == 0:
        vanish("y^n - 1 maps to 0", [Y ** n - 1])
    else:
        vanish("Fibonacci identity maps to 0", [identity_relation(n)])
        same = relations[-1] == identity_relation(n)
        report.add("term-by-term relation equals the Fibonacci identity", same,
                   None if same else str(relations[-1] - identity_relation(n)), 1)

    matrix = basis_matrix(n)
    size = label_count(n)
    square = len(matrix) == size
    det = integer_determinant(matrix) if square else None
    report.add("basis family is square", square, None if square else len(matrix), 1)
    report.add("basis determinant is +-1", det in (1, -1), None if det in (1, -1) else det, 1)

    bad = None
    for m in range(max(n - 2, 0)):
        got = eval_in_fusion(s0_expansion(n, m), n)
        if got != FusionVector.of(n, TwoDim(0, m + 2)):
            bad = f"m={m}: {got}"
            break
    report.add("[S_{0,m+2}] expansion", bad is None, bad, max(n - 2, 0))

    bad = None
    c_b = [eval_in_fusion(Z * Y ** j, n) for j in range(n)]
    for j, value in enumerate(c_b):
        if value != FusionVector.of(n, two_dim(n, j, j + 1)):
            bad = f"j={j}: {value}"
            break
    report.add("c b^j = [S_{j,j+1}]", bad is None, bad, n)

    if n % 2:
        flipped = Z ** 2 + Y ** (n + 1) + Y
        if eval_in_fusion(flipped, n) != FusionVector.of(n, TwoDim(0, 2)):
            report.notes.append(
                f"c^2 + b^(n+1) + b evaluates to {eval_in_fusion(flipped, n)}, not [S_{{0,2}}]; "
                "c^2 - b^(n+1) - b is the correct expansion"
            )
    return report
