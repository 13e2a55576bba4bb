"""The Hopf algebra H_{2n^2} on its PBW basis {x^i y^j z^e}.

Relations: x^n = y^n = 1, xy = yx, zx = yz, zy = xz and
z^2 = (1/n) sum_{i,j} q^{-ij} x^i y^j, with q = zeta^2 a primitive n-th root
of unity.  Coproduct, counit and antipode are the algebra (resp.
anti-algebra) maps fixed by

    Delta(x) = x (x) x,   Delta(y) = y (x) y,
    Delta(z) = (1/n) sum_{i,j} q^{-ij} x^i z (x) y^j z,
    eps(x) = eps(y) = eps(z) = 1,   S(x) = x^{-1}, S(y) = y^{-1}, S(z) = z.

Elements are sparse dicts from basis triples (i, j, e) to :class:`CycNum`;
tensors key on tuples of such triples.  Products are computed in two passes:
word concatenation (which may produce a pending z^2 in some tensor factor)
followed by one convolution with the z^2 expansion per flagged factor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from numbers import Rational

from .cyclotomic import Accumulator, CycNum, ParameterMismatch
from .report import VerificationReport

__all__ = [
    "AlgElem",
    "HopfAlgebra",
    "TensorElem",
    "algebra",
    "antipode",
    "coproduct",
    "counit",
    "integral",
    "j_element",
    "multiply",
    "r_matrix",
    "tensor",
    "verify_hopf_axioms",
    "verify_integral",
    "verify_quasitriangular",
]


def basis_label(b) -> str:
    i, j, e = b
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    if e:
        parts.append("z")
    return "*".join(parts) or "1"


def _format_terms(items, label) -> str:
    if not items:
        return "0"
    out = []
    for key, c in items:
        word = label(key)
        if c == 1:
            out.append(word)
        elif c.is_rational() and word == "1":
            out.append(str(c))
        else:
            out.append(f"({c})*{word}" if word != "1" else f"({c})")
    return " + ".join(out)


class HopfAlgebra:
    """Structure data of H_{2n^2}.

    ``z_squared`` overrides the expansion of z^2 (a mapping (i, j) -> scalar);
    it exists so the verifiers can be shown to reject a broken structure.
    """

    def __init__(self, n: int, z_squared=None):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"H_2n^2 needs an integer n >= 2, got {n!r}")
        self.n = n
        self.N = 2 * n
        if z_squared is None:
            z_squared = {(i, j): CycNum.root(n, -2 * i * j) * Fraction(1, n)
                         for i in range(n) for j in range(n)}
        t = {}
        for (i, j), c in z_squared.items():
            c = c if isinstance(c, CycNum) else CycNum.rational(n, c)
            if c.n != n:
                raise ParameterMismatch(f"z^2 coefficient built for n={c.n}")
            if c:
                t[(i % n, j % n)] = c
        self.z_squared = t
        # the same data as root terms (i, j, k, r): r * zeta^k * x^i y^j
        self._t_terms = []
        for (i, j), c in sorted(t.items()):
            self._t_terms.extend((i, j, l, Fraction(v, c.den)) for l, v in enumerate(c.num) if v)
        self._delta_cache = {}
        self._antipode_cache = {}

    def __eq__(self, other):
        return isinstance(other, HopfAlgebra) and self.n == other.n and self.z_squared == other.z_squared

    def __hash__(self):
        return hash(self.n)

    def __repr__(self):
        return f"HopfAlgebra(n={self.n})"

    # -- basis and elements -----------------------------------------------

    @property
    def dim(self) -> int:
        return 2 * self.n * self.n

    def basis(self) -> list[tuple[int, int, int]]:
        n = self.n
        return [(i, j, e) for e in (0, 1) for i in range(n) for j in range(n)]

    def element(self, coeffs) -> "AlgElem":
        return AlgElem(self, coeffs)

    def monomial(self, i=0, j=0, e=0, coeff=1) -> "AlgElem":
        return AlgElem(self, {(i, j, e): coeff})

    def zero(self):
        return AlgElem(self, {})

    def one(self):
        return self.monomial()

    def x(self):
        return self.monomial(1, 0, 0)

    def y(self):
        return self.monomial(0, 1, 0)

    def z(self):
        return self.monomial(0, 0, 1)

    def scalar(self, value) -> CycNum:
        if isinstance(value, CycNum):
            if value.n != self.n:
                raise ParameterMismatch(f"scalar built for n={value.n}, algebra has n={self.n}")
            return value
        if isinstance(value, (int, Rational)):
            return CycNum.rational(self.n, value)
        raise TypeError(f"not a scalar: {value!r}")

    def q_power(self, k) -> CycNum:
        """q^k = zeta^(2k)."""
        return CycNum.root(self.n, 2 * k)

    def z_squared_element(self) -> "AlgElem":
        return AlgElem(self, {(i, j, 0): c for (i, j), c in self.z_squared.items()})

    # -- multiplication engine --------------------------------------------

    def _combine(self, terms, order: int) -> dict:
        """Sum of ca*cb*(A*B) over terms (A, B, ca, cb), factorwise products.

        A and B are tuples of ``order`` basis triples.
        """
        n = self.n
        stage = Accumulator(n)
        for ka, kb, ca, cb in terms:
            words = []
            flags = 0
            for pos, ((i, j, e), (k, l, d)) in enumerate(zip(ka, kb)):
                if not e:
                    words.append(((i + k) % n, (j + l) % n, d))
                elif not d:
                    # z x^k y^l = x^l y^k z
                    words.append(((i + l) % n, (j + k) % n, 1))
                else:
                    words.append(((i + l) % n, (j + k) % n, 0))
                    flags |= 1 << pos
            stage.add_product((tuple(words), flags), ca, cb)
        current = stage.result()
        for pos in range(order):
            bit = 1 << pos
            if not any(flags & bit for _, flags in current):
                continue
            acc = Accumulator(n)
            for (words, flags), val in current.items():
                if not flags & bit:
                    acc.add((words, flags), val)
                    continue
                i, j, _ = words[pos]
                head, tail = words[:pos], words[pos + 1:]
                rest = flags & ~bit
                for a, b, k, r in self._t_terms:
                    key = head + (((i + a) % n, (j + b) % n, 0),) + tail
                    acc.add((key, rest), val, k, r)
            current = acc.result()
        return {words: val for (words, _), val in current.items()}

    def multiply(self, a: "AlgElem", b: "AlgElem") -> "AlgElem":
        self._own(a)
        self._own(b)
        terms = (((ka,), (kb,), ca, cb) for ka, ca in a.coeffs.items() for kb, cb in b.coeffs.items())
        out = self._combine(terms, 1)
        return AlgElem(self, {k[0]: v for k, v in out.items()}, _canonical=True)

    def tensor_multiply(self, a: "TensorElem", b: "TensorElem") -> "TensorElem":
        self._own(a)
        self._own(b)
        if a.order != b.order:
            raise ValueError(f"tensor orders differ: {a.order} vs {b.order}")
        terms = ((ka, kb, ca, cb) for ka, ca in a.coeffs.items() for kb, cb in b.coeffs.items())
        return TensorElem(self, a.order, self._combine(terms, a.order), _canonical=True)

    def _own(self, elem):
        if elem.algebra is not self and elem.algebra != self:
            raise ParameterMismatch(f"element of {elem.algebra!r} used with {self!r}")

    # -- coalgebra and antipode -------------------------------------------

    def delta_z(self) -> "TensorElem":
        n = self.n
        coeffs = {}
        for i in range(n):
            for j in range(n):
                coeffs[((i, 0, 1), (0, j, 1))] = self.q_power(-i * j) * Fraction(1, n)
        return TensorElem(self, 2, coeffs)

    def coproduct_basis(self, b) -> "TensorElem":
        cached = self._delta_cache.get(b)
        if cached is not None:
            return cached
        i, j, e = b
        g = TensorElem(self, 2, {((i, j, 0), (i, j, 0)): 1})
        out = self.tensor_multiply(g, self.delta_z()) if e else g
        self._delta_cache[b] = out
        return out

    def coproduct(self, a: "AlgElem") -> "TensorElem":
        self._own(a)
        acc = Accumulator(self.n)
        for b, c in a.coeffs.items():
            for key, v in self.coproduct_basis(b).coeffs.items():
                acc.add_product(key, v, c)
        return TensorElem(self, 2, acc.result(), _canonical=True)

    def counit(self, a: "AlgElem") -> CycNum:
        self._own(a)
        total = CycNum.zero(self.n)
        for c in a.coeffs.values():
            total = total + c
        return total

    def antipode_basis(self, b) -> "AlgElem":
        cached = self._antipode_cache.get(b)
        if cached is not None:
            return cached
        i, j, e = b
        n = self.n
        # S(x^i y^j z^e) = S(z)^e S(y)^j S(x)^i
        s_x = self.monomial(n - 1, 0, 0)
        s_y = self.monomial(0, n - 1, 0)
        out = self.z() if e else self.one()
        for _ in range(j):
            out = self.multiply(out, s_y)
        for _ in range(i):
            out = self.multiply(out, s_x)
        self._antipode_cache[b] = out
        return out

    def antipode(self, a: "AlgElem") -> "AlgElem":
        self._own(a)
        acc = Accumulator(self.n)
        for b, c in a.coeffs.items():
            for key, v in self.antipode_basis(b).coeffs.items():
                acc.add_product(key, v, c)
        return AlgElem(self, acc.result(), _canonical=True)

    def integral(self) -> "AlgElem":
        n = self.n
        xs = AlgElem(self, {(i, 0, 0): 1 for i in range(n)})
        ys = AlgElem(self, {(0, j, 0): 1 for j in range(n)})
        return xs * ys * (self.one() + self.z())


class AlgElem:
    """sum c_{ije} x^i y^j z^e, zero coefficients dropped."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: HopfAlgebra, coeffs, _canonical=False):
        self.algebra = algebra
        if _canonical:
            self.coeffs = coeffs
            return
        n = algebra.n
        out = {}
        for (i, j, e), c in dict(coeffs).items():
            if e not in (0, 1):
                raise ValueError(f"z exponent must be 0 or 1, got {e}")
            key = (i % n, j % n, e)
            c = algebra.scalar(c)
            if key in out:
                c = out[key] + c
            out[key] = c
        self.coeffs = {k: v for k, v in out.items() if v}

    @property
    def n(self) -> int:
        return self.algebra.n

    def __getitem__(self, key) -> CycNum:
        return self.coeffs.get(key, CycNum.zero(self.n))

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lin(self, other, sign):
        if not isinstance(other, AlgElem):
            if isinstance(other, (int, Rational, CycNum)):
                other = self.algebra.one() * other
            else:
                return NotImplemented
        self.algebra._own(other)
        acc = Accumulator(self.n)
        for k, v in self.coeffs.items():
            acc.add(k, v)
        for k, v in other.coeffs.items():
            acc.add(k, v, 0, sign)
        return AlgElem(self.algebra, acc.result(), _canonical=True)

    def __add__(self, other):
        return self._lin(other, 1)

    def __radd__(self, other):
        return self._lin(other, 1)

    def __sub__(self, other):
        return self._lin(other, -1)

    def __rsub__(self, other):
        return (-self)._lin(other, 1)

    def __neg__(self):
        return AlgElem(self.algebra, {k: -v for k, v in self.coeffs.items()}, _canonical=True)

    def scale(self, c) -> "AlgElem":
        c = self.algebra.scalar(c)
        if not c:
            return self.algebra.zero()
        return AlgElem(self.algebra, {k: v * c for k, v in self.coeffs.items()}, _canonical=True)

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Rational, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.algebra == other.algebra and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational, CycNum)):
            return self == self.algebra.one() * other
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"AlgElem(n={self.n}, {self})"

    def __str__(self):
        return _format_terms(sorted(self.coeffs.items(), key=lambda kv: (kv[0][2], kv[0])), basis_label)


class TensorElem:
    """An element of H^{(x) order}; keys are tuples of basis triples."""

    __slots__ = ("algebra", "order", "coeffs")

    def __init__(self, algebra: HopfAlgebra, order: int, coeffs, _canonical=False):
        self.algebra = algebra
        self.order = order
        if _canonical:
            self.coeffs = coeffs
            return
        n = algebra.n
        out = {}
        for key, c in dict(coeffs).items():
            if len(key) != order:
                raise ValueError(f"key {key} does not have {order} factors")
            key = tuple((i % n, j % n, e) for i, j, e in key)
            c = algebra.scalar(c)
            if key in out:
                c = out[key] + c
            out[key] = c
        self.coeffs = {k: v for k, v in out.items() if v}

    @property
    def n(self) -> int:
        return self.algebra.n

    def __len__(self):
        return len(self.coeffs)

    def _lin(self, other, sign):
        if not isinstance(other, TensorElem):
            return NotImplemented
        self.algebra._own(other)
        if other.order != self.order:
            raise ValueError("tensor orders differ")
        acc = Accumulator(self.n)
        for k, v in self.coeffs.items():
            acc.add(k, v)
        for k, v in other.coeffs.items():
            acc.add(k, v, 0, sign)
        return TensorElem(self.algebra, self.order, acc.result(), _canonical=True)

    def __add__(self, other):
        return self._lin(other, 1)

    def __sub__(self, other):
        return self._lin(other, -1)

    def __neg__(self):
        return TensorElem(self.algebra, self.order, {k: -v for k, v in self.coeffs.items()}, _canonical=True)

    def scale(self, c) -> "TensorElem":
        c = self.algebra.scalar(c)
        return TensorElem(self.algebra, self.order, {k: v * c for k, v in self.coeffs.items() if c},
                          _canonical=True)

    def __mul__(self, other):
        if isinstance(other, TensorElem):
            return self.algebra.tensor_multiply(self, other)
        if isinstance(other, (int, Rational, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, TensorElem):
            return self.algebra == other.algebra and self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"TensorElem(n={self.n}, order={self.order}, {self})"

    def __str__(self):
        return _format_terms(sorted(self.coeffs.items()),
                             lambda key: " (x) ".join(basis_label(b) for b in key))

    # -- structural maps ----------------------------------------------------

    def permute(self, perm) -> "TensorElem":
        """Factor ``perm[k]`` of the input becomes factor k of the output."""
        return TensorElem(self.algebra, self.order,
                          {tuple(key[p] for p in perm): v for key, v in self.coeffs.items()}, _canonical=True)

    def flip(self) -> "TensorElem":
        if self.order != 2:
            raise ValueError("flip needs a 2-fold tensor")
        return self.permute((1, 0))

    def apply(self, pos: int, fn) -> "TensorElem":
        """Replace factor ``pos`` by fn(basis), an AlgElem or TensorElem."""
        acc = Accumulator(self.n)
        width = None
        for key, c in self.coeffs.items():
            image = fn(key[pos])
            if isinstance(image, AlgElem):
                items = (((k,), v) for k, v in image.coeffs.items())
                width = 1
            else:
                items = image.coeffs.items()
                width = image.order
            head, tail = key[:pos], key[pos + 1:]
            for sub, v in items:
                acc.add_product(head + tuple(sub) + tail, c, v)
        if width is None:
            width = 1
        return TensorElem(self.algebra, self.order - 1 + width, acc.result(), _canonical=True)

    def counit_at(self, pos: int) -> "TensorElem | AlgElem":
        """Apply eps to factor ``pos``."""
        acc = Accumulator(self.n)
        for key, c in self.coeffs.items():
            acc.add(key[:pos] + key[pos + 1:], c)
        out = acc.result()
        if self.order == 2:
            return AlgElem(self.algebra, {k[0]: v for k, v in out.items()}, _canonical=True)
        return TensorElem(self.algebra, self.order - 1, out, _canonical=True)

    def multiply_out(self) -> AlgElem:
        """m: a (x) b -> ab, for a 2-fold tensor."""
        if self.order != 2:
            raise ValueError("multiply_out needs a 2-fold tensor")
        alg = self.algebra
        one = CycNum.one(self.n)
        terms = (((u,), (v,), c, one) for (u, v), c in self.coeffs.items())
        out = alg._combine(terms, 1)
        return AlgElem(alg, {k[0]: v for k, v in out.items()}, _canonical=True)


def tensor(*factors: AlgElem) -> TensorElem:
    """Outer product a_1 (x) ... (x) a_k."""
    alg = factors[0].algebra
    items = [((), CycNum.one(alg.n))]
    for f in factors:
        alg._own(f)
        acc = Accumulator(alg.n)
        for key, c in items:
            for b, v in f.coeffs.items():
                acc.add_product(key + (b,), c, v)
        items = list(acc.result().items())
    return TensorElem(alg, len(factors), dict(items), _canonical=True)


# -- module-level API ---------------------------------------------------------


@lru_cache(maxsize=None)
def _standard(n: int) -> HopfAlgebra:
    return HopfAlgebra(n)


def algebra(n) -> HopfAlgebra:
    """The (cached) standard H_{2n^2}; passes HopfAlgebra instances through."""
    if isinstance(n, HopfAlgebra):
        return n
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"H_2n^2 needs an integer n >= 2, got {n!r}")
    return _standard(n)


def multiply(a: AlgElem, b: AlgElem) -> AlgElem:
    return a.algebra.multiply(a, b)


def coproduct(a: AlgElem) -> TensorElem:
    return a.algebra.coproduct(a)


def counit(a: AlgElem) -> CycNum:
    return a.algebra.counit(a)


def antipode(a: AlgElem) -> AlgElem:
    return a.algebra.antipode(a)


def integral(n) -> AlgElem:
    return algebra(n).integral()


def r_matrix(n) -> TensorElem:
    """R = sum_i e_i (x) y^{-i} = (1/n) sum_{i,j} q^{-ij} x^j (x) y^{-i}."""
    H = algebra(n)
    n = H.n
    return TensorElem(H, 2, {((j, 0, 0), (0, -i, 0)): H.q_power(-i * j) * Fraction(1, n)
                             for i in range(n) for j in range(n)})


def j_element(n) -> TensorElem:
    """J = (1/n) sum_{i,j} q^{-ij} x^j (x) y^i."""
    H = algebra(n)
    n = H.n
    return TensorElem(H, 2, {((j, 0, 0), (0, i, 0)): H.q_power(-i * j) * Fraction(1, n)
                             for i in range(n) for j in range(n)})


def _first_failure(cases, check):
    count = 0
    for case in cases:
        count += 1
        if not check(case):
            return count, case
    return count, None


def verify_hopf_axioms(n) -> VerificationReport:
    """Exhaustive check of the bialgebra and antipode axioms on the basis."""
    H = algebra(n)
    report = VerificationReport(f"Hopf axioms of H_{{2*{H.n}^2}}")
    basis = H.basis()
    one2 = TensorElem(H, 2, {((0, 0, 0), (0, 0, 0)): 1})

    def coassoc(b):
        d = H.coproduct_basis(b)
        return d.apply(0, H.coproduct_basis) == d.apply(1, H.coproduct_basis)

    count, bad = _first_failure(basis, coassoc)
    report.add("coassociativity", bad is None, bad and basis_label(bad), count)

    def counit_left(b):
        return H.coproduct_basis(b).counit_at(0) == H.monomial(*b)

    def counit_right(b):
        return H.coproduct_basis(b).counit_at(1) == H.monomial(*b)

    for name, fn in (("counit_left", counit_left), ("counit_right", counit_right)):
        count, bad = _first_failure(basis, fn)
        report.add(name, bad is None, bad and basis_label(bad), count)

    # Delta and eps respect the defining relations
    x, y, z = H.x(), H.y(), H.z()
    dx, dy, dz = H.coproduct(x), H.coproduct(y), H.coproduct(z)
    nn = H.n
    delta_rel = [
        ("x^n = 1", lambda: _tpow(dx, nn, one2) == one2),
        ("y^n = 1", lambda: _tpow(dy, nn, one2) == one2),
        ("xy = yx", lambda: dx * dy == dy * dx),
        ("zx = yz", lambda: dz * dx == dy * dz),
        ("zy = xz", lambda: dz * dy == dx * dz),
        ("z^2 = (1/n) sum q^-ij x^i y^j", lambda: dz * dz == H.coproduct(H.z_squared_element())),
    ]
    count, bad = _first_failure(delta_rel, lambda rel: rel[1]())
    report.add("coproduct_respects_relations", bad is None, bad and bad[0], count)

    ex, ey, ez = H.counit(x), H.counit(y), H.counit(z)
    eps_rel = [
        ("x^n = 1", ex ** nn == 1),
        ("y^n = 1", ey ** nn == 1),
        ("zx = yz", ez * ex == ey * ez),
        ("zy = xz", ez * ey == ex * ez),
        ("z^2", ez * ez == H.counit(H.z_squared_element())),
    ]
    count, bad = _first_failure(eps_rel, lambda rel: rel[1])
    report.add("counit_respects_relations", bad is None, bad and bad[0], count)

    sx, sy, sz = H.antipode(x), H.antipode(y), H.antipode(z)
    s_rel = [
        ("x^n = 1", sx ** nn == H.one()),
        ("y^n = 1", sy ** nn == H.one()),
        ("S(x)S(z) = S(z)S(y)", sx * sz == sz * sy),
        ("S(y)S(z) = S(z)S(x)", sy * sz == sz * sx),
        ("S(z)^2 = S(z^2)", sz * sz == H.antipode(H.z_squared_element())),
    ]
    count, bad = _first_failure(s_rel, lambda rel: rel[1])
    report.add("antipode_reverses_relations", bad is None, bad and bad[0], count)

    def antipode_left(b):
        d = H.coproduct_basis(b)
        return d.apply(0, H.antipode_basis).multiply_out() == H.one()

    def antipode_right(b):
        d = H.coproduct_basis(b)
        return d.apply(1, H.antipode_basis).multiply_out() == H.one()

    for name, fn in (("antipode_left", antipode_left), ("antipode_right", antipode_right)):
        count, bad = _first_failure(basis, fn)
        report.add(name, bad is None, bad and basis_label(bad), count)
    return report


def _tpow(t: TensorElem, e: int, one: TensorElem) -> TensorElem:
    out = one
    for _ in range(e):
        out = out * t
    return out


def verify_quasitriangular(n, r: TensorElem | None = None) -> VerificationReport:
    """R-matrix conditions for R (default: the standard R) with J as inverse."""
    H = algebra(n) if r is None else r.algebra
    R = r_matrix(H.n) if r is None else r
    J = j_element(H.n)
    if R.algebra != H or J.algebra != H:
        J = TensorElem(H, 2, J.coeffs)
    report = VerificationReport(f"quasi-triangular structure of H_{{2*{H.n}^2}}")
    one2 = TensorElem(H, 2, {((0, 0, 0), (0, 0, 0)): 1})

    inverse = J * R == one2 and R * J == one2
    report.add("J*R = R*J = 1(x)1", inverse, None if inverse else "J", 2)

    gens = (("x", H.x()), ("y", H.y()), ("z", H.z()))
    count, bad = _first_failure(
        gens, lambda g: H.coproduct(g[1]).flip() == R * H.coproduct(g[1]) * J)
    report.add("(i) Delta'(h) = R Delta(h) R^-1", bad is None, bad and bad[0], count)

    R12 = TensorElem(H, 3, {key + ((0, 0, 0),): v for key, v in R.coeffs.items()}, _canonical=True)
    R23 = TensorElem(H, 3, {((0, 0, 0),) + key: v for key, v in R.coeffs.items()}, _canonical=True)
    R13 = TensorElem(H, 3, {(a, (0, 0, 0), b): v for (a, b), v in R.coeffs.items()}, _canonical=True)
    lhs2 = R.apply(0, H.coproduct_basis)
    ok2 = lhs2 == R13 * R23
    report.add("(ii) (Delta(x)id)(R) = R13 R23", ok2, None if ok2 else _diff_witness(lhs2, R13 * R23), 1)
    lhs3 = R.apply(1, H.coproduct_basis)
    ok3 = lhs3 == R13 * R12
    report.add("(iii) (id(x)Delta)(R) = R13 R12", ok3, None if ok3 else _diff_witness(lhs3, R13 * R12), 1)
    return report


def _diff_witness(a: TensorElem, b: TensorElem) -> str:
    diff = a - b
    key = min(diff.coeffs)
    return " (x) ".join(basis_label(k) for k in key)


def verify_integral(n) -> VerificationReport:
    """h*L = eps(h)*L and L*h = eps(h)*L for every basis h."""
    H = algebra(n)
    L = H.integral()
    report = VerificationReport(f"integral of H_{{2*{H.n}^2}}")
    basis = H.basis()
    count, bad = _first_failure(basis, lambda b: H.monomial(*b) * L == L)
    report.add("left integral", bad is None, bad and basis_label(bad), count)
    count, bad = _first_failure(basis, lambda b: L * H.monomial(*b) == L)
    report.add("right integral", bad is None, bad and basis_label(bad), count)
    eps = H.counit(L)
    report.add("eps(integral) = 2n^2 != 0", eps == 2 * H.n * H.n, None if eps == 2 * H.n * H.n else str(eps), 1)
    return report


def all_basis_pairs(H: HopfAlgebra):
    return product(H.basis(), repeat=2)
