"""Simple H_{2n^2}-modules as explicit matrices, tensor products, and the decomposition oracle.

On S_m (0 <= m < 2n):      x, y -> q^m,   z -> sigma(m) s_m
with sigma(m) = 1 for m < n and -1 otherwise, and s_m the square root of
q^{m^2} from :func:`hfl.cyclotomic.half_root_exponent`.
On S_{i,j} (i < j):       x -> diag(q^i, q^j), y -> diag(q^j, q^i),
                          z -> [[0, q^{ij}], [1, 0]].

A tensor product M (x) N acts through the coproduct.  ``decompose`` reads
off multiplicities as trace(rho(E)) / dim for every primitive central
idempotent E; it knows nothing about the closed-form fusion rules.
"""

from __future__ import annotations

from functools import lru_cache

from .center import OneDimBlock, TwoDimBlock, primitive_central_idempotents
from .cyclotomic import CycNum, ParameterMismatch, half_root_exponent
from .fourier import to_fourier
from .hopf import AlgElem, algebra
from .labels import (
    FusionVector,
    InvalidLabel,
    OneDim,
    SimpleLabel,
    TwoDim,
    label_count,
    one_dim,
    parse_label,
    simple_labels,
    two_dim,
)
from .linalg import identity, kron, mat_add, mat_mul, mat_pow, mat_scale, trace, zeros
from .report import VerificationReport

__all__ = [
    "InvalidLabel",
    "ModuleAxiomError",
    "OneDim",
    "Rep",
    "SimpleLabel",
    "TensorRep",
    "TwoDim",
    "block_label",
    "build_simple",
    "decompose",
    "label_count",
    "one_dim",
    "parse_label",
    "rep_of_element",
    "sigma",
    "simple_labels",
    "tensor_rep",
    "two_dim",
    "verify_module",
    "verify_simples",
]


class ModuleAxiomError(ArithmeticError):
    """A trace multiplicity came out non-integral or negative."""


def sigma(n: int, m: int) -> int:
    return 1 if m % (2 * n) < n else -1


class Rep:
    """Matrices rho(x), rho(y), rho(z) of a finite-dimensional module."""

    def __init__(self, n: int, x, y, z, label: SimpleLabel | None = None):
        self.n = n
        self.x, self.y, self.z = x, y, z
        self.label = label
        self._basis_cache = {}

    @property
    def dim(self) -> int:
        return len(self.x)

    @property
    def mats(self):
        return {"x": self.x, "y": self.y, "z": self.z}

    def of_basis(self, b):
        """rho(x^i y^j z^e) = rho(x)^i rho(y)^j rho(z)^e."""
        hit = self._basis_cache.get(b)
        if hit is None:
            i, j, e = b
            hit = mat_mul(mat_pow(self.x, i), mat_pow(self.y, j))
            if e:
                hit = mat_mul(hit, self.z)
            self._basis_cache[b] = hit
        return hit

    def __repr__(self):
        name = str(self.label) if self.label is not None else "module"
        return f"Rep({name}, n={self.n}, dim={self.dim})"


class TensorRep(Rep):
    def __init__(self, n, x, y, z, factors):
        super().__init__(n, x, y, z)
        self.factors = tuple(factors)

    def __repr__(self):
        return f"TensorRep({' (x) '.join(map(repr, self.factors))})"


def _scalar(value):
    return ((value,),)


@lru_cache(maxsize=None)
def build_simple(n: int, label: SimpleLabel) -> Rep:
    if isinstance(label, str):
        label = parse_label(label)
    label.validate(n)
    q = lambda k: CycNum.root(n, 2 * k)  # noqa: E731
    if isinstance(label, OneDim):
        m = label.m
        zeta = CycNum.root(n, half_root_exponent(n) * m * m) * sigma(n, m)
        return Rep(n, _scalar(q(m)), _scalar(q(m)), _scalar(zeta), label)
    i, j = label.i, label.j
    zero, one = CycNum.zero(n), CycNum.one(n)
    return Rep(
        n,
        ((q(i), zero), (zero, q(j))),
        ((q(j), zero), (zero, q(i))),
        ((zero, q(i * j)), (one, zero)),
        label,
    )


def rep_of_element(rep: Rep, a: AlgElem):
    if a.n != rep.n:
        raise ParameterMismatch(f"element for n={a.n} acting on a module for n={rep.n}")
    out = zeros(rep.n, rep.dim)
    for b, c in a.coeffs.items():
        out = mat_add(out, mat_scale(rep.of_basis(b), c))
    return out


def tensor_rep(rep_a: Rep, rep_b: Rep) -> TensorRep:
    """h acts on M (x) N by sum h_(1) (x) h_(2); only Delta(z) needs expanding."""
    if rep_a.n != rep_b.n:
        raise ParameterMismatch(f"modules for n={rep_a.n} and n={rep_b.n}")
    n = rep_a.n
    H = algebra(n)
    # group Delta(z) by its left tensor factor: sum_u rho(u) (x) rho(sum_v c_uv v)
    right = {}
    for (u, v), c in H.coproduct(H.z()).coeffs.items():
        right.setdefault(u, {})[v] = c
    z = zeros(n, rep_a.dim * rep_b.dim)
    for u, vs in right.items():
        rb = rep_of_element(rep_b, AlgElem(H, vs, _canonical=True))
        z = mat_add(z, kron(rep_a.of_basis(u), rb))
    return TensorRep(n, kron(rep_a.x, rep_b.x), kron(rep_a.y, rep_b.y), z, (rep_a, rep_b))


def block_label(n: int, kind) -> SimpleLabel:
    """The simple module on which a primitive central idempotent acts as 1."""
    if isinstance(kind, OneDimBlock):
        return OneDim(kind.i if kind.sign > 0 else kind.i + n)
    if isinstance(kind, TwoDimBlock):
        return TwoDim(kind.i, kind.j)
    raise TypeError(f"not a block kind: {kind!r}")


@lru_cache(maxsize=None)
def _blocks(n: int):
    """(label, Fourier coordinates) for every primitive central idempotent."""
    return tuple((block_label(n, c.kind), to_fourier(c.element).coeffs) for c in primitive_central_idempotents(n))


@lru_cache(maxsize=None)
def _q_log(n: int) -> dict:
    return {CycNum.root(n, 2 * k): k for k in range(n)}


def _diagonal_weights(rep: Rep):
    """Exponents (a_k, b_k) with rho(x), rho(y) = diag(q^a_k), diag(q^b_k), or None."""
    logs = _q_log(rep.n)
    out = []
    for k in range(rep.dim):
        for mat in (rep.x, rep.y):
            if any(v for c, v in enumerate(mat[k]) if c != k):
                return None
        a, b = logs.get(rep.x[k][k]), logs.get(rep.y[k][k])
        if a is None or b is None:
            return None
        out.append((a, b))
    return out


def _block_traces(rep: Rep):
    n = rep.n
    weights = _diagonal_weights(rep)
    if weights is None:
        # general path: rho(E) from the PBW expansion of E
        for c in primitive_central_idempotents(n):
            yield block_label(n, c.kind), trace(rep_of_element(rep, c.element))
        return
    # rho(e_a f_b) projects onto the weight-(a, b) coordinates, so
    # trace rho(e_a f_b z^e) = sum of rho(z^e)_kk over those coordinates
    zero = CycNum.zero(n)
    for label, coords in _blocks(n):
        t = zero
        for k, (a, b) in enumerate(weights):
            c0 = coords.get((a, b, 0))
            if c0 is not None:
                t = t + c0
            c1 = coords.get((a, b, 1))
            if c1 is not None and rep.z[k][k]:
                t = t + c1 * rep.z[k][k]
        yield label, t


def decompose(rep: Rep) -> FusionVector:
    """Multiplicity of each simple S in rep: trace(rho(E_S)) / dim S."""
    out = {}
    for label, t in _block_traces(rep):
        if not t.is_rational():
            raise ModuleAxiomError(f"trace of the {label} idempotent is irrational: {t}")
        mult = t.to_fraction() / label.dim
        if mult.denominator != 1 or mult < 0:
            raise ModuleAxiomError(f"multiplicity of {label} is {mult}")
        if mult:
            out[label] = int(mult)
    vec = FusionVector(rep.n, out)
    if vec.dimension() != rep.dim:
        raise ModuleAxiomError(f"multiplicities {vec} do not add up to dim {rep.dim}")
    return vec


def verify_module(rep: Rep) -> VerificationReport:
    """Defining relations of H_{2n^2} hold for the matrices of rep."""
    n, d = rep.n, rep.dim
    H = algebra(n)
    one = identity(n, d)
    x, y, z = rep.x, rep.y, rep.z
    report = VerificationReport(f"module axioms for {rep!r}")
    relations = [
        ("x^n = 1", mat_pow(x, n) == one),
        ("y^n = 1", mat_pow(y, n) == one),
        ("xy = yx", mat_mul(x, y) == mat_mul(y, x)),
        ("zx = yz", mat_mul(z, x) == mat_mul(y, z)),
        ("zy = xz", mat_mul(z, y) == mat_mul(x, z)),
        ("z^2 = (1/n) sum q^-ij x^i y^j", mat_mul(z, z) == rep_of_element(rep, H.z_squared_element())),
    ]
    for name, ok in relations:
        report.add(name, ok, None if ok else name, 1)
    return report


def verify_simples(n: int) -> VerificationReport:
    """Module axioms, irreducibility, completeness and the sum-of-squares count."""
    labels = simple_labels(n)
    report = VerificationReport(f"simple modules of H_{{2*{n}^2}}")
    bad = None
    for label in labels:
        if not verify_module(build_simple(n, label)).ok:
            bad = label
            break
    report.add("module axioms", bad is None, bad, len(labels))

    prints = {}
    bad = None
    for label in labels:
        vec = decompose(build_simple(n, label))
        if vec != FusionVector.of(n, label):
            bad = f"{label} -> {vec}"
            break
        prints[label] = vec
    report.add("each simple decomposes to itself", bad is None, bad, len(labels))
    distinct = len(set(prints.values())) == len(labels)
    report.add("pairwise non-isomorphic", distinct, None, len(labels))
    count = len(labels) == label_count(n) == len(primitive_central_idempotents(n))
    report.add("count = 2n + n(n-1)/2 = number of blocks", count, len(labels), 1)
    squares = sum(build_simple(n, lab).dim ** 2 for lab in labels)
    report.add("sum of dim^2 = 2n^2", squares == 2 * n * n, squares, 1)

    total = 0
    for a in labels:
        for b in labels:
            total += 1
            ab = decompose(tensor_rep(build_simple(n, a), build_simple(n, b)))
            ba = decompose(tensor_rep(build_simple(n, b), build_simple(n, a)))
            if ab != ba:
                report.add("M (x) N = N (x) M", False, f"{a} (x) {b}: {ab} vs {ba}", total)
                return report
    report.add("M (x) N = N (x) M", True, None, total)
    return report
