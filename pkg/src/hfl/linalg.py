"""Small exact linear algebra: CycNum matrices, sparse rank, integer determinants."""

from __future__ import annotations

from .cyclotomic import Accumulator, CycNum

__all__ = [
    "identity",
    "integer_determinant",
    "kron",
    "mat_add",
    "mat_mul",
    "mat_pow",
    "mat_scale",
    "rank",
    "trace",
    "zeros",
]

# Matrices are tuples of row tuples of CycNum.


def zeros(n: int, rows: int, cols: int | None = None):
    z = CycNum.zero(n)
    return tuple((z,) * (rows if cols is None else cols) for _ in range(rows))


def identity(n: int, size: int):
    z, o = CycNum.zero(n), CycNum.one(n)
    return tuple(tuple(o if r == c else z for c in range(size)) for r in range(size))


def mat_mul(a, b):
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            s = None
            for u, v in zip(row, col):
                if u and v:
                    s = u * v if s is None else s + u * v
            new.append(s if s is not None else CycNum.zero(row[0].n))
        out.append(tuple(new))
    return tuple(out)


def mat_add(a, b):
    return tuple(tuple(u + v for u, v in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    return tuple(tuple(u * c for u in row) for row in a)


def mat_pow(a, e: int):
    out = identity(a[0][0].n, len(a))
    for _ in range(e):
        out = mat_mul(out, a)
    return out


def kron(a, b):
    return tuple(
        tuple(u * v for u in ra for v in rb)
        for ra in a for rb in b
    )


def trace(a) -> CycNum:
    s = CycNum.zero(a[0][0].n)
    for k, row in enumerate(a):
        s = s + row[k]
    return s


def rank(rows, n: int) -> int:
    """Rank over Q(zeta_2n) of sparse rows (mappings column -> CycNum).

    Incremental row echelon: each row is reduced against the pivots found
    so far and kept, normalised to a leading 1, if anything survives.
    """
    pivots = []  # (column, row with 1 at column)
    for row in rows:
        row = {k: v for k, v in dict(row).items() if v}
        for col, piv in pivots:
            c = row.get(col)
            if c is None:
                continue
            acc = Accumulator(n)
            for k, v in row.items():
                acc.add(k, v)
            neg = -c
            for k, v in piv.items():
                acc.add_product(k, v, neg)
            row = acc.result()
            if not row:
                break
        if row:
            col = min(row)
            inv = row[col].inverse()
            pivots.append((col, {k: v * inv for k, v in row.items()}))
    return len(pivots)


def integer_determinant(matrix) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    m = [list(map(int, row)) for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[-1][-1] if size else 1
