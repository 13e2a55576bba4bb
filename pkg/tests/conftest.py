import cmath

import pytest

from hfl.cyclotomic import CycNum

ALL_N = list(range(2, 9))


def to_complex(c: CycNum) -> complex:
    """Numerical value of c with zeta = exp(2 pi i / 2n); an independent oracle."""
    zeta = cmath.exp(1j * cmath.pi / c.n)
    return sum(float(a) * zeta ** k for k, a in enumerate(c.coeffs))


@pytest.fixture(params=ALL_N, ids=lambda n: f"n{n}")
def n(request):
    return request.param
