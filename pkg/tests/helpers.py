"""Shared strategies and random generators for the test suite."""

import numpy as np
from hypothesis import strategies as st

from bicomplex import BCMatrix, BCVector, BicomplexNumber, HyperbolicNumber

floats = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, floats, floats)
bicomplex = st.builds(BicomplexNumber, cplx, cplx)
hyperbolic = st.builds(HyperbolicNumber, floats, floats)
unit_disk = st.builds(
    lambda r, t: complex(r * np.exp(2j * np.pi * t)),
    st.floats(min_value=0, max_value=0.9),
    st.floats(min_value=0, max_value=1),
)


def random_complex(rng, *shape):
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_bc(rng) -> BicomplexNumber:
    a, b = random_complex(rng, 2)
    return BicomplexNumber(complex(a), complex(b))


def random_matrix(rng, n, m=None) -> BCMatrix:
    m = n if m is None else m
    return BCMatrix(random_complex(rng, n, m), random_complex(rng, n, m))


def random_vector(rng, n) -> BCVector:
    return BCVector(random_complex(rng, n), random_complex(rng, n))


def random_disk(rng, radius=0.9):
    r = radius * np.sqrt(rng.uniform())
    return complex(r * np.exp(2j * np.pi * rng.uniform()))


def cart(z: BicomplexNumber):
    return (z.z1, z.z2)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LOG: list[str] = []


def verdict(number: int, ok: bool, detail: str) -> bool:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LOG.append(line)
    print(line)
    return ok
