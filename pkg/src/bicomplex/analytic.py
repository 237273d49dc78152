"""Holomorphic bicomplex functions as truncated power series and the Hardy space.

A coefficient function ``f(Z) = sum f_n Z^n`` is stored as the two complex
coefficient sequences of its idempotent components, so that
``f(Z) = G1(b1) e + G2(b2) e_dag``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

from .errors import NonFinite, OutsideDomain
from .scalar import J, BicomplexNumber, HyperbolicNumber, euclidean_norm

DEFAULT_TRUNCATION = 64
CR_STEP = 1e-4

I_UNIT = BicomplexNumber(1j, 0j)


class CoefficientFunction:
    __slots__ = ("_c1", "_c2")

    def __init__(self, c1, c2):
        c1 = np.array(c1, dtype=complex).reshape(-1)
        c2 = np.array(c2, dtype=complex).reshape(-1)
        n = max(c1.size, c2.size, 1)
        c1 = np.pad(c1, (0, n - c1.size))
        c2 = np.pad(c2, (0, n - c2.size))
        if not (np.all(np.isfinite(c1)) and np.all(np.isfinite(c2))):
            raise NonFinite("coefficients must be finite")
        c1.setflags(write=False)
        c2.setflags(write=False)
        self._c1 = c1
        self._c2 = c2

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> CoefficientFunction:
        coeffs = [BicomplexNumber.coerce(c) for c in coeffs]
        return cls([c.b1 for c in coeffs], [c.b2 for c in coeffs])

    @classmethod
    def monomial(cls, n: int, value=1) -> CoefficientFunction:
        value = BicomplexNumber.coerce(value)
        c = np.zeros(n + 1, dtype=complex)
        c1 = c.copy()
        c1[n] = value.b1
        c2 = c.copy()
        c2[n] = value.b2
        return cls(c1, c2)

    @classmethod
    def constant(cls, value) -> CoefficientFunction:
        return cls.monomial(0, value)

    @property
    def c1(self) -> np.ndarray:
        return self._c1

    @property
    def c2(self) -> np.ndarray:
        return self._c2

    @property
    def N(self) -> int:
        return self._c1.size

    @property
    def coeffs(self) -> list[BicomplexNumber]:
        return [BicomplexNumber.from_idempotent(a, b) for a, b in zip(self._c1, self._c2)]

    def padded(self, n: int) -> CoefficientFunction:
        if n <= self.N:
            return CoefficientFunction(self._c1[:n], self._c2[:n])
        return CoefficientFunction(
            np.pad(self._c1, (0, n - self.N)), np.pad(self._c2, (0, n - self.N))
        )

    def __call__(self, z: BicomplexNumber) -> BicomplexNumber:
        return eval_at(self, z)

    def __add__(self, other: CoefficientFunction) -> CoefficientFunction:
        n = max(self.N, other.N)
        a, b = self.padded(n), other.padded(n)
        return CoefficientFunction(a.c1 + b.c1, a.c2 + b.c2)

    def __sub__(self, other: CoefficientFunction) -> CoefficientFunction:
        n = max(self.N, other.N)
        a, b = self.padded(n), other.padded(n)
        return CoefficientFunction(a.c1 - b.c1, a.c2 - b.c2)

    def __mul__(self, value) -> CoefficientFunction:
        if isinstance(value, CoefficientFunction):
            return series_multiply(self, value)
        value = BicomplexNumber.coerce(value)
        return CoefficientFunction(value.b1 * self._c1, value.b2 * self._c2)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"CoefficientFunction(N={self.N})"


def series_multiply(f: CoefficientFunction, g: CoefficientFunction, n: int | None = None) -> CoefficientFunction:
    """Cauchy product of two series, truncated to ``n`` terms (full length by default)."""
    full = f.N + g.N - 1
    n = full if n is None else n
    c1 = np.convolve(f.c1, g.c1)[:n]
    c2 = np.convolve(f.c2, g.c2)[:n]
    return CoefficientFunction(c1, c2).padded(n)


def _polyval(coeffs: np.ndarray, x: complex) -> complex:
    acc = 0j
    for c in coeffs[::-1]:
        acc = acc * x + c
    return acc


def eval_at(f: CoefficientFunction, z: BicomplexNumber) -> BicomplexNumber:
    z = BicomplexNumber.coerce(z)
    return BicomplexNumber.from_idempotent(_polyval(f.c1, z.b1), _polyval(f.c2, z.b2))


def derivative(f: CoefficientFunction) -> CoefficientFunction:
    if f.N == 1:
        return CoefficientFunction([0], [0])
    n = np.arange(1, f.N)
    return CoefficientFunction(n * f.c1[1:], n * f.c2[1:])


@dataclass(frozen=True)
class CRResidual:
    """Finite-difference holomorphy diagnostics at one point.

    ``d_dagger``, ``d_bar`` and ``d_star`` are the three operators that vanish
    on holomorphic functions; ``d_z`` is the complex derivative.
    ``antiholomorphic`` holds the conjugate Wirtinger derivatives of the
    cartesian parts ``f1``, ``f2`` with respect to ``conj(z1)`` and
    ``conj(z2)``; ``cr_system`` holds ``f1_z1 - f2_z2`` and ``f1_z2 + f2_z1``.
    """

    d_dagger: BicomplexNumber
    d_bar: BicomplexNumber
    d_star: BicomplexNumber
    d_z: BicomplexNumber
    antiholomorphic: tuple[complex, complex, complex, complex]
    cr_system: tuple[complex, complex]

    def max_residual(self) -> float:
        values = [euclidean_norm(x) for x in (self.d_dagger, self.d_bar, self.d_star)]
        values += [abs(x) for x in self.antiholomorphic + self.cr_system]
        return max(values)


def cr_residual(
    f: Union[CoefficientFunction, Callable[[BicomplexNumber], BicomplexNumber]],
    z: BicomplexNumber,
    step: float = CR_STEP,
) -> CRResidual:
    func = f
    z = BicomplexNumber.coerce(z)
    h = step
    directions = [
        BicomplexNumber(h, 0j),
        BicomplexNumber(1j * h, 0j),
        BicomplexNumber(0j, h),
        BicomplexNumber(0j, 1j * h),
    ]
    dx1, dy1, dx2, dy2 = [(func(z + d) - func(z - d)) * (1 / (2 * h)) for d in directions]
    half = 0.5
    dz1 = (dx1 - I_UNIT * dy1) * half
    dzc1 = (dx1 + I_UNIT * dy1) * half
    dz2 = (dx2 - I_UNIT * dy2) * half
    dzc2 = (dx2 + I_UNIT * dy2) * half
    return CRResidual(
        d_dagger=(dz1 + J * dz2) * half,
        d_bar=(dzc1 - J * dzc2) * half,
        d_star=(dzc1 + J * dzc2) * half,
        d_z=(dz1 - J * dz2) * half,
        antiholomorphic=(dzc1.z1, dzc2.z1, dzc1.z2, dzc2.z2),
        cr_system=(dz1.z1 - dz2.z2, dz2.z1 + dz1.z2),
    )


def hardy_inner(f: CoefficientFunction, g: CoefficientFunction) -> BicomplexNumber:
    """``sum_n f_n g_n*`` over the common (zero-padded) truncation."""
    n = max(f.N, g.N)
    f, g = f.padded(n), g.padded(n)
    return BicomplexNumber.from_idempotent(np.vdot(g.c1, f.c1), np.vdot(g.c2, f.c2))


def hardy_dnorm(f: CoefficientFunction) -> HyperbolicNumber:
    return HyperbolicNumber.from_idempotent(
        float(np.linalg.norm(f.c1)), float(np.linalg.norm(f.c2))
    )


def geometric_tail_bound(r: float, n: int) -> float:
    """``sum_{m >= n} r^(2m)`` for a radius ``r < 1``."""
    if r >= 1:
        return math.inf
    return r ** (2 * n) / (1 - r * r)


@dataclass(frozen=True)
class DiskPoint:
    """A bicomplex point whose idempotent components lie in the open unit disk."""

    z: BicomplexNumber

    def __post_init__(self):
        z = BicomplexNumber.coerce(self.z)
        if abs(z.b1) >= 1 or abs(z.b2) >= 1:
            raise OutsideDomain(
                f"idempotent components {abs(z.b1):.6g}, {abs(z.b2):.6g} must be < 1"
            )
        object.__setattr__(self, "z", z)

    @classmethod
    def from_idempotent(cls, b1: complex, b2: complex) -> DiskPoint:
        return cls(BicomplexNumber.from_idempotent(b1, b2))

    @classmethod
    def coerce(cls, x) -> DiskPoint:
        return x if isinstance(x, DiskPoint) else cls(BicomplexNumber.coerce(x))

    @property
    def radius(self) -> float:
        return max(abs(self.z.b1), abs(self.z.b2))


def szego_kernel(a, n: int = DEFAULT_TRUNCATION) -> CoefficientFunction:
    """Coefficients ``(a*)^m`` of ``1 / (1 - Z a*)``, ``m < n``."""
    a = DiskPoint.coerce(a).z
    m = np.arange(n)
    return CoefficientFunction(np.conj(a.b1) ** m, np.conj(a.b2) ** m)


def reproduce_check(f: CoefficientFunction, a, n: int | None = None) -> BicomplexNumber:
    """``<f, k_a>``, which equals ``f(a)`` for polynomials shorter than the kernel."""
    n = max(f.N, DEFAULT_TRUNCATION) if n is None else n
    return hardy_inner(f, szego_kernel(a, n))
