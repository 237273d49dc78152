"""Inner products, norms, functionals and operators on BC^n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NonFinite, NotPositive, NotSquare, ShapeMismatch
from .matrix import BCMatrix, mat_is_hyperbolic_positive
from .scalar import (
    EPS_REL,
    J,
    ORDER_EPS,
    SQRT2,
    BicomplexNumber,
    HyperbolicNumber,
    euclidean_norm,
    hleq,
    hyperbolic_norm,
)

I_UNIT = BicomplexNumber(1j, 0j)
K_UNIT = BicomplexNumber(0j, 1j)


class BCVector:
    """Vector in BC^n held as its two complex idempotent components."""

    __slots__ = ("_v1", "_v2")

    def __init__(self, v1, v2):
        v1 = np.array(v1, dtype=complex).reshape(-1)
        v2 = np.array(v2, dtype=complex).reshape(-1)
        if v1.shape != v2.shape:
            raise ShapeMismatch(f"component lengths differ: {v1.size} vs {v2.size}")
        if not (np.all(np.isfinite(v1)) and np.all(np.isfinite(v2))):
            raise NonFinite("vector has non-finite entries")
        v1.setflags(write=False)
        v2.setflags(write=False)
        self._v1 = v1
        self._v2 = v2

    @classmethod
    def from_entries(cls, entries: Iterable) -> BCVector:
        entries = [BicomplexNumber.coerce(x) for x in entries]
        return cls([x.b1 for x in entries], [x.b2 for x in entries])

    @classmethod
    def from_cartesian(cls, z1, z2) -> BCVector:
        z1 = np.asarray(z1, dtype=complex)
        z2 = np.asarray(z2, dtype=complex)
        return cls(z1 - 1j * z2, z1 + 1j * z2)

    @classmethod
    def zeros(cls, n: int) -> BCVector:
        return cls(np.zeros(n), np.zeros(n))

    @classmethod
    def basis(cls, n: int, k: int) -> BCVector:
        v = np.zeros(n, dtype=complex)
        v[k] = 1
        return cls(v, v)

    @property
    def v1(self) -> np.ndarray:
        return self._v1

    @property
    def v2(self) -> np.ndarray:
        return self._v2

    def __len__(self) -> int:
        return self._v1.size

    def __getitem__(self, k: int) -> BicomplexNumber:
        return BicomplexNumber.from_idempotent(self._v1[k], self._v2[k])

    def entries(self) -> list[BicomplexNumber]:
        return [self[k] for k in range(len(self))]

    def __add__(self, other: BCVector) -> BCVector:
        _same_length(self, other)
        return BCVector(self._v1 + other._v1, self._v2 + other._v2)

    def __sub__(self, other: BCVector) -> BCVector:
        _same_length(self, other)
        return BCVector(self._v1 - other._v1, self._v2 - other._v2)

    def __neg__(self) -> BCVector:
        return BCVector(-self._v1, -self._v2)

    def __mul__(self, value) -> BCVector:
        value = BicomplexNumber.coerce(value)
        return BCVector(value.b1 * self._v1, value.b2 * self._v2)

    __rmul__ = __mul__

    def star(self) -> BCVector:
        return BCVector(self._v1.conj(), self._v2.conj())

    def as_column(self) -> BCMatrix:
        return BCMatrix(self._v1[:, None], self._v2[:, None])

    def __repr__(self) -> str:
        return f"BCVector(n={len(self)})"


def _same_length(a: BCVector, b: BCVector) -> None:
    if len(a) != len(b):
        raise ShapeMismatch(f"lengths differ: {len(a)} vs {len(b)}")


def inner_canonical(z: BCVector, w: BCVector) -> BicomplexNumber:
    """``sum_k z_k w_k*``; star conjugation is componentwise complex conjugation."""
    _same_length(z, w)
    return BicomplexNumber.from_idempotent(np.vdot(w.v1, z.v1), np.vdot(w.v2, z.v2))


def inner_weighted(
    z: BCVector, w: BCVector, a: BCMatrix, check: bool = True
) -> BicomplexNumber:
    """``z^t A w*`` for a hyperbolic positive weight ``A``."""
    _same_length(z, w)
    if a.shape != (len(z), len(z)):
        raise ShapeMismatch(f"weight of shape {a.shape} for vectors of length {len(z)}")
    if check and not mat_is_hyperbolic_positive(a).is_positive:
        raise NotPositive("weight matrix is not hyperbolic positive")
    return BicomplexNumber.from_idempotent(
        z.v1 @ a.a1 @ w.v1.conj(), z.v2 @ a.a2 @ w.v2.conj()
    )


def norms(z: BCVector, a: BCMatrix | None = None) -> tuple[float, HyperbolicNumber]:
    """Real norm and hyperbolic norm of ``z`` (optionally for weight ``a``)."""
    if a is None:
        n1 = float(np.linalg.norm(z.v1))
        n2 = float(np.linalg.norm(z.v2))
    else:
        sq = inner_weighted(z, z, a)
        n1 = math.sqrt(max(sq.b1.real, 0.0))
        n2 = math.sqrt(max(sq.b2.real, 0.0))
    return math.sqrt((n1 * n1 + n2 * n2) / 2), HyperbolicNumber.from_idempotent(n1, n2)


def schwarz_check(z: BCVector, w: BCVector, tol: float = ORDER_EPS) -> tuple[bool, bool]:
    """Check the real (with sqrt 2) and the hyperbolic Schwarz inequalities."""
    ip = inner_canonical(z, w)
    rz, hz = norms(z)
    rw, hw = norms(w)
    first = euclidean_norm(ip) <= SQRT2 * rz * rw * (1 + EPS_REL) + tol
    second = hleq(hyperbolic_norm(ip), hz * hw, tol)
    return first, second


def apply_functional(c: BCVector, x: BCVector) -> BicomplexNumber:
    """``f(x) = sum_k c_k x_k``."""
    _same_length(c, x)
    return BicomplexNumber.from_idempotent(c.v1 @ x.v1, c.v2 @ x.v2)


def riesz_representer(c: BCVector) -> BCVector:
    # each component functional x -> c_l . x has complex representer conj(c_l)
    y1 = np.conj(c.v1)
    y2 = np.conj(c.v2)
    return BCVector(y1, y2)


@dataclass(frozen=True)
class FunctionalSplit:
    f1_i: Callable[[BCVector], complex]
    f2_i: Callable[[BCVector], complex]
    F1: Callable[[BCVector], complex]
    F2: Callable[[BCVector], complex]


def functional_split(c: BCVector) -> FunctionalSplit:
    """Idempotent and cartesian C(i)-valued parts of ``x -> sum c_k x_k``."""

    def f1(x: BCVector) -> complex:
        return complex(c.v1 @ x.v1)

    def f2(x: BCVector) -> complex:
        return complex(c.v2 @ x.v2)

    def big1(x: BCVector) -> complex:
        return (f1(x) + f2(x)) / 2

    def big2(x: BCVector) -> complex:
        return 1j * (f1(x) - f2(x)) / 2

    return FunctionalSplit(f1, f2, big1, big2)


class SesquilinearForm:
    """``B(x, y) = x^t G y*``."""

    def __init__(self, gram: BCMatrix):
        if not gram.is_square():
            raise NotSquare(f"gram of shape {gram.shape} is not square")
        self.gram = gram

    def __call__(self, x: BCVector, y: BCVector) -> BicomplexNumber:
        n = self.gram.rows
        if len(x) != n or len(y) != n:
            raise ShapeMismatch(f"vectors must have length {n}")
        g = self.gram
        return BicomplexNumber.from_idempotent(
            x.v1 @ g.a1 @ y.v1.conj(), x.v2 @ g.a2 @ y.v2.conj()
        )

    def quadratic(self, v: BCVector) -> BicomplexNumber:
        return self(v, v)


@dataclass(frozen=True)
class PolarizationValues:
    one_i: BicomplexNumber
    j_k: BicomplexNumber
    one_j: BicomplexNumber
    i_k: BicomplexNumber
    direct: BicomplexNumber

    def max_error(self) -> float:
        return max(
            euclidean_norm(v - self.direct) for v in (self.one_i, self.j_k, self.one_j, self.i_k)
        )


def polarization_eval(form: SesquilinearForm, x: BCVector, y: BCVector) -> PolarizationValues:
    """Recover ``B(x, y)`` from the quadratic form in four ways."""
    q = form.quadratic

    def diff(unit) -> BicomplexNumber:
        return q(x + y * unit) - q(x - y * unit)

    d1 = diff(BicomplexNumber(1, 0j))
    di = diff(I_UNIT)
    dj = diff(J)
    dk = diff(K_UNIT)
    quarter = 0.25
    return PolarizationValues(
        one_i=(d1 + I_UNIT * di) * quarter,
        j_k=(J * dj + K_UNIT * dk) * quarter,
        one_j=(d1 + J * dj) * quarter,
        i_k=(I_UNIT * di + K_UNIT * dk) * quarter,
        direct=form(x, y),
    )


class BCOperator:
    """Linear map ``x -> A x`` on BC^n with components ``T1``, ``T2``."""

    def __init__(self, matrix: BCMatrix):
        self.matrix = matrix

    @property
    def t1(self) -> np.ndarray:
        return self.matrix.a1

    @property
    def t2(self) -> np.ndarray:
        return self.matrix.a2

    def __call__(self, x: BCVector) -> BCVector:
        if len(x) != self.matrix.cols:
            raise ShapeMismatch(f"operator of shape {self.matrix.shape} on length {len(x)}")
        return BCVector(self.t1 @ x.v1, self.t2 @ x.v2)

    def __add__(self, other: BCOperator) -> BCOperator:
        return BCOperator(self.matrix + other.matrix)


def op_dnorm(t: BCOperator) -> HyperbolicNumber:
    return HyperbolicNumber.from_idempotent(
        float(np.linalg.norm(t.t1, 2)), float(np.linalg.norm(t.t2, 2))
    )


def op_adjoint(t: BCOperator) -> BCOperator:
    return BCOperator(t.matrix.star_t())


def dbound_sum(l1: HyperbolicNumber, l2: HyperbolicNumber) -> HyperbolicNumber:
    """A D-bound for ``T1 + T2`` given D-bounds ``l1`` and ``l2``.

    The triangle inequality gives ``l1 + l2``.  The componentwise maximum of
    ``l1`` and ``l2`` alone is not a bound in general (take ``T1 = T2 = I``).
    """
    return l1 + l2
