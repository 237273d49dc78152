"""Bicomplex and hyperbolic scalars.

A bicomplex number is ``Z = z1 + z2 j`` with ``z1, z2`` complex numbers in
the unit ``i``; the units commute, ``i**2 == j**2 == -1`` and ``k = i j``
squares to ``+1``.  Python's ``complex`` plays the role of C(i) throughout.
When a value naturally lives in C(j) it is still returned as a ``complex``
whose imaginary part is the coefficient of ``j``.

The idempotent basis ``e = (1 + k)/2``, ``e_dag = (1 - k)/2`` turns ring
operations into componentwise complex operations:
``Z = b1 e + b2 e_dag`` with ``b1 = z1 - i z2`` and ``b2 = z1 + i z2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .errors import EmptySet, NonFinite, NotInCone, ZeroDivisor

ZD_EPS = 1e-12
ORDER_EPS = 1e-10
EPS_ABS = 1e-12
EPS_REL = 1e-12
SQRT2 = math.sqrt(2.0)

Number = Union[int, float, complex]


def _finite_complex(x: Number) -> complex:
    c = complex(x)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise NonFinite(f"non-finite component {x!r}")
    return c


def _finite_real(x: float) -> float:
    r = float(x)
    if not math.isfinite(r):
        raise NonFinite(f"non-finite component {x!r}")
    return r


@dataclass(frozen=True, slots=True)
class IdempotentPair:
    """Coefficients of ``b1 e + b2 e_dag``; arithmetic is componentwise."""

    b1: complex
    b2: complex

    def __post_init__(self):
        object.__setattr__(self, "b1", _finite_complex(self.b1))
        object.__setattr__(self, "b2", _finite_complex(self.b2))

    def __add__(self, other: IdempotentPair) -> IdempotentPair:
        return IdempotentPair(self.b1 + other.b1, self.b2 + other.b2)

    def __sub__(self, other: IdempotentPair) -> IdempotentPair:
        return IdempotentPair(self.b1 - other.b1, self.b2 - other.b2)

    def __mul__(self, other: IdempotentPair) -> IdempotentPair:
        return IdempotentPair(self.b1 * other.b1, self.b2 * other.b2)

    def __neg__(self) -> IdempotentPair:
        return IdempotentPair(-self.b1, -self.b2)

    def inverse(self) -> IdempotentPair:
        if self.b1 == 0 or self.b2 == 0:
            raise ZeroDivisor("an idempotent component is zero")
        return IdempotentPair(1 / self.b1, 1 / self.b2)

    def sqrt(self) -> IdempotentPair:
        """Principal square root in each component."""
        return IdempotentPair(self.b1 ** 0.5, self.b2 ** 0.5)


@dataclass(frozen=True, slots=True)
class BicomplexNumber:
    """``z1 + z2 j`` stored in cartesian form."""

    z1: complex
    z2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "z1", _finite_complex(self.z1))
        object.__setattr__(self, "z2", _finite_complex(self.z2))

    # construction

    @classmethod
    def from_idempotent(cls, b1: Number, b2: Number) -> BicomplexNumber:
        b1 = complex(b1)
        b2 = complex(b2)
        return cls((b1 + b2) / 2, 1j * (b1 - b2) / 2)

    @classmethod
    def from_reals(cls, x1: float, y1: float, x2: float, y2: float) -> BicomplexNumber:
        return cls(complex(x1, y1), complex(x2, y2))

    @classmethod
    def from_cj(cls, eta1: complex, eta2: complex) -> BicomplexNumber:
        """Build ``eta1 + eta2 i`` from two C(j) numbers."""
        eta1 = complex(eta1)
        eta2 = complex(eta2)
        return cls(complex(eta1.real, eta2.real), complex(eta1.imag, eta2.imag))

    @classmethod
    def coerce(cls, x) -> BicomplexNumber:
        if isinstance(x, BicomplexNumber):
            return x
        if isinstance(x, HyperbolicNumber):
            return x.to_bicomplex()
        if isinstance(x, (int, float, complex)):
            return cls(x, 0j)
        raise TypeError(f"cannot interpret {type(x).__name__} as a bicomplex number")

    # coordinates

    @property
    def b1(self) -> complex:
        return self.z1 - 1j * self.z2

    @property
    def b2(self) -> complex:
        return self.z1 + 1j * self.z2

    @property
    def eta1(self) -> complex:
        """``x1 + x2 j`` as a C(j) number."""
        return complex(self.z1.real, self.z2.real)

    @property
    def eta2(self) -> complex:
        """``y1 + y2 j`` as a C(j) number."""
        return complex(self.z1.imag, self.z2.imag)

    @property
    def gamma1(self) -> complex:
        """Coefficient of ``e`` in the C(j) idempotent form."""
        x1, y1, x2, y2 = self.reals()
        return complex(x1 + y2, x2 - y1)

    @property
    def gamma2(self) -> complex:
        x1, y1, x2, y2 = self.reals()
        return complex(x1 - y2, x2 + y1)

    def reals(self) -> tuple[float, float, float, float]:
        return (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    def idempotent(self) -> IdempotentPair:
        return IdempotentPair(self.b1, self.b2)

    def representations(self) -> dict:
        """All six cartesian-like splittings of ``Z``.

        D-valued parts come back as ``HyperbolicNumber``; C(j)-valued parts as
        ``complex`` with the imaginary part read as the ``j`` coefficient.
        """
        x1, y1, x2, y2 = self.reals()
        return {
            "z": (self.z1, self.z2),
            "eta": (self.eta1, self.eta2),
            "frak_z": (HyperbolicNumber(x1, y2), HyperbolicNumber(x2, -y1)),
            "frak_x": (HyperbolicNumber(x1, y2), HyperbolicNumber(y1, -x2)),
            "alpha": (complex(x1, y1), complex(y2, -x2)),
            "nu": (complex(x1, x2), complex(y2, -y1)),
        }

    # predicates

    def is_hyperbolic(self, tol: float = 0.0) -> bool:
        return abs(self.z1.imag) <= tol and abs(self.z2.real) <= tol

    def is_zero_divisor(self, eps: float = ZD_EPS) -> bool:
        """True for zero divisors and for zero itself."""
        scale = euclidean_norm(self)
        return abs(self.b1) <= eps * scale or abs(self.b2) <= eps * scale

    def isclose(self, other, tol: float = EPS_ABS) -> bool:
        other = BicomplexNumber.coerce(other)
        return euclidean_norm(self - other) <= tol

    # arithmetic

    def __add__(self, other):
        try:
            other = BicomplexNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return BicomplexNumber(self.z1 + other.z1, self.z2 + other.z2)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = BicomplexNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return BicomplexNumber(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other):
        try:
            other = BicomplexNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self) -> BicomplexNumber:
        return BicomplexNumber(-self.z1, -self.z2)

    def __mul__(self, other):
        try:
            other = BicomplexNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return BicomplexNumber(
            self.z1 * other.z1 - self.z2 * other.z2,
            self.z1 * other.z2 + self.z2 * other.z1,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = BicomplexNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        try:
            other = BicomplexNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return other * invert(self)

    def __pow__(self, n: int) -> BicomplexNumber:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        b1, b2 = self.b1, self.b2
        return BicomplexNumber.from_idempotent(b1 ** n, b2 ** n)

    def __abs__(self) -> float:
        return euclidean_norm(self)

    # conjugations

    def bar(self) -> BicomplexNumber:
        return BicomplexNumber(self.z1.conjugate(), self.z2.conjugate())

    def dagger(self) -> BicomplexNumber:
        return BicomplexNumber(self.z1, -self.z2)

    def star(self) -> BicomplexNumber:
        return BicomplexNumber(self.z1.conjugate(), -self.z2.conjugate())

    def __repr__(self) -> str:
        return f"BicomplexNumber(z1={self.z1!r}, z2={self.z2!r})"


@dataclass(frozen=True, slots=True)
class HyperbolicNumber:
    """``a + b k`` with ``k**2 == 1``."""

    a: float
    b: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "a", _finite_real(self.a))
        object.__setattr__(self, "b", _finite_real(self.b))

    @classmethod
    def from_idempotent(cls, nu: float, mu: float) -> HyperbolicNumber:
        """Build ``nu e + mu e_dag``."""
        return cls((nu + mu) / 2, (nu - mu) / 2)

    @classmethod
    def coerce(cls, x) -> HyperbolicNumber:
        if isinstance(x, HyperbolicNumber):
            return x
        if isinstance(x, (int, float)):
            return cls(x, 0.0)
        if isinstance(x, BicomplexNumber):
            if not x.is_hyperbolic(EPS_ABS * max(1.0, euclidean_norm(x))):
                raise ValueError("bicomplex value is not hyperbolic")
            return cls(x.z1.real, x.z2.imag)
        raise TypeError(f"cannot interpret {type(x).__name__} as a hyperbolic number")

    @property
    def nu(self) -> float:
        """Coefficient of ``e``."""
        return self.a + self.b

    @property
    def mu(self) -> float:
        """Coefficient of ``e_dag``."""
        return self.a - self.b

    def to_bicomplex(self) -> BicomplexNumber:
        return BicomplexNumber(self.a, 1j * self.b)

    def __add__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HyperbolicNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HyperbolicNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        try:
            other = HyperbolicNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return other - self

    def __neg__(self) -> HyperbolicNumber:
        return HyperbolicNumber(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, BicomplexNumber):
            return self.to_bicomplex() * other
        try:
            other = HyperbolicNumber.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HyperbolicNumber(
            self.a * other.a + self.b * other.b, self.a * other.b + self.b * other.a
        )

    __rmul__ = __mul__

    def sqrt(self) -> HyperbolicNumber:
        """Componentwise square root of an element of the positive cone."""
        if not dplus_contains(self):
            raise NotInCone(f"{self} is not in the positive cone")
        return HyperbolicNumber.from_idempotent(
            math.sqrt(max(self.nu, 0.0)), math.sqrt(max(self.mu, 0.0))
        )

    def isclose(self, other, tol: float = EPS_ABS) -> bool:
        other = HyperbolicNumber.coerce(other)
        return abs(self.a - other.a) <= tol and abs(self.b - other.b) <= tol


E = BicomplexNumber(0.5, 0.5j)
E_DAG = BicomplexNumber(0.5, -0.5j)
I = BicomplexNumber(1j, 0j)
J = BicomplexNumber(0j, 1)
K = BicomplexNumber(0j, 1j)
ONE = BicomplexNumber(1, 0j)
ZERO = BicomplexNumber(0j, 0j)
HE = HyperbolicNumber(0.5, 0.5)
HE_DAG = HyperbolicNumber(0.5, -0.5)


class Order(Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def to_idempotent(z: BicomplexNumber) -> IdempotentPair:
    return z.idempotent()


def from_idempotent(p: IdempotentPair) -> BicomplexNumber:
    return BicomplexNumber.from_idempotent(p.b1, p.b2)


def conj_bar(z: BicomplexNumber) -> BicomplexNumber:
    return z.bar()


def conj_dagger(z: BicomplexNumber) -> BicomplexNumber:
    return z.dagger()


def conj_star(z: BicomplexNumber) -> BicomplexNumber:
    return z.star()


def modulus_i2(z: BicomplexNumber) -> BicomplexNumber:
    """``Z Z_dag = z1**2 + z2**2``, a C(i) value."""
    return BicomplexNumber(z.z1 * z.z1 + z.z2 * z.z2, 0j)


def modulus_j2(z: BicomplexNumber) -> BicomplexNumber:
    """``Z Z_bar``, a C(j) value."""
    return z * z.bar()


def modulus_k2(z: BicomplexNumber) -> HyperbolicNumber:
    """``Z Z_star = |b1|**2 e + |b2|**2 e_dag``."""
    return HyperbolicNumber.from_idempotent(abs(z.b1) ** 2, abs(z.b2) ** 2)


def hyperbolic_norm(z: BicomplexNumber) -> HyperbolicNumber:
    return HyperbolicNumber.from_idempotent(abs(z.b1), abs(z.b2))


def euclidean_norm(z) -> float:
    if isinstance(z, HyperbolicNumber):
        return math.hypot(z.a, z.b)
    return math.hypot(z.z1.real, z.z1.imag, z.z2.real, z.z2.imag)


def invert(z: BicomplexNumber) -> BicomplexNumber:
    if z.is_zero_divisor():
        raise ZeroDivisor(f"{z!r} is a zero divisor or zero")
    return BicomplexNumber.from_idempotent(1 / z.b1, 1 / z.b2)


def pi1_i(z: BicomplexNumber) -> complex:
    return z.b1


def pi2_i(z: BicomplexNumber) -> complex:
    return z.b2


def pi1_j(z: BicomplexNumber) -> complex:
    return z.gamma1


def pi2_j(z: BicomplexNumber) -> complex:
    return z.gamma2


def Pi1_i(z: BicomplexNumber) -> complex:
    return z.z1


def Pi2_i(z: BicomplexNumber) -> complex:
    return z.z2


def Pi1_j(z: BicomplexNumber) -> complex:
    return z.eta1


def Pi2_j(z: BicomplexNumber) -> complex:
    return z.eta2


def dplus_contains(h: HyperbolicNumber, tol: float = ORDER_EPS) -> bool:
    return h.nu >= -tol and h.mu >= -tol


def order_compare(h1, h2, tol: float = ORDER_EPS) -> Order:
    h1 = HyperbolicNumber.coerce(h1)
    h2 = HyperbolicNumber.coerce(h2)
    d = h2 - h1
    up = dplus_contains(d, tol)
    down = dplus_contains(-d, tol)
    if up and down:
        return Order.EQUAL
    if up:
        return Order.LESS
    if down:
        return Order.GREATER
    return Order.INCOMPARABLE


def hleq(h1, h2, tol: float = ORDER_EPS) -> bool:
    """``h1`` precedes ``h2`` in the hyperbolic partial order."""
    return order_compare(h1, h2, tol) in (Order.LESS, Order.EQUAL)


def sup_d(values: Iterable[HyperbolicNumber]) -> HyperbolicNumber:
    values = [HyperbolicNumber.coerce(v) for v in values]
    if not values:
        raise EmptySet("supremum of an empty set")
    return HyperbolicNumber.from_idempotent(
        max(v.nu for v in values), max(v.mu for v in values)
    )


def inf_d(values: Iterable[HyperbolicNumber]) -> HyperbolicNumber:
    values = [HyperbolicNumber.coerce(v) for v in values]
    if not values:
        raise EmptySet("infimum of an empty set")
    return HyperbolicNumber.from_idempotent(
        min(v.nu for v in values), min(v.mu for v in values)
    )


def sphere_contains(
    z: BicomplexNumber, gamma0: HyperbolicNumber, tol: float = ORDER_EPS
) -> bool:
    gamma0 = HyperbolicNumber.coerce(gamma0)
    if not dplus_contains(gamma0):
        raise NotInCone(f"radius {gamma0} is not in the positive cone")
    return abs(abs(z.b1) - gamma0.nu) <= tol and abs(abs(z.b2) - gamma0.mu) <= tol
