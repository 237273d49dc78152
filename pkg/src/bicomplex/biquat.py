"""Biquaternions ``Z1 + Z2 i2`` over a bicomplex copy spanned by ``i, i1, k``.

The bicomplex unit ``j`` of :class:`BicomplexNumber` plays the role of ``i1``
here, and ``i2 Z = Z_dag i2`` for bicomplex ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import EPS_ABS, BicomplexNumber, HyperbolicNumber, euclidean_norm


@dataclass(frozen=True, slots=True)
class Biquaternion:
    q1: BicomplexNumber
    q2: BicomplexNumber = BicomplexNumber(0j, 0j)

    def __post_init__(self):
        object.__setattr__(self, "q1", BicomplexNumber.coerce(self.q1))
        object.__setattr__(self, "q2", BicomplexNumber.coerce(self.q2))

    @classmethod
    def coerce(cls, x) -> Biquaternion:
        if isinstance(x, Biquaternion):
            return x
        return cls(BicomplexNumber.coerce(x))

    def __add__(self, other):
        other = Biquaternion.coerce(other)
        return Biquaternion(self.q1 + other.q1, self.q2 + other.q2)

    __radd__ = __add__

    def __sub__(self, other):
        other = Biquaternion.coerce(other)
        return Biquaternion(self.q1 - other.q1, self.q2 - other.q2)

    def __neg__(self) -> Biquaternion:
        return Biquaternion(-self.q1, -self.q2)

    def __mul__(self, other):
        other = Biquaternion.coerce(other)
        z1, z2 = self.q1, self.q2
        w1, w2 = other.q1, other.q2
        return Biquaternion(
            z1 * w1 - z2 * w2.dagger(),
            z1 * w2 + z2 * w1.dagger(),
        )

    def __rmul__(self, other):
        # a bicomplex scalar on the left acts on both components
        other = BicomplexNumber.coerce(other)
        return Biquaternion(other * self.q1, other * self.q2)

    def norm(self) -> float:
        return (euclidean_norm(self.q1) ** 2 + euclidean_norm(self.q2) ** 2) ** 0.5

    def isclose(self, other, tol: float = EPS_ABS) -> bool:
        return (self - Biquaternion.coerce(other)).norm() <= tol

    # conjugations

    def odot(self) -> Biquaternion:
        return Biquaternion(self.q1.star(), -self.q2.bar())

    def bar(self) -> Biquaternion:
        return Biquaternion(self.q1.bar(), self.q2.bar())

    def dagger1(self) -> Biquaternion:
        return Biquaternion(self.q1.dagger(), self.q2.dagger())

    def star(self) -> Biquaternion:
        return Biquaternion(self.q1.star(), self.q2.star())

    def dagger2(self) -> Biquaternion:
        return Biquaternion(self.q1, -self.q2)

    def dagger3(self) -> Biquaternion:
        return Biquaternion(self.q1, self.q2.dagger())

    def diamond(self) -> Biquaternion:
        return Biquaternion(self.q1.dagger(), -self.q2)


I2 = Biquaternion(BicomplexNumber(0j, 0j), BicomplexNumber(1, 0j))


def conj_odot(q: Biquaternion) -> Biquaternion:
    return q.odot()


def hc_inner(z: Biquaternion, w: Biquaternion) -> Biquaternion:
    """``z * w.odot()``, expanded into its two bicomplex components."""
    z1, z2 = z.q1, z.q2
    w1, w2 = w.q1, w.q2
    return Biquaternion(z1 * w1.star() + z2 * w2.star(), z2 * w1.bar() - z1 * w2.bar())


def self_inner_parts(z: Biquaternion) -> tuple[HyperbolicNumber, float, float]:
    """Split ``<z, z>`` into ``eta + r i i2 + s i i3``.

    ``eta`` is the hyperbolic first component.  The second component equals
    ``i r + k s`` and ``i2``, ``i3 = i1 i2`` carry it as stated.
    """
    inner = hc_inner(z, z)
    eta = HyperbolicNumber.coerce(inner.q1)
    x = inner.q2
    return eta, x.z1.imag, x.z2.imag
