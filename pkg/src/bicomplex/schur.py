"""Schur analysis over the bicomplex numbers.

A scalar Schur function is ``s(Z) = s1(b1) e + s2(b2) e_dag`` with classical
Schur components.  Each component is kept either as a finite Blaschke product
``c * prod (z - w) / (1 - conj(w) z)`` or as a coefficient vector; both forms
convert to a numerator/denominator polynomial pair, which is what the Schur
recursion and the Taylor expansion operate on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np
from scipy.stats import qmc

from .analytic import (
    CoefficientFunction,
    DiskPoint,
    hardy_dnorm,
    series_multiply,
)
from .errors import (
    DegenerateParameter,
    NonVanishing,
    NotSchur,
    ResolventSingular,
    ZeroDivisorDenominator,
)
from .matrix import BCMatrix, mat_is_star_unitary
from .scalar import (
    ORDER_EPS,
    ZD_EPS,
    BicomplexNumber,
    HyperbolicNumber,
    hleq,
    hyperbolic_norm,
)

SCHUR_TOL = 1e-9
KERNEL_TOL = 1e-10
DEFAULT_SAMPLE_POINTS = 8
DEFAULT_SAMPLE_RADIUS = 0.95


# component representations


@dataclass(frozen=True)
class BlaschkeComponent:
    """``constant * prod (z - w) / (1 - conj(w) z)`` over ``zeros``.

    ``constant`` is unimodular for an inner function; other moduli are kept
    so that scaled (and possibly non-Schur) variants can be represented.
    """

    zeros: tuple[complex, ...] = ()
    constant: complex = 1.0

    def __post_init__(self):
        zeros = tuple(complex(w) for w in self.zeros)
        for w in zeros:
            if abs(w) >= 1:
                raise DegenerateParameter(f"Blaschke zero {w} is not inside the unit disk")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "constant", complex(self.constant))

    def __call__(self, z: complex) -> complex:
        value = self.constant
        for w in self.zeros:
            value *= (z - w) / (1 - w.conjugate() * z)
        return value

    def rational(self) -> tuple[np.ndarray, np.ndarray]:
        num = np.array([self.constant], dtype=complex)
        den = np.array([1], dtype=complex)
        for w in self.zeros:
            num = np.convolve(num, [-w, 1])
            den = np.convolve(den, [1, -w.conjugate()])
        return num, den


@dataclass(frozen=True)
class SeriesComponent:
    """A component given by its Taylor coefficients (a polynomial)."""

    coeffs: np.ndarray = field(default_factory=lambda: np.zeros(1, complex))

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            c = np.zeros(1, complex)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return acc

    def rational(self) -> tuple[np.ndarray, np.ndarray]:
        return self.coeffs.copy(), np.array([1], dtype=complex)


Component = Union[BlaschkeComponent, SeriesComponent]


def rational_taylor(num: np.ndarray, den: np.ndarray, n: int) -> np.ndarray:
    """First ``n`` Taylor coefficients of ``num / den`` (``den[0] != 0``)."""
    out = np.zeros(n, dtype=complex)
    num = np.pad(num, (0, max(0, n - num.size)))[:n]
    d0 = den[0]
    for m in range(n):
        acc = num[m]
        for k in range(1, min(m, den.size - 1) + 1):
            acc -= den[k] * out[m - k]
        out[m] = acc / d0
    return out


class SchurFunction:
    """Scalar bicomplex function ``s1(b1) e + s2(b2) e_dag``."""

    def __init__(self, comp1: Component, comp2: Component):
        self.components = (comp1, comp2)

    @classmethod
    def from_blaschke(
        cls,
        zeros1: Sequence[complex] = (),
        zeros2: Sequence[complex] = (),
        constant1: complex = 1.0,
        constant2: complex = 1.0,
    ) -> SchurFunction:
        return cls(BlaschkeComponent(tuple(zeros1), constant1), BlaschkeComponent(tuple(zeros2), constant2))

    @classmethod
    def from_coefficients(cls, f: CoefficientFunction) -> SchurFunction:
        return cls(SeriesComponent(f.c1), SeriesComponent(f.c2))

    @classmethod
    def constant(cls, value) -> SchurFunction:
        value = BicomplexNumber.coerce(value)
        return cls(SeriesComponent([value.b1]), SeriesComponent([value.b2]))

    def __call__(self, z) -> BicomplexNumber:
        z = BicomplexNumber.coerce(z)
        s1, s2 = self.components
        return BicomplexNumber.from_idempotent(s1(z.b1), s2(z.b2))

    def coefficients(self, n: int) -> CoefficientFunction:
        c = [rational_taylor(*comp.rational(), n) for comp in self.components]
        return CoefficientFunction(c[0], c[1])

    def scaled(self, factor: complex) -> SchurFunction:
        out = []
        for comp in self.components:
            if isinstance(comp, BlaschkeComponent):
                out.append(BlaschkeComponent(comp.zeros, comp.constant * factor))
            else:
                out.append(SeriesComponent(comp.coeffs * factor))
        return SchurFunction(*out)


# realizations


@dataclass(frozen=True)
class RealizationMatrix:
    """Blocks of ``s(Z) = D + Z C (I - Z A)^-1 B``."""

    A: BCMatrix
    B: BCMatrix
    C: BCMatrix
    D: BCMatrix

    @property
    def state_dim(self) -> int:
        return self.A.rows

    def block(self) -> BCMatrix:
        a1 = np.block([[self.A.a1, self.B.a1], [self.C.a1, self.D.a1]])
        a2 = np.block([[self.A.a2, self.B.a2], [self.C.a2, self.D.a2]])
        return BCMatrix(a1, a2)


def _resolvent(a: np.ndarray, z: complex, component: int) -> np.ndarray:
    m = np.eye(a.shape[0]) - z * a
    with np.errstate(all="ignore"):
        cond = np.linalg.cond(m) if m.size else 1.0
    if not np.isfinite(cond) or cond > 1 / ZD_EPS:
        raise ResolventSingular(component)
    return np.linalg.inv(m)


def realization_eval(r: RealizationMatrix, z) -> BCMatrix:
    z = BicomplexNumber.coerce(z)
    out = []
    for index, (beta, a, b, c, d) in enumerate(
        (
            (z.b1, r.A.a1, r.B.a1, r.C.a1, r.D.a1),
            (z.b2, r.A.a2, r.B.a2, r.C.a2, r.D.a2),
        ),
        start=1,
    ):
        out.append(d + beta * c @ _resolvent(a, beta, index) @ b)
    return BCMatrix(out[0], out[1])


def realization_kernel_residual(
    r: RealizationMatrix, z, w, printed_form: bool = False
) -> float:
    """Residual of ``(I - s(Z) s(W)^*t) / (1 - Z W*) = C (I-ZA)^-1 [(I-WA)^-1]^*t C^*t``.

    ``printed_form=True`` drops the adjoint on the second resolvent, i.e.
    tests ``C (I-ZA)^-1 (I-WA)^-1 C^*t`` instead.
    """
    z = BicomplexNumber.coerce(z)
    w = BicomplexNumber.coerce(w)
    sz = realization_eval(r, z)
    sw = realization_eval(r, w)
    worst = 0.0
    for index, (bz, bw, a, c, s_z, s_w) in enumerate(
        (
            (z.b1, w.b1, r.A.a1, r.C.a1, sz.a1, sw.a1),
            (z.b2, w.b2, r.A.a2, r.C.a2, sz.a2, sw.a2),
        ),
        start=1,
    ):
        denom = 1 - bz * np.conj(bw)
        if abs(denom) <= ZD_EPS:
            raise ZeroDivisorDenominator(f"1 - Z W* vanishes in component {index}")
        lhs = (np.eye(s_z.shape[0]) - s_z @ s_w.conj().T) / denom
        rz = _resolvent(a, bz, index)
        rw = _resolvent(a, bw, index)
        second = rw if printed_form else rw.conj().T
        rhs = c @ rz @ second @ c.conj().T
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def taylor_from_realization(r: RealizationMatrix, n: int) -> CoefficientFunction:
    """``D, CB, CAB, CA^2B, ...`` for scalar realizations, ``n`` terms."""
    out = []
    for a, b, c, d in ((r.A.a1, r.B.a1, r.C.a1, r.D.a1), (r.A.a2, r.B.a2, r.C.a2, r.D.a2)):
        coeffs = [d[0, 0]]
        v = b
        for _ in range(1, n):
            coeffs.append((c @ v)[0, 0])
            v = a @ v
        out.append(coeffs)
    return CoefficientFunction(out[0], out[1])


def backward_shift_realization(s, n: int) -> RealizationMatrix:
    """Coefficient-level realization on the first ``n`` Taylor coefficients.

    ``A`` shifts coefficients left, ``B`` holds ``s_1, s_2, ...``, ``C`` reads
    the constant term and ``D = s_0``.
    """
    if isinstance(s, SchurFunction):
        coeffs = s.coefficients(n + 1)
    else:
        coeffs = s.padded(max(s.N, n + 1))
    shift = np.eye(n, k=1)
    c_row = np.zeros((1, n))
    c_row[0, 0] = 1
    b = [np.pad(cc[1 : n + 1], (0, max(0, n - cc[1 : n + 1].size)))[:, None] for cc in (coeffs.c1, coeffs.c2)]
    return RealizationMatrix(
        A=BCMatrix(shift, shift),
        B=BCMatrix(b[0], b[1]),
        C=BCMatrix(c_row, c_row),
        D=BCMatrix([[coeffs.c1[0]]], [[coeffs.c2[0]]]),
    )


# Blaschke factors


def _check_parameter(a) -> BicomplexNumber:
    a = BicomplexNumber.coerce(a.z if isinstance(a, DiskPoint) else a)
    for index, eta in ((1, a.b1), (2, a.b2)):
        if abs(eta) >= 1 - ZD_EPS:
            raise DegenerateParameter(
                f"component {index} of the Blaschke parameter has modulus {abs(eta):.6g}"
            )
    return a


def blaschke(a) -> tuple[SchurFunction, RealizationMatrix]:
    """The factor ``(Z - a) / (1 - Z a*)`` and its unitary realization."""
    a = _check_parameter(a)
    s = SchurFunction.from_blaschke([a.b1], [a.b2])
    u1 = np.sqrt(1 - abs(a.b1) ** 2)
    u2 = np.sqrt(1 - abs(a.b2) ** 2)
    r = RealizationMatrix(
        A=BCMatrix([[np.conj(a.b1)]], [[np.conj(a.b2)]]),
        B=BCMatrix([[u1]], [[u2]]),
        C=BCMatrix([[u1]], [[u2]]),
        D=BCMatrix([[-a.b1]], [[-a.b2]]),
    )
    return s, r


def blaschke_value(a, z) -> BicomplexNumber:
    """Direct evaluation of ``(Z - a)(1 - Z a*)^-1`` in bicomplex arithmetic."""
    a = _check_parameter(a)
    z = BicomplexNumber.coerce(z)
    return (z - a) / (1 - z * a.star())


def blaschke_series(a, n: int) -> CoefficientFunction:
    """``-a + (1 - a a*) sum_{m >= 1} Z^m (a*)^(m-1)``, first ``n`` terms."""
    a = _check_parameter(a)
    out = []
    for eta in (a.b1, a.b2):
        c = np.zeros(n, dtype=complex)
        c[0] = -eta
        if n > 1:
            c[1:] = (1 - abs(eta) ** 2) * np.conj(eta) ** np.arange(n - 1)
        out.append(c)
    return CoefficientFunction(out[0], out[1])


def blaschke_chain(zeros: Sequence, constant=1) -> RealizationMatrix:
    """Cascade realization of ``constant * b_{a_1} ... b_{a_m}``, unitary for unimodular constants."""
    realizations = [blaschke(a)[1] for a in zeros]
    constant = BicomplexNumber.coerce(constant)
    if not realizations:
        return RealizationMatrix(
            A=BCMatrix.zeros(0, 0), B=BCMatrix.zeros(0, 1), C=BCMatrix.zeros(1, 0),
            D=BCMatrix([[constant.b1]], [[constant.b2]]),
        )
    r = realizations[0]
    for nxt in realizations[1:]:
        r = _series_connect(r, nxt)
    return RealizationMatrix(r.A, r.B, r.C * constant, r.D * constant)


def _series_connect(r1: RealizationMatrix, r2: RealizationMatrix) -> RealizationMatrix:
    # realization of s2(Z) s1(Z): the output of r1 feeds r2
    def comp(x: RealizationMatrix, ell: int):
        pick = (lambda m: m.a1) if ell == 1 else (lambda m: m.a2)
        return pick(x.A), pick(x.B), pick(x.C), pick(x.D)

    parts = []
    for ell in (1, 2):
        a1, b1, c1, d1 = comp(r1, ell)
        a2, b2, c2, d2 = comp(r2, ell)
        n1, n2 = a1.shape[0], a2.shape[0]
        a = np.block([[a1, np.zeros((n1, n2))], [b2 @ c1, a2]])
        b = np.vstack([b1, b2 @ d1])
        c = np.hstack([d2 @ c1, c2])
        d = d2 @ d1
        parts.append((a, b, c, d))
    (a_1, b_1, c_1, d_1), (a_2, b_2, c_2, d_2) = parts
    return RealizationMatrix(BCMatrix(a_1, a_2), BCMatrix(b_1, b_2), BCMatrix(c_1, c_2), BCMatrix(d_1, d_2))


def torus_point(theta1: float, theta2: float) -> BicomplexNumber:
    return BicomplexNumber.from_idempotent(np.exp(1j * theta1), np.exp(1j * theta2))


def blaschke_modulus(a, z) -> HyperbolicNumber:
    s, _ = blaschke(a)
    return hyperbolic_norm(s(z))


# kernels


def szego_kernel_value(z, w) -> BicomplexNumber:
    z = BicomplexNumber.coerce(z.z if isinstance(z, DiskPoint) else z)
    w = BicomplexNumber.coerce(w.z if isinstance(w, DiskPoint) else w)
    d1 = 1 - z.b1 * np.conj(w.b1)
    d2 = 1 - z.b2 * np.conj(w.b2)
    if abs(d1) <= ZD_EPS or abs(d2) <= ZD_EPS:
        raise ZeroDivisorDenominator("1 - Z W* is a zero divisor")
    return BicomplexNumber.from_idempotent(1 / d1, 1 / d2)


def schur_kernel_ks(s: SchurFunction, z, w) -> BCMatrix:
    """``(1 - s(Z) s(W)*) / (1 - Z W*)`` as a 1x1 matrix."""
    z = BicomplexNumber.coerce(z.z if isinstance(z, DiskPoint) else z)
    w = BicomplexNumber.coerce(w.z if isinstance(w, DiskPoint) else w)
    sz, sw = s(z), s(w)
    num = 1 - sz * sw.star()
    value = num * szego_kernel_value(z, w)
    return BCMatrix([[value.b1]], [[value.b2]])


def sample_points(
    n: int = DEFAULT_SAMPLE_POINTS,
    seed: int | None = 0,
    radius: float = DEFAULT_SAMPLE_RADIUS,
) -> list[DiskPoint]:
    """Scrambled Halton points, independently for each idempotent component."""
    u = qmc.Halton(d=4, scramble=True, seed=seed).random(n)
    pts = []
    for r1, t1, r2, t2 in u:
        b1 = radius * np.sqrt(r1) * np.exp(2j * np.pi * t1)
        b2 = radius * np.sqrt(r2) * np.exp(2j * np.pi * t2)
        pts.append(DiskPoint.from_idempotent(b1, b2))
    return pts


@dataclass(frozen=True)
class KernelSample:
    points: list
    gram: BCMatrix
    min_eigenvalues: tuple[float, float]
    positive: bool
    hermitian: bool


def _as_block(value) -> BCMatrix:
    if isinstance(value, BCMatrix):
        return value
    value = BicomplexNumber.coerce(value)
    return BCMatrix([[value.b1]], [[value.b2]])


def kernel_positivity_check(
    kernel: Callable, points: Sequence, tol: float = KERNEL_TOL
) -> KernelSample:
    """Assemble the Gram matrix ``[K(z_j, z_l)]`` and test each component for PSD."""
    points = [DiskPoint.coerce(p) for p in points]
    blocks = [[_as_block(kernel(p, q)) for q in points] for p in points]
    g1 = np.block([[b.a1 for b in row] for row in blocks])
    g2 = np.block([[b.a2 for b in row] for row in blocks])
    gram = BCMatrix(g1, g2)
    scale = max(1.0, np.linalg.norm(g1, 2), np.linalg.norm(g2, 2))
    herm = all(np.linalg.norm(g - g.conj().T, 2) <= tol * scale for g in (g1, g2))
    mins = tuple(float(np.linalg.eigvalsh((g + g.conj().T) / 2)[0]) for g in (g1, g2))
    positive = herm and all(m >= -tol * scale for m in mins)
    return KernelSample(points, gram, mins, positive, herm)


def pointwise_contraction(s: SchurFunction, points: Sequence, tol: float = ORDER_EPS) -> bool:
    """``s(Z) s(Z)* <= 1`` in the hyperbolic order at each point."""
    for p in points:
        z = DiskPoint.coerce(p).z
        v = s(z)
        mod = HyperbolicNumber.from_idempotent(abs(v.b1) ** 2, abs(v.b2) ** 2)
        if not hleq(mod, 1, tol):
            return False
    return True


# multipliers and division


def multiplier_contraction_ratios(
    s: SchurFunction, n: int = 64, trials: int = 20, seed: int | None = 0
) -> tuple[float, float]:
    """Worst ratios ``||s f||^2 / ||f||^2`` per component over random ``f``.

    ``f`` has ``n`` coefficients and ``s f`` is kept to ``2 n`` terms, so the
    ratios can only underestimate the true multiplier norms.
    """
    rng = np.random.default_rng(seed)
    m = 2 * n
    sc = s.coefficients(m)
    worst = [0.0, 0.0]
    for _ in range(trials):
        f = CoefficientFunction(
            rng.normal(size=n) + 1j * rng.normal(size=n),
            rng.normal(size=n) + 1j * rng.normal(size=n),
        )
        sf = series_multiply(f, sc, m)
        nf = hardy_dnorm(f)
        nsf = hardy_dnorm(sf)
        worst[0] = max(worst[0], (nsf.nu / nf.nu) ** 2)
        worst[1] = max(worst[1], (nsf.mu / nf.mu) ** 2)
    return worst[0], worst[1]


def multiplier_contraction_check(
    s: SchurFunction, n: int = 64, trials: int = 20, seed: int | None = 0, tol: float = ORDER_EPS
) -> bool:
    """``<s f, s f> <= <f, f>`` in the hyperbolic order for random truncated ``f``."""
    r1, r2 = multiplier_contraction_ratios(s, n, trials, seed)
    return r1 <= 1 + tol and r2 <= 1 + tol


def blaschke_divide(f: CoefficientFunction, a, tol: float = 1e-9) -> CoefficientFunction:
    """``g`` with ``f = b_a g``, for ``f`` vanishing at ``a``."""
    a = _check_parameter(a)
    out = []
    for index, (coeffs, eta) in enumerate(((f.c1, a.b1), (f.c2, a.b2)), start=1):
        # synthetic division by (z - eta), highest power first
        acc = 0j
        quotient = []
        for c in coeffs[::-1]:
            acc = acc * eta + c
            quotient.append(acc)
        remainder = quotient.pop()
        if abs(remainder) > tol * max(1.0, float(np.linalg.norm(coeffs))):
            raise NonVanishing(f"component {index} does not vanish at the Blaschke zero")
        h = np.array(quotient[::-1], dtype=complex)
        g = np.zeros(coeffs.size, dtype=complex)
        g[: h.size] += h
        g[1 : h.size + 1] -= np.conj(eta) * h
        out.append(g)
    return CoefficientFunction(out[0], out[1])


# Schur algorithm


def _component_schur(num: np.ndarray, den: np.ndarray, max_steps: int, tol: float, index: int) -> list[complex]:
    rhos: list[complex] = []
    for step in range(max_steps):
        num = num / den[0]
        den = den / den[0]
        rho = complex(num[0])
        if abs(rho) > 1 + tol:
            raise NotSchur(index, step, rho)
        rhos.append(rho)
        if abs(1 - abs(rho)) <= tol:
            break
        size = max(num.size, den.size)
        num = np.pad(num, (0, size - num.size))
        den = np.pad(den, (0, size - den.size))
        # s_next = (s - rho) / (z (1 - conj(rho) s))
        new_num = (num - rho * den)[1:]
        new_den = den - np.conj(rho) * num
        num = new_num if new_num.size else np.zeros(1, complex)
        den = new_den
    return rhos


def schur_algorithm(
    s: SchurFunction, max_steps: int = 64, tol: float = SCHUR_TOL
) -> tuple[list[complex], list[complex]]:
    """Schur coefficients of each component, stopping at a unimodular one."""
    return tuple(
        _component_schur(*comp.rational(), max_steps, tol, index)
        for index, comp in enumerate(s.components, start=1)
    )
