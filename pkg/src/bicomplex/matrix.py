"""Dense bicomplex matrices.

A matrix is held as its idempotent pair ``(A1, A2)`` of complex arrays so
that ``A = A1 e + A2 e_dag`` entrywise.  Products, determinants, inverses and
spectral questions then reduce to two independent complex problems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import NonFinite, NotPositive, NotSquare, ShapeMismatch, Singular
from .scalar import ZD_EPS, BicomplexNumber, HyperbolicNumber

PSD_TOL = 1e-9
UNITARY_TOL = 1e-12


def _as_complex_array(a) -> np.ndarray:
    arr = np.array(a, dtype=complex)
    if arr.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFinite("matrix has non-finite entries")
    return arr


class BCMatrix:
    """Immutable bicomplex matrix with idempotent components ``a1``, ``a2``."""

    __slots__ = ("_a1", "_a2")

    def __init__(self, a1, a2):
        a1 = _as_complex_array(a1)
        a2 = _as_complex_array(a2)
        if a1.shape != a2.shape:
            raise ShapeMismatch(f"component shapes differ: {a1.shape} vs {a2.shape}")
        a1.setflags(write=False)
        a2.setflags(write=False)
        self._a1 = a1
        self._a2 = a2

    # construction

    @classmethod
    def from_cartesian(cls, z1, z2) -> BCMatrix:
        """Build ``Z1 + Z2 j`` from two complex arrays."""
        z1 = _as_complex_array(z1)
        z2 = _as_complex_array(z2)
        if z1.shape != z2.shape:
            raise ShapeMismatch(f"cartesian shapes differ: {z1.shape} vs {z2.shape}")
        return cls(z1 - 1j * z2, z1 + 1j * z2)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> BCMatrix:
        rows = [[BicomplexNumber.coerce(x) for x in row] for row in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("ragged or empty entry list")
        a1 = [[x.b1 for x in row] for row in rows]
        a2 = [[x.b2 for x in row] for row in rows]
        return cls(a1, a2)

    @classmethod
    def identity(cls, n: int) -> BCMatrix:
        eye = np.eye(n, dtype=complex)
        return cls(eye, eye)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BCMatrix:
        z = np.zeros((rows, cols), dtype=complex)
        return cls(z, z)

    @classmethod
    def diag(cls, values: Iterable) -> BCMatrix:
        values = [BicomplexNumber.coerce(v) for v in values]
        return cls(np.diag([v.b1 for v in values]), np.diag([v.b2 for v in values]))

    @classmethod
    def scalar(cls, value, n: int) -> BCMatrix:
        return cls.diag([value] * n)

    # views

    @property
    def a1(self) -> np.ndarray:
        return self._a1

    @property
    def a2(self) -> np.ndarray:
        return self._a2

    @property
    def shape(self) -> tuple[int, int]:
        return self._a1.shape

    @property
    def rows(self) -> int:
        return self._a1.shape[0]

    @property
    def cols(self) -> int:
        return self._a1.shape[1]

    @property
    def z1(self) -> np.ndarray:
        return (self._a1 + self._a2) / 2

    @property
    def z2(self) -> np.ndarray:
        return 1j * (self._a1 - self._a2) / 2

    def __getitem__(self, index: tuple[int, int]) -> BicomplexNumber:
        i, j = index
        return BicomplexNumber.from_idempotent(self._a1[i, j], self._a2[i, j])

    def entries(self) -> list[list[BicomplexNumber]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def norm(self) -> float:
        """Frobenius norm of the underlying real 4-vector of entries."""
        return float(np.sqrt((np.linalg.norm(self._a1) ** 2 + np.linalg.norm(self._a2) ** 2) / 2))

    def isclose(self, other: BCMatrix, tol: float) -> bool:
        if self.shape != other.shape:
            return False
        return (self - other).norm() <= tol

    # arithmetic

    def __add__(self, other: BCMatrix) -> BCMatrix:
        _same_shape(self, other)
        return BCMatrix(self._a1 + other._a1, self._a2 + other._a2)

    def __sub__(self, other: BCMatrix) -> BCMatrix:
        _same_shape(self, other)
        return BCMatrix(self._a1 - other._a1, self._a2 - other._a2)

    def __neg__(self) -> BCMatrix:
        return BCMatrix(-self._a1, -self._a2)

    def __matmul__(self, other: BCMatrix) -> BCMatrix:
        if not isinstance(other, BCMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return BCMatrix(self._a1 @ other._a1, self._a2 @ other._a2)

    def __mul__(self, value) -> BCMatrix:
        value = BicomplexNumber.coerce(value)
        return BCMatrix(value.b1 * self._a1, value.b2 * self._a2)

    __rmul__ = __mul__

    # entrywise conjugations and transposes

    def transpose(self) -> BCMatrix:
        return BCMatrix(self._a1.T, self._a2.T)

    def bar(self) -> BCMatrix:
        return BCMatrix(self._a2.conj(), self._a1.conj())

    def dagger(self) -> BCMatrix:
        return BCMatrix(self._a2, self._a1)

    def star(self) -> BCMatrix:
        return BCMatrix(self._a1.conj(), self._a2.conj())

    def star_t(self) -> BCMatrix:
        return BCMatrix(self._a1.conj().T, self._a2.conj().T)

    def dagger_t(self) -> BCMatrix:
        return BCMatrix(self._a2.T, self._a1.T)

    def bar_t(self) -> BCMatrix:
        return BCMatrix(self._a2.conj().T, self._a1.conj().T)

    def __repr__(self) -> str:
        return f"BCMatrix(shape={self.shape})"


def _same_shape(a: BCMatrix, b: BCMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes differ: {a.shape} vs {b.shape}")


def _require_square(a: BCMatrix) -> None:
    if not a.is_square():
        raise NotSquare(f"matrix of shape {a.shape} is not square")


def _scale(a: BCMatrix) -> float:
    return max(np.linalg.norm(a.a1, 2), np.linalg.norm(a.a2, 2))


def mat_split(a: BCMatrix) -> tuple[np.ndarray, np.ndarray]:
    return a.a1.copy(), a.a2.copy()


def mat_join(a1, a2) -> BCMatrix:
    return BCMatrix(a1, a2)


def mat_det(a: BCMatrix) -> BicomplexNumber:
    _require_square(a)
    return BicomplexNumber.from_idempotent(np.linalg.det(a.a1), np.linalg.det(a.a2))


def _singular_component(a: BCMatrix) -> int | None:
    for index, comp in ((1, a.a1), (2, a.a2)):
        with np.errstate(all="ignore"):
            cond = np.linalg.cond(comp)
        if not np.isfinite(cond) or cond > 1 / ZD_EPS:
            return index
    return None


def mat_is_invertible(a: BCMatrix) -> bool:
    _require_square(a)
    return _singular_component(a) is None


def mat_invert(a: BCMatrix) -> BCMatrix:
    _require_square(a)
    bad = _singular_component(a)
    if bad is not None:
        raise Singular(bad)
    return BCMatrix(np.linalg.inv(a.a1), np.linalg.inv(a.a2))


def mat_adjoints(a: BCMatrix) -> dict[str, BCMatrix]:
    return {"dagger_t": a.dagger_t(), "bar_t": a.bar_t(), "star_t": a.star_t()}


@dataclass(frozen=True)
class HermitianFlags:
    dagger: bool
    bar: bool
    star: bool


def classify_hermitian(a: BCMatrix, tol: float = PSD_TOL) -> HermitianFlags:
    _require_square(a)
    slack = tol * max(_scale(a), 1.0)

    def close(x, y):
        return np.linalg.norm(x - y, 2) <= slack

    return HermitianFlags(
        dagger=close(a.a1, a.a2.T),
        bar=close(a.a1, a.a2.conj().T),
        star=close(a.a1, a.a1.conj().T) and close(a.a2, a.a2.conj().T),
    )


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of the three equivalent hyperbolic positivity tests."""

    is_star_hermitian: bool
    component_psd: tuple[bool, bool]
    min_component_eigenvalues: tuple[float, float]
    by_quadratic_form: bool
    by_components: bool
    by_cartesian: bool
    certificate: BCMatrix | None = field(default=None, compare=False)

    @property
    def is_positive(self) -> bool:
        return self.is_star_hermitian and all(self.component_psd)

    @property
    def consistent(self) -> bool:
        return self.by_quadratic_form == self.by_components == self.by_cartesian


def _hermitian_part(x: np.ndarray) -> np.ndarray:
    return (x + x.conj().T) / 2


def quadratic_form_samples(a: BCMatrix) -> list[tuple[np.ndarray, np.ndarray]]:
    """Sample columns ``c = c1 e + c2 e_dag`` for the cone test ``c*t A c``.

    Canonical columns, pair sums ``e_k + e_l`` and ``e_k + i e_l`` expose any
    non-Hermitian part.  The lowest eigenvector of each component's Hermitian
    part is appended so the sampled minimum is the true one.
    """
    n = a.rows
    eye = np.eye(n, dtype=complex)
    cols = [eye[k] for k in range(n)]
    for k, l in combinations(range(n), 2):
        cols.append(eye[k] + eye[l])
        cols.append(eye[k] + 1j * eye[l])
    samples = [(c, c) for c in cols]
    v1 = np.linalg.eigh(_hermitian_part(a.a1))[1][:, 0]
    v2 = np.linalg.eigh(_hermitian_part(a.a2))[1][:, 0]
    samples.append((v1, v2))
    return samples


def _quadratic_form_in_cone(a: BCMatrix, slack: float) -> bool:
    for c1, c2 in quadratic_form_samples(a):
        c = BCMatrix(c1[:, None], c2[:, None])
        value = (c.star_t() @ a @ c)[0, 0]
        # D+ means hyperbolic with nonnegative idempotent coefficients
        if not value.is_hyperbolic(slack):
            return False
        h = HyperbolicNumber(value.z1.real, value.z2.imag)
        if h.nu < -slack or h.mu < -slack:
            return False
    return True


def _cartesian_positive(a: BCMatrix, slack: float) -> bool:
    # A = X + Y j with X >= 0, Y skew-Hermitian and -X <= iY <= X
    x, y = a.z1, a.z2
    if np.linalg.norm(x - x.conj().T, 2) > slack:
        return False
    if np.linalg.norm(y + y.conj().T, 2) > slack:
        return False
    x = _hermitian_part(x)
    iy = _hermitian_part(1j * y)
    floors = [np.linalg.eigvalsh(m)[0] for m in (x, x - iy, x + iy)]
    return min(floors) >= -slack


def mat_is_hyperbolic_positive(a: BCMatrix, tol: float = PSD_TOL) -> PositivityReport:
    _require_square(a)
    slack = tol * max(_scale(a), 1.0)
    flags = classify_hermitian(a, tol)
    mins = []
    psd = []
    for comp in (a.a1, a.a2):
        herm = np.linalg.norm(comp - comp.conj().T, 2) <= slack
        lam = float(np.linalg.eigvalsh(_hermitian_part(comp))[0])
        mins.append(lam)
        psd.append(herm and lam >= -slack)
    by_components = all(psd)
    return PositivityReport(
        is_star_hermitian=flags.star,
        component_psd=(psd[0], psd[1]),
        min_component_eigenvalues=(mins[0], mins[1]),
        by_quadratic_form=_quadratic_form_in_cone(a, slack),
        by_components=by_components,
        by_cartesian=_cartesian_positive(a, slack),
        certificate=_factor(a, hermitian=False) if by_components and flags.star else None,
    )


def _component_sqrt(comp: np.ndarray, hermitian: bool) -> np.ndarray:
    lam, vec = np.linalg.eigh(_hermitian_part(comp))
    root = np.sqrt(np.clip(lam, 0.0, None))
    if hermitian:
        return (vec * root) @ vec.conj().T
    return root[:, None] * vec.conj().T


def _factor(a: BCMatrix, hermitian: bool) -> BCMatrix:
    return BCMatrix(_component_sqrt(a.a1, hermitian), _component_sqrt(a.a2, hermitian))


def mat_positive_factor(
    a: BCMatrix, hermitian: bool = False, tol: float = PSD_TOL
) -> BCMatrix:
    """Return ``B`` with ``B.star_t() @ B == a``.

    With ``hermitian=True`` the factor is the positive square root ``C``,
    itself hyperbolic positive, with ``C @ C == a``.
    """
    report = mat_is_hyperbolic_positive(a, tol)
    if not report.is_positive:
        raise NotPositive("matrix is not hyperbolic positive")
    return _factor(a, hermitian)


def mat_eigen_component(a: BCMatrix) -> tuple[np.ndarray, np.ndarray]:
    _require_square(a)
    return np.linalg.eigvals(a.a1), np.linalg.eigvals(a.a2)


def recombine_eigenvalues(spectra: tuple[np.ndarray, np.ndarray]) -> list[BicomplexNumber]:
    """Every ``g1 e + g2 e_dag`` with ``g1``, ``g2`` from the two spectra."""
    return [
        BicomplexNumber.from_idempotent(g1, g2) for g1 in spectra[0] for g2 in spectra[1]
    ]


def mat_is_star_unitary(u: BCMatrix, tol: float = UNITARY_TOL) -> bool:
    _require_square(u)
    n = u.rows
    eye = np.eye(n)
    slack = tol * max(1.0, _scale(u) ** 2)

    def near(x, y):
        return np.linalg.norm(x - y, 2) <= slack

    components = all(
        near(c @ c.conj().T, eye) and near(c.conj().T @ c, eye) for c in (u.a1, u.a2)
    )
    x, y = u.z1, u.z2
    xh, yh = x.conj().T, y.conj().T
    cartesian = (
        near(x @ xh + y @ yh, eye)
        and near(xh @ x + yh @ y, eye)
        and near(y @ xh, x @ yh)
        and near(xh @ y, yh @ x)
    )
    return components and cartesian


def forcing_samples(n: int) -> list[BCMatrix]:
    """Columns ``e_k``, ``e_k + e_l`` and ``e_k + i e_l`` as bicomplex vectors."""
    eye = np.eye(n, dtype=complex)
    cols = [eye[k] for k in range(n)]
    for k, l in combinations(range(n), 2):
        cols.append(eye[k] + eye[l])
        cols.append(eye[k] + 1j * eye[l])
    return [BCMatrix(c[:, None], c[:, None]) for c in cols]


def quadratic_form_in_d(
    a: BCMatrix, samples: Sequence[BCMatrix] | None = None, tol: float = PSD_TOL
) -> bool:
    """Whether ``b^t A b*`` is hyperbolic for every sample column ``b``."""
    _require_square(a)
    samples = forcing_samples(a.rows) if samples is None else samples
    slack = tol * max(_scale(a), 1.0)
    for b in samples:
        b_norm = max(b.norm(), 1.0)
        value = (b.transpose() @ a @ b.star())[0, 0]
        if not value.is_hyperbolic(slack * b_norm ** 2):
            return False
    return True


def mat_hermitian_forcing_check(
    a: BCMatrix, samples: Sequence[BCMatrix] | None = None, tol: float = PSD_TOL
) -> bool:
    """Truth of "quadratic form lands in D implies A is star-Hermitian" on ``a``."""
    if not quadratic_form_in_d(a, samples, tol):
        return True
    return classify_hermitian(a, tol).star
