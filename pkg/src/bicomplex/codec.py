"""JSON encoding of library values."""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .analytic import CoefficientFunction
from .biquat import Biquaternion
from .matrix import BCMatrix
from .scalar import BicomplexNumber, HyperbolicNumber
from .schur import BlaschkeComponent, RealizationMatrix, SchurFunction, SeriesComponent
from .space import BCVector

DIGITS = 14


class ParseError(ValueError):
    """Payload does not follow the documented schema."""

    code = "ParseError"


# encoding


def real(x: float) -> float | int:
    x = float(x)
    if not math.isfinite(x):
        return str(x)
    x = float(f"{x:.{DIGITS}g}")
    if x == 0:
        return 0
    if x.is_integer() and abs(x) < 1e15:
        return int(x)
    return x


def cpx(z: complex) -> list:
    z = complex(z)
    return [real(z.real), real(z.imag)]


def bicomplex(z: BicomplexNumber) -> dict:
    return {"z1": cpx(z.z1), "z2": cpx(z.z2), "b1": cpx(z.b1), "b2": cpx(z.b2)}


def hyperbolic(h: HyperbolicNumber) -> dict:
    return {"a": real(h.a), "b": real(h.b), "nu": real(h.nu), "mu": real(h.mu)}


def biquaternion(q: Biquaternion) -> dict:
    return {"q1": bicomplex(q.q1), "q2": bicomplex(q.q2)}


def matrix(a: BCMatrix) -> dict:
    entries = [
        {"z1": cpx(x.z1), "z2": cpx(x.z2)} for row in a.entries() for x in row
    ]
    return {"rows": a.rows, "cols": a.cols, "entries": entries}


def vector(v: BCVector) -> dict:
    return {"entries": [{"z1": cpx(x.z1), "z2": cpx(x.z2)} for x in v.entries()]}


def coefficient_function(f: CoefficientFunction) -> dict:
    return {"N": f.N, "coeffs": [{"z1": cpx(c.z1), "z2": cpx(c.z2)} for c in f.coeffs]}


def realization(r: RealizationMatrix) -> dict:
    return {"A": matrix(r.A), "B": matrix(r.B), "C": matrix(r.C), "D": matrix(r.D)}


def _numpy_scalar(x: Any):
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return real(x)
    raise TypeError(f"cannot encode {type(x).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_numpy_scalar)


# decoding


def _require(payload: Any, key: str):
    if not isinstance(payload, dict) or key not in payload:
        raise ParseError(f"missing key {key!r}")
    return payload[key]


def parse_complex(x: Any) -> complex:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    if isinstance(x, list) and len(x) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in x
    ):
        return complex(x[0], x[1])
    raise ParseError(f"expected [re, im], got {x!r}")


def parse_bicomplex(x: Any) -> BicomplexNumber:
    if isinstance(x, (int, float, list)) and not isinstance(x, bool):
        return BicomplexNumber(parse_complex(x), 0j)
    if not isinstance(x, dict):
        raise ParseError(f"expected a bicomplex object, got {x!r}")
    if "z1" in x or "z2" in x:
        return BicomplexNumber(parse_complex(x.get("z1", 0)), parse_complex(x.get("z2", 0)))
    if "b1" in x or "b2" in x:
        return BicomplexNumber.from_idempotent(
            parse_complex(x.get("b1", 0)), parse_complex(x.get("b2", 0))
        )
    if "a" in x or "b" in x:
        return parse_hyperbolic(x).to_bicomplex()
    raise ParseError(f"bicomplex object needs z1/z2 or b1/b2 keys, got {sorted(x)}")


def parse_hyperbolic(x: Any) -> HyperbolicNumber:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return HyperbolicNumber(x)
    if not isinstance(x, dict):
        raise ParseError(f"expected a hyperbolic object, got {x!r}")
    if "a" in x or "b" in x:
        return HyperbolicNumber(_real(x.get("a", 0)), _real(x.get("b", 0)))
    if "nu" in x or "mu" in x:
        return HyperbolicNumber.from_idempotent(_real(x.get("nu", 0)), _real(x.get("mu", 0)))
    if "z1" in x or "b1" in x:
        return HyperbolicNumber.coerce(parse_bicomplex(x))
    raise ParseError(f"hyperbolic object needs a/b or nu/mu keys, got {sorted(x)}")


def _real(x: Any) -> float:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise ParseError(f"expected a real number, got {x!r}")


def parse_biquaternion(x: Any) -> Biquaternion:
    return Biquaternion(parse_bicomplex(_require(x, "q1")), parse_bicomplex(x.get("q2", 0)))


def parse_matrix(x: Any) -> BCMatrix:
    rows = _require(x, "rows")
    cols = _require(x, "cols")
    entries = _require(x, "entries")
    if not (isinstance(rows, int) and isinstance(cols, int) and isinstance(entries, list)):
        raise ParseError("matrix needs integer rows/cols and an entries list")
    if len(entries) != rows * cols or rows <= 0 or cols <= 0:
        raise ParseError(f"expected {rows}x{cols} entries, got {len(entries)}")
    values = [parse_bicomplex(v) for v in entries]
    return BCMatrix.from_entries([values[r * cols : (r + 1) * cols] for r in range(rows)])


def parse_vector(x: Any) -> BCVector:
    entries = x if isinstance(x, list) else _require(x, "entries")
    if not isinstance(entries, list) or not entries:
        raise ParseError("vector needs a nonempty entries list")
    return BCVector.from_entries([parse_bicomplex(v) for v in entries])


def parse_coefficient_function(x: Any) -> CoefficientFunction:
    coeffs = _require(x, "coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError("coefficient function needs a nonempty coeffs list")
    f = CoefficientFunction.from_coeffs([parse_bicomplex(c) for c in coeffs])
    n = x.get("N", f.N)
    if not isinstance(n, int) or n <= 0:
        raise ParseError("N must be a positive integer")
    return f.padded(n)


def parse_schur(x: Any) -> SchurFunction:
    if isinstance(x, dict) and "coeffs" in x:
        return SchurFunction.from_coefficients(parse_coefficient_function(x))
    if not isinstance(x, dict):
        raise ParseError("Schur function must be an object")
    comps = []
    for ell in (1, 2):
        zeros = x.get(f"blaschke_zeros_{ell}", [])
        if not isinstance(zeros, list):
            raise ParseError(f"blaschke_zeros_{ell} must be a list")
        constant = parse_complex(x.get(f"unimodular_{ell}", 1))
        comps.append(BlaschkeComponent(tuple(parse_complex(w) for w in zeros), constant))
    return SchurFunction(*comps)


def schur(s: SchurFunction) -> dict:
    out = {}
    for ell, comp in enumerate(s.components, start=1):
        if isinstance(comp, BlaschkeComponent):
            out[f"blaschke_zeros_{ell}"] = [cpx(w) for w in comp.zeros]
            out[f"unimodular_{ell}"] = cpx(comp.constant)
        elif isinstance(comp, SeriesComponent):
            out[f"coeffs_{ell}"] = [cpx(c) for c in comp.coeffs]
    return out


def parse_realization(x: Any) -> RealizationMatrix:
    return RealizationMatrix(*(parse_matrix(_require(x, key)) for key in "ABCD"))


def complex_list(values) -> list:
    return [cpx(v) for v in values]


def sorted_spectrum(values: np.ndarray) -> list:
    rounded = [complex(real(v.real), real(v.imag)) for v in values]
    return [cpx(v) for v in sorted(rounded, key=lambda c: (c.real, c.imag))]
