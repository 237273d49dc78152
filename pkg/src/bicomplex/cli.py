"""Command line front end: JSON requests in, JSON responses out.

Single request::

    bc-cli decompose '{"z1":[0,0],"z2":[1,0]}'
    bc-cli blaschke --a '{"b1":[0,0],"b2":[0,0]}' --at '{"b1":[0.5,0],"b2":[0.5,0]}'

Batch mode reads one ``{"command": ..., "payload": {...}}`` object per line
of standard input and writes one response per line.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from . import __version__
from . import codec
from .analytic import (
    DEFAULT_TRUNCATION,
    cr_residual,
    derivative,
    eval_at,
    geometric_tail_bound,
    hardy_dnorm,
    hardy_inner,
    reproduce_check,
)
from .biquat import hc_inner
from .codec import ParseError
from .errors import BicomplexError
from .matrix import (
    BCMatrix,
    classify_hermitian,
    mat_det,
    mat_eigen_component,
    mat_hermitian_forcing_check,
    mat_invert,
    mat_is_hyperbolic_positive,
    mat_is_invertible,
    mat_is_star_unitary,
    mat_positive_factor,
    quadratic_form_in_d,
)
from .scalar import (
    dplus_contains,
    euclidean_norm,
    hyperbolic_norm,
    invert,
    modulus_i2,
    modulus_j2,
    modulus_k2,
    order_compare,
    sphere_contains,
    sup_d,
)
from .schur import (
    SCHUR_TOL,
    KERNEL_TOL,
    backward_shift_realization,
    blaschke,
    kernel_positivity_check,
    realization_eval,
    realization_kernel_residual,
    sample_points,
    schur_algorithm,
    schur_kernel_ks,
    szego_kernel_value,
    taylor_from_realization,
    torus_point,
)
from .space import (
    BCVector,
    SesquilinearForm,
    apply_functional,
    inner_canonical,
    inner_weighted,
    norms,
    polarization_eval,
    riesz_representer,
    schwarz_check,
)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_DOMAIN = 2


@dataclass(frozen=True)
class Context:
    tol: float | None
    truncation: int
    seed: int

    def tol_or(self, default: float) -> float:
        return default if self.tol is None else self.tol


Handler = Callable[[Any, Context], dict]
COMMANDS: dict[str, tuple[Handler, tuple[str, ...]]] = {}


def command(name: str, *keys: str):
    def register(fn: Handler) -> Handler:
        COMMANDS[name] = (fn, keys)
        return fn

    return register


def _get(payload: Any, key: str):
    if not isinstance(payload, dict) or key not in payload:
        raise ParseError(f"missing key {key!r}")
    return payload[key]


def _int(payload: dict, key: str, default: int) -> int:
    value = payload.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
        raise ParseError(f"{key} must be a positive integer")
    return value


def _matrix_arg(payload: Any) -> BCMatrix:
    if isinstance(payload, dict) and "matrix" in payload:
        return codec.parse_matrix(payload["matrix"])
    return codec.parse_matrix(payload)


# handlers


@command("decompose")
def _decompose(payload: Any, ctx: Context) -> dict:
    if isinstance(payload, dict) and ("b1" in payload or "b2" in payload) and "z1" not in payload:
        z = codec.parse_bicomplex(payload)
        return {"z1": codec.cpx(z.z1), "z2": codec.cpx(z.z2)}
    z = codec.parse_bicomplex(payload)
    return {"b1": codec.cpx(z.b1), "b2": codec.cpx(z.b2)}


@command("conj")
def _conj(payload: Any, ctx: Context) -> dict:
    if isinstance(payload, dict) and "q1" in payload:
        q = codec.parse_biquaternion(payload)
        out = {
            name: codec.biquaternion(getattr(q, name)())
            for name in ("odot", "bar", "dagger1", "star", "dagger2", "dagger3", "diamond")
        }
        out["self_inner"] = codec.biquaternion(hc_inner(q, q))
        return out
    z = codec.parse_bicomplex(payload)
    return {
        "bar": codec.bicomplex(z.bar()),
        "dagger": codec.bicomplex(z.dagger()),
        "star": codec.bicomplex(z.star()),
    }


@command("moduli")
def _moduli(payload: Any, ctx: Context) -> dict:
    z = codec.parse_bicomplex(payload)
    zd = z.is_zero_divisor()
    return {
        "i2": codec.bicomplex(modulus_i2(z)),
        "j2": codec.bicomplex(modulus_j2(z)),
        "k2": codec.hyperbolic(modulus_k2(z)),
        "hyperbolic_norm": codec.hyperbolic(hyperbolic_norm(z)),
        "euclidean_norm": codec.real(euclidean_norm(z)),
        "zero_divisor_or_zero": zd,
        "inverse": None if zd else codec.bicomplex(invert(z)),
        "projections": {
            "pi1_i": codec.cpx(z.b1),
            "pi2_i": codec.cpx(z.b2),
            "pi1_j": codec.cpx(z.gamma1),
            "pi2_j": codec.cpx(z.gamma2),
            "Pi1_i": codec.cpx(z.z1),
            "Pi2_i": codec.cpx(z.z2),
            "Pi1_j": codec.cpx(z.eta1),
            "Pi2_j": codec.cpx(z.eta2),
        },
    }


@command("order", "h1", "h2", "set", "h", "z", "gamma0")
def _order(payload: Any, ctx: Context) -> dict:
    if not isinstance(payload, dict):
        raise ParseError("order expects an object")
    tol = ctx.tol_or(1e-10)
    out: dict = {}
    if "h1" in payload or "h2" in payload:
        h1 = codec.parse_hyperbolic(_get(payload, "h1"))
        h2 = codec.parse_hyperbolic(_get(payload, "h2"))
        out["relation"] = order_compare(h1, h2, tol).value
    if "set" in payload:
        values = payload["set"]
        if not isinstance(values, list):
            raise ParseError("set must be a list")
        out["sup"] = codec.hyperbolic(sup_d([codec.parse_hyperbolic(v) for v in values]))
    if "h" in payload:
        out["in_cone"] = dplus_contains(codec.parse_hyperbolic(payload["h"]), tol)
    if "z" in payload or "gamma0" in payload:
        z = codec.parse_bicomplex(_get(payload, "z"))
        g = codec.parse_hyperbolic(_get(payload, "gamma0"))
        out["on_sphere"] = sphere_contains(z, g, tol)
    if not out:
        raise ParseError("order needs h1/h2, set, h or z/gamma0")
    return out


@command("matinfo", "matrix", "other")
def _matinfo(payload: Any, ctx: Context) -> dict:
    a = _matrix_arg(payload)
    out: dict = {"rows": a.rows, "cols": a.cols}
    if a.is_square():
        flags = classify_hermitian(a)
        invertible = mat_is_invertible(a)
        out.update(
            det=codec.bicomplex(mat_det(a)),
            invertible=invertible,
            inverse=codec.matrix(mat_invert(a)) if invertible else None,
            hermitian={"dagger": flags.dagger, "bar": flags.bar, "star": flags.star},
            star_unitary=mat_is_star_unitary(a),
        )
    if isinstance(payload, dict) and "other" in payload:
        b = codec.parse_matrix(payload["other"])
        lhs = mat_det(a @ b)
        rhs = mat_det(a) * mat_det(b)
        out["binet"] = {
            "det_product": codec.bicomplex(lhs),
            "product_of_dets": codec.bicomplex(rhs),
            "abs_error": codec.real(euclidean_norm(lhs - rhs)),
        }
    return out


@command("positivity", "matrix", "hermitian_root")
def _positivity(payload: Any, ctx: Context) -> dict:
    a = _matrix_arg(payload)
    tol = ctx.tol_or(1e-9)
    report = mat_is_hyperbolic_positive(a, tol)
    out = {
        "is_positive": report.is_positive,
        "is_star_hermitian": report.is_star_hermitian,
        "component_psd": list(report.component_psd),
        "min_component_eigenvalues": [codec.real(x) for x in report.min_component_eigenvalues],
        "by_quadratic_form": report.by_quadratic_form,
        "by_components": report.by_components,
        "by_cartesian": report.by_cartesian,
        "consistent": report.consistent,
        "form_in_d": quadratic_form_in_d(a, tol=tol),
        "hermitian_forcing_holds": mat_hermitian_forcing_check(a, tol=tol),
    }
    if report.is_positive:
        root = bool(payload.get("hermitian_root", False)) if isinstance(payload, dict) else False
        b = mat_positive_factor(a, hermitian=root, tol=tol)
        out["factor"] = codec.matrix(b)
        recon = b @ b if root else b.star_t() @ b
        out["factor_residual"] = codec.real((recon - a).norm())
    return out


@command("eig", "matrix")
def _eig(payload: Any, ctx: Context) -> dict:
    a = _matrix_arg(payload)
    s1, s2 = mat_eigen_component(a)
    return {"spectrum_1": codec.sorted_spectrum(s1), "spectrum_2": codec.sorted_spectrum(s2)}


@command("inner", "z", "w", "gram")
def _inner(payload: Any, ctx: Context) -> dict:
    z = codec.parse_vector(_get(payload, "z"))
    w = codec.parse_vector(_get(payload, "w"))
    gram = codec.parse_matrix(payload["gram"]) if "gram" in payload else None
    value = inner_canonical(z, w) if gram is None else inner_weighted(z, w, gram)
    rz, hz = norms(z, gram)
    rw, hw = norms(w, gram)
    out = {
        "value": codec.bicomplex(value),
        "norm_z": {"real": codec.real(rz), "hyperbolic": codec.hyperbolic(hz)},
        "norm_w": {"real": codec.real(rw), "hyperbolic": codec.hyperbolic(hw)},
    }
    if gram is None:
        first, second = schwarz_check(z, w)
        out["schwarz"] = {"real": first, "hyperbolic": second}
    return out


@command("riesz", "coeffs")
def _riesz(payload: Any, ctx: Context) -> dict:
    c = codec.parse_vector(_get(payload, "coeffs"))
    y = riesz_representer(c)
    n = len(c)
    err = 0.0
    for k in range(n):
        basis = BCVector.basis(n, k)
        err = max(err, euclidean_norm(inner_canonical(basis, y) - apply_functional(c, basis)))
    return {"representer": codec.vector(y), "max_basis_error": codec.real(err)}


@command("polarize", "gram", "x", "y")
def _polarize(payload: Any, ctx: Context) -> dict:
    form = SesquilinearForm(codec.parse_matrix(_get(payload, "gram")))
    x = codec.parse_vector(_get(payload, "x"))
    y = codec.parse_vector(_get(payload, "y"))
    p = polarization_eval(form, x, y)
    return {
        "one_i": codec.bicomplex(p.one_i),
        "j_k": codec.bicomplex(p.j_k),
        "one_j": codec.bicomplex(p.one_j),
        "i_k": codec.bicomplex(p.i_k),
        "direct": codec.bicomplex(p.direct),
        "max_error": codec.real(p.max_error()),
    }


@command("holo-eval", "f", "at", "step")
def _holo_eval(payload: Any, ctx: Context) -> dict:
    f = codec.parse_coefficient_function(_get(payload, "f"))
    z = codec.parse_bicomplex(_get(payload, "at"))
    step = payload.get("step", 1e-4)
    if not isinstance(step, (int, float)) or step <= 0:
        raise ParseError("step must be a positive number")
    res = cr_residual(f, z, float(step))
    return {
        "value": codec.bicomplex(eval_at(f, z)),
        "derivative": codec.bicomplex(eval_at(derivative(f), z)),
        "cr": {
            "d_dagger": codec.bicomplex(res.d_dagger),
            "d_bar": codec.bicomplex(res.d_bar),
            "d_star": codec.bicomplex(res.d_star),
            "d_z": codec.bicomplex(res.d_z),
            "max_residual": codec.real(res.max_residual()),
        },
    }


@command("hardy", "f", "g", "a")
def _hardy(payload: Any, ctx: Context) -> dict:
    f = codec.parse_coefficient_function(_get(payload, "f"))
    g = codec.parse_coefficient_function(payload["g"]) if "g" in payload else f
    out = {
        "inner": codec.bicomplex(hardy_inner(f, g)),
        "dnorm_f": codec.hyperbolic(hardy_dnorm(f)),
    }
    if "a" in payload:
        a = codec.parse_bicomplex(payload["a"])
        n = max(ctx.truncation, f.N)
        rep = reproduce_check(f, a, n)
        val = eval_at(f, a)
        radius = max(abs(a.b1), abs(a.b2))
        out["reproduce"] = {
            "kernel_inner": codec.bicomplex(rep),
            "value": codec.bicomplex(val),
            "abs_error": codec.real(euclidean_norm(rep - val)),
            "truncation": n,
            "tail_bound": codec.real(geometric_tail_bound(radius, n)),
        }
    return out


@command("schur-run", "s", "max_steps")
def _schur_run(payload: Any, ctx: Context) -> dict:
    s = codec.parse_schur(_get(payload, "s"))
    steps = _int(payload, "max_steps", 64)
    r1, r2 = schur_algorithm(s, steps, ctx.tol_or(SCHUR_TOL))
    tol = ctx.tol_or(SCHUR_TOL)
    return {
        "rho_1": codec.complex_list(r1),
        "rho_2": codec.complex_list(r2),
        "terminated": [abs(1 - abs(r1[-1])) <= tol, abs(1 - abs(r2[-1])) <= tol],
    }


@command("blaschke", "a", "at", "torus")
def _blaschke(payload: Any, ctx: Context) -> dict:
    a = codec.parse_bicomplex(_get(payload, "a"))
    s, r = blaschke(a)
    out = {
        "realization": codec.realization(r),
        "star_unitary": mat_is_star_unitary(r.block()),
    }
    points = []
    if "at" in payload:
        points.append(("value", codec.parse_bicomplex(payload["at"])))
    if "torus" in payload:
        t = payload["torus"]
        if not (isinstance(t, list) and len(t) == 2):
            raise ParseError("torus must be [theta1, theta2]")
        points.append(("torus_value", torus_point(float(t[0]), float(t[1]))))
    for name, z in points:
        v = s(z)
        out[name] = codec.bicomplex(v)
        out[name.replace("value", "hyperbolic_modulus")] = codec.hyperbolic(hyperbolic_norm(v))
    return out


@command("realize", "realization", "at", "s", "N")
def _realize(payload: Any, ctx: Context) -> dict:
    if not isinstance(payload, dict):
        raise ParseError("realize expects an object")
    if "realization" in payload:
        r = codec.parse_realization(payload["realization"])
        return {"value": codec.matrix(realization_eval(r, codec.parse_bicomplex(_get(payload, "at"))))}
    s = codec.parse_schur(_get(payload, "s"))
    n = _int(payload, "N", 16)
    r = backward_shift_realization(s, n)
    recon = taylor_from_realization(r, n)
    expected = s.coefficients(n)
    err = float(max(np.max(np.abs(recon.c1 - expected.c1)), np.max(np.abs(recon.c2 - expected.c2))))
    return {
        "state_dim": r.state_dim,
        "taylor": [codec.bicomplex(c) for c in recon.coeffs],
        "max_error": codec.real(err),
    }


@command("kernel-check", "kernel", "s", "points", "n_points", "a", "pairs")
def _kernel_check(payload: Any, ctx: Context) -> dict:
    if not isinstance(payload, dict):
        raise ParseError("kernel-check expects an object")
    name = payload.get("kernel", "szego")
    if name == "realization":
        a = codec.parse_bicomplex(_get(payload, "a"))
        _, r = blaschke(a)
        pairs = _int(payload, "pairs", 25)
        pts = sample_points(2 * pairs, seed=ctx.seed)
        worst = max(
            realization_kernel_residual(r, pts[2 * m].z, pts[2 * m + 1].z) for m in range(pairs)
        )
        return {"kernel": name, "pairs": pairs, "max_identity_residual": codec.real(worst)}
    if "points" in payload:
        if not isinstance(payload["points"], list):
            raise ParseError("points must be a list")
        points = [codec.parse_bicomplex(p) for p in payload["points"]]
    else:
        points = [p.z for p in sample_points(_int(payload, "n_points", 8), seed=ctx.seed)]
    if name == "szego":
        kernel = szego_kernel_value
    elif name == "ks":
        s = codec.parse_schur(_get(payload, "s"))

        def kernel(z, w):
            return schur_kernel_ks(s, z, w)
    else:
        raise ParseError(f"unknown kernel {name!r}")
    rep = kernel_positivity_check(kernel, points, ctx.tol_or(KERNEL_TOL))
    return {
        "kernel": name,
        "n_points": len(points),
        "positive": rep.positive,
        "hermitian": rep.hermitian,
        "min_eigenvalues": [codec.real(x) for x in rep.min_eigenvalues],
    }


# dispatch


def _envelope(name: str, body: dict) -> dict:
    return {"command": name, "version": __version__, **body}


def run_request(name: str, payload: Any, ctx: Context) -> tuple[int, dict]:
    """Execute one request and return ``(exit code, response)``."""
    if name not in COMMANDS:
        return EXIT_MALFORMED, _envelope(
            name, {"error": {"code": "UsageError", "message": f"unknown command {name!r}"}}
        )
    handler, _ = COMMANDS[name]
    try:
        result = handler(payload, ctx)
    except BicomplexError as exc:
        return EXIT_DOMAIN, _envelope(name, {"error": {"code": exc.code, "message": str(exc)}})
    except ParseError as exc:
        return EXIT_MALFORMED, _envelope(name, {"error": {"code": "ParseError", "message": str(exc)}})
    except (TypeError, ValueError, KeyError, AttributeError) as exc:
        return EXIT_MALFORMED, _envelope(name, {"error": {"code": "ParseError", "message": str(exc)}})
    return EXIT_OK, _envelope(name, {"result": result})


def _default_tol() -> float | None:
    raw = os.environ.get("BC_TOL")
    if raw is None:
        return None
    try:
        value = float(raw)
    except ValueError:
        raise SystemExit(f"BC_TOL must be a number, got {raw!r}")
    if not (math.isfinite(value) and value > 0):
        raise SystemExit("BC_TOL must be positive")
    return value


def _add_global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--tol", type=float, default=default, help="tolerance override")
    p.add_argument("--truncation", type=int, default=default if suppress else DEFAULT_TRUNCATION)
    p.add_argument("--seed", type=int, default=default if suppress else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bc-cli", description="Bicomplex numerics over JSON.")
    parser.add_argument("--batch", action="store_true", help="read requests from stdin, one per line")
    parser.add_argument("--version", action="version", version=__version__)
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command")
    for name, (_, keys) in COMMANDS.items():
        p = sub.add_parser(name)
        p.add_argument("payload", nargs="?", help="JSON payload")
        for key in keys:
            p.add_argument(f"--{key.replace('_', '-')}", dest=f"key_{key}", help=f"JSON value for {key!r}")
        _add_global_flags(p, suppress=True)
    return parser


def _payload_from_args(args: argparse.Namespace) -> Any:
    payload: Any = json.loads(args.payload) if args.payload else {}
    for key in COMMANDS[args.command][1]:
        raw = getattr(args, f"key_{key}", None)
        if raw is None:
            continue
        if not isinstance(payload, dict):
            raise ParseError("flags cannot be combined with a non-object payload")
        payload[key] = json.loads(raw)
    return payload


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.truncation is not None and args.truncation <= 0:
        parser.error("--truncation must be positive")
    tol = args.tol if args.tol is not None else _default_tol()
    ctx = Context(tol=tol, truncation=args.truncation, seed=args.seed)
    out = sys.stdout

    if args.batch:
        worst = EXIT_OK
        for lineno, line in enumerate(sys.stdin, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                req = json.loads(line)
                name = req["command"]
                payload = req.get("payload", {})
                if not isinstance(name, str):
                    raise TypeError("command must be a string")
            except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
                code, resp = EXIT_MALFORMED, _envelope(
                    "", {"error": {"code": "ParseError", "message": f"line {lineno}: {exc}"}}
                )
            else:
                code, resp = run_request(name, payload, ctx)
            if code != EXIT_OK:
                print(f"line {lineno}: {resp['error']['code']}", file=sys.stderr)
                worst = EXIT_MALFORMED if EXIT_MALFORMED in (worst, code) else max(worst, code)
            out.write(codec.dumps(resp) + "\n")
        return worst

    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_MALFORMED
    try:
        payload = _payload_from_args(args)
    except (json.JSONDecodeError, ParseError) as exc:
        resp = _envelope(args.command, {"error": {"code": "ParseError", "message": str(exc)}})
        out.write(codec.dumps(resp) + "\n")
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    code, resp = run_request(args.command, payload, ctx)
    if code != EXIT_OK:
        print(f"{resp['error']['code']}: {resp['error']['message']}", file=sys.stderr)
    out.write(codec.dumps(resp) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
