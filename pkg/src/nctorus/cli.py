"""Command-line front end.

Subcommands
    algebra-check        torus-algebra and module-action invariants at one theta
    theta-basis          holomorphic Gaussian basis data for one module label
    tensor               one product value, direct q-sum against closed form
    structure-constants  full coefficient table with series-oracle cross-check
    verify-all           every identity suite at the given parameters

Exit codes: 0 when every computed residual is within tolerance, 1 when a
residual exceeds its tolerance, 2 on invalid arguments or violated
preconditions.

theta accepts a tiny expression grammar over integers, decimals and
sqrt<N>: for example "0.2", "sqrt2-1", "(1+sqrt5)/2".  Complex flags are
passed as "re,im" (a bare real is also accepted).  Reports serialize to
JSON with schema version 1; the structure-constant table additionally to
CSV.  Identical inputs produce byte-identical output.

The --tol flag governs the algebraic identity residuals (default 1e-9).
Series-oracle agreement and basis checks use their pinned tolerances:
1e-10 for closed form against direct summation, 1e-8 for holomorphic
closure and basis reconstruction.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import random
import re
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import gaussians as gs
from .algebra import (
    TWO_PI_I,
    add,
    derivation,
    element,
    involution,
    monomial,
    mul,
    norm_max,
    scale,
    sub,
    theta_prime,
    trace,
)
from .connections import (
    ComplexStructure,
    curvature_constant,
    curvature_defect,
    dbar_residual,
    holomorphic_basis,
    leibniz_defect,
)
from .errors import DegenerateDenominator, IndexOutOfRange, NCTorusError
from .modules import (
    LEFT,
    RIGHT,
    act_element,
    act_U1,
    act_U2,
    act_Z1,
    act_Z2,
    module_tag,
)
from .tensor import (
    PROBE_ZS,
    product_basis,
    product_params,
    structure_constants,
    tensor_direct,
    tensor_gaussian_closed,
    verify_delta_period,
    verify_identification,
    verify_z_covariance,
)

ORACLE_TOL = 1e-10
BASIS_TOL = 1e-8

_TOKEN_RE = re.compile(r"\s*(?:sqrt(\d+)|(\d+\.\d*|\.\d+|\d+)|([()+\-*/])|(\S))")


def parse_theta(text: str) -> float:
    """Evaluate the theta expression grammar: ints, decimals, sqrt<N>, + - * / ()."""
    tokens: list[object] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        sqrt_arg, number, op, bad = match.groups()
        if bad is not None:
            raise ValueError(f"unexpected character {bad!r} in theta expression")
        if sqrt_arg is not None:
            tokens.append(math.sqrt(int(sqrt_arg)))
        elif number is not None:
            tokens.append(float(number))
        else:
            tokens.append(op)
        pos = match.end()
    if not tokens:
        raise ValueError("empty theta expression")

    idx = 0

    def peek() -> object | None:
        return tokens[idx] if idx < len(tokens) else None

    def take() -> object:
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def atom() -> float:
        tok = peek()
        if tok == "(":
            take()
            val = expr()
            if peek() != ")":
                raise ValueError("unbalanced parenthesis in theta expression")
            take()
            return val
        if isinstance(tok, float):
            take()
            return tok
        raise ValueError(f"unexpected token {tok!r} in theta expression")

    def factor() -> float:
        if peek() == "-":
            take()
            return -factor()
        return atom()

    def term() -> float:
        val = factor()
        while peek() in ("*", "/"):
            if take() == "*":
                val *= factor()
            else:
                val /= factor()
        return val

    def expr() -> float:
        val = term()
        while peek() in ("+", "-"):
            if take() == "+":
                val += term()
            else:
                val -= term()
        return val

    result = expr()
    if idx != len(tokens):
        raise ValueError(f"trailing tokens in theta expression {text!r}")
    return result


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"expected 're,im', got {text!r}")


def parse_int_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'p,q', got {text!r}")
    return int(parts[0]), int(parts[1])


@dataclass(frozen=True)
class RunConfig:
    theta: float = 0.2
    nm: tuple[int, int] = (1, 2)
    kl: tuple[int, int] = (1, 3)
    tau: complex = -1j
    c1: complex = 0j
    c2: complex = 0j
    tol: float = 1e-9
    qmax: int = 16384
    seed: int = 0
    output: str | None = None
    fmt: str = "json"

    def to_json(self) -> dict:
        return {
            "theta": self.theta,
            "nm": list(self.nm),
            "kl": list(self.kl),
            "tau": [self.tau.real, self.tau.imag],
            "c1": [self.c1.real, self.c1.imag],
            "c2": [self.c2.real, self.c2.imag],
            "tol": self.tol,
            "qmax": self.qmax,
            "seed": self.seed,
        }


def _c2p(z: complex) -> list[float]:
    return [z.real, z.imag]


def _random_element(rng: random.Random, terms: int = 3):
    out = {}
    for _ in range(terms):
        idx = (rng.randint(-2, 2), rng.randint(-2, 2))
        out[idx] = out.get(idx, 0j) + complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return element(out)


def _random_gaussian(rng: random.Random, m: int, with_poly: bool = False):
    sigma = complex(rng.uniform(0.6, 1.6), rng.uniform(-0.4, 0.4))
    c = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
    mu = rng.randrange(m)
    poly: tuple[complex, ...] = (1.0 + 0j,)
    if with_poly:
        poly = (
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
        )
    return gs.gaussian(m, sigma, c, mu, poly)


class CheckList:
    """Accumulates named residuals and their tolerances."""

    def __init__(self) -> None:
        self.entries: list[dict] = []

    def add(self, name: str, residual: float, tol: float) -> None:
        self.entries.append(
            {"name": name, "residual": residual, "tol": tol, "pass": residual <= tol}
        )

    def skip(self, name: str, reason: str) -> None:
        self.entries.append({"name": name, "skipped": True, "reason": reason})

    @property
    def ok(self) -> bool:
        return all(e.get("pass", True) for e in self.entries)


def _algebra_checks(cfg: RunConfig, checks: CheckList) -> None:
    rng = random.Random(cfg.seed)
    th = cfg.theta
    worst = dict.fromkeys(
        ("associativity", "involution", "trace_cyclic", "trace_positive",
         "leibniz", "derivations_commute", "star_derivation"),
        0.0,
    )
    for _ in range(10):
        f, g, h = (_random_element(rng) for _ in range(3))
        worst["associativity"] = max(
            worst["associativity"],
            norm_max(sub(mul(mul(f, g, th), h, th), mul(f, mul(g, h, th), th))),
        )
        worst["involution"] = max(
            worst["involution"],
            norm_max(sub(involution(mul(f, g, th)), mul(involution(g), involution(f), th))),
        )
        worst["trace_cyclic"] = max(
            worst["trace_cyclic"], abs(trace(mul(f, g, th)) - trace(mul(g, f, th)))
        )
        ff = mul(f, involution(f), th)
        gram = sum(abs(v) ** 2 for v in f.coeffs.values())
        worst["trace_positive"] = max(worst["trace_positive"], abs(trace(ff) - gram))
        for axis in (1, 2):
            lhs = derivation(mul(f, g, th), axis)
            rhs = add(mul(derivation(f, axis), g, th), mul(f, derivation(g, axis), th))
            worst["leibniz"] = max(worst["leibniz"], norm_max(sub(lhs, rhs)))
            worst["star_derivation"] = max(
                worst["star_derivation"],
                norm_max(sub(derivation(involution(f), axis), involution(derivation(f, axis)))),
            )
        worst["derivations_commute"] = max(
            worst["derivations_commute"],
            norm_max(sub(derivation(derivation(f, 1), 2), derivation(derivation(f, 2), 1))),
        )
    u1u2 = mul(monomial(1, 0), monomial(0, 1), th)
    u2u1 = mul(monomial(0, 1), monomial(1, 0), th)
    weyl = norm_max(sub(u1u2, scale(cmath.exp(TWO_PI_I * th), u2u1)))
    for name, residual in worst.items():
        checks.add(name, residual, cfg.tol)
    checks.add("weyl_relation", weyl, cfg.tol)

    n, m = cfg.nm
    tag = module_tag(n, m, th)
    tp = theta_prime(th, tag.pair)
    v = _random_gaussian(rng, m, with_poly=True)
    scale_v = 1.0 + gs.grid_abs_max(v)

    def rel(a: gs.PolyGaussVector, b: gs.PolyGaussVector) -> float:
        return gs.grid_abs_max(gs.sub(a, b)) / scale_v

    checks.add(
        "module_u1u2_phase",
        rel(act_U2(act_U1(v, tag), tag), gs.scale(cmath.exp(TWO_PI_I * th), act_U1(act_U2(v, tag), tag))),
        cfg.tol,
    )
    checks.add(
        "endo_z1z2_phase",
        rel(act_Z2(act_Z1(v, tag), tag), gs.scale(cmath.exp(-TWO_PI_I * tp), act_Z1(act_Z2(v, tag), tag))),
        cfg.tol,
    )
    commute = 0.0
    for zgen in (act_Z1, act_Z2):
        for ugen in (act_U1, act_U2):
            commute = max(commute, rel(zgen(ugen(v, tag), tag), ugen(zgen(v, tag), tag)))
    checks.add("endo_commutes_with_action", commute, cfg.tol)
    f, g = _random_element(rng), _random_element(rng)
    checks.add(
        "module_axiom",
        rel(act_element(g, act_element(f, v, tag), tag), act_element(mul(f, g, th), v, tag)),
        cfg.tol,
    )
    k, l = cfg.kl
    try:
        left = module_tag(k, l, th, side=LEFT)
        mirror = module_tag(k, l, -th, side=RIGHT)
    except DegenerateDenominator as exc:
        checks.skip("left_equals_mirrored_right", str(exc))
        return
    w = _random_gaussian(rng, l)
    left_right = max(
        gs.grid_abs_max(gs.sub(act_U1(w, left), act_U1(w, mirror))),
        gs.grid_abs_max(gs.sub(act_U2(w, left), act_U2(w, mirror))),
    ) / (1.0 + gs.grid_abs_max(w))
    checks.add("left_equals_mirrored_right", left_right, cfg.tol)


def _connection_checks(cfg: RunConfig, checks: CheckList) -> None:
    rng = random.Random(cfg.seed + 1)
    n, m = cfg.nm
    tag = module_tag(n, m, cfg.theta)
    v = _random_gaussian(rng, m, with_poly=True)
    scale_v = 1.0 + gs.grid_abs_max(v)
    kappa = curvature_constant(tag)
    checks.add("curvature_constant", curvature_defect(v, tag) / (scale_v * abs(kappa)), cfg.tol)
    f = _random_element(rng)
    for axis in (1, 2):
        checks.add(
            f"leibniz_axis{axis}",
            leibniz_defect(v, f, tag, axis) / scale_v,
            cfg.tol,
        )


def _holomorphic_checks(cfg: RunConfig, checks: CheckList) -> None:
    cs = ComplexStructure(cfg.tau, cfg.c1, cfg.c2)
    pairs = (
        ("right", module_tag(cfg.nm[0], cfg.nm[1], cfg.theta)),
        ("left_mirror", module_tag(cfg.kl[0], cfg.kl[1], -cfg.theta)),
    )
    for label, tag in pairs:
        basis = holomorphic_basis(tag, cs)
        worst = max(dbar_residual(v, tag, cs) / gs.grid_abs_max(v) for v in basis)
        checks.add(f"holomorphic_closure_{label}", worst, BASIS_TOL)


def _identity_checks(cfg: RunConfig, checks: CheckList) -> None:
    rng = random.Random(cfg.seed + 2)
    n, m = cfg.nm
    k, l = cfg.kl
    p = product_params(n, m, k, l, cfg.theta, strict=False)
    f = _random_gaussian(rng, m)
    g = _random_gaussian(rng, l)
    checks.add("identification_u1", verify_identification(f, g, p, "U1", cfg.qmax), cfg.tol)
    checks.add("identification_u2", verify_identification(f, g, p, "U2", cfg.qmax), cfg.tol)
    checks.add("delta_periodicity", verify_delta_period(f, g, p, cfg.qmax), cfg.tol)
    res1, res2 = verify_z_covariance(f, g, p, cfg.qmax)
    checks.add("z1_covariance", res1, cfg.tol)
    checks.add("z2_covariance", res2, cfg.tol)


def _oracle_checks(cfg: RunConfig, checks: CheckList) -> None:
    rng = random.Random(cfg.seed + 3)
    n, m = cfg.nm
    k, l = cfg.kl
    p = product_params(n, m, k, l, cfg.theta, strict=False)
    worst = 0.0
    for _ in range(2):
        sigma1 = complex(rng.uniform(0.6, 1.6), rng.uniform(-0.4, 0.4))
        sigma2 = complex(rng.uniform(0.6, 1.6), rng.uniform(-0.4, 0.4))
        c1 = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        c2 = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        for alpha in range(m):
            for beta in range(l):
                form = tensor_gaussian_closed(alpha, beta, sigma1, c1, sigma2, c2, p)
                fv = gs.gaussian(m, sigma1, c1, alpha)
                gv = gs.gaussian(l, sigma2, c2, beta)
                for z in PROBE_ZS:
                    for delta in range(p.M):
                        direct = tensor_direct(fv, gv, p, z, delta, cfg.qmax)
                        closed = form.evaluate(z, delta)
                        worst = max(worst, abs(closed - direct) / (1 + abs(direct)))
    checks.add("closed_form_vs_direct", worst, ORACLE_TOL)


def _structure_constant_checks(cfg: RunConfig, checks: CheckList) -> dict:
    n, m = cfg.nm
    k, l = cfg.kl
    p = product_params(n, m, k, l, cfg.theta)
    cs = ComplexStructure(cfg.tau, cfg.c1, cfg.c2)
    sc = structure_constants(p, cs)
    basis = product_basis(p, cs)
    tag_f = module_tag(n, m, cfg.theta)
    tag_g = module_tag(k, l, -cfg.theta)
    basis_f = holomorphic_basis(tag_f, cs)
    basis_g = holomorphic_basis(tag_g, cs)
    cmax = max(
        abs(sc.values[a][b][gmm]) for a in range(m) for b in range(l) for gmm in range(p.M)
    )
    oracle = 0.0
    recon = 0.0
    for alpha in range(m):
        for beta in range(l):
            for gamma in range(p.M):
                val = sc.values[alpha][beta][gamma]
                d0 = tensor_direct(basis_f[alpha], basis_g[beta], p, 0.0, gamma, cfg.qmax)
                # phi_gamma(0) = 1, so the coefficient itself is the value at z = 0.
                oracle = max(oracle, abs(val - d0) / (1 + abs(d0)))
                for z in (0.3, -0.5):
                    dz = tensor_direct(basis_f[alpha], basis_g[beta], p, z, gamma, cfg.qmax)
                    recon = max(recon, abs(dz - val * gs.evaluate(basis[gamma], z, gamma)))
    checks.add("structure_constants_vs_direct", oracle, ORACLE_TOL)
    checks.add("basis_reconstruction", recon / (1 + cmax), BASIS_TOL)
    return sc.to_json()


def _emit(doc: dict, cfg: RunConfig) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_csv(entries: list[dict], cfg: RunConfig) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alpha", "beta", "gamma", "re", "im", "q0"])
    for e in entries:
        writer.writerow(
            [e["alpha"], e["beta"], e["gamma"], repr(e["re"]), repr(e["im"]),
             "" if e["q0"] is None else e["q0"]]
        )
    if cfg.output:
        with open(cfg.output, "w", newline="") as handle:
            handle.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


def cmd_algebra_check(cfg: RunConfig, args: argparse.Namespace) -> int:
    checks = CheckList()
    _algebra_checks(cfg, checks)
    _connection_checks(cfg, checks)
    doc = {
        "schema": 1,
        "command": "algebra-check",
        "config": cfg.to_json(),
        "checks": checks.entries,
        "pass": checks.ok,
    }
    _emit(doc, cfg)
    return 0 if checks.ok else 1


def cmd_theta_basis(cfg: RunConfig, args: argparse.Namespace) -> int:
    n, m = cfg.nm
    side = LEFT if args.side == "left" else RIGHT
    tag = module_tag(n, m, cfg.theta, side=side)
    cs = ComplexStructure(cfg.tau, cfg.c1, cfg.c2)
    basis = holomorphic_basis(tag, cs)
    worst = max(dbar_residual(v, tag, cs) / gs.grid_abs_max(v) for v in basis)
    kappa = curvature_constant(tag)
    first = basis[0].terms[0]
    doc = {
        "schema": 1,
        "command": "theta-basis",
        "config": cfg.to_json(),
        "side": side,
        "sigma": _c2p(first.sigma),
        "c": _c2p(first.c),
        "count": len(basis),
        "curvature": _c2p(kappa),
        "dbar_residual": worst,
        "tol": BASIS_TOL,
        "pass": worst <= BASIS_TOL,
        "vectors": [gs.to_json(v) for v in basis],
    }
    _emit(doc, cfg)
    return 0 if worst <= BASIS_TOL else 1


def cmd_tensor(cfg: RunConfig, args: argparse.Namespace) -> int:
    n, m = cfg.nm
    k, l = cfg.kl
    p = product_params(n, m, k, l, cfg.theta)
    cs = ComplexStructure(cfg.tau, cfg.c1, cfg.c2)
    if not 0 <= args.alpha < m:
        raise IndexOutOfRange(f"alpha = {args.alpha} outside range(0, {m})")
    if not 0 <= args.beta < l:
        raise IndexOutOfRange(f"beta = {args.beta} outside range(0, {l})")
    tag_f = module_tag(n, m, cfg.theta)
    tag_g = module_tag(k, l, -cfg.theta)
    fv = holomorphic_basis(tag_f, cs)[args.alpha]
    gv = holomorphic_basis(tag_g, cs)[args.beta]
    sig_f = fv.terms[0]
    sig_g = gv.terms[0]
    form = tensor_gaussian_closed(
        args.alpha, args.beta, sig_f.sigma, sig_f.c, sig_g.sigma, sig_g.c, p
    )
    direct = tensor_direct(fv, gv, p, args.z, args.delta, cfg.qmax)
    closed = form.evaluate(args.z, args.delta)
    diff = abs(closed - direct)
    ok = diff <= cfg.tol * (1 + abs(direct))
    doc = {
        "schema": 1,
        "command": "tensor",
        "config": cfg.to_json(),
        "alpha": args.alpha,
        "beta": args.beta,
        "z": args.z,
        "delta": args.delta,
        "q0": form.q0(args.delta),
        "direct": _c2p(direct),
        "closed_form": _c2p(closed),
        "abs_diff": diff,
        "pass": ok,
    }
    _emit(doc, cfg)
    return 0 if ok else 1


def cmd_structure_constants(cfg: RunConfig, args: argparse.Namespace) -> int:
    checks = CheckList()
    sc_doc = _structure_constant_checks(cfg, checks)
    if cfg.fmt == "csv":
        _emit_csv(sc_doc["entries"], cfg)
        return 0 if checks.ok else 1
    doc = {
        "schema": 1,
        "command": "structure-constants",
        "config": cfg.to_json(),
        "structure_constants": sc_doc,
        "checks": checks.entries,
        "pass": checks.ok,
    }
    _emit(doc, cfg)
    return 0 if checks.ok else 1


def cmd_verify_all(cfg: RunConfig, args: argparse.Namespace) -> int:
    checks = CheckList()
    _algebra_checks(cfg, checks)
    _connection_checks(cfg, checks)
    _identity_checks(cfg, checks)
    _oracle_checks(cfg, checks)
    try:
        _holomorphic_checks(cfg, checks)
    except NCTorusError as exc:
        checks.skip("holomorphic_closure", str(exc))
    try:
        _structure_constant_checks(cfg, checks)
    except NCTorusError as exc:
        checks.skip("structure_constants", str(exc))
    doc = {
        "schema": 1,
        "command": "verify-all",
        "config": cfg.to_json(),
        "checks": checks.entries,
        "pass": checks.ok,
    }
    _emit(doc, cfg)
    return 0 if checks.ok else 1


COMMANDS: dict[str, Callable[[RunConfig, argparse.Namespace], int]] = {
    "algebra-check": cmd_algebra_check,
    "theta-basis": cmd_theta_basis,
    "tensor": cmd_tensor,
    "structure-constants": cmd_structure_constants,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theta", type=parse_theta, default=0.2,
                        help="rotation parameter; expression over ints, decimals, sqrt<N>")
    common.add_argument("--nm", type=parse_int_pair, default=(1, 2), metavar="N,M",
                        help="right module label (default 1,2)")
    common.add_argument("--kl", type=parse_int_pair, default=(1, 3), metavar="K,L",
                        help="left module label (default 1,3)")
    common.add_argument("--tau", type=parse_complex, default=-1j, metavar="RE,IM",
                        help="complex structure parameter (default 0,-1)")
    common.add_argument("--c1", type=parse_complex, default=0j, metavar="RE,IM",
                        help="first connection offset")
    common.add_argument("--c2", type=parse_complex, default=0j, metavar="RE,IM",
                        help="second connection offset")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="tolerance for identity residuals (default 1e-9)")
    common.add_argument("--qmax", type=int, default=16384,
                        help="series truncation cap (default 16384)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized instances (default 0)")
    common.add_argument("--output", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json",
                        help="output format; csv applies to structure-constants")

    parser = argparse.ArgumentParser(
        prog="nctorus",
        description="Closed-form module, connection, and tensor-product "
                    "computations over two-dimensional noncommutative tori.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("algebra-check", parents=[common],
                   help="run torus-algebra and module invariant checks")
    p_basis = sub.add_parser("theta-basis", parents=[common],
                             help="emit the holomorphic Gaussian basis for --nm")
    p_basis.add_argument("--side", choices=("right", "left"), default="right")
    p_tensor = sub.add_parser("tensor", parents=[common],
                              help="evaluate one product value two ways")
    p_tensor.add_argument("--alpha", type=int, default=0)
    p_tensor.add_argument("--beta", type=int, default=0)
    p_tensor.add_argument("--z", type=float, default=0.0)
    p_tensor.add_argument("--delta", type=int, default=0)
    sub.add_parser("structure-constants", parents=[common],
                   help="compute the coefficient table with cross-checks")
    sub.add_parser("verify-all", parents=[common],
                   help="run every identity suite at the given parameters")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on usage errors; keep main() returning a code
        return int(exc.code or 0)
    cfg = RunConfig(
        theta=args.theta,
        nm=args.nm,
        kl=args.kl,
        tau=args.tau,
        c1=args.c1,
        c2=args.c2,
        tol=args.tol,
        qmax=args.qmax,
        seed=args.seed,
        output=args.output,
        fmt=args.fmt,
    )
    try:
        return COMMANDS[args.command](cfg, args)
    except NCTorusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
