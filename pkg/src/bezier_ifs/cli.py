"""Command-line frontend: render, verify, converge, field.

Exit codes: 0 success, 1 usage error, 2 mathematical precondition or
identity failure, 3 I/O error.  Every flag may also be given in a flat
`key = value` config file (--config); explicit flags win.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import emit, verify
from .decasteljau import build_ifs_from_controls
from .ifs import IfsPair, ResourceLimitError, is_hyperbolic, iterate_attractor
from .orbits import a_k_samples, z_poly
from .scaling import degree_m_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_IO = 3

DEFAULT_BETAS = "0.25,0.125,0.0625,0.03125"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError(f"expected 're,im', got {text!r}", EXIT_USAGE)
    return complex(float(parts[0]), float(parts[1]))


def parse_controls(text: str) -> List[complex]:
    pts = [parse_complex(chunk) for chunk in text.split(";") if chunk.strip()]
    if len(pts) < 2:
        raise CliError("need at least two control points", EXIT_USAGE)
    return pts


def parse_floats(text: str) -> List[float]:
    vals = [float(x) for x in text.split(",") if x.strip()]
    if not vals:
        raise CliError("empty list", EXIT_USAGE)
    return vals


def _resolve(args: argparse.Namespace, config: Dict[str, str],
             key: str, default=None):
    """CLI flag > config file > default."""
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    if key in config:
        return config[key]
    return default


def _load_config(args: argparse.Namespace) -> Dict[str, str]:
    if getattr(args, "config", None):
        try:
            return emit.load_config(args.config)
        except OSError as exc:
            raise CliError(f"cannot read config: {exc}", EXIT_IO)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_USAGE)
    return {}


def _hyperbolicity_gate(t: complex) -> None:
    if not is_hyperbolic(t):
        broken = []
        if abs(t) >= 1.0:
            broken.append(f"|t| = {abs(t):.6f} >= 1")
        if abs(1 - t) >= 1.0:
            broken.append(f"|1-t| = {abs(1 - t):.6f} >= 1")
        raise CliError("parameter outside hyperbolic domain: " + " and ".join(broken),
                       EXIT_MATH)


def cmd_render(args: argparse.Namespace) -> int:
    config = _load_config(args)
    controls_s = _resolve(args, config, "controls")
    t_s = _resolve(args, config, "t")
    if controls_s is None or t_s is None:
        raise CliError("render needs --controls and --t", EXIT_USAGE)
    controls = parse_controls(controls_s) if isinstance(controls_s, str) else controls_s
    t = parse_complex(t_s) if isinstance(t_s, str) else t_s
    depth = int(_resolve(args, config, "depth", 15))
    budget = int(_resolve(args, config, "budget", 1 << 22))
    out = _resolve(args, config, "out", "attractor")
    fmt = _resolve(args, config, "format", "csv")
    if fmt not in ("csv", "svg", "both"):
        raise CliError(f"unknown format {fmt!r}", EXIT_USAGE)

    _hyperbolicity_gate(t)
    try:
        f0, f1 = build_ifs_from_controls(controls, t)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_MATH)
    pair = IfsPair(f0=f0, f1=f1, t=complex(t))
    cloud = iterate_attractor(pair, None, depth, budget)

    metadata = {
        "command": "render",
        "controls": ";".join(f"{z.real:g},{z.imag:g}" for z in controls),
        "t": f"{t.real:g},{t.imag:g}",
        "depth": depth,
        "budget": budget,
        "points": len(cloud),
    }
    try:
        if fmt in ("csv", "both"):
            emit.write_cloud_csv(_with_ext(out, "csv"), cloud, metadata)
        if fmt in ("svg", "both"):
            polygon = controls if args.control_polygon else None
            emit.write_cloud_svg(_with_ext(out, "svg"), cloud, polygon)
    except OSError as exc:
        raise CliError(f"cannot write output: {exc}", EXIT_IO)
    return EXIT_OK


def _with_ext(path: str, ext: str) -> str:
    return path if path.endswith("." + ext) else f"{path}.{ext}"


def cmd_verify(args: argparse.Namespace) -> int:
    config = _load_config(args)
    n_max = int(_resolve(args, config, "n", 8))
    word_len = int(_resolve(args, config, "word_len", 10))
    results = verify.run_all(n_max=n_max, word_len=word_len)
    for res in results:
        print(res.line())
    failed = sum(not r.ok for r in results)
    print(f"# {len(results) - failed}/{len(results)} checks passed"
          + (" [exact arithmetic]" if args.exact else ""))
    return EXIT_OK if failed == 0 else EXIT_MATH


def cmd_converge(args: argparse.Namespace) -> int:
    config = _load_config(args)
    betas_s = _resolve(args, config, "betas", DEFAULT_BETAS)
    betas = parse_floats(betas_s) if isinstance(betas_s, str) else list(betas_s)
    depth = int(_resolve(args, config, "depth", 15))
    grid = int(_resolve(args, config, "grid", 12))
    budget = int(_resolve(args, config, "budget", 1 << 22))
    m = int(_resolve(args, config, "m", 1))
    out = _resolve(args, config, "out")

    try:
        rows = degree_m_sweep(m, betas, depth, grid, budget)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_MATH)
    metadata = {"command": "converge", "m": m, "depth": depth, "grid": grid,
                "budget": budget}
    if out:
        try:
            emit.write_rows_csv(out, rows, metadata)
        except OSError as exc:
            raise CliError(f"cannot write output: {exc}", EXIT_IO)
    else:
        print("beta,depth,grid,d_H,envelope,allowance,pass")
        for r in rows:
            env = "undefined" if r.envelope is None else f"{r.envelope:.6g}"
            print(f"{r.beta:.6g},{r.depth},{r.grid},{r.d_h:.6g},{env},"
                  f"{r.allowance:.6g},{'true' if r.passed else 'false'}")
    return EXIT_OK


def cmd_field(args: argparse.Namespace) -> int:
    config = _load_config(args)
    ks = [int(x) for x in str(_resolve(args, config, "k", "0,1,2")).split(",")]
    grid = int(_resolve(args, config, "grid", 8))
    sample_len = int(_resolve(args, config, "word_len", 16))
    curves_len = int(_resolve(args, config, "curves_len", 6))
    beta_max = float(_resolve(args, config, "beta_max", 0.25))
    beta_steps = int(_resolve(args, config, "beta_steps", 64))
    prefix = _resolve(args, config, "out", "field")

    if curves_len > 20:
        raise CliError(
            f"curve bundle over words of length {curves_len} means "
            f"2^{curves_len} = {2 ** curves_len} curves; limit is 20", EXIT_MATH)

    try:
        for k in ks:
            samples = a_k_samples(k, grid, sample_len)
            emit.write_table_csv(
                _with_ext(f"{prefix}_a{k}", "csv"), ("alpha", f"a_{k}"),
                [(alpha, float(c)) for alpha, c in samples],
                {"command": "field", "k": k, "grid": grid, "word_len": sample_len})

        betas = np.linspace(0.0, beta_max, beta_steps + 1)
        rows = []
        for bits in range(1 << curves_len):
            word = tuple((bits >> (curves_len - 1 - i)) & 1 for i in range(curves_len))
            Z = z_poly(word, curves_len)
            label = "".join(map(str, word))
            for b in betas:
                z = Z.eval_at(float(b))
                rows.append((label, float(b), z.real, z.imag))
        emit.write_table_csv(
            _with_ext(f"{prefix}_curves", "csv"), ("word", "beta", "re", "im"), rows,
            {"command": "field", "curves_len": curves_len, "beta_max": beta_max,
             "beta_steps": beta_steps})
    except OSError as exc:
        raise CliError(f"cannot write output: {exc}", EXIT_IO)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezier-ifs",
        description="Complex-parameter de Casteljau subdivision as an IFS: "
                    "render attractors, verify the exact matrix/orbit "
                    "identities, and measure convergence to the Takagi curve.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value config file")

    p = sub.add_parser("render", parents=[common],
                       help="render a projected attractor cloud to CSV/SVG")
    p.add_argument("--controls", help="control points 're,im;re,im;...'")
    p.add_argument("--t", help="complex parameter 're,im'")
    p.add_argument("--depth", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "svg", "both"])
    p.add_argument("--control-polygon", action="store_true",
                   help="overlay the control polygon in SVG output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", parents=[common],
                       help="run the exact-arithmetic identity suites")
    p.add_argument("--n", type=int, help="max matrix degree (default 8)")
    p.add_argument("--word-len", type=int, help="orbit word length (default 10)")
    p.add_argument("--exact", action="store_true",
                   help="annotate the report as the exact-arithmetic path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("converge", parents=[common],
                       help="Hausdorff distance of scaled attractors to the Takagi graph")
    p.add_argument("--betas", help=f"comma list (default {DEFAULT_BETAS})")
    p.add_argument("--depth", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--m", type=int, help="number of control points minus one (default 1)")
    p.add_argument("--out", help="CSV path (default: print to stdout)")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("field", parents=[common],
                       help="coefficient-function tables and parametric curve bundles")
    p.add_argument("--k", help="comma list of coefficient indices (default 0,1,2)")
    p.add_argument("--grid", type=int, help="alpha grid exponent (default 8)")
    p.add_argument("--word-len", type=int, help="sampling word length (default 16)")
    p.add_argument("--curves-len", type=int, help="bundle word length (default 6)")
    p.add_argument("--beta-max", type=float)
    p.add_argument("--beta-steps", type=int)
    p.add_argument("--out", help="output filename prefix (default 'field')")
    p.set_defaults(func=cmd_field)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ResourceLimitError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
