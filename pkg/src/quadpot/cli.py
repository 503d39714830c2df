"""Command-line front end: u(infinity) reports, level-curve CSV/SVG, reference table.

Subcommands
-----------
uinf    print the potential value at infinity for four vertices
levels  trace level curves of a polygonal quadrilateral to CSV or SVG
disk    trace level curves for the disk-exterior configuration
table1  recompute the nine built-in reference quadrilaterals and compare

Exit codes: 0 success, 2 argument/validation error, 3 solver or residual
failure, 4 unwritable output path, 5 reference-table mismatch.
"""
import argparse
import json
import math
import os
import re
import sys
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction

from .disk_exterior import disk_setup, disk_trace_level, disk_u_infinity
from .errors import QuadpotError
from .potential import trace_level, u_infinity
from .quad_geometry import Quadrilateral
from .scmap import map_at_infinity
from .accessory import eqz0_residual

_EQZ0_TOL = 1e-10


def _closure_tol():
    return float(os.environ.get("QUADPOT_TOL", "1e-8"))


# ---------------------------------------------------------------------------
# complex literal parsing: [-]a[+-bi] with decimal or fractional parts;
# the imaginary unit may sit inside a fraction ("21i/25") or after it
# ("21/25i").

_TERM_SPLIT = re.compile(r"(?<![eE])(?=[+-])")


def parse_complex(text):
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen_im = False
    terms = [t for t in _TERM_SPLIT.split(s) if t]
    if len(terms) > 2:
        raise ValueError(f"cannot parse complex literal {text!r}")
    for term in terms:
        body = term
        sign = 1
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        if "i" in body or "j" in body:
            if seen_im:
                raise ValueError(f"two imaginary parts in {text!r}")
            seen_im = True
            unit = "i" if "i" in body else "j"
            if body.count(unit) != 1:
                raise ValueError(f"cannot parse complex literal {text!r}")
            body = body.replace(unit, "")
            value = Fraction(1) if body in ("", "/1") else _parse_rational(body)
            im_part = sign * value
        else:
            re_part = sign * _parse_rational(body)
    return complex(re_part, im_part)


def _parse_rational(body):
    if not body:
        raise ValueError("empty numeric part")
    if "/" in body:
        num, den = body.split("/", 1)
        return Fraction(num if num else "1") / Fraction(den)
    return Fraction(body) if _is_intlike(body) else Fraction(float(body))


def _is_intlike(s):
    try:
        int(s)
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# run report


@dataclass
class RunReport:
    vertices: tuple
    u_inf: float
    v_inf: float
    h: float
    t: float
    z0: complex
    eqz0_residual: float
    closure_residual: float
    wall_ms: float

    def ok(self):
        return (self.eqz0_residual <= _EQZ0_TOL
                and self.closure_residual <= _closure_tol())

    def to_json(self):
        return json.dumps({
            "schema": 1,
            "vertices": [[z.real, z.imag] for z in self.vertices],
            "u_inf": self.u_inf,
            "v_inf": self.v_inf,
            "modulus_h": self.h,
            "t": self.t,
            "z0": [self.z0.real, self.z0.imag],
            "residuals": {"eqz0": self.eqz0_residual,
                          "closure": self.closure_residual},
            "wall_ms": self.wall_ms,
        }, indent=2)

    def to_text(self):
        lines = [
            "vertices: " + "  ".join(_fmt_c(z) for z in self.vertices),
            f"u_inf     = {self.u_inf:.16g}",
            f"v_inf     = {self.v_inf:.16g}",
            f"modulus h = {self.h:.16g}",
            f"t         = {self.t:.16g}",
            f"z0        = {_fmt_c(self.z0)}",
            f"residual eqz0    = {self.eqz0_residual:.3e}",
            f"residual closure = {self.closure_residual:.3e}",
            f"wall time = {self.wall_ms:.1f} ms",
        ]
        return "\n".join(lines)


def _fmt_c(z):
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _solve_report(vertices):
    start = time.perf_counter()
    q = Quadrilateral.from_vertices(vertices)
    sol = u_infinity(q)
    p = sol.params
    closure = abs(map_at_infinity(p, q) - q.z4) / q.diameter()
    wall = (time.perf_counter() - start) * 1e3
    return sol, RunReport(vertices=q.vertices, u_inf=sol.u_inf, v_inf=sol.v_inf,
                          h=p.h, t=p.t, z0=p.z0,
                          eqz0_residual=eqz0_residual(p.angles, p.t, p.z0),
                          closure_residual=closure, wall_ms=wall)


# ---------------------------------------------------------------------------
# emitters


def _atomic_write(path, data):
    d = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=d, prefix=".quadpot-")
        with os.fdopen(fd, "w") as f:
            f.write(data)
        os.replace(tmp, path)
    except OSError as e:
        raise SystemExit(_fail(4, f"cannot write {path}: {e}"))


def _fail(code, message):
    print(f"quadpot: error: {message}", file=sys.stderr)
    return code


def curves_to_csv(curves):
    """CSV text: header level,eta,re,im; blank line between split segments."""
    out = ["level,eta,re,im"]
    for lc in curves:
        for si, seg in enumerate(lc.segments):
            if si > 0:
                out.append("")
            for eta, w in seg:
                out.append(f"{lc.level:.17g},{eta:.17g},{w.real:.17g},{w.imag:.17g}")
    return "\n".join(out) + "\n"


def _svg_document(paths, extras, bounds):
    xmin, xmax, ymin, ymax = bounds
    mx = 0.1 * (xmax - xmin)
    my = 0.1 * (ymax - ymin)
    xmin, xmax = xmin - mx, xmax + mx
    ymin, ymax = ymin - my, ymax + my
    w, h = xmax - xmin, ymax - ymin
    scale = 800.0 / max(w, h)

    def tx(p):
        return (p.real - xmin) * scale, (ymax - p.imag) * scale

    body = []
    for style, pts in extras + paths:
        if style == "circle":
            cx, cy = tx(0j)
            body.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{scale:.3f}" '
                        'fill="none" stroke="black" stroke-width="1"/>')
            continue
        d = []
        for i, p in enumerate(pts):
            x, y = tx(p)
            d.append(f"{'M' if i == 0 else 'L'}{x:.3f},{y:.3f}")
        dash = ' stroke-dasharray="6,4"' if style == "dashed" else ""
        body.append(f'<path d="{" ".join(d)}" fill="none" stroke="black" '
                    f'stroke-width="1"{dash}/>')
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{w * scale:.0f}" height="{h * scale:.0f}" '
            f'viewBox="0 0 {w * scale:.3f} {h * scale:.3f}">\n'
            + "\n".join(body) + "\n</svg>\n")


def curves_to_svg(curves, polygon=None, disk=None):
    """SVG 1.1: level curves (1px black), polygon outline dashed or the unit
    circle plus vertex radii; viewport fitted with a 10% margin, with curve
    excursions clipped to a few polygon diameters so the blow-up branch does
    not dwarf the picture.
    """
    extras = []
    pts_for_bounds = []
    if polygon is not None:
        v = list(polygon.vertices)
        extras.append(("dashed", v + [v[0]]))
        pts_for_bounds += v
        diam = polygon.diameter()
        center = sum(v) / 4.0
        keep = lambda p: abs(p - center) <= 2.5 * diam
    else:
        alpha, beta, rng = disk
        extras.append(("circle", None))
        for th in (alpha, -alpha, beta, -beta):
            extras.append(("solid", [0j, rng * complex(math.cos(th), math.sin(th))]))
        pts_for_bounds += [complex(-rng, -rng), complex(rng, rng)]
        keep = lambda p: abs(p) <= rng
    paths = []
    for lc in curves:
        for seg in lc.segments:
            pts = [w for _, w in seg]
            paths.append(("solid", pts))
            pts_for_bounds += [p for p in pts if keep(p)]
    xs = [p.real for p in pts_for_bounds]
    ys = [p.imag for p in pts_for_bounds]
    return _svg_document(paths, extras, (min(xs), max(xs), min(ys), max(ys)))


# ---------------------------------------------------------------------------
# level specs


def _parse_levels(spec, u_inf):
    if spec == "auto":
        # deciles with u(oo) substituted for its nearest one
        levels = [k / 10.0 for k in range(1, 10)]
        nearest = min(range(9), key=lambda i: abs(levels[i] - u_inf))
        levels[nearest] = u_inf
        return levels
    try:
        levels = [float(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"cannot parse level list {spec!r}")
    if not levels:
        raise ValueError("empty level list")
    for c in levels:
        if not 0.0 < c < 1.0:
            raise ValueError(f"level {c} outside (0,1)")
    return levels


def _parse_disk_levels(spec, u0):
    if spec == "auto":
        return [0.2 * j * u0 for j in range(1, 6)] + \
               [u0 + 0.2 * k * (1.0 - u0) for k in range(1, 5)]
    return _parse_levels(spec, u0)


# ---------------------------------------------------------------------------
# subcommands


def cmd_uinf(args):
    try:
        vertices = [parse_complex(v) for v in args.vertices]
    except ValueError as e:
        return _fail(2, str(e))
    try:
        _, report = _solve_report(vertices)
    except QuadpotError as e:
        return _fail(2 if isinstance(e, ValueError) else 3, str(e))
    print(report.to_json() if args.json else report.to_text())
    if not report.ok():
        return _fail(3, "a residual exceeded its tolerance (see report)")
    return 0


def cmd_levels(args):
    try:
        vertices = [parse_complex(v) for v in args.vertices]
    except ValueError as e:
        return _fail(2, str(e))
    try:
        sol, report = _solve_report(vertices)
    except QuadpotError as e:
        return _fail(2 if isinstance(e, ValueError) else 3, str(e))
    if not report.ok():
        return _fail(3, "a residual exceeded its tolerance")
    try:
        levels = _parse_levels(args.levels, sol.u_inf)
    except ValueError as e:
        return _fail(2, str(e))
    try:
        curves = [trace_level(sol, c, args.n) for c in levels]
    except QuadpotError as e:
        return _fail(3, str(e))
    if args.format == "csv":
        _atomic_write(args.out, curves_to_csv(curves))
    else:
        _atomic_write(args.out, curves_to_svg(curves, polygon=sol.quad))
    print(f"u_inf = {sol.u_inf:.16g}")
    print(f"wrote {len(curves)} curves to {args.out}")
    return 0


def cmd_disk(args):
    try:
        d = disk_setup(args.alpha, args.beta)
        u0 = disk_u_infinity(d)
    except QuadpotError as e:
        return _fail(2, str(e))
    try:
        levels = _parse_disk_levels(args.levels, u0)
    except ValueError as e:
        return _fail(2, str(e))
    try:
        curves = [disk_trace_level(d, c, args.n) for c in levels]
    except QuadpotError as e:
        return _fail(3, str(e))
    if args.format == "csv":
        _atomic_write(args.out, curves_to_csv(curves))
    else:
        rng = args.range
        _atomic_write(args.out, curves_to_svg(curves, disk=(d.alpha, d.beta, rng)))
    print(f"u0 = {u0:.16g}")
    print(f"wrote {len(curves)} curves to {args.out}")
    return 0


# nine reference quadrilaterals (z1, z2, z3, z4) = (1, 0, B, A) and the
# published 16-digit values of u(infinity)
REFERENCE_TABLE = [
    (7 + 5j, -1 + 2j, 0.3782951219491777),
    (8 + 3j, -1 + 1j, 0.3507184214435048),
    (5 + 5j, -3 + 1j, 0.4209495357540314),
    (7 + 4j, -3 + 3j, 0.4473431220217027),
    (5 + 5j, -1 + 2j, 0.3916188047098933),
    (7 + 5j, 0 + 1j, 0.3172197705784933),
    (7 + 3j, 1 + 2j, 0.3917841755037506),
    (4 + 5j, -2 + 1j, 0.3960930352825737),
    (1 + 1j, 0 + 1j, 0.5000000000000000),
]


def cmd_table1(args):
    tol = _closure_tol()
    worst = 0.0
    rows = []
    start = time.perf_counter()
    for A, B, expected in REFERENCE_TABLE:
        sol = u_infinity(Quadrilateral(1, 0, B, A))
        diff = abs(sol.u_inf - expected)
        worst = max(worst, diff)
        rows.append((A, B, sol.u_inf, expected, diff))
    wall = time.perf_counter() - start
    print(f"{'A':>8} {'B':>8} {'computed':>20} {'reference':>20} {'|diff|':>10}")
    for A, B, got, exp, diff in rows:
        print(f"{_short_c(A):>8} {_short_c(B):>8} {got:>20.16f} {exp:>20.16f} {diff:>10.2e}")
    print(f"worst |diff| = {worst:.2e}  (tolerance {tol:g}); total {wall:.1f} s")
    if worst > tol:
        return _fail(5, f"worst difference {worst:.2e} exceeds tolerance {tol:g}")
    return 0


def _short_c(z):
    re = f"{z.real:g}" if z.real else ""
    im = f"{z.imag:+g}i" if z.imag else ""
    return (re + im) or "0"


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="quadpot",
        description="Potential function of the exterior of a convex quadrilateral.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("uinf", help="value of the potential at infinity")
    p.add_argument("vertices", nargs=4, metavar="Z",
                   help="four vertices, clockwise, e.g. 1 0 -1+2i 7+5i")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=cmd_uinf)

    p = sub.add_parser("levels", help="trace level curves to CSV or SVG")
    p.add_argument("--vertices", nargs=4, required=True, metavar="Z")
    p.add_argument("--levels", default="auto",
                   help="'auto' or a comma list of values in (0,1)")
    p.add_argument("--n", type=int, default=400, help="samples per curve")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.set_defaults(func=cmd_levels)

    p = sub.add_parser("disk", help="disk-exterior level curves")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--levels", default="auto")
    p.add_argument("--n", type=int, default=400)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--range", type=float, default=2.8, help="SVG half-width")
    p.set_defaults(func=cmd_disk)

    p = sub.add_parser("table1", help="recompute the built-in reference table")
    p.set_defaults(func=cmd_table1)
    return ap


def _shield_negative_literals(argv):
    """Prefix complex literals that begin with '-' so argparse keeps them
    positional ('-1+2i' would otherwise be read as an option)."""
    out = []
    for tok in argv:
        if tok.startswith("-") and not tok.startswith("--"):
            try:
                parse_complex(tok)
                tok = " " + tok
            except ValueError:
                pass
        out.append(tok)
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_shield_negative_literals(argv))
    if args.command == "disk" and args.out is None:
        args.out = "disk_levels." + args.format
    try:
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
