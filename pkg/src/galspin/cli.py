"""Command-line driver: ``galspin <subcommand> ...``.

Exit status is 0 when every check passes, 1 when any fails and 2 for usage
errors (bad arguments, malformed rationals, unknown suites).
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from galspin.errors import GalspinError, ParseError, UnknownSuite
from galspin.exact import ExactScalar

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(text: str) -> ExactScalar:
    """An integer or ``a/b``."""
    if not _RATIONAL.match(text or ""):
        raise ParseError(f"not a rational number: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return ExactScalar.coerce(text.replace(" ", ""))


def parse_vector(text: str, n: int = 3) -> list:
    parts = (text or "").split(",")
    if len(parts) != n:
        raise ParseError(f"expected {n} comma-separated components, got {len(parts)} in {text!r}")
    return [parse_rational(p) for p in parts]


def parse_grid(text: str) -> list:
    points = [p for p in (text or "").split(";") if p.strip()]
    if not points:
        raise ParseError("empty momentum grid")
    return [parse_vector(p) for p in points]


def _write(out: str) -> None:
    sys.stdout.write(out)
    sys.stdout.flush()


def _strs(v) -> list:
    return [str(x) for x in v]


# subcommands ------------------------------------------------------------

def cmd_run_suite(args) -> int:
    from galspin.suites import emit_report, run_suite
    doc = run_suite(args.suite, args.seed, args.samples)
    sys.stdout.buffer.write(emit_report(doc, args.format, args.timings))
    sys.stdout.flush()
    return doc.exit_code()


def cmd_spin_state(args) -> int:
    from galspin.reduction import spin_states
    p = parse_vector(args.p)
    k = parse_rational(args.k)
    m = parse_rational(args.m)
    st = spin_states(p, m, k)
    data = st.to_dict()
    data["m"] = str(m)
    if args.format == "json":
        _write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        lines = [f"p = ({', '.join(_strs(st.p))}), k = {st.k}, m = {m}",
                 f"f1 = {st.f1}",
                 f"f2 = {st.f2}",
                 "S+^3 in the (r, s) basis:"]
        lines += ["  [" + ", ".join(str(st.S3[i, j]) for j in range(2)) + "]" for i in range(2)]
        for lab in ("up", "down"):
            c1, c2 = st.states[lab]
            lines.append(f"{lab:>4}: ({c1})|1> + ({c2})|2>, eigenvalue {st.eigenvalues[lab]}")
        for r in st.report.rows:
            lines.append(f"{r.status.upper():4}  {r.check_name}" + (f"  -- {r.witness}" if r.witness else ""))
        lines.append(json.dumps(data, ensure_ascii=False, sort_keys=False))
        _write("\n".join(lines) + "\n")
    return 0 if st.report.ok() else 1


def cmd_mass_transform(args) -> int:
    from galspin.transforms import KinematicState, boosted_five_momentum, mass_kinematics, rest_mass_closed_form
    m = parse_rational(args.m)
    k = parse_rational(args.k)
    p = parse_vector(args.p)
    if args.m0 is not None and args.cbar is not None:
        raise ParseError("give at most one of --m0 and --cbar")
    if args.cbar is not None:
        ks = KinematicState.from_cbar(m, k, parse_rational(args.cbar), p)
    else:
        ks = KinematicState.make(m, parse_rational(args.m0) if args.m0 is not None else m, k, p)
    tau = parse_vector(args.tau)
    b = mass_kinematics(ks, tau)
    closed = rest_mass_closed_form(ks, tau)
    five = boosted_five_momentum(ks, tau)
    checks = {
        "m' m0' = m m0": b.m * b.m0 == ks.m * ks.m0,
        "closed form for m0' agrees": closed == b.m0,
        "energy unchanged": b.E == ks.E,
    }
    data = {
        "input": {"m": str(ks.m), "m0": str(ks.m0), "k": str(k), "p": _strs(ks.p), "tau": _strs(tau),
                  "cbar": str(ks.cbar), "E": str(ks.E), "regime": ks.regime()},
        "boosted": {"m": str(b.m), "m0": str(b.m0), "p": _strs(b.p), "E": str(b.E),
                    "five_momentum": _strs(five), "regime": b.regime()},
        "checks": {name: ("pass" if ok else "fail") for name, ok in checks.items()},
    }
    if args.format == "json":
        _write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        lines = [f"m' = {b.m}", f"m0' = {b.m0}", f"p' = ({', '.join(_strs(b.p))})", f"E = {ks.E}",
                 f"regime before: {ks.regime()}", f"regime after: {b.regime()}"]
        lines += [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks.items()]
        _write("\n".join(lines) + "\n")
    return 0 if all(checks.values()) else 1


def cmd_coordinate_map(args) -> int:
    from galspin.transforms import GalileanTransform, NonGalileanTransform, apply_coordinate_map, interval
    if (args.beta is None) == (args.tau is None):
        raise ParseError("give exactly one of --beta and --tau")
    x = parse_vector(args.x, 5)
    if args.beta is not None:
        t, kind, param = GalileanTransform(beta=parse_vector(args.beta)), "Galilean boost", args.beta
    else:
        t, kind, param = NonGalileanTransform(parse_vector(args.tau)), "non-Galilean boost", args.tau
    y = apply_coordinate_map(t, x)
    ok = interval(y) == interval(x)
    data = {"transform": kind, "parameter": param, "x": _strs(x), "x_prime": _strs(y),
            "interval": str(interval(x)), "interval_preserved": ok}
    if args.format == "json":
        _write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        _write(f"{kind} with ({param})\nx  = ({', '.join(_strs(x))})\nx' = ({', '.join(_strs(y))})\n"
               f"{'PASS' if ok else 'FAIL'}  interval {interval(x)} preserved\n")
    return 0 if ok else 1


def cmd_fock_demo(args) -> int:
    from galspin.fock import fock_report
    from galspin.suites import emit_report, report_document
    grid = parse_grid(args.grid)
    rep = fock_report(grid, parse_rational(args.m), parse_rational(args.k))
    doc = report_document("fock-demo", rep)
    sys.stdout.buffer.write(emit_report(doc, args.format, args.timings))
    sys.stdout.flush()
    return doc.exit_code()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="galspin", description="Exact checks for the Galilean covariant Dirac field.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("run-suite", help="run a verification suite")
    p.add_argument("--suite", required=True, help="clifford, galilei, spin, transforms, reduction, fock or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--timings", action="store_true", help="include per-check timings")
    fmt(p)
    p.set_defaults(fn=cmd_run_suite)

    p = sub.add_parser("spin-state", help="one-particle spin states at a momentum")
    p.add_argument("--p", required=True, help="three rationals, e.g. 3,4,0")
    p.add_argument("--k", required=True)
    p.add_argument("--m", default="1")
    fmt(p)
    p.set_defaults(fn=cmd_spin_state)

    p = sub.add_parser("mass-transform", help="masses and momentum after a non-Galilean boost")
    p.add_argument("--m", required=True)
    p.add_argument("--m0", default=None, help="rest mass (defaults to --m)")
    p.add_argument("--cbar", default=None, help="fix cbar instead of the rest mass")
    p.add_argument("--k", required=True)
    p.add_argument("--p", default="0,0,0")
    p.add_argument("--tau", required=True)
    fmt(p)
    p.set_defaults(fn=cmd_mass_transform)

    p = sub.add_parser("coordinate-map", help="apply a boost to a five-vector")
    p.add_argument("--beta", default=None)
    p.add_argument("--tau", default=None)
    p.add_argument("--x", required=True, help="five rationals x1,x2,x3,x4,x5")
    fmt(p)
    p.set_defaults(fn=cmd_coordinate_map)

    p = sub.add_parser("fock-demo", help="Fock-space commutator checks on a momentum grid")
    p.add_argument("--grid", required=True, help='points separated by ";", e.g. "1,0,0;0,1,0"')
    p.add_argument("--m", default="1")
    p.add_argument("--k", default="1")
    p.add_argument("--timings", action="store_true")
    fmt(p)
    p.set_defaults(fn=cmd_fock_demo)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, UnknownSuite) as exc:
        print(f"galspin: error: {exc}", file=sys.stderr)
        return 2
    except (GalspinError, ValueError) as exc:
        print(f"galspin: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # output piped into e.g. `head`; silence the flush at interpreter exit
        sys.stdout = open(os.devnull, "w")
        return 0


if __name__ == "__main__":
    sys.exit(main())
