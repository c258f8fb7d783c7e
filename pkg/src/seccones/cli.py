"""Batch command-line front end.

Reads a problem file declaring a ring, ideals and points, runs one
computation, and prints a canonical, fully deterministic text (or JSON)
report.  Ideals are always printed through their unique reduced Groebner
basis, one generator per line, ascending.

Problem file format (line-oriented; '#' starts a comment; a line that
begins with whitespace continues the previous one):

    ring QQ [x0,x1,x2,x3]          # or: ring Fp 7 [x0,x1]
    order degrevlex                # optional: lex | degrevlex | elim(x0,..)
    ideal I = x1*x3^3 - x0*x2^3, x2^2 - x1*x3
    point p = (1:0:0:0)            # or: point p = forms x1, x2, x3

Exit codes: 0 success; 1 malformed input (file or flags); 2 violated
precondition (e.g. a projection centre on the scheme); 3 internal
consistency failure (two independent computations of the same quantity
disagreed — a bug, not a user error).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .poly_core import (
    DEGREVLEX,
    LEX,
    ClosedPoint,
    ParseError,
    PolyRing,
    PrimeField,
    QQ,
    elim_order,
    format_polynomial,
    parse_polynomial,
    point_from_forms,
)
from .groebner import Ideal, buchberger_reduced
from .ideal_ops import eliminate, saturate
from .hilbert import hilbert_data
from .radical import radical
from .pei_secant import (
    InternalConsistencyError,
    PreconditionError,
    clever_decomposition_check,
    double_projection_fibre_length,
    fibre_length,
    pei_chain,
    secant_cone,
)


class CLIError(Exception):
    """Malformed command line or problem file."""


# ---------------------------------------------------------------------------
# problem files
# ---------------------------------------------------------------------------


class Problem:
    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.ideals: Dict[str, Ideal] = {}
        self.points: Dict[str, ClosedPoint] = {}


_NAME = r"[A-Za-z_]\w*"
_RING_RE = re.compile(
    r"^ring\s+(QQ|Fp)(?:\s+(\d+))?\s*\[\s*(.*?)\s*\]$"
)
_IDEAL_RE = re.compile(r"^ideal\s+(%s)\s*=\s*(.*)$" % _NAME)
_POINT_RE = re.compile(r"^point\s+(%s)\s*=\s*(.*)$" % _NAME)
_ORDER_RE = re.compile(r"^order\s+(\S.*)$")


def _logical_lines(text: str) -> List[str]:
    lines: List[str] = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if body[0] in " \t":
            if not lines:
                raise CLIError("continuation line with nothing to continue")
            lines[-1] += " " + body.strip()
        else:
            lines.append(body.strip())
    return lines


def _parse_ring(line: str) -> PolyRing:
    m = _RING_RE.match(line)
    if not m:
        raise CLIError(
            "malformed ring line (expected: ring QQ [x0,...] "
            "or ring Fp <prime> [x0,...])"
        )
    field_tag, prime, namepart = m.groups()
    if field_tag == "Fp":
        if prime is None:
            raise CLIError("Fp needs a prime: ring Fp 7 [x0,...]")
        field = PrimeField(int(prime))
    else:
        if prime is not None:
            raise CLIError("QQ takes no modulus")
        field = QQ
    names = [n.strip() for n in namepart.split(",") if n.strip()]
    if not names:
        raise CLIError("ring needs at least one variable")
    for n in names:
        if not re.match(r"^%s$" % _NAME, n):
            raise CLIError("invalid variable name %r" % n)
    if len(set(names)) != len(names):
        raise CLIError("duplicate variable names")
    return PolyRing(tuple(names), field, DEGREVLEX)


def _parse_order(ring: PolyRing, spec: str):
    spec = spec.strip()
    if spec == "degrevlex":
        return DEGREVLEX
    if spec == "lex":
        return LEX
    m = re.match(r"^elim\(\s*(.*?)\s*\)$", spec)
    if m:
        names = [n.strip() for n in m.group(1).split(",") if n.strip()]
        if not names:
            raise CLIError("elim(...) needs at least one variable")
        try:
            block = tuple(ring.index(n) for n in names)
        except KeyError as exc:
            raise CLIError("unknown variable in order: %s" % exc)
        return elim_order(block)
    raise CLIError("unknown order %r" % spec)


def _parse_scalar(field, token: str):
    token = token.strip()
    m = re.match(r"^([+-]?\d+)(?:/(\d+))?$", token)
    if not m:
        raise CLIError("bad coordinate %r" % token)
    num, den = m.groups()
    if den is None:
        return field.from_int(int(num))
    return field.from_pair(int(num), int(den))


def _parse_point(problem: Problem, rhs: str) -> ClosedPoint:
    ring = problem.ring
    rhs = rhs.strip()
    if rhs.startswith("forms"):
        gens = [
            parse_polynomial(part.strip(), ring)
            for part in rhs[len("forms"):].split(",")
            if part.strip()
        ]
        return point_from_forms(ring, gens)
    m = re.match(r"^\(\s*(.*?)\s*\)$", rhs)
    if not m:
        raise CLIError(
            "malformed point (expected (c0:...:cn) or forms f1,...,fn)"
        )
    tokens = [t for t in m.group(1).split(":")]
    coords = [_parse_scalar(ring.field, t) for t in tokens]
    if len(coords) != ring.nvars:
        raise CLIError(
            "point needs %d coordinates, got %d" % (ring.nvars, len(coords))
        )
    return ClosedPoint(ring, coords)


def parse_problem(text: str) -> Problem:
    problem: Optional[Problem] = None
    for line in _logical_lines(text):
        head = line.split(None, 1)[0]
        if head == "ring":
            if problem is not None:
                raise CLIError("duplicate ring line")
            problem = Problem(_parse_ring(line))
            continue
        if problem is None:
            raise CLIError("the ring line must come first")
        if head == "order":
            if problem.ideals or problem.points:
                raise CLIError("order must appear before ideals and points")
            m = _ORDER_RE.match(line)
            problem.ring = problem.ring.with_order(
                _parse_order(problem.ring, m.group(1))
            )
            continue
        if head == "ideal":
            m = _IDEAL_RE.match(line)
            if not m:
                raise CLIError("malformed ideal line: %s" % line)
            name, rhs = m.groups()
            if name in problem.ideals:
                raise CLIError("duplicate ideal %r" % name)
            gens = []
            for part in rhs.split(","):
                part = part.strip()
                if part:
                    gens.append(parse_polynomial(part, problem.ring))
            problem.ideals[name] = Ideal(problem.ring, gens)
            continue
        if head == "point":
            m = _POINT_RE.match(line)
            if not m:
                raise CLIError("malformed point line: %s" % line)
            name, rhs = m.groups()
            if name in problem.points:
                raise CLIError("duplicate point %r" % name)
            problem.points[name] = _parse_point(problem, rhs)
            continue
        raise CLIError("unrecognized line: %s" % line)
    if problem is None:
        raise CLIError("problem file declares no ring")
    return problem


# ---------------------------------------------------------------------------
# argument resolution
# ---------------------------------------------------------------------------


def _main_ideal(problem: Problem) -> Ideal:
    if "I" in problem.ideals:
        return problem.ideals["I"]
    if len(problem.ideals) == 1:
        return next(iter(problem.ideals.values()))
    raise CLIError("name the ideal to use 'I' (or declare exactly one)")


def _main_point(problem: Problem) -> ClosedPoint:
    if "p" in problem.points:
        return problem.points["p"]
    if len(problem.points) == 1:
        return next(iter(problem.points.values()))
    raise CLIError("name the centre point 'p' (or declare exactly one)")


def _coords_arg(problem: Problem, text: str) -> List:
    """A point argument: a declared point's name, or a literal (c0:...)."""
    if text in problem.points:
        return list(problem.points[text].coordinates)
    m = re.match(r"^\(\s*(.*?)\s*\)$", text)
    if not m:
        raise CLIError(
            "unknown point %r (declare it in the file or pass (c0:...:cn))"
            % text
        )
    return [_parse_scalar(problem.ring.field, t) for t in m.group(1).split(":")]


def _point_arg(problem: Problem, text: str) -> ClosedPoint:
    coords = _coords_arg(problem, text)
    if len(coords) != problem.ring.nvars:
        raise CLIError(
            "point needs %d coordinates, got %d"
            % (problem.ring.nvars, len(coords))
        )
    return ClosedPoint(problem.ring, coords)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _ideal_strings(ideal: Ideal) -> List[str]:
    gens = ideal.reduced_generators()
    if not gens:
        return ["0"]
    return [format_polynomial(g) for g in gens]


def _block(label: str, entries: Sequence[str]) -> List[str]:
    return ["%s:" % label] + ["  %s" % e for e in entries]


def _fmt_fraction(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_pei(problem: Problem, args) -> dict:
    ideal = _main_ideal(problem)
    point = _main_point(problem)
    chain = pei_chain(ideal, point)
    entries = [
        _ideal_strings(chain.ambient_ideal(k)) for k in range(chain.k0 + 1)
    ]
    lines = ["k0 = %d" % chain.k0]
    if chain.point_on_scheme:
        lines.append("centre on scheme = true")
    for k, gens in enumerate(entries):
        lines.extend(_block("K%d" % k, gens))
    return {
        "text": lines,
        "json": {
            "k0": chain.k0,
            "point_on_scheme": chain.point_on_scheme,
            "chain": entries,
        },
    }


def _cmd_secant_cone(problem: Problem, args) -> dict:
    if args.k is None:
        raise CLIError("secant-cone requires --k")
    result = secant_cone(_main_ideal(problem), _main_point(problem), args.k)
    cone = _ideal_strings(result.cone)
    lines = ["k = %d" % result.k, "empty = %s" % str(result.is_empty).lower()]
    lines.extend(_block("cone", cone))
    return {
        "text": lines,
        "json": {"k": result.k, "empty": result.is_empty, "cone": cone},
    }


def _cmd_secant_locus(problem: Problem, args) -> dict:
    if args.k is None:
        raise CLIError("secant-locus requires --k")
    result = secant_cone(
        _main_ideal(problem), _main_point(problem), args.k,
        saturate=args.saturate,
    )
    locus = result.saturated_locus if args.saturate else result.locus
    gens = _ideal_strings(locus)
    lines = [
        "k = %d" % result.k,
        "saturated = %s" % str(bool(args.saturate)).lower(),
    ]
    lines.extend(_block("locus", gens))
    return {
        "text": lines,
        "json": {
            "k": result.k,
            "saturated": bool(args.saturate),
            "locus": gens,
        },
    }


def _cmd_fibre_length(problem: Problem, args) -> dict:
    if args.q is None:
        raise CLIError("fibre-length requires --q")
    ring = problem.ring
    coords = _coords_arg(problem, args.q)
    if len(coords) != ring.nvars - 1:
        raise CLIError(
            "target point needs %d coordinates, got %d"
            % (ring.nvars - 1, len(coords))
        )
    value = fibre_length(_main_ideal(problem), _main_point(problem), coords)
    return {
        "text": ["fibre length = %d" % value],
        "json": {"fibre_length": value},
    }


def _cmd_radical(problem: Problem, args) -> dict:
    gens = _ideal_strings(radical(_main_ideal(problem)))
    return {"text": _block("radical", gens), "json": {"radical": gens}}


def _cmd_saturate(problem: Problem, args) -> dict:
    ring = problem.ring
    irrelevant = Ideal(ring, ring.gens())
    result, index = saturate(_main_ideal(problem), irrelevant)
    gens = _ideal_strings(result)
    lines = ["index = %d" % index]
    lines.extend(_block("saturation", gens))
    return {
        "text": lines,
        "json": {"index": index, "saturation": gens},
    }


def _cmd_hilbert(problem: Problem, args) -> dict:
    hd = hilbert_data(_main_ideal(problem))
    return {
        "text": ["dim %d, e0 %d" % (hd.dimension, hd.multiplicity)],
        "json": {
            "dimension": hd.dimension,
            "e0": hd.multiplicity,
            "numerator": list(hd.numerator),
            "hilbert_polynomial": [
                _fmt_fraction(c) for c in hd.hilbert_polynomial
            ],
            "length": hd.length,
        },
    }


def _cmd_eliminate(problem: Problem, args) -> dict:
    if not args.drop:
        raise CLIError("eliminate requires --drop")
    ring = problem.ring
    names = [n.strip() for n in args.drop.split(",") if n.strip()]
    if not names:
        raise CLIError("eliminate requires --drop")
    try:
        positions = [ring.index(n) for n in names]
    except KeyError as exc:
        raise CLIError("unknown variable in --drop: %s" % exc)
    result = eliminate(_main_ideal(problem), positions)
    gens = _ideal_strings(result)
    lines = ["ring [%s]" % ", ".join(result.ring.variables)]
    lines.extend(_block("eliminated", gens))
    return {
        "text": lines,
        "json": {
            "variables": list(result.ring.variables),
            "eliminated": gens,
        },
    }


def _cmd_clever_decomp(problem: Problem, args) -> dict:
    if args.p2 is None:
        raise CLIError("clever-decomp requires --p2")
    p2 = _point_arg(problem, args.p2)
    ok, witness = clever_decomposition_check(
        _main_ideal(problem), _main_point(problem), p2
    )
    lines = ["clever = %s" % str(ok).lower()]
    wtext = None
    if witness is not None:
        wtext = format_polynomial(witness)
        lines.append("witness = %s" % wtext)
    return {"text": lines, "json": {"clever": ok, "witness": wtext}}


def _cmd_double_fibre(problem: Problem, args) -> dict:
    if args.p2 is None or args.q is None:
        raise CLIError("double-fibre requires --p2 and --q")
    ring = problem.ring
    p2 = _point_arg(problem, args.p2)
    coords = _coords_arg(problem, args.q)
    if len(coords) != ring.nvars - 2:
        raise CLIError(
            "target point needs %d coordinates, got %d"
            % (ring.nvars - 2, len(coords))
        )
    value = double_projection_fibre_length(
        _main_ideal(problem), _main_point(problem), p2, coords
    )
    return {
        "text": ["fibre length = %d" % value],
        "json": {"fibre_length": value},
    }


def _cmd_bench_gb(problem: Problem, args) -> dict:
    ideal = _main_ideal(problem)
    stats: dict = {}
    started = time.perf_counter()
    buchberger_reduced(ideal.gens, ideal.ring, ideal.ring.order, stats=stats)
    elapsed = time.perf_counter() - started
    # timing goes to stderr so stdout stays byte-identical across runs
    print("elapsed %.3fs" % elapsed, file=sys.stderr)
    lines = ["generators = %d" % len(ideal.gens)]
    for key in sorted(stats):
        lines.append("%s = %d" % (key, stats[key]))
    payload = {"generators": len(ideal.gens)}
    payload.update(stats)
    return {"text": lines, "json": payload}


_COMMANDS = {
    "pei": _cmd_pei,
    "secant-cone": _cmd_secant_cone,
    "secant-locus": _cmd_secant_locus,
    "fibre-length": _cmd_fibre_length,
    "radical": _cmd_radical,
    "saturate": _cmd_saturate,
    "hilbert": _cmd_hilbert,
    "eliminate": _cmd_eliminate,
    "clever-decomp": _cmd_clever_decomp,
    "double-fibre": _cmd_double_fibre,
    "bench-gb": _cmd_bench_gb,
}


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="seccones",
        description="Partial elimination ideals, secant cones and "
        "projection fibres of projective schemes.",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("file", help="problem file")
    parser.add_argument("--k", type=int, help="secancy order")
    parser.add_argument("--q", help="target point: a declared name or (c0:...)")
    parser.add_argument(
        "--p2", help="second centre: a declared name or (c0:...)"
    )
    parser.add_argument("--drop", help="comma-separated variables to eliminate")
    parser.add_argument(
        "--saturate", action="store_true", help="saturate the secant locus"
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", dest="format"
    )
    return parser


def run(argv: Sequence[str]) -> str:
    args = _build_parser().parse_args(argv)
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CLIError("cannot read %s: %s" % (args.file, exc))
    problem = parse_problem(text)
    result = _COMMANDS[args.command](problem, args)
    if args.format == "json":
        return json.dumps(result["json"], sort_keys=True, indent=2) + "\n"
    return "\n".join(result["text"]) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        sys.stdout.write(run(argv))
    except (CLIError, ParseError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print("precondition violated: %s" % exc, file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("precondition violated: %s" % exc, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
