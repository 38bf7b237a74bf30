"""Command line entry point.

    fsplit SCENARIO COMMAND [args] [--out report.json]

Exit codes: 0 success, 1 mathematical refutation (or an inconclusive
rigidity check), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import lcm

from fsplit.algebra import AlgebraError
from fsplit.hilbert import HilbertPolynomial, HilbertWindowError, hilbert_function, hilbert_polynomial
from fsplit.ideal import Ideal, saturate
from fsplit.lattice import (
    SeedNotCompatibleError,
    brute_force_toric,
    coordinate_points,
    enumerate_closure,
    filter_by_hilbert,
)
from fsplit.parsing import ParseError
from fsplit.rigidity import phi_membership, rigidity_report
from fsplit.scenario import Scenario, ScenarioError, parse_scenario
from fsplit.splitting import (
    graded_part,
    graded_witness,
    is_compatible,
    is_graded,
    monomial_splittings,
)

SCHEMA_VERSION = 1

OK, REFUTED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    text: str
    exit_code: int
    report: dict = field(default_factory=dict)

    def json(self) -> str:
        return json.dumps(self.report, indent=2, sort_keys=True) + "\n"


def _flag(value) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).strip().lower() in ("1", "true", "yes", "on")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report to this path")

    parser = argparse.ArgumentParser(prog="fsplit", parents=[common],
                                     description="Frobenius splittings of graded polynomial rings")
    parser.add_argument("scenario", help="scenario file ('-' for stdin)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check-splitting", parents=[common])
    sub.add_parser("graded-part", parents=[common])
    p = sub.add_parser("check-compatible", parents=[common])
    p.add_argument("ideal")
    p = sub.add_parser("enumerate", parents=[common])
    group = p.add_mutually_exclusive_group()
    group.add_argument("--seeds", help="comma separated ideal names")
    group.add_argument("--brute-force", action="store_true")
    p.add_argument("--exclude-zero", action="store_true", help="omit the zero ideal")
    p.add_argument("--exclude-unit", action="store_true", help="omit the unit ideal")
    p = sub.add_parser("hilbert", parents=[common])
    p.add_argument("ideal")
    p.add_argument("--upto", type=int, default=None)
    p = sub.add_parser("rigidity", parents=[common])
    p.add_argument("ideal")
    p.add_argument("--degree-bound", type=int, default=None)
    p = sub.add_parser("phi-check", parents=[common])
    p.add_argument("ideal")
    p.add_argument("--N", type=int, default=None, dest="N")
    p = sub.add_parser("fixed-points", parents=[common])
    p.add_argument("--hilbert", default=None)
    return parser


def _scenario_block(s: Scenario) -> dict:
    return {
        "p": s.p,
        "variables": list(s.variables),
        "weights": [list(r) for r in s.ring.grading.weights],
        "premultiplier": str(s.splitting.premultiplier),
    }


def _ideal(s: Scenario, name: str) -> Ideal:
    try:
        return s.ideal(name)
    except KeyError:
        raise UsageError(f"unknown ideal {name!r}") from None


def _int_option(s: Scenario, args, attr: str, option: str):
    value = getattr(args, attr, None)
    if value is None and s.option(option) is not None:
        try:
            value = int(s.option(option))
        except ValueError:
            raise UsageError(f"option {option} must be an integer") from None
    return value


def cmd_check_splitting(s, args):
    phi = s.splitting
    bound = _int_option(s, args, "graded_bound", "graded-bound") or 2 * s.p
    graded = is_graded(phi, bound)
    result = {
        "premultiplier": str(phi.premultiplier),
        "trace": "1",
        "is_splitting": True,
        "is_graded": graded,
        "torus_invariant": phi.premultiplier.is_monomial(),
        "monomial_splittings": [str(m) for m in monomial_splittings(s.ring)],
    }
    text = (f"splitting g = {phi.premultiplier}: Tr(g) = 1, "
            f"graded={str(graded).lower()}, torus-invariant={str(result['torus_invariant']).lower()}")
    return text, OK, result


def cmd_graded_part(s, args):
    phi = s.splitting
    bound = _int_option(s, args, "graded_bound", "graded-bound") or 2 * s.p
    graded = is_graded(phi)
    part = graded_part(phi)
    result = {
        "premultiplier": str(phi.premultiplier),
        "was_graded": graded,
        "graded_premultiplier": str(part.premultiplier),
        "graded_part_is_graded": is_graded(part, bound),
    }
    witness = graded_witness(phi, bound)
    if witness is not None:
        result["grading_witness"] = {"r": str(witness[0]), "phi(r)": str(witness[1])}
    return f"graded part: g' = {part.premultiplier}", OK, result


def cmd_check_compatible(s, args):
    I = _ideal(s, args.ideal)
    cert = is_compatible(s.splitting, I)
    result = {"ideal": I.key, "compatible": cert.verdict}
    if cert.verdict:
        return f"{args.ideal} = {I.key}: compatible", OK, result
    result["witness"] = str(cert.witness)
    result["image"] = str(cert.image)
    text = (f"{args.ideal} = {I.key}: NOT compatible; "
            f"phi({cert.witness}) = {cert.image} is not in the ideal")
    return text, REFUTED, result


def cmd_enumerate(s, args):
    phi = s.splitting
    include_zero = not args.exclude_zero and _flag(s.option("include-zero", True))
    include_unit = not args.exclude_unit and _flag(s.option("include-unit", True))
    if args.brute_force:
        lattice = brute_force_toric(phi)
        mode = "brute-force"
    else:
        names = args.seeds or s.option("seeds")
        names = [n.strip() for n in names.split(",")] if names else list(s.ideals)
        if not names:
            raise UsageError("enumerate needs seed ideals (declare some or pass --seeds)")
        seeds = [_ideal(s, n) for n in names]
        try:
            lattice = enumerate_closure(seeds, phi)
        except SeedNotCompatibleError as exc:
            cert = exc.certificate
            result = {"error": "seed not compatible", "seed": cert.ideal.key,
                      "witness": str(cert.witness), "image": str(cert.image)}
            return str(exc), REFUTED, result
        mode = "closure"
    members = [I for I in lattice.members
               if (include_zero or not I.is_zero()) and (include_unit or not I.is_unit())]
    result = {
        "mode": mode,
        "count": len(members),
        "members": [I.key for I in members],
        "partial": lattice.partial,
        "closure_log": [step.as_dict() for step in lattice.closure_log],
        "nonsquarefree_compatible": [I.key for I in lattice.anomalies],
    }
    lines = [f"{len(members)} compatibly split ideals ({mode})"]
    lines += ["  " + I.key for I in members]
    if lattice.partial:
        lines.append("  (partial: non-monomial member, minimal primes skipped)")
    return "\n".join(lines), OK, result


def _hilbert_poly(I: Ideal):
    """Hilbert polynomial of I, falling back to the 'sufficiently divisible' reading."""
    try:
        return hilbert_polynomial(I), "sufficiently large"
    except HilbertWindowError:
        period = lcm(*I.ring.grading.weights[0])
        if period == 1:
            raise
        return hilbert_polynomial(I, period=period), f"sufficiently divisible (period {period})"


def cmd_hilbert(s, args):
    I = _ideal(s, args.ideal)
    upto = args.upto if args.upto is not None else I.max_generator_degree() + s.ring.nvars + 3
    values = [hilbert_function(I, n) for n in range(upto + 1)]
    S = saturate(I)
    result = {"ideal": I.key, "saturation": S.key, "hilbert_function": values}
    if S.is_unit():
        poly, reading = HilbertPolynomial([]), "sufficiently large"
    else:
        poly, reading = _hilbert_poly(S)
    result["hilbert_polynomial"] = str(poly)
    result["reading"] = reading
    text = f"h(n), n=0..{upto}: {values}\nHilbert polynomial of {S.key}: {poly}"
    return text, OK, result


def cmd_rigidity(s, args):
    I = _ideal(s, args.ideal)
    bound = _int_option(s, args, "degree_bound", "degree-bound")
    cert = is_compatible(s.splitting, I)
    if not cert.verdict:
        result = {"ideal": I.key, "error": "not compatible", "witness": str(cert.witness),
                  "image": str(cert.image)}
        return f"{I.key} is not compatibly split; phi({cert.witness}) = {cert.image}", \
            REFUTED, result
    report = rigidity_report(I, s.splitting, bound)
    text = f"dim_hom={report.dim_hom} dim_intertwined={report.dim_intertwined}"
    if report.notes:
        text += "\n" + "\n".join("note: " + n for n in report.notes)
    return text, OK if report.conclusive else REFUTED, report.as_dict()


def cmd_phi_check(s, args):
    I = _ideal(s, args.ideal)
    N = _int_option(s, args, "N", "N")
    if N is None:
        raise UsageError("phi-check needs --N")
    ok = phi_membership(I, s.splitting, N)
    result = {"ideal": I.key, "N": N, "member": ok,
              "reading": "condition checked on the subspace I_N of R_N"}
    return f"{I.key} at N={N}: {'in' if ok else 'NOT in'} Phi", OK if ok else REFUTED, result


def cmd_fixed_points(s, args):
    text_f = args.hilbert or s.option("hilbert") or "1"
    try:
        f = HilbertPolynomial.parse(text_f)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    phi = s.splitting
    if phi.premultiplier.is_monomial() and s.ring.nvars <= 4:
        lattice = brute_force_toric(phi)
    else:
        if not s.ideals:
            raise UsageError("non-toric fixed-points needs seed ideals")
        lattice = enumerate_closure([s.ideal(n) for n in s.ideals], phi)
    found = filter_by_hilbert(lattice, f)
    result = {"hilbert_polynomial": str(f), "ideals": [I.key for I in found]}
    lines = [f"{len(found)} compatibly split ideals with Hilbert polynomial {f}"]
    lines += ["  " + I.key for I in found]
    if str(f) == "1":
        points = []
        for P in coordinate_points(s.ring):
            points.append({"point": P.key, "compatibly_split": P in lattice})
        result["coordinate_points"] = points
        lines.append("coordinate points: " + ", ".join(
            f"{q['point']}={'split' if q['compatibly_split'] else 'not split'}" for q in points))
    return "\n".join(lines), OK, result


COMMANDS = {
    "check-splitting": cmd_check_splitting,
    "graded-part": cmd_graded_part,
    "check-compatible": cmd_check_compatible,
    "enumerate": cmd_enumerate,
    "hilbert": cmd_hilbert,
    "rigidity": cmd_rigidity,
    "phi-check": cmd_phi_check,
    "fixed-points": cmd_fixed_points,
}


def run_command(scenario: Scenario, args: argparse.Namespace) -> CommandResult:
    report = {"schema_version": SCHEMA_VERSION, "command": args.command}
    try:
        report["scenario"] = _scenario_block(scenario)
        text, code, result = COMMANDS[args.command](scenario, args)
    except (UsageError, AlgebraError) as exc:
        report["error"] = str(exc)
        return CommandResult(f"error: {exc}", USAGE, report)
    report["result"] = result
    report["exit_code"] = code
    return CommandResult(text, code, report)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.scenario == "-":
            text = sys.stdin.read()
        else:
            with open(args.scenario, encoding="utf-8") as fh:
                text = fh.read()
        scenario = parse_scenario(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ScenarioError as exc:
        print(f"{args.scenario}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return USAGE
    outcome = run_command(scenario, args)
    stream = sys.stderr if outcome.exit_code == USAGE else sys.stdout
    print(outcome.text, file=stream)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(outcome.json())
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
