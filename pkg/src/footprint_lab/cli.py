"""Command line front end.

Three commands: `tables` prints the per-rank bound table for one (q, d, m),
`search` runs one exhaustive computation and compares it against the
matching closed form, `verify` runs the named check suites.

Exit codes: 0 success (and all checks passed), 1 a verification failed or
an exhaustive value contradicts a settled formula, 2 invalid input or a
refused budget.  JSON reports are deterministic except for the `elapsed`
field; the worker count never changes the payload.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import codes, formulas, monomials, varieties
from .errors import BudgetExceeded, WitnessInvalid
from .verify import SUITES, VerifyConfig, run_suites

_FORMATS = ("json", "csv", "pretty")


def _parse_q_list(text: str) -> tuple[int, ...]:
    try:
        qs = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"--q wants a comma-separated integer list, got {text!r}")
    if not qs or any(q < 2 for q in qs):
        raise ValueError(f"--q entries must be >= 2, got {text!r}")
    return qs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="footprint-lab",
        description="Extremal zero counts of systems of forms over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    tab = sub.add_parser("tables", help="per-rank bound table for one (q, d, m)")
    tab.add_argument("--q", type=int, required=True)
    tab.add_argument("--d", type=int, required=True)
    tab.add_argument("--m", type=int, required=True)
    _output_flags(tab)

    sea = sub.add_parser("search", help="one exhaustive computation vs. its formula")
    sea.add_argument("kind", choices=("er", "affine", "footprint", "ghw"))
    sea.add_argument("--q", type=int, required=True)
    sea.add_argument("--d", type=int, required=True)
    sea.add_argument("--m", type=int, required=True)
    sea.add_argument("--r", type=int, required=True)
    sea.add_argument("--e", type=int, default=None,
                     help="footprint degree (footprint only; default: stable degree)")
    sea.add_argument("--mode", choices=("reduced", "all"), default="reduced",
                     help="monomial basis for the er scan")
    sea.add_argument("--budget", type=int, default=None)
    sea.add_argument("--workers", type=int, default=1)
    _output_flags(sea)

    ver = sub.add_parser("verify", help="run named verification suites")
    ver.add_argument("--suite", default="all", choices=tuple(SUITES) + ("all",))
    ver.add_argument("--q", type=_parse_q_list, default=None,
                     help="comma-separated field sizes, e.g. 2,3")
    ver.add_argument("--m-max", type=int, default=None)
    ver.add_argument("--d-max", type=int, default=None)
    ver.add_argument("--l", type=int, default=None, help="hypercube level")
    ver.add_argument("--quick", action="store_true",
                     help="pin the stock acceptance grids, ignoring grid flags")
    ver.add_argument("--budget", type=int, default=None)
    ver.add_argument("--workers", type=int, default=1)
    _output_flags(ver)
    return parser


def _output_flags(sub) -> None:
    sub.add_argument("--format", choices=_FORMATS, default="json")
    sub.add_argument("--output", default=None, help="write the report to a file")


def _cmd_tables(args) -> tuple[dict, int]:
    q, d, m = args.q, args.d, args.m
    if m < 1:
        raise ValueError(f"m = {m} must be >= 1")
    if not 1 <= d < q:
        raise ValueError(f"tables need 1 <= d < q; got d = {d}, q = {q}")
    top = formulas.binom(m + d, d)
    rows = []
    for r in range(1, top + 1):
        value, status = formulas.conjectured_max_points(r, d, m, q)
        i, j = formulas.rank_split(r, d, m)
        rows.append({
            "r": r,
            "H_r": formulas.affine_max_points(r, d, m, q),
            "K_r": formulas.projective_upper_bound(r, d, m, q),
            "e_r_value": value,
            "status": status,
            "macaulay_tuple": list(formulas.macaulay_tuple(top - r, d)),
            "i": i,
            "j": j,
        })
    return {"schema": 1, "command": "tables", "q": q, "d": d, "m": m, "rows": rows}, 0


def _cmd_search(args) -> tuple[dict, int]:
    start = time.perf_counter()
    report = {"schema": 1, "command": "search", "kind": args.kind,
              "q": args.q, "d": args.d, "m": args.m, "r": args.r}
    code = 0
    if args.kind == "er":
        res = varieties.brute_force_max_points(
            args.r, args.d, args.m, args.q, mode=args.mode,
            budget=args.budget, workers=args.workers)
        known = predicted = status = None
        if args.mode == "reduced":
            if args.d <= args.q:
                predicted, status = formulas.conjectured_max_points(
                    args.r, args.d, args.m, args.q)
            known = formulas.known_max_points(args.r, args.d, args.m, args.q)
        matches = None if known is None else res.value == known
        report.update({
            "mode": args.mode,
            "value": res.value,
            "matches_formula": matches,
            "formula": {"known": known, "predicted": predicted, "status": status},
            "witness": [p.to_json() for p in res.witness],
            "subspaces_enumerated": res.enumerated,
        })
        code = 1 if matches is False else 0
    elif args.kind == "affine":
        res = varieties.brute_force_affine_max_points(
            args.r, args.d, args.m, args.q,
            budget=args.budget, workers=args.workers)
        target = formulas.affine_max_points(args.r, args.d, args.m, args.q)
        report.update({
            "value": res.value,
            "matches_formula": res.value == target,
            "formula": {"known": target},
            "witness": [p.to_json() for p in res.witness],
            "subspaces_enumerated": res.enumerated,
        })
        code = 0 if res.value == target else 1
    elif args.kind == "footprint":
        e = args.e if args.e is not None else monomials.stable_degree(args.d, args.m, args.q)
        res = varieties.brute_force_max_footprint(
            args.r, args.d, args.m, args.q, e, budget=args.budget)
        stable = e >= monomials.stable_degree(args.d, args.m, args.q)
        target = formulas.projective_upper_bound(args.r, args.d, args.m, args.q) \
            if stable else None
        matches = None if target is None else res.value == target
        report.update({
            "e": e,
            "value": res.value,
            "matches_formula": matches,
            "formula": {"known": target},
            "witness": [monomials.format_monomial(mon) for mon in res.witness],
            "subspaces_enumerated": res.enumerated,
        })
        code = 1 if matches is False else 0
    else:  # ghw
        prm = codes.build_prm(args.d, args.m, args.q)
        res = codes.ghw_exhaustive(prm, args.r, budget=args.budget, workers=args.workers)
        known = formulas.known_max_points(args.r, args.d, args.m, args.q) \
            if args.d < args.q else None
        target = None if known is None else prm.n - known
        floor = formulas.ghw_lower_bound(args.r, args.d, args.m, args.q) \
            if args.d < args.q else None
        matches = None if target is None else res.weight == target
        if matches is None and floor is not None and res.weight < floor:
            matches = False
        report.update({
            "value": res.weight,
            "matches_formula": matches,
            "formula": {"known": target, "lower_bound": floor},
            "witness": [[int(c) for c in row] for row in res.rows],
            "subspaces_enumerated": res.enumerated,
        })
        code = 1 if matches is False else 0
    report["elapsed"] = round(time.perf_counter() - start, 6)
    return report, code


def _cmd_verify(args) -> tuple[dict, int]:
    start = time.perf_counter()
    cfg = VerifyConfig(qs=args.q, m_max=args.m_max, d_max=args.d_max,
                       level=args.l, quick=args.quick,
                       budget=args.budget, workers=args.workers)
    reports = run_suites(args.suite, cfg)
    suites = []
    for rep in reports:
        suites.append({
            "suite": rep.suite,
            "passed": rep.passed,
            "cases": rep.cases,
            "checks": [{
                "name": c.name, "passed": c.passed, "cases": c.cases,
                "counterexample": c.counterexample, "note": c.note,
            } for c in rep.checks],
        })
    passed = all(s["passed"] for s in suites)
    report = {"schema": 1, "command": "verify", "passed": passed, "suites": suites,
              "elapsed": round(time.perf_counter() - start, 6)}
    return report, 0 if passed else 1


def _render_csv(report: dict) -> str:
    import csv as _csv
    import io
    buf = io.StringIO()
    writer = _csv.writer(buf)
    if report["command"] == "tables":
        writer.writerow(["r", "H_r", "K_r", "e_r_value", "status",
                         "macaulay_tuple", "i", "j"])
        for row in report["rows"]:
            writer.writerow([row["r"], row["H_r"], row["K_r"], row["e_r_value"],
                             row["status"],
                             " ".join(str(x) for x in row["macaulay_tuple"]),
                             row["i"], row["j"]])
    elif report["command"] == "verify":
        writer.writerow(["suite", "check", "passed", "cases", "note"])
        for suite in report["suites"]:
            for check in suite["checks"]:
                writer.writerow([suite["suite"], check["name"],
                                 check["passed"], check["cases"], check["note"] or ""])
    else:
        writer.writerow(["key", "value"])
        for key, value in report.items():
            if key in ("witness", "formula"):
                value = json.dumps(value, sort_keys=True)
            writer.writerow([key, value])
    return buf.getvalue()


def _render_pretty(report: dict) -> str:
    lines = []
    if report["command"] == "tables":
        lines.append(f"q = {report['q']}  d = {report['d']}  m = {report['m']}")
        header = f"{'r':>4} {'H_r':>6} {'K_r':>6} {'e_r':>6}  {'status':<11} "\
                 f"{'macaulay':<14} {'i':>3} {'j':>3}"
        lines.append(header)
        lines.append("-" * len(header))
        for row in report["rows"]:
            mac = "(" + ", ".join(str(x) for x in row["macaulay_tuple"]) + ")"
            lines.append(f"{row['r']:>4} {row['H_r']:>6} {row['K_r']:>6} "
                         f"{row['e_r_value']:>6}  {row['status']:<11} {mac:<14} "
                         f"{row['i']:>3} {row['j']:>3}")
    elif report["command"] == "verify":
        for suite in report["suites"]:
            flag = "PASS" if suite["passed"] else "FAIL"
            lines.append(f"[{flag}] {suite['suite']} ({suite['cases']} cases)")
            for check in suite["checks"]:
                mark = "ok " if check["passed"] else "FAIL"
                note = f"  [{check['note']}]" if check["note"] else ""
                lines.append(f"    {mark} {check['name']} ({check['cases']}){note}")
                if check["counterexample"]:
                    lines.append(f"         counterexample: {check['counterexample']}")
        lines.append("all suites passed" if report["passed"] else "FAILURES present")
    else:
        for key, value in report.items():
            if key == "witness":
                lines.append("witness:")
                for item in value:
                    lines.append(f"    {item}")
            else:
                lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_pretty(report)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "tables":
            report, code = _cmd_tables(args)
        elif args.command == "search":
            report, code = _cmd_search(args)
        else:
            report, code = _cmd_verify(args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except WitnessInvalid as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    text = render(report, args.format)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
