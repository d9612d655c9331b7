"""Command line front end.

Exit status: 0 realizable (or criterion holds), 1 not realizable, 2 bad input,
3 if two exact criteria disagree.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .codec import GaussCodeError, format_code, parse_code
from .criteria import (
    EXACT,
    CriteriaDisagree,
    Criterion,
    CriterionReport,
    check_all,
    edge_equations,
    realizability_system,
    CHECKS,
)
from .gf2 import solve
from .interlace import interlacement_graph
from .render import FORMATS, WHAT, render
from .tablegen import count_table, default_jobs, format_table, table_json

CRITERIA = {
    "all": None,
    "evenness": Criterion.EVENNESS,
    "parity": Criterion.GAUSS_PARITY,
    "gl123": Criterion.GL123,
    "stz": Criterion.STZ_LINEAR,
    "cycle": Criterion.CYCLE_WEIGHT,
    "dehn": Criterion.DEHN,
    "touch": Criterion.TOUCH,
    "bipartite": Criterion.MAIN,
    "bruteforce": Criterion.STZ_BRUTEFORCE,
}


class InputError(Exception):
    pass


def _parse(text: str):
    try:
        return parse_code(text)
    except GaussCodeError as exc:
        raise InputError(f"invalid Gauss code {text!r}: {exc}") from exc


def _reports(code, criterion: str) -> List[CriterionReport]:
    crit = CRITERIA[criterion]
    if crit is None:
        return check_all(code)
    return [CHECKS[crit](code)]


def _verdict(reports: List[CriterionReport], criterion: str) -> bool:
    if CRITERIA[criterion] is None:
        return next(r.verdict for r in reports if r.criterion in EXACT)
    return reports[0].verdict


def _check_json(code, reports, verdict) -> dict:
    return {"code": format_code(code), "n": code.n, "symbols": list(code.symbols),
            "verdict": verdict, "reports": [r.to_json() for r in reports]}


def _verdict_word(criterion: str, verdict: bool) -> str:
    crit = CRITERIA[criterion]
    if crit is None or crit in EXACT:
        return "realizable" if verdict else "not realizable"
    if crit is Criterion.TOUCH:
        return "touch-realizable" if verdict else "not touch-realizable"
    return "holds" if verdict else "fails"


def cmd_check(args, out) -> int:
    if args.code == "-":
        return _check_batch(args, out)
    code = _parse(args.code)
    reports = _reports(code, args.criterion)
    verdict = _verdict(reports, args.criterion)
    if args.json:
        out.write(json.dumps(_check_json(code, reports, verdict), sort_keys=True) + "\n")
        return 0 if verdict else 1
    out.write(_verdict_word(args.criterion, verdict) + "\n")
    for r in reports:
        line = f"  {r.criterion.value}: {'yes' if r.verdict else 'no'}"
        if args.witness and r.detail:
            line += f"  [{r.detail}]"
        out.write(line + "\n")
    return 0 if verdict else 1


def _check_batch(args, out) -> int:
    status = 0
    for line in sys.stdin:
        text = line.strip()
        if not text:
            continue
        try:
            code = _parse(text)
        except InputError as exc:
            out.write(json.dumps({"input": text, "error": str(exc)}, sort_keys=True) + "\n")
            status = 2
            continue
        reports = _reports(code, args.criterion)
        verdict = _verdict(reports, args.criterion)
        out.write(json.dumps(_check_json(code, reports, verdict), sort_keys=True) + "\n")
        if not verdict and status == 0:
            status = 1
    return status


def cmd_solve(args, out) -> int:
    code = _parse(args.code)
    g = interlacement_graph(code, by_label=True)
    names = g.display_labels
    system = realizability_system(g)
    sol = solve(system)
    eqs = edge_equations(system)
    broken = [e for e in system.equations if not e.support and e.rhs]
    if args.json:
        payload = {"code": format_code(code), "labels": list(names),
                   "equations": [e.format(names) for e in eqs],
                   "constant_violations": [list(e.tag) for e in broken],
                   "consistent": sol.consistent, "rank": sol.rank,
                   "free_vars": [names[k] for k in sol.free_vars],
                   "particular": list(sol.particular) if sol.consistent else None,
                   "kernel": [list(v) for v in sol.kernel],
                   "witness": [system.equations[k].format(names) for k in sol.witness]}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0 if sol.consistent else 1
    out.write(f"{len(eqs)} equation(s) in {g.n} variable(s)\n")
    for e in eqs:
        out.write(f"  {e.format(names)}\n")
    for e in broken:
        kind = "degree of" if e.tag[0] == "diag" else "common neighbours of"
        who = ", ".join(names[v] for v in e.tag[1:])
        out.write(f"  0 = 1  (odd {kind} {who})\n")
    if not sol.consistent:
        out.write("inconsistent: " + ", ".join(system.equations[k].format(names)
                                                 for k in sol.witness) + "\n")
        out.write("not realizable\n")
        return 1
    out.write(f"rank {sol.rank}, {len(sol.free_vars)} free variable(s), "
              f"{sol.count} solution(s)\n")
    params = [f"c{k + 1}" if len(sol.kernel) > 1 else "c" for k in range(len(sol.kernel))]
    terms = []
    for v in range(g.n):
        parts = ["1"] if sol.particular[v] else []
        parts += [p for p, vec in zip(params, sol.kernel) if vec[v]]
        terms.append(f"X{names[v]} = {' + '.join(parts) or '0'}")
    out.write(", ".join(terms) + "\n")
    out.write("realizable\n")
    return 0


def cmd_table(args, out) -> int:
    if not 1 <= args.from_n <= args.to_n <= 12:
        raise InputError("need 1 <= --from <= --to <= 12")
    if args.to_n >= 11 and not args.allow_long:
        raise InputError("sizes 11 and 12 take a long time; pass --allow-long")
    # GAUSS_JOBS, when set, takes precedence over --jobs
    jobs = default_jobs() if os.environ.get("GAUSS_JOBS") else args.jobs or default_jobs()
    rows = count_table(args.from_n, args.to_n, collect_gap=args.gap,
                       jobs=jobs, allow_long=args.allow_long)
    if args.json:
        out.write(table_json(rows) + "\n")
    else:
        out.write(format_table(rows) + "\n")
    return 0


def cmd_render(args, out) -> int:
    code = _parse(args.code)
    out.write(render(code, args.what, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaussdiag",
                                     description="Realizability of Gauss diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide realizability")
    p.add_argument("code", help="Gauss code, or '-' to read one code per line from stdin")
    p.add_argument("--criterion", choices=sorted(CRITERIA), default="all")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="print the GF(2) system and its solutions")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="count classes passing STZ and GL123")
    p.add_argument("--from", dest="from_n", type=int, default=3)
    p.add_argument("--to", dest="to_n", type=int, default=9)
    p.add_argument("--gap", action="store_true", help="list classes passing GL123 but not STZ")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--allow-long", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("render", help="emit DOT or TikZ")
    p.add_argument("code")
    p.add_argument("--what", choices=WHAT, default="graph")
    p.add_argument("--format", choices=FORMATS, default="dot")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except CriteriaDisagree as exc:
        sys.stderr.write(f"internal error, criteria disagree: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
