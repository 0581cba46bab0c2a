"""Command-line front end: ``sl3fusion <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any

from . import admissible, extring
from .verify import SUITES
from .weyl import AffineElement, check_p, enumerate_alcove, iota, is_dominant, length


class UsageError(Exception):
    pass


def _parse_element(text: str) -> AffineElement:
    try:
        return AffineElement.parse(text)
    except ValueError:
        raise UsageError(f"cannot parse element label {text!r}") from None


def _valid_p(p: int) -> int:
    try:
        return check_p(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _report(command: str, p: int | None, payload: Any, checks=None) -> dict:
    return {"command": command, "p": p, "payload": payload, "checks": checks or []}


def cmd_alcove(args) -> tuple[dict, list[list]]:
    p = _valid_p(args.p)
    rows = [
        {"element": y.label(), "iota": str(iota(y)), "dim": extring.dimension(y), "length": length(y)}
        for y in enumerate_alcove(p)
    ]
    flat = [["element", "iota", "dim", "length"]] + [list(r.values()) for r in rows]
    return _report("alcove", p, rows), flat


def cmd_dual(args) -> tuple[dict, list[list]]:
    p = _valid_p(args.p)
    rows = [
        {"mu": str(d.mu), "epsilon": d.epsilon, "hyperplanes": list(d.hyperplanes)}
        for d in admissible.dual_set(p)
    ]
    flat = [["mu", "epsilon", "hyperplanes"]] + [
        [r["mu"], r["epsilon"], ";".join(r["hyperplanes"])] for r in rows
    ]
    return _report("dual", p, rows), flat


def cmd_character(args) -> tuple[dict, list[list]]:
    y = _parse_element(args.y)
    if not is_dominant(y):
        raise UsageError(f"element {args.y!r} is not in the dominant chamber")
    ch = extring.ext_character(y).elem
    payload = {z.label(): c for z, c in ch.sorted_items()}
    flat = [["element", "multiplicity"]] + [[k, v] for k, v in payload.items()]
    return _report("character", None, payload), flat


def cmd_fusion(args) -> tuple[dict, list[list]]:
    p = _valid_p(args.p)
    table = admissible.fusion_table(p)
    flat = [["x", "y", "z", "N"]]
    if args.all:
        payload = []
        for x in table.labels:
            for y in table.labels:
                for z, n in table.row(x, y).items():
                    payload.append({"x": x.label(), "y": y.label(), "z": z.label(), "N": n})
                    flat.append([x.label(), y.label(), z.label(), n])
        return _report("fusion", p, payload), flat
    if args.x is None or args.y is None:
        raise UsageError("fusion needs --x and --y, or --all")
    x, y = _parse_element(args.x), _parse_element(args.y)
    for label, v in ((args.x, x), (args.y, y)):
        if v not in table.labels:
            raise UsageError(f"element {label!r} is not in the admissible alcove for p={p}")
    payload = {z.label(): n for z, n in table.row(x, y).items()}
    flat += [[x.label(), y.label(), k, v] for k, v in payload.items()]
    return _report("fusion", p, payload), flat


def cmd_spectrum(args) -> tuple[dict, list[list]]:
    p = _valid_p(args.p)
    ed = admissible.eigen_data(p)
    duals = [str(d.mu) for d in ed.duals]
    psi = {
        y.label(): [[float(v.real), float(v.imag)] for v in ed.psi[i]] for i, y in enumerate(ed.labels)
    }
    eig = {
        y.label(): [[float(v.real), float(v.imag)] for v in ed.chi[i]] for i, y in enumerate(ed.labels)
    }
    payload = {"duals": duals, "psi": psi, "eigenvalues": eig}
    flat = [["y", "mu", "psi_re", "psi_im", "eig_re", "eig_im"]]
    for i, y in enumerate(ed.labels):
        for k, mu in enumerate(duals):
            a, b = ed.psi[i, k], ed.chi[i, k]
            flat.append([y.label(), mu, repr(a.real), repr(a.imag), repr(b.real), repr(b.imag)])
    return _report("spectrum", p, payload), flat


def cmd_verify(args) -> tuple[dict, list[list]]:
    p = _valid_p(args.p)
    checks = [c.as_dict() for c in SUITES[args.suite](p)]
    flat = [["name", "status", "max_defect"]] + [
        [c["name"], c["status"], c["max_defect"]] for c in checks
    ]
    rep = _report("verify", p, {"suite": args.suite}, checks)
    return rep, flat


COMMANDS = {
    "alcove": cmd_alcove,
    "dual": cmd_dual,
    "character": cmd_character,
    "fusion": cmd_fusion,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sl3fusion", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (("alcove", "list the admissible alcove C_p"), ("dual", "list the dual set E_p")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--p", type=int, required=True)

    s = sub.add_parser("character", parents=[common], help="expand chi_y in the group ring")
    s.add_argument("--y", required=True, help='element label, e.g. "s121*t[-1,-1]"')

    s = sub.add_parser("fusion", parents=[common], help="admissible fusion rules")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--x")
    s.add_argument("--y")
    s.add_argument("--all", action="store_true", help="emit the full tensor")

    s = sub.add_parser("spectrum", parents=[common], help="eigenvector matrix and eigenvalues")
    s.add_argument("--p", type=int, required=True)

    s = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--suite", choices=sorted(SUITES), required=True)
    return parser


def _render(report: dict, flat: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(flat)
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        report, flat = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"sl3fusion: error: {exc}", file=sys.stderr)
        return 2
    text = _render(report, flat, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [c["name"] for c in report["checks"] if c["status"] != "pass"]
    if failed:
        print(f"sl3fusion: failed checks: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
