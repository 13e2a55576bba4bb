"""Command-line front end: ``hfl verify | table | idempotents | presentation``.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .center import OneDimBlock, primitive_central_idempotents, verify_idempotents
from .fusion import SCHEMA, fusion_table, verify_fusion_against_oracle, verify_fusion_ring
from .hopf import verify_hopf_axioms, verify_integral, verify_quasitriangular
from .presentation import WORKED_EXAMPLES, parse_poly, reduced_relations, verify_presentation
from .repr import block_label, verify_simples

SUITES = {
    "hopf": (verify_hopf_axioms, verify_quasitriangular, verify_integral),
    "idempotents": (verify_idempotents,),
    "repr": (verify_simples,),
    "fusion": (verify_fusion_against_oracle, verify_fusion_ring),
    "presentation": (verify_presentation,),
}
ALL_N = tuple(range(2, 9))


def parse_n(text: str) -> tuple[int, ...]:
    if text == "all":
        return ALL_N
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--n takes an integer >= 2 or 'all', got {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be at least 2, got {n}")
    return (n,)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfl", description="Exact checks for the Hopf algebras H_{2n^2}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "text")):
        p.add_argument("--n", type=parse_n, required=True, help="parameter n >= 2, or 'all' for 2..8")
        p.add_argument("--format", default="json", choices=("json", "csv", "text"),
                       help=f"output format ({', '.join(formats)})")
        p.add_argument("--out", help="write output here instead of stdout")
        p.set_defaults(formats=formats)

    verify = sub.add_parser("verify", help="run verification suites")
    common(verify)
    verify.add_argument("--suite", default="all", choices=(*SUITES, "all"))
    common(sub.add_parser("table", help="emit the fusion table"), ("json", "csv", "text"))
    common(sub.add_parser("idempotents", help="list primitive central idempotents"))
    common(sub.add_parser("presentation", help="print ring generators and check them"))
    return parser


def cmd_verify(ns) -> tuple[str, int]:
    names = list(SUITES) if ns.suite == "all" else [ns.suite]
    reports = [fn(n) for n in ns.n for name in names for fn in SUITES[name]]
    ok = all(r.ok for r in reports)
    if ns.format == "text":
        text = "\n".join(r.summary() for r in reports) + f"\n{'PASS' if ok else 'FAIL'}\n"
    else:
        doc = {"schema": SCHEMA, "command": "verify", "n": list(ns.n), "suite": ns.suite,
               "pass": ok, "reports": [r.to_dict() for r in reports]}
        text = json.dumps(doc, indent=1) + "\n"
    return text, 0 if ok else 1


def cmd_table(ns) -> tuple[str, int]:
    tables = [fusion_table(n) for n in ns.n]
    if ns.format == "csv":
        parts = []
        for t in tables:
            body = t.to_csv()
            parts.append(body if len(tables) == 1 else f"# n={t.n}\n{body}")
        return "".join(parts), 0
    if ns.format == "text":
        lines = []
        for t in tables:
            lines.append(f"n={t.n}")
            for a, row in zip(t.simples, t.entries):
                for b, vec in zip(t.simples, row):
                    lines.append(f"  {a} (x) {b} = {vec}")
        return "\n".join(lines) + "\n", 0
    if len(tables) == 1:
        return tables[0].to_json(), 0
    return json.dumps({"schema": SCHEMA, "tables": [t.to_dict() for t in tables]}, indent=1) + "\n", 0


def _idempotent_rows(n: int):
    for c in primitive_central_idempotents(n):
        kind = c.kind
        row = {"simple": str(block_label(n, kind)), "ideal_dimension": c.ideal_dimension()}
        if isinstance(kind, OneDimBlock):
            row.update(kind="one-dimensional", i=kind.i, sign="+" if kind.sign > 0 else "-")
        else:
            row.update(kind="two-dimensional", i=kind.i, j=kind.j)
        row["element"] = str(c.element)
        yield row


def cmd_idempotents(ns) -> tuple[str, int]:
    docs = []
    for n in ns.n:
        rows = list(_idempotent_rows(n))
        docs.append({"n": n, "count": len(rows), "total_dimension": sum(r["ideal_dimension"] for r in rows),
                     "idempotents": rows})
    if ns.format == "text":
        lines = []
        for d in docs:
            lines.append(f"n={d['n']}: {d['count']} blocks, total dimension {d['total_dimension']}")
            lines.extend(f"  {r['simple']:>10}  dim {r['ideal_dimension']}  {r['element']}" for r in d["idempotents"])
        return "\n".join(lines) + "\n", 0
    return json.dumps({"schema": SCHEMA, "command": "idempotents", "results": docs}, indent=1) + "\n", 0


def cmd_presentation(ns) -> tuple[str, int]:
    docs, ok = [], True
    for n in ns.n:
        report = verify_presentation(n)
        ok &= report.ok
        doc = {"n": n, "generators": [str(p) for p in reduced_relations(n)]}
        if n in WORKED_EXAMPLES:
            doc["worked_example"] = [str(parse_poly(p)) for p in WORKED_EXAMPLES[n]]
        doc.update({"pass": report.ok, "report": report.to_dict()})
        docs.append(doc)
    if ns.format == "text":
        lines = []
        for d in docs:
            lines.append(f"n={d['n']}: {'PASS' if d['pass'] else 'FAIL'}")
            lines.append("  generators: " + ", ".join(d["generators"]))
            if "worked_example" in d:
                lines.append("  worked example: " + ", ".join(d["worked_example"]))
        return "\n".join(lines) + "\n", 0 if ok else 1
    doc = {"schema": SCHEMA, "command": "presentation", "pass": ok, "results": docs}
    return json.dumps(doc, indent=1) + "\n", 0 if ok else 1


COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "idempotents": cmd_idempotents,
    "presentation": cmd_presentation,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.format not in ns.formats:
        parser.error(f"--format {ns.format} is not available for '{ns.command}'")
    text, status = COMMANDS[ns.command](ns)
    if ns.out:
        try:
            with open(ns.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hfl: cannot write {ns.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
