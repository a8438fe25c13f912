"""Command-line interface.

Exit codes: 0 success, 1 domain-level negative (axiom violation, not
commutative, failed audit), 2 usage, parse, or I/O errors. Every command
is deterministic given identical inputs and flags; text and JSON output
agree on all numeric content.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tableio
from .algebra import BckAxiomError, MalformedTableError, UnboundedAlgebraError, check_axioms
from .constructions import FAMILY_NAMES, bck_union, direct_product, family, iseki_extension
from .degrees import (
    DEGREE_EQUATION_NAMES,
    DEGREE_FUNCTIONS,
    DecompositionError,
    NotCommutativeError,
    decompose_commutative,
    ds,
    gap_evidence,
)
from .enumeration import (
    SPECTRUM_KINDS,
    audit_bounds,
    enumerate_algebras,
    load_catalog,
    save_catalog,
    spectrum,
)
from .terms import BUILTIN_EQUATIONS, EquationSyntaxError, builtin, parse, pretty


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load_table_file(path):
    with open(path, encoding="utf-8") as fh:
        return tableio.loads(fh.read())


def _resolve_equation(args):
    # argparse enforces that exactly one of --kind/--eq is present
    return builtin(args.kind) if args.kind else parse(args.eq)


def cmd_verify(args) -> int:
    order, rows = _load_table_file(args.file)
    report = check_axioms(order, rows)
    out = {
        "command": "verify",
        "inputs": {"file": args.file},
        "results": {
            "valid": report.ok,
            "violations": [{"axiom": vid, "witness": list(w)} for vid, w in report.violations],
        },
    }
    if report.ok:
        _emit(args, out, [f"ok: valid BCK-algebra of order {order}"])
        return 0
    lines = [f"invalid: {len(report.violations)} axiom class(es) violated"]
    lines += [f"  {vid} witness={w}" for vid, w in report.violations]
    _emit(args, out, lines)
    return 1


def cmd_props(args) -> int:
    algebra = tableio.load_algebra(args.file)
    atoms = sorted(algebra.atoms())
    results = {
        "order": algebra.order,
        "bound": algebra.bound,
        "linear": algebra.is_linear(),
        "commutative": algebra.is_commutative(),
        "positive_implicative": algebra.is_positive_implicative(),
        "implicative": algebra.is_implicative(),
        "atoms": atoms,
    }
    out = {"command": "props", "inputs": {"file": args.file}, "results": results}
    lines = [f"order: {algebra.order}"]
    lines.append("bounded: no" if algebra.bound is None else f"bounded: yes (1 = {algebra.bound})")
    for key in ("linear", "commutative", "positive_implicative", "implicative"):
        lines.append(f"{key}: {'yes' if results[key] else 'no'}")
    lines.append("atoms: " + " ".join(str(a) for a in atoms))
    _emit(args, out, lines)
    return 0


def cmd_degree(args) -> int:
    algebra = tableio.load_algebra(args.file)
    if args.kind:
        d = DEGREE_FUNCTIONS[args.kind](algebra, jobs=args.jobs)
        shown = BUILTIN_EQUATIONS[DEGREE_EQUATION_NAMES[args.kind]]
    else:
        eq = parse(args.eq)
        d = ds(algebra, eq, jobs=args.jobs)
        shown = pretty(eq)
    results = {"equation": shown, "kind": args.kind, "degree": d.to_json(), "note": d.note}
    out = {
        "command": "degree",
        "inputs": {"file": args.file, "kind": args.kind, "eq": args.eq},
        "results": results,
    }
    lines = [f"equation: {shown}", f"degree: {d.reduced} (count={d.count} total={d.total})"]
    if d.note:
        lines.append(f"note: {d.note}")
    _emit(args, out, lines)
    return 0


def cmd_family(args) -> int:
    algebra = family(args.name, args.n)
    text = tableio.dumps(algebra.order, algebra.table)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_construct(args) -> int:
    operands = [tableio.load_algebra(f) for f in args.files]
    if args.operation == "iseki":
        if len(operands) != 1:
            raise SystemExit(2)
        result = iseki_extension(operands[0])
    else:
        if len(operands) < 2:
            raise SystemExit(2)
        combine = bck_union if args.operation == "union" else direct_product
        result = operands[0]
        for other in operands[1:]:
            result = combine(result, other)
    text = tableio.dumps(result.order, result.table)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_gap(args) -> int:
    eq = _resolve_equation(args)
    ev = gap_evidence(eq, args.max_n, jobs=args.jobs)
    results = {
        "equation": pretty(eq),
        "max_n": ev.max_n,
        "sequence": [
            {"n": i + 2, "degree": d.to_json()} for i, d in enumerate(ev.sequence)
        ],
        "sub_one_max": None
        if ev.sub_one_max is None
        else {"n": ev.sub_one_max[0], "degree": ev.sub_one_max[1].to_json()},
        "monotone_nonincreasing_after_first_sub_one": ev.monotone_nonincreasing_after_first_sub_one,
        "candidate_gap": None if ev.candidate_gap is None else str(ev.candidate_gap),
    }
    out = {
        "command": "gap",
        "inputs": {"eq": args.eq, "kind": args.kind, "max_n": args.max_n},
        "results": results,
    }
    lines = [f"equation: {pretty(eq)}"]
    if ev.sub_one_max is None:
        lines.append(f"all chain degrees up to order {ev.max_n} equal 1; no sub-1 value in range")
    else:
        n_at, d = ev.sub_one_max
        lines.append(f"max sub-1 chain degree in range: {d.reduced} at order {n_at}")
        lines.append(f"candidate gap (computed range only): {ev.candidate_gap}")
        lines.append(
            "tail monotone non-increasing: "
            + ("yes" if ev.monotone_nonincreasing_after_first_sub_one else "no")
        )
    lines += [f"  n={i + 2}: {d.reduced}" for i, d in enumerate(ev.sequence)]
    _emit(args, out, lines)
    return 0


def _catalog_for(args):
    if getattr(args, "catalog", None):
        cat = load_catalog(args.catalog)
        if cat.order != args.order:
            raise MalformedTableError(
                f"catalog at {args.catalog} has order {cat.order}, expected {args.order}"
            )
        return cat
    return enumerate_algebras(args.order, jobs=getattr(args, "jobs", 1))


def _entry_json(order, entry):
    return {
        "table": [list(row) for row in entry.algebra.table],
        "bound": entry.bound,
        "linear": entry.linear,
        "commutative": entry.commutative,
        "positive_implicative": entry.positive_implicative,
        "implicative": entry.implicative,
        "degrees": {k: (d.to_json() if d else None) for k, d in entry.degrees.items()},
    }


def cmd_enumerate(args) -> int:
    catalog = enumerate_algebras(args.order, jobs=args.jobs, max_nodes=args.max_nodes)
    if args.out:
        save_catalog(catalog, args.out)
    results = {
        "order": args.order,
        "count": len(catalog),
        "algebras": [_entry_json(args.order, e) for e in catalog.entries],
    }
    out = {
        "command": "enumerate",
        "inputs": {"order": args.order, "out": args.out},
        "results": results,
    }
    lines = [f"order {args.order}: {len(catalog)} algebras up to isomorphism"]
    for e in catalog.entries:
        flags = []
        flags.append("bounded" if e.bound is not None else "unbounded")
        for name, val in (
            ("linear", e.linear),
            ("commutative", e.commutative),
            ("positive_implicative", e.positive_implicative),
            ("implicative", e.implicative),
        ):
            if val:
                flags.append(name)
        row = " ".join(",".join(str(v) for v in r) for r in e.algebra.table)
        lines.append(f"  [{row}] {' '.join(flags)}")
    _emit(args, out, lines)
    return 0


def cmd_spectrum(args) -> int:
    rep = spectrum(_catalog_for(args), args.kind)
    results = {
        "order": rep.order,
        "kind": rep.kind,
        "possible": None if rep.possible is None else [d.reduced for d in rep.possible],
        "achieved": [d.reduced for d in rep.achieved],
        "missing": [d.reduced for d in rep.missing],
        "outside_possible": [d.reduced for d in rep.outside_possible],
        "witnesses": {
            d.reduced: [list(row) for row in alg.table] for d, alg in sorted(rep.witnesses.items())
        },
    }
    out = {
        "command": "spectrum",
        "inputs": {"order": args.order, "kind": args.kind},
        "results": results,
    }
    lines = [f"order {rep.order}, kind {rep.kind}"]
    if rep.possible is not None:
        lines.append("possible: " + " ".join(d.reduced for d in rep.possible))
    lines.append("achieved: " + " ".join(d.reduced for d in rep.achieved))
    lines.append(
        "missing: " + (" ".join(d.reduced for d in rep.missing) if rep.missing else "(none)")
    )
    if rep.outside_possible:
        lines.append("outside possible: " + " ".join(d.reduced for d in rep.outside_possible))
    _emit(args, out, lines)
    return 0


def cmd_audit(args) -> int:
    rep = audit_bounds(_catalog_for(args))
    results = {
        "order": rep.order,
        "passed": rep.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "counterexamples": [
                    {"table": [list(r) for r in tab], "detail": detail}
                    for tab, detail in c.counterexamples
                ],
            }
            for c in rep.checks
        ],
    }
    out = {"command": "audit", "inputs": {"order": args.order}, "results": results}
    lines = [f"order {rep.order}: {'PASS' if rep.passed else 'FAIL'}"]
    for c in rep.checks:
        lines.append(f"  {'pass' if c.passed else 'FAIL'} {c.name}")
        for tab, detail in c.counterexamples:
            row = " ".join(",".join(str(v) for v in r) for r in tab)
            lines.append(f"    counterexample [{row}]: {detail}")
    _emit(args, out, lines)
    return 0 if rep.passed else 1


def cmd_decompose(args) -> int:
    algebra = tableio.load_algebra(args.file)
    dec = decompose_commutative(algebra)
    out = {
        "command": "decompose",
        "inputs": {"file": args.file},
        "results": {"chain_lengths": list(dec.chain_lengths)},
    }
    _emit(args, out, ["chain lengths: " + (" ".join(map(str, dec.chain_lengths)) or "(empty)")])
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="bck", description="Finite BCK-algebra workbench")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("verify", cmd_verify, help="check a Cayley table file against the axioms")
    p.add_argument("file")

    p = add("props", cmd_props, help="print structural property flags and atoms")
    p.add_argument("file")

    p = add("degree", cmd_degree, help="exact degree of satisfiability of an equation")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--kind", choices=tuple(DEGREE_FUNCTIONS))
    g.add_argument("--eq")
    p.add_argument("--jobs", type=int, default=1)

    p = add("family", cmd_family, help="emit a named family member as a table file")
    p.add_argument("--name", required=True, choices=FAMILY_NAMES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--out")

    p = add("construct", cmd_construct, help="combine table files")
    p.add_argument("operation", choices=("union", "product", "iseki"))
    p.add_argument("files", nargs="+")
    p.add_argument("--out")

    p = add("gap", cmd_gap, help="chain-sequence satisfiability-gap evidence")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--eq")
    g.add_argument("--kind", choices=tuple(BUILTIN_EQUATIONS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("enumerate", cmd_enumerate, help="all algebras of an order up to isomorphism")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", help="directory to persist the catalog in")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=None)

    p = add("spectrum", cmd_spectrum, help="achieved degree values across a catalog")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--kind", choices=SPECTRUM_KINDS, required=True)
    p.add_argument("--catalog", help="persisted catalog directory to reuse")
    p.add_argument("--jobs", type=int, default=1)

    p = add("audit", cmd_audit, help="audit degree bounds over a catalog")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--catalog", help="persisted catalog directory to reuse")
    p.add_argument("--jobs", type=int, default=1)

    p = add("decompose", cmd_decompose, help="factor a commutative algebra into chains")
    p.add_argument("file")

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (BckAxiomError, NotCommutativeError, UnboundedAlgebraError, DecompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (tableio.TableFormatError, MalformedTableError, EquationSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
