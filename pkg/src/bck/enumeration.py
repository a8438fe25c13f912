"""Exhaustive generation of all BCK-algebras of a small order up to
isomorphism, plus catalog-wide spectrum reports and bound audits.

The search fills the Cayley table cell by cell (row-major over the free
cells; row 0, column 0, and the diagonal are forced by the axioms).
Pruning uses only theorems of the axioms, so no valid table is ever lost:

- partial antisymmetry: x*y = 0 and y*x = 0 with x != y is rejected;
- x*y <= x: placing x*y = v forces v*x = 0;
- the order is transitive, so each placed zero forces the zeros closing
  its chains;
- BCK1/BCK2 instances whose inputs are known force their conclusion cell
  to 0; the exchange identity (x*y)*z = (x*z)*y forces equal values
  across cell pairs;
- a full sweep of the determined BCK1/BCK2/exchange instances runs at
  every row boundary.

Forced values live in a cell -> value map consulted before branching.
Every completed table is re-verified in full before it is kept, so
over-eager pruning could only lose catalogs, never corrupt them; the
no-pruning oracle in the test suite guards against loss at small order.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import tableio
from .algebra import BckAlgebra, canonical_table, check_axioms, from_table
from .degrees import DEGREE_FUNCTIONS, Degree, DecompositionError, decompose_commutative

PRACTICAL_MAX_ORDER = 6


class EnumerationLimitError(RuntimeError):
    def __init__(self, nodes: int, found: int):
        super().__init__(
            f"enumeration aborted after {nodes} placements with {found} tables completed"
        )
        self.nodes = nodes
        self.found = found


def _free_cells(n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(1, n) for y in range(1, n) if x != y]


def _initial_table(n: int) -> list[list[int | None]]:
    t: list[list[int | None]] = [[None] * n for _ in range(n)]
    for y in range(n):
        t[0][y] = 0
    for x in range(n):
        t[x][0] = x
        t[x][x] = 0
    return t


def _propagate(n, t, a, b, v, force):
    # axiom instances decided or half-decided by the new cell (a, b) = v
    t2 = t[a][v]  # BCK2 (a, b): (a*(a*b))*b = 0
    if t2 is not None and not force(t2, b, 0):
        return False
    ta = t[a]
    tv = t[v]
    for z in range(n):
        az = ta[z]
        if az is None:
            continue
        if az == b and not force(v, z, 0):  # BCK2 (a, z) routes through (a, b)
            return False
        if z == b:
            continue
        p = tv[az]  # BCK1 (a, b, z): ((a*b)*(a*z))*(z*b) = 0
        if p is not None:
            q = t[z][b]
            if q is not None and not force(p, q, 0):
                return False
        p = t[az][v]  # BCK1 (a, z, b): ((a*z)*(a*b))*(b*z) = 0
        if p is not None:
            q = t[b][z]
            if q is not None and not force(p, q, 0):
                return False
        # exchange: (a*b)*z = (a*z)*b
        lhs = tv[z]
        rhs = t[az][b]
        if lhs is None:
            if rhs is not None and not force(v, z, rhs):
                return False
        elif not force(az, b, lhs):
            return False
    return True


def _place(n, t, forced, a, b, v):
    """Place t[a][b] = v if consistent with the pruning rules; returns the
    list of newly forced cells (for undo), or None with the state untouched
    when the candidate is rejected."""
    want = forced.get((a, b))
    if want is not None and v != want:
        return None
    if v == 0:
        if t[b][a] == 0:  # would break antisymmetry
            return None
    else:
        c = t[v][a]  # (a*b)*a must be 0
        if c is not None and c != 0:
            return None
    t[a][b] = v
    added: list[tuple[int, int]] = []

    def force(row, col, val) -> bool:
        cur = t[row][col]
        if cur is not None:
            return cur == val
        cell = (row, col)
        prev = forced.get(cell)
        if prev is None:
            forced[cell] = val
            added.append(cell)
            return True
        return prev == val

    ok = _propagate(n, t, a, b, v, force)
    if ok and v != 0 and v != a:
        ok = force(v, a, 0)
    if ok and v == 0:
        # the order must stay transitive through a <= b
        for c in range(n):
            if c != b and c != a and t[b][c] == 0 and not force(a, c, 0):
                ok = False
                break
            if c != a and c != b and t[c][a] == 0 and not force(c, b, 0):
                ok = False
                break
    if not ok:
        for cell in added:
            del forced[cell]
        t[a][b] = None
        return None
    return added


def _partial_axioms_ok(n, t) -> bool:
    rng = range(n)
    for x in rng:
        tx = t[x]
        for y in rng:
            t1 = tx[y]
            if t1 is None:
                continue
            t2 = tx[t1]
            if t2 is None:
                continue
            r = t[t2][y]
            if r is not None and r != 0:
                return False
    for x in rng:
        tx = t[x]
        for y in rng:
            a1 = tx[y]
            if a1 is None:
                continue
            ra1 = t[a1]
            for z in rng:
                a2 = tx[z]
                if a2 is None:
                    continue
                p = ra1[a2]
                q = t[z][y]
                if p is not None and q is not None:
                    r = t[p][q]
                    if r is not None and r != 0:
                        return False
                # exchange: (x*y)*z = (x*z)*y
                e1 = ra1[z]
                e2 = t[a2][y]
                if e1 is not None and e2 is not None and e1 != e2:
                    return False
    return True


def _search(n, t, forced, cells, start, emit, budget):
    """Depth-first completion from cell index ``start``. ``emit`` receives
    each completed table that passes the full axiom check. ``budget`` is a
    one-element list of remaining placements, or None for unlimited."""
    if start == len(cells):
        rows = [list(row) for row in t]
        if check_axioms(n, rows).ok:
            emit(tuple(tuple(row) for row in rows))
        return
    a, b = cells[start]
    row_ends = start + 1 == len(cells) or cells[start + 1][0] != a
    for v in range(n):
        if budget is not None:
            budget[0] -= 1
            if budget[0] < 0:
                raise EnumerationLimitError(0, 0)
        added = _place(n, t, forced, a, b, v)
        if added is None:
            continue
        if not row_ends or _partial_axioms_ok(n, t):
            _search(n, t, forced, cells, start + 1, emit, budget)
        for cell in added:
            del forced[cell]
        t[a][b] = None


def _expand_states(n, cells, depth):
    """All consistent partial fills of the first ``depth`` cells, for
    splitting the search across workers."""
    states = []
    t = _initial_table(n)
    forced: dict[tuple[int, int], int] = {}

    def rec(i):
        if i == depth or i == len(cells):
            states.append(([row[:] for row in t], dict(forced), i))
            return
        a, b = cells[i]
        for v in range(n):
            added = _place(n, t, forced, a, b, v)
            if added is None:
                continue
            rec(i + 1)
            for cell in added:
                del forced[cell]
            t[a][b] = None

    rec(0)
    return states


def _complete_state(args):
    n, t, forced, start, canonicalize, max_nodes = args
    cells = _free_cells(n)
    found: list[tuple] = []
    budget = None if max_nodes is None else [max_nodes]
    emit = (lambda tab: found.append(canonical_table(n, tab))) if canonicalize else found.append
    try:
        _search(n, t, forced, cells, start, emit, budget)
    except EnumerationLimitError:
        raise EnumerationLimitError(max_nodes, len(found)) from None
    return found


def enumerate_labeled_tables(n: int, max_nodes: int | None = None) -> list[tuple]:
    """Every valid completed table in search order, without isomorphism
    reduction. Mainly a soundness oracle for the deduplicated catalog."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return _complete_state((n, _initial_table(n), {}, 0, False, max_nodes))


@dataclass(frozen=True)
class CatalogEntry:
    algebra: BckAlgebra
    bound: int | None
    linear: bool
    commutative: bool
    positive_implicative: bool
    implicative: bool
    degrees: dict[str, Degree | None]


@dataclass(frozen=True)
class Catalog:
    """All order-n BCK-algebras in canonical form, lexicographically sorted,
    with property flags and degree profiles."""

    order: int
    entries: tuple[CatalogEntry, ...]

    @property
    def algebras(self) -> list[BckAlgebra]:
        return [e.algebra for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def profile_algebra(algebra: BckAlgebra) -> CatalogEntry:
    bounded = algebra.bound is not None
    degrees: dict[str, Degree | None] = {
        kind: (fn(algebra) if bounded or kind not in ("emd", "dnd") else None)
        for kind, fn in DEGREE_FUNCTIONS.items()
    }
    return CatalogEntry(
        algebra=algebra,
        bound=algebra.bound,
        linear=algebra.is_linear(),
        commutative=algebra.is_commutative(),
        positive_implicative=algebra.is_positive_implicative(),
        implicative=algebra.is_implicative(),
        degrees=degrees,
    )


def enumerate_algebras(n: int, jobs: int = 1, max_nodes: int | None = None) -> Catalog:
    """Backtracking enumeration of all order-n BCK-algebras up to
    isomorphism. Identical output for any ``jobs`` count; ``max_nodes``
    caps value placements per search task and aborts loudly when exceeded.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > PRACTICAL_MAX_ORDER:
        warnings.warn(
            f"enumeration at order {n} exceeds the practical ceiling "
            f"{PRACTICAL_MAX_ORDER} and may take very long",
            RuntimeWarning,
            stacklevel=2,
        )
    cells = _free_cells(n)
    states = _expand_states(n, cells, min(2, len(cells)))
    tasks = [(n, t, forced, i, True, max_nodes) for (t, forced, i) in states]
    if jobs <= 1:
        results = [_complete_state(task) for task in tasks]
    else:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_complete_state, tasks)
    canon = sorted({tab for chunk in results for tab in chunk})
    entries = tuple(profile_algebra(from_table(n, tab)) for tab in canon)
    return Catalog(n, entries)


SPECTRUM_KINDS = ("emd", "dnd", "cd", "pid", "id")


@dataclass(frozen=True)
class SpectrumReport:
    """Achieved degree values of one kind across a catalog.

    ``possible`` is populated for the two kinds with a stated candidate
    set (dnd: {2/n, ..., (n-1)/n, 1}; cd: {(3n-2)/n^2, (3n)/n^2, ...,
    (n^2-2)/n^2, 1}) and is None otherwise. ``outside_possible`` lists
    achieved values not in the candidate set; it is audited, not assumed,
    to be empty.
    """

    order: int
    kind: str
    possible: tuple[Degree, ...] | None
    achieved: tuple[Degree, ...]
    missing: tuple[Degree, ...]
    outside_possible: tuple[Degree, ...]
    witnesses: dict[Degree, BckAlgebra]


def _possible_degrees(n: int, kind: str) -> tuple[Degree, ...] | None:
    if kind == "dnd":
        vals = [Degree(j, n) for j in range(2, n)]
    elif kind == "cd":
        vals = [Degree(j, n * n) for j in range(3 * n - 2, n * n - 1, 2)]
    else:
        return None
    vals.append(Degree(1, 1))
    return tuple(sorted(vals))


def spectrum(catalog: Catalog, kind: str) -> SpectrumReport:
    """Collect the achieved values of one degree kind over the catalog,
    with one witness per value; emd and dnd consider bounded entries only."""
    if kind not in SPECTRUM_KINDS:
        raise ValueError(f"kind must be one of {SPECTRUM_KINDS}, got {kind!r}")
    witnesses: dict[Degree, BckAlgebra] = {}
    for entry in catalog.entries:
        d = entry.degrees[kind]
        if d is None:
            continue
        key = Degree(d.count, d.total)
        if key not in witnesses:
            witnesses[key] = entry.algebra
    achieved = tuple(sorted(witnesses))
    possible = _possible_degrees(catalog.order, kind)
    if possible is None:
        missing: tuple[Degree, ...] = ()
        outside: tuple[Degree, ...] = ()
    else:
        have = set(achieved)
        missing = tuple(sorted(set(possible) - have))
        outside = tuple(sorted(have - set(possible)))
    return SpectrumReport(catalog.order, kind, possible, achieved, missing, outside, witnesses)


@dataclass(frozen=True)
class ConjectureReport:
    """Whether every candidate dnd and cd value at this order is achieved."""

    order: int
    dnd: SpectrumReport
    cd: SpectrumReport

    @property
    def passed(self) -> bool:
        return not self.dnd.missing and not self.cd.missing


def verify_conjectures(catalog: Catalog) -> ConjectureReport:
    if catalog.order < 3:
        raise ValueError("conjecture checks start at order 3")
    return ConjectureReport(catalog.order, spectrum(catalog, "dnd"), spectrum(catalog, "cd"))


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    counterexamples: tuple[tuple[tuple[tuple[int, ...], ...], str], ...]


@dataclass(frozen=True)
class AuditReport:
    order: int
    checks: tuple[AuditCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> AuditCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def audit_bounds(catalog: Catalog) -> AuditReport:
    """Audit every catalog algebra against the universal degree bounds, the
    degree-one characterizations, and chain decomposability of commutative
    entries. Counterexample tables are reported verbatim; a failing check
    is a report, never an exception."""
    n = catalog.order
    n2 = Fraction(n * n)
    checks: list[AuditCheck] = []

    def run(name, condition, predicate, detail):
        bad = []
        for e in catalog.entries:
            if condition(e) and not predicate(e):
                bad.append((e.algebra.table, detail(e)))
        checks.append(AuditCheck(name, not bad, tuple(bad)))

    lo_cd, hi_cd = Fraction(3 * n - 2) / n2, Fraction(n * n - 2) / n2
    run(
        "cd_bounds_noncommutative",
        lambda e: not e.commutative,
        lambda e: lo_cd <= e.degrees["cd"].fraction <= hi_cd,
        lambda e: f"cd = {e.degrees['cd'].reduced} outside [{lo_cd}, {hi_cd}]",
    )
    lo_dnd, hi_dnd = Fraction(2, n), Fraction(n - 1, n)
    run(
        "dnd_bounds_noncommutative_bounded",
        lambda e: not e.commutative and e.bound is not None,
        lambda e: lo_dnd <= e.degrees["dnd"].fraction <= hi_dnd,
        lambda e: f"dnd = {e.degrees['dnd'].reduced} outside [{lo_dnd}, {hi_dnd}]",
    )
    lo_p, hi_p = Fraction(4 * n - 4) / n2, Fraction(n * n - 1) / n2
    run(
        "pid_bounds_not_positive_implicative",
        lambda e: not e.positive_implicative,
        lambda e: lo_p <= e.degrees["pid"].fraction <= hi_p,
        lambda e: f"pid = {e.degrees['pid'].reduced} outside [{lo_p}, {hi_p}]",
    )
    run(
        "id_bounds_not_implicative",
        lambda e: not e.implicative,
        lambda e: lo_p <= e.degrees["id"].fraction <= hi_p,
        lambda e: f"id = {e.degrees['id'].reduced} outside [{lo_p}, {hi_p}]",
    )
    lo_lin = Fraction(n * n + 3 * n - 2) / (2 * n2)
    run(
        "pid_linear_lower_bound",
        lambda e: e.linear and not e.positive_implicative,
        lambda e: e.degrees["pid"].fraction >= lo_lin,
        lambda e: f"pid = {e.degrees['pid'].reduced} below {lo_lin}",
    )
    run(
        "id_linear_lower_bound",
        lambda e: e.linear and not e.implicative,
        lambda e: e.degrees["id"].fraction >= lo_lin,
        lambda e: f"id = {e.degrees['id'].reduced} below {lo_lin}",
    )
    run(
        "cd_one_iff_commutative",
        lambda e: True,
        lambda e: (e.degrees["cd"].fraction == 1) == e.commutative,
        lambda e: f"cd = {e.degrees['cd'].reduced}, commutative = {e.commutative}",
    )
    run(
        "pid_one_iff_positive_implicative",
        lambda e: True,
        lambda e: (e.degrees["pid"].fraction == 1) == e.positive_implicative,
        lambda e: f"pid = {e.degrees['pid'].reduced}, positive implicative = {e.positive_implicative}",
    )
    run(
        "id_one_iff_implicative",
        lambda e: True,
        lambda e: (e.degrees["id"].fraction == 1) == e.implicative,
        lambda e: f"id = {e.degrees['id'].reduced}, implicative = {e.implicative}",
    )

    bad_rt = []
    for e in catalog.entries:
        if not e.commutative:
            continue
        try:
            decompose_commutative(e.algebra)
        except DecompositionError as exc:
            bad_rt.append((e.algebra.table, str(exc)))
    checks.append(AuditCheck("chain_decomposition_commutative", not bad_rt, tuple(bad_rt)))

    return AuditReport(n, tuple(checks))


def _table_hash(order, table) -> str:
    return hashlib.sha256(tableio.dumps(order, table).encode()).hexdigest()[:16]


def save_catalog(catalog: Catalog, dirpath) -> None:
    """Persist as one table file per algebra plus a JSON index with flags
    and degrees, so audits re-run without re-enumeration."""
    os.makedirs(dirpath, exist_ok=True)
    index = {"order": catalog.order, "algebras": []}
    for e in catalog.entries:
        fname = _table_hash(catalog.order, e.algebra.table) + ".tbl"
        with open(os.path.join(dirpath, fname), "w", encoding="utf-8") as fh:
            fh.write(tableio.dumps(catalog.order, e.algebra.table))
        index["algebras"].append(
            {
                "file": fname,
                "bound": e.bound,
                "linear": e.linear,
                "commutative": e.commutative,
                "positive_implicative": e.positive_implicative,
                "implicative": e.implicative,
                "degrees": {
                    kind: (d.to_json() if d is not None else None)
                    for kind, d in e.degrees.items()
                },
            }
        )
    with open(os.path.join(dirpath, "index.json"), "w", encoding="utf-8") as fh:
        json.dump(index, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_catalog(dirpath) -> Catalog:
    """Load a persisted catalog; tables are re-validated on the way in."""
    with open(os.path.join(dirpath, "index.json"), encoding="utf-8") as fh:
        index = json.load(fh)
    order = index["order"]
    entries = []
    for rec in index["algebras"]:
        algebra = tableio.load_algebra(os.path.join(dirpath, rec["file"]))
        degrees = {
            kind: (Degree(d["count"], d["total"]) if d is not None else None)
            for kind, d in rec["degrees"].items()
        }
        entries.append(
            CatalogEntry(
                algebra=algebra,
                bound=rec["bound"],
                linear=rec["linear"],
                commutative=rec["commutative"],
                positive_implicative=rec["positive_implicative"],
                implicative=rec["implicative"],
                degrees=degrees,
            )
        )
    return Catalog(order, tuple(entries))
