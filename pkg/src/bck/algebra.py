"""Finite BCK-algebras given by Cayley tables.

A BCK-algebra is an algebra <A; *, 0> satisfying, for all x, y, z:

    BCK1  ((x*y)*(x*z))*(z*y) = 0
    BCK2  (x*(x*y))*y = 0
    BCK3  x*x = 0
    BCK4  0*x = 0
    BCK5  x*y = 0 and y*x = 0 imply x = y

Carrier elements are the integers 0..n-1; index 0 is always the constant 0.
The derived partial order is x <= y iff x*y = 0, and x*0 = x is a theorem
(checked here as its own diagnostic class, X0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

Element = int

# Below this order the plain-Python check is faster than numpy dispatch.
_VECTORIZE_MIN_ORDER = 16


class MalformedTableError(ValueError):
    """Table is structurally unusable: wrong shape or entry out of range."""


class BckAxiomError(ValueError):
    """Table is well formed but violates at least one BCK axiom."""

    def __init__(self, report: AxiomReport):
        ids = ", ".join(v[0] for v in report.violations)
        super().__init__(f"table is not a BCK-algebra (violates {ids})")
        self.report = report


class UnboundedAlgebraError(ValueError):
    """Operation requires a greatest element but the algebra has none."""


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    ``violations`` holds one entry per violated axiom class, each with the
    lexicographically first witness tuple. Empty iff the table is a
    BCK-algebra.
    """

    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def witness(self, axiom_id: str) -> tuple[int, ...] | None:
        for vid, wit in self.violations:
            if vid == axiom_id:
                return wit
        return None


def _validate_shape(order, table) -> None:
    if not isinstance(order, int) or order < 1:
        raise MalformedTableError(f"order must be a positive integer, got {order!r}")
    if len(table) != order:
        raise MalformedTableError(f"expected {order} rows, got {len(table)}")
    for x, row in enumerate(table):
        if len(row) != order:
            raise MalformedTableError(f"row {x} has {len(row)} entries, expected {order}")
        for y, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not 0 <= v < order:
                raise MalformedTableError(f"entry ({x},{y}) = {v!r} outside [0, {order})")


def _check_small(n, t) -> list[tuple[str, tuple[int, ...]]]:
    viol = []
    rng = range(n)
    w = next(
        (
            (x, y, z)
            for x, y, z in itertools.product(rng, rng, rng)
            if t[t[t[x][y]][t[x][z]]][t[z][y]] != 0
        ),
        None,
    )
    if w is not None:
        viol.append(("BCK1", w))
    w = next(((x, y) for x, y in itertools.product(rng, rng) if t[t[x][t[x][y]]][y] != 0), None)
    if w is not None:
        viol.append(("BCK2", w))
    w = next(((x,) for x in rng if t[x][x] != 0), None)
    if w is not None:
        viol.append(("BCK3", w))
    w = next(((x,) for x in rng if t[0][x] != 0), None)
    if w is not None:
        viol.append(("BCK4", w))
    w = next(
        ((x, y) for x, y in itertools.product(rng, rng) if x != y and t[x][y] == 0 and t[y][x] == 0),
        None,
    )
    if w is not None:
        viol.append(("BCK5", w))
    w = next(((x,) for x in rng if t[x][0] != x), None)
    if w is not None:
        viol.append(("X0", w))
    return viol


def _check_vectorized(n, table) -> list[tuple[str, tuple[int, ...]]]:
    t = np.asarray(table, dtype=np.int32)
    viol = []

    xy = t[:, :, None]
    xz = t[:, None, :]
    zy = np.broadcast_to(t.T[None, :, :], (n, n, n))
    r1 = t[t[xy, xz], zy]
    bad = np.argwhere(r1 != 0)
    if bad.size:
        viol.append(("BCK1", tuple(int(v) for v in bad[0])))

    idx = np.arange(n)
    r2 = t[t[idx[:, None], t], idx[None, :]]
    bad = np.argwhere(r2 != 0)
    if bad.size:
        viol.append(("BCK2", tuple(int(v) for v in bad[0])))

    bad = np.flatnonzero(np.diagonal(t) != 0)
    if bad.size:
        viol.append(("BCK3", (int(bad[0]),)))

    bad = np.flatnonzero(t[0, :] != 0)
    if bad.size:
        viol.append(("BCK4", (int(bad[0]),)))

    both = (t == 0) & (t.T == 0) & ~np.eye(n, dtype=bool)
    bad = np.argwhere(both)
    if bad.size:
        viol.append(("BCK5", tuple(int(v) for v in bad[0])))

    bad = np.flatnonzero(t[:, 0] != idx)
    if bad.size:
        viol.append(("X0", (int(bad[0]),)))

    return viol


def check_axioms(order: int, table) -> AxiomReport:
    """Exhaustively check BCK1-BCK5 (and the derived x*0 = x) over ``table``.

    Returns a report with one lexicographically-first witness per violated
    axiom class. Raises :class:`MalformedTableError` for structural problems,
    which are distinct from axiom violations.
    """
    _validate_shape(order, table)
    if order >= _VECTORIZE_MIN_ORDER:
        viol = _check_vectorized(order, table)
    else:
        viol = _check_small(order, [list(row) for row in table])
    return AxiomReport(tuple(viol))


def _find_bound(order, table) -> int | None:
    for m in range(order):
        if all(table[x][m] == 0 for x in range(order)):
            return m
    return None


@dataclass(frozen=True)
class BckAlgebra:
    """Immutable finite BCK-algebra.

    ``table[x][y]`` is x*y. ``bound`` is the greatest element when one
    exists (unique by BCK5), else None. Instances are safe to share across
    workers; all operations are pure. Use :func:`from_table` to construct
    with validation.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    bound: int | None

    @property
    def elements(self) -> range:
        return range(self.order)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def leq(self, x: int, y: int) -> bool:
        return self.table[x][y] == 0

    def meet(self, x: int, y: int) -> int:
        """x ^ y := y*(y*x), a lower bound of x and y."""
        t = self.table
        return t[y][t[y][x]]

    def neg(self, x: int) -> int:
        """~x := 1*x. Requires a bound."""
        if self.bound is None:
            raise UnboundedAlgebraError("negation needs a greatest element")
        return self.table[self.bound][x]

    def join(self, x: int, y: int) -> int:
        """x v y := ~(~x ^ ~y).

        Evaluated literally on any bounded algebra; it is a least upper
        bound only when the algebra is also commutative.
        """
        return self.neg(self.meet(self.neg(x), self.neg(y)))

    def is_linear(self) -> bool:
        return all(
            self.leq(x, y) or self.leq(y, x)
            for x in self.elements
            for y in range(x + 1, self.order)
        )

    def is_commutative(self) -> bool:
        return all(
            self.meet(x, y) == self.meet(y, x)
            for x in self.elements
            for y in range(x + 1, self.order)
        )

    def is_positive_implicative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[t[x][y]][y] for x in self.elements for y in self.elements)

    def is_implicative(self) -> bool:
        t = self.table
        return all(t[x][t[y][x]] == x for x in self.elements for y in self.elements)

    def atoms(self) -> set[int]:
        """Minimal elements among the non-zero elements."""
        return {
            x
            for x in range(1, self.order)
            if not any(y != x and self.leq(y, x) for y in range(1, self.order))
        }

    def canonical_form(self) -> tuple[tuple[int, ...], ...]:
        return canonical_table(self.order, self.table)

    def is_isomorphic(self, other: BckAlgebra) -> bool:
        return self.order == other.order and self.canonical_form() == other.canonical_form()

    def relabel(self, sigma) -> BckAlgebra:
        """Apply a permutation of indices with sigma[0] = 0."""
        if sigma[0] != 0:
            raise ValueError("relabelings must fix element 0")
        return from_table(self.order, _apply_perm(self.order, self.table, sigma))


def _apply_perm(n, table, sigma):
    new = [[0] * n for _ in range(n)]
    for x in range(n):
        sx = sigma[x]
        row = table[x]
        for y in range(n):
            new[sx][sigma[y]] = sigma[row[y]]
    return new


def canonical_table(order: int, table) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabeling of ``table`` over permutations fixing 0.

    Isomorphic tables get identical canonical forms; brute force over
    (n-1)! permutations, fine for the small orders used here.
    """
    best = None
    for perm in itertools.permutations(range(1, order)):
        sigma = (0,) + perm
        cand = tuple(tuple(row) for row in _apply_perm(order, table, sigma))
        if best is None or cand < best:
            best = cand
    return best


def from_table(order: int, table) -> BckAlgebra:
    """Validate ``table`` and return the algebra, with the bound detected.

    Raises :class:`BckAxiomError` (carrying the report) if any axiom fails.
    """
    report = check_axioms(order, table)
    if not report.ok:
        raise BckAxiomError(report)
    frozen = tuple(tuple(int(v) for v in row) for row in table)
    return BckAlgebra(order, frozen, _find_bound(order, frozen))
