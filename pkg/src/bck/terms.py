"""Equation language over the BCK signature and its derived operations.

Grammar (one equation per input):

    equation := expr '=' expr
    expr     := join
    join     := meet ('|' meet)*
    meet     := dot ('&' dot)*
    dot      := unary ('.' unary)*
    unary    := '~' unary | atom
    atom     := '0' | '1' | IDENT | '(' expr ')'

Operators: '.' is the basic BCK operation, '&' the derived meet
x & y = y.(y.x), '|' the derived join x | y = ~(~x & ~y), '~' the derived
negation ~x = 1.x. Precedence ~ > . > & > |; infix operators associate
left. Identifiers are variables. Derived operators are expanded at
evaluation time, never precompiled into tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import BckAlgebra, UnboundedAlgebraError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class BDot:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    child: "Term"


Term = Union[Var, Zero, One, BDot, Meet, Join, Neg]


class EquationSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundVariableError(KeyError):
    pass


def free_vars(term: Term) -> tuple[str, ...]:
    """Free variables in first-occurrence order."""
    out: list[str] = []

    def walk(t: Term) -> None:
        if isinstance(t, Var):
            if t.name not in out:
                out.append(t.name)
        elif isinstance(t, (BDot, Meet, Join)):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, Neg):
            walk(t.child)

    walk(term)
    return tuple(out)


@dataclass(frozen=True)
class Equation:
    """A pair of terms; ``vars`` lists the free variables of both sides in
    first-occurrence order (left side first)."""

    lhs: Term
    rhs: Term
    vars: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.vars)


def make_equation(lhs: Term, rhs: Term) -> Equation:
    seen = list(free_vars(lhs))
    for name in free_vars(rhs):
        if name not in seen:
            seen.append(name)
    return Equation(lhs, rhs, tuple(seen))


_PUNCT = {".", "&", "|", "~", "(", ")", "=", "0", "1"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    # token kinds: one of _PUNCT, or "ident"
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
            continue
        if c.isalpha() or c == "_":
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        raise EquationSyntaxError(f"unknown operator or character {c!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def here(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][2]
        return len(self.text)

    def expect(self, kind: str) -> None:
        if self.peek() != kind:
            raise EquationSyntaxError(f"expected {kind!r}", self.here())
        self.advance()

    def parse_equation(self) -> Equation:
        lhs = self.parse_expr()
        self.expect("=")
        rhs = self.parse_expr()
        if self.peek() is not None:
            raise EquationSyntaxError("trailing input after equation", self.here())
        return make_equation(lhs, rhs)

    def parse_expr(self) -> Term:
        return self.parse_join()

    def parse_join(self) -> Term:
        t = self.parse_meet()
        while self.peek() == "|":
            self.advance()
            t = Join(t, self.parse_meet())
        return t

    def parse_meet(self) -> Term:
        t = self.parse_dot()
        while self.peek() == "&":
            self.advance()
            t = Meet(t, self.parse_dot())
        return t

    def parse_dot(self) -> Term:
        t = self.parse_unary()
        while self.peek() == ".":
            self.advance()
            t = BDot(t, self.parse_unary())
        return t

    def parse_unary(self) -> Term:
        if self.peek() == "~":
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Term:
        kind = self.peek()
        if kind == "0":
            self.advance()
            return Zero()
        if kind == "1":
            self.advance()
            return One()
        if kind == "ident":
            return Var(self.advance()[1])
        if kind == "(":
            self.advance()
            t = self.parse_expr()
            self.expect(")")
            return t
        raise EquationSyntaxError("expected a term", self.here())


def parse(text: str) -> Equation:
    """Parse one equation; raises :class:`EquationSyntaxError` with position."""
    return _Parser(text).parse_equation()


_PREC = {Join: 1, Meet: 2, BDot: 3}
_OP_CHAR = {Join: "|", Meet: "&", BDot: "."}


def _pretty_term(t: Term, parent_prec: int, is_right: bool) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Neg):
        return "~" + _pretty_term(t.child, 4, False)
    prec = _PREC[type(t)]
    s = (
        _pretty_term(t.left, prec, False)
        + f" {_OP_CHAR[type(t)]} "
        + _pretty_term(t.right, prec, True)
    )
    # left-associative: right child at equal precedence needs parentheses,
    # as does any child at lower precedence
    if prec < parent_prec or (prec == parent_prec and is_right):
        return "(" + s + ")"
    return s


def pretty_term(t: Term) -> str:
    return _pretty_term(t, 0, False)


def pretty(eq: Equation) -> str:
    """Render in the input grammar; ``parse(pretty(eq))`` reproduces ``eq``."""
    return f"{pretty_term(eq.lhs)} = {pretty_term(eq.rhs)}"


BUILTIN_EQUATIONS = {
    "DN": "~~x = x",
    "EM": "x | ~x = 1",
    "T": "x & y = y & x",
    "E1": "x . y = (x . y) . y",
    "I": "x . (y . x) = x",
    "X1": "x = 1",
    "NX1": "~x = 1",
}


def builtin(name: str) -> Equation:
    """One of the studied equations: DN (double negation), EM (excluded
    middle), T (commutativity), E1 (positive implicativity), I
    (implicativity), X1 (x = 1), NX1 (~x = 1)."""
    try:
        return parse(BUILTIN_EQUATIONS[name])
    except KeyError:
        raise ValueError(f"unknown builtin equation {name!r}") from None


def eval_term(algebra: BckAlgebra, term: Term, assignment: dict[str, int]) -> int:
    """Evaluate a term; derived operators expand to their defining terms.

    Raises :class:`UnboundedAlgebraError` if the term mentions 1, ~, or |
    and the algebra has no greatest element; :class:`UnboundVariableError`
    for variables missing from the assignment.
    """
    if isinstance(term, Var):
        try:
            return assignment[term.name]
        except KeyError:
            raise UnboundVariableError(term.name) from None
    if isinstance(term, Zero):
        return 0
    if isinstance(term, One):
        if algebra.bound is None:
            raise UnboundedAlgebraError("the constant 1 needs a greatest element")
        return algebra.bound
    if isinstance(term, BDot):
        return algebra.op(
            eval_term(algebra, term.left, assignment), eval_term(algebra, term.right, assignment)
        )
    if isinstance(term, Meet):
        a = eval_term(algebra, term.left, assignment)
        b = eval_term(algebra, term.right, assignment)
        return algebra.op(b, algebra.op(b, a))
    if isinstance(term, Join):
        if algebra.bound is None:
            raise UnboundedAlgebraError("join needs a greatest element")
        one = algebra.bound
        na = algebra.op(one, eval_term(algebra, term.left, assignment))
        nb = algebra.op(one, eval_term(algebra, term.right, assignment))
        return algebra.op(one, algebra.op(nb, algebra.op(nb, na)))
    if isinstance(term, Neg):
        if algebra.bound is None:
            raise UnboundedAlgebraError("negation needs a greatest element")
        return algebra.op(algebra.bound, eval_term(algebra, term.child, assignment))
    raise TypeError(f"not a term: {term!r}")


def holds(algebra: BckAlgebra, eq: Equation, assignment: dict[str, int]) -> bool:
    return eval_term(algebra, eq.lhs, assignment) == eval_term(algebra, eq.rhs, assignment)
