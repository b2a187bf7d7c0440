"""Propositional formulas: parsing, printing, evaluation and truth tables.

Grammar (loosest to tightest binding)::

    iff     := implies ( "<->" iff )?
    implies := or ( "->" implies )?
    or      := and ( "|" and )*
    and     := unary ( "&" unary )*
    unary   := ("~" | "!") unary | atom
    atom    := "true" | "false" | IDENT | "(" iff ")"

``->`` and ``<->`` associate to the right, ``&`` and ``|`` to the left.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

VARIABLE_LIMIT = 20


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MissingVariableError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"assignment does not cover variable {self.name!r}"


class VariableLimitError(ValueError):
    pass


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Const, Not, And, Or, Implies, Iff]
Assignment = Mapping[str, bool]

_BINARY = (And, Or, Implies, Iff)
_SYMBOL = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
# binding strength used by the printer; higher binds tighter
_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6, Const: 6}
_RIGHT_ASSOC = (Implies, Iff)


def variables(f: Formula) -> list[str]:
    """Sorted list of the distinct variable names occurring in ``f``."""
    seen = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            seen.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, _BINARY):
            stack.append(node.right)
            stack.append(node.left)
    return sorted(seen)


# -- lexer / parser -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|[~!&|()])|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*))"
)
_KEYWORDS = {"true": True, "false": False}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", start)
        if m.group("op"):
            tokens.append(("op", m.group("op"), m.start("op")))
        else:
            word = m.group("ident")
            kind = "const" if word in _KEYWORDS else "ident"
            tokens.append((kind, word, m.start("ident")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        kind, value, _ = self.peek()
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def fail(self, what: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {what}, found {found}", pos)

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek()[0] != "end":
            self.fail("operator or end of input")
        return f

    def iff(self) -> Formula:
        left = self.implies()
        if self.accept("<->"):
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.accept("~") or self.accept("!"):
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "ident":
            self.i += 1
            return Var(value)
        if kind == "const":
            self.i += 1
            return Const(_KEYWORDS[value])
        if self.accept("("):
            f = self.iff()
            if not self.accept(")"):
                self.fail("')'")
            return f
        self.fail("variable, constant, '~' or '('")


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula tree.

    >>> parse_formula("p & ~q -> r")
    Implies(left=And(left=Var(name='p'), right=Not(child=Var(name='q'))), right=Var(name='r'))
    """
    if not text or not text.strip():
        raise ParseError("empty formula", 0)
    return _Parser(text).parse()


def to_text(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        inner = to_text(f.child)
        if _LEVEL[type(f.child)] < _LEVEL[Not]:
            inner = f"({inner})"
        return "~" + inner
    kind = type(f)
    level = _LEVEL[kind]
    left, right = to_text(f.left), to_text(f.right)
    left_level, right_level = _LEVEL[type(f.left)], _LEVEL[type(f.right)]
    if kind in _RIGHT_ASSOC:
        if left_level <= level:
            left = f"({left})"
        if right_level < level:
            right = f"({right})"
    else:
        if left_level < level:
            left = f"({left})"
        if right_level <= level:
            right = f"({right})"
    return f"{left} {_SYMBOL[kind]} {right}"


# -- semantics ---------------------------------------------------------------


def evaluate(f: Formula, a: Assignment) -> bool:
    if isinstance(f, Var):
        try:
            return bool(a[f.name])
        except KeyError:
            raise MissingVariableError(f.name) from None
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not evaluate(f.child, a)
    left = evaluate(f.left, a)
    if isinstance(f, And):
        return left and evaluate(f.right, a)
    if isinstance(f, Or):
        return left or evaluate(f.right, a)
    if isinstance(f, Implies):
        return (not left) or evaluate(f.right, a)
    return left == evaluate(f.right, a)


def _check_limit(names: list[str]):
    if len(names) > VARIABLE_LIMIT:
        raise VariableLimitError(
            f"{len(names)} variables exceed the enumeration limit of {VARIABLE_LIMIT}"
        )


def _column_masks(names: list[str]) -> dict[str, int]:
    # Bit r of a mask is the variable's value on canonical row r. The first
    # name is the most significant digit of the row counter.
    n = len(names)
    total = 1 << n
    masks = {}
    for i, name in enumerate(names):
        block = 1 << (n - 1 - i)
        period = 2 * block
        unit = ((1 << block) - 1) << block
        repeat = ((1 << total) - 1) // ((1 << period) - 1)
        masks[name] = unit * repeat
    return masks


def _evaluate_bits(f: Formula, masks: dict[str, int], full: int) -> int:
    if isinstance(f, Var):
        return masks[f.name]
    if isinstance(f, Const):
        return full if f.value else 0
    if isinstance(f, Not):
        return full ^ _evaluate_bits(f.child, masks, full)
    left = _evaluate_bits(f.left, masks, full)
    right = _evaluate_bits(f.right, masks, full)
    if isinstance(f, And):
        return left & right
    if isinstance(f, Or):
        return left | right
    if isinstance(f, Implies):
        return (full ^ left) | right
    return full ^ (left ^ right)


def _result_column(f: Formula, names: list[str]) -> int:
    _check_limit(names)
    full = (1 << (1 << len(names))) - 1
    return _evaluate_bits(f, _column_masks(names), full)


@dataclass(frozen=True)
class TruthTable:
    variables: tuple[str, ...]
    column: int  # bit r holds the result of row r

    def __len__(self):
        return 1 << len(self.variables)

    def __iter__(self) -> Iterator[tuple[dict[str, bool], bool]]:
        for r, values in enumerate(
            itertools.product((False, True), repeat=len(self.variables))
        ):
            yield dict(zip(self.variables, values)), bool(self.column >> r & 1)

    @property
    def results(self) -> list[bool]:
        return [bool(self.column >> r & 1) for r in range(len(self))]

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "rows": [
                {"assignment": assignment, "result": result}
                for assignment, result in self
            ],
        }

    def format(self) -> str:
        def cell(value):
            return "T" if value else "F"

        header = " ".join(self.variables) + (" | " if self.variables else "| ") + "result"
        lines = [header]
        for assignment, result in self:
            cells = " ".join(
                cell(assignment[v]).center(len(v)) for v in self.variables
            )
            lines.append(cells + (" | " if self.variables else "| ") + cell(result))
        return "\n".join(lines)


def truth_table(f: Formula) -> TruthTable:
    names = variables(f)
    return TruthTable(tuple(names), _result_column(f, names))


def is_tautology(f: Formula) -> bool:
    names = variables(f)
    return _result_column(f, names) == (1 << (1 << len(names))) - 1


def are_equivalent(f: Formula, g: Formula) -> bool:
    names = sorted(set(variables(f)) | set(variables(g)))
    return _result_column(f, names) == _result_column(g, names)
