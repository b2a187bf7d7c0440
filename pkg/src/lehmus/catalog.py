"""Built-in catalog of equivalence laws behind the proof methods, checked by
exhaustive truth table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from lehmus.logic import (
    Formula,
    are_equivalent,
    is_tautology,
    parse_formula,
    to_text,
)
from lehmus.report import CheckRecord, VerificationReport


@dataclass(frozen=True)
class EquivalenceLaw:
    """Either an equivalence ``left <=> right`` or a tautology claim about
    ``left`` alone (``right is None``)."""

    law_id: str
    left: Formula
    right: Optional[Formula]
    anchor: str

    def __post_init__(self):
        if self.left is None:
            raise ValueError(f"law {self.law_id} has no formula")

    @property
    def is_tautology_claim(self) -> bool:
        return self.right is None

    def holds(self) -> bool:
        if self.right is None:
            return is_tautology(self.left)
        return are_equivalent(self.left, self.right)

    def describe(self) -> str:
        if self.right is None:
            return f"|= {to_text(self.left)}"
        return f"{to_text(self.left)}  <=>  {to_text(self.right)}"


def chain(group: str, anchor: str, *texts: str) -> list[EquivalenceLaw]:
    """Split ``f1 <=> f2 <=> ... <=> fn`` into consecutive pairwise laws."""
    formulas = [parse_formula(t) for t in texts]
    if len(formulas) == 2:
        return [EquivalenceLaw(group, formulas[0], formulas[1], anchor)]
    return [
        EquivalenceLaw(f"{group}.{i + 1}", formulas[i], formulas[i + 1], anchor)
        for i in range(len(formulas) - 1)
    ]


def tautology(law_id: str, anchor: str, text: str) -> EquivalenceLaw:
    return EquivalenceLaw(law_id, parse_formula(text), None, anchor)


def _join(op: str, parts: Sequence[str]) -> str:
    return f" {op} ".join(parts)


def _cases(k: int) -> list[EquivalenceLaw]:
    ps = [f"p{i}" for i in range(1, k + 1)]
    return chain(
        f"L7.k{k}",
        "proof by cases: (p1->Q) & ... & (pk->Q) <=> p1 | ... | pk -> Q",
        _join("&", [f"({p} -> Q)" for p in ps]),
        f"{_join('|', ps)} -> Q",
    )


def _negated_cases(k: int) -> list[EquivalenceLaw]:
    qs = [f"q{i}" for i in range(1, k + 1)]
    negs = [f"~{q}" for q in qs]
    anchor = "indirect proof with the negated conclusion split into cases q1 | ... | qk"
    return chain(
        f"L12.k{k}.demorgan", anchor, f"~({_join('|', qs)})", _join("&", negs)
    ) + chain(
        f"L12.k{k}.split",
        anchor,
        _join("&", [f"(P -> {n})" for n in negs]),
        f"P -> {_join('&', negs)}",
    )


def builtin_laws() -> list[EquivalenceLaw]:
    laws: list[EquivalenceLaw] = []
    laws += chain(
        "L1",
        "equivalent-problem generation: p & ~q -> r <=> p & ~r -> q <=> p -> q | r",
        "p & ~q -> r",
        "p & ~r -> q",
        "p -> q | r",
    )
    laws += chain(
        "L2",
        "inverse-problem composition: (t & p -> r) & (t & q -> r) <=> t & (p | q) -> r",
        "(t & p -> r) & (t & q -> r)",
        "t & (p | q) -> r",
    )
    laws += chain(
        "L3",
        "formal proof: negated implication rewritten to P & ~Q",
        "~(P -> Q)",
        "~(~P | Q)",
        "~~P & ~Q",
        "P & ~Q",
    )
    laws.append(tautology("L4", "vacuous proof: contradictory hypothesis", "P & ~P -> Q"))
    laws.append(tautology("L5", "trivial proof: true conclusion", "Q -> (P -> Q)"))
    laws += chain(
        "L6",
        "biconditional as a pair of implications",
        "P <-> Q",
        "(P -> Q) & (Q -> P)",
    )
    laws += _cases(2) + _cases(3)
    laws += chain("L8", "law of contrapositive", "~Q -> ~P", "P -> Q")
    contradiction = "proof by contradiction: implication as disjunction and its negation"
    laws += chain("L9.disjunction", contradiction, "P -> Q", "~P | Q")
    laws += chain("L9.negation", contradiction, "~(P -> Q)", "P & ~Q")
    base = "proof by contradiction: logical bases deriving ~P or Q"
    laws += chain("L10.notP", base, "P -> Q", "~Q & P -> ~P", "~(P -> Q) -> ~P")
    laws += chain("L10.Q", base, "P -> Q", "~Q & P -> Q", "~(P -> Q) -> Q")
    laws += chain(
        "L11",
        "proof by contradiction against a valid theorem T (T modeled as true)",
        "P -> Q",
        "~Q & P -> ~true",
        "~(P -> Q) -> ~true",
    )
    laws += _negated_cases(2) + _negated_cases(3)
    return laws


def law_group(law_id: str) -> str:
    return law_id.split(".", 1)[0]


def verify_catalog(laws: Optional[Iterable[EquivalenceLaw]] = None) -> VerificationReport:
    """Check every law; failures become report entries, never exceptions."""
    if laws is None:
        laws = builtin_laws()
    report = VerificationReport()
    for law in laws:
        report.add(
            CheckRecord(
                check_id=f"logic.{law.law_id}",
                anchor=law.anchor,
                passed=law.holds(),
                inputs={"law": law.describe()},
            )
        )
    return report
