"""Forest semantics: value-1 sets of formulas and tautology decisions.

A formula over n variables carves out the subforest of classes on whose
witnesses it takes value 1.  Tautology in the infinite-valued logic (at a
stated variable bound) means that subforest is the whole forest; tautology in
the t-valued logic means it covers the height-(t-1) truncation.  A brute-force
grid evaluator over the t-valued truth set serves as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .formulas import Formula, arity, eval_formula
from .forest import (
    Forest,
    Subforest,
    enumerate_forest,
    truncated_subforest,
)

#: Assignments the grid oracle is willing to enumerate.
GRID_ORACLE_BUDGET = 10**6


@dataclass(frozen=True)
class Logic:
    """Infinite-valued Goedel logic by default; t-valued when t is set."""

    t: Optional[int] = None

    def __post_init__(self) -> None:
        if self.t is not None and self.t < 2:
            raise ValueError(f"a finite-valued logic needs t >= 2, got {self.t}")

    @classmethod
    def finite(cls, t: int) -> "Logic":
        return cls(t)

    @property
    def is_finite(self) -> bool:
        return self.t is not None

    def __str__(self) -> str:
        return "ginf" if self.t is None else f"g{self.t}"


GINF = Logic()


def parse_logic(text: str) -> Logic:
    """Parse a logic name: "ginf" or "g<t>" with t >= 2."""
    name = text.strip().lower()
    if name == "ginf":
        return GINF
    if name.startswith("g") and name[1:].isdigit():
        return Logic.finite(int(name[1:]))
    raise ValueError(f"unknown logic {text!r}; use 'ginf' or 'g<t>' such as 'g4'")


def formula_forest(f: Formula, forest: Forest) -> Subforest:
    """Subforest of classes where f takes value 1.

    Value-1 status is class-invariant, so evaluating the canonical witness of
    each class suffices.  The Subforest constructor re-checks that the result
    is downward closed, which would catch a bad witness rule.
    """
    if arity(f) > forest.n:
        raise ValueError(
            f"formula uses X{arity(f)} but the forest has {forest.n} variables"
        )
    members = frozenset(
        c for c in forest.nodes if eval_formula(f, c.representative()) == 1
    )
    return Subforest(forest, members)


def is_tautology(f: Formula, n: int, logic: Logic = GINF) -> bool:
    """Decide provability of f, restricted to n variables.

    Infinite-valued: f must take value 1 on every class.  t-valued: f must
    take value 1 on every class of the height-(t-1) truncation.
    """
    if arity(f) > n:
        raise ValueError(f"formula uses X{arity(f)} but n is {n}")
    forest = enumerate_forest(n)
    ff = formula_forest(f, forest)
    if logic.t is None:
        return ff.is_full()
    return truncated_subforest(forest, logic.t).issubset(ff)


def grid_tautology_oracle(f: Formula, n: int, t: int) -> bool:
    """Exhaustive check of f over all t-valued assignments to X1..Xn.

    Independent of the forest machinery; exists for cross-validation, not
    scale, hence the t**n budget.
    """
    if t < 2:
        raise ValueError(f"a finite-valued logic needs t >= 2, got {t}")
    if arity(f) > n:
        raise ValueError(f"formula uses X{arity(f)} but n is {n}")
    if t**n > GRID_ORACLE_BUDGET:
        raise ValueError(
            f"grid of {t}**{n} assignments exceeds the budget of {GRID_ORACLE_BUDGET}"
        )
    levels = [Fraction(k, t - 1) for k in range(t)]
    return all(
        eval_formula(f, values) == 1
        for values in itertools.product(levels, repeat=n)
    )


def _restricted(sub: Subforest, logic: Logic) -> frozenset:
    if logic.t is None:
        return sub.members
    return sub.members & truncated_subforest(sub.forest, logic.t).members


def proves_equiv(a: Formula, b: Formula, n: int, logic: Logic = GINF) -> bool:
    """Provable equivalence: the two value-1 subforests coincide on the
    forest relevant to the logic."""
    forest = enumerate_forest(n)
    fa, fb = formula_forest(a, forest), formula_forest(b, forest)
    return _restricted(fa, logic) == _restricted(fb, logic)


def proves_implies(a: Formula, b: Formula, n: int, logic: Logic = GINF) -> bool:
    """Provable implication: value-1 subforest inclusion on the relevant
    forest."""
    forest = enumerate_forest(n)
    fa, fb = formula_forest(a, forest), formula_forest(b, forest)
    return _restricted(fa, logic) <= _restricted(fb, logic)
