"""Axiomatization and synthesis: from partitions to formulas and back.

Every class has a chain normal form, a conjunction tracing its value chain
with <| for strict steps and <-> for ties, whose value-1 set is exactly the
class's downset.  Disjoining the normal forms of a subforest's maximal
elements axiomatizes it; applying that to the realized forest of a partition
yields the partition's axiom.  In the other direction, any Ruspini subforest
is realized by an explicit step-function partition whose values at each
interval sum to 1.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .formulas import And, Bot, Formula, Iff, Implies, Lhd, Not, Or, Top, Var
from .forest import (
    AssignmentClass,
    Subforest,
    class_key,
    downset,
    enumerate_forest,
    is_ruspini_leaf,
    is_ruspini_subforest,
    leq,
    two_overlap_subforest,
)
from .partitions import (
    Partition,
    PiecewiseLinearFuzzySet,
    check_2_overlapping,
    check_ruspini_exact,
    partition_forest,
    realized_classes,
)
from .semantics import GINF, Logic, formula_forest, is_tautology, proves_equiv, proves_implies


def conjunction(terms: Sequence[Formula]) -> Formula:
    """Left fold under &; the empty conjunction is 1."""
    items = list(terms)
    if not items:
        return Top()
    result = items[0]
    for term in items[1:]:
        result = And(result, term)
    return result


def disjunction(terms: Sequence[Formula]) -> Formula:
    """Left fold under |; the empty disjunction is 0."""
    items = list(terms)
    if not items:
        return Bot()
    result = items[0]
    for term in items[1:]:
        result = Or(result, term)
    return result


def chain_normal_form(c: AssignmentClass) -> Formula:
    """Conjunction tracing c's chain from 0 to 1, <| for strict steps and
    <-> for ties; its value-1 set is the downset of c."""
    values = c.representative()
    order = sorted(range(1, c.n + 1), key=lambda i: (values[i - 1], i))
    anchored: list[tuple[Formula, Fraction]] = [(Bot(), Fraction(0))]
    anchored.extend((Var(i), values[i - 1]) for i in order)
    anchored.append((Top(), Fraction(1)))
    terms = [
        Iff(fa, fb) if va == vb else Lhd(fa, fb)
        for (fa, va), (fb, vb) in itertools.pairwise(anchored)
    ]
    return conjunction(terms)


def axiomatize_subforest(sub: Subforest) -> Formula:
    """Disjunction of the chain normal forms of the maximal elements; its
    value-1 set is the subforest itself.

    Only 0 has an empty value-1 set, so the empty subforest yields 0 (with a
    warning: no partition ever realizes an empty forest).
    """
    maximal = sub.leaves()
    if not maximal:
        warnings.warn(
            "axiomatizing an empty subforest: returning the false constant",
            stacklevel=2,
        )
        return Bot()
    return disjunction([chain_normal_form(c) for c in maximal])


def axiomatize_partition(p: Partition) -> Formula:
    """The partition's axiom: everything the logic can say about p.

    Unique up to provable equivalence among formulas with the same value-1
    set.
    """
    return axiomatize_subforest(partition_forest(p))


def ruspini_axiom(n: int) -> Formula:
    """Disjunction saying: two variables are positive, or one variable is 1
    and the rest are 0.  Its value-1 set is the Ruspini forest."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    pair_terms = [
        And(Not(Not(Var(i))), Not(Not(Var(j))))
        for i, j in itertools.combinations(range(1, n + 1), 2)
    ]
    single_terms = [
        conjunction([Var(i)] + [Not(Var(j)) for j in range(1, n + 1) if j != i])
        for i in range(1, n + 1)
    ]
    return disjunction(pair_terms + single_terms)


def overlap_axiom(n: int) -> Formula:
    """Conjunction forbidding three simultaneously positive variables; 1 when
    n < 3.  Its value-1 set is the two-overlap forest."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    terms = [
        Not(And(And(Var(i), Var(j)), Var(k)))
        for i, j, k in itertools.combinations(range(1, n + 1), 3)
    ]
    return conjunction(terms)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty classes."""
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def ordered_bell(n: int) -> int:
    """Number of ordered partitions of an n-set."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return sum(math.factorial(k) * stirling2(n, k) for k in range(n + 1))


def count_leaves(n: int) -> int:
    """Number of maximal classes of the full forest: twice the number of
    ordered partitions of the n variables."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return 2 * ordered_bell(n)


def count_weak_ruspini(n: int) -> int:
    """Number of weak Ruspini partitions of n sets the logic can tell apart:
    one per nonempty subset of the Ruspini forest's leaves."""
    return 2 ** (count_leaves(n) - 1) - 1


def count_2overlap_weak_ruspini(n: int) -> int:
    """Same count restricted to families where no three sets overlap."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return 2 ** ((3 * n * n - n) // 2) - 1


def _leaf_column(leaf: AssignmentClass) -> tuple[Fraction, ...]:
    """Membership values realizing the leaf, summing to exactly 1.

    One-variable-at-1 leaves use the 0/1 column.  Positive-chain leaves with
    blocks of sizes w1..wk get value i / sum(j * wj) on block i, which is
    strictly increasing, stays below 1, and makes the total exactly 1.
    """
    values = [Fraction(0)] * leaf.n
    if leaf.one:
        if len(leaf.one) != 1 or leaf.mid:
            raise ValueError(f"class {leaf} is not a Ruspini-forest leaf")
        values[leaf.one[0] - 1] = Fraction(1)
        return tuple(values)
    weight = sum(idx * len(block) for idx, block in enumerate(leaf.mid, start=1))
    for idx, block in enumerate(leaf.mid, start=1):
        for v in block:
            values[v - 1] = Fraction(idx, weight)
    return tuple(values)


def synthesize_partition(sub: Subforest, n: int) -> Partition:
    """Step-function partition realizing exactly the given Ruspini subforest.

    With m maximal elements, [0, 1] splits into m equal intervals (the last
    one closed); on the j-th interval the membership values are the j-th
    leaf's column.  The result sums to 1 everywhere, realizes the subforest,
    and each set has at most m - 1 jumps.
    """
    if sub.forest.n != n:
        raise ValueError(
            f"subforest lives over {sub.forest.n} variables, expected {n}"
        )
    if not sub.members:
        raise ValueError("cannot synthesize a partition from an empty subforest")
    if not is_ruspini_subforest(sub):
        raise ValueError("subforest is not a Ruspini subforest")
    leaves = sub.leaves()
    m = len(leaves)
    columns = [_leaf_column(leaf) for leaf in leaves]
    sets = []
    for i in range(n):
        levels = [col[i] for col in columns]
        points: list[tuple[Fraction, Fraction]] = [(Fraction(0), levels[0])]
        for j in range(1, m):
            if levels[j] != levels[j - 1]:
                x = Fraction(j, m)
                points.append((x, levels[j - 1]))
                points.append((x, levels[j]))
        points.append((Fraction(1), levels[-1]))
        sets.append(PiecewiseLinearFuzzySet(f"f{i + 1}", tuple(points)))
    return Partition(tuple(sets))


@dataclass(frozen=True)
class AnalysisReport:
    """Full verdict sheet for one partition.

    Each check triple holds (direct, forest, proof) verdicts for one
    equivalence: the direct numeric/semantic condition, the realized-forest
    condition, and the provability condition.  The three entries of a triple
    must always agree.
    """

    n: int
    realized_leaves: tuple[AssignmentClass, ...]
    is_exact_ruspini: bool
    is_weak_ruspini: bool
    is_2_overlapping: bool
    axiom: Formula
    ruspini_checks: tuple[bool, bool, bool]
    overlap_checks: tuple[bool, bool, bool]
    combined_checks: tuple[bool, bool, bool]


def analyze(p: Partition) -> AnalysisReport:
    """Evaluate every characterization independently and report them all.

    Weak-Ruspini: (direct) every realized class lies below a realized class
    that is maximal in the Ruspini forest; (forest) the realized forest is a
    Ruspini subforest; (proof) the axiom is provably equivalent to the
    disjunction of normal forms over its maximal elements that are maximal in
    the Ruspini forest.  Two-overlap: (direct) no three sets positive at
    once; (forest) realized forest inside the two-overlap forest; (proof) the
    4-valued logic proves axiom -> overlap axiom.  Combined: both at once,
    with the proof check run entirely inside the 4-valued logic.
    """
    forest = enumerate_forest(p.n)
    realized = sorted(realized_classes(p), key=class_key)
    fp = downset(forest, realized)
    alpha = axiomatize_subforest(fp)
    tau = overlap_axiom(p.n)
    g4 = Logic.finite(4)

    ruspini_direct = all(
        any(leq(c, d) and is_ruspini_leaf(d) for d in realized) for c in realized
    )
    ruspini_forest_check = is_ruspini_subforest(fp)
    f_alpha = formula_forest(alpha, forest)
    eq_rhs = disjunction(
        [chain_normal_form(l) for l in f_alpha.leaves() if is_ruspini_leaf(l)]
    )
    ruspini_proof = proves_equiv(alpha, eq_rhs, p.n, GINF)

    overlap_direct = check_2_overlapping(p)
    overlap_forest_check = fp.issubset(two_overlap_subforest(forest))
    overlap_proof = proves_implies(alpha, tau, p.n, g4)

    combined_direct = ruspini_direct and overlap_direct
    combined_forest = ruspini_forest_check and fp.issubset(
        two_overlap_subforest(forest)
    )
    combined_proof = is_tautology(
        And(Iff(alpha, eq_rhs), Implies(alpha, tau)), p.n, g4
    )

    return AnalysisReport(
        n=p.n,
        realized_leaves=fp.leaves(),
        is_exact_ruspini=check_ruspini_exact(p),
        is_weak_ruspini=ruspini_forest_check,
        is_2_overlapping=overlap_direct,
        axiom=alpha,
        ruspini_checks=(ruspini_direct, ruspini_forest_check, ruspini_proof),
        overlap_checks=(overlap_direct, overlap_forest_check, overlap_proof),
        combined_checks=(combined_direct, combined_forest, combined_proof),
    )
