"""Finite families of piecewise-linear fuzzy sets over [0, 1].

Membership functions are piecewise linear with rational breakpoints; a
repeated abscissa encodes a jump, read right-continuously (at x = 1 the last
value applies).  This keeps every question asked here exactly decidable: the
classes realized by a family, the pointwise-sum-1 check, and the
no-three-positive-overlap check all reduce to finitely many exact rational
evaluations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .forest import (
    AssignmentClass,
    Subforest,
    class_of_values,
    downset,
    enumerate_forest,
    is_ruspini_subforest,
)

RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Exact rational from an int, Fraction, or a "p/q" / integer string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class PiecewiseLinearFuzzySet:
    """One membership function, as a breakpoint list on [0, 1].

    Abscissae are nondecreasing, start at 0 and end at 1, and at most two
    points share an abscissa (a jump).  Values stay within [0, 1].
    """

    name: str
    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pts = tuple((as_fraction(x), as_fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError(f"set {self.name!r}: needs at least two points")
        for k, (x, y) in enumerate(pts):
            if not 0 <= x <= 1:
                raise ValueError(f"set {self.name!r}, point {k}: abscissa {x} outside [0, 1]")
            if not 0 <= y <= 1:
                raise ValueError(f"set {self.name!r}, point {k}: value {y} outside [0, 1]")
        if pts[0][0] != 0:
            raise ValueError(f"set {self.name!r}, point 0: first abscissa must be 0")
        if pts[-1][0] != 1:
            raise ValueError(f"set {self.name!r}, point {len(pts) - 1}: last abscissa must be 1")
        for k in range(1, len(pts)):
            if pts[k][0] < pts[k - 1][0]:
                raise ValueError(
                    f"set {self.name!r}, point {k}: abscissae must be nondecreasing"
                )
        counts: dict[Fraction, int] = {}
        for x, _ in pts:
            counts[x] = counts.get(x, 0) + 1
        for k, (x, _) in enumerate(pts):
            if counts[x] > 2:
                raise ValueError(
                    f"set {self.name!r}, point {k}: abscissa {x} appears more than twice"
                )

    def breakpoints(self) -> tuple[Fraction, ...]:
        """Distinct abscissae, ascending."""
        return tuple(sorted({x for x, _ in self.points}))

    def value_at(self, x: RationalLike) -> Fraction:
        """Function value at x; at a jump the right-hand value applies
        (at x = 1, the final value)."""
        x = as_fraction(x)
        if not 0 <= x <= 1:
            raise ValueError(f"abscissa {x} outside [0, 1]")
        hit = None
        for px, py in self.points:
            if px == x:
                hit = py
            elif px > x:
                break
        if hit is not None:
            return hit
        for (ax, ay), (bx, by) in itertools.pairwise(self.points):
            if ax < x < bx:
                return ay + (by - ay) * (x - ax) / (bx - ax)
        raise AssertionError("unreachable: breakpoints cover [0, 1]")

    def left_limit(self, x: RationalLike) -> Fraction:
        """Limit from the left at x > 0 (equals value_at away from jumps)."""
        x = as_fraction(x)
        if not 0 < x <= 1:
            raise ValueError(f"left limit needs an abscissa in (0, 1], got {x}")
        for px, py in self.points:
            if px == x:
                return py
            if px > x:
                break
        return self.value_at(x)


@dataclass(frozen=True)
class Partition:
    """A finite nonempty family of fuzzy sets; Xi corresponds to sets[i-1]."""

    sets: tuple[PiecewiseLinearFuzzySet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(self.sets))
        if not self.sets:
            raise ValueError("a partition needs at least one fuzzy set")

    @property
    def n(self) -> int:
        return len(self.sets)

    def values_at(self, x: RationalLike) -> tuple[Fraction, ...]:
        return tuple(f.value_at(x) for f in self.sets)


def partition_from_json(obj: object) -> Partition:
    """Build a Partition from the JSON object layout:

    {"n": 2, "sets": [{"name": "f1", "points": [["0", "1"], ...]}, ...]}

    Rationals are "p/q" or integer strings (plain integers also accepted).
    """
    if not isinstance(obj, dict):
        raise ValueError("partition JSON must be an object")
    if "sets" not in obj or not isinstance(obj["sets"], list):
        raise ValueError("partition JSON needs a 'sets' list")
    sets = []
    for k, entry in enumerate(obj["sets"]):
        if not isinstance(entry, dict):
            raise ValueError(f"set {k}: must be an object")
        name = entry.get("name", f"f{k + 1}")
        if not isinstance(name, str):
            raise ValueError(f"set {k}: 'name' must be a string")
        raw_points = entry.get("points")
        if not isinstance(raw_points, list):
            raise ValueError(f"set {name!r}: needs a 'points' list")
        points = []
        for j, pair in enumerate(raw_points):
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise ValueError(f"set {name!r}, point {j}: expected a [x, y] pair")
            try:
                points.append((as_fraction(pair[0]), as_fraction(pair[1])))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"set {name!r}, point {j}: {exc}") from exc
        sets.append(PiecewiseLinearFuzzySet(name, tuple(points)))
    partition = Partition(tuple(sets))
    if "n" in obj and obj["n"] != partition.n:
        raise ValueError(
            f"'n' is {obj['n']} but {partition.n} sets were given"
        )
    return partition


def partition_to_json(p: Partition) -> dict:
    """Inverse of partition_from_json; rationals rendered as strings."""
    return {
        "n": p.n,
        "sets": [
            {
                "name": f.name,
                "points": [[str(x), str(y)] for x, y in f.points],
            }
            for f in p.sets
        ],
    }


def _add_crossing(
    crit: set[Fraction],
    a: Fraction,
    b: Fraction,
    ya: Fraction,
    yb: Fraction,
    ta: Fraction,
    tb: Fraction,
) -> None:
    # Solve ya + (yb-ya)s = ta + (tb-ta)s for s in the open cell (0, 1).
    den = (yb - ya) - (tb - ta)
    if den == 0:
        return
    s = (ta - ya) / den
    if 0 < s < 1:
        crit.add(a + s * (b - a))


def critical_points(p: Partition) -> tuple[Fraction, ...]:
    """All abscissae where the realized class can change: breakpoints plus
    every solution of f_i = f_j, f_i = 0, f_i = 1 inside a linear piece."""
    grid = sorted({x for f in p.sets for x in f.breakpoints()})
    crit: set[Fraction] = set(grid)
    zero, one = Fraction(0), Fraction(1)
    for a, b in itertools.pairwise(grid):
        ends = [(f.value_at(a), f.left_limit(b)) for f in p.sets]
        for ya, yb in ends:
            _add_crossing(crit, a, b, ya, yb, zero, zero)
            _add_crossing(crit, a, b, ya, yb, one, one)
        for (ya, yb), (ta, tb) in itertools.combinations(ends, 2):
            _add_crossing(crit, a, b, ya, yb, ta, tb)
    return tuple(sorted(crit))


def realized_classes(p: Partition) -> frozenset[AssignmentClass]:
    """Exact set of classes realized by p somewhere on [0, 1].

    Between consecutive critical points every set is linear and crosses
    neither 0, 1, nor another set, so the class is constant there; sampling
    each critical point plus each cell midpoint is exhaustive.
    """
    pts = critical_points(p)
    samples = list(pts)
    samples.extend((a + b) / 2 for a, b in itertools.pairwise(pts))
    return frozenset(class_of_values(p.values_at(x)) for x in samples)


def partition_forest(p: Partition) -> Subforest:
    """Downset of the realized classes inside the full forest."""
    forest = enumerate_forest(p.n)
    return downset(forest, realized_classes(p))


def check_ruspini_exact(p: Partition) -> bool:
    """Whether the membership values sum to exactly 1 at every point.

    The sum is piecewise linear, so it is 1 everywhere iff it is 1 at each
    breakpoint abscissa and at each left limit (both sides of every jump).
    """
    xs = sorted({x for f in p.sets for x in f.breakpoints()})
    for x in xs:
        if sum(f.value_at(x) for f in p.sets) != 1:
            return False
        if x > 0 and sum(f.left_limit(x) for f in p.sets) != 1:
            return False
    return True


def check_2_overlapping(p: Partition) -> bool:
    """Whether no point has three sets simultaneously positive."""
    return all(c.positive_count <= 2 for c in realized_classes(p))


def is_weak_ruspini(p: Partition) -> bool:
    """The logic-expressible relaxation of the sum-1 condition: the realized
    forest must be a Ruspini subforest."""
    return is_ruspini_subforest(partition_forest(p))
