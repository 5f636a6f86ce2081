"""Assignment classes of Goedel logic and the forests they form.

An assignment over variables X1..Xn is summarized, up to the order and
equality pattern of its values, by which variables sit at 0, which sit at 1,
and the ordered blocks of variables sharing a common value strictly between.
These summaries form a finite poset: one class lies below another when it is
obtained by collapsing a top segment of the other's value chain to 1.  The
poset is a forest (the ancestors of any node form a chain), its roots are the
Boolean classes, and its downward-closed subsets carry a Goedel algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

#: Enumeration guard: forests grow super-exponentially with n.
MAX_FOREST_VARIABLES = 8


@dataclass(frozen=True)
class AssignmentClass:
    """Order/equality pattern of one assignment to X1..Xn.

    `zero` and `one` hold the variables at 0 and 1; `mid` holds the blocks of
    equal values in (0, 1), in increasing value order.  Blocks are stored as
    sorted tuples, so equality and hashing are canonical.
    """

    n: int
    zero: tuple[int, ...]
    mid: tuple[tuple[int, ...], ...]
    one: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "zero", tuple(sorted(self.zero)))
        object.__setattr__(self, "mid", tuple(tuple(sorted(b)) for b in self.mid))
        object.__setattr__(self, "one", tuple(sorted(self.one)))
        if self.n < 1:
            raise ValueError("a class needs at least one variable")
        seen: set[int] = set()
        for block in (self.zero, *self.mid, self.one):
            for v in block:
                if not 1 <= v <= self.n:
                    raise ValueError(f"variable index {v} out of range 1..{self.n}")
                if v in seen:
                    raise ValueError(f"variable index {v} appears in two blocks")
                seen.add(v)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ValueError(f"blocks do not cover variables {missing}")
        if any(not b for b in self.mid):
            raise ValueError("mid blocks must be nonempty")

    @property
    def depth(self) -> int:
        """Height of the chain from this class's root down to it."""
        return len(self.mid) + 1

    @property
    def positive_count(self) -> int:
        """Number of variables with a strictly positive value."""
        return self.n - len(self.zero)

    def parent(self) -> Optional["AssignmentClass"]:
        """Immediate predecessor: the top mid block collapses to 1.

        Boolean classes (no mid blocks) are roots and have no parent.
        """
        if not self.mid:
            return None
        return AssignmentClass(self.n, self.zero, self.mid[:-1], self.one + self.mid[-1])

    def root(self) -> "AssignmentClass":
        """The Boolean class at the bottom of this class's tree."""
        merged = self.one + tuple(v for b in self.mid for v in b)
        return AssignmentClass(self.n, self.zero, (), merged)

    def downward_chain(self) -> Iterator["AssignmentClass"]:
        """This class, its parent, and so on down to the root."""
        node: Optional[AssignmentClass] = self
        while node is not None:
            yield node
            node = node.parent()

    def representative(self) -> tuple[Fraction, ...]:
        """Canonical witness: 0 and 1 blocks as written, the i-th of k mid
        blocks at i/(k+1)."""
        values = [Fraction(0)] * self.n
        for v in self.one:
            values[v - 1] = Fraction(1)
        k = len(self.mid)
        for i, block in enumerate(self.mid, start=1):
            for v in block:
                values[v - 1] = Fraction(i, k + 1)
        return tuple(values)

    def chain_string(self) -> str:
        """Human-readable chain, e.g. "0=X1<X2<1" or "0<X1=X2<1"."""
        parts = ["0"]
        blocks: list[tuple[bool, tuple[int, ...]]] = []
        if self.zero:
            blocks.append((True, self.zero))
        for b in self.mid:
            blocks.append((False, b))
        if self.one:
            blocks.append((False, self.one))
        for pos, (is_zero, block) in enumerate(blocks):
            lead = "=" if (pos == 0 and is_zero) else "<"
            for j, v in enumerate(block):
                parts.append(lead if j == 0 else "=")
                parts.append(f"X{v}")
        parts.append("=" if self.one else "<")
        parts.append("1")
        return "".join(parts)

    def __str__(self) -> str:
        return self.chain_string()


def class_key(c: AssignmentClass) -> tuple:
    """Deterministic sort key; classes of one tree sort contiguously."""
    return (c.zero, c.mid, c.one)


def class_of_values(values: Sequence[Fraction | int]) -> AssignmentClass:
    """Class realized by the given variable values (X1 gets values[0])."""
    if len(values) == 0:
        raise ValueError("at least one value is required")
    vals = [Fraction(v) for v in values]
    for i, v in enumerate(vals, start=1):
        if not 0 <= v <= 1:
            raise ValueError(f"value for X{i} is outside [0, 1]: {v}")
    zero = tuple(i for i, v in enumerate(vals, start=1) if v == 0)
    one = tuple(i for i, v in enumerate(vals, start=1) if v == 1)
    interior: dict[Fraction, list[int]] = {}
    for i, v in enumerate(vals, start=1):
        if 0 < v < 1:
            interior.setdefault(v, []).append(i)
    mid = tuple(tuple(interior[v]) for v in sorted(interior))
    return AssignmentClass(len(vals), zero, mid, one)


def leq(a: AssignmentClass, b: AssignmentClass) -> bool:
    """True when a is b or an ancestor of b (a collapse of b's top blocks)."""
    if a.n != b.n:
        raise ValueError(f"classes over {a.n} and {b.n} variables do not compare")
    if a.zero != b.zero or len(a.mid) > len(b.mid):
        return False
    return a.mid == b.mid[: len(a.mid)]


def is_leaf(c: AssignmentClass) -> bool:
    """Maximal in the full forest: no variable sits at 1."""
    return not c.one


def in_ruspini_forest(c: AssignmentClass) -> bool:
    """Membership in the forest left after removing the all-zero class and
    the classes with a single variable in (0, 1) and the rest at 0."""
    if not c.mid:
        return len(c.zero) != c.n
    lonely = (
        len(c.zero) == c.n - 1
        and len(c.mid) == 1
        and len(c.mid[0]) == 1
        and not c.one
    )
    return not lonely


def is_ruspini_leaf(c: AssignmentClass) -> bool:
    """Maximal element of the Ruspini forest: either exactly one variable at
    1 and the rest at 0, or no variable at 1 and at least two positive."""
    if not c.mid and len(c.one) == 1:
        return True
    return not c.one and c.positive_count >= 2


def in_two_overlap_forest(c: AssignmentClass) -> bool:
    """At most two variables strictly positive (trees of height <= 3)."""
    return c.positive_count <= 2


def in_truncated_forest(c: AssignmentClass, t: int) -> bool:
    """Membership in the height-(t-1) truncation used by t-valued logic."""
    if t < 2:
        raise ValueError(f"a finite-valued logic needs t >= 2, got {t}")
    return c.depth <= t - 1


class Forest:
    """All assignment classes over n variables with parent/child links.

    Instances are immutable once built; use :func:`enumerate_forest`.
    """

    def __init__(self, n: int, nodes: Iterable[AssignmentClass]) -> None:
        self.n = n
        self.nodes: tuple[AssignmentClass, ...] = tuple(sorted(nodes, key=class_key))
        self.node_set = frozenset(self.nodes)
        children: dict[AssignmentClass, list[AssignmentClass]] = {
            c: [] for c in self.nodes
        }
        roots: list[AssignmentClass] = []
        for c in self.nodes:
            p = c.parent()
            if p is None:
                roots.append(c)
            else:
                children[p].append(c)
        self.children: dict[AssignmentClass, tuple[AssignmentClass, ...]] = {
            c: tuple(sorted(kids, key=class_key)) for c, kids in children.items()
        }
        self.roots: tuple[AssignmentClass, ...] = tuple(roots)

    @property
    def leaves(self) -> tuple[AssignmentClass, ...]:
        return tuple(c for c in self.nodes if is_leaf(c))

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, c: AssignmentClass) -> bool:
        return c in self.node_set

    def __repr__(self) -> str:
        return f"Forest(n={self.n}, nodes={len(self.nodes)})"


def _ordered_partitions(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not items:
        yield ()
        return
    for k in range(1, len(items) + 1):
        for block in itertools.combinations(items, k):
            chosen = set(block)
            rest = tuple(x for x in items if x not in chosen)
            for tail in _ordered_partitions(rest):
                yield (block,) + tail


@lru_cache(maxsize=None)
def enumerate_forest(n: int) -> Forest:
    """Build the full forest over n variables (guarded, n <= 8)."""
    if not 1 <= n <= MAX_FOREST_VARIABLES:
        raise ValueError(
            f"forest enumeration supports 1 <= n <= {MAX_FOREST_VARIABLES}, got {n}"
        )
    universe = tuple(range(1, n + 1))
    nodes: list[AssignmentClass] = []
    for m in range(n + 1):
        for mid_vars in itertools.combinations(universe, m):
            chosen = set(mid_vars)
            others = tuple(x for x in universe if x not in chosen)
            for mid in _ordered_partitions(mid_vars):
                for z in range(len(others) + 1):
                    for zero in itertools.combinations(others, z):
                        one = tuple(x for x in others if x not in set(zero))
                        nodes.append(AssignmentClass(n, zero, mid, one))
    return Forest(n, nodes)


@dataclass(frozen=True)
class Subforest:
    """Downward-closed set of classes in an ambient forest.

    Subforests form a Goedel algebra: meet is intersection, join is union,
    and implication keeps the nodes whose chain satisfies the pointwise
    inclusion test.  Construction verifies downward closure.
    """

    forest: Forest
    members: frozenset[AssignmentClass]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        for c in self.members:
            if c not in self.forest.node_set:
                raise ValueError(f"class {c} is not a node of the ambient forest")
            p = c.parent()
            if p is not None and p not in self.members:
                raise ValueError(f"member set is not downward closed at {c}")

    def _check_ambient(self, other: "Subforest") -> None:
        if self.forest is not other.forest:
            raise ValueError("subforests live in different ambient forests")

    @property
    def sorted_members(self) -> tuple[AssignmentClass, ...]:
        return tuple(sorted(self.members, key=class_key))

    def leaves(self) -> tuple[AssignmentClass, ...]:
        """Maximal elements, in canonical order."""
        return tuple(
            c
            for c in self.sorted_members
            if not any(k in self.members for k in self.forest.children[c])
        )

    def meet(self, other: "Subforest") -> "Subforest":
        self._check_ambient(other)
        return Subforest(self.forest, self.members & other.members)

    def join(self, other: "Subforest") -> "Subforest":
        self._check_ambient(other)
        return Subforest(self.forest, self.members | other.members)

    def implies(self, other: "Subforest") -> "Subforest":
        self._check_ambient(other)
        keep = frozenset(
            q
            for q in self.forest.nodes
            if all(c not in self.members or c in other.members
                   for c in q.downward_chain())
        )
        return Subforest(self.forest, keep)

    def negate(self) -> "Subforest":
        return self.implies(empty_subforest(self.forest))

    def issubset(self, other: "Subforest") -> bool:
        self._check_ambient(other)
        return self.members <= other.members

    def is_full(self) -> bool:
        return len(self.members) == len(self.forest.nodes)

    def __contains__(self, c: AssignmentClass) -> bool:
        return c in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Subforest(n={self.forest.n}, members={len(self.members)})"


def downset(forest: Forest, seeds: Iterable[AssignmentClass]) -> Subforest:
    """Smallest downward-closed superset of the seeds."""
    members: set[AssignmentClass] = set()
    for seed in seeds:
        if seed not in forest.node_set:
            raise ValueError(f"class {seed} is not a node of the forest")
        for c in seed.downward_chain():
            if c in members:
                break
            members.add(c)
    return Subforest(forest, frozenset(members))


def empty_subforest(forest: Forest) -> Subforest:
    return Subforest(forest, frozenset())


def full_subforest(forest: Forest) -> Subforest:
    return Subforest(forest, forest.node_set)


def ruspini_subforest(forest: Forest) -> Subforest:
    return Subforest(
        forest, frozenset(c for c in forest.nodes if in_ruspini_forest(c))
    )


def two_overlap_subforest(forest: Forest) -> Subforest:
    return Subforest(
        forest, frozenset(c for c in forest.nodes if in_two_overlap_forest(c))
    )


def truncated_subforest(forest: Forest, t: int) -> Subforest:
    return Subforest(
        forest, frozenset(c for c in forest.nodes if in_truncated_forest(c, t))
    )


def generating_subforest(i: int, forest: Forest) -> Subforest:
    """Classes with Xi at value 1; the i-th free generator of the algebra."""
    if not 1 <= i <= forest.n:
        raise ValueError(f"variable index {i} out of range 1..{forest.n}")
    return Subforest(forest, frozenset(c for c in forest.nodes if i in c.one))


def is_ruspini_subforest(sub: Subforest) -> bool:
    """Nonempty, inside the Ruspini forest, with every maximal element a
    maximal element of the Ruspini forest."""
    if not sub.members:
        return False
    if not all(in_ruspini_forest(c) for c in sub.members):
        return False
    return all(is_ruspini_leaf(c) for c in sub.leaves())
