"""Lattice layer: meet/join tables, modularity/distributivity, Boolean
subalgebra test, and the Dedekind-MacNeille completion of finite posets.

All functions here work on bare order relations (square boolean matrices),
so they apply equally to effect algebra orders and to standalone poset
fixtures.  Cut sets in the completion are represented as int bitmasks of
their lower parts, ordered by inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import EffectAlgebraError


class NotALattice(EffectAlgebraError):
    """A lattice-only operation was applied to a non-lattice order."""


class SubsetNotClosed(EffectAlgebraError):
    """Subset passed to the Boolean test is not closed under meet/join/'."""


def _check_partial_order(leq):
    n = len(leq)
    if any(len(row) != n for row in leq):
        raise ValueError("order relation must be a square matrix")
    for x in range(n):
        if not leq[x][x]:
            raise ValueError(f"order not reflexive at {x}")
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise ValueError(f"order not antisymmetric at ({x},{y})")
            for z in range(n):
                if leq[x][y] and leq[y][z] and not leq[x][z]:
                    raise ValueError(f"order not transitive at ({x},{y},{z})")


@dataclass(frozen=True)
class Poset:
    """A finite poset as an explicit <= matrix; validated on construction."""

    leq: tuple
    names: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))
        _check_partial_order(self.leq)
        if self.names is None:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(self.n)))
        elif len(self.names) != self.n or len(set(self.names)) != self.n:
            raise ValueError("names must be distinct, one per element")

    @property
    def n(self):
        return len(self.leq)

    def downset_mask(self, x):
        return sum(1 << y for y in range(self.n) if self.leq[y][x])


@dataclass(frozen=True)
class LatticeTables:
    """Meet/join tables for an order, or the first pair lacking one.

    ``meet`` and ``join`` are n x n element tables when ``is_lattice``,
    otherwise None.  A finite lattice is automatically complete and
    bounded, recorded by ``complete``.
    """

    is_lattice: bool
    meet: tuple
    join: tuple
    counterexample: tuple  # (x, y, "meet"|"join") or None

    @property
    def complete(self):
        # Finite lattices are complete; this flag exists so reports can
        # state it explicitly rather than leaving it implied.
        return self.is_lattice


def lattice_tables(leq) -> LatticeTables:
    """Compute meets and joins as unique least upper / greatest lower bounds.

    For each pair the full bound set is scanned for a least (greatest)
    element; no shortcuts, so a failure yields an explicit witness pair.
    """
    n = len(leq)
    meet = [[None] * n for _ in range(n)]
    join = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
            least = next((u for u in ubs if all(leq[u][v] for v in ubs)), None)
            if least is None:
                return LatticeTables(False, None, None, (x, y, "join"))
            join[x][y] = join[y][x] = least
            lbs = [z for z in range(n) if leq[z][x] and leq[z][y]]
            greatest = next((l for l in lbs if all(leq[v][l] for v in lbs)), None)
            if greatest is None:
                return LatticeTables(False, None, None, (x, y, "meet"))
            meet[x][y] = meet[y][x] = greatest
    return LatticeTables(
        True, tuple(tuple(r) for r in meet), tuple(tuple(r) for r in join), None
    )


def is_modular(lt: LatticeTables):
    """Modular law x <= z  =>  x v (y ^ z) = (x v y) ^ z, brute force.

    Returns (True, None) or (False, lexicographically first witness).
    """
    if not lt.is_lattice:
        raise NotALattice(f"no meet/join tables: witness {lt.counterexample}")
    join, meet = lt.join, lt.meet
    n = len(join)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if join[x][z] != z:  # x <= z
                    continue
                if join[x][meet[y][z]] != meet[join[x][y]][z]:
                    return False, (x, y, z)
    return True, None


def is_distributive(lt: LatticeTables):
    """Distributive law x ^ (y v z) = (x ^ y) v (x ^ z), brute force."""
    if not lt.is_lattice:
        raise NotALattice(f"no meet/join tables: witness {lt.counterexample}")
    join, meet = lt.join, lt.meet
    n = len(join)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return False, (x, y, z)
    return True, None


def is_boolean_subalgebra(algebra, subset) -> bool:
    """Is the subset a Boolean algebra under the ambient meet, join and '?

    The subset must contain 0 and 1 and be closed under meet, join and
    orthosupplement (SubsetNotClosed otherwise).  It qualifies as Boolean
    iff it is distributive and every member x has x ^ x' = 0 and
    x v x' = 1.
    """
    lt = algebra.lattice
    if not lt.is_lattice:
        raise NotALattice(f"ambient algebra is not a lattice: {lt.counterexample}")
    sub = sorted(set(subset))
    inside = set(sub)
    if 0 not in inside or algebra.one not in inside:
        raise SubsetNotClosed("subset must contain 0 and 1")
    comp = algebra.complement
    for x in sub:
        if comp[x] not in inside:
            raise SubsetNotClosed(f"{x}' = {comp[x]} escapes the subset")
        for y in sub:
            if lt.meet[x][y] not in inside or lt.join[x][y] not in inside:
                raise SubsetNotClosed(f"meet/join of ({x},{y}) escapes the subset")
    for x in sub:
        if lt.meet[x][comp[x]] != 0 or lt.join[x][comp[x]] != algebra.one:
            return False
    for x in sub:
        for y in sub:
            for z in sub:
                if lt.meet[x][lt.join[y][z]] != lt.join[lt.meet[x][y]][lt.meet[x][z]]:
                    return False
    return True


# -- Dedekind-MacNeille completion ----------------------------------------


@dataclass(frozen=True)
class CompletionResult:
    """Completion by cuts of a finite poset.

    ``cuts`` lists every cut's lower part as a bitmask, sorted by
    (popcount, value); the completed order is inclusion of lower parts.
    ``embedding[x]`` is the index of the principal cut of x.
    """

    completed: Poset
    embedding: tuple
    added_count: int
    cuts: tuple

    @cached_property
    def embedded_indices(self):
        return frozenset(self.embedding)


def dedekind_macneille(poset) -> CompletionResult:
    """All cuts of a finite poset, as the intersection closure of
    principal downsets (plus the full set), ordered by inclusion.

    A cut's lower part equals the lower bounds of its upper bounds; these
    are exactly the intersections of principal downsets.  Every finite
    lattice is a fixed point: the only cuts are the principal ones.
    """
    if not isinstance(poset, Poset):
        poset = Poset(tuple(tuple(row) for row in poset))
    n = poset.n
    down = [poset.downset_mask(x) for x in range(n)]
    full = (1 << n) - 1
    cuts = {full}
    frontier = list(cuts)
    for d in down:
        if d not in cuts:
            cuts.add(d)
            frontier.append(d)
    while frontier:
        a = frontier.pop()
        for b in list(cuts):
            c = a & b
            if c not in cuts:
                cuts.add(c)
                frontier.append(c)
    ordered = sorted(cuts, key=lambda m: (bin(m).count("1"), m))
    index = {m: i for i, m in enumerate(ordered)}
    k = len(ordered)
    leq = [[(a & ~b) == 0 for b in ordered] for a in ordered]
    embedding = tuple(index[down[x]] for x in range(n))
    names = []
    principal = {index[down[x]]: poset.names[x] for x in range(n)}
    for i in range(k):
        names.append(principal.get(i, f"cut{i}"))
    completed = Poset(tuple(tuple(row) for row in leq), tuple(names))
    return CompletionResult(
        completed=completed,
        embedding=embedding,
        added_count=k - n,
        cuts=tuple(ordered),
    )
