"""Finite effect algebras given by an explicit partial-sum table.

An effect algebra is a structure (E; +, 0, 1) where + is a partial
commutative binary operation with unique orthosupplements and 1+x defined
only for x = 0.  Here E = {0, 1, ..., n-1}, element 0 is always the
algebraic zero, and the partial operation is a dense n x n table with -1
marking undefined cells.

Everything is immutable after construction; all derived data (axiom
report, order, complements, atoms) is computed lazily and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

UNDEFINED = -1

AXIOM_COMMUTATIVE = "Ei"
AXIOM_ASSOCIATIVE = "Eii"
AXIOM_ORTHOSUPPLEMENT = "Eiii"
AXIOM_ZERO_ONE_LAW = "Eiv"


class EffectAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class NotAnEffectAlgebra(EffectAlgebraError):
    """An operation requiring a valid effect algebra got an invalid table."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"table violates effect algebra axioms: {report.violations}")


class ZeroHasNoOrder(EffectAlgebraError):
    """ord(x) is requested for x = 0, where k*0 never stops being defined."""


class InternalInconsistency(EffectAlgebraError):
    """Two supposedly equivalent computation routes disagreed.

    This signals a bug in this package, never bad user input.
    """


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the four effect algebra axioms on a table.

    ``violations`` holds one entry per violated axiom, each carrying the
    lexicographically smallest witness tuple, so reports are deterministic.
    """

    passed: bool
    violations: tuple[AxiomViolation, ...]

    def __post_init__(self):
        assert self.passed == (not self.violations)


def _default_names(n, one):
    names = [f"e{i}" for i in range(n)]
    names[0] = "0"
    names[one] = "1"
    return tuple(names)


class EffectAlgebra:
    """A finite partial algebra candidate, structurally checked on creation.

    Structural requirements (ValueError if broken): at least two elements,
    zero (= element 0) distinct from one, a symmetric table with in-range
    entries, and 0 + x = x for every x.  The actual axioms -- associativity,
    unique orthosupplements, the zero-one law -- are data, reported by
    :attr:`axiom_report` rather than raised.
    """

    def __init__(self, table, one, names=None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n < 2:
            raise ValueError("an effect algebra needs at least the two elements 0 and 1")
        if not all(len(row) == n for row in table):
            raise ValueError("sum table must be square")
        if not (0 < one < n):
            raise ValueError(f"one must be an element index distinct from zero, got {one}")
        for i in range(n):
            for j in range(n):
                v = table[i][j]
                if v != UNDEFINED and not (0 <= v < n):
                    raise ValueError(f"table[{i}][{j}] = {v} out of range")
                if v != table[j][i]:
                    raise ValueError(f"table not symmetric at ({i},{j})")
        for i in range(n):
            if table[0][i] != i:
                raise ValueError(f"0 + {i} must equal {i}, got {table[0][i]}")
        self.n = n
        self.one = one
        self.table = table
        if names is None:
            names = _default_names(n, one)
        else:
            names = tuple(names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be distinct, one per element")
        self.names = names

    zero = 0

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, EffectAlgebra):
            return NotImplemented
        return self.one == other.one and self.table == other.table

    def __hash__(self):
        return hash((self.one, self.table))

    def __repr__(self):
        return f"EffectAlgebra(n={self.n}, one={self.one})"

    def elements(self):
        return range(self.n)

    def sum(self, i, j):
        """i + j as an element index, or None when undefined."""
        v = self.table[i][j]
        return None if v == UNDEFINED else v

    def defined(self, i, j):
        return self.table[i][j] != UNDEFINED

    # -- axioms -----------------------------------------------------------

    @cached_property
    def axiom_report(self) -> AxiomReport:
        """Check the four defining axioms, collecting minimal witnesses.

        Ei (commutativity) cannot fail for symmetrically stored tables but
        is rechecked anyway so the report genuinely covers all four axioms.
        """
        n, t = self.n, self.table
        violations = []

        witness = next(
            ((x, y) for x in range(n) for y in range(n) if t[x][y] != t[y][x]),
            None,
        )
        if witness is not None:
            violations.append(AxiomViolation(AXIOM_COMMUTATIVE, witness))

        witness = None
        for x in range(n):
            if witness is not None:
                break
            for y in range(n):
                if witness is not None:
                    break
                xy = t[x][y]
                for z in range(n):
                    yz = t[y][z]
                    lhs = t[xy][z] if xy != UNDEFINED else UNDEFINED
                    rhs = t[x][yz] if yz != UNDEFINED else UNDEFINED
                    if lhs != rhs:
                        witness = (x, y, z)
                        break
        if witness is not None:
            violations.append(AxiomViolation(AXIOM_ASSOCIATIVE, witness))

        witness = None
        for x in range(n):
            supplements = [y for y in range(n) if t[x][y] == self.one]
            if len(supplements) != 1:
                witness = (x,)
                break
        if witness is not None:
            violations.append(AxiomViolation(AXIOM_ORTHOSUPPLEMENT, witness))

        witness = next(
            ((x,) for x in range(n) if x != 0 and t[self.one][x] != UNDEFINED),
            None,
        )
        if witness is not None:
            violations.append(AxiomViolation(AXIOM_ZERO_ONE_LAW, witness))

        violations.sort(key=lambda v: v.axiom)
        return AxiomReport(passed=not violations, violations=tuple(violations))

    @property
    def is_valid(self):
        return self.axiom_report.passed

    def require_valid(self):
        if not self.axiom_report.passed:
            raise NotAnEffectAlgebra(self.axiom_report)

    # -- derived order ----------------------------------------------------

    @cached_property
    def leq(self):
        """Boolean matrix of the induced order: x <= y iff x + z = y for some z.

        Requires a valid table.  Cancellation (x + z = x + w implies z = w)
        is a consequence of the axioms; it is re-verified here because the
        subtraction map below silently assumes it.
        """
        self.require_valid()
        n, t = self.n, self.table
        rel = [[False] * n for _ in range(n)]
        for x in range(n):
            row = t[x]
            seen = {}
            for z in range(n):
                v = row[z]
                if v == UNDEFINED:
                    continue
                if v in seen and seen[v] != z:
                    raise InternalInconsistency(
                        f"cancellation broken: {x}+{seen[v]} = {x}+{z} = {v}"
                    )
                seen[v] = z
                rel[x][v] = True
        return tuple(tuple(row) for row in rel)

    @cached_property
    def complement(self):
        """x -> x', the unique orthosupplement with x + x' = 1."""
        self.require_valid()
        n, t = self.n, self.table
        comp = [None] * n
        for x in range(n):
            for y in range(n):
                if t[x][y] == self.one:
                    comp[x] = y
                    break
        return tuple(comp)

    def ominus(self, y, x):
        """y - x, defined exactly when x <= y; then x + (y - x) = y."""
        if not self.leq[x][y]:
            return None
        row = self.table[x]
        for z in range(self.n):
            if row[z] == y:
                return z
        raise InternalInconsistency(f"leq says {x} <= {y} but no z with {x}+z = {y}")

    def ord_of(self, x):
        """Largest k such that the k-fold sum x + ... + x is defined.

        Finite tables are automatically Archimedean: while defined, the
        partial sums strictly increase, so the loop stops within n steps.
        """
        self.require_valid()
        if x == 0:
            raise ZeroHasNoOrder("ord(0) is not defined")
        k, acc = 1, x
        while True:
            nxt = self.table[acc][x]
            if nxt == UNDEFINED:
                return k
            acc = nxt
            k += 1
            if k > self.n:
                raise InternalInconsistency(f"ord({x}) exceeded algebra size")

    @cached_property
    def atoms(self):
        """Minimal nonzero elements, ascending."""
        leq = self.leq
        n = self.n
        out = []
        for x in range(1, n):
            if not any(y != 0 and y != x and leq[y][x] for y in range(n)):
                out.append(x)
        return tuple(out)

    def orthogonal_sum(self, xs):
        """Left fold of + over xs; None as soon as a partial sum is undefined.

        The axioms make the result independent of the order of xs, and the
        empty sum is 0.
        """
        self.require_valid()
        acc = 0
        for x in xs:
            v = self.table[acc][x]
            if v == UNDEFINED:
                return None
            acc = v
        return acc

    # -- convenience ------------------------------------------------------

    @cached_property
    def lattice(self):
        """Meet/join tables of the induced order (import deferred: lattice
        builds on core)."""
        from .lattice import lattice_tables

        return lattice_tables(self.leq)

    @cached_property
    def downsets(self):
        """downsets[x] = frozenset of all y <= x."""
        leq = self.leq
        n = self.n
        return tuple(frozenset(y for y in range(n) if leq[y][x]) for x in range(n))

    @cached_property
    def ord_profile(self):
        """Multiset (sorted tuple) of ord(x) over nonzero x; an isomorphism invariant."""
        return tuple(sorted(self.ord_of(x) for x in range(1, self.n)))

    def relabel(self, perm):
        """Image table under the bijection old -> new given by perm (perm[0] must be 0)."""
        if perm[0] != 0:
            raise ValueError("relabelings must fix the zero element")
        n = self.n
        new = [[UNDEFINED] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = self.table[i][j]
                if v != UNDEFINED:
                    new[perm[i]][perm[j]] = perm[v]
        names = [None] * n
        for i in range(n):
            names[perm[i]] = self.names[i]
        return EffectAlgebra(new, one=perm[self.one], names=names)


def validate_axioms(t: EffectAlgebra) -> AxiomReport:
    return t.axiom_report


def from_sums(n, one, sums, names=None):
    """Build a table from a collection of (i, j, k) triples meaning i + j = k.

    The zero row 0 + x = x is inserted automatically and every triple is
    symmetrized.  Contradictory triples raise ValueError.
    """
    table = [[UNDEFINED] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    for i, j, k in sums:
        for a, b in ((i, j), (j, i)):
            if table[a][b] not in (UNDEFINED, k):
                raise ValueError(f"contradictory sums: {a}+{b} = {table[a][b]} and {k}")
            table[a][b] = k
    return EffectAlgebra(table, one, names=names)


def all_relabelings(algebra):
    """All images of the table under bijections fixing 0 (test helper; (n-1)! of them)."""
    n = algebra.n
    for rest in permutations(range(1, n)):
        yield algebra.relabel((0, *rest))
