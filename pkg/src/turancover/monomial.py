"""Squarefree monomial ideals over an indexed variable universe.

Monomial supports are int bitmasks over the universe's variable ranks.
Ideals come in three forms:

* explicit: an antichain of minimal generator supports;
* cover: the intersection of variable ideals over a copy family, so a
  monomial is a member iff its support meets every copy;
* implicit: an arbitrary membership predicate plus an optional certified
  lower bound on the initial degree, used to seed the search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import InputError, ScaleGuardError
from .hypergraph import CopyFamily, EdgeRanker, rsets_colex


class VarUniverse:
    """A finite indexed variable set with a fixed rank bijection."""

    def __init__(self, labels: Sequence):
        self.labels = list(labels)
        self.rank = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.rank) != len(self.labels):
            raise InputError("duplicate labels in variable universe")
        self.size = len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, VarUniverse):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(tuple(self.labels))

    @classmethod
    def edge_universe(cls, n: int, r: int) -> "VarUniverse":
        """One variable per r-subset of [n], colex-ranked (matches EdgeRanker)."""
        return cls([frozenset(t) for t in rsets_colex(n, r)])

    def mask(self, items: Iterable) -> int:
        m = 0
        for it in items:
            m |= 1 << self.rank[it]
        return m

    def unmask(self, mask: int) -> list:
        return [self.labels[i] for i in range(self.size) if mask >> i & 1]

    def full_mask(self) -> int:
        return (1 << self.size) - 1


@dataclass(frozen=True)
class SquarefreeMonomial:
    """A squarefree monomial, i.e. a subset of the universe."""

    universe: VarUniverse
    support: int

    @property
    def degree(self) -> int:
        return self.support.bit_count()

    def variables(self) -> list:
        return self.universe.unmask(self.support)

    def divides(self, other: "SquarefreeMonomial | int") -> bool:
        o = other.support if isinstance(other, SquarefreeMonomial) else other
        return self.support & o == self.support


def minimal_supports(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal elements, sorted by (popcount, value)."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


class SquarefreeIdeal:
    """A squarefree monomial ideal in one of three forms (see module docstring)."""

    def __init__(
        self,
        universe: VarUniverse,
        form: str,
        generators: Sequence[int] | None = None,
        copies: Sequence[int] | None = None,
        predicate: Callable[[int], bool] | None = None,
        lower_bound: int | None = None,
    ):
        if form not in ("explicit", "cover", "implicit"):
            raise InputError(f"unknown ideal form {form!r}")
        self.universe = universe
        self.form = form
        self.generators = minimal_supports(generators) if generators is not None else None
        self.copies = list(copies) if copies is not None else None
        self.predicate = predicate
        self.lower_bound = lower_bound
        if form == "explicit" and self.generators is None:
            raise InputError("explicit form needs generators")
        if form == "cover" and self.copies is None:
            raise InputError("cover form needs copies")
        if form == "implicit" and self.predicate is None:
            raise InputError("implicit form needs a membership predicate")

    @classmethod
    def from_generators(cls, universe: VarUniverse, gens: Iterable[int]) -> "SquarefreeIdeal":
        return cls(universe, "explicit", generators=list(gens))

    @classmethod
    def from_copies(cls, universe: VarUniverse, copies: Iterable[int]) -> "SquarefreeIdeal":
        return cls(universe, "cover", copies=list(copies))

    @classmethod
    def from_copy_family(cls, fam: CopyFamily) -> "SquarefreeIdeal":
        universe = VarUniverse.edge_universe(fam.n, fam.r)
        ranker = EdgeRanker(fam.n, fam.r)
        return cls.from_copies(universe, fam.masks(ranker))

    @classmethod
    def from_predicate(
        cls,
        universe: VarUniverse,
        predicate: Callable[[int], bool],
        lower_bound: int | None = None,
    ) -> "SquarefreeIdeal":
        return cls(universe, "implicit", predicate=predicate, lower_bound=lower_bound)

    # -- membership ----------------------------------------------------

    def membership(self, m: SquarefreeMonomial | int) -> bool:
        support = m.support if isinstance(m, SquarefreeMonomial) else m
        if isinstance(m, SquarefreeMonomial) and m.universe is not self.universe:
            if m.universe.labels != self.universe.labels:
                raise InputError("monomial universe does not match ideal universe")
        if self.form == "explicit":
            return any(g & support == g for g in self.generators)
        if self.form == "cover":
            return all(support & c for c in self.copies)
        return self.predicate(support)

    def __contains__(self, m) -> bool:
        return self.membership(m)


# ---------------------------------------------------------------------------
# Alexander duality (minimal transversal enumeration)


def alexander_dual(gens: Sequence[int], nvars: int, cap: int = 1_000_000) -> list[int]:
    """Minimal transversals of the generator supports (classical incremental
    dualization: refine the antichain of minimal partial transversals one
    hyperedge at a time).  Involutive on antichains."""
    gens = minimal_supports(gens)
    if any(g == 0 for g in gens):
        # nothing hits the empty support: the dual of the whole ring is zero
        return []
    transversals = [0]
    for g in gens:
        hit = [t for t in transversals if t & g]
        missed = [t for t in transversals if not (t & g)]
        extended = [t | (1 << b) for t in missed for b in _bits(g)]
        transversals = minimal_supports(hit + extended)
        if len(transversals) > cap:
            raise ScaleGuardError(f"transversal antichain exceeded cap {cap}")
    return transversals


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# intersections


def intersect_variable_ideals(
    universe: VarUniverse, member_gens: Sequence[Sequence[int]]
) -> SquarefreeIdeal:
    """Intersection of ideals, each given by an explicit generator list, as an
    implicit-form ideal whose predicate is membership in every member."""
    members = [minimal_supports(g) for g in member_gens]

    def predicate(support: int) -> bool:
        return all(any(g & support == g for g in gens) for gens in members)

    return SquarefreeIdeal.from_predicate(universe, predicate)


def explicit_generators(ideal: SquarefreeIdeal, cap: int = 22) -> list[int]:
    """Minimal generators of any-form ideal by scanning all supports (desk scale)."""
    nv = ideal.universe.size
    if nv > cap:
        raise ScaleGuardError(f"universe size {nv} exceeds expansion cap {cap}")
    members = [m for m in range(1 << nv) if ideal.membership(m)]
    return minimal_supports(members)


# ---------------------------------------------------------------------------
# exact minimum hitting set


def min_hitting_set(
    copies: Sequence[int], nvars: int, cap_vars: int = 64, cap_copies: int = 5000
) -> tuple[int, int]:
    """Exact minimum-cardinality transversal of the copy masks.

    Returns (size, witness mask); the witness is the lexicographically
    smallest optimal bitmask.  Branch-and-bound: branch on the elements of an
    uncovered copy of minimum remaining size, lower-bound by greedily packing
    pairwise-disjoint uncovered copies.  Empty family -> (0, 0).
    """
    if nvars > cap_vars:
        raise ScaleGuardError(f"{nvars} variables exceeds cap {cap_vars}")
    if len(copies) > cap_copies:
        raise ScaleGuardError(f"{len(copies)} copies exceeds cap {cap_copies}")
    copies = list(copies)
    if any(c == 0 for c in copies):
        raise InputError("empty copy cannot be hit")
    if not copies:
        return 0, 0

    best_size = nvars + 1
    best_mask = 0

    def lower_bound(uncovered: list[int]) -> int:
        used = 0
        packed = 0
        for c in sorted(uncovered, key=int.bit_count):
            if not (c & used):
                packed += 1
                used |= c
        return packed

    def dfs(chosen: int, size: int, uncovered: list[int]) -> None:
        nonlocal best_size, best_mask
        if not uncovered:
            if size < best_size or (size == best_size and chosen < best_mask):
                best_size, best_mask = size, chosen
            return
        if size + lower_bound(uncovered) > best_size:
            return
        pivot = min(uncovered, key=lambda c: (c.bit_count(), c))
        for b in _bits(pivot):
            bit = 1 << b
            rest = [c for c in uncovered if not (c & bit)]
            dfs(chosen | bit, size + 1, rest)

    dfs(0, 0, minimal_supports(copies))
    return best_size, best_mask


# ---------------------------------------------------------------------------
# initial degree


def initial_degree(ideal: SquarefreeIdeal, cap_vars: int = 64) -> int | float:
    """alpha(I): minimum support size over monomials in I.

    Explicit: min generator degree (no generators -> math.inf, the zero
    ideal).  Cover: exact minimum hitting set.  Implicit: iterative
    deepening over supports using the predicate, starting at the registered
    lower bound.
    """
    nv = ideal.universe.size
    if ideal.form == "explicit":
        if not ideal.generators:
            return math.inf
        return min(g.bit_count() for g in ideal.generators)
    if ideal.form == "cover":
        if not ideal.copies:
            return 0
        size, _ = min_hitting_set(ideal.copies, nv, cap_vars=cap_vars)
        return size
    start = ideal.lower_bound or 0
    for size in range(start, nv + 1):
        for combo in itertools.combinations(range(nv), size):
            support = 0
            for b in combo:
                support |= 1 << b
            if ideal.predicate(support):
                return size
    return math.inf


__all__ = [
    "VarUniverse",
    "SquarefreeMonomial",
    "SquarefreeIdeal",
    "minimal_supports",
    "alexander_dual",
    "intersect_variable_ideals",
    "explicit_generators",
    "min_hitting_set",
    "initial_degree",
]
