"""The cover-ideal dictionary for ordinary and generalized Turán numbers.

Ordinary: the initial degree of the cover ideal of the forbidden copies is
C(n, r) minus the extremal number, with minimum hitting sets complementing
extremal witnesses.  Generalized (graphs only): the objective becomes the
number of target-copy monomials surviving a missing-edge quotient, and the
optimum is |targets| minus the minimum number of killed target copies over
monomials of the cover ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import ClaimCheckError, InputError, ScaleGuardError
from .hypergraph import (
    CopyFamily,
    CoreFamily,
    EdgeRanker,
    FamilySpec,
    RGraph,
    core_family_free,
    count_copies,
    enumerate_forbidden_copies,
)
from .monomial import SquarefreeIdeal, VarUniverse, min_hitting_set
from .squarezero import SquareZeroQuotient


@dataclass(frozen=True)
class CoverInstance:
    """An edge-variable cover-ideal instance: forbidden copies plus an
    optional target-copy family for the generalized problem."""

    n: int
    r: int
    forbidden: CopyFamily
    target: CopyFamily | None = None

    def __post_init__(self):
        if (self.forbidden.n, self.forbidden.r) != (self.n, self.r):
            raise InputError("forbidden family has incompatible (n, r)")
        if self.target is not None and (self.target.n, self.target.r) != (self.n, self.r):
            raise InputError("target family has incompatible (n, r)")

    def universe(self) -> VarUniverse:
        return VarUniverse.edge_universe(self.n, self.r)

    def ranker(self) -> EdgeRanker:
        return EdgeRanker(self.n, self.r)


def make_instance(
    n: int, forbid_spec: FamilySpec, target_spec: FamilySpec | None = None
) -> CoverInstance:
    forbidden = enumerate_forbidden_copies(forbid_spec, n)
    target = enumerate_forbidden_copies(target_spec, n) if target_spec is not None else None
    if target is not None and target.r != forbidden.r:
        raise InputError("target and forbidden families must share uniformity")
    return CoverInstance(n, forbidden.r, forbidden, target)


def cover_ideal(inst: CoverInstance) -> SquarefreeIdeal:
    """Cover-form ideal: a monomial is a member iff its support meets every
    forbidden copy.  An empty forbidden family gives the whole ring."""
    return SquarefreeIdeal.from_copy_family(inst.forbidden)


def _is_free(G: RGraph, spec: FamilySpec, fam: CopyFamily) -> bool:
    if isinstance(spec, CoreFamily):
        return core_family_free(G, spec.ell)
    return count_copies(G, fam) == 0


def ex_via_cover(n: int, spec: FamilySpec) -> tuple[int, RGraph]:
    """ex(n, spec) = C(n, r) - alpha(cover ideal), witnessed by the complement
    of a minimum hitting set of the forbidden copies."""
    fam = enumerate_forbidden_copies(spec, n)
    ranker = EdgeRanker(fam.n, fam.r)
    total = ranker.count
    size, witness_mask = min_hitting_set(fam.masks(ranker), total)
    value = total - size
    complement_mask = ((1 << total) - 1) ^ witness_mask
    witness = RGraph(n, fam.r, ranker.unmask(complement_mask))
    if not _is_free(witness, spec, fam):
        raise ClaimCheckError("hitting-set complement is not forbidden-free")
    return value, witness


# ---------------------------------------------------------------------------
# generalized Turán


def quotient_rank(M: int, target_masks: list[int]) -> int:
    """Number of target copies disjoint from the support M (copies whose
    monomial survives the quotient killing the variables of M)."""
    return sum(1 for t in target_masks if not (t & M))


def killed_count(M: int, target_masks: list[int]) -> int:
    return sum(1 for t in target_masks if t & M)


def alpha_target(inst: CoverInstance) -> tuple[int, int]:
    """Minimum number of target copies meeting M, over supports M hitting
    every forbidden copy.  Returns (minimum, witness support mask).

    Branch-and-bound over minimal hitting sets: branch on the elements of an
    uncovered forbidden copy of minimum remaining size; the killed count is
    monotone in M, so it prunes directly against the incumbent.
    """
    if inst.target is None:
        raise InputError("generalized instance needs a target family")
    ranker = inst.ranker()
    forb = inst.forbidden.masks(ranker)
    targ = inst.target.masks(ranker)
    if not forb:
        return 0, 0

    best = len(targ) + 1
    best_mask = 0

    def dfs(chosen: int, banned: int, uncovered: list[int], killed: int) -> None:
        nonlocal best, best_mask
        if killed > best:
            return
        if not uncovered:
            if killed < best or (killed == best and chosen < best_mask):
                best, best_mask = killed, chosen
            return
        pivot = min(uncovered, key=lambda c: ((c & ~banned).bit_count(), c))
        avail = pivot & ~banned
        local_ban = banned
        while avail:
            low = avail & -avail
            avail ^= low
            bit = low
            extra = sum(
                1 for t in targ if (t & bit) and not (t & chosen)
            )
            rest = [c for c in uncovered if not (c & bit)]
            dfs(chosen | bit, local_ban, rest, killed + extra)
            local_ban |= bit
        return

    dfs(0, 0, forb, 0)
    if best > len(targ):
        raise ClaimCheckError("no hitting set found for a nonempty forbidden family")
    return best, best_mask


def gen_ex_via_cover(n: int, target_spec: FamilySpec, forbid_spec: FamilySpec) -> int:
    """ex(n, T, F) = |target copies| - alpha_T(cover ideal)."""
    inst = make_instance(n, forbid_spec, target_spec)
    alpha, _ = alpha_target(inst)
    return len(inst.target) - alpha


def vertex_quotient_of_cover(M: int, n: int) -> SquareZeroQuotient:
    """Read a support over the edge variables of K_n as a kill graph on [n]:
    a target clique survives M iff its vertex set is standard here."""
    universe = VarUniverse.edge_universe(n, 2)
    kill = [tuple(sorted(e)) for e in universe.unmask(M)]
    return SquareZeroQuotient(n, kill)


__all__ = [
    "CoverInstance",
    "make_instance",
    "cover_ideal",
    "ex_via_cover",
    "quotient_rank",
    "killed_count",
    "alpha_target",
    "gen_ex_via_cover",
    "vertex_quotient_of_cover",
]
