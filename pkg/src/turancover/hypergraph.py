"""r-uniform hypergraphs on [n], Turán constructions, and exact search oracles.

Edges are r-element frozensets of 1-based vertices.  The search kernels
translate edge sets to bitmasks over the C(n, r) potential edges using a
fixed colexicographic rank function, so subset tests are single AND ops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import InputError, ScaleGuardError

Edge = frozenset


# ---------------------------------------------------------------------------
# ranking of r-sets


def rsets_colex(n: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of [n] as sorted tuples, in colexicographic order."""
    return sorted(itertools.combinations(range(1, n + 1), r), key=lambda t: t[::-1])


class EdgeRanker:
    """Fixed bijection between r-subsets of [n] and bit positions [0, C(n,r))."""

    def __init__(self, n: int, r: int):
        self.n = n
        self.r = r
        self.sets = rsets_colex(n, r)
        self.rank = {frozenset(t): i for i, t in enumerate(self.sets)}
        self.count = len(self.sets)

    def mask(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.rank[frozenset(e)]
        return m

    def unmask(self, mask: int) -> set[Edge]:
        out = set()
        i = 0
        while mask:
            if mask & 1:
                out.add(frozenset(self.sets[i]))
            mask >>= 1
            i += 1
        return out


# ---------------------------------------------------------------------------
# core types


class RGraph:
    """An r-uniform hypergraph on vertex set [n], identified with its edge set."""

    __slots__ = ("n", "r", "edges")

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1 or r < 1:
            raise InputError(f"need n, r >= 1, got n={n}, r={r}")
        es = set()
        for e in edges:
            fe = frozenset(e)
            if len(fe) != r:
                raise InputError(f"edge {sorted(fe)} does not have {r} distinct vertices")
            if not all(1 <= v <= n for v in fe):
                raise InputError(f"edge {sorted(fe)} has vertices outside [1, {n}]")
            es.add(fe)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", frozenset(es))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("RGraph is immutable")

    @classmethod
    def complete(cls, n: int, r: int) -> "RGraph":
        return cls(n, r, itertools.combinations(range(1, n + 1), r))

    @classmethod
    def empty(cls, n: int, r: int) -> "RGraph":
        return cls(n, r)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RGraph):
            return NotImplemented
        return (self.n, self.r, self.edges) == (other.n, other.r, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        es = sorted(tuple(sorted(e)) for e in self.edges)
        return f"RGraph(n={self.n}, r={self.r}, edges={es})"

    def complement(self) -> "RGraph":
        all_sets = set(map(frozenset, itertools.combinations(range(1, self.n + 1), self.r)))
        return RGraph(self.n, self.r, all_sets - self.edges)

    def codegree(self, a: int, b: int) -> int:
        """Number of edges containing both a and b."""
        if a == b:
            raise InputError("codegree needs two distinct vertices")
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise InputError(f"vertices ({a}, {b}) out of range [1, {self.n}]")
        return sum(1 for e in self.edges if a in e and b in e)

    def edge_list(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(e)) for e in self.edges))


@dataclass(frozen=True)
class CopyFamily:
    """Explicit list of forbidden (or target) copies inside the complete r-graph on [n].

    Each copy is a nonempty frozenset of edges; the list is deduplicated.
    """

    n: int
    r: int
    copies: tuple[frozenset, ...]

    def __post_init__(self):
        seen = set()
        for c in self.copies:
            if not c:
                raise InputError("empty copy in CopyFamily")
            if c in seen:
                raise InputError("duplicate copy in CopyFamily")
            seen.add(c)

    def __len__(self) -> int:
        return len(self.copies)

    def masks(self, ranker: EdgeRanker) -> list[int]:
        return [ranker.mask(c) for c in self.copies]


@dataclass(frozen=True)
class CoreFamily:
    """Symbolic descriptor of the core-pair family: r-graphs with at most C(ell, 2)
    edges containing an ell-vertex core whose every pair lies in some edge."""

    ell: int
    r: int

    def __post_init__(self):
        if self.ell < 2 or self.r < 2:
            raise InputError("core-pair family needs ell, r >= 2")


FamilySpec = RGraph | CoreFamily


# ---------------------------------------------------------------------------
# Turán constructions


def balanced_partition(n: int, q: int) -> list[list[int]]:
    """Partition [n] into q parts in index order, larger parts first."""
    if n < 0 or q < 1:
        raise InputError(f"bad partition parameters n={n}, q={q}")
    base, extra = divmod(n, q)
    parts = []
    v = 1
    for i in range(q):
        size = base + (1 if i < extra else 0)
        parts.append(list(range(v, v + size)))
        v += size
    return parts


def turan_construct(n: int, q: int, r: int) -> RGraph:
    """The complete balanced q-partite r-graph T_r(n, q)."""
    parts = balanced_partition(n, q)
    part_of = {}
    for i, P in enumerate(parts):
        for v in P:
            part_of[v] = i
    edges = [
        e
        for e in itertools.combinations(range(1, n + 1), r)
        if len({part_of[v] for v in e}) == r
    ]
    return RGraph(n, r, edges)


def turan_count(n: int, q: int, r: int) -> int:
    """t_r(n, q): sum over r-subsets S of classes of the product of their sizes."""
    if r > q:
        return 0
    sizes = [len(P) for P in balanced_partition(n, q)]
    total = 0
    for S in itertools.combinations(range(q), r):
        prod = 1
        for i in S:
            prod *= sizes[i]
        total += prod
    return total


# ---------------------------------------------------------------------------
# core-pair family membership


def is_member_core_family(H: RGraph, ell: int) -> bool:
    """Whether H belongs to the core-pair family with parameters (ell, H.r):
    at most C(ell, 2) edges and some ell-set with every pair covered by an edge."""
    if H.r < 2 or ell < 2:
        raise InputError("need r >= 2 and ell >= 2")
    if len(H.edges) > comb(ell, 2) or not H.edges:
        return False
    vertices = sorted(set().union(*H.edges))
    if len(vertices) < ell:
        return False
    for S in itertools.combinations(vertices, ell):
        if all(
            any(a in e and b in e for e in H.edges)
            for a, b in itertools.combinations(S, 2)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# copy enumeration


def _minimal_antichain(sets: Iterable[frozenset]) -> list[frozenset]:
    ordered = sorted(set(sets), key=len)
    kept: list[frozenset] = []
    for s in ordered:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def core_family_free(G: RGraph, ell: int) -> bool:
    """Whether G contains no member of the core-pair family (ell, G.r).

    G contains a member iff some ell-set has every pair in positive codegree:
    picking one witnessing edge per pair yields a member with <= C(ell, 2) edges.
    """
    covered = set()
    for e in G.edges:
        covered.update(itertools.combinations(sorted(e), 2))
    vertices = range(1, G.n + 1)
    for S in itertools.combinations(vertices, ell):
        if all(p in covered for p in itertools.combinations(S, 2)):
            return False
    return True


def enumerate_forbidden_copies(
    spec: FamilySpec, n: int, cap: int = 2_000_000
) -> CopyFamily:
    """All copies of `spec` inside the complete r-graph on [n].

    For an explicit RGraph F, copies are the edge-set images of embeddings of
    F into [n].  For the symbolic core-pair family, only inclusion-minimal
    copies are emitted: minimal edge systems covering all pairs of some
    ell-core.  Hitting all minimal copies is equivalent to hitting all copies.
    """
    if isinstance(spec, RGraph):
        F = spec
        if F.n > n:
            return CopyFamily(n, F.r, ())
        verts = sorted(set().union(*F.edges)) if F.edges else []
        if not verts:
            raise InputError("forbidden graph has no edges")
        copies = set()
        count_guard = comb(n, len(verts)) * len(verts) ** len(verts)
        if count_guard > cap:
            raise ScaleGuardError(f"projected embedding count {count_guard} exceeds cap {cap}")
        for image in itertools.permutations(range(1, n + 1), len(verts)):
            phi = dict(zip(verts, image))
            copies.add(frozenset(frozenset(phi[v] for v in e) for e in F.edges))
        return CopyFamily(n, F.r, tuple(sorted(copies, key=_copy_key)))

    ell, r = spec.ell, spec.r
    if n < max(ell, r):
        return CopyFamily(n, r, ())
    pair_count = comb(ell, 2)
    choices_per_pair = comb(n - 2, r - 2)
    projected = comb(n, ell) * choices_per_pair**pair_count
    if projected > cap:
        raise ScaleGuardError(f"projected copy count {projected} exceeds cap {cap}")
    ranker = EdgeRanker(n, r)
    all_minimal: set[int] = set()
    for core in itertools.combinations(range(1, n + 1), ell):
        pairs = list(itertools.combinations(core, 2))
        per_pair = [
            [
                ranker.mask([pair + rest])
                for rest in itertools.combinations(
                    [v for v in range(1, n + 1) if v not in pair], r - 2
                )
            ]
            for pair in pairs
        ]
        systems = {0}
        for options in per_pair:
            systems = {s | o for s in systems for o in options}
        all_minimal.update(_minimal_masks(systems))
    minimal_masks = _minimal_masks(all_minimal)
    copies = [frozenset(ranker.unmask(m)) for m in minimal_masks]
    return CopyFamily(n, r, tuple(sorted(copies, key=_copy_key)))


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=int.bit_count)
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _copy_key(copy: frozenset) -> tuple:
    return tuple(sorted(tuple(sorted(e)) for e in copy))


def count_copies(G: RGraph, fam: CopyFamily) -> int:
    """Number of copies entirely contained in G."""
    if (G.n, G.r) != (fam.n, fam.r):
        raise InputError("graph and copy family have incompatible (n, r)")
    return sum(1 for c in fam.copies if c <= G.edges)


# ---------------------------------------------------------------------------
# brute-force extremal oracles


def _family_copies(n: int, spec: FamilySpec) -> tuple[CopyFamily, int]:
    fam = enumerate_forbidden_copies(spec, n)
    r = fam.r
    return fam, r


def brute_force_ex(
    n: int, spec: FamilySpec, cap_edges: int = 30
) -> tuple[int, RGraph]:
    """Exact ex(n, spec) by branch-and-bound over subgraphs of the complete r-graph.

    Deterministic: among optimal witnesses, the one with lexicographically
    smallest edge bitmask (colex edge ranks) is returned.
    """
    if isinstance(spec, CoreFamily):
        return _brute_force_ex_core_family(n, spec, cap_edges)
    fam, r = _family_copies(n, spec)
    ranker = EdgeRanker(n, r)
    m = ranker.count
    if m > cap_edges:
        raise ScaleGuardError(f"{m} potential edges exceeds cap {cap_edges}")
    copy_masks = fam.masks(ranker)
    if not copy_masks:
        return m, RGraph.complete(n, r)

    # copies indexed by their highest-ranked edge: a copy can only become
    # fully chosen when its last edge is added
    by_last: list[list[int]] = [[] for _ in range(m)]
    for cm in copy_masks:
        by_last[cm.bit_length() - 1].append(cm)

    best_size = -1
    best_mask = 0

    def dfs(idx: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size + (m - idx) < best_size:
            return
        if idx == m:
            if size > best_size or (size == best_size and chosen < best_mask):
                best_size, best_mask = size, chosen
            return
        # include edge idx if it completes no forbidden copy
        cand = chosen | (1 << idx)
        if all((cm & cand) != cm for cm in by_last[idx]):
            dfs(idx + 1, cand, size + 1)
        dfs(idx + 1, chosen, size)

    dfs(0, 0, 0)
    witness = RGraph(n, r, ranker.unmask(best_mask))
    return best_size, witness


def _brute_force_ex_core_family(
    n: int, spec: CoreFamily, cap_edges: int
) -> tuple[int, RGraph]:
    """Core-pair family oracle using the positive-codegree freeness predicate.

    A graph contains a member iff some ell-set has all pairs in positive
    codegree, so adding an edge can only create a violation through the pairs
    it newly covers.
    """
    ell, r = spec.ell, spec.r
    ranker = EdgeRanker(n, r)
    m = ranker.count
    if m > cap_edges:
        raise ScaleGuardError(f"{m} potential edges exceeds cap {cap_edges}")
    if n < ell:
        return m, RGraph.complete(n, r)

    edge_pairs = [
        list(itertools.combinations(t, 2)) for t in ranker.sets
    ]
    others = list(range(1, n + 1))
    codeg: dict[tuple[int, int], int] = {}

    def violates(new_pairs: list[tuple[int, int]]) -> bool:
        for a, b in new_pairs:
            rest = [v for v in others if v not in (a, b)]
            for extra in itertools.combinations(rest, ell - 2):
                S = sorted((a, b) + extra)
                if all(
                    codeg.get(p, 0) > 0 for p in itertools.combinations(S, 2)
                ):
                    return True
        return False

    best_size = -1
    best_mask = 0

    def dfs(idx: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size + (m - idx) < best_size:
            return
        if idx == m:
            if size > best_size or (size == best_size and chosen < best_mask):
                best_size, best_mask = size, chosen
            return
        new_pairs = [p for p in edge_pairs[idx] if codeg.get(p, 0) == 0]
        for p in edge_pairs[idx]:
            codeg[p] = codeg.get(p, 0) + 1
        if not violates(new_pairs):
            dfs(idx + 1, chosen | (1 << idx), size + 1)
        for p in edge_pairs[idx]:
            codeg[p] -= 1
        dfs(idx + 1, chosen, size)

    dfs(0, 0, 0)
    witness = RGraph(n, r, ranker.unmask(best_mask))
    return best_size, witness


def brute_force_gen_ex(
    n: int, target_spec: FamilySpec, forbid_spec: FamilySpec, cap_edges: int = 30
) -> tuple[int, RGraph]:
    """Exact generalized Turán number ex(n, T, F): max number of target copies
    in a forbid-free graph, by branch-and-bound over subgraphs."""
    forb, r = _family_copies(n, forbid_spec)
    targ = enumerate_forbidden_copies(target_spec, n)
    if targ.r != r:
        raise InputError("target and forbidden families must share uniformity")
    ranker = EdgeRanker(n, r)
    m = ranker.count
    if m > cap_edges:
        raise ScaleGuardError(f"{m} potential edges exceeds cap {cap_edges}")
    forb_masks = forb.masks(ranker)
    targ_masks = targ.masks(ranker)

    forb_by_last: list[list[int]] = [[] for _ in range(m)]
    for cm in forb_masks:
        forb_by_last[cm.bit_length() - 1].append(cm)
    # target copies grouped by last edge: count completed copies incrementally
    targ_by_last: list[list[int]] = [[] for _ in range(m)]
    for cm in targ_masks:
        targ_by_last[cm.bit_length() - 1].append(cm)

    best_count = -1
    best_mask = 0

    def dfs(idx: int, chosen: int, excluded: int, done: int, alive: int) -> None:
        # done: target copies already fully inside chosen
        # alive: upper bound = done + copies not yet touching an excluded edge
        nonlocal best_count, best_mask
        if alive < best_count:
            return
        if idx == m:
            if done > best_count or (done == best_count and chosen < best_mask):
                best_count, best_mask = done, chosen
            return
        bit = 1 << idx
        cand = chosen | bit
        if all((cm & cand) != cm for cm in forb_by_last[idx]):
            gained = sum(1 for cm in targ_by_last[idx] if (cm & cand) == cm)
            dfs(idx + 1, cand, excluded, done + gained, alive)
        lost = sum(
            1
            for cm in targ_masks
            if (cm & bit) and not (cm & excluded)
        )
        dfs(idx + 1, chosen, excluded | bit, done, alive - lost)

    dfs(0, 0, 0, 0, len(targ_masks))
    witness = RGraph(n, r, ranker.unmask(best_mask))
    return best_count, witness


# ---------------------------------------------------------------------------
# named builtin specs and file ingestion


def builtin_spec(name: str) -> FamilySpec:
    """Named specs: K2..K5, P3, C4, and K_ell_r(L,R) for the core-pair family."""
    name = name.strip()
    cliques = {f"K{s}": s for s in range(2, 10)}
    if name in cliques:
        s = cliques[name]
        return RGraph.complete(s, 2)
    if name == "P3":
        return RGraph(3, 2, [(1, 2), (2, 3)])
    if name == "C4":
        return RGraph(4, 2, [(1, 2), (2, 3), (3, 4), (1, 4)])
    if name.startswith("K_ell_r(") and name.endswith(")"):
        inner = name[len("K_ell_r(") : -1]
        try:
            ell, r = (int(x) for x in inner.split(","))
        except ValueError as exc:
            raise InputError(f"cannot parse core-family spec {name!r}") from exc
        return CoreFamily(ell, r)
    raise InputError(f"unknown builtin spec {name!r}")


def parse_hypergraph(text: str) -> RGraph:
    """Parse the hypergraph text format: line 1 is `n r`; each following
    non-comment line lists r vertex indices; `#` starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError(f"header must be 'n r', got {lines[0]!r}")
    n, r = int(head[0]), int(head[1])
    edges = []
    for line in lines[1:]:
        vs = [int(x) for x in line.split()]
        if len(vs) != r:
            raise InputError(f"edge line {line!r} does not list {r} vertices")
        edges.append(vs)
    return RGraph(n, r, edges)


__all__ = [
    "RGraph",
    "CopyFamily",
    "CoreFamily",
    "EdgeRanker",
    "rsets_colex",
    "balanced_partition",
    "turan_construct",
    "turan_count",
    "is_member_core_family",
    "core_family_free",
    "enumerate_forbidden_copies",
    "count_copies",
    "brute_force_ex",
    "brute_force_gen_ex",
    "builtin_spec",
    "parse_hypergraph",
]
