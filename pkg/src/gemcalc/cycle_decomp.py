"""Hamiltonian-cycle machinery on the complete graph K_n.

Labelling the vertices of K_n by 0..n-1 identifies each Hamiltonian cycle
with a canonical cyclic permutation, so the d!/2 permutations of a d+1
color set double as the Hamiltonian cycles of K_{d+1}.

Two partition shapes are produced:

* odd n: classes of (n-1)/2 pairwise edge-disjoint cycles, each class an
  exact decomposition of E(K_n), and (n-2)! classes covering every cycle
  once (realized for n in {3, 5, 7});
* even n: classes of n-1 cycles in which every edge of K_n appears exactly
  twice, and (n-2)!/2 classes covering every cycle once (realized for
  n in {4, 6}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .core import GemError
from .perms import CyclicPerm, canonical_perm, cycle_pairs, cyclic_permutations

HamCycle = CyclicPerm

__all__ = [
    "DecompositionClass",
    "HamCycle",
    "PermPartition",
    "class_of",
    "cycle_edges",
    "hamiltonian_cycles",
    "partition_even",
    "partition_odd",
    "validate_class",
    "validate_partition",
    "walecki_decomposition",
]

PARTITION_ODD_SUPPORTED = (3, 5, 7)
PARTITION_EVEN_SUPPORTED = (4, 6)


@dataclass(frozen=True)
class DecompositionClass:
    """A set of Hamiltonian cycles of K_n with a fixed edge multiplicity."""

    n: int
    multiplicity: int
    cycles: tuple[HamCycle, ...]


@dataclass(frozen=True)
class PermPartition:
    """Classes covering every canonical Hamiltonian cycle of K_n exactly once."""

    n: int
    classes: tuple[DecompositionClass, ...]


def hamiltonian_cycles(n: int) -> tuple[HamCycle, ...]:
    """All canonical Hamiltonian cycles of K_n, in lexicographic order."""
    return cyclic_permutations(n - 1)


def cycle_edges(cycle: HamCycle) -> list[tuple[int, int]]:
    """The n unordered edges of a Hamiltonian cycle."""
    return cycle_pairs(cycle)


def validate_class(cls: DecompositionClass) -> bool:
    """Check the edge-multiplicity contract exactly.

    Odd n: (n-1)/2 distinct cycles whose edges partition E(K_n).
    Even n: n-1 distinct cycles with every edge of K_n appearing twice.
    """
    n = cls.n
    if n < 3:
        return False
    if n % 2:
        expect_cycles, expect_mult = (n - 1) // 2, 1
    else:
        expect_cycles, expect_mult = n - 1, 2
    if cls.multiplicity != expect_mult or len(cls.cycles) != expect_cycles:
        return False
    if len(set(cls.cycles)) != len(cls.cycles):
        return False
    counts: dict[tuple[int, int], int] = {}
    for cyc in cls.cycles:
        if len(cyc) != n or canonical_perm(cyc) != cyc:
            return False
        for e in cycle_edges(cyc):
            counts[e] = counts.get(e, 0) + 1
    return all(
        counts.get(e, 0) == expect_mult for e in combinations(range(n), 2)
    )


def validate_partition(part: PermPartition) -> bool:
    """Every class valid and every canonical cycle used exactly once."""
    seen: list[HamCycle] = []
    for cls in part.classes:
        if cls.n != part.n or not validate_class(cls):
            return False
        seen.extend(cls.cycles)
    return sorted(seen) == sorted(hamiltonian_cycles(part.n))


def walecki_decomposition(n: int) -> DecompositionClass:
    """One Hamiltonian decomposition of K_n for odd n, by the zig-zag construction.

    The vertex n-1 is the hub; the base cycle threads 0, 1, n-2, 2, n-3, ...
    through the remaining vertices and its (n-1)/2 rotations partition the
    edge set.  Available for every odd n >= 3.
    """
    if n < 3 or n % 2 == 0:
        raise GemError(f"Walecki decomposition needs an odd n >= 3, got {n}")
    m = (n - 1) // 2
    zigzag = [0]
    lo, hi = 1, n - 2
    take_lo = True
    while len(zigzag) < n - 1:
        if take_lo:
            zigzag.append(lo)
            lo += 1
        else:
            zigzag.append(hi)
            hi -= 1
        take_lo = not take_lo
    cycles = []
    for k in range(m):
        cycles.append(canonical_perm([n - 1] + [(v + k) % (n - 1) for v in zigzag]))
    return DecompositionClass(n=n, multiplicity=1, cycles=tuple(sorted(cycles)))


@lru_cache(maxsize=None)
def partition_odd(n: int) -> PermPartition:
    """Partition of all Hamiltonian cycles of K_n into (n-2)! decompositions.

    For the supported n (3, 5, 7; all prime) the orbit of the circulant
    decomposition {(0, j, 2j, ...) : 1 <= j <= (n-1)/2} under the symmetric
    group is exactly such a partition: its stabilizer is the affine group
    x -> ax + b of order n(n-1), so the orbit has (n-2)! members, and each
    cycle lies in precisely one of them.  For n = 5 this reproduces the six
    pairs of associated permutations, the unique partition in that case.
    """
    if n not in PARTITION_ODD_SUPPORTED:
        raise GemError(
            f"full odd partition supported for n in {PARTITION_ODD_SUPPORTED}, got {n}"
        )
    base = [
        canonical_perm([(j * k) % n for k in range(n)])
        for j in range(1, (n - 1) // 2 + 1)
    ]
    classes = set()
    for sigma in permutations(range(n)):
        classes.add(tuple(sorted(canonical_perm([sigma[v] for v in cyc]) for cyc in base)))
    part = PermPartition(
        n=n,
        classes=tuple(
            DecompositionClass(n=n, multiplicity=1, cycles=cls)
            for cls in sorted(classes)
        ),
    )
    if not validate_partition(part):
        raise GemError(f"internal invariant violation: orbit partition invalid for n={n}")
    return part


@lru_cache(maxsize=None)
def partition_even(n: int) -> PermPartition:
    """Partition of all Hamiltonian cycles of K_n into (n-2)!/2 double covers.

    Found by backtracking: the smallest unused cycle opens a class, the
    class is completed by always branching on its smallest edge still below
    multiplicity two (candidates in lexicographic cycle order), and classes
    are retried on failure.  The first partition found in this fixed order
    is the canonical output.
    """
    if n not in PARTITION_EVEN_SUPPORTED:
        raise GemError(
            f"full even partition supported for n in {PARTITION_EVEN_SUPPORTED}, got {n}"
        )
    cycles = hamiltonian_cycles(n)
    edges = list(combinations(range(n), 2))
    edge_index = {e: i for i, e in enumerate(edges)}
    edge_lists = [
        [edge_index[e] for e in cycle_edges(c)] for c in cycles
    ]
    by_edge: list[list[int]] = [[] for _ in edges]
    for i, bits in enumerate(edge_lists):
        for b in bits:
            by_edge[b].append(i)
    class_size = n - 1
    total_classes = len(cycles) // class_size
    used = [False] * len(cycles)
    classes: list[tuple[int, ...]] = []

    def completions(members: list[int], counts: list[int], floor: dict[int, int], acc):
        if len(members) == class_size:
            if all(c == 2 for c in counts):
                acc.append(tuple(members))
            return
        e = next(i for i, c in enumerate(counts) if c < 2)
        for j in by_edge[e]:
            if used[j] or j <= floor.get(e, -1):
                continue
            if any(counts[b] >= 2 for b in edge_lists[j]):
                continue
            for b in edge_lists[j]:
                counts[b] += 1
            used[j] = True
            members.append(j)
            prev = floor.get(e)
            floor[e] = j
            completions(members, counts, floor, acc)
            if prev is None:
                del floor[e]
            else:
                floor[e] = prev
            members.pop()
            used[j] = False
            for b in edge_lists[j]:
                counts[b] -= 1

    def solve() -> bool:
        if len(classes) == total_classes:
            return True
        pivot = next(i for i, u in enumerate(used) if not u)
        counts = [0] * len(edges)
        for b in edge_lists[pivot]:
            counts[b] += 1
        used[pivot] = True
        acc: list[tuple[int, ...]] = []
        completions([pivot], counts, {}, acc)
        for comp in acc:
            for j in comp:
                used[j] = True
            classes.append(comp)
            if solve():
                return True
            classes.pop()
            for j in comp:
                if j != pivot:
                    used[j] = False
        used[pivot] = False
        return False

    if not solve():
        raise GemError(f"internal invariant violation: no even partition found for n={n}")
    part = PermPartition(
        n=n,
        classes=tuple(
            DecompositionClass(
                n=n, multiplicity=2, cycles=tuple(sorted(cycles[j] for j in cls))
            )
            for cls in classes
        ),
    )
    if not validate_partition(part):
        raise GemError(f"internal invariant violation: even partition invalid for n={n}")
    return part


def class_of(partition: PermPartition, eps: CyclicPerm) -> DecompositionClass:
    """The unique class containing a canonical cycle."""
    target = canonical_perm(eps)
    for cls in partition.classes:
        if target in cls.cycles:
            return cls
    raise GemError(f"cycle {target} not found in the partition: invariant violated")
