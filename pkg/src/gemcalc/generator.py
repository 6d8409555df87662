"""Graph corpora: known families, seeded random gems, exhaustive enumeration,
and targeted searches.

Randomness comes from SplitMix64, a named 64-bit generator implemented here
so that identical seeds give bit-identical corpora on every platform and
Python version; matchings are sampled by an unbiased Fisher-Yates shuffle
followed by pairing consecutive entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .core import ColoredGraph, GemError, euler_characteristic_complex, is_bipartite, is_connected
from .dim4 import is_singular_4_manifold
from .embeddings import reduced_g_degree

__all__ = [
    "GenSpec",
    "SplitMix64",
    "all_matchings",
    "dipole",
    "enumerate_gems",
    "enumeration_size",
    "random_gem",
    "search_odd_reduced",
    "search_rp2",
]

_MASK64 = (1 << 64) - 1

# raw-space ceiling for exhaustive enumeration: (2p-1)!!^d streams
ENUMERATION_BUDGET = 1_500_000

# per-sample rejection ceiling before a filter is declared infeasible
REJECTION_BUDGET = 100_000

# fixed seed for the randomized tail of witness searches
_SEARCH_SEED = 0x0DDC0FFEE


class SplitMix64:
    """Deterministic 64-bit PRNG (SplitMix64)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (_MASK64 + 1) - (_MASK64 + 1) % bound
        while True:
            r = self.next64()
            if r < limit:
                return r % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    """Parameters of a random corpus draw."""

    d: int
    p: int
    count: int
    seed: int
    connected_only: bool = False
    bipartite_only: bool = False
    non_bipartite_only: bool = False

    def __post_init__(self) -> None:
        if self.d < 2:
            raise GemError(f"dimension must be >= 2, got {self.d}")
        if self.p < 1:
            raise GemError(f"half-order must be >= 1, got {self.p}")
        if self.count < 1:
            raise GemError(f"count must be >= 1, got {self.count}")
        if self.bipartite_only and self.non_bipartite_only:
            raise GemError("bipartite_only and non_bipartite_only are mutually exclusive")


def dipole(d: int) -> ColoredGraph:
    """The order-2 gem with all d+1 colors joining its two vertices."""
    if d < 2:
        raise GemError(f"dipoles need d >= 2, got {d}")
    return ColoredGraph(d=d, order=2, matchings=((2, 1),) * (d + 1))


def _random_matching(rng: SplitMix64, order: int) -> tuple[int, ...]:
    verts = list(range(1, order + 1))
    rng.shuffle(verts)
    mu = [0] * order
    for i in range(0, order, 2):
        a, b = verts[i], verts[i + 1]
        mu[a - 1] = b
        mu[b - 1] = a
    return tuple(mu)


def random_gem(spec: GenSpec) -> list[ColoredGraph]:
    """Draw ``spec.count`` gems with independent uniform matchings per color.

    Filters act by rejection; exceeding the per-sample rejection budget is
    reported as an infeasible filter.
    """
    rng = SplitMix64(spec.seed)
    out: list[ColoredGraph] = []
    order = 2 * spec.p
    for _ in range(spec.count):
        for attempt in range(REJECTION_BUDGET):
            mats = tuple(_random_matching(rng, order) for _ in range(spec.d + 1))
            g = ColoredGraph(d=spec.d, order=order, matchings=mats)
            if spec.connected_only and not is_connected(g):
                continue
            if spec.bipartite_only and not is_bipartite(g):
                continue
            if spec.non_bipartite_only and is_bipartite(g):
                continue
            out.append(g)
            break
        else:
            raise GemError(
                f"filter rejected {REJECTION_BUDGET} candidates in a row; "
                f"spec {spec} looks infeasible"
            )
    return out


@lru_cache(maxsize=8)
def all_matchings(order: int) -> tuple[tuple[int, ...], ...]:
    """Every fixed-point-free involution of 1..order, lexicographic by array."""
    if order <= 0 or order % 2:
        raise GemError(f"matchings need a positive even order, got {order}")
    out: list[tuple[int, ...]] = []
    mu = [0] * order

    def rec(free: list[int]) -> None:
        if not free:
            out.append(tuple(mu))
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            mu[a - 1] = b
            mu[b - 1] = a
            rec(free[1:i] + free[i + 1:])
        # no cleanup needed: entries overwritten on the next branch
    rec(list(range(1, order + 1)))
    return tuple(out)


def _double_factorial_odd(p: int) -> int:
    # (2p-1)!! = number of perfect matchings on 2p points
    out = 1
    for k in range(1, 2 * p, 2):
        out *= k
    return out


def enumeration_size(d: int, p: int) -> int:
    """Raw stream length of the gauge-fixed exhaustive enumeration."""
    return _double_factorial_odd(p) ** d


def enumerate_gems(d: int, p: int, connected_only: bool = False) -> Iterator[ColoredGraph]:
    """Stream every gem with color 0 fixed to the matching (1,2)(3,4)...

    The remaining d matchings range over all fixed-point-free involutions,
    in lexicographic order.  Fixing color 0 is harmless for label-invariant
    statistics and cuts the raw space by a (2p-1)!! factor; the stream is
    refused outright when still larger than the enumeration budget.
    """
    if d < 2:
        raise GemError(f"enumeration needs d >= 2, got {d}")
    if p < 1:
        raise GemError(f"enumeration needs p >= 1, got {p}")
    size = enumeration_size(d, p)
    if size > ENUMERATION_BUDGET:
        raise GemError(
            f"enumeration bound exceeded: (2p-1)!!^d = {size} > {ENUMERATION_BUDGET} "
            f"for d={d}, p={p}"
        )
    mats = all_matchings(2 * p)
    base = mats[0]
    for rest in product(mats, repeat=d):
        g = ColoredGraph(d=d, order=2 * p, matchings=(base,) + rest)
        if connected_only and not is_connected(g):
            continue
        yield g


def search_rp2(max_p: int = 4) -> ColoredGraph:
    """First connected non-bipartite 3-colored gem with Euler characteristic 1.

    Scans the gauge-fixed enumeration in lexicographic order for increasing
    half-order and returns the first hit (it exists within the default
    bound).
    """
    for p in range(1, max_p + 1):
        for g in enumerate_gems(2, p, connected_only=True):
            if euler_characteristic_complex(g) == 1 and not is_bipartite(g):
                return g
    raise GemError(f"no projective-plane gem found with p <= {max_p}")


def search_odd_reduced(d: int, max_p: int) -> ColoredGraph | None:
    """First connected graph with odd reduced degree, or None.

    Even d >= 4 only.  Half-orders are scanned upward: exhaustively while
    the enumeration budget allows, then by a fixed-seed random scan.  A hit
    is post-verified to be non-bipartite and to fail the singular-manifold
    test, as any odd-reduced-degree graph must; violations raise.
    """
    if d < 4 or d % 2:
        raise GemError(f"odd reduced degree search needs an even d >= 4, got {d}")
    if max_p < 1:
        raise GemError(f"max_p must be >= 1, got {max_p}")
    for p in range(1, max_p + 1):
        if enumeration_size(d, p) <= ENUMERATION_BUDGET:
            candidates: Iterator[ColoredGraph] = enumerate_gems(d, p, connected_only=True)
        else:
            candidates = iter(
                random_gem(
                    GenSpec(d=d, p=p, count=5000, seed=_SEARCH_SEED + p, connected_only=True)
                )
            )
        for g in candidates:
            if reduced_g_degree(g) % 2:
                if is_bipartite(g):
                    raise GemError(
                        "internal invariant violation: odd reduced degree on a bipartite graph"
                    )
                if d == 4 and is_singular_4_manifold(g):
                    raise GemError(
                        "internal invariant violation: odd reduced degree on a "
                        "singular-manifold graph"
                    )
                return g
    return None
