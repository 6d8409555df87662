"""Identity-check battery and report builders for the CLI.

Every theorem-shaped statement the library exposes is evaluated per graph
as a named boolean check; campaign reports aggregate evaluation and
violation counts, embedding the first counterexample gems verbatim.  All
reports serialize deterministically (sorted keys, integers and exact
half-integer strings only), so a repeated run with the same seed is
byte-identical.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator

from .core import (
    ColoredGraph,
    GemError,
    euler_characteristic_complex,
    is_bipartite,
    is_connected,
    parse_gem,
    residue_count,
    serialize_gem,
)
from .cycle_decomp import (
    DecompositionClass,
    PARTITION_EVEN_SUPPORTED,
    PARTITION_ODD_SUPPORTED,
    partition_even,
    partition_odd,
    walecki_decomposition,
)
from .dim4 import (
    associated_pairs,
    associated_permutation,
    check_corollary_12rho,
    check_difference_b,
    classify_crystallization,
    crystallization_profile,
    euler_char_via_genus,
    is_singular_4_manifold,
    residue_degree_identity,
    skip_triples,
    surface_type,
)
from .embeddings import HalfInt, cyclic_permutations, pair_residue_sum, regular_genus
from .generator import GenSpec, enumerate_gems, random_gem
from .perms import cycle_pairs

__all__ = [
    "REPORT_SCHEMA",
    "analysis_report",
    "campaign_report",
    "render_text",
    "report_json",
    "worker_count",
]

REPORT_SCHEMA = "gemcalc.report/1"
MAX_EMBEDDED_COUNTEREXAMPLES = 5
_BATCH_SIZE = 2000


def worker_count() -> int:
    """Worker cap from GEMCALC_THREADS (default 1)."""
    raw = os.environ.get("GEMCALC_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise GemError(f"GEMCALC_THREADS must be an integer, got {raw!r}") from None
    return max(1, n)


def _perm_key(eps: Iterable[int]) -> str:
    return ",".join(str(c) for c in eps)


def _classes_for(d: int) -> tuple[DecompositionClass, ...]:
    """Partition classes used for the class-sum constancy check."""
    n = d + 1
    if n % 2:
        if n in PARTITION_ODD_SUPPORTED:
            return partition_odd(n).classes
        return (walecki_decomposition(n),)
    if n in PARTITION_EVEN_SUPPORTED:
        return partition_even(n).classes
    return ()


def check_graph(g: ColoredGraph) -> tuple[dict[str, bool], dict[str, bool]]:
    """Evaluate every applicable identity on one connected graph.

    Returns (flags, checks): flags are corpus counters (bipartite, singular
    manifold, odd reduced degree, crystallization profile accepted); checks
    map stable names to pass/fail.
    """
    d = g.d
    checks: dict[str, bool] = {}
    flags: dict[str, bool] = {}

    perms = cyclic_permutations(d)
    genus = {eps: regular_genus(g, eps) for eps in perms}
    omega_twice = sum(r.twice for r in genus.values())
    pair_sum = pair_residue_sum(g)
    reduced = d + g.p * (d - 1) * d // 2 - pair_sum

    bipartite = is_bipartite(g)
    flags["bipartite"] = bipartite

    if d >= 3:
        checks["degree_formula_agreement"] = omega_twice == factorial(d - 1) * reduced
        checks["degree_multiple_of_half_factorial"] = (
            omega_twice >= 0 and omega_twice % factorial(d - 1) == 0
        )
        flags["odd_reduced_degree"] = (
            omega_twice % factorial(d - 1) == 0
            and (omega_twice // factorial(d - 1)) % 2 == 1
        )
    if bipartite:
        checks["bipartite_genera_integral"] = all(r.is_integer for r in genus.values())
        if d >= 4 and d % 2 == 0:
            checks["bipartite_degree_divisibility"] = (
                omega_twice % (2 * factorial(d - 1)) == 0
            )

    classes = _classes_for(d)
    if classes:
        sums = [
            sum(genus[cyc].twice for cyc in cls.cycles) for cls in classes
        ]
        expected = reduced if d % 2 == 0 else 2 * reduced
        checks["class_genus_sum_constant"] = all(s == expected for s in sums)

    if d == 2:
        st = surface_type(g)
        chi = euler_characteristic_complex(g)
        checks["surface_classification"] = (
            st.euler == chi
            and chi <= 2
            and st.orientable == bipartite
            and omega_twice == st.genus.twice == 2 - chi
            and (not bipartite or st.genus.is_integer)
        )

    if d == 4:
        singular = is_singular_4_manifold(g)
        flags["singular_manifold"] = singular

        pair_twices = [
            genus[a].twice + genus[b].twice for a, b in associated_pairs()
        ]
        checks["pair_degree_identity"] = all(
            omega_twice == 6 * t for t in pair_twices
        )
        checks["pair_sum_constant"] = all(
            t == 2 * (2 + 3 * g.p) - pair_sum for t in pair_twices
        )
        ok_a = True
        for eps in perms:
            partner = associated_permutation(eps)
            adjacent = sum(residue_count(g, pr) for pr in cycle_pairs(eps, 1))
            skip = sum(residue_count(g, pr) for pr in cycle_pairs(eps, 2))
            if genus[partner].twice - genus[eps].twice != adjacent - skip:
                ok_a = False
                break
        checks["pair_difference_bicolored"] = ok_a
        left, right = check_corollary_12rho(g)
        checks["minimal_degree_biconditional"] = left == right
        if flags.get("odd_reduced_degree"):
            checks["odd_reduced_forces_nonorientable"] = not bipartite and not singular
        checks["residue_degree_identity"] = residue_degree_identity(g)

        if singular:
            checks["singular_degree_divisibility"] = (
                omega_twice >= 0 and omega_twice % 12 == 0
            )
            checks["pair_difference_tricolored"] = all(
                check_difference_b(g, eps) for eps in perms
            )
            chi = euler_characteristic_complex(g)
            checks["euler_formula_agreement"] = all(
                euler_char_via_genus(g, a) == chi for a, _ in associated_pairs()
            )
            hats_connected = all(
                residue_count(g, [x for x in g.colors if x != i]) == 1
                for i in g.colors
            )
            if hats_connected:
                _crystallization_checks(g, genus, checks, flags)
    return flags, checks


def _crystallization_checks(g, genus, checks, flags) -> None:
    """Profile the graph with rank 0 asserted and check the excess identities."""
    try:
        profile = crystallization_profile(g, 0)
    except GemError:
        checks["crystallization_profile_consistent"] = False
        return
    checks["crystallization_profile_consistent"] = True
    flags["crystallization_profile"] = True
    q = profile.q
    base = 2 * profile.euler + 5 * profile.m - 4

    ok_diff = ok_offset = True
    for eps in cyclic_permutations(4):
        partner = associated_permutation(eps)
        skip_excess = sum(profile.t_triples[t] for t in skip_triples(eps))
        diff_twice = genus[partner].twice - genus[eps].twice
        if diff_twice != 2 * (q - 2 * skip_excess) or diff_twice > 2 * q:
            ok_diff = False
        if genus[eps].twice != 2 * (base + skip_excess):
            ok_offset = False
    checks["excess_difference_identity"] = ok_diff
    checks["excess_genus_offset"] = ok_offset
    checks["excess_pair_sum"] = all(
        genus[a].twice + genus[b].twice == 2 * (2 * base + q)
        for a, b in associated_pairs()
    )
    try:
        classify_crystallization(profile, g)
        checks["classification_consistent"] = True
    except GemError:
        checks["classification_consistent"] = False

    chi, m, p = profile.euler, profile.m, g.p
    ok_bounds = True
    for a, b in associated_pairs():
        lo, hi = sorted((genus[a].twice, genus[b].twice))
        # chi between 2*rho - p + 3 for the two genera of the pair
        if not (lo - p + 3 <= chi <= hi - p + 3):
            ok_bounds = False
        # quarter-resolution chain, scaled by 4
        if not (8 + lo - 10 * m - q <= 4 * chi <= 8 + hi - 10 * m - q):
            ok_bounds = False
        # single-genus chains on the smaller genus of the pair
        if not (lo - p + 3 <= chi <= lo - p + q + 3):
            ok_bounds = False
        if not (8 + lo - 10 * m - q <= 4 * chi <= 8 + lo - 10 * m):
            ok_bounds = False
    checks["euler_bounds"] = ok_bounds


def analysis_report(g: ColoredGraph, metadata: dict | None = None) -> dict:
    """Full single-graph report; requires a connected graph."""
    if not is_connected(g):
        raise GemError("analysis requires a connected graph")
    d = g.d
    perms = cyclic_permutations(d)
    genus = {eps: regular_genus(g, eps) for eps in perms}
    omega = HalfInt(sum(r.twice for r in genus.values()))
    rho_min = min(genus.values())
    minimizers = [eps for eps in perms if genus[eps] == rho_min]

    flags, checks = check_graph(g)
    report: dict = {
        "schema": REPORT_SCHEMA,
        "kind": "analysis",
        "graph": {
            "d": d,
            "vertices": g.order,
            "half_order": g.p,
            "connected": True,
            "bipartite": flags["bipartite"],
        },
        "residues": {
            "pairs": {
                _perm_key(pr): residue_count(g, pr)
                for pr in combinations(g.colors, 2)
            },
            "complements": {
                str(i): residue_count(g, [x for x in g.colors if x != i])
                for i in g.colors
            },
        },
        "euler_characteristic": euler_characteristic_complex(g),
        "genera": {_perm_key(eps): str(genus[eps]) for eps in perms},
        "regular_genus": {
            "value": str(rho_min),
            "minimizers": [_perm_key(eps) for eps in minimizers],
        },
        "gurau_degree": str(omega),
        "checks": checks,
        "violations": sorted(name for name, ok in checks.items() if not ok),
    }
    if d >= 3:
        report["reduced_degree"] = omega.twice // factorial(d - 1)
    if d == 2:
        st = surface_type(g)
        report["surface"] = {
            "orientable": st.orientable,
            "euler": st.euler,
            "genus": str(st.genus),
        }
    if d == 4:
        singular = flags.get("singular_manifold", False)
        block: dict = {
            "associated_pair_sums": {
                f"{_perm_key(a)}|{_perm_key(b)}": str(genus[a] + genus[b])
                for a, b in associated_pairs()
            },
            "singular_manifold": singular,
        }
        if singular:
            block["euler_by_pair_formula"] = euler_char_via_genus(
                g, associated_pairs()[0][0]
            )
        if metadata is not None:
            block["crystallization"] = _metadata_block(g, metadata)
        report["dim4"] = block
    return report


def _metadata_block(g: ColoredGraph, metadata: dict) -> dict:
    if not isinstance(metadata, dict) or "m" not in metadata:
        raise GemError("crystallization metadata must be an object with field 'm'")
    m = metadata["m"]
    if not isinstance(m, int) or isinstance(m, bool):
        raise GemError("metadata field 'm' must be an integer")
    if not metadata.get("closed_manifold_asserted", False):
        raise GemError(
            "crystallization metadata requires closed_manifold_asserted: true"
        )
    profile = crystallization_profile(g, m)
    result = classify_crystallization(profile, g)
    return {
        "m": profile.m,
        "euler": profile.euler,
        "q": profile.q,
        "minimal_half_order": profile.p_bar,
        "triple_excess": {
            _perm_key(t): v for t, v in sorted(profile.t_triples.items()) if v
        },
        "kind": result.kind,
        "witness": _perm_key(result.witness) if result.witness else None,
        "satisfies_12rho": result.satisfies_12rho,
    }


# --- campaigns ---------------------------------------------------------------


def _campaign_graphs(d: int, mode: str, max_p: int, count: int, seed: int) -> Iterator[ColoredGraph]:
    if mode == "exhaustive":
        for p in range(1, max_p + 1):
            yield from enumerate_gems(d, p, connected_only=True)
    elif mode == "random":
        per_p = [count // max_p] * max_p
        for i in range(count % max_p):
            per_p[i] += 1
        for p in range(1, max_p + 1):
            n = per_p[p - 1]
            if n == 0:
                continue
            yield from random_gem(
                GenSpec(d=d, p=p, count=n, seed=seed + p, connected_only=True)
            )
    else:
        raise GemError(f"unknown campaign mode {mode!r}")


def _battery_batch(d: int, gems: list[str]) -> tuple[dict, dict, list]:
    """Worker: evaluate the battery on serialized gems; counters plus violations."""
    counters: dict[str, int] = {"graphs": 0}
    stats: dict[str, list[int]] = {}
    violations: list[tuple[int, str, str]] = []
    for idx, text in enumerate(gems):
        g = parse_gem(text)
        flags, checks = check_graph(g)
        counters["graphs"] += 1
        for name, value in flags.items():
            if value:
                counters[name] = counters.get(name, 0) + 1
        for name, ok in checks.items():
            ev = stats.setdefault(name, [0, 0])
            ev[0] += 1
            if not ok:
                ev[1] += 1
                violations.append((idx, name, text))
    return counters, stats, violations


def _merge(into_counters, into_stats, into_viol, result, offset):
    counters, stats, violations = result
    for k, v in counters.items():
        into_counters[k] = into_counters.get(k, 0) + v
    for name, (ev, bad) in stats.items():
        slot = into_stats.setdefault(name, [0, 0])
        slot[0] += ev
        slot[1] += bad
    for idx, name, text in violations:
        into_viol.append((offset + idx, name, text))


def campaign_report(
    d: int,
    mode: str,
    max_p: int,
    count: int = 0,
    seed: int = 0,
    threads: int | None = None,
) -> dict:
    """Run the identity battery over a corpus and aggregate the outcome.

    The corpus order is deterministic; with several workers the batches are
    merged in corpus order, so the report does not depend on the worker
    count.  The first few violating gems are embedded verbatim.
    """
    if threads is None:
        threads = worker_count()
    if d < 2:
        raise GemError(f"campaigns need d >= 2, got {d}")
    if max_p < 1:
        raise GemError(f"campaigns need a positive half-order bound, got {max_p}")
    if mode == "random" and count < 1:
        raise GemError("random campaigns need a positive sample count")

    counters: dict[str, int] = {"graphs": 0}
    stats: dict[str, list[int]] = {}
    violations: list[tuple[int, str, str]] = []

    batches: list[list[str]] = []
    current: list[str] = []
    for g in _campaign_graphs(d, mode, max_p, count, seed):
        current.append(serialize_gem(g))
        if len(current) >= _BATCH_SIZE:
            batches.append(current)
            current = []
    if current:
        batches.append(current)

    if threads > 1 and len(batches) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_battery_batch, [d] * len(batches), batches))
    else:
        results = [_battery_batch(d, batch) for batch in batches]

    offset = 0
    for batch, result in zip(batches, results):
        _merge(counters, stats, violations, result, offset)
        offset += len(batch)

    violations.sort()
    report = {
        "schema": REPORT_SCHEMA,
        "kind": "campaign",
        "params": {
            "d": d,
            "mode": mode,
            "max_p": max_p,
            "count": count,
            "seed": seed,
        },
        "counts": {
            "graphs": counters.get("graphs", 0),
            "bipartite": counters.get("bipartite", 0),
            "singular_manifold": counters.get("singular_manifold", 0),
            "odd_reduced_degree": counters.get("odd_reduced_degree", 0),
            "crystallization_profiles": counters.get("crystallization_profile", 0),
        },
        "checks": {
            name: {"evaluated": ev, "violations": bad}
            for name, (ev, bad) in sorted(stats.items())
        },
        "violations": [
            {"index": idx, "check": name, "gem": json.loads(text)}
            for idx, name, text in violations[:MAX_EMBEDDED_COUNTEREXAMPLES]
        ],
        "status": "violations" if violations else "ok",
    }
    return report


# --- rendering ---------------------------------------------------------------


def report_json(report: dict) -> str:
    """Canonical JSON bytes of a report (sorted keys, trailing newline)."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(report: dict) -> str:
    """Aligned human-readable rendering of an analysis or campaign report."""
    lines: list[str] = []
    if report["kind"] == "analysis":
        gr = report["graph"]
        lines.append(
            f"gem: d={gr['d']} vertices={gr['vertices']} "
            f"connected={gr['connected']} bipartite={gr['bipartite']}"
        )
        lines.append(f"euler characteristic: {report['euler_characteristic']}")
        lines.append(
            f"gurau degree: {report['gurau_degree']}"
            + (
                f"   reduced: {report['reduced_degree']}"
                if "reduced_degree" in report
                else ""
            )
        )
        rg = report["regular_genus"]
        lines.append(
            f"regular genus: {rg['value']}  attained by {len(rg['minimizers'])} permutation(s)"
        )
        if "surface" in report:
            s = report["surface"]
            lines.append(
                f"surface: orientable={s['orientable']} euler={s['euler']} genus={s['genus']}"
            )
        if "dim4" in report:
            d4 = report["dim4"]
            lines.append(f"singular manifold: {d4['singular_manifold']}")
            if "crystallization" in d4:
                c = d4["crystallization"]
                lines.append(
                    f"crystallization: kind={c['kind']} q={c['q']} m={c['m']} "
                    f"12rho={c['satisfies_12rho']}"
                )
        lines.append("checks:")
        for name, ok in sorted(report["checks"].items()):
            lines.append(f"  {name:<40} {'ok' if ok else 'VIOLATED'}")
    else:
        pr = report["params"]
        lines.append(
            f"campaign: d={pr['d']} mode={pr['mode']} max_p={pr['max_p']} "
            f"count={pr['count']} seed={pr['seed']}"
        )
        lines.append("counts:")
        for name, value in report["counts"].items():
            lines.append(f"  {name:<28} {value}")
        lines.append("checks:")
        for name, st in report["checks"].items():
            lines.append(
                f"  {name:<40} evaluated={st['evaluated']:<8} violations={st['violations']}"
            )
        lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"
