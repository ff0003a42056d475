"""Brute-force ground truth and the verification battery.

The oracle side never reuses closed-form code paths: adjacency comes from
the per-vertex neighbor rule, but every distance here is computed by
breadth-first search, keeping the two sides of each comparison
independent. `verify_spec` runs the full battery for one member and
reports per-check status with concrete counterexamples on failure.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import metrics, routing, topology
from ._arrays import csr_adjacency, digit_matrix
from ._backend import BACKEND, kernels
from .labels import (
    Label,
    RadixSpec,
    SpecMismatchError,
    alt,
    conjugate,
    format_label,
    format_spec,
    parse_label,
)

DEFAULT_ALL_PAIRS_CAP = 20_000
DEFAULT_SAMPLE_PAIRS = 1_000
DEFAULT_SEED = 48813
EXHAUSTIVE_ROUTE_LIMIT = 200
MAX_COUNTEREXAMPLES = 10

# Small members exercised by the acceptance battery; the largest has 48
# vertices, so every check on them runs exhaustively.
STANDARD_SUITE: tuple[tuple[int, ...], ...] = (
    (2, 2),
    (2, 3),
    (3, 3),
    (2, 2, 2),
    (2, 3, 4),
    (3, 2, 2),
    (2, 3, 3),
    (4, 4),
    (2, 2, 2, 2, 2),
    (2, 2, 3, 4),
)


@dataclass(frozen=True)
class ExplicitGraph:
    """Materialized member: lexicographic vertex indexing plus CSR adjacency."""

    spec: RadixSpec
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return int(self.indices.shape[0]) // 2

    def index_of(self, x: Label) -> int:
        if x.spec.radices != self.spec.radices:
            raise SpecMismatchError("label belongs to a different member")
        return self.spec.index_of(x.digits)

    def label_at(self, index: int) -> Label:
        return Label(self.spec.digits_at(index), self.spec)

    def degree(self, index: int) -> int:
        return int(self.indptr[index + 1] - self.indptr[index])

    def neighbors_of(self, index: int) -> np.ndarray:
        return self.indices[self.indptr[index] : self.indptr[index + 1]]


def build_graph(spec: RadixSpec, max_order: int | None = None) -> ExplicitGraph:
    """Adjacency lists from the per-vertex neighbor rule."""
    spec.check_enumerable()
    if max_order is not None:
        spec.check_enumerable(max_order)
    indptr, indices = csr_adjacency(spec)
    return ExplicitGraph(spec, indptr, indices)


def bfs_from(graph: ExplicitGraph, source: Label) -> np.ndarray:
    """Exact hop counts from source to every vertex; -1 marks unreached."""
    src = graph.index_of(source)
    dist = np.empty(graph.vertex_count, dtype=np.int32)
    kernels.bfs_distances(graph.indptr, graph.indices, src, dist)
    return dist


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "info"
    counterexamples: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    spec: RadixSpec
    order: int
    size: int
    backend: str
    pair_mode: str  # "exhaustive" | "sampled"
    seed: int | None
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "spec": format_spec(self.spec),
            "order": self.order,
            "size": self.size,
            "backend": self.backend,
            "pair_mode": self.pair_mode,
            "seed": self.seed,
            "passed": self.passed,
            "checks": {c.name: c.to_json() for c in self.checks},
        }


def _fmt_digits(digits: tuple[int, ...], spec: RadixSpec) -> str:
    return format_label(Label(digits, spec))


def verify_spec(
    spec: RadixSpec,
    *,
    all_pairs_cap: int = DEFAULT_ALL_PAIRS_CAP,
    sample_pairs: int = DEFAULT_SAMPLE_PAIRS,
    seed: int = DEFAULT_SEED,
    route_limit: int = EXHAUSTIVE_ROUTE_LIMIT,
) -> VerificationReport:
    """Run the full battery for one member and collect a report.

    All pairwise checks are exhaustive up to `all_pairs_cap` vertices;
    above it, `sample_pairs` pairs are drawn from a seeded generator and
    the seed is recorded. Failures never raise: they become report entries
    carrying concrete counterexamples.
    """
    spec.check_enumerable()
    n = spec.order()
    graph = build_graph(spec)
    mat = digit_matrix(spec)
    kern = kernels.DistanceKernel(mat)
    stream = topology.edges(spec)
    sampled = n > all_pairs_cap
    report = VerificationReport(
        spec=spec,
        order=n,
        size=graph.edge_count,
        backend=BACKEND,
        pair_mode="sampled" if sampled else "exhaustive",
        seed=seed if (sampled or n > route_limit) else None,
    )

    def add(name: str, fn, info: bool = False) -> None:
        t0 = time.perf_counter()
        bad, detail = fn()
        ms = round((time.perf_counter() - t0) * 1000.0, 3)
        status = "info" if info else ("pass" if not bad else "fail")
        report.checks.append(CheckResult(name, status, bad[:MAX_COUNTEREXAMPLES], ms, detail))

    # -- construction equivalence: rule enumeration vs level recursion
    def chk_construction():
        by_rules = stream.pair_set()
        by_recursion = topology.build_recursive(spec).pair_set()
        diff = by_rules ^ by_recursion
        bad = [
            f"{_fmt_digits(u, spec)}--{_fmt_digits(v, spec)}" for u, v in sorted(diff)
        ]
        return bad, f"{len(by_rules)} edges by rules, {len(by_recursion)} by recursion"

    add("construction_equivalence", chk_construction)

    # -- size: closed form == recursion == enumeration, per-kind counts match
    def chk_size():
        closed, terms = topology.size_closed_form(spec)
        rec = topology.size_recursive(spec)
        enum = len(stream)
        kinds = stream.count_by_kind()
        enum_terms = (
            kinds[topology.EdgeKind.FIRST_DIGIT],
            kinds[topology.EdgeKind.ZERO_BLOCK_FLIP],
            kinds[topology.EdgeKind.ROOT_CLIQUE],
        )
        bad = []
        if not closed == rec == enum == graph.edge_count:
            bad.append(
                f"closed={closed} recursive={rec} enumerated={enum} adjacency={graph.edge_count}"
            )
        if terms != enum_terms:
            bad.append(f"terms {terms} != enumerated kinds {enum_terms}")
        return bad, f"size {closed} = {'+'.join(str(t) for t in terms)}"

    add("size_formulas", chk_size)

    # -- per-edge alternating-number law
    def chk_edge_alt():
        bad = []
        for u, v, kind in stream:
            au, av = alt(u), alt(v)
            if kind is topology.EdgeKind.FIRST_DIGIT:
                if u.digits[0] == 0 or v.digits[0] == 0:
                    ok = abs(au - av) == 1
                else:
                    ok = au == av
            elif kind is topology.EdgeKind.ZERO_BLOCK_FLIP:
                ok = abs(au - av) == 1
            else:
                ok = au == av
            if not ok:
                bad.append(f"{format_label(u)}--{format_label(v)} [{kind.value}] alt {au},{av}")
            if len(bad) >= MAX_COUNTEREXAMPLES:
                break
        return bad, f"{len(stream)} edges checked"

    add("edge_alt_law", chk_edge_alt)

    # -- every non-root vertex has a neighbor one step closer and none closer
    def chk_descent_neighbors():
        altv = kernels.alt_values(mat)
        bad = []
        for i in range(n):
            nbrs = graph.neighbors_of(i)
            if altv[i] == 0:
                continue
            lowest = int(altv[nbrs].min())
            if lowest != int(altv[i]) - 1:
                bad.append(
                    f"{_fmt_digits(spec.digits_at(i), spec)}: alt {int(altv[i])},"
                    f" best neighbor {lowest}"
                )
            if len(bad) >= MAX_COUNTEREXAMPLES:
                break
        return bad, f"{n} vertices checked"

    add("alt_descent_neighbors", chk_descent_neighbors)

    # -- connectivity from the root (index 0 is the all-zero label)
    root_row = np.empty(n, dtype=np.int32)
    kernels.bfs_distances(graph.indptr, graph.indices, 0, root_row)

    def chk_connected():
        unreached = np.nonzero(root_row < 0)[0]
        bad = [_fmt_digits(spec.digits_at(int(i)), spec) for i in unreached[:MAX_COUNTEREXAMPLES]]
        return bad, f"{n - len(unreached)} of {n} vertices reached from the root"

    add("connectivity", chk_connected)

    # -- distance closed form vs BFS, plus eccentricity bookkeeping
    bfs_ecc = np.empty(n, dtype=np.int32)
    closed_ecc = np.empty(n, dtype=np.int32)
    # full matrix only when the exhaustive distance pass will fill it
    bfs_rows: np.ndarray | None = (
        np.empty((n, n), dtype=np.int32) if (n <= route_limit and not sampled) else None
    )

    def chk_distance():
        bad: list[str] = []
        if not sampled:
            row_b = np.empty(n, dtype=np.int32)
            row_c = np.empty(n, dtype=np.int32)
            for i in range(n):
                kernels.bfs_distances(graph.indptr, graph.indices, i, row_b)
                kern.row(i, row_c)
                bfs_ecc[i] = row_b.max()
                closed_ecc[i] = row_c.max()
                if bfs_rows is not None:
                    bfs_rows[i] = row_b
                if not np.array_equal(row_b, row_c):
                    for j in np.nonzero(row_b != row_c)[0][:2]:
                        bad.append(
                            f"{_fmt_digits(spec.digits_at(i), spec)}|"
                            f"{_fmt_digits(spec.digits_at(int(j)), spec)}:"
                            f" closed={int(row_c[j])} bfs={int(row_b[j])}"
                        )
                if len(bad) >= MAX_COUNTEREXAMPLES:
                    break
            return bad, f"all {n * (n - 1) // 2} unordered pairs"
        rng = random.Random(seed)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(sample_pairs)]
        row_b = np.empty(n, dtype=np.int32)
        row_c = np.empty(n, dtype=np.int32)
        by_source: dict[int, list[int]] = {}
        for i, j in pairs:
            by_source.setdefault(i, []).append(j)
        for i, targets in by_source.items():
            kernels.bfs_distances(graph.indptr, graph.indices, i, row_b)
            kern.row(i, row_c)
            for j in targets:
                if int(row_b[j]) != int(row_c[j]):
                    bad.append(
                        f"{_fmt_digits(spec.digits_at(i), spec)}|"
                        f"{_fmt_digits(spec.digits_at(j), spec)}:"
                        f" closed={int(row_c[j])} bfs={int(row_b[j])}"
                    )
            if len(bad) >= MAX_COUNTEREXAMPLES:
                break
        return bad, f"{len(pairs)} sampled pairs (seed {seed})"

    add("distance_vs_bfs", chk_distance)

    # -- layer histogram DP vs BFS layers from the root
    def chk_layers():
        dp = metrics.layer_counts(spec).counts
        bincount = np.bincount(root_row[root_row >= 0], minlength=spec.k + 1)
        observed = tuple(int(c) for c in bincount)
        bad = [] if observed == dp else [f"dp={dp} bfs={observed}"]
        return bad, f"layers {list(dp)}"

    add("layer_histogram", chk_layers)

    if not sampled:
        # -- radius/diameter against the closed forms
        def chk_radius_diameter():
            r, d = int(bfs_ecc.min()), int(bfs_ecc.max())
            bad = []
            if r != metrics.radius(spec):
                bad.append(f"radius bfs={r} closed={metrics.radius(spec)}")
            if d != metrics.diameter(spec):
                bad.append(f"diameter bfs={d} closed={metrics.diameter(spec)}")
            if int(bfs_ecc[0]) != spec.k:
                bad.append(f"root eccentricity {int(bfs_ecc[0])} != {spec.k}")
            return bad, f"radius {r}, diameter {d}"

        add("radius_diameter", chk_radius_diameter)

        # -- eccentricity by closed-form sweep vs BFS
        def chk_ecc_scan():
            diff = np.nonzero(bfs_ecc != closed_ecc)[0]
            bad = [
                f"{_fmt_digits(spec.digits_at(int(i)), spec)}:"
                f" scan={int(closed_ecc[i])} bfs={int(bfs_ecc[i])}"
                for i in diff[:MAX_COUNTEREXAMPLES]
            ]
            return bad, f"{n} vertices"

        add("eccentricity_scan_vs_bfs", chk_ecc_scan)

        # -- the stated eccentricity formula: exact on all-radix-2 members,
        #    a discrepancy census elsewhere
        binomial = all(r == 2 for r in spec.radices)

        def chk_ecc_formula():
            bad = []
            for i, lab in enumerate(spec.labels()):
                stated = metrics.eccentricity_formula(lab)
                if stated != int(bfs_ecc[i]):
                    bad.append(f"{format_label(lab)}: stated={stated} true={int(bfs_ecc[i])}")
            detail = (
                "exact on an all-radix-2 member"
                if binomial
                else f"{len(bad)} stated-value discrepancies (census, informational)"
            )
            return bad, detail

        add("eccentricity_formula_census", chk_ecc_formula, info=not binomial)

    # -- routes: valid hops, optimal length
    def chk_routing():
        bad = []
        checked = 0
        if n <= route_limit:
            pair_iter = combinations(range(n), 2)
            mode = f"all {n * (n - 1) // 2} pairs"
        else:
            rng = random.Random(seed)
            pair_iter = iter(
                tuple(rng.sample(range(n), 2)) for _ in range(sample_pairs)
            )
            mode = f"{sample_pairs} sampled pairs (seed {seed})"
        row_b = np.empty(n, dtype=np.int32)
        truth_cache: dict[int, np.ndarray] = {}
        for i, j in pair_iter:
            xi = Label(spec.digits_at(i), spec)
            yj = Label(spec.digits_at(j), spec)
            path = routing.route(xi, yj)
            offending = routing.validate_path(path)
            if bfs_rows is not None:
                true_dist = int(bfs_rows[i, j])
            else:
                if i not in truth_cache:
                    kernels.bfs_distances(graph.indptr, graph.indices, i, row_b)
                    truth_cache[i] = row_b.copy()
                true_dist = int(truth_cache[i][j])
            closed = metrics.distance(xi, yj).value
            if offending is not None:
                bad.append(f"{format_label(xi)}|{format_label(yj)}: bad hop at {offending}")
            elif not path.edge_count == closed == true_dist:
                bad.append(
                    f"{format_label(xi)}|{format_label(yj)}:"
                    f" route={path.edge_count} closed={closed} bfs={true_dist}"
                )
            checked += 1
            if len(bad) >= MAX_COUNTEREXAMPLES:
                break
        return bad, mode

    add("route_validity_optimality", chk_routing)

    # -- digit-class conjugation is a graph automorphism on all-radix-2 members
    if all(r == 2 for r in spec.radices):

        def chk_conjugation():
            pair_edges = stream.pair_set()
            mapped = set()
            for u, v, _ in stream:
                cu, cv = conjugate(u).digits, conjugate(v).digits
                mapped.add((cu, cv) if cu < cv else (cv, cu))
            diff = pair_edges ^ mapped
            bad = [f"{_fmt_digits(u, spec)}--{_fmt_digits(v, spec)}" for u, v in sorted(diff)]
            return bad, f"{len(pair_edges)} edges mapped"

        add("binomial_conjugation_automorphism", chk_conjugation)

    return report


def load_edgelist(text: str, spec: RadixSpec) -> list[tuple[Label, Label]]:
    """Parse the tab-separated edge-list export back into label pairs."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two tab-separated labels")
        out.append((parse_label(parts[0], spec), parse_label(parts[1], spec)))
    return out


_DOT_EDGE = re.compile(r'"([^"]+)"\s*--\s*"([^"]+)"')


def load_dot(text: str, spec: RadixSpec) -> list[tuple[Label, Label]]:
    """Parse the DOT export back into label pairs."""
    return [(parse_label(a, spec), parse_label(b, spec)) for a, b in _DOT_EDGE.findall(text)]
