"""Verification suites: each registered suite checks one structural claim
about the visibility invariants on a family of concrete instances.

A suite produces one record per instance.  Records never hide a failure:
an instance that cannot be solved within the configured caps is reported
as skipped-cap, everything else is pass or fail by recomputation.  Where a
claim has a constructive side (an explicit witness set), the suite builds
the witness and runs the definitional checker on it rather than trusting
the equality alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable

from .errors import CapExceeded, WitnessError
from .generators import _prufer_edges
from .graph import (
    DEFAULT_ALPHA_CAP,
    Graph,
    girth,
    independence_number,
    is_independent_set,
    leaf_set,
    min_degree,
)
from .products import ProductGraph, cartesian_product, k_fold_product, lower_bound_witness, over_visible_witness
from .solvers import (
    DEFAULT_BP_CAP,
    DEFAULT_N_CAP,
    DEFAULT_ORACLE_CAP,
    max_independent_total_mv,
    max_mv,
    max_total_mv,
    mut_is_zero,
    naive_oracle,
)
from .specs import build, graph_of
from .visibility import bypass_set, is_bypass_vertex, is_mv_set, is_total_mv_set


@dataclass(frozen=True)
class SuiteOptions:
    """Shared knobs: seed and count drive the randomized corpora, max_n
    bounds instance sizes, the caps mirror the solver flags."""

    seed: int = 0
    count: int = 20
    max_n: int = 12
    bp_cap: int = DEFAULT_BP_CAP
    n_cap: int = DEFAULT_N_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    alpha_cap: int = DEFAULT_ALPHA_CAP


@dataclass(frozen=True)
class VerificationRecord:
    theorem_id: str
    instance: str
    expected: str
    observed: str
    status: str  # pass | fail | skipped-cap

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
        }


_SUITES: dict[str, tuple[str, Callable[[SuiteOptions], list[VerificationRecord]]]] = {}


def _suite(theorem_id: str, description: str):
    def register(fn):
        _SUITES[theorem_id] = (description, fn)
        return fn

    return register


def suite_ids() -> list[str]:
    return list(_SUITES)


def describe_suites() -> dict[str, str]:
    return {tid: desc for tid, (desc, _) in _SUITES.items()}


def run_suite(theorem_id: str, opts: SuiteOptions | None = None) -> list[VerificationRecord]:
    if theorem_id not in _SUITES:
        known = ", ".join(_SUITES)
        raise KeyError(f"unknown suite {theorem_id!r}; known suites: {known}")
    _, fn = _SUITES[theorem_id]
    return fn(opts or SuiteOptions())


def run_all(opts: SuiteOptions | None = None) -> list[VerificationRecord]:
    opts = opts or SuiteOptions()
    records: list[VerificationRecord] = []
    for _, fn in _SUITES.values():
        records.extend(fn(opts))
    return records


def _rec(tid: str, instance: str, expected: str, observed: str, ok: bool) -> VerificationRecord:
    return VerificationRecord(tid, instance, expected, observed, "pass" if ok else "fail")


def _try(records: list[VerificationRecord], tid: str, instance: str, expected: str, thunk) -> None:
    # thunk() -> (observed, ok); CapExceeded becomes a skipped-cap record.
    try:
        observed, ok = thunk()
    except CapExceeded as exc:
        records.append(VerificationRecord(tid, instance, expected, f"cap exceeded: {exc}", "skipped-cap"))
        return
    records.append(_rec(tid, instance, expected, observed, ok))


# -- corpora -----------------------------------------------------------------

_NAMED_SPECS = (
    "path:2", "path:3", "path:4", "path:5", "path:7", "path:9", "path:12",
    "cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7", "cycle:9", "cycle:12",
    "complete:2", "complete:3", "complete:4", "complete:5", "complete:6", "complete:8",
    "biclique:2,2", "biclique:2,3", "biclique:3,3", "biclique:3,4", "biclique:4,4",
    "biclique:4,5", "biclique:5,5", "biclique:1,4",
    "star:2", "star:3", "star:4", "star:6",
    "theta:1,2", "theta:1,3", "theta:1,4", "theta:1,5", "theta:2,2", "theta:2,3",
    "theta:2,2,2", "theta:2,2,3", "theta:2,2,4", "theta:1,2,2", "theta:2,3,4",
    "theta:3,3,3", "theta:2,2,2,3",
    "gencomplete:2", "gencomplete:1,1", "gencomplete:1,2", "gencomplete:2,2",
    "gencomplete:2,3", "gencomplete:3,3", "gencomplete:1,1,1", "gencomplete:1,2,3",
    "gm:1", "gm:2", "gm:3",
    "petersen", "fig1", "fig2",
    "randomtree:6,1", "randomtree:8,2", "randomtree:10,3", "randomtree:12,4",
)


@lru_cache(maxsize=None)
def named_corpus(max_n: int = 12) -> tuple[Graph, ...]:
    """One instance of every generator family, orders capped at max_n."""
    graphs = []
    for spec in _NAMED_SPECS:
        g = graph_of(build(spec))
        if g.order <= max_n:
            graphs.append(g)
    return tuple(graphs)


def random_connected_graph(n: int, seed: int) -> Graph:
    """Seeded connected graph: a random tree plus extra edges at rate 0.3."""
    rng = random.Random(f"mutvis:{n}:{seed}")
    edges = set(_prufer_edges(rng, n)) if n >= 2 else set()
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < 0.3:
            edges.add((u, v))
    return Graph(n, sorted(edges), name=f"random:{n},{seed}")


@lru_cache(maxsize=None)
def random_corpus(count: int = 30, max_n: int = 10, seed: int = 0) -> tuple[Graph, ...]:
    span = max_n - 2 + 1
    return tuple(
        random_connected_graph(2 + (i % span), seed + i) for i in range(count)
    )


@lru_cache(maxsize=None)
def tree_corpus(count: int = 12, lo: int = 2, hi: int = 9, seed: int = 0) -> tuple[Graph, ...]:
    from .generators import random_tree

    span = hi - lo + 1
    return tuple(random_tree(lo + (i % span), seed + i) for i in range(count))


def _pool(specs: Iterable[str]) -> list[Graph]:
    return [graph_of(build(s)) for s in specs]


def _pair_name(a: Graph, b: Graph) -> str:
    return f"{a.name} x {b.name}"


# -- single-graph structure suites -------------------------------------------


@_suite("prop:for-trees", "the leaves of a tree form a mutual-visibility set and mu equals the leaf count")
def _suite_for_trees(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "prop:for-trees"
    records: list[VerificationRecord] = []
    trees = list(tree_corpus(opts.count, 2, 9, opts.seed)) + _pool(["path:5", "path:2", "star:4"])
    for t in trees:
        leaves = leaf_set(t)

        def thunk(t=t, leaves=leaves):
            if not is_mv_set(t, leaves):
                return ("leaf set fails the mutual-visibility check", False)
            value = max_mv(t, cap=opts.n_cap).value
            ok = value == len(leaves)
            if t.order >= 3:
                # On trees the total and independent-total invariants match
                # the leaf count as well; on two vertices they split.
                mut = max_total_mv(t, cap=opts.bp_cap).value
                muit = max_independent_total_mv(t, cap=opts.bp_cap).value
                ok = ok and mut == len(leaves) and muit == len(leaves)
                return (f"mu={value}, mut={mut}, independent mut={muit}, leaves={len(leaves)}", ok)
            return (f"mu={value}, leaves={len(leaves)}", ok)

        _try(records, tid, t.name, "mu == leaf count, leaf set is a mutual-visibility set", thunk)
    return records


@_suite("prop:subsets-are-ok", "subsets of (total) mutual-visibility sets keep the property")
def _suite_subsets(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "prop:subsets-are-ok"
    records: list[VerificationRecord] = []
    rng = random.Random(opts.seed)
    for g in named_corpus(opts.max_n):

        def thunk(g=g):
            w_total = max_total_mv(g, cap=opts.bp_cap).witness
            for _ in range(opts.count):
                sub = frozenset(v for v in w_total if rng.random() < 0.5)
                if not is_total_mv_set(g, sub):
                    return (f"total subset {sorted(sub)} fails", False)
            w_mv = max_mv(g, cap=opts.n_cap).witness
            for _ in range(opts.count):
                sub = frozenset(v for v in w_mv if rng.random() < 0.5)
                if not is_mv_set(g, sub):
                    return (f"mutual subset {sorted(sub)} fails", False)
            return (f"{2 * opts.count} sampled subsets pass", True)

        _try(records, tid, g.name, "sampled witness subsets stay feasible", thunk)
    return records


@_suite("lem:mut-0-iff-singletons", "the total invariant vanishes exactly when every singleton fails")
def _suite_singletons(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "lem:mut-0-iff-singletons"
    records: list[VerificationRecord] = []
    for g in named_corpus(opts.max_n):

        def thunk(g=g):
            zero = max_total_mv(g, cap=opts.bp_cap).value == 0
            no_single = all(not is_total_mv_set(g, {x}) for x in range(g.order))
            return (f"mut==0 is {zero}, all singletons fail is {no_single}", zero == no_single)

        _try(records, tid, g.name, "mut == 0 iff no singleton works", thunk)
    return records


@_suite("lem:bypass-vertex-is-good", "a singleton is total mutual-visible exactly when its vertex is bypass")
def _suite_singleton_bypass(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "lem:bypass-vertex-is-good"
    records = []
    for g in named_corpus(opts.max_n):
        if g.order < 2:
            continue
        bad = [
            u for u in range(g.order)
            if is_total_mv_set(g, {u}) != is_bypass_vertex(g, u)
        ]
        records.append(_rec(
            tid, g.name, "singleton check agrees with bypass check on every vertex",
            "all vertices agree" if not bad else f"disagreement at {bad}", not bad,
        ))
    return records


@_suite("lem:non-bypass-in-not-in", "no total mutual-visibility set contains a non-bypass vertex")
def _suite_non_bypass(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "lem:non-bypass-in-not-in"
    records: list[VerificationRecord] = []
    for g in named_corpus(opts.max_n):
        if g.order < 2:
            continue

        def thunk(g=g):
            non_bp = sorted(set(range(g.order)) - bypass_set(g))
            if any(is_total_mv_set(g, {u}) for u in non_bp):
                return ("some non-bypass singleton passes", False)
            if g.order <= opts.oracle_cap:
                w = naive_oracle(g, "mut", cap=opts.oracle_cap).witness
                hit = sorted(set(w) & set(non_bp))
                if hit:
                    return (f"unrestricted-search witness contains {hit}", False)
            return ("singletons and unrestricted witness avoid non-bypass vertices", True)

        _try(records, tid, g.name, "non-bypass vertices appear in no witness", thunk)
    return records


@_suite("eq:bounded-by-bp", "the total invariant never exceeds the bypass count")
def _suite_bp_bound(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "eq:bounded-by-bp"
    records: list[VerificationRecord] = []
    for g in named_corpus(opts.max_n):

        def thunk(g=g):
            value = max_total_mv(g, cap=opts.bp_cap).value
            bp = len(bypass_set(g))
            return (f"mut={value}, bp={bp}", value <= bp)

        _try(records, tid, g.name, "mut <= bp", thunk)
    return records


@_suite("thm:main-characterization-for-0", "the total invariant vanishes exactly when there is no bypass vertex")
def _suite_zero_char(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "thm:main-characterization-for-0"
    records: list[VerificationRecord] = []
    corpus = list(named_corpus(opts.max_n)) + list(random_corpus(opts.count, 10, opts.seed))
    for g in corpus:
        if g.order < 2:
            continue

        def thunk(g=g):
            zero = max_total_mv(g, cap=opts.bp_cap).value == 0
            bp = len(bypass_set(g))
            return (f"mut==0 is {zero}, bp={bp}", zero == (bp == 0))

        _try(records, tid, g.name, "mut == 0 iff bp == 0", thunk)
    return records


@_suite("cor:girth", "without short cycles, the total invariant vanishes exactly on min degree >= 2")
def _suite_girth(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "cor:girth"
    records = []
    corpus = list(named_corpus(opts.max_n)) + list(tree_corpus(opts.count, 2, 9, opts.seed))
    for g in corpus:
        if g.order < 2:
            continue
        gg = girth(g)
        if gg is not None and gg < 5:
            continue
        zero = mut_is_zero(g)
        deg = min_degree(g)
        records.append(_rec(
            tid, g.name, "mut == 0 iff min degree >= 2 (girth >= 5)",
            f"girth={gg if gg is not None else 'acyclic'}, mut==0 is {zero}, min degree {deg}",
            zero == (deg >= 2),
        ))
    return records


def _theta_vectors(budget: int) -> list[tuple[int, ...]]:
    found: list[tuple[int, ...]] = []

    def grow(prefix: list[int], remaining: int) -> None:
        if len(prefix) >= 2:
            found.append(tuple(prefix))
        lo = max(prefix[-1], 2) if len(prefix) == 1 else prefix[-1]
        for p in range(lo, remaining + 1):
            prefix.append(p)
            grow(prefix, remaining - p)
            prefix.pop()

    for p1 in range(1, budget + 1):
        grow([p1], budget - p1)
    return found


def _theta_zero_expected(lengths: tuple[int, ...]) -> bool:
    p1, p2 = lengths[0], lengths[1]
    return (p1 == 1 and p2 >= 4) or (p1 == 2 and p2 >= 3) or p1 >= 3


@_suite("cor:theta", "the hub-and-paths graphs with vanishing total invariant are exactly three length patterns")
def _suite_theta(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "cor:theta"
    records = []
    for lengths in _theta_vectors(min(opts.max_n, 12)):
        g = graph_of(build("theta:" + ",".join(map(str, lengths))))
        zero = mut_is_zero(g)
        want = _theta_zero_expected(lengths)
        records.append(_rec(
            tid, g.name, f"mut == 0 expected {want}",
            f"mut == 0 observed {zero}", zero == want,
        ))
    return records


# -- product suites ----------------------------------------------------------


def _mut_value(g: Graph, opts: SuiteOptions) -> int:
    return max_total_mv(g, cap=opts.bp_cap).value


@_suite("thm:cp", "a two-factor product has vanishing total invariant exactly when a factor does")
def _suite_cp_zero(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "thm:cp"
    records: list[VerificationRecord] = []
    pool = _pool([
        "complete:2", "complete:3", "path:3", "path:4", "cycle:3", "cycle:4",
        "cycle:5", "cycle:6", "star:3", "theta:2,2,2", "fig2",
    ])
    for a, b in combinations_with_replacement(pool, 2):

        def thunk(a=a, b=b):
            p = cartesian_product(a, b)
            pv = max_total_mv(p.graph, cap=opts.bp_cap).value
            av = _mut_value(a, opts)
            bv = _mut_value(b, opts)
            ok = (pv == 0) == (av == 0 or bv == 0)
            return (f"mut(product)={pv}, factors {av} and {bv}", ok)

        _try(records, tid, _pair_name(a, b), "product vanishes iff some factor vanishes", thunk)
    return records


@_suite("cor:cp", "a multi-factor product has vanishing total invariant exactly when some factor does")
def _suite_cp_zero_k(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "cor:cp"
    records: list[VerificationRecord] = []
    pool = _pool(["complete:2", "complete:3", "path:3", "cycle:5", "cycle:3"])
    for triple in combinations_with_replacement(pool, 3):

        def thunk(triple=triple):
            p = k_fold_product(list(triple))
            pv = max_total_mv(p.graph, cap=opts.bp_cap).value
            vals = [_mut_value(f, opts) for f in triple]
            ok = (pv == 0) == any(v == 0 for v in vals)
            return (f"mut(product)={pv}, factors {vals}", ok)

        name = " x ".join(f.name for f in triple)
        _try(records, tid, name, "product vanishes iff some factor vanishes", thunk)
    return records


@_suite("thm:cp-bounds", "the product total invariant sits between the mixed products and the layer bound")
def _suite_cp_bounds(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "thm:cp-bounds"
    records: list[VerificationRecord] = []
    pool = _pool([
        "complete:2", "complete:3", "complete:4", "path:3", "path:4",
        "cycle:4", "star:3", "biclique:2,2", "theta:2,2,2",
    ])
    usable = []
    for g in pool:
        if max_independent_total_mv(g, cap=opts.bp_cap).value >= 1:
            usable.append(g)
    for a, b in combinations_with_replacement(usable, 2):

        def thunk(a=a, b=b):
            mg = _mut_value(a, opts)
            mh = _mut_value(b, opts)
            ig = max_independent_total_mv(a, cap=opts.bp_cap).value
            ih = max_independent_total_mv(b, cap=opts.bp_cap).value
            p = cartesian_product(a, b)
            pv = max_total_mv(p.graph, cap=opts.bp_cap).value
            lo = max(ih * mg, ig * mh)
            hi = min(mg * b.order, mh * a.order)
            return (f"{lo} <= {pv} <= {hi}", lo <= pv <= hi)

        _try(records, tid, _pair_name(a, b), "lower and upper product bounds hold", thunk)
    return records


@_suite("prop:both-factors-mut-1", "a product with total invariant 1 forces both factors to 1")
def _suite_both_one(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "prop:both-factors-mut-1"
    records: list[VerificationRecord] = []
    pairs = [
        ("fig1", "fig1"),
        ("theta:2,2,4", "theta:2,2,4"),
        ("complete:3", "fig1"),
        ("cycle:4", "complete:2"),
        ("biclique:3,3", "complete:3"),
        ("path:4", "theta:2,2,4"),
    ]
    for sa, sb in pairs:
        a = graph_of(build(sa))
        b = graph_of(build(sb))

        def thunk(a=a, b=b):
            ra = max_total_mv(a, cap=opts.bp_cap)
            rb = max_total_mv(b, cap=opts.bp_cap)
            p = cartesian_product(a, b)
            pv = max_total_mv(p.graph, cap=opts.bp_cap).value
            ok = pv != 1 or (ra.value == 1 and rb.value == 1)
            # The two-point construction behind the claim: two witness
            # vertices of one factor in a single layer stay visible.
            if ra.value >= 2 and rb.value >= 1:
                two = {p.encode((ra.witness[0], rb.witness[0])),
                       p.encode((ra.witness[1], rb.witness[0]))}
                ok = ok and is_total_mv_set(p.graph, two) and pv >= 2
            return (f"mut(product)={pv}, factors {ra.value} and {rb.value}", ok)

        _try(records, tid, _pair_name(a, b), "product value 1 implies both factors 1", thunk)
    return records


@_suite("prop:cp-complete-by-complete", "products of complete graphs take the larger order as total invariant")
def _suite_complete_product(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "prop:cp-complete-by-complete"
    records: list[VerificationRecord] = []
    for n in range(2, 6):
        for m in range(2, 6):

            def thunk(n=n, m=m):
                p = cartesian_product(graph_of(build(f"complete:{n}")), graph_of(build(f"complete:{m}")))
                pv = max_total_mv(p.graph, cap=opts.bp_cap).value
                return (f"mut={pv}", pv == max(n, m))

            _try(records, tid, f"complete:{n} x complete:{m}", f"mut == max({n},{m})", thunk)
    return records


@_suite("thm:cp-cycle-by-complete-graphs", "cycle-by-complete products: invariant n for short cycles, 0 from girth 5 on")
def _suite_cycle_complete(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "thm:cp-cycle-by-complete-graphs"
    records: list[VerificationRecord] = []
    for s in range(3, 8):
        for n in range(3, 6):
            p = cartesian_product(graph_of(build(f"cycle:{s}")), graph_of(build(f"complete:{n}")))
            if s >= 5:
                zero = mut_is_zero(p.graph)
                records.append(_rec(
                    tid, f"cycle:{s} x complete:{n}", "mut == 0 (no bypass vertex)",
                    f"bp={len(bypass_set(p.graph))}", zero,
                ))
                continue

            def thunk(p=p, n=n):
                pv = max_total_mv(p.graph, cap=opts.bp_cap).value
                return (f"mut={pv}", pv == n)

            _try(records, tid, f"cycle:{s} x complete:{n}", f"mut == {n}", thunk)
    return records


@_suite("thm:cp-tree-by-graphs", "tree-by-graph products multiply the factors' total invariants")
def _suite_tree_product(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "thm:cp-tree-by-graphs"
    records: list[VerificationRecord] = []
    trees = [t for t in tree_corpus(min(opts.count, 8), 3, 8, opts.seed + 17)]
    trees.append(graph_of(build("star:5")))
    pool = _pool(["complete:2", "complete:3", "cycle:3", "cycle:4", "theta:2,2,4", "fig1"])
    for t in trees:
        for h in pool:

            def thunk(t=t, h=h):
                p = cartesian_product(t, h)
                pv = max_total_mv(p.graph, cap=opts.bp_cap).value
                tv = _mut_value(t, opts)
                hv = _mut_value(h, opts)
                return (f"mut(product)={pv}, factors {tv} and {hv}", pv == tv * hv)

            _try(records, tid, _pair_name(t, h), "product invariant is the factor product", thunk)
    return records


@_suite("cor:tree-by-complete", "tree-by-complete products scale the tree invariant by the clique order")
def _suite_tree_complete(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "cor:tree-by-complete"
    records: list[VerificationRecord] = []
    trees = list(tree_corpus(6, 3, 7, opts.seed + 29)) + _pool(["star:4", "path:5"])
    for t in trees:
        leaves = leaf_set(t)
        for n in range(2, 5):

            def thunk(t=t, n=n, leaves=leaves):
                kn = graph_of(build(f"complete:{n}"))
                p = cartesian_product(t, kn)
                image = lower_bound_witness(p, leaves, range(n))
                pv = max_total_mv(p.graph, cap=opts.bp_cap).value
                ok = len(image) == n * len(leaves) and pv == n * _mut_value(t, opts)
                return (f"mut(product)={pv}, witness image {len(image)}", ok)

            _try(records, tid, f"{t.name} x complete:{n}", "product invariant is n times the tree invariant", thunk)
    return records


@_suite("thm:cp-generalized-complete-graphs", "apex-plus-cliques products: bound (n-1)(m-1), tight exactly for stars")
def _suite_gencomplete_product(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "thm:cp-generalized-complete-graphs"
    records: list[VerificationRecord] = []
    shapes = [(1, 1), (2, 2), (1, 2), (1, 1, 1), (3, 3), (2, 3), (1, 1, 2), (1, 3)]
    pool = [graph_of(build("gencomplete:" + ",".join(map(str, s)))) for s in shapes]
    stars = {g.name: all(c == 1 for c in s) for g, s in zip(pool, shapes)}
    for a, b in combinations_with_replacement(pool, 2):

        def thunk(a=a, b=b):
            bound = (a.order - 1) * (b.order - 1)
            p = cartesian_product(a, b)
            bp_set = bypass_set(p.graph)
            tight = len(bp_set) == bound and is_total_mv_set(p.graph, bp_set)
            want_tight = stars[a.name] or stars[b.name]
            ok = len(bp_set) <= bound and tight == want_tight
            if a.order <= 5 and b.order <= 5:
                pv = max_total_mv(p.graph, cap=opts.bp_cap).value
                ok = ok and pv <= bound and (pv == bound) == want_tight
                return (f"mut={pv}, bound={bound}, tight={tight}", ok)
            return (f"bp(product)={len(bp_set)}, bound={bound}, tight={tight}", ok)

        _try(records, tid, _pair_name(a, b), "bounded by (n-1)(m-1), equality exactly for a star factor", thunk)
    return records


@_suite("the:over-visible", "paired spare bypass vertices push the product invariant past the factor product")
def _suite_over_visible(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "the:over-visible"
    records: list[VerificationRecord] = []
    # (spec_g, base, extras) triples: base is a largest total mutual-visibility
    # set, base+extras an independent set of bypass vertices.
    setups = {
        "theta:2,2,4": ({2}, [3]),
        "theta:2,2,2,3": ({2, 3}, [4]),
        "gm:1": ({0, 3, 4}, [5]),
        "gm:2": ({0, 4, 5, 6}, [7, 8]),
    }
    instances = [
        ("theta:2,2,4", "theta:2,2,4"),
        ("theta:2,2,2,3", "theta:2,2,2,3"),
        ("gm:1", "gm:1"),
        ("gm:2", "gm:2"),
        ("theta:2,2,4", "gm:1"),
    ]
    for sa, sb in instances:
        a = graph_of(build(sa))
        b = graph_of(build(sb))
        s_a, e_a = setups[sa]
        s_b, e_b = setups[sb]
        k = min(len(e_a), len(e_b))

        def thunk(a=a, b=b, s_a=s_a, e_a=e_a, s_b=s_b, e_b=e_b, k=k):
            ma = _mut_value(a, opts)
            mb = _mut_value(b, opts)
            if len(s_a) != ma or len(s_b) != mb:
                return ("configured base sets are not largest", False)
            p = cartesian_product(a, b)
            try:
                witness = over_visible_witness(p, s_a, e_a[:k], s_b, e_b[:k])
            except WitnessError as exc:
                return (f"witness construction failed: {exc}", False)
            ok = len(witness) == ma * mb + k and len(witness) > ma * mb
            observed = f"verified witness of size {len(witness)} > {ma * mb}"
            if len(bypass_set(p.graph)) <= opts.bp_cap:
                pv = max_total_mv(p.graph, cap=opts.bp_cap).value
                ok = ok and pv > ma * mb
                observed += f", exact mut={pv}"
            return (observed, ok)

        _try(records, tid, _pair_name(a, b), "product exceeds the factor product", thunk)
    return records


# -- family suites -----------------------------------------------------------


@_suite("fam:theta-i", "uniform short-path hub graphs: i bypass vertices, total invariant i-1")
def _suite_theta_i(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "fam:theta-i"
    records: list[VerificationRecord] = []
    instances = [
        (2, (2, 2, 3)), (2, (2, 2, 4)), (2, (2, 2, 5)), (2, (2, 2, 3, 3)),
        (3, (2, 2, 2, 3)), (3, (2, 2, 2, 4)), (3, (2, 2, 2, 3, 3)),
        (4, (2, 2, 2, 2, 3)), (4, (2, 2, 2, 2, 3, 3)),
    ]
    for i, lengths in instances:
        g = graph_of(build("theta:" + ",".join(map(str, lengths))))

        def thunk(g=g, i=i):
            middles = frozenset(range(2, 2 + i))
            bp_set = bypass_set(g)
            if bp_set != middles:
                return (f"bypass set {sorted(bp_set)} is not the short-path middles", False)
            if not is_independent_set(g, bp_set):
                return ("bypass set is not independent", False)
            if is_total_mv_set(g, bp_set):
                return ("full bypass set unexpectedly passes", False)
            for v in middles:
                if not is_total_mv_set(g, middles - {v}):
                    return (f"bypass set minus {v} fails", False)
            value = max_total_mv(g, cap=opts.bp_cap).value
            ivalue = max_independent_total_mv(g, cap=opts.bp_cap).value
            return (f"bp={len(bp_set)}, mut={value}, independent mut={ivalue}",
                    value == i - 1 and ivalue == i - 1)

        _try(records, tid, g.name, f"bp == {i} and mut == {i - 1}", thunk)
    return records


@_suite("fam:gm", "the rung-gadget family: bp 2m+2, total invariant m+2, spare bypass slack m")
def _suite_gm(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "fam:gm"
    records: list[VerificationRecord] = []
    for m in range(1, 5):
        g = graph_of(build(f"gm:{m}"))

        def thunk(g=g, m=m):
            expected_bp = frozenset({0, m + 2}) | frozenset(range(m + 3, 3 * m + 3))
            bp_set = bypass_set(g)
            if bp_set != expected_bp:
                return (f"bypass set {sorted(bp_set)} differs", False)
            if not is_independent_set(g, bp_set):
                return ("bypass set is not independent", False)
            if g.degree(0) != 1 or g.degree(m + 2) != 1:
                return ("pendant ends have the wrong degree", False)
            if any(g.degree(v) != 2 for v in range(m + 3, 3 * m + 3)):
                return ("rung vertices have the wrong degree", False)
            witness = frozenset({0, m + 2}) | frozenset(range(m + 3, 2 * m + 3))
            if not (is_total_mv_set(g, witness) and is_independent_set(g, witness)):
                return ("documented witness fails", False)
            value = max_total_mv(g, cap=opts.bp_cap).value
            ivalue = max_independent_total_mv(g, cap=opts.bp_cap).value
            ok = value == m + 2 and ivalue == m + 2 and len(bp_set) - value == m
            return (f"bp={len(bp_set)}, mut={value}, independent mut={ivalue}", ok)

        _try(records, tid, g.name, f"bp == {2 * m + 2} and mut == {m + 2}", thunk)
    return records


@_suite("fam:sporadic", "pinned values for the fixed example graphs and small complete bipartite graphs")
def _suite_sporadic(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "fam:sporadic"
    records: list[VerificationRecord] = []

    def add(instance, expected, thunk):
        _try(records, tid, instance, expected, thunk)

    def fig1_check():
        g = graph_of(build("fig1"))
        value = max_total_mv(g, cap=opts.bp_cap).value
        bp_set = bypass_set(g)
        return (f"mut={value}, bypass={sorted(bp_set)}", value == 1 and bp_set == {5, 6})

    add("fig1", "mut == 1 and bypass set {5, 6}", fig1_check)

    def fig2_check():
        g = graph_of(build("fig2"))
        return (f"mut={max_total_mv(g, cap=opts.bp_cap).value}, bp={len(bypass_set(g))}",
                max_total_mv(g, cap=opts.bp_cap).value == 0 and not bypass_set(g))

    add("fig2", "mut == 0 and bp == 0", fig2_check)

    def petersen_check():
        g = graph_of(build("petersen"))
        value = max_total_mv(g, cap=opts.bp_cap).value
        return (f"mut={value}, girth={girth(g)}, min degree {min_degree(g)}",
                value == 0 and girth(g) == 5 and min_degree(g) == 3)

    add("petersen", "mut == 0, girth 5, min degree 3", petersen_check)

    for n in range(3, 6):
        for m in range(n, 6):

            def biclique_check(n=n, m=m):
                g = graph_of(build(f"biclique:{n},{m}"))
                value = max_total_mv(g, cap=opts.bp_cap).value
                return (f"mut={value}, bp={len(bypass_set(g))}",
                        value == n + m - 2 and len(bypass_set(g)) == n + m)

            add(f"biclique:{n},{m}", f"mut == {n + m - 2} and bp == {n + m}", biclique_check)

    def small_biclique_check():
        # Below the 3,3 threshold the bypass bound is still n+m but the
        # invariant drops differently; pin the computed truth.
        g = graph_of(build("theta:2,2,2"))
        value = max_total_mv(g, cap=opts.bp_cap).value
        return (f"mut={value}, bp={len(bypass_set(g))}",
                value == 3 and len(bypass_set(g)) == 5)

    add("theta:2,2,2", "mut == 3 and bp == 5 (equals biclique:2,3)", small_biclique_check)

    for n in range(3, 7):

        def complete_check(n=n):
            g = graph_of(build(f"complete:{n}"))
            mu = max_mv(g, cap=opts.n_cap).value
            mut = max_total_mv(g, cap=opts.bp_cap).value
            muit = max_independent_total_mv(g, cap=opts.bp_cap).value
            return (f"mu={mu}, mut={mut}, independent mut={muit}",
                    mu == n and mut == n and muit == 1)

        add(f"complete:{n}", f"mu == mut == {n}, independent mut == 1", complete_check)

    def gencomplete_check():
        g = graph_of(build("gencomplete:2,2"))
        value = max_total_mv(g, cap=opts.bp_cap).value
        return (f"mut={value}", value == g.order - 1)

    add("gencomplete:2,2", "mut == order - 1 for a non-trivial instance", gencomplete_check)
    return records


@_suite("fam:sandwich", "leaf count <= independent total invariant <= min(total invariant, independence number)")
def _suite_sandwich(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "fam:sandwich"
    records: list[VerificationRecord] = []
    corpus = [g for g in named_corpus(opts.max_n) if g.order >= 3]
    for g in corpus:

        def thunk(g=g):
            leaves = len(leaf_set(g))
            muit = max_independent_total_mv(g, cap=opts.bp_cap).value
            mut = max_total_mv(g, cap=opts.bp_cap).value
            alpha = independence_number(g, cap=opts.alpha_cap)
            ok = leaves <= muit <= min(mut, alpha)
            return (f"{leaves} <= {muit} <= min({mut}, {alpha})", ok)

        _try(records, tid, g.name, "the chain holds", thunk)
    return records


@_suite("fam:oracle", "pruned solvers agree with the exhaustive reference search")
def _suite_oracle(opts: SuiteOptions) -> list[VerificationRecord]:
    tid = "fam:oracle"
    records: list[VerificationRecord] = []
    corpus = [g for g in named_corpus(min(opts.max_n, 10))]
    corpus += [g for g in random_corpus(min(opts.count, 12), 8, opts.seed + 5)]
    for g in corpus:
        if g.order > opts.oracle_cap:
            continue

        def thunk(g=g):
            for kind, solver in (
                ("mut", max_total_mv),
                ("muit", max_independent_total_mv),
                ("mu", max_mv),
            ):
                cap = opts.n_cap if kind == "mu" else opts.bp_cap
                fast = solver(g, cap=cap)
                slow = naive_oracle(g, kind, cap=opts.oracle_cap)
                if fast.value != slow.value or fast.witness != slow.witness:
                    return (
                        f"{kind}: search {fast.value} {fast.witness} vs reference {slow.value} {slow.witness}",
                        False,
                    )
            return ("all three invariants and witnesses agree", True)

        _try(records, tid, g.name, "search equals reference on values and witnesses", thunk)
    return records
