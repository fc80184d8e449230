"""End-to-end acceptance gate.

One test per numbered criterion.  Each prints a single
``ACCEPTANCE <n> <slug>: pass|FAIL`` line (run pytest with -s to see
them all) and then asserts, so a red criterion fails its own test with
the collected deviations attached.
"""

from __future__ import annotations

import itertools
import random

from mutvis import (
    biclique,
    build,
    bypass_set,
    cartesian_product,
    complete,
    cycle,
    fig1,
    fig2,
    g_m,
    generalized_complete,
    girth,
    is_bypass_vertex,
    is_independent_set,
    is_mv_set,
    is_total_mv_set,
    leaf_set,
    max_independent_total_mv,
    max_mv,
    max_total_mv,
    min_degree,
    mut_is_zero,
    naive_oracle,
    over_visible_witness,
    petersen,
    random_connected_graph,
    sandwich_check,
    theta,
)
from mutvis.verify import random_corpus, tree_corpus

import reference

PRODUCT_CAP = 64


def _conclude(num: int, slug: str, failures: list[str]) -> None:
    status = "pass" if not failures else f"FAIL ({len(failures)} deviations)"
    print(f"ACCEPTANCE {num} {slug}: {status}")
    assert not failures, "\n".join(failures[:12])


def _mut(g) -> int:
    return max_total_mv(g, cap=PRODUCT_CAP).value


def test_criterion_01_complete_products():
    failures = []
    for n, m in itertools.product(range(2, 6), repeat=2):
        p = cartesian_product(complete(n), complete(m))
        value = _mut(p.graph)
        if value != max(n, m):
            failures.append(f"K{n} x K{m}: got {value}, want {max(n, m)}")
    _conclude(1, "complete-products", failures)


def test_criterion_02_cycle_by_complete():
    failures = []
    for n in (3, 4, 5):
        value = _mut(cartesian_product(cycle(4), complete(n)).graph)
        if value != n:
            failures.append(f"C4 x K{n}: got {value}, want {n}")
    for s, n in itertools.product((5, 6, 7), (3, 4)):
        p = cartesian_product(cycle(s), complete(n))
        if bypass_set(p.graph):
            failures.append(f"C{s} x K{n}: bypass set unexpectedly nonempty")
        elif not mut_is_zero(p.graph):
            failures.append(f"C{s} x K{n}: zero test disagrees with empty bypass set")
    _conclude(2, "cycle-by-complete", failures)


def test_criterion_03_tree_products():
    failures = []
    pool = [
        complete(3), complete(4), cycle(3), cycle(4),
        theta((2, 2, 4)), biclique(3, 3),
    ]
    pool_values = [(h, _mut(h)) for h in pool]
    for t in tree_corpus(20, 3, 8, 0):
        leaves = len(leaf_set(t))
        values = (max_mv(t).value, max_total_mv(t).value,
                  max_independent_total_mv(t).value)
        if values != (leaves, leaves, leaves):
            failures.append(f"{t.name}: invariants {values}, leaf count {leaves}")
            continue
        for h, mut_h in pool_values:
            got = _mut(cartesian_product(t, h).graph)
            if got != leaves * mut_h:
                failures.append(
                    f"{t.name} x {h.name}: got {got}, want {leaves * mut_h}"
                )
    _conclude(3, "tree-products", failures)


def test_criterion_04_zero_characterization(corpus, random_graphs):
    failures = []
    for g in corpus + random_graphs:
        value = max_total_mv(g).value
        no_bypass = not bypass_set(g)
        if (value == 0) != no_bypass:
            failures.append(f"{g.name}: mut={value} but bp={len(bypass_set(g))}")
        if mut_is_zero(g) != no_bypass:
            failures.append(f"{g.name}: mut_is_zero out of line with bypass set")
        if g.order <= 12 and naive_oracle(g, "mut").value != value:
            failures.append(f"{g.name}: oracle disagrees on mut")
    _conclude(4, "zero-characterization", failures)


def test_criterion_05_sporadic_instances():
    failures = []
    f1 = fig1()
    if max_total_mv(f1).value != 1:
        failures.append(f"fig1: mut={max_total_mv(f1).value}, want 1")
    if bypass_set(f1) != frozenset({5, 6}):
        failures.append(f"fig1: bypass set {sorted(bypass_set(f1))}, want [5, 6]")
    if max_total_mv(fig2()).value != 0:
        failures.append("fig2: mut should be 0")
    pet = petersen()
    if (max_total_mv(pet).value, girth(pet), min_degree(pet)) != (0, 5, 3):
        failures.append("petersen: expected mut 0, girth 5, min degree 3")
    for n, m in itertools.product(range(3, 6), repeat=2):
        b = biclique(n, m)
        if max_total_mv(b).value != n + m - 2:
            failures.append(f"{b.name}: mut != {n + m - 2}")
        if len(bypass_set(b)) != n + m:
            failures.append(f"{b.name}: bp != {n + m}")
    _conclude(5, "sporadic-instances", failures)


def _theta_length_vectors(budget: int) -> list[tuple[int, ...]]:
    # valid: non-decreasing, k >= 2, at most one path of length 1
    vectors = []

    def extend(prefix: list[int], used: int) -> None:
        if len(prefix) >= 2:
            vectors.append(tuple(prefix))
        start = max(prefix[-1], 2) if prefix else 1
        for p in range(start, budget - used + 1):
            extend(prefix + [p], used + p)

    extend([], 0)
    return vectors


def test_criterion_06_theta_zero_cases():
    failures = []
    vectors = _theta_length_vectors(12)
    if len(vectors) != 120:
        failures.append(f"enumeration drifted: {len(vectors)} vectors")
    for lengths in vectors:
        g = theta(lengths)
        zero = max_total_mv(g).value == 0
        if zero != (not bypass_set(g)):
            failures.append(f"{g.name}: solver and bypass set disagree")
        p1, p2 = lengths[0], lengths[1]
        expected = p1 >= 3 or (p1 == 2 and p2 >= 3) or (p1 == 1 and p2 >= 4)
        if zero != expected:
            failures.append(f"{g.name}: mut zero is {zero}, corollary says {expected}")
    _conclude(6, "theta-zero-cases", failures)


def _bounded_pairs(count: int):
    # seeded pool of connected graphs on 3..7 vertices with muit >= 1
    found = []
    for attempt in itertools.count():
        g = random_connected_graph(3 + attempt % 5, 1000 + attempt)
        if max_independent_total_mv(g).value >= 1:
            found.append(g)
        if len(found) == 2 * count:
            return list(zip(found[0::2], found[1::2]))


def test_criterion_07_product_bounds():
    failures = []
    for g, h in _bounded_pairs(20):
        mut_g, mut_h = max_total_mv(g).value, max_total_mv(h).value
        muit_g = max_independent_total_mv(g).value
        muit_h = max_independent_total_mv(h).value
        value = _mut(cartesian_product(g, h).graph)
        lo = max(muit_h * mut_g, muit_g * mut_h)
        hi = min(mut_g * h.order, mut_h * g.order)
        if not lo <= value <= hi:
            failures.append(f"{g.name} x {h.name}: {value} outside [{lo}, {hi}]")
    _conclude(7, "product-bounds", failures)


def _clique_partitions(total_max: int) -> list[tuple[int, ...]]:
    shapes = []

    def extend(prefix: list[int], used: int, minimum: int) -> None:
        if len(prefix) >= 2:
            shapes.append(tuple(prefix))
        for c in range(minimum, total_max - used + 1):
            extend(prefix + [c], used + c, c)

    extend([], 0, 1)
    return shapes


def test_criterion_08_generalized_complete_products():
    failures = []
    shapes = _clique_partitions(6)
    if len(shapes) != 23:
        failures.append(f"shape enumeration drifted: {len(shapes)}")
    built = [(s, generalized_complete(s)) for s in shapes]
    for s, g in built:
        if len(bypass_set(g)) != g.order - 1:
            failures.append(f"{g.name}: bypass count != order - 1")
    for (sa, a), (sb, b) in itertools.combinations_with_replacement(built, 2):
        bound = (a.order - 1) * (b.order - 1)
        p = cartesian_product(a, b)
        candidates = bypass_set(p.graph)
        star_factor = set(sa) == {1} or set(sb) == {1}
        # mut <= bp holds for every graph, so bp(product) == bound
        # certifies the upper bound for the whole pair sweep.
        if len(candidates) != bound:
            failures.append(f"{a.name} x {b.name}: bp {len(candidates)} != {bound}")
            continue
        tight = is_total_mv_set(p.graph, candidates)
        if tight != star_factor:
            failures.append(
                f"{a.name} x {b.name}: equality {tight}, star factor {star_factor}"
            )
        if a.order <= 5 and b.order <= 5:
            value = _mut(p.graph)
            if value > bound or (value == bound) != star_factor:
                failures.append(f"{a.name} x {b.name}: exact mut {value} off the bound")
    _conclude(8, "generalized-complete-products", failures)


def test_criterion_09_over_visibility_witnesses():
    failures = []
    t = theta((2, 2, 4))
    p = cartesian_product(t, t)
    witness = over_visible_witness(p, {2}, [3], {2}, [3])
    if len(witness) != 2:
        failures.append(f"theta square: witness size {len(witness)}")
    if sorted(p.decode(v) for v in witness) != [(2, 2), (3, 3)]:
        failures.append("theta square: wrong witness coordinates")
    if not is_total_mv_set(p.graph, witness):
        failures.append("theta square: witness not total mutual-visible")
    dist = reference.floyd_warshall(p.graph)
    if not reference.is_tmv(p.graph, frozenset(witness), dist):
        failures.append("theta square: reference checker rejects the witness")
    if max_total_mv(t).value != 1:
        failures.append("theta factor: mut should be 1")

    g5 = g_m(5)
    big = cartesian_product(g5, g5)
    base = {0, 7} | set(range(8, 13))
    extras = list(range(13, 18))
    w = over_visible_witness(big, base, extras, base, extras)
    if big.graph.order != 324:
        failures.append(f"gm:5 square: order {big.graph.order}")
    if len(w) != 54 or (5 + 2) ** 2 + 5 != 54:
        failures.append(f"gm:5 square: witness size {len(w)}, want 54")
    if not is_total_mv_set(big.graph, w):
        failures.append("gm:5 square: witness not total mutual-visible")
    _conclude(9, "over-visibility-witnesses", failures)


def test_criterion_10_gm_family():
    failures = []
    for m in (1, 2, 3, 4):
        g = g_m(m)
        if len(bypass_set(g)) != 2 * m + 2:
            failures.append(f"{g.name}: bp != {2 * m + 2}")
        if max_total_mv(g).value != m + 2:
            failures.append(f"{g.name}: mut != {m + 2}")
    _conclude(10, "gm-family", failures)


def test_criterion_11_oracle_equivalence(corpus):
    failures = []
    solvers = (
        ("mu", max_mv),
        ("mut", max_total_mv),
        ("muit", max_independent_total_mv),
    )
    for g in corpus + list(random_corpus(30, 8, 0)):
        for kind, solver in solvers:
            o = naive_oracle(g, kind)
            r = solver(g)
            if (o.value, o.witness) != (r.value, r.witness):
                failures.append(
                    f"{g.name} {kind}: oracle {o.value}/{o.witness},"
                    f" solver {r.value}/{r.witness}"
                )
    _conclude(11, "oracle-equivalence", failures)


def test_criterion_12_property_suites(corpus, random_graphs):
    failures = []
    rng = random.Random("acceptance:closure")
    checks = (
        (max_mv, is_mv_set),
        (max_total_mv, is_total_mv_set),
        (max_independent_total_mv,
         lambda g, s: is_total_mv_set(g, s) and is_independent_set(g, s)),
    )
    for g in corpus + random_graphs:
        for solver, feasible in checks:
            witness = solver(g).witness
            if not witness:
                continue
            for _ in range(100):
                sub = frozenset(rng.sample(witness, rng.randrange(len(witness) + 1)))
                if not feasible(g, sub):
                    failures.append(f"{g.name}: witness not downward closed at {sorted(sub)}")
                    break
        for u in range(g.order):
            if is_total_mv_set(g, {u}) != is_bypass_vertex(g, u):
                failures.append(f"{g.name}: singleton law fails at vertex {u}")
                break
        # the two-vertex graph is the lone boundary case: its leaves are
        # adjacent, so the leaf count exceeds every independent set
        if g.order >= 3 and not sandwich_check(g):
            failures.append(f"{g.name}: leaf/independence sandwich violated")
    if sandwich_check(build("path:2")):
        failures.append("path:2 unexpectedly satisfies the sandwich inequality")
    _conclude(12, "property-suites", failures)
