"""Branch-and-bound maximization over a downward-closed family of vertex sets.

The searcher grows subsets of a fixed candidate list in ascending vertex
order, so the first maximum it completes is the lexicographically smallest
one, and the result never depends on timing.  Three prunes keep it exact:

* a failed membership test cuts the whole branch, since every superset of an
  infeasible set is infeasible too;
* subsets covering a known infeasible "blocker" are skipped without calling
  the oracle at all;
* a branch is abandoned when even taking every remaining candidate cannot
  beat the incumbent.  Blockers sharpen this bound: pairwise-disjoint
  blockers inside the remaining suffix each force at least one exclusion.

Blockers may be seeded up front (e.g. edges, when independence is part of
the family) or learned during the search from a ``learn`` callback that
shrinks a failed set to an infeasible core.
"""

from __future__ import annotations

from bisect import insort
from typing import Callable, Iterable

BLOCKER_LIMIT = 4096


def _blocker_rank(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def lex_first_maximum(
    candidates: Iterable[int],
    feasible: Callable[[int], bool],
    learn: Callable[[int], int] | None = None,
    seed_blockers: Iterable[int] = (),
) -> tuple[int, tuple[int, ...]]:
    """Return ``(size, members)`` of a largest feasible subset of ``candidates``.

    ``feasible`` takes a bitmask over vertex ids and must describe a
    downward-closed family containing the empty set.  Among maximum subsets
    the lexicographically smallest member sequence is returned.  ``learn``,
    when given, maps an infeasible bitmask to an infeasible subset of it
    (ideally minimal); both learned and seeded blockers are used only for
    pruning, so they never change the reported maximum.
    """
    order = sorted(candidates)
    blockers: list[int] = []
    known: set[int] = set()
    for b in seed_blockers:
        if b and b not in known:
            known.add(b)
            insort(blockers, b, key=_blocker_rank)

    best_size = 0
    best: tuple[int, ...] = ()

    def covered(mask: int) -> bool:
        for b in blockers:
            if b & mask == b:
                return True
        return False

    def forced_exclusions(suffix_mask: int) -> int:
        # Greedy count of disjoint blockers lying inside the suffix; any
        # feasible subset of the suffix must omit a vertex from each.
        used = 0
        count = 0
        for b in blockers:
            if b & suffix_mask == b and not b & used:
                count += 1
                used |= b
        return count

    def grow(chosen: list[int], mask: int, suffix: list[int]) -> None:
        nonlocal best_size, best
        m = len(suffix)
        tails = [0] * (m + 1)
        for j in range(m - 1, -1, -1):
            tails[j] = tails[j + 1] | (1 << suffix[j])
        for i, v in enumerate(suffix):
            if len(chosen) + (m - i) <= best_size:
                break
            vmask = mask | (1 << v)
            if covered(vmask):
                continue
            if not feasible(vmask):
                if learn is not None and len(blockers) < BLOCKER_LIMIT:
                    b = learn(vmask)
                    if b and b not in known:
                        known.add(b)
                        insort(blockers, b, key=_blocker_rank)
                continue
            chosen.append(v)
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = tuple(chosen)
            rest = suffix[i + 1 :]
            if rest and len(chosen) + len(rest) - forced_exclusions(tails[i + 1]) > best_size:
                grow(chosen, vmask, rest)
            chosen.pop()

    grow([], 0, order)
    return best_size, best
