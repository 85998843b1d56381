"""Bounded deterministic-then-random search for conjugator witnesses.

Candidate conjugators are streamed in a fixed order (transpositions,
3-cycles, double transpositions, then seeded pseudo-random elements);
tuples of candidates are scored by the exact order of the intersection of
the corresponding conjugates, so every returned witness is verified.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .groups import DEFAULT_ORDER_CAP, PermGroup, _compose
from .perms import Permutation, perm_from_cycles

DEFAULT_BUDGET = 10**5
DEFAULT_SEED = 0


def candidate_stream(
    degree: int, even_only: bool = False, seed: int = DEFAULT_SEED
) -> Iterator[Permutation]:
    """Deterministic candidates first, then an endless seeded random tail."""
    n = degree
    if not even_only:
        for a, b in combinations(range(1, n + 1), 2):
            yield perm_from_cycles(n, [(a, b)])
    for a, b, c in combinations(range(1, n + 1), 3):
        yield perm_from_cycles(n, [(a, b, c)])
        yield perm_from_cycles(n, [(a, c, b)])
    for a, b, c, d in combinations(range(1, n + 1), 4):
        for q, r, s in ((b, c, d), (c, b, d), (d, b, c)):
            yield perm_from_cycles(n, [(a, q), (r, s)])
    rng = random.Random(seed)
    base = list(range(1, n + 1))
    while True:
        rng.shuffle(base)
        p = Permutation(base)
        if even_only and not p.is_even:
            continue
        yield p


def find_conjugator_tuple(
    group: PermGroup,
    k_max: int = 5,
    even_only: bool = False,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_ORDER_CAP,
) -> list | None:
    """A conjugator tuple ((), x_2, ..., x_k), k <= k_max, whose conjugate
    intersection is trivial; None when the budget runs out.

    Candidates are consumed from the stream one at a time; for each new
    candidate every tuple having it as newest member is scored, smaller
    tuples first, so short witnesses are found early.  The budget counts
    scored tuples.
    """
    n = group.degree
    identity = Permutation.identity(n)
    if group.order() == 1:
        return [identity]
    if k_max < 2:
        return None
    chain = group.chain
    base_elems = group.element_list(cap)

    def refine(elems: list, x: Permutation) -> list:
        xr, xi = x._img, x.inverse()._img
        return [
            e for e in elems if chain.contains(_compose(_compose(xr, e), xi))
        ]

    stream = candidate_stream(n, even_only=even_only, seed=seed)
    useful: list[Permutation] = []
    single: list[list] = []  # per useful candidate: elements of G cap G^x
    spent = 0

    while spent < budget:
        x = next(stream)
        d_new = refine(base_elems, x)
        spent += 1
        if len(d_new) == len(base_elems):
            continue  # x normalizes G, no tuple through it can shrink
        if len(d_new) == 1:
            return [identity, x]
        m = len(useful)
        useful.append(x)
        single.append(d_new)
        for k in range(3, k_max + 1):
            for combo in combinations(range(m), k - 2):
                if spent >= budget:
                    return None
                spent += 1
                elems = d_new
                picked = []
                for idx in combo:
                    picked.append(useful[idx])
                    elems = refine(elems, useful[idx])
                    if len(elems) == 1:
                        break
                if len(elems) == 1:
                    return [identity] + picked + [x]
    return None
