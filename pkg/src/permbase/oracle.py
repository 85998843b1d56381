"""Independent brute-force verification and exact regular-orbit counting.

Everything here recomputes from generators and conjugators alone; the
construction trace inside a certificate is never trusted.

Exact Reg(S, m) counting fixes the first coordinate to the identity coset
(legitimate since S is transitive on the coset space) and counts regular
tuples in the remaining m-1 coordinates by depth-first search with partial
conjugate intersections; once a partial intersection is trivial every
completion is regular and is counted combinatorially.  Each regular S-orbit
meets that slice in exactly |G| tuples, so the count divides out exactly.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Sequence

from .cosets import ALTERNATING, SYMMETRIC, CosetSpace, CosetTuple, same_orbit
from .errors import BadParams, CapExceeded, SearchExhausted
from .groups import DEFAULT_ORDER_CAP, PermGroup, _compose
from .perms import Permutation
from .search import DEFAULT_BUDGET, DEFAULT_SEED, find_conjugator_tuple
from .witness import WitnessCertificate, pad_base_to_regulars

DEFAULT_ITERATION_CAP = 10**8
DEFAULT_INDEX_CAP = 10**5


@dataclass
class Caps:
    order: int = DEFAULT_ORDER_CAP
    index: int = DEFAULT_INDEX_CAP
    iterations: int = DEFAULT_ITERATION_CAP


@dataclass
class VerificationReport:
    """Outcome of re-checking a certificate; unknown fields stay None when
    a cap was hit (reported in caps_hit, not fatal)."""

    certificate_ok: bool
    intersection_order: int | None
    tuple_reports: list | None
    elapsed: float
    caps_hit: list

    def to_json_dict(self) -> dict:
        # elapsed is deliberately left out: identical runs must serialize
        # byte-identically
        return {
            "certificate_ok": self.certificate_ok,
            "intersection_order": self.intersection_order,
            "tuple_reports": self.tuple_reports,
            "caps_hit": self.caps_hit,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def verify_certificate(
    cert: WitnessCertificate, caps: Caps | None = None
) -> VerificationReport:
    """Recompute the conjugate intersection (and tuple claims, if present)
    of a certificate from scratch."""
    caps = caps or Caps()
    start = time.monotonic()
    caps_hit: list = []
    group = cert.group()
    conjugators = cert.conjugator_perms()
    ok = True
    if not conjugators or not conjugators[0].is_identity:
        ok = False
    if cert.ambient == ALTERNATING:
        if any(not x.is_even for x in conjugators):
            ok = False
        if group.find_odd_element() is not None:
            ok = False
    if len(conjugators) > 5:
        ok = False

    order = None
    try:
        elems = group.element_list(caps.order)
        chain = group.chain
        for x in conjugators:
            if x.is_identity:
                continue
            xr, xi = x._img, x.inverse()._img
            elems = [
                e for e in elems if chain.contains(_compose(_compose(xr, e), xi))
            ]
        order = len(elems)
        if order != 1:
            ok = False
    except CapExceeded as exc:
        caps_hit.append(exc.cap_name)
        ok = False

    tuple_reports = None
    if cert.regular_tuples is not None and order is not None:
        if len(cert.regular_tuples) != 5 or any(
            len(t) != 5 for t in cert.regular_tuples
        ):
            ok = False
        tuple_reports = []
        try:
            space = CosetSpace(group, cert.ambient)
            tuples = [
                space.tuple_of(reps) for reps in cert.tuple_perms()
            ]
            for t in tuples:
                regular = t.stabilizer_is_trivial(caps.order)
                tuple_reports.append({"regular": regular})
                if not regular:
                    ok = False
            pairs = []
            for i in range(len(tuples)):
                for j in range(i + 1, len(tuples)):
                    transporter = same_orbit(tuples[i], tuples[j], caps.order)
                    distinct = transporter is None
                    pairs.append({"pair": [i, j], "distinct_orbits": distinct})
                    if not distinct:
                        ok = False
            tuple_reports.append({"pairs": pairs})
        except CapExceeded as exc:
            caps_hit.append(exc.cap_name)
            tuple_reports = None
            ok = False

    return VerificationReport(
        certificate_ok=ok,
        intersection_order=order,
        tuple_reports=tuple_reports,
        elapsed=time.monotonic() - start,
        caps_hit=caps_hit,
    )


# -- exact and bound-mode regular orbit counts ---------------------------------


@dataclass
class RegResult:
    mode: str  # "exact" | "bound"
    m: int
    value: int | None = None  # exact count
    at_least: int | None = None  # bound mode
    witness_tuples: list | None = None  # bound mode: the exhibited tuples

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "m": self.m,
            "value": self.value,
            "at_least": self.at_least,
            "witness_tuples": self.witness_tuples,
        }


def reg_count_exact(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    m: int = 5,
    caps: Caps | None = None,
) -> int:
    """The exact number of regular S-orbits on the m-th power of the coset
    space of G (0 whenever m is below the base size)."""
    if not 1 <= m <= 5:
        raise BadParams("m must be in 1..5")
    caps = caps or Caps()
    space = CosetSpace(group, ambient)
    index = space.index()
    if index > caps.index:
        raise CapExceeded("index", f"index {index} > cap {caps.index}")
    if index ** (m - 1) > caps.iterations:
        raise CapExceeded(
            "iterations", f"{index}^{m - 1} exceeds cap {caps.iterations}"
        )
    reps = [c.rep for c in space.cosets(caps.index)]
    chain = group.chain
    order = group.order()
    conj_data = [(r._img, r.inverse()._img) for r in reps]

    memo: dict = {}

    def count(elems: tuple, depth: int) -> int:
        if len(elems) == 1:
            return index**depth
        if depth == 0:
            return 0
        key = (depth, elems)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for xr, xi in conj_data:
            filtered = tuple(
                e for e in elems if chain.contains(_compose(_compose(xr, e), xi))
            )
            total += count(filtered, depth - 1)
        memo[key] = total
        return total

    base = tuple(group.element_list(caps.order))
    regular_in_slice = count(base, m - 1)
    assert regular_in_slice % order == 0
    return regular_in_slice // order


def find_five_regular_tuples(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    caps: Caps | None = None,
) -> list:
    """Five regular coset 5-tuples in pairwise distinct orbits.

    First tries a short witness (k <= 4) and the index-pattern padding;
    if that fails, streams 5-tuples directly, keeping those with trivial
    stabilizer that sit in fresh orbits."""
    caps = caps or Caps()
    space = CosetSpace(group, ambient)
    even_only = ambient == ALTERNATING
    base = find_conjugator_tuple(
        group, k_max=4, even_only=even_only, budget=budget, seed=seed,
        cap=caps.order,
    )
    if base is not None:
        t = space.tuple_of(base)
        if 2 <= len(set(t.entries)) == len(t.entries) <= 4:
            padded = pad_base_to_regulars(t, caps.order)
            ok = all(p.stabilizer_is_trivial(caps.order) for p in padded)
            if ok:
                for i in range(len(padded)):
                    for j in range(i + 1, len(padded)):
                        if same_orbit(padded[i], padded[j], caps.order) is not None:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                return padded
    # direct search: fix the first four coordinates to a witness prefix and
    # scan last coordinates; with a shared prefix both the regularity and
    # the transporter test reduce to the small prefix intersection
    base5 = find_conjugator_tuple(
        group, k_max=5, even_only=even_only, budget=budget, seed=seed,
        cap=caps.order,
    )
    if base5 is None:
        raise SearchExhausted("no regular 5-tuple found", tried=budget)
    while len(base5) < 5:
        base5.append(base5[-1])
    core = [space.coset(x).rep for x in base5[:4]]
    from .groups import conjugate_intersection

    d_core = conjugate_intersection(group, core, caps.order)
    chain = group.chain
    reps = [c.rep for c in space.cosets(caps.index)]
    found_tails: list = []
    for rep in reps:
        rep_r, rep_i = rep._img, rep.inverse()._img
        # regular iff d_core cap G^rep is trivial
        stab = [
            e
            for e in d_core
            if chain.contains(_compose(_compose(rep_r, e), rep_i))
        ]
        if len(stab) != 1:
            continue
        # same orbit as an earlier tail y iff some transporter d in d_core
        # has rep * d * y^-1 in G (and d even in the alternating ambient,
        # automatic for G inside the alternating group)
        fresh = True
        for y in found_tails:
            y_inv = y.inverse()._img
            for d in d_core:
                if chain.contains(_compose(_compose(rep_r, d), y_inv)) and (
                    not even_only or Permutation._raw(d).is_even
                ):
                    fresh = False
                    break
            if not fresh:
                break
        if not fresh:
            continue
        found_tails.append(rep)
        if len(found_tails) == 5:
            return [space.tuple_of(core + [tail]) for tail in found_tails]
    raise SearchExhausted(
        f"only {len(found_tails)} pairwise-distinct regular tuples found",
        tried=len(reps),
    )


def reg_count(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    m: int = 5,
    mode: str = "exact",
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    caps: Caps | None = None,
) -> RegResult:
    """Exact count, or bound mode certifying the count is >= 5 for m = 5
    by exhibiting five regular tuples in pairwise distinct orbits."""
    if mode == "exact":
        value = reg_count_exact(group, ambient, m, caps)
        return RegResult(mode="exact", m=m, value=value)
    if mode != "bound":
        raise BadParams(f"unknown mode {mode!r}")
    if m != 5:
        raise BadParams("bound mode certifies m = 5 only")
    tuples = find_five_regular_tuples(
        group, ambient, budget=budget, seed=seed, caps=caps
    )
    return RegResult(
        mode="bound",
        m=m,
        at_least=5,
        witness_tuples=[[str(c.rep) for c in t.entries] for t in tuples],
    )


def min_base_search(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    k_max: int = 5,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    caps: Caps | None = None,
) -> list | None:
    """Shortest conjugator tuple the bounded stream search can find
    (identity first); None when the budget is exhausted."""
    caps = caps or Caps()
    if k_max > 5:
        raise BadParams("tuples are capped at five conjugators")
    return find_conjugator_tuple(
        group,
        k_max=k_max,
        even_only=ambient == ALTERNATING,
        budget=budget,
        seed=seed,
        cap=caps.order,
    )


# -- frozen regression fixtures --------------------------------------------------


def canonical_group_key(group: PermGroup) -> str:
    """degree plus sorted generator cycle strings, as a stable dict key."""
    gens = sorted(str(g) for g in group.generators) or ["()"]
    return f"{group.degree}|" + "|".join(gens)


def fixture_record(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    ms: Sequence[int] = (1, 2, 3, 4, 5),
    caps: Caps | None = None,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
) -> dict:
    """order, per-m exact regular-orbit counts, and the searched base length."""
    counts = {}
    for m in ms:
        counts[str(m)] = reg_count_exact(group, ambient, m, caps)
    base = min_base_search(
        group, ambient, k_max=5, budget=budget, seed=seed, caps=caps
    )
    return {
        "order": group.order(),
        "reg_counts": counts,
        "min_base": None if base is None else len(base),
    }
