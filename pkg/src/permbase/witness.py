"""Witness construction: for a solvable subgroup G of S = S_n or A_n
(n >= 5), at most five conjugators x_1 = (), x_2, ..., x_k in S with

    G^{x_1} cap G^{x_2} cap ... cap G^{x_k} = 1,

packaged as a WitnessCertificate and always re-verified by exhaustive
intersection before being returned.

The construction dispatches on the action type:

* trivial group: the empty intersection is already trivial;
* transitive primitive: for prime degree 5 or 7 the point stabilizer of a
  normal full cycle yields the explicit triple {(), (1,2)-like, (1,3)-like};
  other degrees run a bounded verified search for a 3-conjugator witness;
* transitive imprimitive with minimal blocks of size k: for k in {2,3,4}
  the conjugators are powers of the full n-cycle a plus one short fixer
  ({(),a,x,ax} via a semiregular intersection for k = 2; {(),a,a^2,(3,4)}
  for k = 3; {(),a,a^2,a^3,(4,5)} for k = 4, when relabelled so blocks are
  consecutive intervals); for k >= 5 per-block witnesses are combined into
  slot products (and verified, falling back to search);
* intransitive: orbits all of size >= 5 combine per-orbit witnesses as
  products; a smallest orbit of size k in {2,3,4} with complement of
  degree >= 5 recurses on the complement and decorates its conjugators
  with the fixed point-mixing involutions for that k; everything else
  (tiny supports) is a bounded verified search.

For the alternating ambient every conjugator must be even; odd conjugators
are repaired by premultiplying an odd permutation normalizing the relevant
overgroup, and the repaired set is re-verified on G itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Sequence

from .corpus import agl1_generators, wreath
from .cosets import ALTERNATING, SYMMETRIC, CosetSpace, CosetTuple, same_orbit
from .errors import (
    BadParams,
    CapExceeded,
    DegreeTooSmall,
    NotIntransitive,
    NotPrimitive,
    NotRegular,
    NotSemiregular,
    NotSolvable,
    NotTransitive,
    RepeatedEntry,
    SearchExhausted,
    SigmaDoesNotNormalize,
    SigmaNotOdd,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    PermGroup,
    conjugate_intersection,
    group_from_elements,
    intersect_conjugates,
)
from .perms import Permutation, embed, perm_from_cycles, restrict, transposition
from .search import DEFAULT_BUDGET, DEFAULT_SEED, candidate_stream, find_conjugator_tuple

# index patterns for padding a short regular tuple to five 5-tuples in
# pairwise distinct orbits (entries are 1-based positions in the input)
PAD_PATTERNS = {
    2: (
        (1, 1, 1, 1, 2),
        (1, 1, 1, 2, 1),
        (1, 1, 2, 1, 1),
        (1, 2, 1, 1, 1),
        (2, 1, 1, 1, 1),
    ),
    3: (
        (1, 1, 1, 2, 3),
        (1, 1, 2, 3, 1),
        (1, 2, 3, 1, 1),
        (2, 3, 1, 1, 1),
        (1, 1, 2, 1, 3),
    ),
    4: (
        (1, 1, 2, 3, 4),
        (1, 2, 3, 4, 1),
        (2, 3, 4, 1, 1),
        (2, 3, 1, 4, 1),
        (2, 1, 3, 1, 4),
    ),
}

# final entries of the five attached coset tuples in the block-size-4 case
_K4_TUPLE_TAILS = ((4, 5), (3, 6), (2, 7), (1, 8), (2, 5))


@dataclass(frozen=True)
class WitnessCertificate:
    """Serializable witness: group generators, conjugators (first is the
    identity), optional five regular coset 5-tuples, and the construction
    trace.  ``verified`` is set only after exhaustive re-verification."""

    degree: int
    ambient: str
    generators: tuple
    conjugators: tuple
    regular_tuples: tuple | None
    trace: tuple
    verified: bool

    def group(self) -> PermGroup:
        return PermGroup.from_cycles(self.degree, self.generators)

    def conjugator_perms(self) -> list:
        return [Permutation.parse(s, self.degree) for s in self.conjugators]

    def tuple_perms(self) -> list | None:
        if self.regular_tuples is None:
            return None
        return [
            [Permutation.parse(s, self.degree) for s in t]
            for t in self.regular_tuples
        ]

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "ambient": self.ambient,
            "generators": list(self.generators),
            "conjugators": list(self.conjugators),
            "regular_tuples": (
                None
                if self.regular_tuples is None
                else [list(t) for t in self.regular_tuples]
            ),
            "trace": list(self.trace),
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "WitnessCertificate":
        d = json.loads(text)
        return cls(
            degree=d["degree"],
            ambient=d["ambient"],
            generators=tuple(d["generators"]),
            conjugators=tuple(d["conjugators"]),
            regular_tuples=(
                None
                if d.get("regular_tuples") is None
                else tuple(tuple(t) for t in d["regular_tuples"])
            ),
            trace=tuple(d["trace"]),
            verified=bool(d["verified"]),
        )


@dataclass
class _Ctx:
    even_only: bool = False
    budget: int = DEFAULT_BUDGET
    seed: int = DEFAULT_SEED
    cap: int = DEFAULT_ORDER_CAP


# -- small helpers ------------------------------------------------------------


def _dedup(conjs: Sequence[Permutation]) -> list:
    seen = set()
    out = []
    for x in conjs:
        if x._img not in seen:
            seen.add(x._img)
            out.append(x)
    assert out and out[0].is_identity
    return out


def _intersection_order(group: PermGroup, conjs, cap) -> int:
    return len(conjugate_intersection(group, list(conjs), cap))


def _even_adjust(conjs: Sequence[Permutation], sigma: Permutation) -> list:
    """Premultiply odd conjugators by the odd sigma; valid whenever sigma
    normalizes an overgroup whose conjugate intersection is trivial."""
    return [x if x.is_even else sigma * x for x in conjs]


def _all_even(conjs) -> bool:
    return all(x.is_even for x in conjs)


def _search(group: PermGroup, ctx: _Ctx, k_max: int = 5) -> list | None:
    return find_conjugator_tuple(
        group,
        k_max=k_max,
        even_only=ctx.even_only,
        budget=ctx.budget,
        seed=ctx.seed,
        cap=ctx.cap,
    )


def _pullback(conjs, lam_inv: Permutation) -> list:
    return [x.conj(lam_inv) for x in conjs]


# -- semiregular witness (single extra conjugate) -------------------------------


def semiregular_witness(
    group: PermGroup,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_ORDER_CAP,
) -> Permutation:
    """An x with G cap G^x = 1, for semiregular G of degree >= 5.

    Regular case: for odd degree any transposition works; for even degree
    pick g of order > 2 and use the transposition (alpha, g(alpha)) -- the
    unique element mapping alpha to g(alpha) is then not an involution, so
    nothing survives conjugation.  Elementary abelian 2-groups (every
    element an involution) fall to a verified candidate search, as does the
    orbit-split case when the per-orbit construction is unavailable
    (orbit length < 4, or the Klein four-group on 4 points).
    """
    if not group.is_semiregular():
        raise NotSemiregular("group has a nontrivial point stabilizer")
    if group.degree < 5:
        raise DegreeTooSmall("semiregular witnesses need degree >= 5")
    identity = Permutation.identity(group.degree)
    if group.order() == 1:
        return identity
    ctx = _Ctx(budget=budget, seed=seed, cap=cap)
    x = _semiregular_witness_inner(group, ctx)
    assert _intersection_order(group, [identity, x], cap) == 1
    return x


def _verified_pair(group: PermGroup, x: Permutation, cap: int) -> bool:
    identity = Permutation.identity(group.degree)
    return _intersection_order(group, [identity, x], cap) == 1


def _semiregular_witness_inner(group: PermGroup, ctx: _Ctx) -> Permutation:
    n = group.degree
    m = group.order()
    if group.is_transitive():
        x = _regular_witness_candidate(group)
        if x is not None and _verified_pair(group, x, ctx.cap):
            return x
        return _pair_search(group, ctx)
    # split into orbits, all of size m; recurse per orbit when the regular
    # construction exists inside the orbit
    has_big_order = any(g.order() > 2 for g in group.elements(ctx.cap))
    if m >= 5 or (m == 4 and has_big_order):
        parts = []
        ok = True
        for orbit in group.orbits():
            proj = PermGroup(m, [restrict(g, orbit) for g in group.generators])
            xo = _regular_witness_candidate(proj)
            if xo is None or not _verified_pair(proj, xo, ctx.cap):
                ok = False
                break
            parts.append(embed(xo, orbit, n))
        if ok:
            x = parts[0]
            for p in parts[1:]:
                x = x * p
            if _verified_pair(group, x, ctx.cap):
                return x
    return _pair_search(group, ctx)


def _regular_witness_candidate(group: PermGroup) -> Permutation | None:
    """Transposition candidate for regular groups; None for elementary
    abelian 2-groups (no element of order > 2 to anchor it)."""
    m = group.degree
    if m % 2 == 1:
        return transposition(m, 1, 2)
    for e in group.elements():
        if e.order() > 2:
            return transposition(m, 1, e.apply(1))
    return None


def _pair_search(group: PermGroup, ctx: _Ctx) -> Permutation:
    identity = Permutation.identity(group.degree)
    stream = candidate_stream(group.degree, even_only=False, seed=ctx.seed)
    for _ in range(ctx.budget):
        x = next(stream)
        if _intersection_order(group, [identity, x], ctx.cap) == 1:
            return x
    raise SearchExhausted(
        f"no single conjugator found for {group!r} within budget {ctx.budget}",
        tried=ctx.budget,
    )


# -- primitive case ----------------------------------------------------------------


def _affine_conjugators(group: PermGroup, ctx: _Ctx) -> list | None:
    """Prime degree 5 or 7: G normalizes a full cycle <u>; relabel so u is
    the standard cycle, where the stabilizer-of-a-point overgroup admits the
    conjugators (1,2) and (1,3) (premultiplied by the odd stabilizer
    generator when even conjugators are required)."""
    n = group.degree
    cycles = sorted(e for e in group.elements(ctx.cap) if e.order() == n)
    if not cycles:
        return None
    u = cycles[0]
    imgs = []
    pt = 1
    for _ in range(n):
        imgs.append(pt)
        pt = u.apply(pt)
    c = Permutation(imgs)
    cinv = c.inverse()
    x2 = transposition(n, 1, 2).conj(cinv)
    x3 = transposition(n, 1, 3).conj(cinv)
    identity = Permutation.identity(n)
    if ctx.even_only:
        _, b = agl1_generators(n)
        bprime = b.conj(cinv)
        conjs = [identity, bprime * x2, bprime * x3]
    else:
        conjs = [identity, x2, x3]
    if _intersection_order(group, conjs, ctx.cap) != 1:
        return None
    return conjs


def _primitive_conjugators(group: PermGroup, ctx: _Ctx) -> tuple:
    n = group.degree
    if n in (5, 7):
        conjs = _affine_conjugators(group, ctx)
        if conjs is not None:
            return conjs, ["primitive-affine"], None
    conjs = _search(group, ctx, k_max=3)
    if conjs is None:
        raise SearchExhausted(
            f"no 3-conjugator witness found for primitive {group!r} "
            f"within budget {ctx.budget}",
            tried=ctx.budget,
        )
    return conjs, ["primitive-search"], None


# -- transitive case ------------------------------------------------------------------


def _interval_relabeling(system) -> Permutation:
    """Point relabeling sending the blocks (sorted by minimum) to
    consecutive intervals."""
    new_label = {}
    nxt = 1
    for block in system.blocks:
        for p in block:
            new_label[p] = nxt
            nxt += 1
    degree = nxt - 1
    return Permutation([new_label[p] for p in range(1, degree + 1)])


def _block_size_two(gr: PermGroup, a: Permutation, l: int, ctx: _Ctx):
    """Conjugators {(), a, x, a*x} with x a semiregular witness for the
    intersection of the group with its a-conjugate."""
    n = gr.degree
    identity = Permutation.identity(n)
    if ctx.even_only:
        # work against the full block-preserving overgroup so an in-block
        # transposition serves as the odd normalizer
        w = wreath(2, l)
        if w.order() > ctx.cap:
            return None
        d = intersect_conjugates(w, [identity, a], ctx.cap)
        host = w
    else:
        d = intersect_conjugates(gr, [identity, a], ctx.cap)
        host = gr
    if not d.is_semiregular():
        return None
    if d.order() == 1:
        conjs = [identity, a]
    else:
        x = _semiregular_witness_inner(d, _Ctx(False, ctx.budget, ctx.seed, ctx.cap))
        conjs = [identity, a, x, a * x]
    if ctx.even_only:
        conjs = _even_adjust(conjs, transposition(n, 1, 2))
    if _intersection_order(gr, conjs, ctx.cap) != 1:
        return None
    return conjs


def _block_stabilizer_generators(gr: PermGroup, blocks: tuple) -> tuple:
    """Schreier generators of the stabilizer of the first block, plus the
    block transversal (block index -> group element mapping block 0 there)."""
    index_of = {}
    for i, b in enumerate(blocks):
        for p in b:
            index_of[p] = i
    gens = list(gr.generators)
    identity = Permutation.identity(gr.degree)
    transversal = {0: identity}
    queue = [0]
    qi = 0
    rep_point = {i: min(b) for i, b in enumerate(blocks)}
    while qi < len(queue):
        b = queue[qi]
        qi += 1
        t = transversal[b]
        for g in gens:
            image = index_of[g.apply(t.apply(rep_point[0]))]
            if image not in transversal:
                transversal[image] = t * g
                queue.append(image)
    stab = []
    for b in sorted(transversal):
        t = transversal[b]
        for g in gens:
            image = index_of[g.apply(t.apply(rep_point[0]))]
            sch = t * g * transversal[image].inverse()
            if not sch.is_identity:
                stab.append(sch)
    return tuple(stab), transversal


def _large_block_conjugators(gr: PermGroup, system, ctx: _Ctx):
    """Blocks of size k >= 5: solve each block-component group, combine the
    per-block conjugators as slot products (plain, then with per-block
    cyclic slot rotation), verify, or give up (caller falls to search)."""
    n = gr.degree
    blocks = system.blocks
    k = system.block_size
    identity = Permutation.identity(n)
    stab_gens, transversal = _block_stabilizer_generators(gr, blocks)
    per_block: list[list] = []
    for i, block in enumerate(blocks):
        t = transversal[i]
        gens_i = [restrict(s.conj(t), block) for s in stab_gens]
        component = PermGroup(k, gens_i)
        conjs_i, _, _ = _conjugators_for(component, ctx)
        per_block.append(_dedup(conjs_i))
    width = max(len(c) for c in per_block)
    for c in per_block:
        while len(c) < width:
            c.append(Permutation.identity(k))
    for rotate in (0, 1):
        slot_products = []
        for j in range(width):
            x = identity
            for i, (block, conjs_i) in enumerate(zip(blocks, per_block)):
                pick = conjs_i[(j + rotate * i) % width]
                x = x * embed(pick, block, n)
            slot_products.append(x)
        norm = slot_products[0].inverse()
        conjs = [x * norm for x in slot_products]
        conjs = _dedup([identity] + conjs)
        if ctx.even_only and not _all_even(conjs):
            continue
        if _intersection_order(gr, conjs, ctx.cap) == 1:
            return conjs
    return None


def _transitive_conjugators(group: PermGroup, ctx: _Ctx) -> tuple:
    if group.is_primitive():
        return _primitive_conjugators(group, ctx)
    n = group.degree
    system = group.all_minimal_block_systems()[0]
    k = system.block_size
    l = n // k
    lam = _interval_relabeling(system)
    lam_inv = lam.inverse()
    gr = group.conjugated(lam)
    identity = Permutation.identity(n)
    a = perm_from_cycles(n, [tuple(range(1, n + 1))])
    conjs = None
    tuples = None
    trace = [f"imprimitive-k{min(k, 5)}" if k <= 4 else "imprimitive-large-block"]
    if k == 2:
        conjs = _block_size_two(gr, a, l, ctx)
    elif k == 3:
        conjs = [identity, a, a**2, transposition(n, 3, 4)]
    elif k == 4:
        conjs = [identity, a, a**2, a**3, transposition(n, 4, 5)]
        if not ctx.even_only and n >= 12:
            tuples = [
                [identity, a, a**2, a**3, transposition(n, p, q)]
                for p, q in _K4_TUPLE_TAILS
            ]
    else:
        conjs = _large_block_conjugators(gr, system, ctx)
    if conjs is not None and k in (3, 4):
        if ctx.even_only:
            conjs = _even_adjust(conjs, transposition(n, 1, 2))
        if _intersection_order(gr, conjs, ctx.cap) != 1:
            conjs = None
            tuples = None
    if conjs is None:
        conjs = _search(group, ctx, k_max=5)
        if conjs is None:
            raise SearchExhausted(
                f"imprimitive construction and fallback search both failed "
                f"for {group!r}",
                tried=ctx.budget,
            )
        return conjs, trace + ["fallback-search"], None
    conjs = _pullback(_dedup(conjs), lam_inv)
    if tuples is not None:
        tuples = [_pullback(t, lam_inv) for t in tuples]
    return conjs, trace, tuples


# -- intransitive case ------------------------------------------------------------

_SMALL_ORBIT_DECOR = {
    2: (None, ((2, 3),), ((2, 3),), ((2, 3),), ((2, 3),)),
    3: (None, ((1, 4),), ((1, 4), (2, 5)), None, None),
    4: (None, ((1, 5),), ((1, 5), (2, 6)), ((1, 5), (2, 6), (3, 7)), None),
}
_SMALL_ORBIT_MIN_SLOTS = {2: 2, 3: 3, 4: 4}


def _orbit_product_conjugators(group: PermGroup, orbits, ctx: _Ctx):
    """All orbits of size >= 5: entrywise products of per-orbit witnesses."""
    n = group.degree
    per_orbit = []
    for orbit in orbits:
        proj = PermGroup(len(orbit), [restrict(g, orbit) for g in group.generators])
        conjs_o, _, _ = _conjugators_for(proj, ctx)
        per_orbit.append((orbit, _dedup(conjs_o)))
    width = max(len(c) for _, c in per_orbit)
    conjs = []
    identity = Permutation.identity(n)
    for j in range(width):
        x = identity
        for orbit, conjs_o in per_orbit:
            if j < len(conjs_o):
                x = x * embed(conjs_o[j], orbit, n)
        conjs.append(x)
    return _dedup(conjs)


def _small_orbit_conjugators(group: PermGroup, orbit, ctx: _Ctx):
    """Smallest orbit of size k in {2,3,4}, complement of degree >= 5:
    recurse on the complement projection, then decorate the complement
    conjugators with the fixed cross-orbit involutions for this k."""
    n = group.degree
    k = len(orbit)
    complement = [p for p in range(1, n + 1) if p not in orbit]
    order = list(orbit) + complement
    lam = Permutation([order.index(p) + 1 for p in range(1, n + 1)])
    gr = group.conjugated(lam)
    rest = tuple(range(k + 1, n + 1))
    proj = PermGroup(n - k, [restrict(g, rest) for g in gr.generators])
    inner_ctx = replace(ctx, even_only=False)
    inner, _, _ = _conjugators_for(proj, inner_ctx)
    inner = _dedup(inner)
    while len(inner) < _SMALL_ORBIT_MIN_SLOTS[k]:
        inner.append(Permutation.identity(n - k))
    decor = _SMALL_ORBIT_DECOR[k]
    conjs = []
    for j, c in enumerate(inner):
        x = embed(c, rest, n)
        if decor[j] is not None:
            x = x * perm_from_cycles(n, decor[j])
        conjs.append(x)
    if ctx.even_only:
        conjs = _even_adjust(conjs, transposition(n, 1, 2))
    if _intersection_order(gr, conjs, ctx.cap) != 1:
        return None
    return _pullback(_dedup(conjs), lam.inverse())


def _intransitive_conjugators(group: PermGroup, ctx: _Ctx) -> tuple:
    n = group.degree
    orbits = [o for o in group.orbits() if len(o) >= 2]
    if orbits and all(len(o) >= 5 for o in orbits):
        conjs = _orbit_product_conjugators(group, orbits, ctx)
        if _intersection_order(group, conjs, ctx.cap) == 1 and (
            not ctx.even_only or _all_even(conjs)
        ):
            return conjs, ["intransitive-big-orbits"], None
        trace = ["intransitive-big-orbits"]
    else:
        smallest = min(
            (o for o in orbits if len(o) <= 4),
            key=lambda o: (len(o), o),
            default=None,
        )
        if smallest is not None and n - len(smallest) >= 5:
            conjs = _small_orbit_conjugators(group, smallest, ctx)
            if conjs is not None:
                return (
                    conjs,
                    [f"intransitive-small-orbit-k{len(smallest)}"],
                    None,
                )
            trace = [f"intransitive-small-orbit-k{len(smallest)}"]
        else:
            trace = ["intransitive-base-search"]
    conjs = _search(group, ctx, k_max=5)
    if conjs is None:
        raise SearchExhausted(
            f"intransitive fallback search failed for {group!r}",
            tried=ctx.budget,
        )
    if trace[-1] != "intransitive-base-search":
        trace = trace + ["fallback-search"]
    return conjs, trace, None


# -- dispatch, verification, public API ------------------------------------------------


def _conjugators_for(group: PermGroup, ctx: _Ctx) -> tuple:
    if group.order() == 1:
        return [Permutation.identity(group.degree)], ["trivial"], None
    if group.is_transitive():
        return _transitive_conjugators(group, ctx)
    return _intransitive_conjugators(group, ctx)


def _verify_tuples(group: PermGroup, tuples, cap) -> bool:
    """Each attached tuple regular, all pairs in distinct orbits."""
    space = CosetSpace(group, SYMMETRIC)
    coset_tuples = [space.tuple_of(reps) for reps in tuples]
    for t in coset_tuples:
        if not t.stabilizer_is_trivial(cap):
            return False
    for i in range(len(coset_tuples)):
        for j in range(i + 1, len(coset_tuples)):
            if same_orbit(coset_tuples[i], coset_tuples[j], cap) is not None:
                return False
    return True


def _finalize(
    group: PermGroup,
    ambient: str,
    conjs: list,
    trace: list,
    tuples,
    ctx: _Ctx,
) -> WitnessCertificate:
    conjs = _dedup(conjs)
    if len(conjs) > 5:
        raise AssertionError(f"construction produced {len(conjs)} conjugators")
    order = _intersection_order(group, conjs, ctx.cap)
    parity_ok = not ctx.even_only or _all_even(conjs)
    if order != 1 or not parity_ok:
        found = _search(group, ctx, k_max=5)
        if found is None:
            raise SearchExhausted(
                f"witness verification failed and fallback search was "
                f"exhausted for {group!r}",
                tried=ctx.budget,
            )
        conjs = found
        trace = trace + ["fallback-search"]
        tuples = None
        assert _intersection_order(group, conjs, ctx.cap) == 1
    if tuples is not None and not _verify_tuples(group, tuples, ctx.cap):
        tuples = None
        trace = trace + ["tuples-dropped"]
    space = CosetSpace(group, SYMMETRIC) if tuples is not None else None
    return WitnessCertificate(
        degree=group.degree,
        ambient=ambient,
        generators=tuple(str(g) for g in group.generators) or ("()",),
        conjugators=tuple(str(x) for x in conjs),
        regular_tuples=(
            None
            if tuples is None
            else tuple(
                tuple(str(space.canonical_rep(r)) for r in t) for t in tuples
            )
        ),
        trace=tuple(trace),
        verified=True,
    )


def _check_inputs(group: PermGroup, ambient: str) -> None:
    if ambient not in (SYMMETRIC, ALTERNATING):
        raise BadParams(f"unknown ambient {ambient!r}")
    if group.degree < 5:
        raise DegreeTooSmall(f"degree {group.degree} < 5")
    if ambient == ALTERNATING and group.find_odd_element() is not None:
        raise BadParams("group is not contained in the alternating group")
    if not group.is_solvable():
        raise NotSolvable("witness construction needs a solvable group")


def solve(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_ORDER_CAP,
) -> WitnessCertificate:
    """Verified witness certificate for any solvable G <= S, n >= 5."""
    _check_inputs(group, ambient)
    ctx = _Ctx(ambient == ALTERNATING, budget, seed, cap)
    conjs, trace, tuples = _conjugators_for(group, ctx)
    return _finalize(group, ambient, conjs, trace, tuples, ctx)


def primitive_witness(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_ORDER_CAP,
) -> WitnessCertificate:
    _check_inputs(group, ambient)
    if not group.is_primitive():
        raise NotPrimitive(f"{group!r} is not primitive")
    ctx = _Ctx(ambient == ALTERNATING, budget, seed, cap)
    conjs, trace, tuples = _primitive_conjugators(group, ctx)
    return _finalize(group, ambient, conjs, trace, tuples, ctx)


def transitive_witness(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_ORDER_CAP,
) -> WitnessCertificate:
    _check_inputs(group, ambient)
    if not group.is_transitive():
        raise NotTransitive(f"{group!r} is not transitive")
    ctx = _Ctx(ambient == ALTERNATING, budget, seed, cap)
    conjs, trace, tuples = _transitive_conjugators(group, ctx)
    return _finalize(group, ambient, conjs, trace, tuples, ctx)


def intransitive_witness(
    group: PermGroup,
    ambient: str = SYMMETRIC,
    *,
    budget: int = DEFAULT_BUDGET,
    seed: int = DEFAULT_SEED,
    cap: int = DEFAULT_ORDER_CAP,
) -> WitnessCertificate:
    _check_inputs(group, ambient)
    if group.is_transitive():
        raise NotIntransitive(f"{group!r} is transitive")
    ctx = _Ctx(ambient == ALTERNATING, budget, seed, cap)
    conjs, trace, tuples = _intransitive_conjugators(group, ctx)
    return _finalize(group, ambient, conjs, trace, tuples, ctx)


def pad_base_to_regulars(t: CosetTuple, cap: int = DEFAULT_ORDER_CAP) -> list:
    """Pad a regular coset tuple of length 2, 3 or 4 with pairwise distinct
    entries to five 5-tuples; each output is regular and the five lie in
    pairwise distinct orbits."""
    m = len(t)
    if m not in PAD_PATTERNS:
        raise BadParams(f"padding needs a tuple of length 2..4, got {m}")
    if not t.has_distinct_entries():
        raise RepeatedEntry("padding needs pairwise distinct cosets")
    if not t.stabilizer_is_trivial(cap):
        raise NotRegular("padding needs a regular tuple")
    return [
        CosetTuple(t.space, tuple(t.entries[i - 1] for i in pattern))
        for pattern in PAD_PATTERNS[m]
    ]


def alternating_adjust(
    cert: WitnessCertificate,
    sigma: Permutation,
    cap: int = DEFAULT_ORDER_CAP,
) -> WitnessCertificate:
    """Turn a verified symmetric-ambient certificate into an alternating one
    by premultiplying each odd conjugator with the odd, normalizing sigma."""
    if sigma.is_even:
        raise SigmaNotOdd(f"{sigma} is even")
    group = cert.group()
    for g in group.generators:
        if not group.contains(g.conj(sigma)):
            raise SigmaDoesNotNormalize(f"{sigma} does not normalize the group")
    if cert.ambient != SYMMETRIC or not cert.verified:
        raise BadParams("adjustment needs a verified symmetric certificate")
    conjs = _even_adjust(cert.conjugator_perms(), sigma)
    order = _intersection_order(group, conjs, cap)
    if order != 1:
        raise AssertionError("adjusted intersection is not trivial")
    return replace(
        cert,
        ambient=ALTERNATING,
        conjugators=tuple(str(x) for x in conjs),
        regular_tuples=None,
        trace=cert.trace + ("alternating-adjust",),
    )
