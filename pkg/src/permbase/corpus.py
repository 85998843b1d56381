"""Named group families and the small-degree solvable subgroup catalog.

Families are built with blocks/orbits as consecutive intervals and
generators in a fixed documented order, so catalogs and certificates are
reproducible byte for byte.

enumerate_solvable lists every solvable subgroup of S_n (5 <= n <= 7) up
to conjugacy by the cyclic extension method: starting from the trivial
group, repeatedly extend each known subgroup H by an element g normalizing
H with prime coset order, and deduplicate up to S_n-conjugacy by
brute-force transport.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations as iter_permutations
from typing import Sequence

from .errors import BadParams, DegreeCapExceeded
from .groups import PermGroup
from .perms import Permutation, perm_from_cycles

ENUMERATION_DEGREE_CAP = 7


# -- named families -----------------------------------------------------------


def wreath(k: int, l: int) -> PermGroup:
    """S_k wr S_l on k*l points, blocks {1..k}, {k+1..2k}, ...

    Generators: per block the transposition and the k-cycle, then the swap
    of the first two blocks and the block l-cycle.
    """
    if k < 2 or l < 2:
        raise BadParams("wreath needs k >= 2 and l >= 2")
    n = k * l
    gens = []
    for b in range(l):
        lo = b * k
        gens.append(perm_from_cycles(n, [(lo + 1, lo + 2)]))
        if k >= 3:
            gens.append(perm_from_cycles(n, [tuple(range(lo + 1, lo + k + 1))]))
    gens.append(perm_from_cycles(n, [(j + 1, k + j + 1) for j in range(k)]))
    if l >= 3:
        gens.append(
            perm_from_cycles(
                n, [tuple(b * k + j + 1 for b in range(l)) for j in range(k)]
            )
        )
    return PermGroup(n, gens)


def direct_product(*sizes: int) -> PermGroup:
    """S_{k_1} x ... x S_{k_r} on consecutive orbits of the given sizes."""
    if not sizes or any(s < 1 for s in sizes):
        raise BadParams("direct product needs positive orbit sizes")
    n = sum(sizes)
    gens = []
    lo = 0
    for s in sizes:
        if s >= 2:
            gens.append(perm_from_cycles(n, [(lo + 1, lo + 2)]))
        if s >= 3:
            gens.append(perm_from_cycles(n, [tuple(range(lo + 1, lo + s + 1))]))
        lo += s
    return PermGroup(n, gens)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _smallest_primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise BadParams(f"{p} has no primitive root")


def agl1_generators(p: int) -> tuple:
    """The translation p-cycle and the multiplication (p-1)-cycle of the
    1-dimensional affine group on {1..p} (point i is the field element i-1)."""
    if not _is_prime(p):
        raise BadParams(f"agl1 needs a prime, got {p}")
    a = perm_from_cycles(p, [tuple(range(1, p + 1))])
    g = _smallest_primitive_root(p)
    images = [((i - 1) * g) % p + 1 for i in range(1, p + 1)]
    b = Permutation(images)
    return a, b


def agl1(p: int) -> PermGroup:
    a, b = agl1_generators(p)
    return PermGroup(p, [a, b])


def cyclic_regular(n: int) -> PermGroup:
    if n < 1:
        raise BadParams("cyclic_regular needs n >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup(n, [perm_from_cycles(n, [tuple(range(1, n + 1))])])


def elementary_abelian_regular(p: int, d: int) -> PermGroup:
    """(Z_p)^d acting on itself by translation; point 1 + sum c_i p^i."""
    if not _is_prime(p) or d < 1:
        raise BadParams("elementary_abelian_regular needs prime p, d >= 1")
    n = p**d
    gens = []
    for i in range(d):
        step = p**i
        images = []
        for point in range(n):
            digits = point
            c = (digits // step) % p
            images.append(point + ((c + 1) % p - c) * step + 1)
        gens.append(Permutation(images))
    return PermGroup(n, gens)


def named_family(tag: str, params: Sequence[int]) -> PermGroup:
    """Dispatch on a family tag; see the individual constructors."""
    builders = {
        "wreath": lambda: wreath(*params),
        "direct": lambda: direct_product(*params),
        "agl1": lambda: agl1(*params),
        "cyclic_regular": lambda: cyclic_regular(*params),
        "elementary_abelian_regular": lambda: elementary_abelian_regular(*params),
    }
    if tag not in builders:
        raise BadParams(f"unknown family tag {tag!r}")
    try:
        return builders[tag]()
    except TypeError as exc:
        raise BadParams(f"bad parameters for {tag}: {params!r}") from exc


# -- solvable subgroup catalog ---------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    generators: tuple  # cycle strings
    order: int
    solvable: bool
    transitive: bool
    tags: tuple

    def group(self, degree: int) -> PermGroup:
        return PermGroup.from_cycles(degree, self.generators)


@dataclass(frozen=True)
class GroupCatalog:
    degree: int
    entries: tuple

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "entries": [
                {
                    "generators": list(e.generators),
                    "order": e.order,
                    "solvable": e.solvable,
                    "transitive": e.transitive,
                    "tags": list(e.tags),
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "GroupCatalog":
        data = json.loads(text)
        entries = tuple(
            CatalogEntry(
                generators=tuple(e["generators"]),
                order=e["order"],
                solvable=e["solvable"],
                transitive=e["transitive"],
                tags=tuple(e["tags"]),
            )
            for e in data["entries"]
        )
        return cls(degree=data["degree"], entries=entries)

    def groups(self) -> list:
        return [e.group(self.degree) for e in self.entries]


def _thin_generators(degree: int, elements: list) -> list:
    """Small generator list for a subgroup given by its raw element set."""
    from .groups import StabilizerChain

    chain = StabilizerChain(degree)
    gens = []
    for e in sorted(elements):
        if chain.extend(e):
            gens.append(Permutation._raw(e))
    return gens


def _conjugacy_key(degree: int, elements: frozenset) -> tuple:
    """Cheap conjugacy invariant: order plus element cycle-type multiset."""
    types = sorted(Permutation._raw(e).cycle_type() for e in elements)
    return (len(elements), tuple(types))


def _are_conjugate(
    degree: int, h1: frozenset, h2: frozenset, gens1: list, sym_pairs: list
) -> bool:
    """Brute-force transport: some s in S_n with h1^s == h2."""
    if len(h1) != len(h2):
        return False
    raws = [g._img for g in gens1]
    rng = range(degree)
    for s, s_inv in sym_pairs:
        for g in raws:
            # g^s = s^-1 g s
            conj = tuple(s[g[s_inv[i]]] for i in rng)
            if conj not in h2:
                break
        else:
            return True
    return False


def enumerate_solvable(degree: int) -> GroupCatalog:
    """All solvable subgroups of S_degree up to conjugacy, 5 <= degree <= 7.

    Entries are sorted by (order, generator strings); the trivial group is
    entry 0.
    """
    if degree > ENUMERATION_DEGREE_CAP:
        raise DegreeCapExceeded(
            f"enumeration capped at degree {ENUMERATION_DEGREE_CAP}"
        )
    if degree < 1:
        raise BadParams("degree must be >= 1")
    identity = tuple(range(degree))
    sym = [tuple(p) for p in iter_permutations(range(degree))]

    def _inv(s: tuple) -> tuple:
        out = [0] * degree
        for i, v in enumerate(s):
            out[v] = i
        return tuple(out)

    sym_pairs = [(s, _inv(s)) for s in sym]

    trivial = frozenset([identity])
    classes: list[frozenset] = [trivial]
    class_gens: list[list] = [[]]
    buckets: dict = {_conjugacy_key(degree, trivial): [0]}
    frontier = [0]

    while frontier:
        next_frontier = []
        for idx in frontier:
            h = classes[idx]
            gens_h = class_gens[idx]
            raw_gens = [g._img for g in gens_h]
            for s_raw, s_inv in sym_pairs:
                if s_raw in h:
                    continue
                # s must normalize h
                normalizes = True
                for g in raw_gens:
                    conj = tuple(
                        s_raw[g[s_inv[i]]] for i in range(degree)
                    )
                    if conj not in h:
                        normalizes = False
                        break
                if not normalizes:
                    continue
                # coset order of s over h must be prime
                power = s_raw
                coset_order = 1
                while power not in h:
                    power = tuple(s_raw[v] for v in power)
                    coset_order += 1
                if not _is_prime(coset_order):
                    continue
                # extension: union of h * s^i
                new = set(h)
                layer = set(h)
                for _ in range(coset_order - 1):
                    layer = {tuple(s_raw[v] for v in e) for e in layer}
                    new |= layer
                cand = frozenset(new)
                cand_gens = _thin_generators(degree, list(cand))
                key = _conjugacy_key(degree, cand)
                known = False
                for other_idx in buckets.get(key, ()):
                    if _are_conjugate(
                        degree, cand, classes[other_idx], cand_gens, sym_pairs
                    ):
                        known = True
                        break
                if known:
                    continue
                classes.append(cand)
                class_gens.append(cand_gens)
                buckets.setdefault(key, []).append(len(classes) - 1)
                next_frontier.append(len(classes) - 1)
        frontier = next_frontier

    entries = []
    for elems, gens in zip(classes, class_gens):
        group = PermGroup(degree, gens)
        order = group.order()
        assert order == len(elems)
        transitive = group.is_transitive()
        tags = []
        if order == 1:
            tags.append("trivial")
        if transitive:
            tags.append("transitive")
            if group.is_primitive():
                tags.append("primitive")
        if order > 1 and group.is_semiregular():
            tags.append("semiregular")
        entries.append(
            CatalogEntry(
                generators=tuple(str(g) for g in gens),
                order=order,
                solvable=True,
                transitive=transitive,
                tags=tuple(tags),
            )
        )
    entries.sort(key=lambda e: (e.order, e.generators))
    return GroupCatalog(degree=degree, entries=tuple(entries))
