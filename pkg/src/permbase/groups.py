"""Finite permutation groups given by generators.

The engine is a deterministic Schreier-Sims stabilizer chain whose base
points are the ascending least-moved points of the strong generators: every
strong generator adjoined at a level fixes all points below that level's
base.  That invariant makes sifting, element enumeration and lexicographic
coset canonicalization (see cosets.py) share one chain.

Inner loops work on raw 0-based image tuples to avoid object churn; the
public surface speaks Permutation.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import (
    CapExceeded,
    DegreeMismatch,
    NotTransitive,
)
from .perms import Permutation

DEFAULT_ORDER_CAP = 10**6


def _compose(p: tuple, q: tuple) -> tuple:
    # p applied first, then q
    return tuple(q[v] for v in p)


def _invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class _Level:
    __slots__ = ("base", "gens", "orbit", "inv")

    def __init__(self, base: int):
        self.base = base          # 0-based
        self.gens: list = []      # raw tuples, least moved point == base
        self.orbit: dict = {}     # point -> transversal raw tuple (base -> point)
        self.inv: dict = {}       # point -> inverse of transversal


class StabilizerChain:
    """Deterministic stabilizer chain with ascending base points."""

    def __init__(self, degree: int, generators: Iterable[tuple] = ()):
        self.degree = degree
        self._identity = tuple(range(degree))
        self.levels: list[_Level] = []
        for g in generators:
            self.extend(g)

    # -- construction ----------------------------------------------------

    def extend(self, g: tuple) -> bool:
        """Adjoin a new generator; returns False if already contained."""
        r, i = self._strip(g)
        if r is None:
            return False
        self._insert(r, i)
        for j in range(i, -1, -1):
            self._close(j)
        return True

    def _insert(self, r: tuple, i: int) -> None:
        m = next(k for k, v in enumerate(r) if v != k)
        if i == len(self.levels) or self.levels[i].base != m:
            self.levels.insert(i, _Level(m))
        self.levels[i].gens.append(r)

    def _strip(self, g: tuple):
        """Sift g; returns (residue, level index) or (None, -1) if contained."""
        r = g
        i = 0
        while True:
            m = -1
            for k, v in enumerate(r):
                if v != k:
                    m = k
                    break
            if m < 0:
                return None, -1
            while i < len(self.levels) and self.levels[i].base < m:
                i += 1
            if i == len(self.levels) or self.levels[i].base > m:
                return r, i
            lvl = self.levels[i]
            beta = r[m]
            if beta not in lvl.orbit:
                return r, i
            r = _compose(r, lvl.inv[beta])
            i += 1

    def _close(self, j: int) -> None:
        """Rebuild level j's orbit and push its Schreier generators down."""
        lvl = self.levels[j]
        gens_j = [g for level in self.levels[j:] for g in level.gens]
        base = lvl.base
        orbit = {base: self._identity}
        inv = {base: self._identity}
        queue = [base]
        qi = 0
        while qi < len(queue):
            delta = queue[qi]
            qi += 1
            t = orbit[delta]
            for s in gens_j:
                gamma = s[delta]
                if gamma not in orbit:
                    u = _compose(t, s)
                    orbit[gamma] = u
                    inv[gamma] = _invert(u)
                    queue.append(gamma)
        lvl.orbit = orbit
        lvl.inv = inv
        for delta in queue:
            t = orbit[delta]
            for s in gens_j:
                gamma = s[delta]
                sch = _compose(_compose(t, s), inv[gamma])
                r, i2 = self._strip(sch)
                if r is None:
                    continue
                # residue fixes every point <= base, so i2 > j
                self._insert(r, i2)
                for jj in range(i2, j, -1):
                    self._close(jj)

    # -- queries -----------------------------------------------------------

    def contains(self, g: tuple) -> bool:
        r, _ = self._strip(g)
        return r is None

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    @property
    def base(self) -> tuple:
        """1-based base points."""
        return tuple(lvl.base + 1 for lvl in self.levels)

    def strong_generators(self) -> list:
        return [g for lvl in self.levels for g in lvl.gens]

    def iter_elements(self) -> Iterator[tuple]:
        """Every element exactly once, deterministic order."""

        def rec(i: int) -> Iterator[tuple]:
            if i == len(self.levels):
                yield self._identity
                return
            lvl = self.levels[i]
            for delta in sorted(lvl.orbit):
                t = lvl.orbit[delta]
                for rest in rec(i + 1):
                    yield _compose(rest, t)

        return rec(0)

    def random_element(self, rng) -> tuple:
        """Uniformly random element (one transversal pick per level)."""
        g = self._identity
        for lvl in reversed(self.levels):
            delta = rng.choice(sorted(lvl.orbit))
            g = _compose(g, lvl.orbit[delta])
        return g


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition of {1..n} into blocks of equal size."""

    block_size: int
    blocks: tuple  # tuple of sorted point-tuples, sorted by first point

    @classmethod
    def from_cells(cls, cells: Iterable[Sequence[int]]) -> "BlockSystem":
        blocks = tuple(sorted(tuple(sorted(c)) for c in cells))
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise ValueError("blocks of unequal size")
        return cls(block_size=sizes.pop(), blocks=blocks)

    def block_of(self, point: int) -> tuple:
        for b in self.blocks:
            if point in b:
                return b
        raise KeyError(point)

    def is_preserved_by(self, group: "PermGroup") -> bool:
        cells = {frozenset(b) for b in self.blocks}
        for g in group.generators:
            for b in self.blocks:
                if frozenset(g.apply(p) for p in b) not in cells:
                    return False
        return True


class PermGroup:
    """A permutation group of fixed degree, given by generators.

    Immutable after construction except for the lazily built stabilizer
    chain (build-once under a lock, so concurrent readers are safe).
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}"
                )
            if g.is_identity or g._img in seen:
                continue
            seen.add(g._img)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._chain: StabilizerChain | None = None
        self._lock = threading.Lock()
        self._element_cache: list | None = None

    @classmethod
    def from_cycles(cls, degree: int, cycle_strings: Iterable[str]) -> "PermGroup":
        return cls(degree, [Permutation.parse(s, degree) for s in cycle_strings])

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [])

    # -- chain-backed queries ----------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabilizerChain(
                        self.degree, [g._img for g in self.generators]
                    )
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch("membership test across degrees")
        return self.chain.contains(p._img)

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def elements(self, cap: int = DEFAULT_ORDER_CAP) -> Iterator[Permutation]:
        """Stream every element exactly once; CapExceeded if order > cap."""
        if self.order() > cap:
            raise CapExceeded("order", f"group order {self.order()} > cap {cap}")
        return (Permutation._raw(t) for t in self.chain.iter_elements())

    def element_list(self, cap: int = DEFAULT_ORDER_CAP) -> list:
        """Cached list of raw image tuples; CapExceeded if order > cap."""
        if self.order() > cap:
            raise CapExceeded("order", f"group order {self.order()} > cap {cap}")
        if self._element_cache is None:
            self._element_cache = list(self.chain.iter_elements())
        return self._element_cache

    def random_element(self, rng) -> Permutation:
        return Permutation._raw(self.chain.random_element(rng))

    # -- orbits and transitivity --------------------------------------------

    def orbits(self) -> tuple:
        """Partition of {1..n} into orbits, cells sorted, ordered by minimum."""
        n = self.degree
        seen = [False] * n
        out = []
        raw = [g._img for g in self.generators]
        for start in range(n):
            if seen[start]:
                continue
            queue = [start]
            seen[start] = True
            cell = []
            while queue:
                p = queue.pop()
                cell.append(p)
                for g in raw:
                    q = g[p]
                    if not seen[q]:
                        seen[q] = True
                        queue.append(q)
            out.append(tuple(sorted(v + 1 for v in cell)))
        return tuple(out)

    def orbit_of(self, point: int) -> tuple:
        for cell in self.orbits():
            if point in cell:
                return cell
        raise ValueError(f"point {point} outside 1..{self.degree}")

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_semiregular(self) -> bool:
        """Only the identity fixes a point: every orbit has size |G|."""
        order = self.order()
        return all(len(cell) == order for cell in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.is_semiregular()

    # -- block systems ---------------------------------------------------------

    def minimal_block_system(self, seed: tuple) -> BlockSystem | None:
        """Finest invariant partition joining the seed pair; None if trivial
        (i.e. the seed forces the one-block partition)."""
        if not self.is_transitive():
            raise NotTransitive("block systems need a transitive group")
        n = self.degree
        a, b = seed
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            parent[find(x)] = find(y)

        raw = [g._img for g in self.generators]
        union(a - 1, b - 1)
        work = [(a - 1, b - 1)]
        while work:
            x, y = work.pop()
            for g in raw:
                gx, gy = g[x], g[y]
                if find(gx) != find(gy):
                    union(gx, gy)
                    work.append((gx, gy))
        cells: dict = {}
        for p in range(n):
            cells.setdefault(find(p), []).append(p + 1)
        if len(cells) == 1:
            return None
        system = BlockSystem.from_cells(cells.values())
        assert system.is_preserved_by(self)
        return system

    def all_minimal_block_systems(self) -> tuple:
        """Distinct nontrivial systems over seeds {1,i}, i = 2..n,
        sorted by (block size, blocks)."""
        found = {}
        for i in range(2, self.degree + 1):
            system = self.minimal_block_system((1, i))
            if system is not None:
                found[system.blocks] = system
        return tuple(sorted(found.values(), key=lambda s: (s.block_size, s.blocks)))

    def is_primitive(self) -> bool:
        return self.is_transitive() and not self.all_minimal_block_systems()

    # -- solvability ---------------------------------------------------------

    def derived_subgroup(self) -> "PermGroup":
        """Commutator subgroup: commutators of generators, closed under
        conjugation by generators (normal closure inside this group)."""
        gens = self.generators
        chain = StabilizerChain(self.degree)
        new_gens: list[Permutation] = []
        work = []
        for g, h in combinations(gens, 2):
            c = g.commutator(h)
            if chain.extend(c._img):
                new_gens.append(c)
                work.append(c)
        while work:
            d = work.pop()
            for g in gens:
                e = d.conj(g)
                if chain.extend(e._img):
                    new_gens.append(e)
                    work.append(e)
        derived = PermGroup(self.degree, new_gens)
        derived._chain = chain
        return derived

    def derived_series(self) -> tuple:
        """G, G', G'', ... until the order stabilizes."""
        series = [self]
        while True:
            nxt = series[-1].derived_subgroup()
            if nxt.order() == series[-1].order():
                break
            series.append(nxt)
            if nxt.order() == 1:
                break
        return tuple(series)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order() == 1

    # -- miscellany -------------------------------------------------------------

    def conjugated(self, x: Permutation) -> "PermGroup":
        return PermGroup(self.degree, [g.conj(x) for g in self.generators])

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def find_odd_element(self) -> Permutation | None:
        """First odd generator, or None (all generators even means the
        whole group lies in the alternating group)."""
        for g in self.generators:
            if not g.is_even:
                return g
        return None

    def key(self) -> tuple:
        return (self.degree, tuple(sorted(g._img for g in self.generators)))

    def __repr__(self) -> str:
        gens = ",".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"


# -- intersections ------------------------------------------------------------


def group_from_elements(degree: int, elements: Iterable[tuple]) -> PermGroup:
    """Group generated by (known-closed) raw elements; generator list is
    thinned by incremental sifting."""
    chain = StabilizerChain(degree)
    gens = []
    count = 0
    for e in elements:
        count += 1
        if chain.extend(e):
            gens.append(Permutation._raw(e))
    group = PermGroup(degree, gens)
    group._chain = chain
    assert group.order() == count, "element set was not closed"
    return group


def conjugate_intersection(
    group: PermGroup,
    conjugators: Sequence[Permutation],
    cap: int = DEFAULT_ORDER_CAP,
) -> list:
    """Raw elements of the intersection of G^x over the given conjugators.

    Membership in G^x is tested as x e x^-1 in G, so no conjugated chains
    are ever built.
    """
    if not conjugators:
        raise ValueError("need at least one conjugator")
    chain = group.chain
    x0 = conjugators[0]
    if x0.is_identity:
        elems = group.element_list(cap)
    else:
        x0r, x0i = x0._img, x0.inverse()._img
        elems = [
            _compose(_compose(x0i, e), x0r) for e in group.element_list(cap)
        ]
    for x in conjugators[1:]:
        xr, xi = x._img, x.inverse()._img
        elems = [
            e for e in elems if chain.contains(_compose(_compose(xr, e), xi))
        ]
        if len(elems) == 1:
            break
    return elems


def intersect_conjugates(
    group: PermGroup,
    conjugators: Sequence[Permutation],
    cap: int = DEFAULT_ORDER_CAP,
) -> PermGroup:
    elems = conjugate_intersection(group, conjugators, cap)
    return group_from_elements(group.degree, elems)


def intersect(
    g: PermGroup, h: PermGroup, cap: int = DEFAULT_ORDER_CAP
) -> PermGroup:
    """Exact subgroup intersection by enumerating the smaller factor.

    CapExceeded if both orders exceed the cap; never approximates.
    """
    if g.degree != h.degree:
        raise DegreeMismatch("intersection across degrees")
    small, big = (g, h) if g.order() <= h.order() else (h, g)
    if small.order() > cap:
        raise CapExceeded(
            "order", f"both factors exceed cap {cap}: {g.order()}, {h.order()}"
        )
    chain = big.chain
    elems = [e for e in small.element_list(cap) if chain.contains(e)]
    return group_from_elements(g.degree, elems)
