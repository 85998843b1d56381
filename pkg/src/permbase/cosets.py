"""The right-coset space Omega = G\\S for S the symmetric or alternating
group, with canonical representatives, tuple actions, stabilizer tests and
transporter (same-orbit) decisions.

A coset Gx is keyed by its canonical representative: the lexicographically
least image sequence in Gx, found by greedy descent through G's stabilizer
chain (the chain's ascending base points make per-level greedy choices
globally lex-minimal).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import BadParams, CapExceeded, DegreeMismatch
from .groups import DEFAULT_ORDER_CAP, PermGroup, _compose
from .perms import Permutation, perm_from_cycles

MAX_TUPLE_LEN = 5

SYMMETRIC = "symmetric"
ALTERNATING = "alternating"


def ambient_generators(degree: int, ambient: str) -> list:
    """Canonical generators of S_n or A_n."""
    if ambient == SYMMETRIC:
        gens = []
        if degree >= 2:
            gens.append(perm_from_cycles(degree, [(1, 2)]))
        if degree >= 3:
            gens.append(perm_from_cycles(degree, [tuple(range(1, degree + 1))]))
        return gens
    if ambient == ALTERNATING:
        return [
            perm_from_cycles(degree, [(i, i + 1, i + 2)])
            for i in range(1, degree - 1)
        ]
    raise BadParams(f"unknown ambient {ambient!r}")


def ambient_order(degree: int, ambient: str) -> int:
    n = factorial(degree)
    return n if ambient == SYMMETRIC else n // 2


class CosetSpace:
    """Right cosets of a subgroup inside S_n or A_n."""

    def __init__(self, group: PermGroup, ambient: str = SYMMETRIC):
        if ambient not in (SYMMETRIC, ALTERNATING):
            raise BadParams(f"unknown ambient {ambient!r}")
        if ambient == ALTERNATING and group.find_odd_element() is not None:
            raise BadParams("group is not inside the alternating group")
        self.group = group
        self.ambient = ambient
        self.degree = group.degree
        self._cosets: list | None = None

    @property
    def key(self) -> tuple:
        return (self.ambient,) + self.group.key()

    def index(self) -> int:
        return ambient_order(self.degree, self.ambient) // self.group.order()

    def canonical_rep(self, x: Permutation) -> Permutation:
        """Lexicographically least element of Gx (constant on the coset)."""
        if x.degree != self.degree:
            raise DegreeMismatch("coset representative of wrong degree")
        rep = x._img
        for lvl in self.group.chain.levels:
            best = None
            best_img = self.degree
            for delta in lvl.orbit:
                v = rep[delta]
                if v < best_img:
                    best_img = v
                    best = delta
            rep = _compose(lvl.orbit[best], rep)
        return Permutation._raw(rep)

    def coset(self, x: Permutation) -> "Coset":
        return Coset(self, self.canonical_rep(x))

    def identity_coset(self) -> "Coset":
        return self.coset(Permutation.identity(self.degree))

    def cosets(self, cap: int = 10**5) -> list:
        """All cosets, BFS over the ambient generators, sorted by rep."""
        if self.index() > cap:
            raise CapExceeded("index", f"index {self.index()} > cap {cap}")
        if self._cosets is None:
            gens = ambient_generators(self.degree, self.ambient)
            start = self.canonical_rep(Permutation.identity(self.degree))
            seen = {start._img: start}
            frontier = [start]
            while frontier:
                nxt = []
                for rep in frontier:
                    for g in gens:
                        image = self.canonical_rep(rep * g)
                        if image._img not in seen:
                            seen[image._img] = image
                            nxt.append(image)
                frontier = nxt
            assert len(seen) == self.index()
            self._cosets = [Coset(self, r) for r in sorted(seen.values())]
        return self._cosets

    def tuple_of(self, reps: Sequence[Permutation]) -> "CosetTuple":
        return CosetTuple(self, tuple(self.coset(r) for r in reps))

    def __repr__(self) -> str:
        return f"CosetSpace({self.group!r}, {self.ambient})"


@dataclass(frozen=True)
class Coset:
    """A right coset Gx, held by its canonical representative."""

    space: CosetSpace
    rep: Permutation

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coset)
            and self.space.key == other.space.key
            and self.rep == other.rep
        )

    def __hash__(self) -> int:
        return hash((self.space.key, self.rep))

    def __repr__(self) -> str:
        return f"Coset(G*{self.rep})"


class CosetTuple:
    """A tuple of at most five cosets sharing one space."""

    def __init__(self, space: CosetSpace, entries: tuple):
        if len(entries) > MAX_TUPLE_LEN:
            raise BadParams(f"coset tuples are capped at {MAX_TUPLE_LEN} entries")
        if not entries:
            raise BadParams("empty coset tuple")
        for c in entries:
            if c.space.key != space.key:
                raise BadParams("coset tuple entries from different spaces")
        self.space = space
        self.entries = tuple(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CosetTuple)
            and self.space.key == other.space.key
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.space.key, self.entries))

    def __repr__(self) -> str:
        return "CosetTuple(" + ", ".join(str(c.rep) for c in self.entries) + ")"

    def reps(self) -> list:
        return [c.rep for c in self.entries]

    def act(self, s: Permutation) -> "CosetTuple":
        """Entrywise right multiplication Gx -> G(xs), re-canonicalized."""
        if s.degree != self.space.degree:
            raise DegreeMismatch("acting permutation of wrong degree")
        if self.space.ambient == ALTERNATING and not s.is_even:
            raise BadParams("odd permutation acting on an alternating coset space")
        return CosetTuple(
            self.space, tuple(self.space.coset(c.rep * s) for c in self.entries)
        )

    def has_distinct_entries(self) -> bool:
        return len({c.rep for c in self.entries}) == len(self.entries)

    def stabilizer_elements(self, cap: int = DEFAULT_ORDER_CAP) -> list:
        """Raw elements of the pointwise stabilizer cap_i G^{x_i} in S."""
        from .groups import conjugate_intersection

        return conjugate_intersection(self.space.group, self.reps(), cap)

    def stabilizer_is_trivial(self, cap: int = DEFAULT_ORDER_CAP) -> bool:
        return len(self.stabilizer_elements(cap)) == 1


def act(t: CosetTuple, s: Permutation) -> CosetTuple:
    return t.act(s)


def canonical_rep(group: PermGroup, x: Permutation) -> Permutation:
    return CosetSpace(group).canonical_rep(x)


def tuple_stabilizer_is_trivial(
    t: CosetTuple, cap: int = DEFAULT_ORDER_CAP
) -> bool:
    """True iff t is a regular point: its pointwise stabilizer in S is
    trivial (with trivial core this is exactly cap_i G^{x_i} = 1)."""
    return t.stabilizer_is_trivial(cap)


def same_orbit(
    t1: CosetTuple, t2: CosetTuple, cap: int = DEFAULT_ORDER_CAP
) -> Permutation | None:
    """A transporter g in S with act(t1, g) == t2, or None.

    The transporter set is cap_i x_i^-1 G y_i, an intersection of cosets of
    the conjugates G^{x_i}.  It is carried as a pair (D, w) with the set
    equal to D*w, intersecting one constraint at a time; each step searches
    the current D for an element entering the next constraint.
    """
    if t1.space.key != t2.space.key:
        raise BadParams("tuples live in different coset spaces")
    if len(t1) != len(t2):
        raise BadParams("tuples of different length")
    space = t1.space
    group = space.group
    chain = group.chain
    n = space.degree

    def in_constraint(e: tuple, xr: tuple, xi: tuple) -> bool:
        # e in G^x  <=>  x e x^-1 in G
        return chain.contains(_compose(_compose(xr, e), xi))

    x1 = t1.entries[0].rep
    y1 = t2.entries[0].rep
    if x1.is_identity:
        d_elems = list(group.element_list(cap))
    else:
        x1r, x1i = x1._img, x1.inverse()._img
        d_elems = [
            _compose(_compose(x1i, e), x1r) for e in group.element_list(cap)
        ]
    w = (x1.inverse() * y1)._img

    for c1, c2 in zip(t1.entries[1:], t2.entries[1:]):
        x, y = c1.rep, c2.rep
        xr, xi = x._img, x.inverse()._img
        u_inv = (y.inverse() * x)._img  # (x^-1 y)^-1
        # find d in D with d*w*u^-1 in G^x
        hit = None
        w_uinv = _compose(w, u_inv)
        for d in d_elems:
            if in_constraint(_compose(d, w_uinv), xr, xi):
                hit = d
                break
        if hit is None:
            return None
        w = _compose(hit, w)
        d_elems = [d for d in d_elems if in_constraint(d, xr, xi)]

    g = Permutation._raw(w)
    if space.ambient == ALTERNATING and not g.is_even:
        g = None
        for d in d_elems:
            cand = Permutation._raw(_compose(d, w))
            if cand.is_even:
                g = cand
                break
        if g is None:
            return None
    assert t1.act(g) == t2
    return g
