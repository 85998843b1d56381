"""Exact arithmetic on permutations of {1..n}.

Conventions used throughout the library:

* points are 1-based at every interface (internal storage is 0-based);
* permutations act on the right and compose left to right, so
  ``(i)(p * q) == ((i)p)q`` -- ``p`` is applied first;
* conjugation is ``g^x = x^-1 g x``, i.e. ``g`` with its points relabelled
  through ``x``.

Cycle-notation grammar: ``perm := "()" | cycle+``,
``cycle := "(" int ("," int)+ ")"``, no whitespace, points >= 1.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    CycleSyntaxError,
    DegreeMismatch,
    PointOutOfRange,
    RepeatedPoint,
)


class Permutation:
    """An immutable bijection of {1..n}, hashable and totally ordered."""

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        img = tuple(i - 1 for i in images)
        n = len(img)
        if n < 1 or sorted(img) != list(range(n)):
            raise ValueError(f"not a bijection of 1..{n}: {list(images)!r}")
        self._img = img

    # -- construction --------------------------------------------------

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        # trusted 0-based image tuple, skips validation
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls._raw(tuple(range(degree)))

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based image sequence; entry i-1 is the image of point i."""
        return tuple(v + 1 for v in self._img)

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._img))

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._img[point - 1] + 1

    def min_moved(self) -> int | None:
        """Least 1-based moved point, or None for the identity."""
        for i, v in enumerate(self._img):
            if v != i:
                return i + 1
        return None

    def support(self) -> tuple:
        return tuple(i + 1 for i, v in enumerate(self._img) if v != i)

    # -- group operations ------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Right-action composition: self first, then other."""
        if len(self._img) != len(other._img):
            raise DegreeMismatch(
                f"degree {len(self._img)} vs {len(other._img)}"
            )
        o = other._img
        return Permutation._raw(tuple(o[v] for v in self._img))

    def inverse(self) -> "Permutation":
        img = self._img
        inv = [0] * len(img)
        for i, v in enumerate(img):
            inv[v] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        n = len(self._img)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, x: "Permutation") -> "Permutation":
        """x^-1 * self * x: self with points relabelled through x."""
        if len(self._img) != len(x._img):
            raise DegreeMismatch("conjugation across degrees")
        xi = x._img
        si = self._img
        out = [0] * len(si)
        for i, v in enumerate(si):
            out[xi[i]] = xi[v]
        return Permutation._raw(tuple(out))

    def commutator(self, other: "Permutation") -> "Permutation":
        """self^-1 * other^-1 * self * other."""
        return self.inverse() * other.inverse() * self * other

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    # -- cycle structure ---------------------------------------------------

    def cycles(self) -> tuple:
        """Disjoint cycles as 1-based tuples, fixed points omitted,
        ordered by least moved point, each cycle starting at its least point."""
        img = self._img
        n = len(img)
        seen = [False] * n
        out = []
        for i in range(n):
            if seen[i] or img[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = img[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = img[j]
            out.append(tuple(p + 1 for p in cyc))
        return tuple(out)

    def cycle_type(self) -> tuple:
        """Sorted multiset of cycle lengths, fixed points included."""
        moved = sum(len(c) for c in self.cycles())
        lengths = [1] * (len(self._img) - moved) + [len(c) for c in self.cycles()]
        return tuple(sorted(lengths))

    @property
    def is_even(self) -> bool:
        # sign = (-1)^(n - #cycles incl. fixed points)
        n = len(self._img)
        ncycles = (n - sum(len(c) for c in self.cycles())) + len(self.cycles())
        return (n - ncycles) % 2 == 0

    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    # -- comparisons / formatting -----------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)


# -- module-level operations (functional spellings of the above) -----------


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p applied first, then q."""
    return p * q


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """x^-1 * g * x."""
    return g.conj(x)


def cycle_structure(p: Permutation) -> tuple:
    return p.cycles()


def parity(p: Permutation) -> str:
    return p.parity()


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a whitespace-free product of disjoint cycles over 1..degree.

    "()" denotes the identity; points absent from the text are fixed.
    Raises CycleSyntaxError / RepeatedPoint / PointOutOfRange.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if text == "()":
        return Permutation.identity(degree)
    if not text:
        raise CycleSyntaxError("empty permutation string")
    img = list(range(degree))
    seen = set()
    i = 0
    while i < len(text):
        if text[i] != "(":
            raise CycleSyntaxError(f"expected '(' at position {i} in {text!r}")
        close = text.find(")", i)
        if close < 0:
            raise CycleSyntaxError(f"unclosed cycle in {text!r}")
        body = text[i + 1 : close]
        parts = body.split(",")
        if len(parts) < 2:
            raise CycleSyntaxError(f"cycle {text[i:close + 1]!r} needs >= 2 points")
        pts = []
        for s in parts:
            if not s.isdigit() or int(s) < 1:
                raise CycleSyntaxError(f"bad point {s!r} in {text!r}")
            v = int(s)
            if v > degree:
                raise PointOutOfRange(f"point {v} exceeds degree {degree}")
            if v in seen:
                raise RepeatedPoint(f"point {v} repeated in {text!r}")
            seen.add(v)
            pts.append(v - 1)
        for a, b in zip(pts, pts[1:]):
            img[a] = b
        img[pts[-1]] = pts[0]
        i = close + 1
    return Permutation._raw(tuple(img))


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation from disjoint 1-based cycles given as sequences."""
    img = list(range(degree))
    seen = set()
    for cyc in cycles:
        pts = [p - 1 for p in cyc]
        for p in pts:
            if not 0 <= p < degree:
                raise PointOutOfRange(f"point {p + 1} exceeds degree {degree}")
            if p in seen:
                raise RepeatedPoint(f"point {p + 1} repeated")
            seen.add(p)
        for a, b in zip(pts, pts[1:]):
            img[a] = b
        if pts:
            img[pts[-1]] = pts[0]
    return Permutation._raw(tuple(img))


def transposition(degree: int, a: int, b: int) -> Permutation:
    return perm_from_cycles(degree, [(a, b)])


def restrict(p: Permutation, points: Sequence[int]) -> Permutation:
    """Restriction of p to an invariant point set, relabelled to 1..len."""
    pts = sorted(points)
    index = {pt: i for i, pt in enumerate(pts)}
    img = []
    for pt in pts:
        image = p.apply(pt)
        if image not in index:
            raise DegreeMismatch(f"{pts} is not invariant under {p}")
        img.append(index[image])
    return Permutation._raw(tuple(img))


def embed(p: Permutation, points: Sequence[int], degree: int) -> Permutation:
    """Inverse of restrict: act as p on the given points, fix the rest."""
    pts = sorted(points)
    if len(pts) != p.degree:
        raise DegreeMismatch("embedding support does not match degree")
    img = list(range(degree))
    for i, pt in enumerate(pts):
        img[pt - 1] = pts[p._img[i]] - 1
    return Permutation._raw(tuple(img))
