"""Permutations on {1..n} with disjoint-cycle text I/O.

Composition convention (fixed for the whole package): ``compose(p, q)``
applies q FIRST, then p, i.e. the result maps i to p(q(i)).  Conjugation
is ``conjugate(g, a) = a o g o a^-1`` and the commutator is
``commutator(x, y) = x o y o x^-1 o y^-1``.  All public surfaces are
1-based; the internal image arrays are 0-based.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Sequence


class DegreeMismatchError(ValueError):
    """Operands act on different numbers of points."""


class CycleFormatError(ValueError):
    """Malformed, repeated or out-of-range cycle text."""


def _mul(p: tuple, q: tuple) -> tuple:
    # raw 0-based composition, apply q first: r[i] = p[q[i]]
    return tuple(map(p.__getitem__, q))


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _identity(n: int) -> tuple:
    return tuple(range(n))


class Permutation:
    """Immutable bijection of {1..n}; hashable, usable as a dict key."""

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        """Build from the 1-based image array: images[i-1] is the image of i."""
        img = tuple(v - 1 for v in images)
        n = len(img)
        if sorted(img) != list(range(n)):
            raise ValueError(f"not a bijection of 1..{n}: {list(images)!r}")
        self._img = img

    @classmethod
    def _from_raw(cls, img: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be a positive integer")
        return cls._from_raw(_identity(degree))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """The 1-based image array."""
        return tuple(v + 1 for v in self._img)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= len(self._img):
            raise ValueError(f"point {point} out of range 1..{len(self._img)}")
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        """compose(self, other): apply other first, then self."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._img) != len(other._img):
            raise DegreeMismatchError(
                f"degree {len(self._img)} != {len(other._img)}"
            )
        return Permutation._from_raw(_mul(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation._from_raw(_inv(self._img))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        r = _identity(len(self._img))
        b = self._img
        while k:
            if k & 1:
                r = _mul(r, b)
            b = _mul(b, b)
            k >>= 1
        return Permutation._from_raw(r)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def order(self) -> int:
        """Least k >= 1 with p^k = identity: the lcm of the cycle lengths."""
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def cycles(self) -> list:
        """Disjoint cycles as 1-based tuples, canonical form: each cycle
        starts at its smallest moved point, cycles sorted by that point;
        fixed points omitted."""
        img = self._img
        seen = [False] * len(img)
        out = []
        for i in range(len(img)):
            if seen[i] or img[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = img[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = img[j]
            out.append(tuple(v + 1 for v in cyc))
        return out

    def cycle_type(self) -> tuple:
        """Multiset of cycle lengths >= 2, sorted; invariant under conjugation."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def support(self) -> tuple:
        """Moved points, ascending, 1-based."""
        return tuple(i + 1 for i, j in enumerate(self._img) if i != j)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        # canonical order: lexicographic on image arrays
        return self._img < other._img

    def __repr__(self) -> str:
        return f"Permutation({print_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product p o q, applying q first: (p o q)(i) = p(q(i))."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def order(p: Permutation) -> int:
    return p.order()


def conjugate(g: Permutation, a: Permutation) -> Permutation:
    """a o g o a^-1; preserves cycle type."""
    if g.degree != a.degree:
        raise DegreeMismatchError(f"degree {g.degree} != {a.degree}")
    ai = a._img
    return Permutation._from_raw(_mul(ai, _mul(g._img, _inv(ai))))


def commutator(x: Permutation, y: Permutation) -> Permutation:
    """x o y o x^-1 o y^-1."""
    if x.degree != y.degree:
        raise DegreeMismatchError(f"degree {x.degree} != {y.degree}")
    xi, yi = x._img, y._img
    return Permutation._from_raw(_mul(xi, _mul(yi, _mul(_inv(xi), _inv(yi)))))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle text like "(1,2,3)(4,5)" at an explicit degree.

    Fixed points may be omitted; the empty string (or whitespace) is the
    identity.  Raises CycleFormatError on malformed text, a repeated point,
    or a point outside 1..degree.
    """
    if degree < 1:
        raise ValueError("degree must be a positive integer")
    img = list(range(degree))
    used = set()
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise CycleFormatError(f"expected '(' at position {pos}: {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise CycleFormatError(f"unclosed cycle at position {pos}: {text!r}")
        body = text[pos + 1 : end].strip()
        pos = end + 1
        if not body:
            continue
        points = []
        for token in body.split(","):
            token = token.strip()
            if not token.isdigit():
                raise CycleFormatError(f"bad point {token!r} in {text!r}")
            points.append(int(token))
        for v in points:
            if not 1 <= v <= degree:
                raise CycleFormatError(f"point {v} out of range 1..{degree}")
            if v in used:
                raise CycleFormatError(f"point {v} repeated in {text!r}")
            used.add(v)
        for a, b in zip(points, points[1:]):
            img[a - 1] = b - 1
        img[points[-1] - 1] = points[0] - 1
    return Permutation._from_raw(tuple(img))


def print_cycles(p: Permutation) -> str:
    """Canonical disjoint-cycle text; "" for the identity."""
    return "".join("(" + ",".join(map(str, c)) + ")" for c in p.cycles())


def is_prime(n: int) -> bool:
    """Trial division; fine for the element orders and field sizes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
