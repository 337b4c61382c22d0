"""Subgroup machinery: strong generating sets, order, membership, orbits,
normal closure, centralizers, conjugacy classes, element enumeration.

The engine is a deterministic Schreier-Sims over stabilizer chains: groups
here are desk scale (degree <= ~100, order <= ~10^6), so reproducibility is
worth more than randomized speed.  All search orders are canonical
(lexicographic on image arrays, sorted orbit points), so every derived
object is identical across runs.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

from .perm import (
    DegreeMismatchError,
    Permutation,
    _identity,
    _inv,
    _mul,
)

DEFAULT_ELEMENT_CAP = 200_000


class CapExceededError(RuntimeError):
    """An enumeration-based operation was asked to exceed its element cap."""


class MembershipError(ValueError):
    """A permutation required to lie in a group does not."""


class GeneratorSet:
    """A degree plus a list of generating permutations.

    Identity entries are dropped; the empty list generates the trivial group.
    """

    __slots__ = ("degree", "generators")

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        if degree < 1:
            raise ValueError("degree must be a positive integer")
        gens = []
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} != {degree}"
                )
            if not g.is_identity():
                gens.append(g)
        self.degree = degree
        self.generators = gens

    def __repr__(self) -> str:
        return f"GeneratorSet(degree={self.degree}, n_gens={len(self.generators)})"


class _Chain:
    """Mutable stabilizer chain over raw 0-based image tuples.

    levels[i] generates the stabilizer of base[:i]; transversals[i] maps each
    point of the i-th basic orbit to a coset representative u with
    u[base[i]] = point.
    """

    __slots__ = ("degree", "base", "levels", "transversals", "_ident")

    def __init__(self, degree: int, gens: Sequence[tuple] = ()):
        self.degree = degree
        self.base: list[int] = []
        self.levels: list[list[tuple]] = []
        self.transversals: list[dict[int, tuple]] = []
        self._ident = _identity(degree)
        new = [g for g in gens if g != self._ident]
        if new:
            self.extend(new)

    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        """Strip g through the chain from the given level.

        Returns (residue, level): level is where stripping got stuck, or
        len(base) if every base point could be fixed.
        """
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            if x == self.base[i]:
                continue
            u = self.transversals[i].get(x)
            if u is None:
                return g, i
            g = _mul(_inv(u), g)
        return g, len(self.base)

    def contains(self, g: tuple) -> bool:
        residue, level = self.sift(g)
        return level == len(self.base) and residue == self._ident

    def _recompute_orbit(self, i: int) -> None:
        b = self.base[i]
        gens = self.levels[i]
        T = {b: self._ident}
        frontier = [b]
        while frontier:
            nxt = []
            for pt in frontier:
                u = T[pt]
                for s in gens:
                    img = s[pt]
                    if img not in T:
                        T[img] = _mul(s, u)
                        nxt.append(img)
            frontier = nxt
        self.transversals[i] = T

    def _new_base_point(self, g: tuple) -> None:
        bp = next(i for i, v in enumerate(g) if i != v)
        self.base.append(bp)
        self.levels.append([])
        self.transversals.append({bp: self._ident})

    def extend(self, new_gens: Iterable[tuple]) -> None:
        """Add generators and restore the strong-generating property."""
        changed = False
        for g in new_gens:
            if g == self._ident or self.contains(g):
                continue
            j = 0
            while j < len(self.base) and g[self.base[j]] == self.base[j]:
                j += 1
            if j == len(self.base):
                self._new_base_point(g)
            for l in range(j + 1):
                self.levels[l].append(g)
            for l in range(j + 1):
                self._recompute_orbit(l)
            changed = True
        if changed:
            self._schreier_sims()

    def _schreier_sims(self) -> None:
        """Deterministic verification sweep from the deepest level upward."""
        ident = self._ident
        i = len(self.base) - 1
        while i >= 0:
            T = self.transversals[i]
            gens = self.levels[i]
            inv_cache = {pt: _inv(u) for pt, u in T.items()}
            restart = None
            for pt in sorted(T):
                u = T[pt]
                for s in gens:
                    sg = _mul(inv_cache[s[pt]], _mul(s, u))
                    if sg == ident:
                        continue
                    residue, j = self.sift(sg, i + 1)
                    if residue == ident:
                        continue
                    if j == len(self.base):
                        self._new_base_point(residue)
                    for l in range(i + 1, j + 1):
                        self.levels[l].append(residue)
                        self._recompute_orbit(l)
                    restart = j
                    break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1

    def strong_generators(self) -> list[tuple]:
        seen: dict[tuple, None] = {}
        for level in self.levels:
            for g in level:
                seen.setdefault(g)
        return list(seen)


class Bsgs:
    """Immutable base / strong generating set handle on a permutation group.

    Built once, then safe to share: queries never mutate it.
    """

    __slots__ = ("degree", "_chain", "_gens_raw", "_order")

    def __init__(self, gens: GeneratorSet):
        self.degree = gens.degree
        self._gens_raw = [g._img for g in gens.generators]
        self._chain = _Chain(gens.degree, self._gens_raw)
        self._order = self._chain.order()

    @classmethod
    def _wrap(cls, degree: int, chain: _Chain, defining_raw: list[tuple]) -> "Bsgs":
        """Adopt an already-built chain (which must not be mutated afterwards)."""
        group = object.__new__(cls)
        group.degree = degree
        group._chain = chain
        group._gens_raw = defining_raw
        group._order = chain.order()
        return group

    @property
    def order(self) -> int:
        return self._order

    @property
    def base(self) -> tuple:
        """Base points, 1-based."""
        return tuple(b + 1 for b in self._chain.base)

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._from_raw(g) for g in self._chain.strong_generators()]

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        """Per base point: orbit point (1-based) -> coset representative."""
        return [
            {pt + 1: Permutation._from_raw(u) for pt, u in t.items()}
            for t in self._chain.transversals
        ]

    @property
    def generators(self) -> list[Permutation]:
        """The defining generators."""
        return [Permutation._from_raw(g) for g in self._gens_raw]

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree {p.degree} != {self.degree}")
        return self._chain.contains(p._img)

    def is_trivial(self) -> bool:
        return self._order == 1

    def __repr__(self) -> str:
        return f"Bsgs(degree={self.degree}, order={self._order})"

    def _contains_raw(self, g: tuple) -> bool:
        return self._chain.contains(g)


def build_bsgs(gens: GeneratorSet) -> Bsgs:
    """Deterministic Schreier-Sims; order and membership are exact."""
    return Bsgs(gens)


def contains(group: Bsgs, p: Permutation) -> bool:
    return group.contains(p)


def same_subgroup(a: Bsgs, b: Bsgs) -> bool:
    """True iff a and b are the same subgroup (order + mutual membership)."""
    if a.degree != b.degree or a.order != b.order:
        return False
    return all(b._contains_raw(g) for g in a._gens_raw) and all(
        a._contains_raw(g) for g in b._gens_raw
    )


def normal_closure(group: Bsgs, seeds) -> Bsgs:
    """Smallest subgroup of `group` containing the seeds and invariant under
    conjugation by the group's generators.

    Seeds must be members.  Accepts a GeneratorSet or a list of Permutation.
    """
    if isinstance(seeds, GeneratorSet):
        seed_perms = seeds.generators
        if seeds.degree != group.degree:
            raise DegreeMismatchError(
                f"seed degree {seeds.degree} != {group.degree}"
            )
    else:
        seed_perms = list(seeds)
    for s in seed_perms:
        if not group.contains(s):
            raise MembershipError(f"seed {s!r} is not a member of the group")

    ident = _identity(group.degree)
    amb = group._gens_raw
    amb_inv = [_inv(a) for a in amb]
    closure_gens: list[tuple] = []
    for s in seed_perms:
        if s._img != ident and s._img not in closure_gens:
            closure_gens.append(s._img)
    chain = _Chain(group.degree, closure_gens)
    frontier = list(closure_gens)
    while frontier:
        new: list[tuple] = []
        batch: set[tuple] = set()
        for c in frontier:
            for a, ai in zip(amb, amb_inv):
                t = _mul(a, _mul(c, ai))
                if t not in batch and not chain.contains(t):
                    new.append(t)
                    batch.add(t)
        chain.extend(new)
        closure_gens.extend(new)
        frontier = new
    return Bsgs._wrap(group.degree, chain, closure_gens)


def centralizer(group: Bsgs, x: Permutation) -> Bsgs:
    """Centralizer of x, via the conjugation orbit of x with Schreier
    generators; stops once the orbit-stabilizer bound |G|/|orbit| is hit."""
    if not group.contains(x):
        raise MembershipError(f"{x!r} is not a member of the group")
    xr = x._img
    orbit, transversal = _conjugation_orbit(group, xr)
    target, rem = divmod(group.order, len(orbit))
    assert rem == 0, "orbit size must divide the group order"

    chain = _Chain(group.degree, ())
    gens = group._gens_raw
    ident = _identity(group.degree)
    done = False
    for y in sorted(orbit):
        u = transversal[y]
        u_inv = _inv(u)
        for s in gens:
            z = _mul(s, _mul(y, _inv(s)))
            w_inv = _inv(transversal[z])
            cand = _mul(w_inv, _mul(s, u))
            if cand != ident and not chain.contains(cand):
                chain.extend([cand])
                if chain.order() == target:
                    done = True
                    break
        if done:
            break
    assert chain.order() * len(orbit) == group.order
    return Bsgs._wrap(group.degree, chain, chain.strong_generators())


def _conjugation_orbit(
    group: Bsgs, x: tuple
) -> tuple[dict[tuple, None], dict[tuple, tuple]]:
    """Orbit of x under conjugation by the group, with a transversal:
    transversal[y] = u such that u x u^-1 = y."""
    ident = _identity(group.degree)
    gens = group._gens_raw
    transversal = {x: ident}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            u = transversal[y]
            for s in gens:
                z = _mul(s, _mul(y, _inv(s)))
                if z not in transversal:
                    transversal[z] = _mul(s, u)
                    nxt.append(z)
        frontier = nxt
    return dict.fromkeys(transversal), transversal


class ConjugacyClass:
    """A conjugacy class, fully enumerated: representative (the lexicographically
    smallest member), all elements, and the class size."""

    __slots__ = ("representative", "_elements_raw", "_conjugators", "degree")

    def __init__(self, degree: int, elements_raw: list[tuple], conjugators: dict):
        self.degree = degree
        self._elements_raw = elements_raw
        self._conjugators = conjugators
        self.representative = Permutation._from_raw(elements_raw[0])

    @property
    def elements(self) -> list[Permutation]:
        return [Permutation._from_raw(e) for e in self._elements_raw]

    @property
    def class_size(self) -> int:
        return len(self._elements_raw)

    def conjugator(self, h: Permutation) -> Permutation:
        """Some x with x * rep * x^-1 = h; h must be a class member."""
        u = self._conjugators.get(h._img)
        if u is None:
            raise MembershipError(f"{h!r} is not in this conjugacy class")
        return Permutation._from_raw(u)

    def __repr__(self) -> str:
        return (
            f"ConjugacyClass(rep={self.representative!r}, "
            f"size={self.class_size})"
        )


def conjugacy_classes(
    group: Bsgs, element_cap: int = DEFAULT_ELEMENT_CAP
) -> list[ConjugacyClass]:
    """All conjugacy classes by full element enumeration, ordered by their
    (lexicographically minimal) representatives."""
    if group.order > element_cap:
        raise CapExceededError(
            f"group order {group.order} exceeds element cap {element_cap}; "
            "use a randomized mode instead"
        )
    all_elements = sorted(_enumerate_raw(group))
    assigned: set[tuple] = set()
    classes = []
    for e in all_elements:
        if e in assigned:
            continue
        cls = _class_of_raw(group, e)
        assigned.update(cls._elements_raw)
        classes.append(cls)
    assert sum(c.class_size for c in classes) == group.order
    return classes


def class_of(group: Bsgs, g: Permutation) -> ConjugacyClass:
    """The conjugacy class of one member, without full group enumeration."""
    if not group.contains(g):
        raise MembershipError(f"{g!r} is not a member of the group")
    return _class_of_raw(group, g._img)


def _class_of_raw(group: Bsgs, g: tuple) -> ConjugacyClass:
    orbit, transversal = _conjugation_orbit(group, g)
    elements = sorted(orbit)
    rep = elements[0]
    if rep != g:
        # re-root the transversal at the canonical representative
        to_g = _inv(transversal[rep])  # maps rep back to g: to_g rep to_g^-1 = g
        transversal = {y: _mul(u, to_g) for y, u in transversal.items()}
    return ConjugacyClass(group.degree, elements, transversal)


def random_element(group: Bsgs, rng) -> Permutation:
    """Uniform random element via transversal sampling (exactly uniform).

    `rng` is a random.Random or an int seed; a fixed Random instance yields
    a reproducible sequence.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    g = _identity(group.degree)
    for t in group._chain.transversals:
        pts = sorted(t)
        g = _mul(g, t[pts[rng.randrange(len(pts))]])
    return Permutation._from_raw(g)


def enumerate_elements(
    group: Bsgs, cap: int = DEFAULT_ELEMENT_CAP
) -> Iterator[Permutation]:
    """Every element exactly once, via transversal products, in a fixed
    deterministic order."""
    if group.order > cap:
        raise CapExceededError(
            f"group order {group.order} exceeds cap {cap}"
        )
    for g in _enumerate_raw(group):
        yield Permutation._from_raw(g)


def _enumerate_raw(group: Bsgs) -> Iterator[tuple]:
    transversals = group._chain.transversals
    ident = _identity(group.degree)
    if not transversals:
        yield ident
        return

    def rec(i: int, prefix: tuple) -> Iterator[tuple]:
        if i == len(transversals):
            yield prefix
            return
        for pt in sorted(transversals[i]):
            yield from rec(i + 1, _mul(prefix, transversals[i][pt]))

    yield from rec(0, ident)
