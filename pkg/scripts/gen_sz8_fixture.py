#!/usr/bin/env python3
"""Generate the Sz(8) fixture: a degree-65 permutation representation of the
Suzuki group of order 29120, written as a solvrad group file.

The group is built from its classical doubly transitive action on the 65
points {infinity} | F8 x F8.  With t the field automorphism of F8 satisfying
t(t(x)) = x^2 (so t(x) = x^4), the candidate maps are

    translations  (x, y) -> (x + a, y + b + x * t(a))
    torus         (x, y) -> (k * x, k * t(k) * y)
    inversion     (x, y) -> (y / N, x / N),  N(x, y) = x * t(x) * x + x*y + t(y)

with infinity swapped to (0, 0) by the inversion.  Several small variants of
the inversion/norm shape are tried; a candidate generating set is accepted
only if it passes decisive checks: the maps are bijections, the generated
permutation group has order exactly 29120 = 64 * 7 * 65, its element orders
lie in {1, 2, 4, 5, 7, 13}, and it is transitive and perfect.  Any wrong
variant fails the order check, so the output is self-certifying.  Finally the
generating set is reduced to two permutations and re-verified.
"""

import itertools
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from solvrad.bsgs import GeneratorSet, build_bsgs, conjugacy_classes
from solvrad.perm import Permutation, print_cycles
from solvrad.structure import derived_subgroup, is_solvable

# ---------------------------------------------------------------- GF(8)

POLY = 0b1011  # x^3 + x + 1


def gf_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0b1000:
            a ^= POLY
        b >>= 1
    return r


def gf_pow(a: int, n: int) -> int:
    r = 1
    while n:
        if n & 1:
            r = gf_mul(r, a)
        a = gf_mul(a, a)
        n >>= 1
    return r


def gf_inv(a: int) -> int:
    assert a != 0
    return gf_pow(a, 6)  # a^(8-2)


def theta(a: int) -> int:
    """Frobenius twist with theta(theta(x)) = x^2 over F8."""
    return gf_pow(a, 4)


assert all(theta(theta(x)) == gf_mul(x, x) for x in range(8))

# ------------------------------------------------- points and candidate maps

INF = ("inf",)
POINTS = [INF] + [(x, y) for x in range(8) for y in range(8)]
INDEX = {pt: i for i, pt in enumerate(POINTS)}  # 0-based; labels 1..65 later


def perm_from_map(fn):
    img = [0] * 65
    seen = set()
    for pt, i in INDEX.items():
        q = fn(pt)
        j = INDEX[q]
        if j in seen:
            return None  # not a bijection
        seen.add(j)
        img[i] = j + 1
    return Permutation(img)


def translation(a, b):
    def fn(pt):
        if pt is INF or pt == INF:
            return INF
        x, y = pt
        return ((x ^ a), y ^ b ^ gf_mul(x, theta(a)))

    return fn


def torus(k):
    lam = gf_mul(k, theta(k))

    def fn(pt):
        if pt == INF:
            return INF
        x, y = pt
        return (gf_mul(k, x), gf_mul(lam, y))

    return fn


def norm_a(x, y):
    # x^(theta+2) + x y + y^theta
    return gf_mul(theta(x), gf_mul(x, x)) ^ gf_mul(x, y) ^ theta(y)


def norm_b(x, y):
    # x y + theta(x) x^2 + ... alternate pairing: theta(x)*y + ...
    return gf_mul(gf_mul(x, x), theta(x)) ^ gf_mul(theta(x), y) ^ theta(y)


def inversion(norm, swap):
    def fn(pt):
        if pt == INF:
            return (0, 0)
        x, y = pt
        if (x, y) == (0, 0):
            return INF
        n = norm(x, y)
        if n == 0:
            return None
        ni = gf_inv(n)
        if swap:
            return (gf_mul(y, ni), gf_mul(x, ni))
        return (gf_mul(x, ni), gf_mul(y, ni))

    return fn


def try_candidate(norm, swap):
    # anisotropy of the norm is required for the inversion to be defined
    if any(norm(x, y) == 0 for x in range(8) for y in range(8) if (x, y) != (0, 0)):
        return None
    maps = [translation(1, 0), translation(0, 1), torus(2), inversion(norm, swap)]
    perms = []
    for m in maps:
        try:
            p = perm_from_map(m)
        except KeyError:
            return None
        if p is None:
            return None
        perms.append(p)
    G = build_bsgs(GeneratorSet(65, perms))
    if G.order != 29120:
        return None
    return perms, G


def main():
    found = None
    for norm, swap in itertools.product((norm_a, norm_b), (True, False)):
        r = try_candidate(norm, swap)
        tag = f"norm={norm.__name__} swap={swap}"
        if r is None:
            print(f"candidate {tag}: rejected")
            continue
        print(f"candidate {tag}: order 29120 confirmed")
        found = r
        break
    if found is None:
        raise SystemExit("no candidate passed; widen the catalog")
    perms, G = found

    # identity pinning
    classes = conjugacy_classes(G, 50_000)
    orders = sorted({c.representative.order() for c in classes})
    print("element orders:", orders)
    assert orders == [1, 2, 4, 5, 7, 13]
    assert len(G.transversals[0]) == 65, "not transitive"
    assert derived_subgroup(G).order == G.order, "not perfect"
    assert not is_solvable(G)

    # reduce to two generators, deterministically
    pool = perms + [a * b for a in perms for b in perms]
    pair = None
    for a, b in itertools.combinations(pool, 2):
        H = build_bsgs(GeneratorSet(65, [a, b]))
        if H.order == 29120:
            pair = (a, b)
            break
    assert pair is not None, "no generating pair in the pool"
    H = build_bsgs(GeneratorSet(65, list(pair)))
    assert H.order == 29120

    doc = {
        "format_version": 1,
        "name": "Sz(8)",
        "degree": 65,
        "generators": [print_cycles(p) for p in pair],
        "claimed_order": 29120,
        "provenance": (
            "Suzuki group Sz(8) in its natural doubly transitive action on "
            "65 points (F8 x F8 plus a point at infinity), generated by "
            "scripts/gen_sz8_fixture.py from the classical translation / "
            "torus / inversion maps over GF(8) and verified by computed "
            "order 29120 = 64*7*65, element-order spectrum {1,2,4,5,7,13}, "
            "transitivity, perfectness and nonsolvability."
        ),
    }
    out = Path(__file__).resolve().parent.parent / "src" / "solvrad" / "data" / "sz8.json"
    out.write_text(json.dumps(doc, indent=2) + "\n")
    print("wrote", out)


if __name__ == "__main__":
    main()
