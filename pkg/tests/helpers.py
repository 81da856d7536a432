"""Shared test utilities: cached builders, pair sets, independent oracles."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ratassoc import (
    DyckPath,
    build_ass,
    build_hat_ass,
    build_obstruction_graph,
    collapse_schedule,
    enumerate_dyck_paths,
    facet_of,
)


def coprime_pairs(max_sum: int | None = None, max_b: int | None = None) -> list[tuple[int, int]]:
    top_b = max_b if max_b is not None else (max_sum - 1 if max_sum else 0)
    out = []
    for b in range(2, top_b + 1):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            if max_sum is not None and a + b > max_sum:
                continue
            out.append((a, b))
    return out


def is_fuss(a: int, b: int) -> bool:
    """True when b = k*a + 1 for some positive k (the two models coincide)."""
    return b % a == 1


@lru_cache(maxsize=None)
def hat(a: int, b: int):
    return build_hat_ass(a, b, max_b=max(14, b))


@lru_cache(maxsize=None)
def ass(a: int, b: int):
    return build_ass(a, b, max_b=max(14, b))


@lru_cache(maxsize=None)
def obstruction_graph(a: int, b: int):
    return build_obstruction_graph(a, b)


@lru_cache(maxsize=None)
def schedule(a: int, b: int):
    return collapse_schedule(a, b, hat=hat(a, b), ass=ass(a, b), graph=obstruction_graph(a, b))


@lru_cache(maxsize=None)
def all_facets(a: int, b: int) -> tuple[frozenset, ...]:
    return tuple(facet_of(D) for D in enumerate_dyck_paths(a, b))


def oracle_in_ass(face, a: int, b: int) -> bool:
    """Exhaustive membership oracle: some Dyck path facet contains the face."""
    face = frozenset(face)
    return any(face <= F for F in all_facets(a, b))


def laser_hit_oracle(path: DyckPath, source) -> int:
    """Independent laser trace with exact rationals over every path segment.

    Walks all segments of the path, intersects each with the open ray of
    slope a/b from the source, takes the first intersection, and insists
    it lies in the open interior of an east step.  Returns the right
    endpoint's x-coordinate.
    """
    a, b = path.a, path.b
    x0, y0 = source
    slope = Fraction(a, b)
    best_x = None
    best_kind = None
    best_payload = None
    pts = path.points()
    for p, q in zip(pts, pts[1:]):
        if p.x == q.x:  # north step at x = p.x
            x = p.x
            if x <= x0:
                continue
            y = y0 + slope * (x - x0)
            assert y != p.y and y != q.y, "ray passes through a lattice point"
            if p.y < y < q.y and (best_x is None or x < best_x):
                best_x, best_kind, best_payload = Fraction(x), "north", (p, q)
        else:  # east step at height p.y
            y = p.y
            if y <= y0:
                continue
            x = x0 + Fraction((y - y0) * b, a)
            assert x != p.x and x != q.x, "ray passes through a lattice point"
            if p.x < x < q.x and (best_x is None or x < best_x):
                best_x, best_kind, best_payload = x, "east", q.x
    assert best_x is not None, "ray never met the path"
    assert best_kind == "east", f"first hit is not an east-step interior: {best_payload}"
    return best_payload


def random_dyck_path(a: int, b: int, rng: random.Random) -> DyckPath:
    """A uniform-ish random (a, b)-Dyck path by feasible-step sampling."""
    word = []
    north = east = 0
    for _ in range(a + b):
        choices = []
        if north < a:
            choices.append("N")
        if east < b and north * b >= (east + 1) * a:
            choices.append("E")
        step = rng.choice(choices)
        word.append(step)
        if step == "N":
            north += 1
        else:
            east += 1
    return DyckPath(a, b, "".join(word))
