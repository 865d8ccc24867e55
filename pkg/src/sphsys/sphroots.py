"""Spherical roots of a root system and their compatibility with parabolic subsets.

A spherical root is a nonnegative combination of simple roots cut out by a
fixed table of shapes, one per type of its support.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .rootsys import RootSystem, build_root_system, cartan_eval, recognize

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class SphericalRoot:
    """A spherical root: coefficient vector, shape tag and ordered support."""

    coeffs: Vector
    shape: str
    support: Tuple[int, ...]  # ambient simple indices, in the shape's own order

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def sort_key(self) -> tuple:
        return (self.height, self.coeffs)


def _mk(rs_rank: int, shape: str, support: Sequence[int], coeffs_on_support: Sequence[int]) -> SphericalRoot:
    v = [0] * rs_rank
    for i, c in zip(support, coeffs_on_support):
        v[i] += c
    return SphericalRoot(coeffs=tuple(v), shape=shape, support=tuple(support))


@lru_cache(maxsize=None)
def spherical_roots_of(rs: RootSystem) -> Tuple[SphericalRoot, ...]:
    """All spherical roots of rs, sorted by (height, coefficient vector)."""
    n = rs.rank
    a = rs.cartan
    found: Dict[Vector, SphericalRoot] = {}

    def add(sr: SphericalRoot) -> None:
        found.setdefault(sr.coeffs, sr)

    for i in range(n):
        add(_mk(n, "a1", (i,), (1,)))
        add(_mk(n, "2a1", (i,), (2,)))
    for i, j in combinations(range(n), 2):
        if a[i][j] == 0:
            add(_mk(n, "a1xa1", (i, j), (1, 1)))

    # connected subsets of the Dynkin diagram, size >= 2
    for size in range(2, n + 1):
        for subset in combinations(range(n), size):
            if not _connected(a, subset):
                continue
            (tname, order), = recognize(a, subset)
            r = len(order)
            letter = tname[0]
            if letter == "A":
                add(_mk(n, "a-sum", order, (1,) * r))
                if r == 3:
                    add(_mk(n, "a3-mid", order, (1, 2, 1)))
            elif letter == "B":
                add(_mk(n, "b-sum", order, (1,) * r))
                add(_mk(n, "2b-sum", order, (2,) * r))
                if r == 3:
                    add(_mk(n, "b3-triple", order, (1, 2, 3)))
            elif letter == "C":
                add(_mk(n, "c-shape", order, (1,) + (2,) * (r - 2) + (1,)))
            elif letter == "D":
                add(_mk(n, "d-shape", order, (2,) * (r - 2) + (1, 1)))
            elif letter == "F":
                add(_mk(n, "f4-shape", order, (1, 2, 3, 2)))
            elif letter == "G":
                add(_mk(n, "g2-sum", order, (1, 1)))
                add(_mk(n, "g2-short2", order, (2, 1)))
                add(_mk(n, "g2-double", order, (4, 2)))
    return tuple(sorted(found.values(), key=SphericalRoot.sort_key))


def _connected(a: Sequence[Sequence[int]], subset: Sequence[int]) -> bool:
    rest = set(subset)
    comp = {subset[0]}
    frontier = {subset[0]}
    while frontier:
        nxt = {j for i in frontier for j in rest - comp if a[i][j] != 0}
        comp |= nxt
        frontier = nxt
    return comp == rest


@lru_cache(maxsize=None)
def _by_vector(rs: RootSystem) -> Dict[Vector, SphericalRoot]:
    return {sr.coeffs: sr for sr in spherical_roots_of(rs)}


def spherical_root(rs: RootSystem, v: Sequence[int]) -> SphericalRoot:
    """The spherical root with coefficient vector v; raises if there is none."""
    sr = _by_vector(rs).get(tuple(v))
    if sr is None:
        raise ValueError(f"{tuple(v)} is not a spherical root of {rs.name}")
    return sr


def sp_of(rs: RootSystem, sigma: SphericalRoot) -> FrozenSet[int]:
    """Largest parabolic subset compatible with sigma: simple roots orthogonal to it."""
    return frozenset(i for i in range(rs.rank) if cartan_eval(rs, i, sigma.coeffs) == 0)


def spp_of(rs: RootSystem, sigma: SphericalRoot) -> FrozenSet[int]:
    """Smallest parabolic subset compatible with sigma."""
    sp = sp_of(rs, sigma)
    supp = set(sigma.support)
    if sigma.shape == "b-sum":
        return frozenset((sp & supp) - {sigma.support[-1]})
    if sigma.shape == "c-shape":
        return frozenset((sp & supp) - {sigma.support[0]})
    return frozenset(sp & supp)


def is_compatible(rs: RootSystem, sigma: SphericalRoot, sp: FrozenSet[int]) -> bool:
    """Whether (sigma, sp) is a compatible couple."""
    return spp_of(rs, sigma) <= frozenset(sp) <= sp_of(rs, sigma)


def render_root(sigma: SphericalRoot) -> str:
    """Textual form like "a1+2a2+3a3+2a4"."""
    parts = []
    for i, c in enumerate(sigma.coeffs):
        if c == 0:
            continue
        parts.append(("" if c == 1 else str(c)) + f"a{i + 1}")
    return "+".join(parts) if parts else "0"
