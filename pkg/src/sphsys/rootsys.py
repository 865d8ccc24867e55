"""Finite root systems with exact arithmetic.

Cartan matrices follow the Bourbaki numbering; entries are a[i][j] = <alpha_i^vee, alpha_j>.
All vectors are integer (or Fraction) coefficient tuples over the simple roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Vector = Tuple[int, ...]
QVector = Tuple[Q, ...]


def _cartan_irreducible(letter: str, rank: int) -> List[List[int]]:
    """Cartan matrix of an irreducible type in Bourbaki numbering."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if letter == "A":
        if n < 1:
            raise ValueError("A requires rank >= 1")
        for i in range(n - 1):
            link(i, i + 1)
    elif letter == "B":
        if n < 2:
            raise ValueError("B requires rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # alpha_n short
    elif letter == "C":
        if n < 3:
            raise ValueError("C requires rank >= 3")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # alpha_n long
    elif letter == "D":
        if n < 4:
            raise ValueError("D requires rank >= 4")
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise ValueError("E requires rank 6, 7 or 8")
        # chain 1-3-4-5-...-n with 2 attached to 4 (Bourbaki)
        chain = [0] + list(range(2, n))
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)
    elif letter == "F":
        if n != 4:
            raise ValueError("F requires rank 4")
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_3, alpha_4 short
        link(2, 3)
    elif letter == "G":
        if n != 2:
            raise ValueError("G requires rank 2")
        link(0, 1, -3, -1)  # alpha_1 short
    else:
        raise ValueError(f"unknown type letter {letter!r}")
    return a


def _parse_spec(spec: str) -> List[Tuple[str, int]]:
    """Parse a product spec like "F4" or "A2xA1" into (letter, rank) pairs."""
    parts = spec.split("x")
    out = []
    for p in parts:
        p = p.strip()
        if len(p) < 2 or p[0] not in "ABCDEFG" or not p[1:].isdigit():
            raise ValueError(f"bad root system spec {spec!r}")
        out.append((p[0], int(p[1:])))
    return out


@dataclass(frozen=True)
class RootSystem:
    """An abstract finite root system, possibly a product of irreducible ones."""

    name: str
    cartan: Tuple[Tuple[int, ...], ...]
    # (letter, rank, simple-root indices in Bourbaki order) per irreducible factor
    components: Tuple[Tuple[str, int, Tuple[int, ...]], ...]
    positive_roots: Tuple[Vector, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def __hash__(self) -> int:
        return hash(self.name)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.name == other.name

    def is_positive_root(self, v: Vector) -> bool:
        return tuple(v) in self._posset

    @property
    def _posset(self) -> frozenset:
        return _positive_root_set(self.name)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> Tuple[Vector, ...]:
    """All positive roots, by closure of the simple roots under reflections."""
    n = len(cartan)
    roots = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier = set(roots)
    while frontier:
        new = set()
        for beta in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                refl = list(beta)
                refl[i] -= pairing
                t = tuple(refl)
                if t not in roots and all(c >= 0 for c in t) and any(t):
                    new.add(t)
        roots |= new
        frontier = new
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


@lru_cache(maxsize=None)
def _positive_root_set(name: str) -> frozenset:
    return frozenset(build_root_system(name).positive_roots)


@lru_cache(maxsize=None)
def build_root_system(spec: str) -> RootSystem:
    """Build a root system from a spec string such as "F4" or "A1xA2"."""
    factors = _parse_spec(spec)
    n = sum(r for _, r in factors)
    cartan = [[0] * n for _ in range(n)]
    components = []
    off = 0
    for letter, r in factors:
        block = _cartan_irreducible(letter, r)
        for i in range(r):
            for j in range(r):
                cartan[off + i][off + j] = block[i][j]
        components.append((letter, r, tuple(range(off, off + r))))
        off += r
    cartan_t = tuple(tuple(row) for row in cartan)
    name = "x".join(f"{l}{r}" for l, r in factors)
    return RootSystem(
        name=name,
        cartan=cartan_t,
        components=tuple(components),
        positive_roots=_positive_roots(cartan_t),
    )


def cartan_eval(rs: RootSystem, i: int, v: Sequence) -> object:
    """<alpha_i^vee, v> for a vector v in simple-root coordinates."""
    return sum(rs.cartan[i][j] * v[j] for j in range(rs.rank))


@lru_cache(maxsize=None)
def _cartan_inverse(name: str) -> Tuple[QVector, ...]:
    """Exact inverse of the Cartan matrix, by Gaussian elimination over Q."""
    rs = build_root_system(name)
    n = rs.rank
    m = [[Q(rs.cartan[i][j]) for j in range(n)] + [Q(1 if j == i else 0) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = Q(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def fundamental_weights(rs: RootSystem) -> List[QVector]:
    """Fundamental weights in simple-root coordinates (columns of the inverse Cartan)."""
    inv = _cartan_inverse(rs.name)
    return [tuple(inv[j][i] for j in range(rs.rank)) for i in range(rs.rank)]


def _match_component(block: Sequence[Sequence[int]], local: Sequence[int],
                     target: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """Find an order of `local` realizing the `target` Cartan matrix, if any."""
    k = len(local)
    perm: List[int] = []
    used = [False] * k

    def ok(pos: int, cand: int) -> bool:
        for q in range(pos):
            p = perm[q]
            if block[local[cand]][local[p]] != target[pos][q]:
                return False
            if block[local[p]][local[cand]] != target[q][pos]:
                return False
        return True

    def rec(pos: int) -> bool:
        if pos == k:
            return True
        for cand in range(k):
            if not used[cand] and ok(pos, cand):
                used[cand] = True
                perm.append(cand)
                if rec(pos + 1):
                    return True
                perm.pop()
                used[cand] = False
        return False

    return [local[c] for c in perm] if rec(0) else None


def _candidate_types(k: int) -> List[str]:
    out = [f"A{k}"]
    if k >= 2:
        out.append(f"B{k}")
    if k >= 3:
        out.append(f"C{k}")
    if k >= 4:
        out.append(f"D{k}")
    if k in (6, 7, 8):
        out.append(f"E{k}")
    if k == 4:
        out.append(f"F{k}")
    if k == 2:
        out.append(f"G{k}")
    return out


def recognize(cartan: Sequence[Sequence[int]],
              indices: Sequence[int]) -> List[Tuple[str, Tuple[int, ...]]]:
    """Split `indices` into irreducible components and identify each.

    Returns (type name, indices in Bourbaki order) per component, ordered by
    smallest member index.
    """
    idx = sorted(indices)
    remaining = set(idx)
    comps: List[List[int]] = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = {seed}
        while frontier:
            nxt = {j for i in frontier for j in remaining - comp if cartan[i][j] != 0}
            comp |= nxt
            frontier = nxt
        comps.append(sorted(comp))
        remaining -= comp
    out = []
    for comp in comps:
        k = len(comp)
        for cand in _candidate_types(k):
            target = build_root_system(cand).cartan
            order = _match_component(cartan, comp, target)
            if order is not None:
                out.append((cand, tuple(order)))
                break
        else:
            raise ValueError(f"unrecognizable Cartan block on {comp}")
    return out


def sub_root_system(rs: RootSystem, keep: Iterable[int]) -> Tuple[RootSystem, Tuple[int, ...]]:
    """Root subsystem generated by a subset of simple roots.

    Returns the abstract root system and the embedding: new simple index ->
    index in `rs`, components ordered by smallest ambient index.
    """
    keep = sorted(set(keep))
    if not keep:
        return build_root_system_empty(), ()
    comps = recognize(rs.cartan, keep)
    name = "x".join(t for t, _ in comps)
    embedding = tuple(i for _, order in comps for i in order)
    return build_root_system(name), embedding


@lru_cache(maxsize=None)
def build_root_system_empty() -> RootSystem:
    return RootSystem(name="", cartan=(), components=(), positive_roots=())


@dataclass(frozen=True)
class ParabolicGrading:
    """Grading of a simple Lie algebra by the coefficient of one simple root."""

    levi: str
    steps: int
    dims: Tuple[int, ...]  # number of positive roots with coefficient 1..steps


def parabolic_grading(rs: RootSystem, alpha: int) -> ParabolicGrading:
    """Grading of the parabolic attached to dropping `alpha` from S."""
    sub, _ = sub_root_system(rs, [i for i in range(rs.rank) if i != alpha])
    steps = max(v[alpha] for v in rs.positive_roots)
    dims = tuple(sum(1 for v in rs.positive_roots if v[alpha] == d)
                 for d in range(1, steps + 1))
    return ParabolicGrading(levi=sub.name, steps=steps, dims=dims)


@lru_cache(maxsize=None)
def _dual_involution(name: str) -> Tuple[int, ...]:
    """The involution of S induced by -w0, as a permutation of simple indices."""
    rs = build_root_system(name)
    perm = list(range(rs.rank))
    for letter, r, idx in rs.components:
        if letter == "A":
            for p, i in enumerate(idx):
                perm[i] = idx[r - 1 - p]
        elif letter == "D" and r % 2 == 1:
            perm[idx[r - 2]], perm[idx[r - 1]] = idx[r - 1], idx[r - 2]
        elif letter == "E" and r == 6:
            for p, q in ((0, 5), (2, 4)):
                perm[idx[p]], perm[idx[q]] = idx[q], idx[p]
    return tuple(perm)


def dual_weight(rs: RootSystem, coords: Sequence) -> tuple:
    """Dual of a weight given in fundamental-weight coordinates."""
    perm = _dual_involution(rs.name)
    out = [0] * rs.rank
    for i, c in enumerate(coords):
        out[perm[i]] = c
    return tuple(out)


def weight_coords(rs: RootSystem, v: Sequence) -> tuple:
    """Fundamental-weight coordinates of a vector given in root coordinates."""
    return tuple(cartan_eval(rs, i, v) for i in range(rs.rank))
