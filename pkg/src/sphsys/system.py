"""Spherical systems: axioms, colors, defect, dimension and localizations.

A spherical system over a root system R is a triple (Sigma, Sp, A): spherical
roots without proportional pairs, a parabolic subset of simple roots, and a
multiset of integer rows over Sigma attached to the simple spherical roots.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .rootsys import RootSystem, build_root_system, cartan_eval, sub_root_system
from .sphroots import (SphericalRoot, is_compatible, render_root, sp_of,
                       spherical_root, spp_of)

Vector = Tuple[int, ...]
Row = Tuple[int, ...]


@dataclass(frozen=True)
class SphericalSystem:
    """An immutable spherical system in canonical internal order.

    sigma is sorted by (height, coefficient vector); a_rows columns follow
    sigma and the rows are sorted lexicographically.
    """

    rs: RootSystem
    sigma: Tuple[SphericalRoot, ...]
    sp: FrozenSet[int]
    a_rows: Tuple[Row, ...]

    def key(self) -> tuple:
        return (self.rs.name, tuple(s.coeffs for s in self.sigma),
                tuple(sorted(self.sp)), self.a_rows)

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SphericalSystem) and self.key() == other.key()

    @property
    def rank(self) -> int:
        return len(self.sigma)

    def simple_sigma(self) -> Dict[int, int]:
        """Map simple index -> column for the sigma that are simple roots."""
        out = {}
        for col, s in enumerate(self.sigma):
            if s.height == 1:
                out[s.coeffs.index(1)] = col
        return out

    def doubled_simple(self) -> FrozenSet[int]:
        """Simple indices alpha with 2*alpha in sigma."""
        out = set()
        for s in self.sigma:
            if s.height == 2 and 2 in s.coeffs:
                out.add(s.coeffs.index(2))
        return frozenset(out)

    def support(self) -> FrozenSet[int]:
        return frozenset(i for s in self.sigma for i in range(self.rs.rank)
                         if s.coeffs[i])


def make_system(rs: RootSystem, sigma_vectors: Iterable[Sequence[int]],
                sp: Iterable[int], a_rows: Iterable[Sequence[int]]) -> SphericalSystem:
    """Build a system in canonical order from sigma vectors and matching rows."""
    sigmas = [spherical_root(rs, v) for v in sigma_vectors]
    rows = [tuple(r) for r in a_rows]
    if any(len(r) != len(sigmas) for r in rows):
        raise ValueError("a_rows width must equal the number of spherical roots")
    order = sorted(range(len(sigmas)), key=lambda i: sigmas[i].sort_key())
    sigmas = [sigmas[i] for i in order]
    rows = sorted(tuple(r[i] for i in order) for r in rows)
    return SphericalSystem(rs=rs, sigma=tuple(sigmas), sp=frozenset(sp),
                           a_rows=tuple(rows))


def validate(sys: SphericalSystem) -> List[str]:
    """All axiom violations of the triple, in a fixed report order."""
    rs = sys.rs
    out: List[str] = []
    vecs = [s.coeffs for s in sys.sigma]
    for (i, u), (j, v) in combinations(enumerate(vecs), 2):
        if _proportional(u, v):
            out.append(f"proportional spherical roots {render_root(sys.sigma[i])}"
                       f" and {render_root(sys.sigma[j])}")
    for s in sys.sigma:
        if not is_compatible(rs, s, sys.sp):
            out.append(f"(S) Sp not compatible with {render_root(s)}")
    simple_cols = sys.simple_sigma()
    cols_simple = set(simple_cols.values())
    for r in sys.a_rows:
        for col, val in enumerate(r):
            if val > 1:
                out.append(f"(A1) value {val} > 1 in row {r}")
            elif val == 1 and col not in cols_simple:
                out.append(f"(A1) value 1 at non-simple root"
                           f" {render_root(sys.sigma[col])} in row {r}")
    for alpha, col in sorted(simple_cols.items()):
        rows = [r for r in sys.a_rows if r[col] == 1]
        if len(rows) != 2:
            out.append(f"(A2) A(a{alpha + 1}) has {len(rows)} elements, expected 2")
            continue
        want = tuple(cartan_eval(rs, alpha, v) for v in vecs)
        got = tuple(x + y for x, y in zip(rows[0], rows[1]))
        if got != want:
            out.append(f"(A2) A(a{alpha + 1}) sums to {got}, expected {want}")
    for r in sys.a_rows:
        if 1 not in r:
            out.append(f"(A3) row {r} belongs to no A(alpha)")
    for alpha in sys.doubled_simple():
        for col, s in enumerate(sys.sigma):
            if s.coeffs == _times(vecs, alpha, 2):
                continue
            val = cartan_eval(rs, alpha, s.coeffs)
            if val > 0 or val % 2 != 0:
                out.append(f"(Sigma1) <a{alpha + 1}^vee, {render_root(s)}> = {val}"
                           " is not a non-positive even integer")
    n = rs.rank
    for s in sys.sigma:
        pairs = [(i, j) for i, j in combinations(range(n), 2)
                 if rs.cartan[i][j] == 0
                 and s.coeffs == tuple(1 if k in (i, j) else 0 for k in range(n))]
        for i, j in pairs:
            for t in sys.sigma:
                vi = cartan_eval(rs, i, t.coeffs)
                vj = cartan_eval(rs, j, t.coeffs)
                if vi != vj:
                    out.append(f"(Sigma2) <a{i + 1}^vee,{render_root(t)}> = {vi}"
                               f" != <a{j + 1}^vee,{render_root(t)}> = {vj}")
    return out


def _proportional(u: Vector, v: Vector) -> bool:
    return all(ui * sum(v) == vi * sum(u) for ui, vi in zip(u, v))


def _times(vecs, alpha: int, c: int) -> Vector:
    n = len(vecs[0]) if vecs else 0
    return tuple(c if k == alpha else 0 for k in range(n))


@dataclass(frozen=True)
class Color:
    """A color: its kind (a, 2a or b), owning simple roots and pairing row."""

    kind: str  # "a" | "2a" | "b"
    owners: Tuple[int, ...]  # simple indices alpha with this color in Delta(alpha)
    row: Row  # full pairing values on sigma

    def name(self) -> str:
        tag = {"a": "", "2a": "2", "b": ""}[self.kind]
        return "d" + tag + "".join(f"a{i + 1}" for i in self.owners)


@dataclass(frozen=True)
class ColorSet:
    """The full set of colors of a system, with the ownership map."""

    colors: Tuple[Color, ...]
    delta_of: Tuple[Tuple[int, ...], ...]  # simple index -> color indices

    def __len__(self) -> int:
        return len(self.colors)


@lru_cache(maxsize=None)
def colors(sys: SphericalSystem) -> ColorSet:
    """All colors with their pairing rows, in a deterministic order.

    Order: the a_rows in their stored order, then type-2a colors by simple
    index, then type-b colors by smallest member of their class.
    """
    rs = sys.rs
    n = rs.rank
    vecs = [s.coeffs for s in sys.sigma]
    simple_cols = sys.simple_sigma()
    doubled = sys.doubled_simple()
    sb = [i for i in range(n)
          if i not in sys.sp and i not in simple_cols and i not in doubled]
    cols: List[Color] = []
    delta: List[List[int]] = [[] for _ in range(n)]
    for r in sys.a_rows:
        owners = tuple(a for a, c in sorted(simple_cols.items()) if r[c] == 1)
        idx = len(cols)
        cols.append(Color(kind="a", owners=owners, row=r))
        for a in owners:
            delta[a].append(idx)
    for alpha in sorted(doubled):
        row = tuple(_half(cartan_eval(rs, alpha, v)) for v in vecs)
        idx = len(cols)
        cols.append(Color(kind="2a", owners=(alpha,), row=row))
        delta[alpha].append(idx)
    for cls in _b_classes(sys, sb):
        rep = cls[0]
        row = tuple(cartan_eval(rs, rep, v) for v in vecs)
        idx = len(cols)
        cols.append(Color(kind="b", owners=tuple(cls), row=row))
        for a in cls:
            delta[a].append(idx)
    return ColorSet(colors=tuple(cols), delta_of=tuple(tuple(d) for d in delta))


def _half(v: int) -> int:
    if v % 2 != 0:
        raise ValueError(f"odd pairing value {v} at a doubled simple root")
    return v // 2


def _b_classes(sys: SphericalSystem, sb: List[int]) -> List[List[int]]:
    """Classes of S^b under: same color iff orthogonal with sum in Sigma."""
    n = sys.rs.rank
    vecs = {s.coeffs for s in sys.sigma}
    parent = {i: i for i in sb}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(sb, 2):
        if sys.rs.cartan[i][j] == 0 and \
                tuple(1 if k in (i, j) else 0 for k in range(n)) in vecs:
            parent[find(i)] = find(j)
    classes: Dict[int, List[int]] = {}
    for i in sb:
        classes.setdefault(find(i), []).append(i)
    return sorted((sorted(c) for c in classes.values()), key=lambda c: c[0])


def defect(sys: SphericalSystem) -> int:
    """Number of colors minus the rank."""
    return len(colors(sys).colors) - sys.rank


def dimension(sys: SphericalSystem) -> int:
    """rank + number of positive roots moved by the parabolic of Sp."""
    sub, _ = sub_root_system(sys.rs, sys.sp)
    return sys.rank + len(sys.rs.positive_roots) - len(sub.positive_roots)


def is_cuspidal(sys: SphericalSystem) -> bool:
    """Whether the support of Sigma together with Sp is all of S."""
    return sys.support() | sys.sp == frozenset(range(sys.rs.rank))


def negative_colors(sys: SphericalSystem) -> List[Tuple[Color, str]]:
    """Colors with non-positive pairing row, tagged interior or exterior."""
    supp = sys.support()
    out = []
    for c in colors(sys).colors:
        if all(v <= 0 for v in c.row):
            where = "interior" if any(a in supp for a in c.owners) else "exterior"
            out.append((c, where))
    return out


def localize_sigma(sys: SphericalSystem, keep_vectors: Iterable[Sequence[int]]) -> SphericalSystem:
    """Localization at a subset of Sigma: keep Sp, restrict A to the kept columns."""
    keep = {tuple(v) for v in keep_vectors}
    cols = [i for i, s in enumerate(sys.sigma) if s.coeffs in keep]
    if len(cols) != len(keep):
        raise ValueError("keep_vectors must be a subset of sigma")
    kept_simple_cols = {c for c in cols if sys.sigma[c].height == 1}
    rows = [tuple(r[c] for c in cols) for r in sys.a_rows
            if any(r[c] == 1 for c in kept_simple_cols)]
    return make_system(sys.rs, [sys.sigma[c].coeffs for c in cols], sys.sp, rows)


def localize_s(sys: SphericalSystem, s_keep: Iterable[int]) -> SphericalSystem:
    """Localization at a subset of S, over the corresponding root subsystem."""
    s_keep = frozenset(s_keep)
    sub, emb = sub_root_system(sys.rs, s_keep)
    cols = [i for i, s in enumerate(sys.sigma)
            if all(s.coeffs[j] == 0 for j in range(sys.rs.rank) if j not in s_keep)]
    kept_simple_cols = {c for c in cols
                        if sys.sigma[c].height == 1
                        and sys.sigma[c].coeffs.index(1) in s_keep}
    rows = [tuple(r[c] for c in cols) for r in sys.a_rows
            if any(r[c] == 1 for c in kept_simple_cols)]
    new_vectors = [tuple(sys.sigma[c].coeffs[j] for j in emb) for c in cols]
    new_sp = [p for p, j in enumerate(emb) if j in sys.sp]
    return make_system(sub, new_vectors, new_sp, rows)
