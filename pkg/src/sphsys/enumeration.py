"""Exhaustive enumeration of spherical systems of a root system."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .rootsys import RootSystem, build_root_system, cartan_eval
from .sphroots import SphericalRoot, sp_of, spherical_roots_of, spp_of
from .system import SphericalSystem, make_system, validate

Vector = Tuple[int, ...]
Row = Tuple[int, ...]


@dataclass(frozen=True)
class CensusReport:
    rs: RootSystem
    systems: Tuple[SphericalSystem, ...]
    by_rank: Dict[int, int]

    @property
    def total(self) -> int:
        return len(self.systems)

    def diff(self, expected: Dict[int, int]) -> Dict[int, Tuple[int, int]]:
        """Per-rank (got, expected) for every rank where they differ."""
        ranks = set(self.by_rank) | set(expected)
        return {r: (self.by_rank.get(r, 0), expected.get(r, 0))
                for r in sorted(ranks)
                if self.by_rank.get(r, 0) != expected.get(r, 0)}


def _pair_ok(rs: RootSystem, s: SphericalRoot, t: SphericalRoot) -> bool:
    """Whether {s, t} can coexist in Sigma: no proportionality and the
    pairwise parts of the doubled-root and orthogonal-pair axioms."""
    su, tv = s.coeffs, t.coeffs
    if all(a * sum(tv) == b * sum(su) for a, b in zip(su, tv)):
        return False
    for x, y in ((s, t), (t, s)):
        if x.shape == "2a1":
            alpha = x.coeffs.index(2)
            v = cartan_eval(rs, alpha, y.coeffs)
            if v > 0 or v % 2 != 0:
                return False
        if x.shape == "a1xa1":
            i, j = x.support
            if cartan_eval(rs, i, y.coeffs) != cartan_eval(rs, j, y.coeffs):
                return False
    return True


def _sigma_candidates(rs: RootSystem, max_rank: Optional[int]) -> List[Tuple[SphericalRoot, ...]]:
    """All subsets of the spherical roots whose pairwise constraints hold."""
    roots = spherical_roots_of(rs)
    k = len(roots)
    compat = [[False] * k for _ in range(k)]
    for i, j in combinations(range(k), 2):
        compat[i][j] = compat[j][i] = _pair_ok(rs, roots[i], roots[j])
    out: List[Tuple[SphericalRoot, ...]] = []

    def rec(chosen: List[int], start: int):
        out.append(tuple(roots[i] for i in chosen))
        if max_rank is not None and len(chosen) >= max_rank:
            return
        for i in range(start, k):
            if all(compat[j][i] for j in chosen):
                # a doubled simple root also constrains itself against alpha
                rec(chosen + [i], i + 1)

    rec([], 0)
    return out


def _sp_choices(rs: RootSystem, sigma: Sequence[SphericalRoot]) -> List[FrozenSet[int]]:
    """All parabolic subsets compatible with every member of sigma."""
    low: Set[int] = set()
    high = set(range(rs.rank))
    for s in sigma:
        low |= spp_of(rs, s)
        high &= sp_of(rs, s)
    if not low <= high:
        return []
    free = sorted(high - low)
    out = []
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            out.append(frozenset(low) | frozenset(extra))
    return out


def enumerate_a_matrices(rs: RootSystem, sigma: Sequence[SphericalRoot],
                         sp: FrozenSet[int]) -> List[Tuple[Row, ...]]:
    """All multisets of rows satisfying the axioms for the given (sigma, sp).

    Rows are returned as sorted tuples over the given sigma order; two rows
    are the same color exactly when they are equal as vectors.
    """
    r = len(sigma)
    simple_cols: Dict[int, int] = {}
    for col, s in enumerate(sigma):
        if s.height == 1:
            simple_cols[s.coeffs.index(1)] = col
    owners = sorted(simple_cols)
    if not owners:
        return [()]
    cols_simple = set(simple_cols.values())

    def pair_choices(alpha: int) -> List[Tuple[Row, Row]]:
        col = simple_cols[alpha]
        cart = tuple(cartan_eval(rs, alpha, s.coeffs) for s in sigma)
        ranges = []
        for j in range(r):
            if j == col:
                ranges.append([1])
                continue
            vals = [v for v in range(cart[j] - 1, 2)
                    if (v != 1 or j in cols_simple)
                    and (cart[j] - v != 1 or j in cols_simple)]
            ranges.append(vals)
        pairs = []
        for row in product(*ranges):
            partner = tuple(c - v for c, v in zip(cart, row))
            if row <= partner:
                pairs.append((row, partner))
        return pairs

    choices = {a: pair_choices(a) for a in owners}
    results: List[Tuple[Row, ...]] = []

    def consistent(assign: Dict[int, Tuple[Row, Row]]) -> bool:
        for a, pa in assign.items():
            for b, pb in assign.items():
                if a >= b:
                    continue
                ca, cb = simple_cols[a], simple_cols[b]
                for row in pa:
                    if row[cb] == 1 and _mult(pa, row) != _mult(pb, row):
                        return False
                for row in pb:
                    if row[ca] == 1 and _mult(pb, row) != _mult(pa, row):
                        return False
        return True

    def rec(idx: int, assign: Dict[int, Tuple[Row, Row]]):
        if idx == len(owners):
            # every row of a pair has value 1 at its owner's column, so the
            # consistency check above forces one multiplicity per distinct row
            mult: Dict[Row, int] = {}
            for a in owners:
                pa = assign[a]
                for row in set(pa):
                    mult[row] = max(mult.get(row, 0), _mult(pa, row))
            flat = []
            for row, m in mult.items():
                flat.extend([row] * m)
            results.append(tuple(sorted(flat)))
            return
        a = owners[idx]
        for pair in choices[a]:
            assign[a] = pair
            if consistent(assign):
                rec(idx + 1, assign)
            del assign[a]

    rec(0, {})
    return results


def _mult(pair: Tuple[Row, Row], row: Row) -> int:
    return (pair[0] == row) + (pair[1] == row)


def diagram_automorphisms(rs: RootSystem) -> List[Tuple[int, ...]]:
    """All permutations of S preserving the Cartan matrix."""
    n = rs.rank
    from itertools import permutations
    out = []
    for p in permutations(range(n)):
        if all(rs.cartan[p[i]][p[j]] == rs.cartan[i][j]
               for i in range(n) for j in range(n)):
            out.append(p)
    return out


def canonical_form(sys: SphericalSystem, mod_diagram_auts: bool = False) -> SphericalSystem:
    """Canonical representative; optionally minimal over diagram automorphisms."""
    if not mod_diagram_auts:
        return sys
    best = sys
    for p in diagram_automorphisms(sys.rs):
        vecs = []
        for s in sys.sigma:
            v = [0] * sys.rs.rank
            for i, c in enumerate(s.coeffs):
                v[p[i]] = c
            vecs.append(tuple(v))
        moved = make_system(sys.rs, vecs,
                            [p[i] for i in sys.sp], sys.a_rows)
        if moved.key() < best.key():
            best = moved
    return best


def enumerate_systems(rs: RootSystem, max_rank: Optional[int] = None,
                      mod_diagram_auts: bool = False) -> CensusReport:
    """All spherical systems of rs, grouped by rank."""
    seen: Dict[tuple, SphericalSystem] = {}
    for sigma in _sigma_candidates(rs, max_rank):
        for sp in _sp_choices(rs, sigma):
            for rows in enumerate_a_matrices(rs, sigma, sp):
                sys = make_system(rs, [s.coeffs for s in sigma], sp, rows)
                if validate(sys):
                    continue
                sys = canonical_form(sys, mod_diagram_auts)
                seen.setdefault(sys.key(), sys)
    systems = tuple(sorted(seen.values(), key=lambda s: s.key()))
    by_rank: Dict[int, int] = {}
    for s in systems:
        by_rank[s.rank] = by_rank.get(s.rank, 0) + 1
    return CensusReport(rs=rs, systems=systems, by_rank=by_rank)


@lru_cache(maxsize=None)
def census(spec: str, mod_diagram_auts: bool = False) -> CensusReport:
    """Cached full census for a root system spec string."""
    return enumerate_systems(build_root_system(spec),
                             mod_diagram_auts=mod_diagram_auts)
