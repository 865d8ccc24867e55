"""Distinguished subsets, quotient systems, minimality types, solvable chains."""

from itertools import combinations, product

import pytest

from sphsys import build_root_system, colors, defect, make_system, validate
from sphsys.quotient import (
    classify,
    enumerate_distinguished,
    is_distinguished,
    is_strongly_solvable,
    kernel_generators,
    projective_colors,
    quotient,
    quotient_lattice,
)


def sigma_set(sys):
    return {s.coeffs for s in sys.sigma}


@pytest.fixture(scope="module")
def sl4():
    # three simple spherical roots with five colors, two of them shared
    rs = build_root_system("A3")
    return make_system(
        rs,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        [],
        [(1, -1, 1), (1, 0, -1), (0, 1, 0), (-1, 1, -1), (-1, 0, 1)],
    )


@pytest.fixture(scope="module")
def b3_four_colors():
    rs = build_root_system("B3")
    return make_system(
        rs,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        [],
        [(1, 1, -1), (1, -2, 1), (-2, 1, 0), (-1, 0, 1)],
    )


@pytest.fixture(scope="module")
def b3_doubled_pair():
    rs = build_root_system("B3")
    return make_system(rs, [(1, 1, 0), (0, 1, 1), (0, 0, 2)], [], [])


@pytest.fixture(scope="module")
def s12(f4):
    # rank-4 system with two shared-color combs over the last two simple roots
    return make_system(
        f4,
        [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
        [],
        [(0, 0, 1, -1), (-2, 0, 1, 0), (0, 0, -1, 1), (0, -1, 0, 1)],
    )


def color_index(sys, row):
    return [c.row for c in colors(sys).colors].index(row)


def test_empty_and_full_sets(sl4):
    assert is_distinguished(sl4, ()) is not None
    n = len(colors(sl4).colors)
    full = tuple(range(n))
    assert is_distinguished(sl4, full) is not None
    q = quotient(sl4, full)
    assert q.sigma == () and sorted(q.sp) == [0, 1, 2]


def test_sl4_named_subsets(sl4):
    # color indices: the canonical column order is (a3, a2, a1)
    plus = color_index(sl4, (1, -1, 1))  # shared by a1 and a3
    a1m = color_index(sl4, (-1, 0, 1))
    a2p = color_index(sl4, (0, 1, 0))
    a2m = color_index(sl4, (-1, 1, -1))
    a3m = color_index(sl4, (1, 0, -1))
    cases = [
        ((plus, a2m), {(1, 1, 0), (0, 1, 1)}, set()),
        ((a1m, a3m), {(0, 1, 0), (1, 0, 1)}, set()),
        ((a2p,), {(1, 0, 0), (0, 0, 1)}, set()),
        ((plus, a2m, a1m, a3m), {(1, 2, 1)}, {0, 2}),
        ((a1m, a3m, a2p), {(1, 0, 1)}, set()),
    ]
    for members, sig, sp in cases:
        assert is_distinguished(sl4, members) is not None
        q = quotient(sl4, sorted(members))
        assert sigma_set(q) == sig
        assert set(q.sp) == sp


def test_sl4_exhaustive_against_bounded_oracle(sl4):
    # brute-force witness search over a small box agrees with the exact test
    rows = [c.row for c in colors(sl4).colors]
    for k in range(1, len(rows) + 1):
        for members in combinations(range(len(rows)), k):
            found = any(
                all(
                    sum(x[i] * rows[m][j] for i, m in enumerate(members)) >= 0
                    for j in range(3)
                )
                for x in product(range(1, 9), repeat=k)
            )
            assert (is_distinguished(sl4, members) is not None) == found


def test_witnesses_are_positive_and_valid(sl4, s12):
    for sys in (sl4, s12):
        rows = [c.row for c in colors(sys).colors]
        for sub in enumerate_distinguished(sys):
            w = sub.witness
            assert len(w) == len(sub.members)
            assert all(x > 0 for x in w)
            for j in range(len(sys.sigma)):
                assert sum(x * rows[m][j] for x, m in zip(w, sub.members)) >= 0


def test_b3_two_quotients(b3_four_colors):
    sys = b3_four_colors
    p1 = color_index(sys, (1, 1, -1)[::-1])
    p3 = color_index(sys, (-1, 0, 1)[::-1])
    q1 = quotient(sys, sorted((p1, p3)))
    assert sigma_set(q1) == {(1, 0, 1)}
    others = tuple(i for i in range(4) if i != p3)
    assert is_distinguished(sys, others) is not None
    q2 = quotient(sys, others)
    assert sigma_set(q2) == {(1, 2, 3)}
    assert set(q2.sp) == {0, 1}


def test_kernel_generators_free(b3_four_colors):
    p1 = color_index(b3_four_colors, (1, 1, -1)[::-1])
    p3 = color_index(b3_four_colors, (-1, 0, 1)[::-1])
    gens = kernel_generators(b3_four_colors, sorted((p1, p3)))
    assert len(gens) == 1


def test_classify_r_type(b3_doubled_pair):
    subs = [d for d in enumerate_distinguished(b3_doubled_pair) if d.minimal]
    assert len(subs) == 1
    q = quotient(b3_doubled_pair, subs[0].members)
    assert sigma_set(q) == {(2, 2, 2)}
    assert set(q.sp) == {1, 2}
    assert classify(b3_doubled_pair, subs[0].members) == "R"
    assert defect(q) == defect(b3_doubled_pair)


def test_quotient_lattice_counts(b3_doubled_pair):
    lat = quotient_lattice(b3_doubled_pair)
    assert len(lat.nodes) == 3
    assert len(lat.edges) == 3


def test_s12_minimal_quotients(s12, f4):
    assert validate(s12) == []
    assert defect(s12) == 2
    assert len(colors(s12).colors) == 6
    mins = [d for d in enumerate_distinguished(s12) if d.minimal]
    got = {}
    for d in mins:
        q = quotient(s12, d.members)
        got[frozenset(sigma_set(q))] = classify(s12, d.members)
    assert got == {
        frozenset({(0, 0, 1, 1), (0, 1, 1, 0), (1, 1, 0, 0)}): "P",
        frozenset({(0, 1, 2, 1)}): "L",
        frozenset({(0, 0, 0, 1), (1, 2, 3, 0)}): "P",
    }


def test_s12_nonminimal_quotient_to_rank_one(s12, rank1_omega4):
    # every color except one vanishes on the doubled highest short root
    minus4 = color_index(s12, (1, 0, -1, 0))
    members = tuple(i for i in range(6) if i != minus4)
    assert is_distinguished(s12, members) is not None
    assert quotient(s12, members) == rank1_omega4


def test_strongly_solvable_chain_length_two(f4):
    sys = make_system(
        f4,
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
        [],
        [
            (1, -1, 1, 0),
            (1, 0, -1, 0),
            (-1, -1, 1, -1),
            (0, 1, 0, 1),
            (-1, 1, -1, -1),
            (0, -1, -1, 1),
        ],
    )
    assert validate(sys) == []
    ok, chain = is_strongly_solvable(sys)
    assert ok and len(chain) == 2
    assert chain[-1].sigma == () and not chain[-1].sp


def test_strongly_solvable_chain_length_three(f4):
    sys = make_system(
        f4,
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
        [],
        [
            (1, 0, 0, 0),
            (1, -1, 0, 0),
            (0, 1, -1, 1),
            (-1, 1, 0, -1),
            (0, -1, 0, 1),
            (0, 0, 1, 0),
            (0, -2, 1, -1),
        ],
    )
    assert validate(sys) == []
    ok, chain = is_strongly_solvable(sys)
    assert ok and len(chain) == 3


def test_not_strongly_solvable_without_projective_color(b3_doubled_pair):
    assert projective_colors(b3_doubled_pair) == []
    ok, chain = is_strongly_solvable(b3_doubled_pair)
    assert not ok and chain is None


def test_quotients_of_census_sample_are_valid(f4_census):
    sample = f4_census.systems[:: max(1, len(f4_census.systems) // 25)]
    for sys in sample:
        for d in enumerate_distinguished(sys):
            if d.minimal:
                assert validate(quotient(sys, d.members)) == []
