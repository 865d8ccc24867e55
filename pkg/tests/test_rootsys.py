"""Root system construction, recognition, weights, and parabolic gradings."""

from fractions import Fraction

import pytest

from sphsys.rootsys import (
    ParabolicGrading,
    build_root_system,
    cartan_eval,
    dual_weight,
    fundamental_weights,
    parabolic_grading,
    recognize,
    sub_root_system,
    weight_coords,
)


def test_f4_cartan_matrix(f4):
    assert f4.cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    )


def test_f4_positive_root_count(f4):
    assert len(f4.positive_roots) == 24


@pytest.mark.parametrize(
    "name,count",
    [("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("A1xA2", 4)],
)
def test_positive_root_counts(name, count):
    assert len(build_root_system(name).positive_roots) == count


def test_f4_highest_roots(f4):
    # highest root and highest short root in simple-root coordinates
    assert f4.positive_roots[-1] == (2, 3, 4, 2)
    assert (1, 2, 3, 2) in f4.positive_roots


def test_f4_fundamental_weights(f4):
    assert fundamental_weights(f4) == [
        (2, 3, 4, 2),
        (3, 6, 8, 4),
        (2, 4, 6, 3),
        (1, 2, 3, 2),
    ]


def test_cartan_eval_rows(f4):
    assert [cartan_eval(f4, i, (1, 2, 3, 2)) for i in range(4)] == [0, 0, 0, 1]
    assert [cartan_eval(f4, i, (2, 3, 4, 2)) for i in range(4)] == [1, 0, 0, 0]


def test_recognize_components():
    rs = build_root_system("A1xA2")
    assert recognize(rs.cartan, (0, 1, 2)) == [("A1", (0,)), ("A2", (1, 2))]


def test_sub_root_system_c3(f4):
    sub, embed = sub_root_system(f4, (1, 2, 3))
    assert sub.name == "C3"
    assert embed == (3, 2, 1)


def test_sub_root_system_b3(f4):
    sub, embed = sub_root_system(f4, (0, 1, 2))
    assert sub.name == "B3"
    assert embed == (0, 1, 2)


@pytest.mark.parametrize(
    "omit,levi,dims",
    [
        (0, "C3", (14, 1)),
        (1, "A1xA2", (12, 6, 2)),
        (2, "A2xA1", (6, 9, 2, 3)),
        (3, "B3", (8, 7)),
    ],
)
def test_f4_parabolic_gradings(f4, omit, levi, dims):
    g = parabolic_grading(f4, omit)
    assert isinstance(g, ParabolicGrading)
    assert g.levi == levi
    assert g.dims == dims


def test_dual_weight_type_a():
    # weights given in fundamental-weight coordinates
    assert dual_weight(build_root_system("A3"), (1, 0, 0)) == (0, 0, 1)
    assert dual_weight(build_root_system("A3"), (0, 1, 0)) == (0, 1, 0)


def test_dual_weight_type_d5():
    rs = build_root_system("D5")
    assert dual_weight(rs, (0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)
    assert dual_weight(rs, (1, 0, 0, 0, 0)) == (1, 0, 0, 0, 0)


def test_dual_weight_f4_fixed(f4):
    for i in range(4):
        e = tuple(int(i == j) for j in range(4))
        assert dual_weight(f4, e) == e


def test_dual_weight_matches_longest_element_oracle():
    # -w0(weight) computed by repeatedly reflecting to the dominant chamber
    for name in ("A3", "D5", "B3", "F4", "G2"):
        rs = build_root_system(name)
        n = len(rs.cartan)
        for k, w in enumerate(fundamental_weights(rs)):
            v = tuple(-x for x in w)
            moved = True
            while moved:
                moved = False
                for i in range(n):
                    c = cartan_eval(rs, i, v)
                    if c < 0:
                        v = tuple(
                            v[j] - (c if j == i else 0) for j in range(n)
                        )
                        moved = True
            e = tuple(int(k == j) for j in range(n))
            assert dual_weight(rs, e) == weight_coords(rs, v)


def test_weight_coords_exact(f4):
    # simple root alpha1 in fundamental-weight coordinates is its Cartan row
    assert weight_coords(f4, (1, 0, 0, 0)) == (
        Fraction(2),
        Fraction(-1),
        Fraction(0),
        Fraction(0),
    )
