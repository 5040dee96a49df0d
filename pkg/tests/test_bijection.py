import pytest

from krcrystal import corpus
from krcrystal.affine import iota_inv, rc_crystal_single
from krcrystal.base import classical_decomposition
from krcrystal.bijection import (
    FillingProfile,
    delta,
    fill,
    fill_highest,
    phi,
    phi_with_traces,
    predict_column,
)
from krcrystal.rigged import RiggedConfiguration, TensorSpec, kleber_rc
from krcrystal.tableaux import KNTableau, is_highest


@pytest.mark.parametrize(
    "lam,r,s,n,rows",
    [
        ((1, 1), 2, 2, 5, [[1, 1], [2, -1]]),
        ((2, 1, 1), 3, 2, 5, [[1, 1], [2, 2], [3, -2]]),
        ((3, 3, 1, 1), 4, 3, 6, [[1, 1, 1], [2, 2, 2], [3, -4, 3], [4, -3, 4]]),
        ((2, 2), 2, 3, 5, [[1, 1, 1], [2, 2, -1]]),
        ((), 2, 1, 5, [[1], [-1]]),
        ((2, 2, 2), 3, 2, 5, [[1, 1], [2, 2], [3, 3]]),
    ],
)
def test_fill_highest(lam, r, s, n, rows):
    assert fill_highest(lam, r, s, n).rows() == rows


def test_fill_rejects_shapes_outside_the_rectangle():
    with pytest.raises(ValueError):
        fill_highest((2, 1), 2, 2, 5)
    with pytest.raises(ValueError):
        fill_highest((1,), 3, 2, 5)


def test_filling_profile():
    prof = FillingProfile.of((3, 3, 1, 1), 4, 3)
    assert prof.k == {4: 1, 2: 2, 0: 0}
    assert prof.c == -1
    assert FillingProfile.of((1, 1), 2, 3).c == -1
    assert FillingProfile.of((1, 1), 2, 2).c == 0


@pytest.mark.parametrize(
    "rows,r,s,n,out",
    [
        ([[2], [-3]], 2, 2, 5, [[2, 1], [-3, -1]]),
        ([[1, 1], [2], [3]], 3, 2, 5, [[1, 1], [2, 2], [3, -2]]),
        ([[1, 3], [3], [-3]], 3, 2, 5, [[1, 1], [3, 3], [-3, -1]]),
    ],
)
def test_fill_by_lowering(rows, r, s, n, out):
    assert fill(KNTableau.from_rows(rows, n), r, s).rows() == out


def test_box_removal_letters_and_traces():
    rc = RiggedConfiguration(5, corpus.DELTA_SPEC, tuple(tuple((l, x) for l, _, x in node) for node in corpus.DELTA_RC))
    rc1, letter, trace = delta(rc)
    assert letter == -3
    assert trace.ell == {2: 2, 3: 3, 4: 4, 5: 3}
    assert trace.ellbar == {4: 4, 3: 5, 2: None}
    assert trace.selected() == {("f", 2): 2, ("f", 3): 3, ("f", 4): 4, ("f", 5): 3, ("b", 3): 5}
    assert rc1.spec.factors[:2] == ((1, 1), (2, 1))
    assert [row.rows() for row in phi(rc).factors] == corpus.DELTA_PHI


def test_box_removal_rejects_a_spin_leftmost_factor():
    with pytest.raises(ValueError):
        delta(RiggedConfiguration.empty(5, TensorSpec.single(4, 1)))


@pytest.mark.parametrize("example", corpus.RMATRIX)
def test_rmatrix_pairs(example):
    n = example["n"]
    for order, expected in example["orders"].items():
        rc = RiggedConfiguration.from_partitions(n, TensorSpec(order), example["parts"])
        b = phi(rc)
        assert [t.rows() for t in b.factors] == expected
        assert is_highest(b, range(1, n + 1))


@pytest.mark.parametrize("n,r,s", [(6, 4, 3), (5, 3, 2), (6, 2, 4), (8, 6, 4)])
def test_phi_on_highest_elements_is_the_filling(n, r, s):
    for lam in classical_decomposition(r, s, n):
        assert phi(kleber_rc(r, s, lam, n)).factors[0] == fill_highest(lam, r, s, n)


def test_top_component_gives_plain_columns():
    t = phi(kleber_rc(3, 4, (4, 4, 4), 6)).factors[0]
    assert t.columns == ((1, 2, 3),) * 4


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (4, 1, 3), (5, 2, 2)])
def test_phi_is_fill_after_iota_inverse(n, r, s):
    for x in rc_crystal_single(n, r, s).vertices:
        assert phi(x).factors[0] == fill(iota_inv(x).tableau, r, s)


def _all_delta_calls(rc):
    cur = rc
    while cur.spec.factors:
        yield cur
        cur, _, _ = delta(cur)


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (5, 2, 2), (5, 1, 3)])
def test_delta_does_not_depend_on_the_tie_break(n, r, s):
    ties = 0

    def last(idx):
        nonlocal ties
        ties += len(idx) > 1
        return idx[-1]

    for x in rc_crystal_single(n, r, s).vertices:
        for cur in _all_delta_calls(x):
            assert delta(cur, last)[:2] == delta(cur)[:2]
    assert ties > 0


def test_step_one_prediction():
    p = predict_column((2,), 3, 2, 5)
    assert p.rule == "step1" and p.columns_used == 2
    assert p.letters == (-2, -3, 1)
    assert p.selections[0] == {("f", 3): 2, ("f", 4): 2, ("f", 5): 2, ("b", 3): 2, ("b", 2): 2}
    _, traces = phi_with_traces(kleber_rc(3, 2, (2,), 5))
    assert [t.selected() for t in traces[0]] == list(p.selections)
    assert all(t.selected() == {} for t in traces[1])


def test_step_two_prediction():
    p = predict_column((1, 1), 4, 3, 6)
    assert p.rule == "step2"
    assert p.letters == (-3, -4, 4, 3)
    assert p.next_shape == (1, 1)
    _, traces = phi_with_traces(kleber_rc(4, 3, (1, 1), 6))
    assert [t.selected() for t in traces[0]] == list(p.selections)
    assert [t.letter for t in traces[0]] == list(p.letters)
