import pytest

from krcrystal import corpus
from krcrystal.affine import (
    KRElement,
    affine_graph,
    coenergy_single,
    e0,
    f0,
    gamma_rc,
    gamma_rc_inv,
    iota,
    iota_inv,
    kr_crystal,
    kr_highest,
    level_zero_defect,
    rc_crystal_single,
    sigma,
    sigma_rc,
    spin_upper_highest_rc,
)
from krcrystal.pm_diagrams import enumerate_diagrams, gamma, reduction_step
from krcrystal.rigged import RiggedConfiguration, TensorSpec, cocharge, rc_e, rc_f
from krcrystal.tableaux import apply_f, is_highest


def test_column_atoms_of_the_five_column_diagram():
    rc = gamma_rc(corpus.ATOM_DIAGRAM, 10)
    assert rc.strings(5) == ((6, 1), (2, 0), (2, 0), (2, 0), (2, 0))
    assert rc.strings(1) == ((6, -5),)
    assert [rc.partition(a) for a in range(1, 11)] == corpus.ATOM_PARTS
    assert gamma_rc_inv(rc) == corpus.ATOM_DIAGRAM


def test_first_raising_step_has_negative_vacancy():
    start = gamma_rc(corpus.CHAIN_START, 6)
    y = rc_e(1, start)
    assert [(l, y.vacancy(2, l), x) for l, x in y.strings(2)] == [(3, -1, -1), (1, 0, 0)]


@pytest.mark.parametrize("chain,start,end", [
    (corpus.CHAIN_ONE, corpus.CHAIN_START, corpus.CHAIN_MID),
    (corpus.CHAIN_TWO, corpus.CHAIN_MID, corpus.CHAIN_END),
])
def test_raising_chains_move_between_atoms(chain, start, end):
    rc = gamma_rc(start, 6)
    for i, expected in chain:
        if i is not None:
            rc = rc_e(i, rc)
        assert [[(l, rc.vacancy(a, l), x) for l, x in rc.strings(a)] for a in range(1, 7)] == expected
    assert rc == gamma_rc(end, 6)


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (5, 2, 2), (5, 3, 2), (6, 4, 2), (6, 3, 3)])
def test_atoms_agree_with_the_tableau_side(n, r, s):
    for P in enumerate_diagrams(r, s):
        b = KRElement(r, s, gamma(P, n))
        x = gamma_rc(P, n, s)
        assert iota(b) == x
        assert is_highest(x, range(2, n + 1), e=rc_e)
        assert gamma_rc_inv(x) == P


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (5, 2, 3), (5, 3, 2), (6, 4, 2), (6, 3, 3)])
def test_each_reduction_step_is_a_raising_chain_between_atoms(n, r, s):
    for P in enumerate_diagrams(r, s):
        step = reduction_step(P, n)
        if step is None:
            continue
        smaller, seq = step
        x = gamma_rc(P, n, s)
        for i in reversed(seq):
            x = rc_e(i, x)
            assert x is not None
        assert x == gamma_rc(smaller, n, s)


def test_vector_crystal_zero_arrows():
    g = affine_graph(kr_crystal(4, 1, 1), 4)
    zero = sorted((u.tableau.rows(), v.tableau.rows()) for u, i, v in g.edges if i == 0)
    assert zero == [([[-2]], [[1]]), ([[-1]], [[2]])]


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (4, 1, 3), (5, 2, 2), (4, 3, 2), (4, 4, 3)])
def test_sigma_fixes_upper_arrows(n, r, s):
    for b in kr_crystal(n, r, s).vertices:
        sb = sigma(b)
        assert sigma(sb) == b
        for i in range(2, n - 1):
            fb = apply_f(i, b)
            assert (None if fb is None else sigma(fb)) == apply_f(i, sb)
        if (up := f0(b)) is not None:
            assert e0(up) == b
        assert level_zero_defect(b) == 0


def test_spin_sigma_swaps_the_two_spin_nodes():
    b = kr_highest(3, 2, (), 4)
    assert sigma(b).r == 4
    x = spin_upper_highest_rc(3, 2, 0, 4)
    assert x == RiggedConfiguration.empty(4, TensorSpec.single(3, 2))
    assert sigma_rc(x).spec == TensorSpec.single(4, 2)
    assert sigma_rc(x).partition(1) == (2,)


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (4, 1, 2), (4, 4, 2), (5, 2, 2)])
def test_iota_is_a_bijection_preserving_statistics(n, r, s):
    T = kr_crystal(n, r, s)
    R = rc_crystal_single(n, r, s)
    image = {iota(b) for b in T.vertices}
    assert image == set(R.vertices)
    for b in T.vertices:
        x = iota(b)
        assert iota_inv(x) == b
        assert coenergy_single(b) == cocharge(x)


def test_domino_statistic_values():
    values = {coenergy_single(b) for b in kr_crystal(4, 2, 2).vertices}
    assert values == {0, 1, 2}


@pytest.mark.parametrize("n,r,s", [(4, 2, 2), (4, 3, 2)])
def test_rc_sigma_is_an_involution_commuting_with_upper_nodes(n, r, s):
    for x in rc_crystal_single(n, r, s).vertices:
        y = sigma_rc(x)
        assert sigma_rc(y) == x
        fx = rc_f(2, x)
        assert (None if fx is None else sigma_rc(fx)) == rc_f(2, y)
