import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krcrystal.base import Weight
from krcrystal.tableaux import (
    KNTableau,
    KRTableau,
    TensorElement,
    apply_e,
    apply_f,
    apply_sequence,
    classical_crystal,
    classical_ops,
    epsilon_i,
    generate_closure,
    highest_tableau,
    is_highest,
    letter_f,
    letter_less,
    lower_back,
    phi_i,
    reading_word,
    signature,
    to_highest,
    weight,
    word_f,
)

GAMMA_STRING = [3, 5, 4, 3, 2, 1, 3, 2, 1, 1]
GAMMA_RESULT = [[1, 2, 2], [2, 3], [4, -1]]


@st.composite
def kn_elements(draw):
    n = draw(st.integers(4, 6))
    shape = draw(st.sampled_from([(1,), (2,), (1, 1), (2, 1), (2, 2), (1, 1, 1), (3, 1)]))
    x = highest_tableau(shape, n)
    for i in draw(st.lists(st.integers(1, n), max_size=15)):
        x = apply_f(i, x) or x
    return x


def test_letter_order_and_arrows():
    n = 5
    chain = [1, 2, 3, 4, 5, -4, -3, -2, -1]
    assert all(letter_less(a, b, n) for a, b in zip(chain, chain[1:]))
    assert letter_less(4, -5, n) and letter_less(-5, -4, n)
    assert not letter_less(5, -5, n) and not letter_less(-5, 5, n)
    assert letter_f(4, 4, n) == 5 and letter_f(-5, 4, n) == -4 and letter_f(5, 4, n) is None
    assert letter_f(4, 5, n) == -5 and letter_f(5, 5, n) == -4 and letter_f(-5, 5, n) is None


def test_signature_cancels_plus_against_later_minus():
    n = 4
    # letters 1 (+), 2 (-) for i = 1: the pair cancels
    assert signature((1, 2), 1, n) == ([], [])
    assert signature((2, 1), 1, n) == ([0], [1])
    assert word_f((2, 1, 1), 1, n) == (2, 2, 1)


def test_reading_convention_reproduces_the_worked_lowering():
    top = highest_tableau((3, 2, 2), 5)
    assert apply_sequence(apply_f, GAMMA_STRING, top).rows() == GAMMA_RESULT


def test_reading_word_runs_columns_right_to_left():
    t = KNTableau.from_rows(GAMMA_RESULT, 5)
    assert reading_word(t) == (2, 2, 3, -1, 1, 2, 4)


@settings(max_examples=60, deadline=None)
@given(kn_elements(), st.data())
def test_lowering_commutes_with_the_reading_word(x, data):
    i = data.draw(st.integers(1, x.n))
    y = apply_f(i, x)
    w = word_f(reading_word(x), i, x.n)
    assert (y is None and w is None) or reading_word(y) == w


def test_left_to_right_reading_does_not():
    """Reading columns left to right gives a different tableau on the same string."""

    def lowered(t, i):
        cols, k = [], 0
        word = word_f(tuple(x for c in t.columns for x in c), i, t.n)
        for c in t.columns:
            cols.append(tuple(word[k:k + len(c)]))
            k += len(c)
        return KNTableau(tuple(cols), t.n)

    t = highest_tableau((3, 2, 2), 5)
    for i in GAMMA_STRING:
        t = lowered(t, i)
    assert t.rows() != GAMMA_RESULT


def test_raising_with_smallest_index_first():
    b = KRTableau.from_rows([[2, 1], [-3, -1]], 5)
    seq, top = to_highest(b, range(1, 6))
    assert seq == [1, 3, 4, 5, 3, 2]
    assert top.rows() == [[1, 1], [2, -1]]
    assert lower_back(seq, top) == b


@pytest.mark.parametrize(
    "shape,n,size",
    [((1,), 4, 8), ((1, 1), 4, 28), ((2,), 4, 35), ((1, 1, 1), 4, 56), ((1,), 5, 10), ((1, 1), 5, 45), ((2, 1), 4, 160)],
)
def test_classical_crystal_dimensions(shape, n, size):
    g = classical_crystal(shape, n)
    assert len(g.vertices) == size
    assert g.highest(range(1, n + 1)) == [highest_tableau(shape, n)]


@settings(max_examples=60, deadline=None)
@given(kn_elements(), st.data())
def test_e_inverts_f_and_weights_shift_by_a_root(x, data):
    n = x.n
    i = data.draw(st.integers(1, n))
    y = apply_f(i, x)
    assert phi_i(i, x) - epsilon_i(i, x) == weight(x).pair(i)
    if y is None:
        assert phi_i(i, x) == 0
    else:
        assert apply_e(i, y) == x
        assert weight(y) == weight(x) - Weight.simple_root(i, n)


@settings(max_examples=40, deadline=None)
@given(kn_elements())
def test_raising_reaches_the_highest_element(x):
    _, top = to_highest(x, range(1, x.n + 1))
    assert top == highest_tableau(x.shape, x.n)


def test_tensor_square_of_the_vector_crystal():
    n = 4
    u = highest_tableau((1,), n, KRTableau)
    vec = [v for v in classical_crystal((1,), n).vertices]
    elems = [TensorElement((KRTableau(a.columns, n), KRTableau(b.columns, n))) for a in vec for b in vec]
    tops = sorted(weight(e).coeffs for e in elems if is_highest(e, range(1, n + 1)))
    assert tops == [(0, 0, 0, 0), (0, 1, 0, 0), (2, 0, 0, 0)]
    comp = generate_closure([TensorElement((u, u))], classical_ops(n))
    assert len(comp.vertices) == 35


def test_tensor_word_puts_the_last_factor_first():
    a = KRTableau.from_rows([[1]], 4)
    b = KRTableau.from_rows([[2]], 4)
    assert TensorElement((a, b)).word() == (2, 1)
    # the leftmost unpaired letter of the word sits in the right factor
    assert apply_f(1, TensorElement((a, a))) == TensorElement((a, b))
