"""Word crystals of type D_n: letters, tableaux, tensor products and closures.

Letters are signed integers, ``-k`` standing for the barred letter.  A tableau
is stored by columns (top to bottom).  Its reading word lists the columns from
right to left, each read top to bottom, and the signature rule pairs a ``+``
with a later ``-``; the lowering operator acts on the leftmost unpaired ``+``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence, TypeVar

from .base import Partition, Weight, conjugate, partition

Letter = int
X = TypeVar("X", bound=Hashable)
Op = Callable[[int, X], "X | None"]


def letter_str(x: Letter) -> str:
    return f"-{-x}" if x < 0 else str(x)


def letter_rank(x: Letter, n: int) -> int:
    """Position in 1 < ... < n, nbar < ... < 1bar (n and nbar share no order)."""
    return x if x > 0 else 2 * n + 1 + x


def letter_less(x: Letter, y: Letter, n: int) -> bool:
    if {x, y} == {n, -n}:
        return False
    return letter_rank(x, n) < letter_rank(y, n)


def letter_f(x: Letter, i: int, n: int) -> Letter | None:
    if i < n:
        if x == i:
            return i + 1
        if x == -(i + 1):
            return -i
        return None
    if x == n - 1:
        return -n
    if x == n:
        return -(n - 1)
    return None


def letter_e(x: Letter, i: int, n: int) -> Letter | None:
    if i < n:
        if x == i + 1:
            return i
        if x == -i:
            return -(i + 1)
        return None
    if x == -n:
        return n - 1
    if x == -(n - 1):
        return n
    return None


def letter_weight(x: Letter, n: int) -> Weight:
    eps = [0] * n
    eps[abs(x) - 1] = 1 if x > 0 else -1
    return Weight.from_epsilon(eps, n)


# Spin letters are +-1 vectors of length n; used only for the spin KR crystals.

def spin_f(x: tuple[int, ...], i: int, n: int) -> tuple[int, ...] | None:
    if i < n:
        if x[i - 1] == 1 and x[i] == -1:
            return x[: i - 1] + (-1, 1) + x[i + 1:]
        return None
    if x[n - 2] == 1 and x[n - 1] == 1:
        return x[: n - 2] + (-1, -1)
    return None


def spin_e(x: tuple[int, ...], i: int, n: int) -> tuple[int, ...] | None:
    if i < n:
        if x[i - 1] == -1 and x[i] == 1:
            return x[: i - 1] + (1, -1) + x[i + 1:]
        return None
    if x[n - 2] == -1 and x[n - 1] == -1:
        return x[: n - 2] + (1, 1)
    return None


def _f(x, i: int, n: int):
    return spin_f(x, i, n) if isinstance(x, tuple) else letter_f(x, i, n)


def _e(x, i: int, n: int):
    return spin_e(x, i, n) if isinstance(x, tuple) else letter_e(x, i, n)


def _weight_of_letter(x, n: int) -> Weight:
    if isinstance(x, tuple):
        return Weight.from_epsilon([Fraction(s, 2) for s in x], n)
    return letter_weight(x, n)


def signature(word: Sequence, i: int, n: int) -> tuple[list[int], list[int]]:
    """Unpaired positions (minus, plus) of the i-signature of a word."""
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(word):
        if _e(x, i, n) is not None:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        if _f(x, i, n) is not None:
            plus.append(pos)
    return minus, plus


def word_f(word: Sequence, i: int, n: int) -> tuple | None:
    _, plus = signature(word, i, n)
    if not plus:
        return None
    k = plus[0]
    return tuple(word[:k]) + (_f(word[k], i, n),) + tuple(word[k + 1:])


def word_e(word: Sequence, i: int, n: int) -> tuple | None:
    minus, _ = signature(word, i, n)
    if not minus:
        return None
    k = minus[-1]
    return tuple(word[:k]) + (_e(word[k], i, n),) + tuple(word[k + 1:])


def word_phi(word: Sequence, i: int, n: int) -> int:
    return len(signature(word, i, n)[1])


def word_epsilon(word: Sequence, i: int, n: int) -> int:
    return len(signature(word, i, n)[0])


@dataclass(frozen=True)
class Tableau:
    """A column-strict filling stored column by column."""

    columns: tuple[tuple[Letter, ...], ...]
    n: int

    def __post_init__(self) -> None:
        hs = [len(c) for c in self.columns]
        if any(h == 0 for h in hs) or hs != sorted(hs, reverse=True):
            raise ValueError("column heights must be positive and weakly decreasing")
        for c in self.columns:
            for x in c:
                if not (1 <= abs(x) <= self.n):
                    raise ValueError(f"letter {x} outside D_{self.n} alphabet")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Letter]], n: int):
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        cols = []
        for j in range(width):
            cols.append(tuple(r[j] for r in rows if len(r) > j))
        return cls(tuple(cols), n)

    @property
    def shape(self) -> Partition:
        return conjugate(len(c) for c in self.columns)

    def rows(self) -> list[list[Letter]]:
        sh = self.shape
        return [[c[i] for c in self.columns if len(c) > i] for i in range(len(sh))]

    def word(self) -> tuple[Letter, ...]:
        return tuple(x for c in reversed(self.columns) for x in c)

    def with_word(self, word: Sequence[Letter]):
        cols, k = [], 0
        for c in reversed(self.columns):
            cols.append(tuple(word[k:k + len(c)]))
            k += len(c)
        return type(self)(tuple(reversed(cols)), self.n)

    def __str__(self) -> str:
        return " / ".join(" ".join(letter_str(x) for x in r) for r in self.rows()) or "()"


class KNTableau(Tableau):
    """A tableau of arbitrary shape inside a classical highest weight crystal."""


class KRTableau(Tableau):
    """A rectangular r x s tableau."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len({len(c) for c in self.columns}) > 1:
            raise ValueError("KR tableaux are rectangular")

    @property
    def r(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def s(self) -> int:
        return len(self.columns)


def highest_tableau(shape: Iterable[int], n: int, cls: type = KNTableau) -> Tableau:
    """u_lambda: row i filled with the letter i."""
    cols = conjugate(shape)
    return cls(tuple(tuple(range(1, h + 1)) for h in cols), n)


@dataclass(frozen=True)
class TensorElement:
    """b_1 (x) ... (x) b_L with the anti-Kashiwara ordering of factors.

    The crystal operators use the word of b_L followed by ... by the word of b_1.
    """

    factors: tuple[Tableau, ...]
    n: int = field(default=0)

    def __post_init__(self) -> None:
        if not self.n:
            object.__setattr__(self, "n", self.factors[0].n if self.factors else 0)

    def word(self) -> tuple[Letter, ...]:
        return tuple(x for t in reversed(self.factors) for x in t.word())

    def with_word(self, word: Sequence[Letter]) -> TensorElement:
        out, k = [], len(word)
        for t in self.factors:
            m = len(t.word())
            out.append(t.with_word(word[k - m:k]))
            k -= m
        return TensorElement(tuple(out), self.n)

    def __str__(self) -> str:
        return " (x) ".join(f"[{t}]" for t in self.factors)


def reading_word(x) -> tuple:
    return x.word()


def apply_f(i: int, x):
    if not 1 <= i <= x.n:
        raise ValueError(f"node {i} outside 1..{x.n}")
    w = word_f(x.word(), i, x.n)
    return None if w is None else x.with_word(w)


def apply_e(i: int, x):
    if not 1 <= i <= x.n:
        raise ValueError(f"node {i} outside 1..{x.n}")
    w = word_e(x.word(), i, x.n)
    return None if w is None else x.with_word(w)


def phi_i(i: int, x) -> int:
    return word_phi(x.word(), i, x.n)


def epsilon_i(i: int, x) -> int:
    return word_epsilon(x.word(), i, x.n)


def weight(x) -> Weight:
    w = Weight.zero(x.n)
    for letter in x.word():
        w = w + _weight_of_letter(letter, x.n)
    return w


def apply_sequence(op: Op, seq: Iterable[int], x):
    """Apply op(i, .) for each i in seq, left to right in application order."""
    for i in seq:
        if x is None:
            return None
        x = op(i, x)
    return x


def to_highest(x, nodes: Iterable[int], e: Op = apply_e) -> tuple[list[int], object]:
    """Raise greedily with the smallest applicable index; returns (applied indices, top)."""
    nodes = sorted(nodes)
    seq: list[int] = []
    while True:
        for j in nodes:
            y = e(j, x)
            if y is not None:
                seq.append(j)
                x = y
                break
        else:
            return seq, x


def lower_back(seq: Sequence[int], x, f: Op = apply_f):
    """Undo a raising sequence recorded by to_highest."""
    return apply_sequence(f, reversed(list(seq)), x)


def is_highest(x, nodes: Iterable[int], e: Op = apply_e) -> bool:
    return all(e(j, x) is None for j in nodes)


class ClosureBudgetExceeded(RuntimeError):
    pass


@dataclass
class CrystalGraph:
    vertices: list
    edges: list[tuple[object, int, object]]

    def index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def highest(self, nodes: Iterable[int]) -> list:
        nodes = set(nodes)
        has_in = {v for (_, i, v) in self.edges if i in nodes}
        return [v for v in self.vertices if v not in has_in]


def generate_closure(
    generators: Iterable[X],
    ops: Mapping[int, Callable[[X], X | None]],
    inverse_ops: Mapping[int, Callable[[X], X | None]] | None = None,
    max_vertices: int = 250_000,
) -> CrystalGraph:
    """Breadth-first closure; edges are recorded for ``ops`` (lowering) only."""
    seen: dict = {}
    order: list = []
    edges = []
    queue: deque = deque()
    for g in generators:
        if g not in seen:
            seen[g] = len(order)
            order.append(g)
            queue.append(g)
    while queue:
        v = queue.popleft()
        moves = [(i, op(v), True) for i, op in ops.items()]
        if inverse_ops:
            moves += [(i, op(v), False) for i, op in inverse_ops.items()]
        for i, w, forward in moves:
            if w is None:
                continue
            if forward:
                edges.append((v, i, w))
            if w not in seen:
                if len(order) >= max_vertices:
                    raise ClosureBudgetExceeded(f"more than {max_vertices} vertices")
                seen[w] = len(order)
                order.append(w)
                queue.append(w)
    return CrystalGraph(order, edges)


def classical_ops(n: int, f: Op = apply_f) -> dict[int, Callable]:
    return {i: (lambda x, i=i: f(i, x)) for i in range(1, n + 1)}


def classical_crystal(shape: Iterable[int], n: int, cls: type = KNTableau) -> CrystalGraph:
    return generate_closure([highest_tableau(partition(shape), n, cls)], classical_ops(n))
