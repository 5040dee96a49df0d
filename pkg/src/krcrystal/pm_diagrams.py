"""Plus-minus diagrams and their correspondence with {2..n}-highest tableaux.

A diagram is a multiset of columns.  Each column has an outer height ``h``
and one of four kinds:

``.``   no sign
``+``   a plus in row ``h`` (the bottom cell)
``-``   a minus in row ``h``
``+-``  a plus in row ``h-1`` above a minus in row ``h``

Columns are drawn with heights weakly decreasing from left to right and,
inside one height, in the order ``.``, ``+``, ``-``, ``+-``; every count vector
gives a legal diagram in this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .base import Partition, conjugate, partition
from .tableaux import KNTableau, Tableau, apply_f, apply_sequence, highest_tableau, is_highest

KINDS = (".", "+", "-", "+-")
_KIND_INDEX = {k: j for j, k in enumerate(KINDS)}

Counts = tuple[int, int, int, int]


@dataclass(frozen=True)
class PMDiagram:
    """Column counts (c_dot, c_plus, c_minus, c_pm) for each outer height."""

    r: int
    counts: tuple[tuple[int, Counts], ...]

    def __post_init__(self) -> None:
        norm: dict[int, list[int]] = {}
        for h, c in self.counts:
            if len(c) != 4 or any(x < 0 for x in c):
                raise ValueError(f"bad counts {c} at height {h}")
            if h < 0 or h > self.r or (self.r - h) % 2:
                raise ValueError(f"height {h} not of the form r-2k with 0 <= h <= r={self.r}")
            acc = norm.setdefault(h, [0, 0, 0, 0])
            for j in range(4):
                acc[j] += c[j]
        if 0 in norm and any(norm[0][1:]):
            raise ValueError("height-0 columns carry no signs")
        if 1 in norm and norm[1][3]:
            raise ValueError("a +- column needs height at least 2")
        clean = tuple(
            (h, tuple(norm[h])) for h in sorted(norm, reverse=True) if any(norm[h])
        )
        object.__setattr__(self, "counts", clean)

    @classmethod
    def from_counts(cls, r: int, counts: Mapping[int, Sequence[int]]) -> PMDiagram:
        return cls(r, tuple((h, tuple(c)) for h, c in counts.items()))

    @classmethod
    def from_columns(cls, r: int, columns: Iterable[tuple[str, int]]) -> PMDiagram:
        acc: dict[int, list[int]] = {}
        for kind, h in columns:
            acc.setdefault(h, [0, 0, 0, 0])[_KIND_INDEX[kind]] += 1
        return cls.from_counts(r, acc)

    @classmethod
    def from_rows(cls, r: int, rows: Sequence[str], s: int | None = None) -> PMDiagram:
        """Parse a left-justified drawing: '.' blank cell, '+' and '-' signs."""
        width = max((len(row) for row in rows), default=0)
        cols = []
        for j in range(width):
            cells = "".join(row[j] for row in rows if len(row) > j)
            cols.append((_classify(cells), len(cells)))
        if s is not None:
            cols += [(".", 0)] * (s - width)
        return cls.from_columns(r, cols)

    def count(self, kind: str, h: int) -> int:
        for hh, c in self.counts:
            if hh == h:
                return c[_KIND_INDEX[kind]]
        return 0

    def as_dict(self) -> dict[int, Counts]:
        return dict(self.counts)

    def columns(self) -> list[tuple[str, int]]:
        """Columns in drawing order, height-0 columns last."""
        out = []
        for h, c in self.counts:
            for kind, m in zip(KINDS, c):
                out += [(kind, h)] * m
        return out

    @property
    def s(self) -> int:
        return sum(sum(c) for _, c in self.counts)

    def shapes(self) -> tuple[Partition, Partition, Partition]:
        """(inner, middle, outer) shapes as partitions."""
        inner, mid, outer = [], [], []
        for kind, h in self.columns():
            outer.append(h)
            mid.append(h - 1 if kind == "-" else h)
            inner.append({".": h, "+": h - 1, "-": h - 1, "+-": h - 2}[kind])
        return conjugate(inner), conjugate(mid), conjugate(outer)

    @property
    def outer(self) -> Partition:
        return self.shapes()[2]

    def rows(self) -> list[str]:
        cols = [_draw(kind, h) for kind, h in self.columns() if h]
        height = max((len(c) for c in cols), default=0)
        return ["".join(c[i] for c in cols if len(c) > i) for i in range(height)]

    def n_plus(self) -> int:
        return sum(c[1] + c[3] for _, c in self.counts)

    def n_minus(self) -> int:
        return sum(c[2] + c[3] for _, c in self.counts)

    def __str__(self) -> str:
        return " / ".join(self.rows()) or "(empty)"


def _classify(cells: str) -> str:
    body = cells.rstrip("+-")
    tail = cells[len(body):]
    if set(body) - {"."}:
        raise ValueError(f"signs must sit at the bottom of a column: {cells!r}")
    if tail in ("", "+", "-", "+-"):
        return tail or "."
    raise ValueError(f"bad column {cells!r}")


def _draw(kind: str, h: int) -> str:
    if kind == ".":
        return "." * h
    if kind == "+-":
        return "." * (h - 2) + "+-"
    return "." * (h - 1) + kind


def _compositions(m: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (m,)
        return
    for k in range(m + 1):
        for rest in _compositions(m - k, parts - 1):
            yield (k,) + rest


def enumerate_diagrams(r: int, s: int) -> list[PMDiagram]:
    """All diagrams with heights r, r-2, ... and exactly s columns."""
    heights = list(range(r, -1, -2))
    slots = []
    for h in heights:
        if h == 0:
            slots.append((h, 0))
        elif h == 1:
            slots += [(h, 0), (h, 1), (h, 2)]
        else:
            slots += [(h, j) for j in range(4)]
    out = []
    for comp in _compositions(s, len(slots)):
        acc: dict[int, list[int]] = {}
        for (h, j), m in zip(slots, comp):
            acc.setdefault(h, [0, 0, 0, 0])[j] += m
        out.append(PMDiagram.from_counts(r, acc))
    return out


def diagrams_with_outer(outer: Iterable[int], r: int, s: int) -> list[PMDiagram]:
    """Diagrams of B^{r,s} type whose outer shape is the given partition."""
    heights = list(conjugate(partition(outer)))
    mult: dict[int, int] = {}
    for h in heights:
        mult[h] = mult.get(h, 0) + 1
    zero = s - len(heights)
    if zero < 0:
        raise ValueError("outer shape has more than s columns")
    options = []
    for h, m in sorted(mult.items(), reverse=True):
        kinds = 3 if h == 1 else 4
        options.append([(h, comp + (0,) * (4 - kinds)) for comp in _compositions(m, kinds)])
    out = []
    for choice in product(*options):
        acc = {h: c for h, c in choice}
        if zero:
            acc[0] = (zero, 0, 0, 0)
        out.append(PMDiagram.from_counts(r, acc))
    return out


def all_plus(r: int, s: int) -> PMDiagram:
    return PMDiagram.from_counts(r, {r: (0, s, 0, 0)})


def _replace(P: PMDiagram, old: tuple[str, int], new: tuple[str, int]) -> PMDiagram:
    cols = P.columns()
    cols.remove(old)
    cols.append(new)
    return PMDiagram.from_columns(P.r, cols)


def reduction_step(P: PMDiagram, n: int) -> tuple[PMDiagram, list[int]] | None:
    """One inductive step: (P', lowering indices in application order), or None at the top."""
    cols = P.columns()
    for kind, h in reversed(cols):
        if kind == "." and h >= 1:
            return _replace(P, (kind, h), ("+", h)), list(range(h, 0, -1))
        if kind == "-" and h >= 2:
            return _replace(P, (kind, h), ("+-", h)), list(range(h - 1, 0, -1))
    for kind, h in cols:
        if kind == "+-" or (kind == "-" and h == 1):
            seq = list(range(h, n - 1)) + [n, n - 1] + list(range(n - 2, 0, -1))
            return _replace(P, (kind, h), ("+", h)), seq
        if kind == "-":
            raise AssertionError("a minus above height 1 always admits a plus")
    return None


def gamma_sequence(P: PMDiagram, n: int) -> list[int]:
    """Lowering indices, in application order, taking u_outer to gamma(P)."""
    blocks = []
    while (step := reduction_step(P, n)) is not None:
        P, seq = step
        blocks.append(seq)
    return [i for seq in reversed(blocks) for i in seq]


def gamma(P: PMDiagram, n: int) -> KNTableau:
    if P.r > n - 2:
        raise ValueError(f"column height {P.r} exceeds n-2={n - 2}")
    u = highest_tableau(P.outer, n)
    t = apply_sequence(apply_f, gamma_sequence(P, n), u)
    if t is None:
        raise AssertionError("lowering string left the crystal")
    return t


@lru_cache(maxsize=None)
def _gamma_table(outer: Partition, r: int, s: int, n: int) -> dict[Tableau, PMDiagram]:
    return {gamma(P, n): P for P in diagrams_with_outer(outer, r, s)}


def gamma_inv(t: Tableau, r: int | None = None, s: int | None = None) -> PMDiagram:
    """The diagram P with gamma(P) = t (found among diagrams of the same outer shape)."""
    n = t.n
    if not is_highest(t, range(2, n + 1)):
        raise ValueError("tableau is not {2..n}-highest")
    outer = t.shape
    r = r if r is not None else (len(outer) if outer else 0)
    s = s if s is not None else len(t.columns)
    key = KNTableau(t.columns, n)
    table = _gamma_table(outer, r, s, n)
    if key not in table:
        raise ValueError("no diagram maps to this tableau")
    return table[key]


def frakS(P: PMDiagram, restricted: bool = True) -> PMDiagram:
    """Swap c+(h) with c-(h) and c.(h-2) with c+-(h).

    With ``restricted`` only heights h <= r take part, so c.(r) stays put.
    """
    d = P.as_dict()
    top = P.r if restricted else P.r + 2

    def get(h: int, j: int) -> int:
        return d.get(h, (0, 0, 0, 0))[j]

    acc: dict[int, list[int]] = {}
    for h in range(top % 2, top + 1, 2):
        acc[h] = [get(h, 0), get(h, 2), get(h, 1), get(h, 3)]
    for h in range(2 + top % 2, top + 1, 2):
        acc[h][3] = get(h - 2, 0)
        acc[h - 2][0] = get(h, 3)
    new_r = top if any(acc[top]) else P.r
    return PMDiagram.from_counts(new_r, {h: c for h, c in acc.items() if any(c)})
