"""Affine structure on single KR crystals B^{r,s} in both models.

The extra operators e_0, f_0 are conjugates of e_1, f_1 by an involution
sigma.  On tableaux sigma is built from plus-minus diagrams; on rigged
configurations it is built from the column atoms below, which turn a diagram
directly into a {2..n}-highest rigged configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .base import Partition, classical_decomposition, partition
from .pm_diagrams import PMDiagram, frakS, gamma, gamma_inv
from .rigged import (
    RiggedConfiguration,
    String,
    TensorSpec,
    kleber_rc,
    rc_closure,
    rc_e,
    rc_f,
    rc_weight,
)
from .tableaux import (
    CrystalGraph,
    Tableau,
    apply_e,
    apply_f,
    generate_closure,
    highest_tableau,
    is_highest,
    lower_back,
    to_highest,
    weight,
)

def _upper(n: int) -> range:
    return range(2, n + 1)


# ---------------------------------------------------------------------------
# Column atoms.  Each entry maps a node a to the strings it contributes; x is
# the outer height of the column and y = r - x.


def _column_block(n: int, r: int, start: int, first: int, y: int) -> dict[int, list[String]]:
    """Nodes start..r carry (1^k) for k = first, first+1, ...; above r the column is frozen."""
    out: dict[int, list[String]] = {}
    for a in range(start, r + 1):
        out[a] = [(1, 0)] * (first + a - start)
    top = first + r - start
    for a in range(r + 1, n - 1):
        out[a] = [(1, 0)] * top
    for a in (n - 1, n):
        out[a] = [(1, 0)] * (top // 2)
    return out


def atom(kind: str, x: int, r: int, n: int) -> dict[int, list[String]]:
    """Rigged configuration contributed by one column of a plus-minus diagram."""
    y = r - x
    if y % 2:
        raise ValueError("column heights must share the parity of r")
    if kind in ("+", ".") and (kind == "+" or x == 0):
        return _column_block(n, r, x + 1, 1, y) if y else {}
    if kind == ".":
        out = {a: [(1, -1 if a == 1 else 0)] for a in range(1, x + 1)}
        if y:
            out.update(_column_block(n, r, x + 1, 1, y))
            out[x + 1] = [(1, 1)]
        return out
    if kind in ("-", "+-"):
        if kind == "+-" and x < 2:
            raise ValueError("a +- column has height at least 2")
        part = 2 if kind == "-" else 1
        out = {a: [(part, -part if a == 1 else 0)] for a in range(1, x)}
        out.update(_column_block(n, r, x, 2, y))
        if x == 1:
            out[1] = [(1, -1), (1, -1)]
        return out
    raise ValueError(f"unknown column kind {kind!r}")


def _add_rows(parts: Iterable[list[String]]) -> list[String]:
    rows: list[list[int]] = []
    for strings in parts:
        for k, (l, x) in enumerate(sorted(strings, key=lambda t: (-t[0], -t[1]))):
            if k == len(rows):
                rows.append([0, 0])
            rows[k][0] += l
            rows[k][1] += x
    return [(l, x) for l, x in rows]


def gamma_rc(P: PMDiagram, n: int, s: int | None = None) -> RiggedConfiguration:
    """Sum of the column atoms of P, a {2..n}-highest element of RC(B^{r,s})."""
    r = P.r
    if r > n - 2:
        raise ValueError(f"column height {r} exceeds n-2={n - 2}")
    s = P.s if s is None else s
    cols = P.columns() + [(".", 0)] * (s - P.s)
    atoms = [atom(kind, h, r, n) for kind, h in cols]
    nu = [_add_rows(at.get(a, []) for at in atoms) for a in range(1, n + 1)]
    return RiggedConfiguration(n, TensorSpec.single(r, s), tuple(tuple(p) for p in nu))


def _first(rc: RiggedConfiguration, a: int, j: int = 1) -> int:
    """nu^{(a)}_j, zero when absent or a is outside 1..n."""
    if a < 1 or a > rc.n:
        return 0
    p = rc.partition(a)
    return p[j - 1] if len(p) >= j else 0


def _first_rigging(rc: RiggedConfiguration, a: int) -> int:
    s = rc.strings(a)
    return s[0][1] if s else 0


def gamma_rc_inv(rc: RiggedConfiguration) -> PMDiagram:
    """Recover the diagram from the first rows and riggings of a {2..n}-highest RC."""
    ((r, s),) = rc.spec.factors
    n = rc.n
    if not all(rc_e(a, rc) is None for a in _upper(n)):
        raise ValueError("rigged configuration is not {2..n}-highest")
    heights = list(range(r % 2, r + 1, 2))
    dot: dict[int, int] = {}
    plus: dict[int, int] = {}
    minus: dict[int, int] = {}
    pm: dict[int, int] = {}
    for h in heights:
        if h < r:
            dot[h] = _first_rigging(rc, h + 1) + (_first(rc, 1) if h == 0 else 0)
        else:
            dot[h] = _first(rc, r) - _first(rc, r + 1)
        if 1 <= h < r:
            plus[h] = _first(rc, h + 1) - _first(rc, h)
        if h == 1:
            minus[h] = _first(rc, 1, 2)
        elif h > 1:
            minus[h] = _first(rc, h - 1) - _first(rc, h)
    for h in heights:
        if h >= 2:
            below = dot.get(h - 2, 0) + plus.get(h - 2, 0)
            pm[h] = sum(_first(rc, h, j) - _first(rc, h - 1, j) for j in (1, 2)) - below
    if r >= 1:
        plus[r] = s - sum(dot.values()) - sum(plus.values()) - sum(minus.values()) - sum(pm.values())
    counts = {h: (dot.get(h, 0), plus.get(h, 0), minus.get(h, 0), pm.get(h, 0)) for h in heights}
    if any(c < 0 for v in counts.values() for c in v):
        raise ValueError("rigged configuration is not in the image of the column atoms")
    return PMDiagram.from_counts(r, counts)


# ---------------------------------------------------------------------------
# Spin columns on the tableau side: letters are +-1 vectors of length n.


@dataclass(frozen=True)
class SpinRow:
    """s spin columns side by side; the word lists them right to left."""

    letters: tuple[tuple[int, ...], ...]
    n: int

    def word(self) -> tuple:
        return tuple(reversed(self.letters))

    def with_word(self, word: Sequence) -> SpinRow:
        return SpinRow(tuple(reversed(tuple(word))), self.n)

    @property
    def shape(self) -> Partition:
        return ()

    def __str__(self) -> str:
        return " ".join("".join("+" if v > 0 else "-" for v in x) for x in self.letters)


def spin_highest(r: int, s: int, n: int) -> SpinRow:
    letter = (1,) * (n - 1) + ((1,) if r == n else (-1,))
    return SpinRow((letter,) * s, n)


# ---------------------------------------------------------------------------
# Elements of a single KR crystal in the tableau model.


@dataclass(frozen=True)
class KRElement:
    """An element of B^{r,s}: a KN tableau (or spin row) tagged with (r, s)."""

    r: int
    s: int
    tableau: Union[Tableau, SpinRow]

    @property
    def n(self) -> int:
        return self.tableau.n

    @property
    def is_spin(self) -> bool:
        return self.r >= self.n - 1

    def word(self) -> tuple:
        return self.tableau.word()

    def with_word(self, word: Sequence) -> KRElement:
        return KRElement(self.r, self.s, self.tableau.with_word(word))

    def __str__(self) -> str:
        return str(self.tableau)


def kr_highest(r: int, s: int, lam: Iterable[int], n: int) -> KRElement:
    if r >= n - 1:
        return KRElement(r, s, spin_highest(r, s, n))
    return KRElement(r, s, highest_tableau(partition(lam), n))


def _classical_ops(n: int, f=apply_f) -> dict[int, Callable]:
    return {i: (lambda x, i=i: f(i, x)) for i in range(1, n + 1)}


def kr_crystal(n: int, r: int, s: int, max_vertices: int = 250_000) -> CrystalGraph:
    """The classical crystal underlying B^{r,s}, tableau model."""
    if r >= n - 1:
        seeds = [kr_highest(r, s, (), n)]
    else:
        seeds = [kr_highest(r, s, lam, n) for lam in classical_decomposition(r, s, n)]
    return generate_closure(seeds, _classical_ops(n), max_vertices=max_vertices)


@lru_cache(maxsize=None)
def _spin_upper_highest(r: int, s: int, n: int) -> dict[tuple, KRElement]:
    """{2..n}-highest elements of B^{r,s} (spin r) keyed by epsilon weight."""
    graph = kr_crystal(n, r, s)
    out = {}
    for v in graph.vertices:
        if is_highest(v, _upper(n)):
            out[weight(v).to_epsilon()] = v
    return out


def _spin_partner(r: int, n: int) -> int:
    return n if r == n - 1 else n - 1


def sigma(b: KRElement) -> KRElement:
    """The involution of B^{r,s} fixing nodes 2..n and exchanging 0 and 1."""
    n = b.n
    seq, top = to_highest(b, _upper(n))
    if b.is_spin:
        eps = weight(top).to_epsilon()
        target = (-eps[0],) + eps[1:]
        new = _spin_upper_highest(_spin_partner(b.r, n), b.s, n)[target]
    else:
        P = gamma_inv(top.tableau, b.r, b.s)
        new = KRElement(b.r, b.s, gamma(frakS(P), n))
    out = lower_back(seq, new)
    if out is None:
        raise AssertionError("sigma left the crystal")
    return out


def sigma_rc(rc: RiggedConfiguration) -> RiggedConfiguration:
    """sigma transported to rigged configurations through the column atoms."""
    n = rc.n
    ((r, s),) = rc.spec.factors
    seq, top = to_highest(rc, _upper(n), e=rc_e)
    if r >= n - 1:
        j = _first(top, 1)
        new = spin_upper_highest_rc(_spin_partner(r, n), s, s - j, n)
    else:
        new = gamma_rc(frakS(gamma_rc_inv(top)), n, s)
    out = lower_back(seq, new, f=rc_f)
    if out is None:
        raise AssertionError("sigma_rc left the crystal")
    return out


def spin_upper_highest_rc(r: int, s: int, j: int, n: int) -> RiggedConfiguration:
    """The {2..n}-highest element of RC(B^{r,s}), r spin, with j boxes in nu^{(1)}."""
    if not 0 <= j <= s:
        raise ValueError("need 0 <= j <= s")
    spec = TensorSpec.single(r, s)
    if j == 0:
        return RiggedConfiguration.empty(n, spec)
    nu: list[tuple[String, ...]] = [((j, -j),)] + [((j, 0),)] * (n - 3)
    skip = n if r == n - 1 else n - 1
    nu += [((j, 0),) if a != skip else () for a in (n - 1, n)]
    return RiggedConfiguration(n, spec, tuple(nu))


def f0(x):
    """f_0 = sigma f_1 sigma on either model; None when undefined."""
    return _conj(x, rc_f if isinstance(x, RiggedConfiguration) else apply_f)


def e0(x):
    return _conj(x, rc_e if isinstance(x, RiggedConfiguration) else apply_e)


def _conj(x, op):
    sig = sigma_rc if isinstance(x, RiggedConfiguration) else sigma
    y = op(1, sig(x))
    return None if y is None else sig(y)


# ---------------------------------------------------------------------------
# The isomorphism between the two models.


def iota(b: KRElement) -> RiggedConfiguration:
    seq, top = to_highest(b, range(1, b.n + 1))
    if b.is_spin:
        seed = RiggedConfiguration.empty(b.n, TensorSpec.single(b.r, b.s))
    else:
        seed = kleber_rc(b.r, b.s, top.tableau.shape, b.n)
    out = lower_back(seq, seed, f=rc_f)
    if out is None:
        raise AssertionError("iota: lowering string undefined on the rigged side")
    return out


def iota_inv(rc: RiggedConfiguration) -> KRElement:
    n = rc.n
    ((r, s),) = rc.spec.factors
    seq, top = to_highest(rc, range(1, n + 1), e=rc_e)
    lam = () if r >= n - 1 else rc_weight(top).to_partition()
    out = lower_back(seq, kr_highest(r, s, lam, n))
    if out is None:
        raise AssertionError("iota_inv: lowering string undefined on the tableau side")
    return out


def coenergy_single(b: KRElement) -> int:
    """Number of vertical dominoes removed from the r x s rectangle."""
    if b.is_spin:
        return 0
    _, top = to_highest(b, range(1, b.n + 1))
    return (b.r * b.s - sum(top.tableau.shape)) // 2


def rc_crystal_single(n: int, r: int, s: int, max_vertices: int = 250_000) -> CrystalGraph:
    spec = TensorSpec.single(r, s)
    if r >= n - 1:
        seeds = [RiggedConfiguration.empty(n, spec)]
    else:
        seeds = [kleber_rc(r, s, lam, n) for lam in classical_decomposition(r, s, n)]
    return rc_closure(seeds, n, max_vertices)


def affine_graph(classical: CrystalGraph, n: int) -> CrystalGraph:
    """Add the 0-arrows to a classical crystal of a single KR crystal."""
    edges = list(classical.edges)
    for v in classical.vertices:
        w = f0(v)
        if w is not None:
            edges.append((v, 0, w))
    return CrystalGraph(classical.vertices, edges)


def level_zero_defect(b: KRElement) -> int:
    """phi_0 - eps_0 plus the pairing of the weight with the null coroot part; zero at level 0."""
    n = b.n
    w = weight(b)
    k = [1] + [2] * (n - 3) + [1, 1]
    d0 = _string_len(b, f0) - _string_len(b, e0)
    return d0 + sum(c * w.pair(a) for a, c in enumerate(k, 1))


def _string_len(x, op) -> int:
    k = 0
    while (x := op(x)) is not None:
        k += 1
    return k
