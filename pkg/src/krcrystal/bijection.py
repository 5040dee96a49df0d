"""The filling map to rectangular tableaux and the box-removal bijection Phi."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .base import Partition, classical_decomposition, conjugate, partition
from .rigged import RiggedConfiguration, TensorSpec, vacancy_number
from .tableaux import KRTableau, Letter, TensorElement, Tableau, lower_back, to_highest

# ---------------------------------------------------------------------------
# Filling map


@dataclass(frozen=True)
class FillingProfile:
    """Column counts k_h (h = r, r-2, ..., including k_0) and the first odd height c."""

    r: int
    s: int
    k: dict[int, int]
    c: int

    @classmethod
    def of(cls, lam: Iterable[int], r: int, s: int) -> FillingProfile:
        cols = conjugate(partition(lam))
        k = {h: 0 for h in range(r, -1, -2)}
        for h in cols:
            if h not in k:
                raise ValueError(f"column height {h} has the wrong parity for r={r}")
            k[h] += 1
        if r % 2 == 0:
            k[0] += s - len(cols)
        elif s != len(cols):
            raise ValueError("odd r leaves no room for empty columns")
        c = next((h for h in range(r - 2, -1, -2) if k[h] % 2), -1)
        return cls(r, s, k, c)


def fill_highest(lam: Iterable[int], r: int, s: int, n: int) -> KRTableau:
    """The rectangular tableau attached to the highest weight element of weight lam."""
    lam = partition(lam)
    if r > n - 2:
        raise ValueError("the filling map is defined for 1 <= r <= n-2")
    if lam not in classical_decomposition(r, s, n):
        raise ValueError(f"{lam} does not occur in B^{{{r},{s}}}")
    prof = FillingProfile.of(lam, r, s)
    k, c = prof.k, prof.c
    cols: list[tuple[Letter, ...]] = [tuple(range(1, r + 1))] * k[r]
    for h in range(r - 2, -1, -2):
        if h < c:
            break
        for _ in range(k[h] // 2):
            head = tuple(range(1, h + 1))
            cols.append(head + tuple(-a for a in range(r, h, -1)))
            cols.append(head + tuple(range(h + 1, r + 1)))
    x = c + 1
    for h in range(c - 2, -1, -2):
        for _ in range(k[h]):
            col = tuple(range(1, h + 1)) + tuple(range(r - (x - h - 2), r + 1)) + tuple(-a for a in range(r, x - 1, -1))
            cols.append(col)
            x = col[h]
    if c > -1:
        if (r + x - 1) % 2:
            raise AssertionError("final column does not split evenly")
        m = (r + x - 1) // 2
        cols.append(tuple(range(1, m + 1)) + tuple(-a for a in range(m, x - 1, -1)))
    if len(cols) != s or any(len(col) != r for col in cols):
        raise AssertionError("filling produced the wrong rectangle")
    return KRTableau(tuple(cols), n)


def fill(b: Tableau, r: int, s: int) -> KRTableau:
    """Raise b to u_lambda, fill, and replay the lowering string on the rectangle."""
    n = b.n
    seq, top = to_highest(b, range(1, n + 1))
    out = lower_back(seq, fill_highest(top.shape, r, s, n))
    if out is None:
        raise AssertionError("lowering string undefined on the filled tableau")
    return out


# ---------------------------------------------------------------------------
# delta and Phi


@dataclass(frozen=True)
class DeltaTrace:
    """Selected string lengths: forward sweep ``ell`` and backward sweep ``ellbar``.

    A value of None marks the node where a search failed.
    """

    a: int
    l: int
    ell: dict[int, int | None] = field(default_factory=dict)
    ellbar: dict[int, int | None] = field(default_factory=dict)
    letter: Letter = 0

    def selected(self) -> dict[tuple[str, int], int]:
        """Rows actually chosen; the merged value at node n-1 of the backward sweep is left out."""
        top = max(self.ell, default=0)
        out = {("f", a): v for a, v in self.ell.items() if v is not None}
        out.update({("b", a): v for a, v in self.ellbar.items() if v is not None and a < top - 1})
        return out


def _replace_leftmost(spec: TensorSpec, a: int, l: int) -> TensorSpec:
    if not spec.factors or spec.factors[0] != (a, l):
        raise ValueError(f"leftmost factor is not B^{{{a},{l}}}")
    new = [(a - 1, 1), (a, l - 1)]
    return TensorSpec(tuple(f for f in new if f[0] > 0 and f[1] > 0) + spec.factors[1:])


def delta(
    rc: RiggedConfiguration, choose: Callable[[list[int]], int] | None = None
) -> tuple[RiggedConfiguration, Letter, DeltaTrace]:
    """Remove one box path from rc, emitting one letter; the leftmost factor is consumed.

    choose picks among equally short singular strings (given their indices); the default
    takes the first. The result does not depend on it.
    """
    n = rc.n
    a, l = rc.spec.factors[0]
    if not 1 <= a <= n - 2:
        raise ValueError(f"leftmost factor B^{{{a},{l}}} is a spin factor")
    strings = [list(rc.strings(b)) for b in range(1, n + 1)]
    taken: list[set[int]] = [set() for _ in range(n)]

    def pick(node: int, bound: int) -> int | None:
        cands = [
            idx
            for idx, (length, x) in enumerate(strings[node - 1])
            if idx not in taken[node - 1] and length >= bound and x == rc.vacancy(node, length)
        ]
        if not cands:
            return None
        shortest = min(strings[node - 1][idx][0] for idx in cands)
        ties = [idx for idx in cands if strings[node - 1][idx][0] == shortest]
        best = ties[0] if choose is None else choose(ties)
        taken[node - 1].add(best)
        return best

    ell: dict[int, int | None] = {}
    ellbar: dict[int, int | None] = {}
    letter: Letter | None = None
    bound = l
    for i in range(a, n - 1):
        idx = pick(i, bound)
        if idx is None:
            ell[i] = None
            letter = i
            break
        bound = ell[i] = strings[i - 1][idx][0]
    if letter is None:
        i1, i2 = pick(n - 1, bound), pick(n, bound)
        ell[n - 1] = None if i1 is None else strings[n - 2][i1][0]
        ell[n] = None if i2 is None else strings[n - 1][i2][0]
        if i1 is None and i2 is None:
            letter = n - 1
        elif i2 is None:
            letter = n
        elif i1 is None:
            letter = -n
        else:
            bound = ellbar[n - 1] = max(ell[n - 1], ell[n])
            for i in range(n - 2, 0, -1):
                idx = pick(i, bound)
                if idx is None:
                    ellbar[i] = None
                    letter = -(i + 1)
                    break
                bound = ellbar[i] = strings[i - 1][idx][0]
            else:
                letter = -1
    new_spec = _replace_leftmost(rc.spec, a, l)
    parts = []
    for node in range(n):
        parts.append([length - (idx in taken[node]) for idx, (length, _) in enumerate(strings[node])])
    clean = [tuple(p for p in node if p > 0) for node in parts]
    nu = []
    for node in range(1, n + 1):
        out = []
        for idx, (length, x) in enumerate(strings[node - 1]):
            if idx in taken[node - 1]:
                if length > 1:
                    out.append((length - 1, vacancy_number(n, new_spec, clean, node, length - 1)))
            else:
                out.append((length, x))
        nu.append(out)
    trace = DeltaTrace(a, l, ell, ellbar, letter)
    return rc.with_nu(nu, new_spec), letter, trace


def phi_with_traces(rc: RiggedConfiguration) -> tuple[TensorElement, list[list[DeltaTrace]]]:
    """Phi together with the traces of every column (one list of r traces per column)."""
    n = rc.n
    spec = rc.spec
    factors = []
    traces: list[list[DeltaTrace]] = []
    cur = rc
    for r, s in spec.factors:
        cols = []
        for _ in range(s):
            letters = []
            col_traces = []
            for _ in range(r):
                cur, k, t = delta(cur)
                letters.append(k)
                col_traces.append(t)
            cols.append(tuple(reversed(letters)))
            traces.append(col_traces)
        factors.append(KRTableau(tuple(cols), n))
    if any(cur.nu) or cur.spec.factors:
        raise AssertionError("boxes left over after consuming every factor")
    return TensorElement(tuple(factors), n), traces


def phi(rc: RiggedConfiguration) -> TensorElement:
    return phi_with_traces(rc)[0]


# ---------------------------------------------------------------------------
# Closed-form predictions of the traces on highest weight configurations


@dataclass(frozen=True)
class ColumnPrediction:
    """Expected selections for the r delta calls of one column (None: no prediction)."""

    rule: str
    selections: tuple[dict[tuple[str, int], int] | None, ...]
    letters: tuple[Letter | None, ...]
    next_shape: Partition | None
    columns_used: int


def _step1_selection(i: int, r: int, h: int, s: int, n: int) -> dict[tuple[str, int], int]:
    out: dict[tuple[str, int], int] = {}
    if i % 2:
        for a in range(r - i + 1, r):
            out[("f", a)] = s - 1
        for a in range(r, n + 1):
            out[("f", a)] = s
        for a in range(n - 2, h + i - 1, -1):
            out[("b", a)] = s
    else:
        for a in range(r - i + 1, n + 1):
            out[("f", a)] = s - 1
        for a in range(n - 2, r - 1, -1):
            out[("b", a)] = s - 1
        for a in range(r - 1, h + i - 1, -1):
            out[("b", a)] = s
    return out


def predict_column(lam: Iterable[int], r: int, s: int, n: int) -> ColumnPrediction:
    """Predicted traces for the first column of Phi on the highest weight RC of weight lam."""
    prof = FillingProfile.of(lam, r, s)
    k, c = prof.k, prof.c
    present = [h for h in range(r, -1, -2) if k[h] > 0]
    h = present[0]
    lam = partition(lam)
    cols = list(conjugate(lam)) + [0] * k.get(0, 0)
    if h == r:
        sel = tuple({} for _ in range(r))
        letters = tuple(range(r, 0, -1))
        rest = list(cols)
        rest.remove(r)
        return ColumnPrediction("step0", sel, letters, conjugate(rest), 1)
    if k[h] >= 2 and h >= c:
        sel = []
        letters = []
        for i in range(1, r + 1):
            if i <= r - h:
                sel.append(_step1_selection(i, r, h, s, n))
                letters.append(-(h + i))
            else:
                sel.append({})
                letters.append(r - i + 1)
        rest = list(cols)
        rest.remove(h)
        rest.remove(h)
        return ColumnPrediction("step1", tuple(sel), tuple(letters), conjugate(rest), 2)
    if len(present) >= 2 and k[h] == 1 and h == c:
        h2 = present[1]
        sel = []
        letters = []
        for i in range(1, r + 1):
            if i <= r - h:
                sel.append(_step1_selection(i, r, h, s, n))
                letters.append(-(h + i))
            elif i <= r - h2:
                sel.append({("f", a): s - 1 for a in range(r - i + 1, 2 * r - h - i + 1)})
                letters.append(2 * r - h - i + 1)
            else:
                sel.append({})
                letters.append(r - i + 1)
        rest = list(cols)
        rest.remove(h)
        rest.remove(h2)
        rest.append(h2 + r - h)
        return ColumnPrediction("step2", tuple(sel), tuple(letters), conjugate(rest), 1)
    return ColumnPrediction("step3", (None,) * r, (None,) * r, None, 1)
