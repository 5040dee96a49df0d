"""Rigged configurations of type D_n with their classical crystal structure."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from .base import Partition, Weight, cartan_pairing, classical_decomposition, complement_shapes, partition
from .tableaux import CrystalGraph, generate_closure

String = tuple[int, int]  # (length, rigging)


@dataclass(frozen=True)
class TensorSpec:
    """Ordered tensor factors B^{r_1,s_1} (x) B^{r_2,s_2} (x) ..."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple((int(r), int(s)) for r, s in self.factors))
        for r, s in self.factors:
            if r < 1 or s < 1:
                raise ValueError(f"bad factor B^{{{r},{s}}}")

    @classmethod
    def parse(cls, text: str) -> TensorSpec:
        """'r1,s1;r2,s2;...'"""
        out = []
        for chunk in text.split(";"):
            if chunk.strip():
                r, s = chunk.split(",")
                out.append((int(r), int(s)))
        return cls(tuple(out))

    @classmethod
    def single(cls, r: int, s: int) -> TensorSpec:
        return cls(((r, s),))

    def L(self, a: int, i: int) -> int:
        return sum(1 for f in self.factors if f == (a, i))

    def multiplicities(self) -> Counter:
        return Counter(self.factors)

    def top_weight(self, n: int) -> Weight:
        w = Weight.zero(n)
        for r, s in self.factors:
            w = w + Weight.fundamental(r, n, s)
        return w

    def __str__(self) -> str:
        return " (x) ".join(f"B^{r},{s}" for r, s in self.factors)


def _canon(strings: Iterable[String]) -> tuple[String, ...]:
    out = [(int(l), int(x)) for l, x in strings]
    if any(l <= 0 for l, _ in out):
        raise ValueError("string lengths must be positive")
    return tuple(sorted(out, key=lambda t: (-t[0], -t[1])))


class Validity(enum.Enum):
    INVALID = "invalid"
    UNRESTRICTED = "unrestricted"
    ADMISSIBLE = "admissible"


@dataclass(frozen=True)
class RiggedConfiguration:
    """Rigged partitions nu[a-1] for nodes a = 1..n, each a sorted tuple of strings."""

    n: int
    spec: TensorSpec
    nu: tuple[tuple[String, ...], ...]

    def __post_init__(self) -> None:
        if len(self.nu) != self.n:
            raise ValueError(f"need {self.n} rigged partitions")
        object.__setattr__(self, "nu", tuple(_canon(p) for p in self.nu))

    @classmethod
    def empty(cls, n: int, spec: TensorSpec) -> RiggedConfiguration:
        return cls(n, spec, ((),) * n)

    @classmethod
    def from_partitions(
        cls,
        n: int,
        spec: TensorSpec,
        parts: Sequence[Iterable[int]],
        riggings: Sequence[Iterable[int]] | None = None,
    ) -> RiggedConfiguration:
        nu = []
        for a, p in enumerate(parts):
            p = list(p)
            rig = list(riggings[a]) if riggings is not None else [0] * len(p)
            if len(rig) != len(p):
                raise ValueError(f"node {a + 1}: {len(p)} parts but {len(rig)} riggings")
            nu.append(tuple(zip(p, rig)))
        return cls(n, spec, tuple(nu))

    def partition(self, a: int) -> Partition:
        return tuple(l for l, _ in self.nu[a - 1])

    def riggings(self, a: int) -> tuple[int, ...]:
        return tuple(x for _, x in self.nu[a - 1])

    def strings(self, a: int) -> tuple[String, ...]:
        return self.nu[a - 1]

    @cached_property
    def _q(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.partition(a) for a in range(1, self.n + 1))

    @cached_property
    def _vac(self) -> dict[tuple[int, int], int]:
        return {}

    def vacancy(self, a: int, i: int) -> int:
        key = (a, i)
        v = self._vac.get(key)
        if v is None:
            v = self._vac[key] = vacancy_number(self.n, self.spec, self._q, a, i)
        return v

    def colabels(self, a: int) -> tuple[String, ...]:
        return tuple((l, self.vacancy(a, l) - x) for l, x in self.nu[a - 1])

    def with_nu(self, nu: Sequence[Iterable[String]], spec: TensorSpec | None = None) -> RiggedConfiguration:
        return RiggedConfiguration(self.n, spec or self.spec, tuple(tuple(p) for p in nu))

    def __str__(self) -> str:
        parts = []
        for a in range(1, self.n + 1):
            s = ",".join(f"{l}[{x}]" for l, x in self.nu[a - 1])
            parts.append(f"{a}:({s})")
        return " ".join(parts)


def vacancy_number(n: int, spec: TensorSpec, parts: Sequence[Sequence[int]], a: int, i: int) -> int:
    """p_i^{(a)} = sum_j min(i,j) L_j^{(a)} - sum_b (alpha_a|alpha_b) sum_k min(i,k) m_k^{(b)}."""
    p = sum(min(i, s) for r, s in spec.factors if r == a)
    for b, c in _cartan_row(a, n):
        p -= c * sum(min(i, k) for k in parts[b - 1])
    return p


@lru_cache(maxsize=None)
def _cartan_row(a: int, n: int) -> tuple[tuple[int, int], ...]:
    return tuple((b, cartan_pairing(a, b, n)) for b in range(1, n + 1) if cartan_pairing(a, b, n))


def vacancy(rc: RiggedConfiguration, a: int, i: int) -> int:
    return rc.vacancy(a, i)


def is_valid(rc: RiggedConfiguration, weight: Weight | None = None) -> Validity:
    """Classify by rigging bounds; with a weight, also check the configuration equation."""
    if weight is not None and rc_weight(rc) != weight:
        return Validity.INVALID
    admissible = True
    for a in range(1, rc.n + 1):
        for l, x in rc.strings(a):
            p = rc.vacancy(a, l)
            if x > p:
                return Validity.INVALID
            if x < 0:
                admissible = False
    return Validity.ADMISSIBLE if admissible else Validity.UNRESTRICTED


def is_highest_configuration(rc: RiggedConfiguration) -> bool:
    """Admissible riggings and nonnegative vacancy numbers at every length."""
    top = max([l for p in rc.nu for l, _ in p] + [s for _, s in rc.spec.factors] + [0]) + 1
    for a in range(1, rc.n + 1):
        if any(rc.vacancy(a, i) < 0 for i in range(1, top + 1)):
            return False
    return is_valid(rc) is Validity.ADMISSIBLE


def rc_weight(rc: RiggedConfiguration) -> Weight:
    w = rc.spec.top_weight(rc.n)
    for a in range(1, rc.n + 1):
        w = w - Weight.simple_root(a, rc.n) * sum(rc.partition(a))
    return w


def cocharge(rc: RiggedConfiguration) -> int:
    """cc = 1/2 sum (alpha_a|alpha_b) min(j,k) m_j^{(a)} m_k^{(b)} + sum of riggings."""
    n = rc.n
    total = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            c = cartan_pairing(a, b, n)
            if c:
                total += c * sum(min(j, k) for j in rc.partition(a) for k in rc.partition(b))
    if total % 2:
        raise AssertionError("quadratic form should be even")
    return total // 2 + sum(x for p in rc.nu for _, x in p)


def cocharge_vacancy_form(rc: RiggedConfiguration) -> int:
    """The same statistic written through vacancy numbers."""
    total = 0
    for a in range(1, rc.n + 1):
        for l, _ in rc.strings(a):
            total += sum(min(s, l) for r, s in rc.spec.factors if r == a) - rc.vacancy(a, l)
    if total % 2:
        raise AssertionError("quadratic form should be even")
    return total // 2 + sum(x for p in rc.nu for _, x in p)


def _rebuild(rc: RiggedConfiguration, a: int, strings: list[String]) -> RiggedConfiguration | None:
    """Install new strings at node a; strings at neighbouring nodes keep their colabels."""
    parts = [rc.partition(b) for b in range(1, rc.n + 1)]
    parts[a - 1] = tuple(l for l, _ in strings)
    out = []
    for b in range(1, rc.n + 1):
        if b == a:
            out.append(strings)
        elif cartan_pairing(a, b, rc.n) == 0:
            out.append(list(rc.strings(b)))
        else:
            out.append([
                (l, vacancy_number(rc.n, rc.spec, parts, b, l) - (rc.vacancy(b, l) - x))
                for l, x in rc.strings(b)
            ])
    new = rc.with_nu(out)
    return new if is_valid(new) is not Validity.INVALID else None


def rc_f(a: int, rc: RiggedConfiguration) -> RiggedConfiguration | None:
    if not 1 <= a <= rc.n:
        raise ValueError(f"node {a} outside 1..{rc.n}")
    strings = list(rc.strings(a))
    riggings = [x for _, x in strings]
    low = min(riggings, default=1)
    new: list[tuple[int, int]] = []
    if low > 0:
        target = None
    else:
        target = max((k for k, (l, x) in enumerate(strings) if x == low), key=lambda k: strings[k][0])
    new_parts = [l for l, _ in strings]
    if target is None:
        new_parts.append(1)
    else:
        new_parts[target] += 1
    parts = [list(rc.partition(b)) for b in range(1, rc.n + 1)]
    parts[a - 1] = new_parts
    for k, (l, x) in enumerate(strings):
        if k == target:
            new.append((l + 1, x - 1))
        else:
            co = rc.vacancy(a, l) - x
            new.append((l, vacancy_number(rc.n, rc.spec, parts, a, l) - co))
    if target is None:
        new.append((1, -1))
    return _rebuild(rc, a, new)


def rc_e(a: int, rc: RiggedConfiguration) -> RiggedConfiguration | None:
    if not 1 <= a <= rc.n:
        raise ValueError(f"node {a} outside 1..{rc.n}")
    strings = list(rc.strings(a))
    low = min((x for _, x in strings), default=0)
    if low >= 0:
        return None
    target = min((k for k, (l, x) in enumerate(strings) if x == low), key=lambda k: strings[k][0])
    parts = [list(rc.partition(b)) for b in range(1, rc.n + 1)]
    new_parts = [l for l, _ in strings]
    new_parts[target] -= 1
    parts[a - 1] = [l for l in new_parts if l]
    new: list[tuple[int, int]] = []
    for k, (l, x) in enumerate(strings):
        if k == target:
            if l > 1:
                new.append((l - 1, x + 1))
        else:
            co = rc.vacancy(a, l) - x
            new.append((l, vacancy_number(rc.n, rc.spec, parts, a, l) - co))
    return _rebuild(rc, a, new)


def rc_phi(a: int, rc: RiggedConfiguration) -> int:
    k, x = 0, rc
    while (x := rc_f(a, x)) is not None:
        k += 1
    return k


def rc_epsilon(a: int, rc: RiggedConfiguration) -> int:
    k, x = 0, rc
    while (x := rc_e(a, x)) is not None:
        k += 1
    return k


def kleber_rc(r: int, s: int, lam: Iterable[int], n: int) -> RiggedConfiguration:
    """The highest weight configuration of weight lam inside RC(B^{r,s}); all riggings zero."""
    spec = TensorSpec.single(r, s)
    if r >= n - 1:
        return RiggedConfiguration.empty(n, spec)
    lam = partition(lam)
    if lam not in classical_decomposition(r, s, n):
        raise ValueError(f"{lam} does not occur in B^{{{r},{s}}}")
    shapes = complement_shapes(lam, r, s)
    parts = []
    for a in range(1, n + 1):
        if a < r:
            parts.append(shapes.truncated(r - a))
        elif a <= n - 2:
            parts.append(shapes.bar)
        else:
            parts.append(shapes.prime)
    return RiggedConfiguration.from_partitions(n, spec, parts)


def root_coordinates(w: Weight) -> tuple[Fraction, ...]:
    """Coefficients of w in the simple root basis."""
    e = w.to_epsilon()
    n = w.n
    head = [sum(e[:k]) for k in range(1, n - 1)]
    return tuple(head) + ((sum(e[: n - 1]) - e[n - 1]) / 2, sum(e) / 2)


def _partitions(total: int, max_part: int) -> Iterator[Partition]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def highest_weight_rcs(spec: TensorSpec, n: int) -> list[RiggedConfiguration]:
    """All admissible highest weight RCs, by bounded search over configurations."""
    top = spec.top_weight(n)
    # a dominant weight below the top one leaves at most this many boxes per node
    bounds = [int(c) for c in root_coordinates(top)]
    width = sum(s for _, s in spec.factors)
    found: list[RiggedConfiguration] = []
    for sizes in product(*(range(b + 1) for b in bounds)):
        lam = top
        for a, k in enumerate(sizes, 1):
            lam = lam - Weight.simple_root(a, n) * k
        if not lam.is_dominant():
            continue
        for parts in product(*(list(_partitions(k, width)) for k in sizes)):
            base = RiggedConfiguration.from_partitions(n, spec, parts)
            if not _vacancies_nonnegative(base):
                continue
            found.extend(_riggings(base))
    return found


def _vacancies_nonnegative(rc: RiggedConfiguration) -> bool:
    top = max([l for p in rc.nu for l, _ in p] + [s for _, s in rc.spec.factors]) + 1
    return all(rc.vacancy(a, i) >= 0 for a in range(1, rc.n + 1) for i in range(1, top + 1))


def _riggings(base: RiggedConfiguration) -> Iterator[RiggedConfiguration]:
    choices = []
    for a in range(1, base.n + 1):
        mult = Counter(base.partition(a))
        per_node = []
        for l, m in sorted(mult.items(), reverse=True):
            p = base.vacancy(a, l)
            per_node.append([(l, combo) for combo in combinations_with_replacement(range(p + 1), m)])
        choices.append(list(product(*per_node)))
    for pick in product(*choices):
        nu = [[(l, x) for l, combo in node for x in combo] for node in pick]
        yield base.with_nu(nu)


def rc_ops(n: int) -> dict:
    return {a: (lambda x, a=a: rc_f(a, x)) for a in range(1, n + 1)}


def rc_closure(seeds: Iterable[RiggedConfiguration], n: int, max_vertices: int = 250_000) -> CrystalGraph:
    return generate_closure(list(seeds), rc_ops(n), max_vertices=max_vertices)


def rc_crystal(spec: TensorSpec, n: int, max_vertices: int = 250_000) -> CrystalGraph:
    """RC(B) as the classical closure of its highest weight elements."""
    if len(spec.factors) == 1:
        r, s = spec.factors[0]
        if r >= n - 1:
            seeds = [RiggedConfiguration.empty(n, spec)]
        else:
            seeds = [kleber_rc(r, s, lam, n) for lam in classical_decomposition(r, s, n)]
    else:
        seeds = highest_weight_rcs(spec, n)
    return rc_closure(seeds, n, max_vertices)
