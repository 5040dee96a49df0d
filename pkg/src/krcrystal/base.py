"""Partitions, weights and Cartan data for type D_n."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a weakly decreasing tuple without zeros."""
    out = []
    for p in parts:
        if int(p) != p or p < 0:
            raise ValueError(f"invalid part {p!r}")
        if p:
            out.append(int(p))
    return tuple(sorted(out, reverse=True))


def conjugate(p: Iterable[int]) -> Partition:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def size(p: Iterable[int]) -> int:
    return sum(p)


@dataclass(frozen=True)
class CartanD:
    """Finite type D_n root datum, nodes 1..n with the fork at n-2."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError("type D_n needs n >= 4")

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def pairing(self, a: int, b: int) -> int:
        return cartan_pairing(a, b, self.n)

    def neighbors(self, a: int) -> tuple[int, ...]:
        return tuple(b for b in self.nodes if b != a and self.pairing(a, b) == -1)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.pairing(a, b) for b in self.nodes) for a in self.nodes)


def cartan_pairing(a: int, b: int, n: int) -> int:
    """(alpha_a | alpha_b) for type D_n."""
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"node out of range for D_{n}: {a}, {b}")
    if a == b:
        return 2
    lo, hi = min(a, b), max(a, b)
    if (lo, hi) == (n - 1, n):
        return 0
    if hi - lo == 1 or (lo, hi) == (n - 2, n):
        return -1
    return 0


@dataclass(frozen=True)
class Weight:
    """Integral weight written in the fundamental weight basis."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n:
            raise ValueError("need one coefficient per node")

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls(n, (0,) * n)

    @classmethod
    def fundamental(cls, a: int, n: int, k: int = 1) -> Weight:
        c = [0] * n
        c[a - 1] = k
        return cls(n, tuple(c))

    @classmethod
    def simple_root(cls, a: int, n: int) -> Weight:
        return cls(n, tuple(cartan_pairing(b, a, n) for b in range(1, n + 1)))

    @classmethod
    def from_partition(cls, p: Iterable[int], n: int) -> Weight:
        c = [0] * n
        for h in conjugate(p):
            if h > n - 2:
                raise ValueError(f"column of height {h} is a spin column for D_{n}")
            c[h - 1] += 1
        return cls(n, tuple(c))

    @classmethod
    def from_epsilon(cls, eps: Iterable[Fraction | int], n: int) -> Weight:
        e = [Fraction(x) for x in eps]
        if len(e) != n:
            raise ValueError("need n epsilon coordinates")
        c = [e[i] - e[i + 1] for i in range(n - 1)] + [e[n - 2] + e[n - 1]]
        if any(x.denominator != 1 for x in c):
            raise ValueError("not an integral weight")
        return cls(n, tuple(int(x) for x in c))

    def to_epsilon(self) -> tuple[Fraction, ...]:
        n, c = self.n, self.coeffs
        half = Fraction(c[n - 2] + c[n - 1], 2)
        e = [Fraction(0)] * n
        e[n - 1] = Fraction(c[n - 1] - c[n - 2], 2)
        run = half
        for i in range(n - 2, -1, -1):
            e[i] = run
            if i:
                run += c[i - 1]
        return tuple(e)

    def to_partition(self) -> Partition:
        if self.coeffs[-2] or self.coeffs[-1]:
            raise ValueError("spin weights have no partition form")
        if any(x < 0 for x in self.coeffs):
            raise ValueError("weight is not dominant")
        cols = []
        for a in range(self.n - 2, 0, -1):
            cols += [a] * self.coeffs[a - 1]
        return conjugate(cols)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    def pair(self, a: int) -> int:
        """<weight, alpha_a^vee>."""
        return self.coeffs[a - 1]

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.n, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.n, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, k: int) -> Weight:
        return Weight(self.n, tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = [f"{c}w{a}" if c != 1 else f"w{a}" for a, c in enumerate(self.coeffs, 1) if c]
        return " + ".join(terms) or "0"


def classical_decomposition(r: int, s: int, n: int | None = None) -> list[Partition]:
    """All shapes reached from the r x s rectangle by deleting vertical dominoes."""
    if r < 1 or s < 0:
        raise ValueError("need r >= 1 and s >= 0")
    if n is not None and r >= n - 1:
        raise ValueError(f"r={r} is a spin node of D_{n}; the decomposition is the single weight s*w_{r}")
    start = (r,) * s
    seen = {start}
    queue = deque([start])
    while queue:
        cols = queue.popleft()
        for j, h in enumerate(cols):
            if h < 2 or (j + 1 < len(cols) and cols[j + 1] == h):
                continue
            nxt = cols[:j] + (h - 2,) + cols[j + 1:]
            nxt = tuple(sorted(nxt, reverse=True))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    shapes = {conjugate(c) for c in seen}
    return sorted(shapes, key=lambda p: (-size(p), p), reverse=False)


def complement(lam: Iterable[int], r: int, s: int) -> Partition:
    lam = partition(lam)
    if len(lam) > r or (lam and lam[0] > s):
        raise ValueError(f"{lam} does not fit in a {r} x {s} box")
    rows = list(lam) + [0] * (r - len(lam))
    return partition(s - x for x in rows)


def drop_rows(p: Iterable[int], b: int) -> Partition:
    """Remove the b longest rows."""
    return partition(p)[b:]


def odd_rows(p: Iterable[int]) -> Partition:
    """Keep rows 1, 3, 5, ..."""
    return partition(p)[::2]


class ComplementShapes(NamedTuple):
    bar: Partition
    prime: Partition

    def truncated(self, b: int) -> Partition:
        return drop_rows(self.bar, b)


def complement_shapes(lam: Iterable[int], r: int, s: int) -> ComplementShapes:
    bar = complement(lam, r, s)
    return ComplementShapes(bar, odd_rows(bar))
