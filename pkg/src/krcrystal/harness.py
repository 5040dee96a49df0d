"""Exhaustive verification suites.

Each suite runs over a list of instances and returns one VerificationReport
per instance; reports merge associatively, so instances can run in any order
or in separate processes.  Suites of kind "conjecture" never gate.
"""

from __future__ import annotations

import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Any, Callable, Iterable, Sequence

from .affine import (
    _upper,
    affine_graph,
    coenergy_single,
    gamma_rc,
    gamma_rc_inv,
    iota,
    kr_crystal,
    rc_crystal_single,
    sigma,
    sigma_rc,
)
from .base import Weight, classical_decomposition
from .bijection import fill_highest, phi, phi_with_traces, predict_column
from .corpus import run_cases
from .pm_diagrams import enumerate_diagrams, frakS, gamma, gamma_inv
from .rigged import TensorSpec, cocharge, kleber_rc, rc_crystal, rc_e, rc_f, rc_weight
from .serialize import to_json
from .tableaux import ClosureBudgetExceeded, CrystalGraph, apply_e, apply_f, is_highest, to_highest, weight

THEOREM = "theorem"
CONJECTURE = "conjecture"
REPLICATION = "replication"


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    max_n: int = 6
    max_r: int = 4
    max_s: int = 4
    max_boxes: int = 10
    max_vertices: int = 250_000

    def check(self, n: int, factors: Sequence[tuple[int, int]]) -> None:
        boxes = sum(r * s for r, s in factors)
        if (
            n > self.max_n
            or any(r > self.max_r or s > self.max_s for r, s in factors)
            or boxes > self.max_boxes
        ):
            raise CapExceeded(f"n={n}, factors={list(factors)} exceeds {self}")


DEFAULT_CAPS = Caps()
NO_CAPS = Caps(10**6, 10**6, 10**6, 10**6, 10**7)


@dataclass
class VerificationReport:
    suite: str
    kind: str
    instances: list[dict[str, Any]] = field(default_factory=list)
    checked: int = 0
    passed: int = 0
    failed: int = 0
    counterexample: Any = None
    seconds: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def gating(self) -> bool:
        return self.kind != CONJECTURE

    def record(self, ok: bool, witness: Callable[[], Any]) -> bool:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = witness()
        return ok

    def merge(self, other: VerificationReport) -> VerificationReport:
        if (self.suite, self.kind) != (other.suite, other.kind):
            raise ValueError("cannot merge reports of different suites")
        return VerificationReport(
            self.suite,
            self.kind,
            self.instances + other.instances,
            self.checked + other.checked,
            self.passed + other.passed,
            self.failed + other.failed,
            self.counterexample if self.counterexample is not None else other.counterexample,
            self.seconds + other.seconds,
            {**self.details, **other.details},
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "kind": self.kind,
            "instances": self.instances,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }

    def summary(self) -> str:
        state = "PASS" if self.ok else "FAIL"
        return f"{state} {self.suite} [{self.kind}] {self.passed}/{self.checked} in {self.seconds:.1f}s"


def merge_reports(reports: Iterable[VerificationReport]) -> VerificationReport:
    return reduce(VerificationReport.merge, reports)


def _label(n: int, factors: Sequence[tuple[int, int]]) -> str:
    return f"n={n} " + " x ".join(f"B^{r},{s}" for r, s in factors)


def _timed(suite: str, kind: str, params: dict[str, Any]):
    """Start a report; the caller fills it and stamps the elapsed time."""
    return VerificationReport(suite, kind, [params]), time.perf_counter()


# ---------------------------------------------------------------------------
# Shared model construction, cached per instance within one process.


@lru_cache(maxsize=16)
def _classical(n: int, r: int, s: int, max_vertices: int) -> tuple[CrystalGraph, CrystalGraph]:
    return kr_crystal(n, r, s, max_vertices), rc_crystal_single(n, r, s, max_vertices)


@lru_cache(maxsize=16)
def _affine(n: int, r: int, s: int, max_vertices: int) -> tuple[CrystalGraph, CrystalGraph]:
    T, R = _classical(n, r, s, max_vertices)
    return affine_graph(T, n), affine_graph(R, n)


@lru_cache(maxsize=16)
def _iota_map(n: int, r: int, s: int, max_vertices: int) -> dict:
    T, _ = _classical(n, r, s, max_vertices)
    return {b: iota(b) for b in T.vertices}


def _models(n: int, r: int, s: int, caps: Caps, affine: bool = False):
    caps.check(n, [(r, s)])
    try:
        return (_affine if affine else _classical)(n, r, s, caps.max_vertices)
    except ClosureBudgetExceeded as exc:
        raise CapExceeded(str(exc)) from exc


def _out_edges(graph: CrystalGraph) -> dict:
    out: dict = defaultdict(set)
    for u, i, v in graph.edges:
        out[u].add((i, v))
    return out


# ---------------------------------------------------------------------------
# Single KR crystals


def verify_affine_isomorphism(n: int, r: int, s: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """Both affine graphs agree under iota, 0-arrows included."""
    rep, t0 = _timed("iso", THEOREM, {"n": n, "r": r, "s": s})
    T, R = _models(n, r, s, caps, affine=True)
    m = _iota_map(n, r, s, caps.max_vertices)
    image = set(m.values())
    rep.record(
        len(image) == len(T.vertices) and image == set(R.vertices),
        lambda: {"reason": "iota is not a bijection", "tableau_vertices": len(T.vertices), "rc_vertices": len(R.vertices)},
    )
    tout, rout = _out_edges(T), _out_edges(R)
    for b in T.vertices:
        mapped = {(i, m[w]) for i, w in tout[b]}
        rep.record(
            mapped == rout[m[b]],
            lambda b=b: {
                "b": to_json(b),
                "iota_b": to_json(m[b]),
                "tableau_arrows": sorted(i for i, _ in tout[b]),
                "rc_arrows": sorted(i for i, _ in rout[m[b]]),
                "replay": f"krcrystal sigma --model kn --n {n} --r {r} --s {s} --in b.json",
            },
        )
    rep.details[_label(n, [(r, s)])] = {"vertices": len(T.vertices), "edges": len(T.edges)}
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_statistics(n: int, r: int, s: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """Domino count of b equals cocharge of iota(b), reported per classical component."""
    rep, t0 = _timed("stats", THEOREM, {"n": n, "r": r, "s": s})
    T, _ = _models(n, r, s, caps)
    m = _iota_map(n, r, s, caps.max_vertices)
    per_component: dict[str, set[int]] = defaultdict(set)
    for b in T.vertices:
        d = coenergy_single(b)
        _, top = to_highest(b, range(1, n + 1))
        per_component[str(list(top.tableau.shape))].add(d)
        cc = cocharge(m[b])
        rep.record(d == cc, lambda b=b, d=d, cc=cc: {"b": to_json(b), "iota_b": to_json(m[b]), "coenergy": d, "cocharge": cc})
    rep.details[_label(n, [(r, s)])] = {k: sorted(v) for k, v in per_component.items()}
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_roundtrips(n: int, r: int, s: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """Involutions and inverse pairs, exhaustively on one instance."""
    rep, t0 = _timed("roundtrips", THEOREM, {"n": n, "r": r, "s": s})
    T, R = _models(n, r, s, caps)
    counts: dict[str, int] = defaultdict(int)

    def check(name: str, ok: bool, witness: Callable[[], Any]) -> None:
        counts[name] += 1
        rep.record(ok, lambda: {"check": name, **witness()})

    upper = list(_upper(n))
    if r <= n - 2:
        for P in enumerate_diagrams(r, s):
            check("frakS^2", frakS(frakS(P)) == P, lambda P=P: {"diagram": to_json(P)})
            # the unrestricted swap may raise r, so compare column counts only
            check(
                "frakS^2 unrestricted",
                frakS(frakS(P, False), False).counts == P.counts,
                lambda P=P: {"diagram": to_json(P)},
            )
            t = gamma(P, n)
            check("gamma_inv.gamma", gamma_inv(t, r, s) == P, lambda P=P: {"diagram": to_json(P)})
            check("gamma_rc_inv.gamma_rc", gamma_rc_inv(gamma_rc(P, n, s)) == P, lambda P=P: {"diagram": to_json(P)})
        for b in T.vertices:
            if is_highest(b, upper):
                t = b.tableau
                check("gamma.gamma_inv", gamma(gamma_inv(t, r, s), n) == t, lambda t=t: {"tableau": to_json(t)})
        for x in R.vertices:
            if is_highest(x, upper, e=rc_e):
                check("gamma_rc.gamma_rc_inv", gamma_rc(gamma_rc_inv(x), n, s) == x, lambda x=x: {"rc": to_json(x)})
    for b in T.vertices:
        check("sigma^2", sigma(sigma(b)) == b, lambda b=b: {"b": to_json(b)})
    for x in R.vertices:
        check("sigma_rc^2", sigma_rc(sigma_rc(x)) == x, lambda x=x: {"rc": to_json(x)})
        for a in range(1, n + 1):
            y = rc_f(a, x)
            if y is not None:
                check("e.f rc", rc_e(a, y) == x, lambda x=x, a=a: {"rc": to_json(x), "a": a})
    for b in T.vertices:
        for a in range(1, n + 1):
            y = apply_f(a, b)
            if y is not None:
                check("e.f tableau", apply_e(a, y) == b, lambda b=b, a=a: {"b": to_json(b), "a": a})
    rep.details[_label(n, [(r, s)])] = dict(counts)
    rep.seconds = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# Phi on highest weight elements


def verify_phi_highest(n: int, r: int, s: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    rep, t0 = _timed("phi-highest", THEOREM, {"n": n, "r": r, "s": s})
    if r > n - 2:
        raise ValueError("Phi needs a non-spin factor")
    caps.check(n, [(r, s)])
    for lam in classical_decomposition(r, s, n):
        got = phi(kleber_rc(r, s, lam, n)).factors[0]
        want = fill_highest(lam, r, s, n)
        rep.record(got == want, lambda lam=lam, got=got, want=want: {
            "lambda": list(lam), "phi": to_json(got), "fill": to_json(want),
            "replay": f"krcrystal phi --spec {r},{s} --rc rc.json",
        })
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_trace_predictions(n: int, r: int, s: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """Selected string lengths of each delta call against the closed forms, column by column."""
    rep, t0 = _timed("traces", THEOREM, {"n": n, "r": r, "s": s})
    if r > n - 2:
        raise ValueError("Phi needs a non-spin factor")
    caps.check(n, [(r, s)])
    rules: dict[str, int] = defaultdict(int)
    for lam in classical_decomposition(r, s, n):
        _, traces = phi_with_traces(kleber_rc(r, s, lam, n))
        shape, left, col = lam, s, 0
        while col < s:
            p = predict_column(shape, r, left, n)
            rules[p.rule] += 1
            for i, k in enumerate(p.letters, 1):
                if k is not None and k < 0:
                    rules[f"{p.rule} {'odd' if i % 2 else 'even'} i"] += 1
            if p.rule == "step3":
                break
            for j in range(p.columns_used):
                for i, t in enumerate(traces[col + j]):
                    want = p.selections[i] if j == 0 else {}
                    ok = t.selected() == want and (j > 0 or t.letter == p.letters[i])
                    rep.record(ok, lambda lam=lam, c=col + j, i=i, t=t, want=want: {
                        "lambda": list(lam), "column": c, "call": i + 1, "rule": p.rule,
                        "selected": {f"{k}{a}": v for (k, a), v in t.selected().items()},
                        "predicted": {f"{k}{a}": v for (k, a), v in want.items()},
                        "letter": t.letter,
                    })
            col += p.columns_used
            left -= p.columns_used
            shape = p.next_shape
    rep.details[_label(n, [(r, s)])] = dict(rules)
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_phi_statistics(n: int, r: int, s: int, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """cc(x) equals the domino count of Phi(x), read off the KR tableau itself, over all of RC(B^{r,s})."""
    rep, t0 = _timed("phi-stats", CONJECTURE, {"n": n, "r": r, "s": s})
    if r > n - 2:
        raise ValueError("Phi needs a non-spin factor")
    _, R = _models(n, r, s, caps)
    for x in R.vertices:
        b = phi(x).factors[0]
        _, top = to_highest(b, range(1, n + 1))
        d = (r * s - sum(weight(top).to_partition())) // 2
        cc = cocharge(x)
        rep.record(d == cc, lambda x=x, b=b, d=d, cc=cc: {"rc": to_json(x), "phi": to_json(b), "coenergy": d, "cocharge": cc})
    rep.seconds = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# Tensor products (conjectural statements)


def _rc_graph(n: int, spec: TensorSpec, caps: Caps) -> CrystalGraph:
    caps.check(n, spec.factors)
    if any(r > n - 2 for r, _ in spec.factors):
        raise ValueError("Phi needs non-spin factors")
    try:
        return rc_crystal(spec, n, caps.max_vertices)
    except ClosureBudgetExceeded as exc:
        raise CapExceeded(str(exc)) from exc


def verify_intertwine(n: int, spec: TensorSpec, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """Phi is injective, keeps weights and commutes with every classical e_a and f_a, undefinedness included.

    Both sets are also counted weight by weight, the tableau side as the product of single factors.
    """
    rep, t0 = _timed("intertwine", CONJECTURE, {"n": n, "spec": [list(f) for f in spec.factors]})
    G = _rc_graph(n, spec, caps)
    m = {v: phi(v) for v in G.vertices}
    rep.record(len(set(m.values())) == len(m), lambda: {"reason": "Phi is not injective"})
    for v, b in m.items():
        rep.record(weight(b) == rc_weight(v), lambda v=v, b=b: {"rc": to_json(v), "phi": to_json(b), "reason": "weight changed"})
    counts = Counter({Weight(n, (0,) * n): 1})
    for r, s in spec.factors:
        single = Counter(weight(b) for b in kr_crystal(n, r, s, caps.max_vertices).vertices)
        product: Counter = Counter()
        for w, c in counts.items():
            for u, d in single.items():
                product[w + u] += c * d
        counts = product
    have = Counter(rc_weight(v) for v in G.vertices)
    rep.record(have == counts, lambda: {"reason": "weight multiplicities differ", "rc": len(G.vertices), "tableaux": sum(counts.values())})
    for v in G.vertices:
        for a in range(1, n + 1):
            for rc_op, t_op, name in ((rc_f, apply_f, "f"), (rc_e, apply_e, "e")):
                y = rc_op(a, v)
                want = None if y is None else m[y]
                got = t_op(a, m[v])
                rep.record(got == want, lambda v=v, a=a, name=name, got=got, want=want: {
                    "rc": to_json(v), "op": f"{name}_{a}", "op_then_phi": to_json(want), "phi_then_op": to_json(got),
                })
    rep.details[_label(n, spec.factors)] = {"vertices": len(G.vertices)}
    rep.seconds = time.perf_counter() - t0
    return rep


def verify_rmatrix(n: int, spec: TensorSpec, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    """The map Phi_B(rc) -> Phi_B'(rc), B' the reversed product, preserves weight and commutes with e_a, f_a."""
    rep, t0 = _timed("rmatrix", CONJECTURE, {"n": n, "spec": [list(f) for f in spec.factors]})
    G = _rc_graph(n, spec, caps)
    rev = TensorSpec(tuple(reversed(spec.factors)))
    rho = {phi(v): phi(v.with_nu(v.nu, rev)) for v in G.vertices}
    for b, c in rho.items():
        rep.record(weight(b) == weight(c), lambda b=b, c=c: {"b": to_json(b), "image": to_json(c), "reason": "weight changed"})
        for a in range(1, n + 1):
            for op, name in ((apply_f, "f"), (apply_e, "e")):
                y = op(a, b)
                want = None if y is None else rho.get(y, "outside the image")
                got = op(a, c)
                rep.record(got == want, lambda b=b, a=a, name=name, got=got, want=want: {
                    "b": to_json(b), "op": f"{name}_{a}", "op_then_map": to_json(want), "map_then_op": to_json(got),
                })
    rep.details[_label(n, spec.factors)] = {"vertices": len(G.vertices)}
    rep.seconds = time.perf_counter() - t0
    return rep


def run_corpus() -> VerificationReport:
    rep, t0 = _timed("corpus", REPLICATION, {})
    for res in run_cases():
        rep.record(res.passed, lambda res=res: {
            "case": res.ident, "anchor": res.anchor, "got": to_json(res.got), "expected": to_json(res.expected),
        })
        rep.details[res.ident] = res.passed
    rep.seconds = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# Instance lists and the suite runner

AFFINE_INSTANCES: list[tuple[int, int, int]] = [
    (4, 1, 1), (4, 1, 2), (4, 2, 1), (4, 2, 2), (4, 2, 3), (5, 2, 2), (5, 3, 2),
] + [(4, r, s) for r in (3, 4) for s in (1, 2, 3)]
PHI_INSTANCES = [t for t in AFFINE_INSTANCES if t[1] <= t[0] - 2] + [(5, 1, 3), (6, 2, 4), (6, 3, 3)]
TENSOR_INSTANCES: list[tuple[int, TensorSpec]] = [
    (4, TensorSpec(f))
    for f in [
        ((1, 1), (1, 1)), ((1, 2), (1, 1)), ((2, 1), (1, 1)), ((1, 1), (2, 1)), ((2, 1), (2, 1)),
        ((2, 2), (1, 1)), ((1, 3), (2, 1)), ((1, 2), (2, 2)),
    ]
]


def two_factor_specs(n: int, max_boxes: int) -> list[TensorSpec]:
    """Every ordered pair of non-spin factors with at most max_boxes boxes in total."""
    singles = [(r, s) for r in range(1, n - 1) for s in range(1, max_boxes + 1) if r * s < max_boxes]
    return [
        TensorSpec((a, b))
        for a in singles
        for b in singles
        if a[0] * a[1] + b[0] * b[1] <= max_boxes
    ]


def _call(job: tuple[Callable, tuple]) -> VerificationReport:
    fn, args = job
    return fn(*args)


SUITES: dict[str, tuple[Callable, Callable[[], list[tuple]]]] = {
    "iso": (verify_affine_isomorphism, lambda: AFFINE_INSTANCES),
    "stats": (verify_statistics, lambda: AFFINE_INSTANCES),
    "roundtrips": (verify_roundtrips, lambda: AFFINE_INSTANCES),
    "phi-highest": (verify_phi_highest, lambda: PHI_INSTANCES),
    "traces": (verify_trace_predictions, lambda: PHI_INSTANCES),
    "phi-stats": (verify_phi_statistics, lambda: [t for t in AFFINE_INSTANCES if t[1] <= t[0] - 2]),
    "intertwine": (verify_intertwine, lambda: TENSOR_INSTANCES),
    "rmatrix": (verify_rmatrix, lambda: TENSOR_INSTANCES),
}


def run_suite(
    name: str,
    caps: Caps = DEFAULT_CAPS,
    instances: Sequence[tuple] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Run one suite over its instances; instances beyond the caps are listed as skipped."""
    if name == "corpus":
        return run_corpus()
    fn, default = SUITES[name]
    todo, skipped = [], []
    for inst in instances if instances is not None else default():
        factors = inst[1].factors if isinstance(inst[1], TensorSpec) else [inst[1:]]
        try:
            caps.check(inst[0], factors)
        except CapExceeded:
            skipped.append(_label(inst[0], factors))
            continue
        todo.append((fn, (*inst, caps)))
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            reports = list(pool.map(_call, todo))
    else:
        reports = [_call(job) for job in todo]
    if not reports:
        kind = CONJECTURE if name in ("intertwine", "rmatrix", "phi-stats") else THEOREM
        rep = VerificationReport(name, kind)
    else:
        rep = merge_reports(reports)
    if skipped:
        rep.details["skipped"] = skipped
    return rep


SUITE_GROUPS: dict[str, list[str]] = {
    "phi-highest": ["phi-highest", "traces"],
    "stats": ["stats", "phi-stats"],
    "all": ["corpus", "iso", "stats", "roundtrips", "phi-highest", "traces", "phi-stats", "intertwine", "rmatrix"],
}


def run_suites(name: str, caps: Caps = DEFAULT_CAPS, jobs: int = 1) -> list[VerificationReport]:
    return [run_suite(s, caps, jobs=jobs) for s in SUITE_GROUPS.get(name, [name])]


def gating_ok(reports: Iterable[VerificationReport]) -> bool:
    return all(r.ok for r in reports if r.gating)
