"""Worked examples with frozen expected outputs, replayable in one call.

Rigged configurations are written per node as (length, vacancy, rigging).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .affine import gamma_rc
from .bijection import delta, fill, fill_highest, phi
from .pm_diagrams import PMDiagram, frakS, gamma
from .rigged import RiggedConfiguration, TensorSpec, cocharge, kleber_rc, rc_e, rc_weight
from .tableaux import KNTableau, KRTableau, apply_f, apply_sequence, highest_tableau, to_highest

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class CorpusCase:
    ident: str
    anchor: str
    run: Callable[[], Any]
    expected: Any


@dataclass(frozen=True)
class CaseResult:
    ident: str
    anchor: str
    passed: bool
    got: Any
    expected: Any


def _rows(n: int, *rows: list[int]) -> KNTableau:
    return KNTableau.from_rows(rows, n)


def _kr(n: int, *rows: list[int]) -> KRTableau:
    return KRTableau.from_rows(rows, n)


def _triples(rc: RiggedConfiguration) -> list[list[Triple]]:
    return [[(l, rc.vacancy(a, l), x) for l, x in rc.strings(a)] for a in range(1, rc.n + 1)]


def _from_triples(n: int, spec: TensorSpec, data: list[list[Triple]]) -> RiggedConfiguration:
    return RiggedConfiguration(n, spec, tuple(tuple((l, x) for l, _, x in node) for node in data))


# --- plus-minus diagrams -------------------------------------------------------

GAMMA_DIAGRAM = PMDiagram.from_columns(3, [(".", 3), ("+-", 3), (".", 1)])
FRAKS_INPUT = PMDiagram.from_counts(3, {3: (1, 0, 0, 1), 1: (0, 2, 1, 0)})
FRAKS_FULL = PMDiagram.from_counts(5, {5: (0, 0, 0, 1), 1: (1, 1, 2, 0)})
FRAKS_RESTRICTED = PMDiagram.from_counts(3, {3: (1, 0, 0, 0), 1: (1, 1, 2, 0)})

# --- column atoms, B^{8,5} with n = 10 ------------------------------------------

ATOM_DIAGRAM = PMDiagram.from_columns(8, [("-", 6), ("+-", 6), (".", 4), ("+-", 2), (".", 0)])
ATOM_PARTS = [
    (6,), (6, 2), (6, 2, 2), (6, 2, 2, 2), (6, 2, 2, 2, 2), (5, 5, 2, 2, 2, 2),
    (5, 5, 5, 2, 2, 2, 2), (5, 5, 5, 5, 2, 2, 2, 2), (5, 5, 2, 2), (5, 5, 2, 2),
]
ATOM_RIGGINGS = [(-5,), (0, 0), (0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0, 0)] + [
    (0,) * len(p) for p in ATOM_PARTS[5:]
]

# --- e-chains on B^{4,3}, n = 6 ----------------------------------------------------

CHAIN_START = PMDiagram.from_rows(4, ["..+", ".+-", ".", "-"])
CHAIN_MID = PMDiagram.from_rows(4, ["..+", ".+-", "+", "-"])
CHAIN_END = PMDiagram.from_rows(4, ["..+", ".+-", ".", "+"])

_S = [(3, 0, 0), (1, 0, 0)]
_Q = [(3, 0, 0), (3, 0, 0), (1, 0, 0), (1, 0, 0)]
CHAIN_ONE: list[tuple[int | None, list[list[Triple]]]] = [
    (None, [[(3, -2, -3)], [(3, 0, 0), (1, 0, 0)], [(4, 0, 0), (1, 0, 0), (1, 0, 0)], _Q, _S, _S]),
    (1, [[(2, -1, -2)], [(3, -1, -1), (1, 0, 0)], [(4, 0, 0), (1, 0, 0), (1, 0, 0)], _Q, _S, _S]),
    (2, [[(2, -1, -2)], [(2, 0, 0), (1, 0, 0)], [(4, -1, -1), (1, 0, 0), (1, 0, 0)], _Q, _S, _S]),
    (3, [[(2, -1, -2)], [(2, 0, 0), (1, 0, 0)], [(3, 1, 0), (1, 0, 0), (1, 0, 0)], _Q, _S, _S]),
]
_N1 = [(1, 0, -1)]
_N2 = [(1, 0, 0), (1, 0, 0)]
_N3 = [(2, 0, 0), (1, 0, 0), (1, 0, 0)]
CHAIN_TWO: list[tuple[int, list[list[Triple]]]] = [
    (1, [_N1, [(2, -1, -1), (1, 0, 0)], [(3, 1, 0), (1, 0, 0), (1, 0, 0)], _Q, _S, _S]),
    (2, [_N1, _N2, [(3, 0, -1), (1, 0, 0), (1, 0, 0)], _Q, _S, _S]),
    (3, [_N1, _N2, _N3, [(3, -1, -1), (3, -1, -1), (1, 0, 0), (1, 0, 0)], _S, _S]),
    (4, [_N1, _N2, _N3, [(3, 1, 1), (2, 0, 0), (1, 0, 0), (1, 0, 0)], [(3, -1, -1), (1, 0, 0)], [(3, -1, -1), (1, 0, 0)]]),
    (5, [_N1, _N2, _N3, [(3, 0, 0), (2, 0, 0), (1, 0, 0), (1, 0, 0)], [(2, 0, 0), (1, 0, 0)], [(3, -1, -1), (1, 0, 0)]]),
    (6, [_N1, _N2, _N3, [(3, -1, -1), (2, 0, 0), (1, 0, 0), (1, 0, 0)], [(2, 0, 0), (1, 0, 0)], [(2, 0, 0), (1, 0, 0)]]),
    (4, [_N1, _N2, _N3, [(2, 0, 0), (2, 0, 0), (1, 0, 0), (1, 0, 0)], [(2, 0, 0), (1, 0, 0)], [(2, 0, 0), (1, 0, 0)]]),
]

# --- box removal on B^{2,2} B^{3,1} B^{2,1} B^{1,3} B^{1,1}^3, n = 5 ------------------

DELTA_SPEC = TensorSpec(((2, 2), (3, 1), (2, 1), (1, 3), (1, 1), (1, 1), (1, 1)))
DELTA_RC = [
    [(4, 1, 1), (1, 0, 0), (1, 0, 0), (1, 0, 0)],
    [(5, 0, -2), (2, 0, 0), (2, 0, -2), (1, 2, 2)],
    [(5, 0, 0), (3, 1, 1), (1, 1, 1), (1, 1, 1)],
    [(4, -1, -1), (1, 0, 0)],
    [(3, 0, 0), (1, 0, 0)],
]
DELTA_LETTERS = [-3, 2, -1, 1]
DELTA_FIRST_TRACE = ({2: 2, 3: 3, 4: 4, 5: 3}, {4: 4, 3: 5, 2: None})
DELTA_THIRD_TRACE = ({2: 1, 3: 1, 4: 1, 5: 1}, {4: 1, 3: 1, 2: 1, 1: 1})
DELTA_PHI = [
    [[2, 1], [-3, -1]], [[1], [3], [-2]], [[2], [4]], [[1, 5, -3]], [[3]], [[1]], [[3]],
]

# --- R-matrix pairs ------------------------------------------------------------------

RMATRIX = [
    {
        "n": 5,
        "parts": [(2,), (3, 1, 1), (2, 2, 1, 1), (2, 1), (2, 1)],
        "weight": (1, 1, 1, 0, 0),
        "orders": {
            ((2, 3), (3, 2)): [[[1, 1, -3], [2, 3, -1]], [[1, 1], [2, 2], [3, -2]]],
            ((3, 2), (2, 3)): [[[1, 1], [3, 3], [-3, -1]], [[1, 1, 1], [2, 2, -1]]],
        },
        "fills": [
            ((3, 2), [[1, 1], [2], [3]], [[1, 1], [2, 2], [3, -2]]),
            ((3, 2), [[1, 3], [3], [-3]], [[1, 1], [3, 3], [-3, -1]]),
        ],
    },
    {
        "n": 6,
        "parts": [(), (2, 1), (3, 1, 1), (3, 3, 1, 1), (3, 1), (3, 1)],
        "weight": (3, 2, 1, 0, 0, 0),
        "orders": {
            ((2, 3), (4, 3)): [[[1, 1, 1], [2, 3, -2]], [[1, 1, 1], [2, 2, 2], [-4, 3, 3], [-3, 4, -3]]],
            ((4, 3), (2, 3)): [[[1, 1, 1], [2, 4, 3], [4, -4, 4], [-4, -2, -4]], [[1, 1, 1], [2, 2, 2]]],
        },
        "fills": [((4, 3), [[1, 1, 1], [2, 2, 2], [3], [4]], [[1, 1, 1], [2, 2, 2], [3, -4, 3], [4, -3, 4]])],
    },
]


def _phi_rows(rc: RiggedConfiguration) -> list:
    return [t.rows() for t in phi(rc).factors]


def _delta_run() -> tuple[list[int], tuple, tuple]:
    rc = _from_triples(5, DELTA_SPEC, DELTA_RC)
    letters, traces = [], []
    for _ in range(4):
        rc, k, t = delta(rc)
        letters.append(k)
        traces.append(({a: v for a, v in t.ell.items()}, {a: v for a, v in t.ellbar.items()}))
    return letters, traces[0], traces[2]


def _chain(start: PMDiagram, steps, n: int = 6) -> list:
    rc = gamma_rc(start, n)
    out = []
    for i, _ in steps:
        if i is not None:
            rc = rc_e(i, rc)
        out.append(_triples(rc))
    return out


def cases() -> list[CorpusCase]:
    out = [
        CorpusCase(
            "gamma-lowering",
            "lowering string applied to u_(3,2,2), n=5",
            lambda: apply_sequence(apply_f, [3, 5, 4, 3, 2, 1, 3, 2, 1, 1], highest_tableau((3, 2, 2), 5)).rows(),
            [[1, 2, 2], [2, 3], [4, -1]],
        ),
        CorpusCase("gamma", "diagram . / +- / . of height 3, n=5", lambda: gamma(GAMMA_DIAGRAM, 5).rows(), [[1, 2, 2], [2, 3], [4, -1]]),
        CorpusCase("frakS-full", "sign swap without height restriction", lambda: frakS(FRAKS_INPUT, restricted=False), FRAKS_FULL),
        CorpusCase("frakS-restricted", "sign swap keeping c.(r)", lambda: frakS(FRAKS_INPUT), FRAKS_RESTRICTED),
        CorpusCase(
            "to-highest",
            "raising (2 1 / -3 -1) in B^{2,2}, n=5",
            lambda: (lambda r: (r[0], r[1].rows()))(to_highest(_kr(5, [2, 1], [-3, -1]), range(1, 6))),
            ([1, 3, 4, 5, 3, 2], [[1, 1], [2, -1]]),
        ),
        CorpusCase(
            "kleber",
            "highest weight RC of weight (3,3,1,1) in B^{6,4}, n=8",
            lambda: (
                [kleber_rc(6, 4, (3, 3, 1, 1), 8).partition(a) for a in range(1, 9)],
                rc_weight(kleber_rc(6, 4, (3, 3, 1, 1), 8)).coeffs,
                cocharge(kleber_rc(6, 4, (3, 3, 1, 1), 8)),
            ),
            (
                [(1,), (1, 1), (3, 1, 1), (3, 3, 1, 1), (4, 3, 3, 1, 1), (4, 4, 3, 3, 1, 1), (4, 3, 1), (4, 3, 1)],
                (0, 2, 0, 1, 0, 0, 0, 0),
                8,
            ),
        ),
        CorpusCase(
            "atoms",
            "column atoms of a five-column diagram in B^{8,5}, n=10",
            lambda: gamma_rc(ATOM_DIAGRAM, 10),
            RiggedConfiguration.from_partitions(10, TensorSpec.single(8, 5), ATOM_PARTS, ATOM_RIGGINGS),
        ),
        CorpusCase("e-chain-1", "e_1 e_2 e_3 from the atoms of a B^{4,3} diagram, n=6", lambda: _chain(CHAIN_START, CHAIN_ONE), [s for _, s in CHAIN_ONE]),
        CorpusCase("e-chain-1-end", "chain lands on the atoms of the next diagram", lambda: _chain(CHAIN_START, CHAIN_ONE)[-1], _triples(gamma_rc(CHAIN_MID, 6))),
        CorpusCase("e-chain-2", "e_1 ... e_6 e_4 continuing the chain", lambda: _chain(CHAIN_MID, CHAIN_TWO), [s for _, s in CHAIN_TWO]),
        CorpusCase("e-chain-2-end", "second chain lands on the atoms of the last diagram", lambda: _chain(CHAIN_MID, CHAIN_TWO)[-1], _triples(gamma_rc(CHAIN_END, 6))),
        CorpusCase("delta", "four box removals on a seven-factor RC, n=5", _delta_run, (DELTA_LETTERS, DELTA_FIRST_TRACE, DELTA_THIRD_TRACE)),
        CorpusCase("phi", "full bijection on the seven-factor RC", lambda: _phi_rows(_from_triples(5, DELTA_SPEC, DELTA_RC)), DELTA_PHI),
        CorpusCase("fill-b22", "fill of (2 / -3) in B^{2,2}, n=5", lambda: fill(_rows(5, [2], [-3]), 2, 2).rows(), [[2, 1], [-3, -1]]),
        CorpusCase("fill-b22-highest", "fill of u_(1,1) in B^{2,2}, n=5", lambda: fill_highest((1, 1), 2, 2, 5).rows(), [[1, 1], [2, -1]]),
    ]
    for k, ex in enumerate(RMATRIX):
        n = ex["n"]
        for order, expected in ex["orders"].items():
            rc = RiggedConfiguration.from_partitions(n, TensorSpec(order), ex["parts"])
            out.append(CorpusCase(f"rmatrix-{k}-{order}", f"R-matrix example {k + 1}, n={n}", lambda rc=rc: _phi_rows(rc), expected))
            out.append(CorpusCase(f"rmatrix-{k}-{order}-weight", "weight of the RC", lambda rc=rc: rc_weight(rc).coeffs, ex["weight"]))
        for j, ((r, s), kn, kr) in enumerate(ex["fills"]):
            out.append(CorpusCase(f"rmatrix-{k}-fill-{j}", "KN to KR conversion", lambda r=r, s=s, kn=kn: fill(_rows(n, *kn), r, s).rows(), kr))
    return out


def run_cases() -> list[CaseResult]:
    results = []
    for case in cases():
        try:
            got = case.run()
        except Exception as exc:  # a crash is a failed replay, reported like a mismatch
            got = f"{type(exc).__name__}: {exc}"
        results.append(CaseResult(case.ident, case.anchor, got == case.expected, got, case.expected))
    return results
