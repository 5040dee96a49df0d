"""JSON and DOT encodings.

Schemas:
  partition      sorted integer array
  tensor spec    [[r, s], ...]
  rigged config  [[[length, rigging], ...] per node a = 1..n]; on input the
                 object {"n": n, "spec": [[r, s], ...], "nu": <that array>} is
                 also accepted
  tableau        row-major array of signed letters (negative = barred)
  spin row       {"spin": [[+-1, ...] per column]}
  KR element     {"r": r, "s": s, "tableau": <tableau or spin row>}
  tensor element array of tableaux
  diagram        {"r": r, "counts": {height: [c., c+, c-, c+-]}}
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .affine import KRElement, SpinRow
from .pm_diagrams import PMDiagram
from .rigged import RiggedConfiguration, TensorSpec
from .tableaux import CrystalGraph, KNTableau, KRTableau, Tableau, TensorElement


def spec_to_json(spec: TensorSpec) -> list[list[int]]:
    return [list(f) for f in spec.factors]


def spec_from_json(data: Any) -> TensorSpec:
    if isinstance(data, str):
        return TensorSpec.parse(data)
    return TensorSpec(tuple(tuple(f) for f in data))


def rc_to_json(rc: RiggedConfiguration) -> list:
    return [[list(s) for s in rc.strings(a)] for a in range(1, rc.n + 1)]


def rc_from_json(data: Any, spec: TensorSpec | None = None, n: int | None = None) -> RiggedConfiguration:
    if isinstance(data, dict):
        nu = data["nu"]
        spec = spec or spec_from_json(data["spec"])
        n = n or data.get("n", len(nu))
    else:
        nu = data
        n = n or len(nu)
    if spec is None:
        raise ValueError("a tensor spec is required")
    return RiggedConfiguration(n, spec, tuple(tuple((int(l), int(x)) for l, x in p) for p in nu))


def tableau_to_json(t: Tableau | SpinRow | KRElement) -> Any:
    if isinstance(t, KRElement):
        return tableau_to_json(t.tableau)
    if isinstance(t, SpinRow):
        return {"spin": [list(x) for x in t.letters]}
    return t.rows()


def tableau_from_json(data: Any, n: int, cls: type = KNTableau) -> Tableau | SpinRow:
    if isinstance(data, dict) and "tableau" in data:
        return tableau_from_json(data["tableau"], n, cls)
    if isinstance(data, dict) and "spin" in data:
        return SpinRow(tuple(tuple(x) for x in data["spin"]), n)
    return cls.from_rows(data, n)


def tensor_to_json(b: TensorElement) -> list:
    return [tableau_to_json(t) for t in b.factors]


def tensor_from_json(data: list, n: int) -> TensorElement:
    return TensorElement(tuple(KRTableau.from_rows(t, n) for t in data), n)


def diagram_to_json(P: PMDiagram) -> dict:
    return {"r": P.r, "counts": {str(h): list(c) for h, c in P.counts}}


def diagram_from_json(data: dict) -> PMDiagram:
    return PMDiagram.from_counts(int(data["r"]), {int(h): c for h, c in data["counts"].items()})


def to_json(obj: Any) -> Any:
    """Best-effort encoding of any library object."""
    if isinstance(obj, RiggedConfiguration):
        return rc_to_json(obj)
    if isinstance(obj, TensorElement):
        return tensor_to_json(obj)
    if isinstance(obj, (Tableau, SpinRow)):
        return tableau_to_json(obj)
    if isinstance(obj, KRElement):
        return {"r": obj.r, "s": obj.s, "tableau": tableau_to_json(obj.tableau)}
    if isinstance(obj, PMDiagram):
        return diagram_to_json(obj)
    if isinstance(obj, TensorSpec):
        return spec_to_json(obj)
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (int, float, str, bool)):
        return obj
    return str(obj)


def object_hash(obj: Any) -> str:
    blob = json.dumps(to_json(obj), sort_keys=True).encode()
    return hashlib.sha1(blob).hexdigest()[:12]


def graph_to_json(graph: CrystalGraph) -> dict:
    index = graph.index()
    return {
        "vertices": [to_json(v) for v in graph.vertices],
        "edges": [[index[u], i, index[v]] for u, i, v in graph.edges],
    }


def graph_to_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    for v in graph.vertices:
        label = str(v).replace('"', "'")
        lines.append(f'  "{object_hash(v)}" [label="{label}"];')
    for u, i, v in graph.edges:
        lines.append(f'  "{object_hash(u)}" -> "{object_hash(v)}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
