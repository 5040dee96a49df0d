import json

from krcrystal.affine import KRElement, SpinRow, kr_crystal, spin_highest
from krcrystal.pm_diagrams import PMDiagram
from krcrystal.rigged import TensorSpec, kleber_rc
from krcrystal.serialize import (
    diagram_from_json,
    diagram_to_json,
    graph_to_dot,
    graph_to_json,
    object_hash,
    rc_from_json,
    rc_to_json,
    spec_from_json,
    spec_to_json,
    tableau_from_json,
    tableau_to_json,
    tensor_from_json,
    tensor_to_json,
)
from krcrystal.tableaux import KNTableau, KRTableau, TensorElement


def _through_text(data):
    return json.loads(json.dumps(data))


def test_rigged_configuration_round_trip():
    rc = kleber_rc(2, 2, (1, 1), 5)
    data = _through_text(rc_to_json(rc))
    assert data == [[[1, 0]], [[1, 0], [1, 0]], [[1, 0], [1, 0]], [[1, 0]], [[1, 0]]]
    assert rc_from_json(data, rc.spec) == rc
    wrapped = {"n": 5, "spec": spec_to_json(rc.spec), "nu": data}
    assert rc_from_json(wrapped) == rc


def test_tableau_and_tensor_round_trip():
    t = KNTableau.from_rows([[1, 2, -3], [-3, -1]], 5)
    assert tableau_to_json(t) == [[1, 2, -3], [-3, -1]]
    assert tableau_from_json(_through_text(tableau_to_json(t)), 5) == t
    b = TensorElement((KRTableau.from_rows([[2, 1], [-3, -1]], 5), KRTableau.from_rows([[3]], 5)))
    assert tensor_from_json(_through_text(tensor_to_json(b)), 5) == b


def test_spin_row_round_trip():
    row = spin_highest(3, 2, 4)
    data = _through_text(tableau_to_json(KRElement(3, 2, row)))
    assert data == {"spin": [[1, 1, 1, -1], [1, 1, 1, -1]]}
    assert tableau_from_json(data, 4) == row
    assert isinstance(tableau_from_json(data, 4), SpinRow)


def test_diagram_and_spec_round_trip():
    P = PMDiagram.from_counts(3, {3: (1, 0, 0, 1), 1: (0, 2, 1, 0)})
    data = _through_text(diagram_to_json(P))
    assert data == {"r": 3, "counts": {"3": [1, 0, 0, 1], "1": [0, 2, 1, 0]}}
    assert diagram_from_json(data) == P
    spec = TensorSpec(((2, 2), (3, 1)))
    assert spec_to_json(spec) == [[2, 2], [3, 1]]
    assert spec_from_json([[2, 2], [3, 1]]) == spec_from_json("2,2;3,1") == spec


def test_graph_exports():
    g = kr_crystal(4, 1, 1)
    data = graph_to_json(g)
    assert len(data["vertices"]) == 8 and len(data["edges"]) == 8
    assert all(0 <= u < 8 and 1 <= i <= 4 and 0 <= v < 8 for u, i, v in data["edges"])
    dot = graph_to_dot(g)
    assert dot.startswith("digraph crystal {") and dot.count("->") == 8
    assert f'"{object_hash(g.vertices[0])}"' in dot


def test_hash_is_stable_and_discriminating():
    a = KNTableau.from_rows([[1]], 4)
    assert object_hash(a) == object_hash(KNTableau.from_rows([[1]], 4))
    assert object_hash(a) != object_hash(KNTableau.from_rows([[2]], 4))
