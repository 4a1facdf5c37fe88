import json

import pytest

import grh


def test_presets_are_listed():
    presets = grh.list_presets()
    assert "grh" in presets
    assert "grhloc" in presets
    assert "aq" in presets


def test_normal_form_matches_the_group_law():
    assert grh.normal_form("grh", "alpha*b") == "b*alpha + h*b^2"
    assert grh.normal_form("grh", "h*h") == "0"
    assert grh.normal_form("grq", "alpha*b") == "(1/q)*b*alpha"


def test_parse_applies_no_relations():
    assert grh.parse_print("grh", "h*h") == "h^2"


def test_matrix_grids():
    rh = grh.matrix("R_h")
    assert rh[1] == ["-h", "-1", "0", "0"]
    rq1 = grh.matrix("R_q", at_q1=True)
    assert rq1[0][0] == "2"
    assert rq1[1][2] == "0"


def test_contraction_and_similarity_are_exposed():
    rules = grh.contracted_plane_relations("aq")
    assert any("x*xi" in r for r in rules)
    assert len(grh.similarity_relations()) >= 8


def test_verify_subset_passes():
    results = grh.verify(["eq16.rtt.grq", "eq27.contraction", "eq30.modified_ybe"])
    assert all(r["passed"] for r in results)
    notes = {r["name"]: r["convention_notes"] for r in results}
    assert "holds under" in notes["eq30.modified_ybe"]


def test_report_is_valid_json():
    report = json.loads(grh.verify_report_json(["eq20.rq_decomposition"]))
    assert report["schema"] == "grh-verify-report/1"
    assert report["summary"]["passed"] == 1


def test_report_matches_shipped_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import pathlib

    schema_path = pathlib.Path(__file__).resolve().parents[2] / "docs" / "report.schema.json"
    schema = json.loads(schema_path.read_text())
    report = json.loads(grh.verify_report_json(["eq30.modified_ybe", "eq19.qybe.rq"]))
    jsonschema.validate(report, schema)


def test_errors_surface_as_engine_error():
    with pytest.raises(grh.EngineError):
        grh.normal_form("nope", "alpha")
    with pytest.raises(grh.EngineError):
        grh.normal_form("grh", "alpha beta")
